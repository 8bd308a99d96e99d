#pragma once

#include <string_view>

namespace ordseason::log {

enum class Level { Trace, Debug, Info, Warn, Error, Off };

// Verbosity comes from ORDINAL_SEASONALITY_LOG (trace|debug|info|warn|error|off),
// read once on first use. Default is warn. Messages go to stderr.
Level level();
void set_level(Level level);

void debug(std::string_view message);
void info(std::string_view message);
void warn(std::string_view message);
void error(std::string_view message);

}  // namespace ordseason::log
