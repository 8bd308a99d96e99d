#include "ordseason/log.hpp"

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <memory>
#include <string>

namespace ordseason::log {
namespace {

constexpr const char* kEnvVar = "ORDINAL_SEASONALITY_LOG";

spdlog::level::level_enum to_spdlog(Level level) {
  switch (level) {
    case Level::Trace: return spdlog::level::trace;
    case Level::Debug: return spdlog::level::debug;
    case Level::Info: return spdlog::level::info;
    case Level::Warn: return spdlog::level::warn;
    case Level::Error: return spdlog::level::err;
    case Level::Off: return spdlog::level::off;
  }
  return spdlog::level::warn;
}

Level from_env() {
  const char* raw = std::getenv(kEnvVar);
  if (raw == nullptr) return Level::Warn;
  const std::string value(raw);
  if (value == "trace") return Level::Trace;
  if (value == "debug") return Level::Debug;
  if (value == "info") return Level::Info;
  if (value == "warn" || value == "warning") return Level::Warn;
  if (value == "error") return Level::Error;
  if (value == "off" || value == "none") return Level::Off;
  return Level::Warn;
}

struct State {
  std::shared_ptr<spdlog::logger> logger;
  Level level;

  State() : logger(spdlog::stderr_color_mt("ordseason")), level(from_env()) {
    logger->set_pattern("ordseason: %l: %v");
    logger->set_level(to_spdlog(level));
  }
};

State& state() {
  static State s;
  return s;
}

}  // namespace

Level level() { return state().level; }

void set_level(Level level) {
  state().level = level;
  state().logger->set_level(to_spdlog(level));
}

void debug(std::string_view message) { state().logger->debug(message); }
void info(std::string_view message) { state().logger->info(message); }
void warn(std::string_view message) { state().logger->warn(message); }
void error(std::string_view message) { state().logger->error(message); }

}  // namespace ordseason::log
