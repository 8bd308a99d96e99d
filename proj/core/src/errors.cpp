#include "ordseason/errors.hpp"

namespace ordseason {

SchemaError::SchemaError(const std::string& what, std::size_t row)
    : Error(row == 0 ? what : "row " + std::to_string(row) + ": " + what), row_(row) {}

RejectedRow::RejectedRow(const std::string& what, std::size_t row)
    : Error("row " + std::to_string(row) + ": " + what), row_(row) {}

}  // namespace ordseason
