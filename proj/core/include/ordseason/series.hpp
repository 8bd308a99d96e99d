#pragma once

#include <chrono>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace ordseason {

using Date = std::chrono::sys_days;

// Ordered daily values (returns or, before log_returns, prices). dates is
// either empty or the same length as values and strictly increasing.
struct ReturnSeries {
  std::vector<double> values;
  std::vector<Date> dates;
  std::string label;

  std::size_t size() const noexcept { return values.size(); }
  bool empty() const noexcept { return values.empty(); }
  bool has_dates() const noexcept { return !dates.empty(); }
  std::span<const double> view() const noexcept { return values; }

  // Throws InvalidInput / OrderError when an invariant is broken.
  void validate() const;

  bool operator==(const ReturnSeries&) const = default;
};

std::string format_date(Date date);

}  // namespace ordseason
