#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ordseason {

inline constexpr int kMinOrder = 2;
inline constexpr int kMaxOrder = 10;
inline constexpr int kDefaultOrder = 5;
inline constexpr double kDefaultTieWarningFraction = 0.01;

// How equal values inside a window are ordered. EarlierLower is the usual
// stable convention: the earlier day takes the lower rank position.
enum class TieRule { EarlierLower, LaterLower };

std::uint64_t factorial(int n);

// digits[j] is the day index (0 = first day of the window) holding the j-th
// smallest value. Always a permutation of {0..order-1}.
class OrdinalPattern {
 public:
  // Throws InvalidInput unless digits is a permutation of {0..n-1}, 2 <= n <= kMaxOrder.
  static OrdinalPattern from_digits(std::span<const int> digits);
  // Parses "04132".
  static OrdinalPattern parse(std::string_view text);

  int order() const noexcept { return order_; }
  int operator[](int position) const noexcept { return digits_[static_cast<std::size_t>(position)]; }
  std::span<const std::uint8_t> digits() const noexcept {
    return {digits_.data(), static_cast<std::size_t>(order_)};
  }
  std::string to_string() const;

  bool operator==(const OrdinalPattern&) const = default;

 private:
  std::array<std::uint8_t, kMaxOrder> digits_{};
  std::uint8_t order_ = 0;
};

// 1-based lexicographic rank of a pattern's digit string.
struct PatternId {
  std::uint32_t value = 0;

  std::size_t index() const noexcept { return value - 1; }
  auto operator<=>(const PatternId&) const = default;
};

struct EncodedWindow {
  OrdinalPattern pattern;
  bool tied = false;
};

// Throws InvalidInput for windows shorter than 2, longer than kMaxOrder, or
// holding non-finite values.
EncodedWindow encode_window(std::span<const double> window, TieRule rule = TieRule::EarlierLower);

PatternId rank_pattern(const OrdinalPattern& pattern);
OrdinalPattern unrank_pattern(PatternId id, int order);

// Absolute frequency of every pattern of one order.
class PatternDistribution {
 public:
  explicit PatternDistribution(int order = kDefaultOrder);
  static PatternDistribution from_counts(int order, std::vector<std::uint64_t> counts,
                                         std::uint64_t tied_windows = 0);

  int order() const noexcept { return order_; }
  std::size_t pattern_count() const noexcept { return counts_.size(); }
  std::span<const std::uint64_t> counts() const noexcept { return counts_; }
  std::uint64_t count(PatternId id) const { return counts_.at(id.index()); }
  std::uint64_t windows() const noexcept { return windows_; }

  // Windows in which at least two values were equal.
  std::uint64_t tied_windows() const noexcept { return tied_windows_; }
  double tie_fraction() const noexcept;
  bool ties_exceed(double fraction = kDefaultTieWarningFraction) const noexcept {
    return tie_fraction() > fraction;
  }

  // Input values that did not fill a complete trailing window.
  std::size_t discarded_tail() const noexcept { return discarded_tail_; }
  void set_discarded_tail(std::size_t n) noexcept { discarded_tail_ = n; }

  void add(PatternId id, bool tied = false);
  // Counts are additive; merging partial distributions from disjoint ranges
  // gives the distribution of the union.
  void merge(const PatternDistribution& other);

  bool operator==(const PatternDistribution&) const = default;

 private:
  int order_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t windows_ = 0;
  std::uint64_t tied_windows_ = 0;
  std::size_t discarded_tail_ = 0;
};

struct CountOptions {
  int order = kDefaultOrder;
  // 0 means stride == order (non-overlapping weeks).
  int stride = 0;
  TieRule tie_rule = TieRule::EarlierLower;

  int effective_stride() const noexcept { return stride == 0 ? order : stride; }
};

// Windows start at the first value and advance by stride; an incomplete
// trailing window is dropped and reported through discarded_tail().
PatternDistribution count_patterns(std::span<const double> series, const CountOptions& options = {});

enum class PatternFamily {
  MondayLargest,          // first day holds the largest value: last digit 0
  MondayWorstFridayBest,  // first digit 0, last digit order-1
};

// Sorted ascending. Throws InvalidInput for order < 3.
std::vector<PatternId> pattern_family(PatternFamily family, int order);

std::string_view to_string(PatternFamily family);
std::string_view to_string(TieRule rule);

}  // namespace ordseason
