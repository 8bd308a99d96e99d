#include "ordseason/patterns.hpp"

#include "ordseason/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace ordseason {
namespace {

void check_order(int order) {
  if (order < kMinOrder || order > kMaxOrder) {
    throw InvalidInput("pattern order must be in [" + std::to_string(kMinOrder) + ", " +
                       std::to_string(kMaxOrder) + "], got " + std::to_string(order));
  }
}

// Sorts day indices by value. Insertion sort: windows hold at most kMaxOrder
// values and it keeps the ordering of equal keys explicit.
bool sort_days(std::span<const double> window, TieRule rule, std::array<int, kMaxOrder>& days) {
  const int n = static_cast<int>(window.size());
  std::iota(days.begin(), days.begin() + n, 0);
  for (int i = 1; i < n; ++i) {
    const int day = days[i];
    int j = i - 1;
    // EarlierLower: strict comparison keeps equal values in index order.
    // LaterLower: equal values move ahead of earlier indices.
    while (j >= 0 && (rule == TieRule::EarlierLower ? window[days[j]] > window[day]
                                                      : window[days[j]] >= window[day])) {
      days[j + 1] = days[j];
      --j;
    }
    days[j + 1] = day;
  }
  for (int i = 1; i < n; ++i) {
    if (window[days[i]] == window[days[i - 1]]) return true;
  }
  return false;
}

std::uint32_t lehmer_rank(std::span<const int> digits) {
  const int n = static_cast<int>(digits.size());
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    std::uint64_t smaller_later = 0;
    for (int j = i + 1; j < n; ++j) {
      if (digits[j] < digits[i]) ++smaller_later;
    }
    rank += smaller_later * factorial(n - 1 - i);
  }
  return static_cast<std::uint32_t>(rank + 1);
}

}  // namespace

std::uint64_t factorial(int n) {
  static constexpr std::array<std::uint64_t, 21> table = [] {
    std::array<std::uint64_t, 21> t{};
    t[0] = 1;
    for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * i;
    return t;
  }();
  if (n < 0 || n >= static_cast<int>(table.size())) {
    throw InvalidInput("factorial argument out of range: " + std::to_string(n));
  }
  return table[static_cast<std::size_t>(n)];
}

OrdinalPattern OrdinalPattern::from_digits(std::span<const int> digits) {
  const int n = static_cast<int>(digits.size());
  check_order(n);
  std::array<bool, kMaxOrder> seen{};
  OrdinalPattern p;
  p.order_ = static_cast<std::uint8_t>(n);
  for (int j = 0; j < n; ++j) {
    const int d = digits[j];
    if (d < 0 || d >= n || seen[d]) {
      throw InvalidInput("pattern digits must be a permutation of 0.." + std::to_string(n - 1));
    }
    seen[d] = true;
    p.digits_[j] = static_cast<std::uint8_t>(d);
  }
  return p;
}

OrdinalPattern OrdinalPattern::parse(std::string_view text) {
  std::vector<int> digits;
  digits.reserve(text.size());
  for (char c : text) {
    if (c < '0' || c > '9') throw InvalidInput("not a pattern string: '" + std::string(text) + "'");
    digits.push_back(c - '0');
  }
  return from_digits(digits);
}

std::string OrdinalPattern::to_string() const {
  std::string s;
  s.reserve(order_);
  for (int j = 0; j < order_; ++j) s.push_back(static_cast<char>('0' + digits_[j]));
  return s;
}

EncodedWindow encode_window(std::span<const double> window, TieRule rule) {
  if (window.size() < static_cast<std::size_t>(kMinOrder) ||
      window.size() > static_cast<std::size_t>(kMaxOrder)) {
    throw InvalidInput("window length must be in [2, " + std::to_string(kMaxOrder) + "], got " +
                       std::to_string(window.size()));
  }
  for (double v : window) {
    if (!std::isfinite(v)) throw InvalidInput("window holds a non-finite value");
  }
  std::array<int, kMaxOrder> days{};
  const bool tied = sort_days(window, rule, days);
  return {OrdinalPattern::from_digits(std::span<const int>(days.data(), window.size())), tied};
}

PatternId rank_pattern(const OrdinalPattern& pattern) {
  std::array<int, kMaxOrder> digits{};
  const auto d = pattern.digits();
  std::copy(d.begin(), d.end(), digits.begin());
  return {lehmer_rank(std::span<const int>(digits.data(), d.size()))};
}

OrdinalPattern unrank_pattern(PatternId id, int order) {
  check_order(order);
  const std::uint64_t total = factorial(order);
  if (id.value < 1 || id.value > total) {
    throw InvalidInput("pattern id " + std::to_string(id.value) + " outside [1, " +
                       std::to_string(total) + "]");
  }
  std::uint64_t rest = id.value - 1;
  std::vector<int> pool(static_cast<std::size_t>(order));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> digits;
  digits.reserve(pool.size());
  for (int i = order - 1; i >= 0; --i) {
    const std::uint64_t f = factorial(i);
    const auto pick = static_cast<std::size_t>(rest / f);
    rest %= f;
    digits.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return OrdinalPattern::from_digits(digits);
}

PatternDistribution::PatternDistribution(int order) : order_(order) {
  check_order(order);
  counts_.assign(factorial(order), 0);
}

PatternDistribution PatternDistribution::from_counts(int order, std::vector<std::uint64_t> counts,
                                                     std::uint64_t tied_windows) {
  PatternDistribution dist(order);
  if (counts.size() != dist.counts_.size()) {
    throw InvalidInput("expected " + std::to_string(dist.counts_.size()) + " pattern counts, got " +
                       std::to_string(counts.size()));
  }
  dist.windows_ = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  if (tied_windows > dist.windows_) throw InvalidInput("more tied windows than windows");
  dist.counts_ = std::move(counts);
  dist.tied_windows_ = tied_windows;
  return dist;
}

double PatternDistribution::tie_fraction() const noexcept {
  return windows_ == 0 ? 0.0 : static_cast<double>(tied_windows_) / static_cast<double>(windows_);
}

void PatternDistribution::add(PatternId id, bool tied) {
  ++counts_.at(id.index());
  ++windows_;
  if (tied) ++tied_windows_;
}

void PatternDistribution::merge(const PatternDistribution& other) {
  if (other.order_ != order_) throw InvalidInput("cannot merge distributions of different order");
  for (std::size_t k = 0; k < counts_.size(); ++k) counts_[k] += other.counts_[k];
  windows_ += other.windows_;
  tied_windows_ += other.tied_windows_;
  discarded_tail_ += other.discarded_tail_;
}

PatternDistribution count_patterns(std::span<const double> series, const CountOptions& options) {
  check_order(options.order);
  const auto order = static_cast<std::size_t>(options.order);
  if (options.stride < 0) throw InvalidInput("stride must be positive");
  const auto stride = static_cast<std::size_t>(options.effective_stride());
  if (series.size() < order) {
    throw InvalidInput("series of length " + std::to_string(series.size()) +
                       " is shorter than the pattern order " + std::to_string(order));
  }
  for (double v : series) {
    if (!std::isfinite(v)) throw InvalidInput("series holds a non-finite value");
  }

  PatternDistribution dist(options.order);
  const std::size_t windows = (series.size() - order) / stride + 1;
  std::array<int, kMaxOrder> days{};
  for (std::size_t w = 0; w < windows; ++w) {
    const auto window = series.subspan(w * stride, order);
    const bool tied = sort_days(window, options.tie_rule, days);
    dist.add({lehmer_rank(std::span<const int>(days.data(), order))}, tied);
  }
  dist.set_discarded_tail(series.size() - ((windows - 1) * stride + order));
  return dist;
}

std::vector<PatternId> pattern_family(PatternFamily family, int order) {
  check_order(order);
  if (order < 3) throw InvalidInput("pattern families need order >= 3");
  std::vector<PatternId> ids;
  const auto total = static_cast<std::uint32_t>(factorial(order));
  const int last = order - 1;
  for (std::uint32_t v = 1; v <= total; ++v) {
    const OrdinalPattern p = unrank_pattern({v}, order);
    const bool member = family == PatternFamily::MondayLargest
                            ? p[last] == 0
                            : (p[0] == 0 && p[last] == last);
    if (member) ids.push_back({v});
  }
  return ids;
}

std::string_view to_string(PatternFamily family) {
  switch (family) {
    case PatternFamily::MondayLargest: return "monday-largest";
    case PatternFamily::MondayWorstFridayBest: return "monday-worst-friday-best";
  }
  return "unknown";
}

std::string_view to_string(TieRule rule) {
  switch (rule) {
    case TieRule::EarlierLower: return "earlier-lower";
    case TieRule::LaterLower: return "later-lower";
  }
  return "unknown";
}

}  // namespace ordseason
