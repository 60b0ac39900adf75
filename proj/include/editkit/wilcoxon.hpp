#pragma once

// Wilcoxon signed-rank test for paired samples, two-sided.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "editkit/errors.hpp"

namespace editkit {

enum class WilcoxonMethod { kAuto, kExact, kNormal };

struct WilcoxonResult {
  double statistic = 0.0;  // W+: sum of ranks of positive differences
  double p_value = 1.0;
  std::size_t n = 0;       // non-zero differences
  bool exact = false;
};

inline constexpr std::size_t kWilcoxonExactMaxN = 20;
inline constexpr std::size_t kWilcoxonMinN = 5;

namespace detail {

struct SignedRanks {
  std::vector<double> ranks;     // average ranks of |d|, ties share a rank
  std::vector<bool> positive;
  std::vector<std::size_t> tie_sizes;
};

inline SignedRanks signed_ranks(std::span<const double> diffs) {
  std::vector<std::size_t> order(diffs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::fabs(diffs[a]) < std::fabs(diffs[b]);
  });
  SignedRanks out;
  out.ranks.resize(diffs.size());
  out.positive.resize(diffs.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() &&
           std::fabs(diffs[order[j + 1]]) == std::fabs(diffs[order[i]])) {
      ++j;
    }
    const double avg = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) out.ranks[order[k]] = avg;
    out.tie_sizes.push_back(j - i + 1);
    i = j + 1;
  }
  for (std::size_t k = 0; k < diffs.size(); ++k) out.positive[k] = diffs[k] > 0.0;
  return out;
}

// Null distribution of W+ by dynamic programming over doubled (integer)
// ranks, so tied half-ranks are handled exactly.
inline double exact_p(const SignedRanks& sr, double w_plus) {
  std::vector<long> doubled;
  long total = 0;
  for (double r : sr.ranks) {
    doubled.push_back(std::lround(2.0 * r));
    total += doubled.back();
  }
  std::vector<double> counts(static_cast<std::size_t>(total) + 1, 0.0);
  counts[0] = 1.0;
  long reach = 0;
  for (long r : doubled) {
    for (long s = reach; s >= 0; --s) {
      if (counts[static_cast<std::size_t>(s)] != 0.0) {
        counts[static_cast<std::size_t>(s + r)] += counts[static_cast<std::size_t>(s)];
      }
    }
    reach += r;
  }
  const double all = std::ldexp(1.0, static_cast<int>(sr.ranks.size()));
  const long w2 = std::lround(2.0 * w_plus);
  double lower = 0.0;
  double upper = 0.0;
  for (long s = 0; s <= total; ++s) {
    const double c = counts[static_cast<std::size_t>(s)];
    if (s <= w2) lower += c;
    if (s >= w2) upper += c;
  }
  return std::min(1.0, 2.0 * std::min(lower, upper) / all);
}

// Normal approximation with tie and continuity corrections.
inline double normal_p(const SignedRanks& sr, double w_plus) {
  const double n = static_cast<double>(sr.ranks.size());
  const double mean = n * (n + 1.0) / 4.0;
  double var = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0;
  for (std::size_t t : sr.tie_sizes) {
    const double tt = static_cast<double>(t);
    var -= (tt * tt * tt - tt) / 48.0;
  }
  if (var <= 0.0) return 1.0;
  const double z = std::max(0.0, std::fabs(w_plus - mean) - 0.5) / std::sqrt(var);
  return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

}  // namespace detail

inline WilcoxonResult wilcoxon_signed_rank(std::span<const double> a,
                                           std::span<const double> b,
                                           WilcoxonMethod method = WilcoxonMethod::kAuto) {
  if (a.size() != b.size()) {
    throw InputError("wilcoxon: samples differ in length (" + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()) + ")");
  }
  std::vector<double> diffs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    if (d != 0.0) diffs.push_back(d);
  }
  if (diffs.empty()) throw InputError("wilcoxon: all differences are zero (no information)");
  if (diffs.size() < kWilcoxonMinN) {
    throw InputError("wilcoxon: need at least " + std::to_string(kWilcoxonMinN) +
                     " non-zero differences, got " + std::to_string(diffs.size()));
  }
  const auto sr = detail::signed_ranks(diffs);
  WilcoxonResult res;
  res.n = diffs.size();
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    if (sr.positive[i]) res.statistic += sr.ranks[i];
  }
  const bool exact = method == WilcoxonMethod::kExact ||
                     (method == WilcoxonMethod::kAuto && res.n <= kWilcoxonExactMaxN);
  res.exact = exact;
  res.p_value = exact ? detail::exact_p(sr, res.statistic)
                      : detail::normal_p(sr, res.statistic);
  return res;
}

inline WilcoxonResult wilcoxon_signed_rank(const std::vector<double>& a,
                                           const std::vector<double>& b,
                                           WilcoxonMethod method = WilcoxonMethod::kAuto) {
  return wilcoxon_signed_rank(std::span<const double>(a), std::span<const double>(b),
                              method);
}

}  // namespace editkit
