#pragma once

// Character n-gram F-score over whitespace-stripped, lowercased text.

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "editkit/errors.hpp"
#include "editkit/unicode.hpp"

namespace editkit {

struct ChrfParams {
  double beta = 2.0;
  int max_n = 6;
};

namespace detail {

inline std::u32string chrf_chars(std::string_view text) {
  std::u32string out;
  for (char32_t c : unicode::code_points(unicode::to_lower(text))) {
    if (!unicode::is_space(c)) out.push_back(c);
  }
  return out;
}

}  // namespace detail

// Precision and recall are averaged over the n-gram orders that the
// reference is long enough to have, then combined as F-beta.
inline double chrf(std::string_view hypothesis, std::string_view reference,
                   const ChrfParams& params = {}) {
  const std::u32string hyp = detail::chrf_chars(hypothesis);
  const std::u32string ref = detail::chrf_chars(reference);
  if (hyp.empty()) throw InputError("chrf: empty hypothesis");
  if (ref.empty()) throw InputError("chrf: empty reference");
  if (params.max_n < 1 || !(params.beta > 0.0)) {
    throw InputError("chrf: max_n must be >= 1 and beta > 0");
  }

  double precision_sum = 0.0;
  double recall_sum = 0.0;
  int orders = 0;
  for (int n = 1; n <= params.max_n; ++n) {
    const auto un = static_cast<std::size_t>(n);
    if (ref.size() < un) break;
    std::map<std::u32string_view, int> ref_counts;
    const std::u32string_view rv(ref);
    for (std::size_t i = 0; i + un <= rv.size(); ++i) ++ref_counts[rv.substr(i, un)];
    const std::size_t ref_total = rv.size() - un + 1;

    std::size_t hyp_total = 0;
    std::size_t matched = 0;
    if (hyp.size() >= un) {
      std::map<std::u32string_view, int> hyp_counts;
      const std::u32string_view hv(hyp);
      for (std::size_t i = 0; i + un <= hv.size(); ++i) ++hyp_counts[hv.substr(i, un)];
      hyp_total = hv.size() - un + 1;
      for (const auto& [gram, c] : hyp_counts) {
        auto it = ref_counts.find(gram);
        if (it != ref_counts.end()) {
          matched += static_cast<std::size_t>(std::min(c, it->second));
        }
      }
    }
    precision_sum += hyp_total ? static_cast<double>(matched) /
                                     static_cast<double>(hyp_total)
                               : 0.0;
    recall_sum += static_cast<double>(matched) / static_cast<double>(ref_total);
    ++orders;
  }

  const double p = precision_sum / orders;
  const double r = recall_sum / orders;
  const double b2 = params.beta * params.beta;
  const double denom = b2 * p + r;
  if (denom <= 0.0) return 0.0;
  return (1.0 + b2) * p * r / denom;
}

}  // namespace editkit
