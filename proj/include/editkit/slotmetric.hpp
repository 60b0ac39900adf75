#pragma once

// Slot preservation: the fraction of source slots that survive in a
// hypothesis, with ChrF weights for approximate matches.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "editkit/chrf.hpp"
#include "editkit/corpus.hpp"
#include "editkit/errors.hpp"
#include "editkit/jsonl.hpp"
#include "editkit/textnorm.hpp"
#include "editkit/unicode.hpp"

namespace editkit {

enum class MatchKind { kExactOriginal, kExactNormalized, kApprox, kMiss };

inline constexpr std::string_view to_string(MatchKind k) {
  switch (k) {
    case MatchKind::kExactOriginal: return "EXACT_ORIGINAL";
    case MatchKind::kExactNormalized: return "EXACT_NORMALIZED";
    case MatchKind::kApprox: return "APPROX";
    case MatchKind::kMiss: return "MISS";
  }
  return "?";
}

// Hypothesis token range [begin, end) and its text.
struct TokenSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string text;

  friend bool operator==(const TokenSpan&, const TokenSpan&) = default;
};

struct SlotMatch {
  std::string slot;
  MatchKind kind = MatchKind::kMiss;
  double weight = 0.0;
  std::optional<TokenSpan> matched_span;
};

struct SlotScore {
  double value = 1.0;
  std::vector<SlotMatch> matches;
};

struct SlotMetricConfig {
  ChrfParams chrf;
  double approx_floor = 0.1;
};

namespace detail {

class SpanClaims {
 public:
  explicit SpanClaims(std::size_t n) : taken_(n, false) {}

  bool free(std::size_t b, std::size_t e) const {
    for (std::size_t i = b; i < e; ++i) {
      if (taken_[i]) return false;
    }
    return true;
  }
  void claim(std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) taken_[i] = true;
  }

 private:
  std::vector<bool> taken_;
};

inline std::string span_text(const std::vector<std::string>& toks,
                             std::size_t b, std::size_t e) {
  return join(std::vector<std::string>(toks.begin() + static_cast<long>(b),
                                       toks.begin() + static_cast<long>(e)));
}

}  // namespace detail

// Matching runs in three passes over the slots (in slot order each time):
// case-insensitive exact, exact after normalization, then best ChrF n-gram
// with n in [1, slot_tokens + 2]. A hypothesis token is claimed by at most
// one slot; ties go to the leftmost, then shortest, span.
inline SlotScore slot_score(const Sentence& hypothesis, const SlotSet& slots,
                            const NormTables& tables,
                            const SlotMetricConfig& config = {}) {
  SlotScore score;
  if (slots.empty()) return score;

  const std::vector<std::string> hyp = hypothesis.texts();
  const std::size_t n = hyp.size();
  std::vector<std::string> hyp_lower;
  hyp_lower.reserve(n);
  for (const auto& t : hyp) hyp_lower.push_back(unicode::to_lower(t));
  const std::vector<NormToken> hyp_norm = normalize_with_spans(hyp, tables);

  detail::SpanClaims claims(n);
  score.matches.resize(slots.size());
  std::vector<std::vector<std::string>> slot_tokens;
  for (std::size_t s = 0; s < slots.size(); ++s) {
    score.matches[s].slot = slots.slots[s];
    slot_tokens.push_back(tokenize(slots.slots[s]).texts());
  }

  auto record = [&](std::size_t s, MatchKind kind, double weight,
                    std::size_t b, std::size_t e) {
    claims.claim(b, e);
    score.matches[s].kind = kind;
    score.matches[s].weight = weight;
    score.matches[s].matched_span = TokenSpan{b, e, detail::span_text(hyp, b, e)};
  };
  auto unresolved = [&](std::size_t s) {
    return score.matches[s].kind == MatchKind::kMiss && !slot_tokens[s].empty();
  };

  for (std::size_t s = 0; s < slots.size(); ++s) {
    const auto& toks = slot_tokens[s];
    const std::size_t len = toks.size();
    if (len == 0 || len > n) continue;
    std::vector<std::string> lower;
    for (const auto& t : toks) lower.push_back(unicode::to_lower(t));
    for (std::size_t b = 0; b + len <= n; ++b) {
      if (std::equal(lower.begin(), lower.end(), hyp_lower.begin() + static_cast<long>(b)) &&
          claims.free(b, b + len)) {
        record(s, MatchKind::kExactOriginal, 1.0, b, b + len);
        break;
      }
    }
  }

  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (!unresolved(s)) continue;
    const std::vector<std::string> norm = normalize_tokens(slot_tokens[s], tables);
    const std::size_t len = norm.size();
    if (len == 0 || len > hyp_norm.size()) continue;
    for (std::size_t k = 0; k + len <= hyp_norm.size(); ++k) {
      bool same = true;
      for (std::size_t q = 0; q < len && same; ++q) same = hyp_norm[k + q].text == norm[q];
      if (!same) continue;
      const std::size_t b = hyp_norm[k].begin;
      const std::size_t e = hyp_norm[k + len - 1].end;
      if (claims.free(b, e)) {
        record(s, MatchKind::kExactNormalized, 1.0, b, e);
        break;
      }
    }
  }

  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (!unresolved(s)) continue;
    const std::size_t max_len = slot_tokens[s].size() + 2;
    double best = -1.0;
    std::size_t best_b = 0;
    std::size_t best_e = 0;
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t len = 1; len <= max_len && b + len <= n; ++len) {
        if (!claims.free(b, b + len)) break;
        const double w = chrf(detail::span_text(hyp, b, b + len),
                              slots.slots[s], config.chrf);
        if (w > best) {
          best = w;
          best_b = b;
          best_e = b + len;
        }
      }
    }
    if (best >= 1.0) {
      // Equal up to case and whitespace ("Delhi,India" vs "Delhi , India").
      record(s, MatchKind::kExactNormalized, 1.0, best_b, best_e);
    } else if (best >= config.approx_floor && best > 0.0) {
      record(s, MatchKind::kApprox, best, best_b, best_e);
    }
  }

  double total = 0.0;
  for (const auto& m : score.matches) total += m.weight;
  score.value = total / static_cast<double>(slots.size());
  return score;
}

inline SlotScore slot_score(std::string_view hypothesis, const SlotSet& slots,
                            const NormTables& tables,
                            const SlotMetricConfig& config = {}) {
  return slot_score(tokenize(hypothesis), slots, tables, config);
}

// Scores each pair's slots against the system hypothesis with the same id.
inline std::map<std::string, SlotScore> corpus_slot_scores(
    const std::vector<ParallelPair>& pairs,
    const std::map<std::string, std::string>& hypotheses,
    const NormTables& tables, const SlotMetricConfig& config = {}) {
  std::vector<std::string> missing;
  for (const auto& p : pairs) {
    if (!hypotheses.count(p.id)) missing.push_back(p.id);
  }
  if (!missing.empty()) {
    std::string msg = "no hypothesis for " + std::to_string(missing.size()) +
                      " id(s):";
    for (std::size_t i = 0; i < missing.size() && i < 20; ++i) {
      msg += " " + missing[i];
    }
    throw InputError(msg);
  }
  std::map<std::string, SlotScore> out;
  for (const auto& p : pairs) {
    out.emplace(p.id, slot_score(hypotheses.at(p.id), p.slots, tables, config));
  }
  return out;
}

inline jsonl::Json to_json(const std::string& id, const SlotScore& score) {
  jsonl::Json matches = jsonl::Json::array();
  for (const auto& m : score.matches) {
    matches.push_back({{"slot", m.slot},
                       {"kind", std::string(to_string(m.kind))},
                       {"weight", m.weight}});
  }
  return {{"id", id}, {"slot_score", score.value}, {"matches", matches}};
}

}  // namespace editkit
