#pragma once

// Gap-infilling templates: kept source tokens interleaved with numbered gaps.
// Built from edit labels (tag mode), from slots (constr mode) or from both
// (constr-tag mode); turned into infiller training examples and filled from
// infiller output.

#include <cstddef>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "editkit/corpus.hpp"
#include "editkit/default_tables.hpp"
#include "editkit/editalign.hpp"
#include "editkit/errors.hpp"
#include "editkit/jsonl.hpp"
#include "editkit/slotmetric.hpp"
#include "editkit/textnorm.hpp"
#include "editkit/unicode.hpp"

namespace editkit {

struct KeepRun {
  std::vector<std::string> tokens;
  // Index of the first token in the source sentence, when known. Parsed
  // templates carry no positions.
  std::optional<std::size_t> source_begin;

  friend bool operator==(const KeepRun& a, const KeepRun& b) {
    return a.tokens == b.tokens;
  }
};

struct Gap {
  std::size_t index = 0;
  friend bool operator==(const Gap&, const Gap&) = default;
};

using Segment = std::variant<KeepRun, Gap>;

struct Template {
  std::vector<Segment> segments;
  std::size_t gap_count = 0;

  std::set<std::size_t> kept_positions() const {
    std::set<std::size_t> out;
    for (const auto& seg : segments) {
      if (const auto* run = std::get_if<KeepRun>(&seg); run && run->source_begin) {
        for (std::size_t i = 0; i < run->tokens.size(); ++i) {
          out.insert(*run->source_begin + i);
        }
      }
    }
    return out;
  }

  friend bool operator==(const Template&, const Template&) = default;
};

struct InfillExample {
  std::string input_text;
  std::string target_text;
};

enum class SentinelStyle { kGap, kT5 };

inline std::string sentinel(std::size_t k, SentinelStyle style = SentinelStyle::kGap) {
  return style == SentinelStyle::kGap ? "<gap_" + std::to_string(k) + ">"
                                      : "<extra_id_" + std::to_string(k) + ">";
}

inline constexpr std::string_view kTemplateSeparator = " | ";

namespace detail {

inline const std::regex& sentinel_regex() {
  static const std::regex re(R"(<(?:gap|extra_id)_(\d+)>)");
  return re;
}

inline std::optional<std::size_t> parse_sentinel(const std::string& tok) {
  std::smatch m;
  if (std::regex_match(tok, m, sentinel_regex())) return std::stoul(m[1].str());
  return std::nullopt;
}

// keep[i]: source token i is preserved. cut[g]: a gap is required at
// boundary g (before token g) even between kept tokens.
inline Template build_template(const std::vector<std::string>& source,
                               const std::vector<bool>& keep,
                               const std::vector<bool>& cut) {
  Template t;
  bool pending_gap = false;
  auto flush_gap = [&] {
    if (pending_gap) {
      t.segments.emplace_back(Gap{t.gap_count++});
      pending_gap = false;
    }
  };
  for (std::size_t g = 0; g <= source.size(); ++g) {
    if (cut[g]) pending_gap = true;
    if (g == source.size()) break;
    if (!keep[g]) {
      pending_gap = true;
      continue;
    }
    flush_gap();
    KeepRun* run = t.segments.empty() ? nullptr : std::get_if<KeepRun>(&t.segments.back());
    if (!run) {
      t.segments.emplace_back(KeepRun{{}, g});
      run = &std::get<KeepRun>(t.segments.back());
    }
    run->tokens.push_back(source[g]);
  }
  if (t.segments.empty()) pending_gap = true;
  flush_gap();
  return t;
}

inline void label_masks(const TaggerExample& labels, std::vector<bool>& keep,
                        std::vector<bool>& cut) {
  const std::size_t n = labels.labels.size();
  keep.assign(n, false);
  cut.assign(n + 1, false);
  cut[0] = labels.bos_label == EditTag::kInsert;
  for (std::size_t i = 0; i < n; ++i) {
    const EditTag t = labels.labels[i];
    keep[i] = t == EditTag::kEqual || t == EditTag::kInsert;
    if (t == EditTag::kInsert) cut[i + 1] = true;
  }
}

struct SlotSpan {
  std::size_t begin;
  std::size_t end;
};

inline std::vector<SlotSpan> locate_slots(const Sentence& source,
                                          const SlotSet& slots,
                                          const NormTables& tables) {
  const SlotScore located = slot_score(source, slots, tables);
  std::vector<std::string> missing;
  std::vector<SlotSpan> spans;
  for (const auto& m : located.matches) {
    if ((m.kind == MatchKind::kExactOriginal ||
         m.kind == MatchKind::kExactNormalized) && m.matched_span) {
      spans.push_back({m.matched_span->begin, m.matched_span->end});
    } else {
      missing.push_back(m.slot);
    }
  }
  if (!missing.empty()) {
    std::string msg = "slot(s) not found in source \"" + source.raw + "\":";
    for (const auto& s : missing) msg += " \"" + s + "\"";
    throw InputError(msg);
  }
  return spans;
}

}  // namespace detail

inline std::string serialize(const Template& t,
                             SentinelStyle style = SentinelStyle::kGap) {
  std::vector<std::string> parts;
  for (const auto& seg : t.segments) {
    if (const auto* run = std::get_if<KeepRun>(&seg)) {
      parts.insert(parts.end(), run->tokens.begin(), run->tokens.end());
    } else {
      parts.push_back(sentinel(std::get<Gap>(seg).index, style));
    }
  }
  return join(parts);
}

inline Template parse_template(std::string_view text) {
  Template t;
  for (const auto& tok : detail::split_words(text)) {
    if (auto k = detail::parse_sentinel(tok)) {
      if (*k != t.gap_count) {
        throw InputError("template gap " + tok + " out of order (expected " +
                         sentinel(t.gap_count) + ")");
      }
      if (!t.segments.empty() && std::holds_alternative<Gap>(t.segments.back())) {
        throw InputError("template has adjacent gaps at " + tok);
      }
      t.segments.emplace_back(Gap{t.gap_count++});
      continue;
    }
    KeepRun* run = t.segments.empty() ? nullptr : std::get_if<KeepRun>(&t.segments.back());
    if (!run) {
      t.segments.emplace_back(KeepRun{});
      run = &std::get<KeepRun>(t.segments.back());
    }
    run->tokens.push_back(tok);
  }
  if (t.segments.empty()) throw InputError("empty template");
  return t;
}

// Tag mode: EQUAL tokens are kept; every maximal region of edited tokens
// and/or insertion points becomes one gap.
inline Template template_from_tags(const std::vector<std::string>& source,
                                   const TaggerExample& labels) {
  if (labels.labels.size() != source.size()) {
    throw InputError("label count " + std::to_string(labels.labels.size()) +
                     " differs from token count " + std::to_string(source.size()));
  }
  std::vector<bool> keep, cut;
  detail::label_masks(labels, keep, cut);
  return detail::build_template(source, keep, cut);
}

inline Template template_from_tags(const Sentence& source,
                                   const TaggerExample& labels) {
  return template_from_tags(source.texts(), labels);
}

inline Template template_from_tags(const Sentence& source,
                                   const EditAlignment& alignment) {
  return template_from_tags(source, to_tagger_example(alignment, source));
}

// Constr mode: GAP slot GAP slot ... GAP, slots in source order.
inline Template template_from_slots(const Sentence& source, const SlotSet& slots,
                                    const NormTables& tables = default_tables()) {
  const std::size_t n = source.size();
  std::vector<bool> keep(n, false);
  std::vector<bool> cut(n + 1, false);
  if (slots.empty()) cut[0] = true;
  for (const auto& span : detail::locate_slots(source, slots, tables)) {
    for (std::size_t i = span.begin; i < span.end; ++i) keep[i] = true;
    cut[span.begin] = true;
    cut[span.end] = true;
  }
  return detail::build_template(source.texts(), keep, cut);
}

// Constr-tag mode: kept = slot tokens + EQUAL-labelled tokens.
inline Template template_union(const Sentence& source, const SlotSet& slots,
                               const TaggerExample& labels,
                               const NormTables& tables = default_tables()) {
  if (labels.labels.size() != source.size()) {
    throw InputError("label count " + std::to_string(labels.labels.size()) +
                     " differs from token count " + std::to_string(source.size()));
  }
  std::vector<bool> keep, cut;
  detail::label_masks(labels, keep, cut);
  for (const auto& span : detail::locate_slots(source, slots, tables)) {
    for (std::size_t i = span.begin; i < span.end; ++i) keep[i] = true;
  }
  return detail::build_template(source.texts(), keep, cut);
}

namespace detail {

// Finds where each kept run sits in the source. Uses recorded positions when
// present, otherwise the leftmost consistent embedding.
inline std::vector<std::size_t> run_positions(const Template& t,
                                              const std::vector<std::string>& source) {
  std::vector<std::size_t> pos;
  std::size_t cursor = 0;
  for (const auto& seg : t.segments) {
    const auto* run = std::get_if<KeepRun>(&seg);
    if (!run) continue;
    std::optional<std::size_t> at;
    if (run->source_begin) {
      at = run->source_begin;
    } else {
      for (std::size_t b = cursor; b + run->tokens.size() <= source.size(); ++b) {
        if (std::equal(run->tokens.begin(), run->tokens.end(),
                       source.begin() + static_cast<long>(b))) {
          at = b;
          break;
        }
      }
    }
    if (!at || *at < cursor || *at + run->tokens.size() > source.size() ||
        !std::equal(run->tokens.begin(), run->tokens.end(),
                    source.begin() + static_cast<long>(*at))) {
      throw InputError("template does not match its source sentence");
    }
    pos.push_back(*at);
    cursor = *at + run->tokens.size();
  }
  return pos;
}

}  // namespace detail

// Target-side text for every gap, read off the alignment.
inline std::vector<std::string> gold_fillers(const std::vector<std::string>& source,
                                             const Template& t,
                                             const EditAlignment& alignment) {
  const std::size_t n = source.size();
  if (alignment.source_tags.size() != n) {
    throw InputError("alignment does not belong to this source");
  }
  const auto positions = detail::run_positions(t, source);
  auto contribution = [&](std::size_t i, std::vector<std::string>& out) {
    switch (alignment.source_tags[i]) {
      case EditTag::kEqual:
        out.push_back(source[i]);
        break;
      case EditTag::kReplace: {
        auto it = alignment.replacements.find(i);
        if (it == alignment.replacements.end()) {
          throw InputError("REPLACE without replacement at " + std::to_string(i));
        }
        out.insert(out.end(), it->second.begin(), it->second.end());
        break;
      }
      default:
        break;
    }
  };
  auto insertions_at = [&](std::size_t g, std::vector<std::string>& out) {
    if (auto it = alignment.insertions.find(g); it != alignment.insertions.end()) {
      out.insert(out.end(), it->second.begin(), it->second.end());
    }
  };

  std::vector<std::string> fillers;
  std::size_t cursor = 0;  // next source position not yet covered
  std::size_t run_idx = 0;
  for (std::size_t s = 0; s < t.segments.size(); ++s) {
    if (const auto* run = std::get_if<KeepRun>(&t.segments[s])) {
      const std::size_t b = positions[run_idx++];
      const std::size_t e = b + run->tokens.size();
      const bool gap_before = s > 0;  // runs never touch each other
      const bool gap_after = s + 1 < t.segments.size();
      if (!gap_before && (b != cursor || alignment.has_insertion(b))) {
        throw InputError("template drops source text before token " + std::to_string(b));
      }
      if (!gap_after && (e != n || alignment.has_insertion(e))) {
        throw InputError("template drops source text after token " + std::to_string(e - 1));
      }
      for (std::size_t i = b; i < e; ++i) {
        if (alignment.source_tags[i] != EditTag::kEqual) {
          throw InputError("template keeps token " + std::to_string(i) + " (\"" +
                           source[i] + "\") but the alignment edits it");
        }
        if (i > b && alignment.has_insertion(i)) {
          throw InputError("alignment inserts inside kept run at token " +
                           std::to_string(i));
        }
      }
      cursor = b + run->tokens.size();
      continue;
    }
    // Gap region: source tokens [cursor, next_run_begin) plus the insertion
    // points at both ends.
    const std::size_t region_end = run_idx < positions.size() ? positions[run_idx] : n;
    const bool edge = s == 0 || s + 1 == t.segments.size();
    std::vector<std::string> filler;
    bool has_insertion = false;
    for (std::size_t g = cursor; g <= region_end; ++g) {
      has_insertion = has_insertion || alignment.has_insertion(g);
      insertions_at(g, filler);
      if (g < region_end) contribution(g, filler);
    }
    if (cursor == region_end && !has_insertion && !edge) {
      throw InputError("gap " + std::to_string(std::get<Gap>(t.segments[s]).index) +
                       " has no aligned target text and no deleted source tokens");
    }
    fillers.push_back(join(filler));
    cursor = region_end;
  }
  return fillers;
}

inline InfillExample make_infill_example(const ParallelPair& pair, const Template& t,
                                         const EditAlignment& alignment,
                                         SentinelStyle style = SentinelStyle::kGap) {
  const auto fillers = gold_fillers(pair.formal.texts(), t, alignment);
  InfillExample ex;
  ex.input_text = pair.formal.raw + std::string(kTemplateSeparator) + serialize(t, style);
  std::vector<std::string> parts;
  for (std::size_t k = 0; k < fillers.size(); ++k) {
    parts.push_back(sentinel(k, style));
    if (!fillers[k].empty()) parts.push_back(fillers[k]);
  }
  ex.target_text = join(parts);
  return ex;
}

inline std::string collapse_spaces(std::string_view s) {
  std::string out;
  bool space = false;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      space = !out.empty();
      continue;
    }
    if (space) out += ' ';
    space = false;
    out += c;
  }
  return out;
}

inline std::string fill_template(const Template& t,
                                 const std::vector<std::string>& fillers) {
  if (fillers.size() != t.gap_count) {
    throw InputError("template has " + std::to_string(t.gap_count) + " gap(s) but " +
                     std::to_string(fillers.size()) + " filler(s) were given");
  }
  std::string out;
  for (const auto& seg : t.segments) {
    out += ' ';
    if (const auto* run = std::get_if<KeepRun>(&seg)) {
      out += join(run->tokens);
    } else {
      out += fillers[std::get<Gap>(seg).index];
    }
  }
  return collapse_spaces(out);
}

// Splits "<gap_0> a b <gap_1> c" into fillers. Accepts either sentinel style
// and a trailing end sentinel as emitted by T5.
inline std::vector<std::string> parse_fillers(std::string_view target_text,
                                              std::size_t gap_count) {
  const std::string text(target_text);
  std::vector<std::string> fillers;
  std::size_t expected = 0;
  std::size_t last_end = 0;
  bool seen_any = false;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), detail::sentinel_regex());
       it != std::sregex_iterator(); ++it) {
    const auto& m = *it;
    const std::string between = detail::trim(
        text.substr(last_end, static_cast<std::size_t>(m.position(0)) - last_end));
    if (!seen_any && !between.empty()) {
      throw InputError("infiller output has text before the first sentinel");
    }
    if (seen_any) fillers.push_back(collapse_spaces(between));
    const std::size_t k = std::stoul(m[1].str());
    if (k != expected) {
      throw InputError("infiller output sentinel " + m[0].str() + " out of order");
    }
    ++expected;
    seen_any = true;
    last_end = static_cast<std::size_t>(m.position(0) + m.length(0));
  }
  if (seen_any) fillers.push_back(collapse_spaces(detail::trim(text.substr(last_end))));
  if (fillers.size() == gap_count + 1 && fillers.back().empty()) fillers.pop_back();
  if (fillers.size() != gap_count) {
    throw InputError("infiller output has " + std::to_string(fillers.size()) +
                     " filler(s) for " + std::to_string(gap_count) + " gap(s)");
  }
  return fillers;
}

// ---------------------------------------------------------------- slot mining

struct Stopwords {
  std::set<std::string> words;

  static Stopwords parse(std::string_view text) {
    Stopwords s;
    for (auto& w : detail::split_words(text)) s.words.insert(unicode::to_lower(w));
    return s;
  }
  bool contains(const std::string& token) const {
    return words.count(unicode::to_lower(token)) > 0;
  }
};

inline const Stopwords& default_stopwords() {
  static const Stopwords s = Stopwords::parse(default_tsv::k_stopwords);
  return s;
}

namespace detail {

inline bool is_punctuation(const std::string& token) {
  for (char32_t c : unicode::code_points(token)) {
    if (u_isalnum(static_cast<UChar32>(c))) return false;
  }
  return true;
}

}  // namespace detail

// Maximal runs of unchanged tokens (split at insertion points), minus runs
// made only of stopwords and punctuation. Source order.
inline SlotSet derive_slots(const ParallelPair& pair,
                            const Stopwords& stopwords = default_stopwords()) {
  const auto source = pair.formal.texts();
  const EditAlignment alignment = align(pair.formal, pair.informal);
  SlotSet out;
  std::vector<std::string> run;
  auto flush = [&] {
    bool content = false;
    for (const auto& tok : run) {
      if (!stopwords.contains(tok) && !detail::is_punctuation(tok)) content = true;
    }
    if (content) out.slots.push_back(join(run));
    run.clear();
  };
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (alignment.has_insertion(i)) flush();
    if (alignment.source_tags[i] == EditTag::kEqual) {
      run.push_back(source[i]);
    } else {
      flush();
    }
  }
  flush();
  return out;
}

inline jsonl::Json to_json(const std::string& id, const InfillExample& ex) {
  return {{"id", id}, {"input_text", ex.input_text}, {"target_text", ex.target_text}};
}

}  // namespace editkit
