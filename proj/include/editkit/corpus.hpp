#pragma once

// Data model and file I/O for parallel pairs, slots, hypotheses and external
// per-sentence scores. All text is NFC-normalized on the way in.

#include <algorithm>
#include <array>
#include <cstddef>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "editkit/errors.hpp"
#include "editkit/jsonl.hpp"
#include "editkit/unicode.hpp"

namespace editkit {

struct Token {
  std::string text;
  std::size_t char_offset = 0;  // code point index into the NFC raw string

  friend bool operator==(const Token&, const Token&) = default;
};

struct Sentence {
  std::string raw;
  std::vector<Token> tokens;

  std::size_t size() const { return tokens.size(); }
  std::vector<std::string> texts() const {
    std::vector<std::string> out;
    out.reserve(tokens.size());
    for (const auto& t : tokens) out.push_back(t.text);
    return out;
  }

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

// Ordered; duplicates are kept and counted separately.
struct SlotSet {
  std::vector<std::string> slots;

  bool empty() const { return slots.empty(); }
  std::size_t size() const { return slots.size(); }

  friend bool operator==(const SlotSet&, const SlotSet&) = default;
};

struct ParallelPair {
  std::string id;
  Sentence formal;
  Sentence informal;
  SlotSet slots;

  friend bool operator==(const ParallelPair&, const ParallelPair&) = default;
};

struct ExternalScores {
  std::string id;
  double style = 0.0;
  double content = 0.0;
  double fluency = 0.0;

  friend bool operator==(const ExternalScores&,
                         const ExternalScores&) = default;
};

namespace detail {

inline bool is_split_punct(char32_t c) {
  switch (c) {
    case U'.': case U',': case U'!': case U'?': case U';': case U':':
    case U'"': case U'\'': case U'(': case U')':
      return true;
    default:
      return false;
  }
}

inline bool is_ascii_alpha(char32_t c) {
  return (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z');
}

inline char32_t ascii_lower(char32_t c) {
  return (c >= U'A' && c <= U'Z') ? c + 32 : c;
}

// "ll" in "'ll": an English clitic that keeps its leading apostrophe.
inline bool is_clitic(const std::vector<char32_t>& cps, std::size_t b,
                      std::size_t e) {
  static const std::array<std::u32string_view, 7> kClitics = {
      U"ll", U"m", U"s", U"re", U"ve", U"d", U"em"};
  if (e <= b) return false;
  std::u32string low;
  for (std::size_t i = b; i < e; ++i) low.push_back(ascii_lower(cps[i]));
  return std::find(kClitics.begin(), kClitics.end(), low) != kClitics.end();
}

// Dotted abbreviations such as "a.m." or "U.S." keep their final period,
// also after a clock prefix ("9a.m.", "10:30p.m.").
inline bool is_dotted_abbrev(const std::vector<char32_t>& cps, std::size_t b,
                             std::size_t e) {
  while (b < e && ((cps[b] >= U'0' && cps[b] <= U'9') || cps[b] == U':')) ++b;
  const std::size_t len = e - b;
  if (len < 4 || len % 2 != 0) return false;
  for (std::size_t i = b; i < e; i += 2) {
    if (!is_ascii_alpha(cps[i]) || cps[i + 1] != U'.') return false;
  }
  return true;
}

inline std::string encode(const std::vector<char32_t>& cps, std::size_t b,
                          std::size_t e) {
  std::string out;
  for (std::size_t i = b; i < e; ++i) unicode::append_utf8(out, cps[i]);
  return out;
}

inline void split_chunk(const std::vector<char32_t>& cps, std::size_t b,
                        std::size_t e, std::vector<Token>& out) {
  std::size_t lead = b;
  while (lead < e && is_split_punct(cps[lead])) ++lead;
  if (lead == e) {
    for (std::size_t i = b; i < e; ++i) out.push_back({encode(cps, i, i + 1), i});
    return;
  }
  std::size_t tail = e;
  while (tail > lead && is_split_punct(cps[tail - 1])) --tail;

  std::size_t core_b = lead;
  std::size_t core_e = tail;
  if (core_e < e && cps[core_e] == U'.' &&
      is_dotted_abbrev(cps, core_b, core_e + 1)) {
    ++core_e;
  }
  if (core_b > b && cps[core_b - 1] == U'\'' &&
      is_clitic(cps, core_b, core_e)) {
    --core_b;
  }
  for (std::size_t i = b; i < core_b; ++i) out.push_back({encode(cps, i, i + 1), i});
  out.push_back({encode(cps, core_b, core_e), core_b});
  for (std::size_t i = core_e; i < e; ++i) out.push_back({encode(cps, i, i + 1), i});
}

inline std::string trim(std::string_view s) {
  const auto* ws = " \t\r\n\f\v";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace detail

// Whitespace split, then leading/trailing . , ! ? ; : " ' ( ) become
// single-character tokens. Interior apostrophes stay ("don't"), as do the
// apostrophe of a clitic ("'ll") and the final period of a dotted
// abbreviation ("a.m.").
inline Sentence tokenize(std::string_view raw) {
  Sentence s;
  s.raw = unicode::nfc(raw);
  const auto cps = unicode::code_points(s.raw);
  std::size_t i = 0;
  while (i < cps.size()) {
    if (unicode::is_space(cps[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < cps.size() && !unicode::is_space(cps[j])) ++j;
    detail::split_chunk(cps, i, j, s.tokens);
    i = j;
  }
  return s;
}

inline std::string join(const std::vector<std::string>& parts,
                        std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// "--" and blank entries are placeholders for "no slots".
inline SlotSet make_slot_set(const std::vector<std::string>& raw_slots) {
  SlotSet set;
  for (const auto& s : raw_slots) {
    std::string t = detail::trim(unicode::nfc(s));
    if (t.empty() || t == "--") continue;
    set.slots.push_back(std::move(t));
  }
  return set;
}

inline ParallelPair make_parallel_pair(std::string id, std::string_view formal,
                              std::string_view informal,
                              const std::vector<std::string>& slots = {}) {
  return {std::move(id), tokenize(formal), tokenize(informal),
          make_slot_set(slots)};
}

namespace detail {

inline std::vector<std::string> read_slot_array(const jsonl::Json& obj,
                                                const std::string& path,
                                                std::size_t line_no) {
  std::vector<std::string> out;
  auto it = obj.find("slots");
  if (it == obj.end() || it->is_null()) return out;
  if (!it->is_array()) {
    throw InputError(jsonl::where(path, line_no) +
                     ": field \"slots\" must be an array of strings");
  }
  for (const auto& v : *it) {
    if (!v.is_string()) {
      throw InputError(jsonl::where(path, line_no) +
                       ": field \"slots\" must be an array of strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace detail

inline std::vector<ParallelPair> read_pairs(const std::string& path) {
  std::vector<ParallelPair> pairs;
  std::set<std::string> seen;
  jsonl::for_each(path, [&](const jsonl::Json& obj, std::size_t line_no) {
    std::string id = jsonl::require_string(obj, "id", path, line_no);
    if (!seen.insert(id).second) {
      throw InputError(jsonl::where(path, line_no) + ": duplicate id \"" + id +
                       "\"");
    }
    pairs.push_back(make_parallel_pair(
        std::move(id), jsonl::require_string(obj, "formal", path, line_no),
        jsonl::require_string(obj, "informal", path, line_no),
        detail::read_slot_array(obj, path, line_no)));
  });
  return pairs;
}

inline jsonl::Json to_json(const ParallelPair& p) {
  return {{"id", p.id},
          {"formal", p.formal.raw},
          {"informal", p.informal.raw},
          {"slots", p.slots.slots}};
}

inline void write_pairs(const std::vector<ParallelPair>& pairs,
                        std::ostream& out) {
  for (const auto& p : pairs) jsonl::write_line(out, to_json(p));
}

inline void write_pairs(const std::vector<ParallelPair>& pairs,
                        const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  write_pairs(pairs, out);
}

inline double require_unit(const jsonl::Json& obj, std::string_view field,
                           const std::string& path, std::size_t line_no) {
  const double v = jsonl::require_number(obj, field, path, line_no);
  if (!(v >= 0.0 && v <= 1.0)) {
    throw InputError(jsonl::where(path, line_no) + ": field \"" +
                     std::string(field) + "\" = " + std::to_string(v) +
                     " is outside [0,1]");
  }
  return v;
}

inline std::map<std::string, ExternalScores> read_scores(
    const std::string& path) {
  std::map<std::string, ExternalScores> scores;
  jsonl::for_each(path, [&](const jsonl::Json& obj, std::size_t line_no) {
    ExternalScores s;
    s.id = jsonl::require_string(obj, "id", path, line_no);
    s.style = require_unit(obj, "style", path, line_no);
    s.content = require_unit(obj, "content", path, line_no);
    s.fluency = require_unit(obj, "fluency", path, line_no);
    if (scores.count(s.id)) {
      throw InputError(jsonl::where(path, line_no) + ": duplicate id \"" +
                       s.id + "\"");
    }
    scores.emplace(s.id, std::move(s));
  });
  return scores;
}

// System outputs: {"id": str, "text": str} per line.
inline std::map<std::string, std::string> read_hypotheses(
    const std::string& path) {
  std::map<std::string, std::string> hyps;
  jsonl::for_each(path, [&](const jsonl::Json& obj, std::size_t line_no) {
    std::string id = jsonl::require_string(obj, "id", path, line_no);
    std::string text =
        unicode::nfc(jsonl::require_string(obj, "text", path, line_no));
    if (!hyps.emplace(id, std::move(text)).second) {
      throw InputError(jsonl::where(path, line_no) + ": duplicate id \"" + id +
                       "\"");
    }
  });
  return hyps;
}

}  // namespace editkit
