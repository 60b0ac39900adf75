#pragma once

// Normalization cascade for slot matching:
//   lowercase -> lemmatize -> number words -> times -> place aliases and
//   abbreviations.
// Every output token remembers the range of input tokens it came from so that
// matches on normalized text can be mapped back to the original sentence.

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "editkit/corpus.hpp"
#include "editkit/default_tables.hpp"
#include "editkit/errors.hpp"
#include "editkit/unicode.hpp"

namespace editkit {

namespace detail {

inline std::vector<std::pair<std::string, std::string>> parse_tsv(
    std::string_view text, const std::string& origin) {
  std::vector<std::pair<std::string, std::string>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0 || tab + 1 == line.size()) {
      throw InputError(origin + ":" + std::to_string(line_no) +
                       ": expected \"surface<TAB>canonical\"");
    }
    rows.emplace_back(std::string(line.substr(0, tab)),
                      std::string(line.substr(tab + 1)));
  }
  return rows;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Table keys are compared against token sequences, so they are stored in the
// tokenizer's segmentation ("st. louis" -> "st . louis").
inline std::string table_key(std::string_view surface) {
  return join(tokenize(unicode::to_lower(surface)).texts());
}

inline bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

inline bool is_lower_alpha(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= 'a' && c <= 'z';
  });
}

inline std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace detail

struct NormTables {
  std::map<std::string, std::string> place_aliases;
  std::map<std::string, std::string> abbreviations;
  std::map<std::string, int> number_words;

  // Derived by finalize(): words the lemmatizer must leave alone, and the
  // longest alias key in words.
  std::set<std::string> protected_words;
  std::size_t max_alias_words = 1;

  void finalize() {
    std::map<std::string, std::string> aliases;
    for (const auto& [k, v] : place_aliases) {
      aliases[detail::table_key(k)] = detail::table_key(v);
    }
    // A canonical form spelled out in text must normalize to itself.
    std::vector<std::string> canonicals;
    for (const auto& [k, v] : aliases) canonicals.push_back(v);
    for (const auto& v : canonicals) aliases.emplace(v, v);
    place_aliases = std::move(aliases);
    std::map<std::string, std::string> abbrevs;
    for (const auto& [k, v] : abbreviations) {
      abbrevs[unicode::to_lower(k)] = detail::table_key(v);
    }
    abbreviations = std::move(abbrevs);

    protected_words.clear();
    max_alias_words = 1;
    auto protect = [&](const std::string& phrase) {
      auto words = detail::split_words(phrase);
      max_alias_words = std::max(max_alias_words, words.size());
      protected_words.insert(words.begin(), words.end());
    };
    for (const auto& [k, v] : place_aliases) {
      protect(k);
      protect(v);
    }
    for (const auto& [k, v] : abbreviations) {
      protect(k);
      protect(v);
    }
    for (const auto& [k, v] : number_words) protected_words.insert(k);
  }

  static NormTables from_tsv(std::string_view aliases_tsv,
                             std::string_view abbreviations_tsv,
                             std::string_view number_words_tsv,
                             const std::string& origin = "<tables>") {
    NormTables t;
    for (auto& [k, v] : detail::parse_tsv(aliases_tsv, origin + "/aliases")) {
      t.place_aliases.emplace(std::move(k), std::move(v));
    }
    for (auto& [k, v] :
         detail::parse_tsv(abbreviations_tsv, origin + "/abbreviations")) {
      t.abbreviations.emplace(std::move(k), std::move(v));
    }
    for (auto& [k, v] :
         detail::parse_tsv(number_words_tsv, origin + "/number_words")) {
      if (!detail::is_digits(v)) {
        throw InputError(origin + "/number_words: value for \"" + k +
                         "\" is not a non-negative integer");
      }
      t.number_words.emplace(unicode::to_lower(k), std::stoi(v));
    }
    t.finalize();
    return t;
  }

  // Empty paths fall back to the shipped tables.
  static NormTables load(const std::string& aliases_path,
                         const std::string& abbreviations_path,
                         const std::string& number_words_path) {
    auto pick = [](const std::string& path, std::string_view fallback) {
      return path.empty() ? std::string(fallback) : detail::read_file(path);
    };
    return from_tsv(pick(aliases_path, default_tsv::k_place_aliases),
                    pick(abbreviations_path, default_tsv::k_abbreviations),
                    pick(number_words_path, default_tsv::k_number_words));
  }

  static NormTables load_dir(const std::string& dir) {
    return load(dir + "/place_aliases.tsv", dir + "/abbreviations.tsv",
                dir + "/number_words.tsv");
  }
};

inline const NormTables& default_tables() {
  static const NormTables tables = NormTables::from_tsv(
      default_tsv::k_place_aliases, default_tsv::k_abbreviations,
      default_tsv::k_number_words, "<builtin>");
  return tables;
}

// ---------------------------------------------------------------- lemmatizer

namespace detail {

inline const std::map<std::string_view, std::string_view>& lemma_exceptions() {
  static const std::map<std::string_view, std::string_view> table = {
      // be / have / do
      {"am", "be"}, {"is", "be"}, {"are", "be"}, {"was", "be"},
      {"were", "be"}, {"been", "be"}, {"being", "be"},
      {"has", "have"}, {"had", "have"}, {"having", "have"},
      {"does", "do"}, {"did", "do"}, {"done", "do"}, {"doing", "do"},
      // irregular verbs
      {"went", "go"}, {"gone", "go"}, {"goes", "go"}, {"going", "go"},
      {"made", "make"}, {"making", "make"}, {"got", "get"},
      {"gotten", "get"}, {"said", "say"}, {"saw", "see"}, {"seen", "see"},
      {"came", "come"}, {"coming", "come"}, {"took", "take"},
      {"taken", "take"}, {"taking", "take"}, {"gave", "give"},
      {"given", "give"}, {"giving", "give"}, {"found", "find"},
      {"told", "tell"}, {"left", "leave"}, {"leaving", "leave"},
      {"felt", "feel"}, {"kept", "keep"}, {"thought", "think"},
      {"brought", "bring"}, {"bought", "buy"}, {"paid", "pay"},
      {"met", "meet"}, {"ran", "run"}, {"sat", "sit"}, {"knew", "know"},
      {"known", "know"}, {"wrote", "write"}, {"written", "write"},
      {"ate", "eat"}, {"eaten", "eat"}, {"drove", "drive"},
      {"driven", "drive"}, {"flew", "fly"}, {"flown", "fly"},
      {"began", "begin"}, {"begun", "begin"}, {"sent", "send"},
      {"spent", "spend"}, {"built", "build"}, {"held", "hold"},
      {"stood", "stand"}, {"understood", "understand"}, {"lost", "lose"},
      {"heard", "hear"}, {"meant", "mean"}, {"sold", "sell"},
      {"chose", "choose"}, {"chosen", "choose"}, {"used", "use"},
      {"using", "use"}, {"uses", "use"}, {"caused", "cause"},
      {"closed", "close"}, {"closing", "close"},
      {"changed", "change"}, {"changing", "change"}, {"arranged", "arrange"},
      {"arranging", "arrange"}, {"exchanged", "exchange"}, {"ranged", "range"},
      // irregular plurals
      {"children", "child"}, {"men", "man"}, {"women", "woman"},
      {"feet", "foot"}, {"teeth", "tooth"}, {"mice", "mouse"},
      {"people", "people"}, {"movies", "movie"}, {"cookies", "cookie"},
      {"buses", "bus"}, {"lives", "life"}, {"wives", "wife"},
      {"knives", "knife"}, {"leaves", "leaf"},
      // words the suffix rules would damage
      {"morning", "morning"}, {"evening", "evening"}, {"during", "during"},
      {"nothing", "nothing"}, {"something", "something"},
      {"anything", "anything"}, {"everything", "everything"},
      {"ceiling", "ceiling"}, {"wedding", "wedding"}, {"hundred", "hundred"},
      {"series", "series"}, {"species", "species"}, {"news", "news"},
      {"always", "always"}, {"perhaps", "perhaps"}, {"its", "its"},
      {"his", "his"}, {"this", "this"}, {"thus", "thus"}, {"plus", "plus"},
      {"yes", "yes"}, {"us", "us"}, {"bus", "bus"}, {"gas", "gas"},
      {"whereas", "whereas"}, {"afterwards", "afterwards"},
      {"towards", "towards"}, {"sometimes", "sometimes"},
      {"thanks", "thanks"}, {"please", "please"}, {"united", "united"},
      {"need", "need"}, {"speed", "speed"}, {"indeed", "indeed"},
  };
  return table;
}

inline bool is_vowel_at(std::string_view w, std::size_t i) {
  switch (w[i]) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
      return true;
    case 'y':
      return i > 0 && !is_vowel_at(w, i - 1);
    default:
      return false;
  }
}

inline bool has_vowel(std::string_view w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (is_vowel_at(w, i)) return true;
  }
  return false;
}

// Number of vowel-consonant transitions ("measure" in Porter's sense).
inline int measure(std::string_view w) {
  int m = 0;
  bool prev_vowel = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const bool v = is_vowel_at(w, i);
    if (prev_vowel && !v) ++m;
    prev_vowel = v;
  }
  return m;
}

inline bool ends_cvc(std::string_view w) {
  const std::size_t n = w.size();
  if (n < 3) return false;
  if (is_vowel_at(w, n - 3) || !is_vowel_at(w, n - 2) || is_vowel_at(w, n - 1))
    return false;
  const char last = w[n - 1];
  return last != 'w' && last != 'x' && last != 'y';
}

inline std::string repair_stem(std::string stem) {
  static const std::array<std::string_view, 9> kAddE = {"at", "bl", "iz", "ul", "ur",
                                                        "v",  "c",  "dg", "rg"};
  for (auto suf : kAddE) {
    if (stem.ends_with(suf)) return stem + "e";
  }
  const std::size_t n = stem.size();
  if (n >= 2 && stem[n - 1] == stem[n - 2] && !is_vowel_at(stem, n - 1)) {
    const char c = stem[n - 1];
    if (c != 'l' && c != 's' && c != 'z') stem.pop_back();
    return stem;
  }
  if (measure(stem) == 1 && ends_cvc(stem)) return stem + "e";
  return stem;
}

inline std::string lemmatize_once(const std::string& w) {
  const auto& exc = lemma_exceptions();
  if (auto it = exc.find(w); it != exc.end()) return std::string(it->second);
  const std::size_t n = w.size();
  if (n <= 3) return w;
  auto strip = [&](std::size_t k) { return w.substr(0, n - k); };

  if (w.ends_with("ies")) return n > 4 ? strip(3) + "y" : w;
  if (w.ends_with("sses") || w.ends_with("xes") || w.ends_with("zes") ||
      w.ends_with("ches") || w.ends_with("shes")) {
    return strip(2);
  }
  if (w.ends_with("ss") || w.ends_with("us") || w.ends_with("is")) return w;
  if (w.ends_with("s")) return strip(1);

  if (w.ends_with("ied")) return n > 4 ? strip(3) + "y" : w;
  if (w.ends_with("eed")) return w;
  if (w.ends_with("ed")) {
    std::string stem = strip(2);
    if (stem.size() >= 2 && has_vowel(stem)) return repair_stem(stem);
    return w;
  }
  if (w.ends_with("ing")) {
    std::string stem = strip(3);
    if (stem.size() >= 2 && has_vowel(stem)) return repair_stem(stem);
    return w;
  }
  return w;
}

}  // namespace detail

// Suffix stripping plus an irregular-form table; only touches [a-z]+ tokens.
// Iterated to a fixed point so the result is idempotent.
inline std::string lemmatize(std::string_view token) {
  std::string cur(token);
  if (!detail::is_lower_alpha(cur)) return cur;
  for (int i = 0; i < 8; ++i) {
    std::string next = detail::lemmatize_once(cur);
    if (next == cur) break;
    cur = std::move(next);
  }
  return cur;
}

// --------------------------------------------------------------------- times

namespace detail {

struct ClockTime {
  int hour = 0;
  int minute = 0;
};

inline std::optional<int> small_number_word(std::string_view w) {
  static const std::array<std::string_view, 13> kWords = {
      "zero", "one", "two", "three", "four", "five", "six",
      "seven", "eight", "nine", "ten", "eleven", "twelve"};
  for (std::size_t i = 0; i < kWords.size(); ++i) {
    if (kWords[i] == w) return static_cast<int>(i);
  }
  return std::nullopt;
}

// "9", "09", "9:30", "nine".
inline std::optional<ClockTime> parse_clock(std::string_view tok) {
  if (auto w = small_number_word(tok)) return ClockTime{*w, 0};
  const auto colon = tok.find(':');
  std::string_view h = tok.substr(0, colon);
  if (h.empty() || h.size() > 2 || !is_digits(h)) return std::nullopt;
  ClockTime t{std::stoi(std::string(h)), 0};
  if (colon != std::string_view::npos) {
    std::string_view m = tok.substr(colon + 1);
    if (m.size() != 2 || !is_digits(m)) return std::nullopt;
    t.minute = std::stoi(std::string(m));
    if (t.minute > 59) return std::nullopt;
  }
  return t;
}

enum class Meridiem { kAm, kPm };

inline std::optional<Meridiem> parse_meridiem(std::string_view tok) {
  if (tok == "am" || tok == "a.m." || tok == "a.m") return Meridiem::kAm;
  if (tok == "pm" || tok == "p.m." || tok == "p.m") return Meridiem::kPm;
  return std::nullopt;
}

enum class DayPart { kMorning, kAfternoon, kEvening, kNight };

inline std::optional<int> to_24h(ClockTime t, Meridiem m) {
  if (t.hour < 1 || t.hour > 12) return std::nullopt;
  if (m == Meridiem::kAm) return t.hour == 12 ? 0 : t.hour;
  return t.hour == 12 ? 12 : t.hour + 12;
}

inline std::optional<int> to_24h(ClockTime t, DayPart p) {
  if (t.hour < 1 || t.hour > 12) return std::nullopt;
  switch (p) {
    case DayPart::kMorning:
      return t.hour == 12 ? 0 : t.hour;
    case DayPart::kAfternoon:
    case DayPart::kEvening:
      return t.hour == 12 ? 12 : t.hour + 12;
    case DayPart::kNight:
      if (t.hour == 12) return 0;
      return t.hour >= 6 ? t.hour + 12 : t.hour;
  }
  return std::nullopt;
}

// "in the morning" / "in the evening" / "at night" ...
inline std::optional<DayPart> parse_day_part(
    const std::vector<std::string>& toks, std::size_t b) {
  const std::size_t n = toks.size() - b;
  if (n == 3 && toks[b] == "in" && toks[b + 1] == "the") {
    const auto& w = toks[b + 2];
    if (w == "morning") return DayPart::kMorning;
    if (w == "afternoon") return DayPart::kAfternoon;
    if (w == "evening") return DayPart::kEvening;
    if (w == "night") return DayPart::kNight;
  }
  if (n == 2 && toks[b] == "at" && toks[b + 1] == "night") {
    return DayPart::kNight;
  }
  return std::nullopt;
}

inline std::string format_hhmm(int hour, int minute) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%02d:%02d", hour, minute);
  return buf;
}

// "9am", "9:30pm", "9a.m."
inline std::optional<std::string> single_token_time(std::string_view tok) {
  if (tok == "noon") return "12:00";
  if (tok == "midnight") return "00:00";
  std::size_t i = 0;
  while (i < tok.size() && ((tok[i] >= '0' && tok[i] <= '9') || tok[i] == ':'))
    ++i;
  if (i == 0) return std::nullopt;
  auto clock = parse_clock(tok.substr(0, i));
  if (!clock || !is_digits(tok.substr(0, 1))) return std::nullopt;
  if (i == tok.size()) {
    // Bare "H:MM" is a 24-hour time; a bare hour is not a time at all.
    if (tok.find(':') == std::string_view::npos || clock->hour > 23)
      return std::nullopt;
    return format_hhmm(clock->hour, clock->minute);
  }
  auto mer = parse_meridiem(tok.substr(i));
  if (!mer) return std::nullopt;
  auto h = to_24h(*clock, *mer);
  if (!h) return std::nullopt;
  return format_hhmm(*h, clock->minute);
}

}  // namespace detail

// Recognizes a whole span of lowercase tokens as a clock time and returns
// it as 24-hour "HH:MM".
inline std::optional<std::string> canonical_time(
    const std::vector<std::string>& span) {
  using namespace detail;
  if (span.empty()) return std::nullopt;
  if (span.size() == 1) return single_token_time(span[0]);

  auto clock = parse_clock(span[0]);
  if (!clock) return std::nullopt;
  const std::size_t rest = 1;
  if (auto mer = parse_meridiem(span[rest])) {
    if (span.size() != 2) return std::nullopt;
    auto h = to_24h(*clock, *mer);
    if (!h) return std::nullopt;
    return format_hhmm(*h, clock->minute);
  }
  if (span[rest] == "o'clock") {
    if (clock->minute != 0 || clock->hour < 1 || clock->hour > 12)
      return std::nullopt;
    if (span.size() == 2) return format_hhmm(clock->hour, 0);
    auto part = parse_day_part(span, rest + 1);
    if (!part) return std::nullopt;
    return format_hhmm(*to_24h(*clock, *part), 0);
  }
  auto part = parse_day_part(span, rest);
  if (!part) return std::nullopt;
  auto h = to_24h(*clock, *part);
  if (!h) return std::nullopt;
  return format_hhmm(*h, clock->minute);
}

// ------------------------------------------------------------------ pipeline

struct NormToken {
  std::string text;
  std::size_t begin = 0;  // input token range [begin, end)
  std::size_t end = 0;

  friend bool operator==(const NormToken&, const NormToken&) = default;
};

namespace detail {

struct NormItem {
  std::string surface;  // lowercased input text
  std::string form;     // current normalized text
  std::size_t begin = 0;
  std::size_t end = 0;
  bool merged = false;  // produced by a time or alias merge
};

inline constexpr std::size_t kMaxTimeSpan = 6;

inline std::optional<int> lookup_number(const NormTables& t,
                                        const NormItem& item) {
  if (auto it = t.number_words.find(item.surface); it != t.number_words.end())
    return it->second;
  if (auto it = t.number_words.find(item.form); it != t.number_words.end())
    return it->second;
  return std::nullopt;
}

inline void number_stage(const NormTables& t, std::vector<NormItem>& items) {
  std::vector<NormItem> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    NormItem cur = items[i];
    auto v = lookup_number(t, cur);
    if (!v) {
      out.push_back(std::move(cur));
      continue;
    }
    int value = *v;
    if (value >= 20 && value < 100 && value % 10 == 0 && i + 1 < items.size()) {
      auto unit = lookup_number(t, items[i + 1]);
      if (unit && *unit >= 1 && *unit <= 9) {
        value += *unit;
        cur.surface += " " + items[i + 1].surface;
        cur.end = items[i + 1].end;
        cur.merged = true;
        ++i;
      }
    }
    cur.form = std::to_string(value);
    out.push_back(std::move(cur));
  }
  items = std::move(out);
}

inline const std::string& time_key(const NormItem& item) {
  // "am" lemmatizes to "be"; keep the meridiem reading available.
  if (item.surface == "am" || item.surface == "pm") return item.surface;
  return item.form;
}

inline void time_stage(std::vector<NormItem>& items) {
  std::vector<NormItem> out;
  std::size_t i = 0;
  while (i < items.size()) {
    bool matched = false;
    const std::size_t max_len = std::min(kMaxTimeSpan, items.size() - i);
    for (std::size_t len = max_len; len >= 1 && !matched; --len) {
      std::vector<std::string> keys;
      for (std::size_t k = i; k < i + len; ++k) keys.push_back(time_key(items[k]));
      if (auto canon = canonical_time(keys)) {
        NormItem m;
        m.form = *canon;
        m.surface = *canon;
        m.begin = items[i].begin;
        m.end = items[i + len - 1].end;
        m.merged = true;
        out.push_back(std::move(m));
        i += len;
        matched = true;
      }
    }
    if (!matched) out.push_back(std::move(items[i++]));
  }
  items = std::move(out);
}

inline std::string joined(const std::vector<NormItem>& items, std::size_t b,
                          std::size_t e, bool use_surface) {
  std::string s;
  for (std::size_t k = b; k < e; ++k) {
    if (k > b) s += ' ';
    s += use_surface ? items[k].surface : items[k].form;
  }
  return s;
}

inline bool starts_with_symbol(std::string_view s) {
  const auto cps = unicode::code_points(s);
  return !cps.empty() && !u_isalnum(static_cast<UChar32>(cps[0]));
}

inline void alias_stage(const NormTables& t, std::vector<NormItem>& items) {
  std::vector<NormItem> out;
  std::size_t i = 0;
  while (i < items.size()) {
    bool matched = false;
    const std::size_t max_len = std::min(t.max_alias_words, items.size() - i);
    for (std::size_t len = max_len; len >= 1 && !matched; --len) {
      for (bool use_surface : {true, false}) {
        auto it = t.place_aliases.find(joined(items, i, i + len, use_surface));
        if (it == t.place_aliases.end()) continue;
        NormItem m;
        m.form = it->second;
        m.surface = it->second;
        m.begin = items[i].begin;
        m.end = items[i + len - 1].end;
        m.merged = true;
        out.push_back(std::move(m));
        i += len;
        matched = true;
        break;
      }
    }
    if (matched) continue;

    NormItem& cur = items[i];
    auto emit_expansion = [&](const std::string& expansion) {
      for (auto& w : split_words(expansion)) {
        NormItem e = cur;
        e.form = w;
        e.surface = w;
        out.push_back(std::move(e));
      }
    };
    if (auto it = t.abbreviations.find(cur.surface);
        it != t.abbreviations.end()) {
      emit_expansion(it->second);
    } else if (auto it2 = t.abbreviations.find(cur.form);
               it2 != t.abbreviations.end()) {
      emit_expansion(it2->second);
    } else {
      // Currency symbol glued to an amount: "$50" -> "50 dollar".
      bool split = false;
      if (!cur.merged) {
        for (const auto& [key, expansion] : t.abbreviations) {
          if (key.size() < cur.surface.size() && cur.surface.starts_with(key) &&
              unicode::code_points(key).size() == 1 && starts_with_symbol(key)) {
            NormItem amount = cur;
            amount.surface = cur.surface.substr(key.size());
            amount.form = amount.surface;
            out.push_back(std::move(amount));
            emit_expansion(expansion);
            split = true;
            break;
          }
        }
      }
      if (!split) out.push_back(std::move(cur));
    }
    ++i;
  }
  items = std::move(out);
}

}  // namespace detail

inline std::vector<NormToken> normalize_with_spans(
    const std::vector<std::string>& tokens, const NormTables& tables) {
  std::vector<detail::NormItem> items;
  items.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    detail::NormItem item;
    item.surface = unicode::to_lower(tokens[i]);
    item.form = tables.protected_words.count(item.surface)
                    ? item.surface
                    : lemmatize(item.surface);
    item.begin = i;
    item.end = i + 1;
    items.push_back(std::move(item));
  }
  detail::number_stage(tables, items);
  // A merged time can complete a longer one ("noon pm"), so repeat until
  // nothing merges.
  auto forms = [&] {
    std::vector<std::string> f;
    for (const auto& it : items) f.push_back(it.form);
    return f;
  };
  for (auto before = forms();;) {
    detail::time_stage(items);
    auto after = forms();
    if (after == before) break;
    before = std::move(after);
  }
  detail::alias_stage(tables, items);

  std::vector<NormToken> out;
  out.reserve(items.size());
  for (auto& it : items) out.push_back({std::move(it.form), it.begin, it.end});
  return out;
}

inline std::vector<std::string> normalize_tokens(
    const std::vector<std::string>& tokens, const NormTables& tables) {
  std::vector<std::string> out;
  for (auto& t : normalize_with_spans(tokens, tables)) {
    out.push_back(std::move(t.text));
  }
  return out;
}

}  // namespace editkit
