#pragma once

// Shared helpers for the unit and acceptance suites: fixture paths, scratch
// directories, a seeded mutation corpus and oracles that share no code with
// the library.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

namespace editkit::testing {

inline std::string fixture(const std::string& name) {
  return std::string(EDITKIT_FIXTURE_DIR) + "/" + name;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
}

// A fresh directory under the system temp dir, removed on destruction.
class ScratchDir {
 public:
  explicit ScratchDir(const std::string& tag) {
    static std::uint64_t counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("editkit-" + tag + "-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~ScratchDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;

  std::string operator/(const std::string& name) const { return (path_ / name).string(); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// ---------------------------------------------------------------- mutations

struct MutatedPair {
  std::vector<std::string> source;
  std::vector<std::string> target;
};

// Source of 0..14 tokens over a small vocabulary (so accidental matches are
// common), then 0..5 random insertions, deletions and replacements.
inline std::vector<MutatedPair> mutation_corpus(std::size_t count, std::uint64_t seed) {
  static const std::vector<std::string> vocab = {
      "i",    "you",   "the", "a",     "be",   "will", "next",  "week", "at",
      "nine", "Polk",  "st",  "plz",   "u",    "'ll",  "back",  ".",    "!",
      "?",    "SFO",   "in",  "on",    "to",   "do",   "have",  "Red",  "Joan",
      "is",   "cool",  ",",   "gonna", "wanna", "what", "stuff", "TV",  "play"};
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) {
    return static_cast<std::size_t>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
  };
  std::vector<MutatedPair> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    MutatedPair p;
    const std::size_t len = pick(15);
    for (std::size_t i = 0; i < len; ++i) p.source.push_back(vocab[pick(vocab.size())]);
    p.target = p.source;
    const std::size_t edits = pick(6);
    for (std::size_t e = 0; e < edits; ++e) {
      const std::size_t op = pick(3);
      if (op == 0 || p.target.empty()) {
        p.target.insert(p.target.begin() + static_cast<long>(pick(p.target.size() + 1)),
                        vocab[pick(vocab.size())]);
      } else if (op == 1) {
        p.target.erase(p.target.begin() + static_cast<long>(pick(p.target.size())));
      } else {
        p.target[pick(p.target.size())] = vocab[pick(vocab.size())];
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

// ------------------------------------------------------------------ oracles

// Textbook two-row Levenshtein distance; no backtrace.
inline std::size_t levenshtein_distance(const std::vector<std::string>& a,
                                        const std::vector<std::string>& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] != b[j - 1])});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

// Every alignment path as a list of operations read from the END of both
// sequences: 'M' match, 'S' substitution, 'D' deletion, 'I' insertion. The
// canonical script is the minimal-cost path whose reversed operation list is
// lexicographically smallest under M < S < D < I.
struct PathEnumerator {
  const std::vector<std::string>& a;
  const std::vector<std::string>& b;
  std::vector<std::string> paths;

  void walk(std::size_t i, std::size_t j, std::string ops) {
    if (i == 0 && j == 0) {
      paths.push_back(ops);
      return;
    }
    if (i > 0 && j > 0) walk(i - 1, j - 1, ops + (a[i - 1] == b[j - 1] ? 'M' : 'S'));
    if (i > 0) walk(i - 1, j, ops + 'D');
    if (j > 0) walk(i, j - 1, ops + 'I');
  }

  static std::size_t cost(const std::string& ops) {
    return static_cast<std::size_t>(std::count_if(ops.begin(), ops.end(),
                                                  [](char c) { return c != 'M'; }));
  }

  std::string canonical() {
    walk(a.size(), b.size(), "");
    std::size_t best = SIZE_MAX;
    for (const auto& p : paths) best = std::min(best, cost(p));
    auto rank = [](char c) { return std::string("MSDI").find(c); };
    std::string winner;
    bool have = false;
    for (const auto& p : paths) {
      if (cost(p) != best) continue;
      if (!have || std::lexicographical_compare(
                       p.begin(), p.end(), winner.begin(), winner.end(),
                       [&](char x, char y) { return rank(x) < rank(y); })) {
        winner = p;
        have = true;
      }
    }
    return winner;
  }
};

// Exact two-sided Wilcoxon p-value by listing all 2^n sign assignments of
// the given (already ranked) magnitudes.
inline double wilcoxon_enumerated_p(const std::vector<double>& ranks, double w_plus) {
  const std::size_t n = ranks.size();
  const std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t lower = 0, upper = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    double w = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (mask & (std::uint64_t{1} << k)) w += ranks[k];
    }
    if (w <= w_plus + 1e-9) ++lower;
    if (w >= w_plus - 1e-9) ++upper;
  }
  const double p = 2.0 * static_cast<double>(std::min(lower, upper)) / static_cast<double>(total);
  return std::min(1.0, p);
}

// Random sentences over tokens that exercise every normalization stage.
inline std::vector<std::vector<std::string>> fuzz_sentences(std::size_t count, std::uint64_t seed) {
  static const std::vector<std::string> pieces = {
      "I",       "will",     "be",      "at",       "the",       "Polk",     "St",
      "street",  "nine",     "in",      "morning",  "evening",   "9am",      "9",
      "a.m.",    "p.m.",     "pm",      "am",       "o'clock",   "six",      "twenty",
      "one",     "LA",       "Los",     "Angeles",  "NYC",       "new",      "york",
      "$",       "$50",      "dollars", "usd",      "ave",       "blvd",     "scheduled",
      "sports",  "leaving",  "flights", "cities",   "Tuesday",   "next",     "week",
      ".",       ",",        "?",       "!",        "noon",      "12:30",    "at",
      "night",   "seventy",  "three",   "SF",       "Vegas",     "st.",      "louis",
      "Saint",   "Louis",    "CA",      "Texas",    "€",         "eur",      "going",
      "changed", "midnight", "half",    "past",     "afternoon", "mt",       "hwy"};
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<std::string> s;
    const std::size_t len = 1 + rng() % 14;
    for (std::size_t k = 0; k < len; ++k) s.push_back(pieces[rng() % pieces.size()]);
    out.push_back(std::move(s));
  }
  return out;
}

struct ChrfCase {
  const char* hyp;
  const char* ref;
  double value;
};

// Produced by tests/oracles/chrf_oracle.py, a brute-force n-gram counter.
inline constexpr ChrfCase kChrfPinned[] = {
    {"polk st", "polk street", 0.49168107817997497},
    {"abc", "abc", 1},
    {"abc", "xyz", 0},
    {"Red Joan", "red joan is cool", 0.46765155150175863},
    {"red joan is cool", "Red Joan", 0.77846088460298368},
    {"tuesday", "Tuesday next week", 0.3998161764705882},
    {"next week", "Tuesday next week", 0.48450759818432992},
    {"SFO", "i wanna find a unisex salon in SFO", 0.046621187127799363},
    {"Are You Ready", "play Are You Ready on TV", 0.56527135353225699},
    {"india", "Delhi, India", 0.30519810503863137},
    {"Sacramento Valley", "Sacramento Valley Station", 0.70459452490439689},
    {"SAN International Airport", "SAN International Airport International", 0.66247759436592901},
    {"the 3rd", "3rd", 0.75657894736842102},
    {"Seattle WA", "Seattle, WA", 0.64629724591184934},
    {"tUESDAY", "Tuesday", 1},
    {"atlanta", "Atlanta.", 0.83074823179054491},
    {"banana", "bandana", 0.33147831050228305},
    {"aaaa", "aa", 0.78124999999999989},
    {"a", "aaaaaaa", 0.028735632183908039},
    {"caf\xC3\xA9 au lait", "cafe au lait", 0.54411375661375672},
};

#ifdef EDITKIT_CLI
struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

// Runs the built CLI through the shell; `args` is spliced in verbatim, so
// callers quote paths themselves.
inline CliRun run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const std::string base = (std::filesystem::temp_directory_path() /
                            ("editkit-cli-" + std::to_string(::getpid()) + "-" +
                             std::to_string(counter++)))
                               .string();
  const std::string cmd = env + " '" + std::string(EDITKIT_CLI) + "' " + args + " >'" + base +
                          ".out' 2>'" + base + ".err'";
  const int status = std::system(cmd.c_str());
  CliRun r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(base + ".out");
  r.err = slurp(base + ".err");
  std::filesystem::remove(base + ".out");
  std::filesystem::remove(base + ".err");
  return r;
}

inline std::string quoted(const std::string& path) { return "'" + path + "'"; }
#endif

}  // namespace editkit::testing
