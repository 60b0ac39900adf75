#pragma once

// Joins slot scores with external style/content/fluency scores, computes the
// joint measure, builds leaderboards and runs split-based significance tests.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "editkit/corpus.hpp"
#include "editkit/errors.hpp"
#include "editkit/jsonl.hpp"
#include "editkit/wilcoxon.hpp"

namespace editkit {

struct EvalRecord {
  std::string id;
  double style = 0.0;
  double content = 0.0;
  double slot = 0.0;
  double fluency = 0.0;
  double product = 0.0;

  static EvalRecord make(std::string id, double style, double content, double slot,
                         double fluency) {
    return {std::move(id), style, content, slot, fluency,
            style * content * slot * fluency};
  }
};

// Mean over sentences of the per-sentence product (not the product of means).
inline double joint_score(const std::vector<EvalRecord>& records) {
  if (records.empty()) throw InputError("joint score of an empty record list");
  double sum = 0.0;
  for (const auto& r : records) sum += r.product;
  return sum / static_cast<double>(records.size());
}

struct LeaderboardRow {
  std::string system;
  std::string section;
  double style = 0.0;
  double content = 0.0;
  double slot = 0.0;
  double fluency = 0.0;
  double joint = 0.0;
  std::size_t sentences = 0;
};

struct Leaderboard {
  std::vector<LeaderboardRow> rows;  // grouped by section, joint descending
};

struct SystemScores {
  std::string name;
  std::string section;
  std::map<std::string, ExternalScores> external;
  std::map<std::string, double> slot;  // id -> slot preservation
};

// One record per id, in the order of `ids`. Missing ids are reported together.
inline std::vector<EvalRecord> join_records(const SystemScores& sys,
                                            const std::vector<std::string>& ids) {
  std::vector<std::string> missing;
  std::vector<EvalRecord> out;
  out.reserve(ids.size());
  for (const auto& id : ids) {
    auto e = sys.external.find(id);
    auto s = sys.slot.find(id);
    if (e == sys.external.end() || s == sys.slot.end()) {
      missing.push_back(id);
      continue;
    }
    out.push_back(EvalRecord::make(id, e->second.style, e->second.content, s->second,
                                   e->second.fluency));
  }
  if (!missing.empty()) {
    std::string msg = "system \"" + sys.name + "\" lacks scores for " +
                      std::to_string(missing.size()) + " id(s):";
    for (std::size_t i = 0; i < missing.size() && i < 20; ++i) msg += " " + missing[i];
    if (missing.size() > 20) msg += " ...";
    throw InputError(msg);
  }
  return out;
}

inline LeaderboardRow summarize(const SystemScores& sys,
                                const std::vector<EvalRecord>& records) {
  LeaderboardRow row;
  row.system = sys.name;
  row.section = sys.section;
  row.sentences = records.size();
  if (records.empty()) throw InputError("system \"" + sys.name + "\" has no records");
  for (const auto& r : records) {
    row.style += r.style;
    row.content += r.content;
    row.slot += r.slot;
    row.fluency += r.fluency;
  }
  const double n = static_cast<double>(records.size());
  row.style /= n;
  row.content /= n;
  row.slot /= n;
  row.fluency /= n;
  row.joint = joint_score(records);
  return row;
}

inline Leaderboard build_leaderboard(const std::vector<SystemScores>& systems,
                                     const std::vector<std::string>& ids) {
  Leaderboard board;
  std::vector<std::string> section_order;
  for (const auto& sys : systems) {
    board.rows.push_back(summarize(sys, join_records(sys, ids)));
    if (std::find(section_order.begin(), section_order.end(), sys.section) ==
        section_order.end()) {
      section_order.push_back(sys.section);
    }
  }
  auto section_rank = [&](const std::string& s) {
    return std::find(section_order.begin(), section_order.end(), s) - section_order.begin();
  };
  std::stable_sort(board.rows.begin(), board.rows.end(),
                   [&](const LeaderboardRow& a, const LeaderboardRow& b) {
                     const auto sa = section_rank(a.section);
                     const auto sb = section_rank(b.section);
                     if (sa != sb) return sa < sb;
                     if (a.joint != b.joint) return a.joint > b.joint;
                     return a.system < b.system;
                   });
  return board;
}

inline std::string format_2dp(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline void write_tsv(const Leaderboard& board, std::ostream& out) {
  out << "section\tsystem\tstyle\tcontent\tslot\tfluency\tjoint\n";
  for (const auto& r : board.rows) {
    out << r.section << '\t' << r.system << '\t' << format_2dp(r.style) << '\t'
        << format_2dp(r.content) << '\t' << format_2dp(r.slot) << '\t'
        << format_2dp(r.fluency) << '\t' << format_2dp(r.joint) << '\n';
  }
}

inline jsonl::Json to_json(const Leaderboard& board) {
  jsonl::Json rows = jsonl::Json::array();
  for (const auto& r : board.rows) {
    rows.push_back({{"system", r.system},
                    {"section", r.section},
                    {"style", r.style},
                    {"content", r.content},
                    {"slot", r.slot},
                    {"fluency", r.fluency},
                    {"joint", r.joint},
                    {"sentences", r.sentences}});
  }
  return {{"rows", rows}};
}

inline jsonl::Json to_json(const EvalRecord& r) {
  return {{"id", r.id},           {"style", r.style},     {"content", r.content},
          {"slot", r.slot},       {"fluency", r.fluency}, {"product", r.product}};
}

// {"id": str, "product": float} per line (the per-sentence records written by
// `evaluate` qualify).
inline std::map<std::string, double> read_products(const std::string& path) {
  std::map<std::string, double> out;
  jsonl::for_each(path, [&](const jsonl::Json& obj, std::size_t line_no) {
    std::string id = jsonl::require_string(obj, "id", path, line_no);
    const double v = require_unit(obj, "product", path, line_no);
    if (!out.emplace(id, v).second) {
      throw InputError(jsonl::where(path, line_no) + ": duplicate id \"" + id + "\"");
    }
  });
  return out;
}

// ------------------------------------------------------------- significance

namespace detail {

// Uniform integer in [0, bound) by rejection on raw 64-bit output, so results
// depend only on the engine, not on the standard library's distributions.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace detail

struct SplitSignificance {
  WilcoxonResult test;
  std::vector<double> means_a;
  std::vector<double> means_b;
};

// Each split is an independent draw of split_size ids without replacement;
// splits may overlap one another (30 x 900 exceeds a 1100-sentence test set,
// so the splits cannot form a partition).
inline SplitSignificance significance_by_splits(const std::map<std::string, double>& a,
                                                const std::map<std::string, double>& b,
                                                std::size_t n_splits,
                                                std::size_t split_size,
                                                std::uint64_t seed) {
  std::vector<std::string> ids;
  for (const auto& [id, v] : a) {
    if (!b.count(id)) throw InputError("id \"" + id + "\" scored for system A only");
    ids.push_back(id);
  }
  for (const auto& [id, v] : b) {
    if (!a.count(id)) throw InputError("id \"" + id + "\" scored for system B only");
  }
  if (split_size == 0 || n_splits == 0) {
    throw InputError("split count and split size must be positive");
  }
  if (split_size > ids.size()) {
    throw InputError("split size " + std::to_string(split_size) + " exceeds the " +
                     std::to_string(ids.size()) + " scored ids");
  }
  std::vector<double> va, vb;
  for (const auto& id : ids) {
    va.push_back(a.at(id));
    vb.push_back(b.at(id));
  }

  std::mt19937_64 rng(seed);
  SplitSignificance out;
  std::vector<std::size_t> perm(ids.size());
  for (std::size_t s = 0; s < n_splits; ++s) {
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    double sum_a = 0.0, sum_b = 0.0;
    for (std::size_t i = 0; i < split_size; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(detail::bounded(rng, perm.size() - i));
      std::swap(perm[i], perm[j]);
      sum_a += va[perm[i]];
      sum_b += vb[perm[i]];
    }
    out.means_a.push_back(sum_a / static_cast<double>(split_size));
    out.means_b.push_back(sum_b / static_cast<double>(split_size));
  }
  out.test = wilcoxon_signed_rank(out.means_a, out.means_b);
  return out;
}

}  // namespace editkit
