#pragma once

// Dataset construction: keep pairs whose informality increase clears a
// threshold, flag semantically drifted pairs for manual rewriting, attach
// slots.

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "editkit/corpus.hpp"
#include "editkit/errors.hpp"
#include "editkit/jsonl.hpp"

namespace editkit {

inline constexpr double kInformalityThreshold = 0.45;

// Differences closer to the threshold than this count as equal to it, so
// that 0.95 - 0.50 is not kept by floating-point noise.
inline constexpr double kThresholdTolerance = 1e-12;

struct CandidatePair {
  ParallelPair pair;
  double formality_formal = 0.0;
  double formality_informal = 0.0;
  std::optional<double> similarity;
  bool needs_rewrite = false;

  double informality_increase() const { return formality_formal - formality_informal; }
};

inline std::vector<CandidatePair> filter_by_informality(
    const std::vector<CandidatePair>& cands, double threshold = kInformalityThreshold) {
  std::vector<CandidatePair> out;
  for (const auto& c : cands) {
    if (c.informality_increase() - threshold > kThresholdTolerance) out.push_back(c);
  }
  return out;
}

inline std::vector<CandidatePair> flag_rewrites(std::vector<CandidatePair> cands,
                                                double sim_threshold) {
  for (auto& c : cands) {
    if (!c.similarity) {
      throw InputError("candidate \"" + c.pair.id + "\" has no similarity score");
    }
    c.needs_rewrite = *c.similarity < sim_threshold;
  }
  return cands;
}

struct AttachResult {
  std::vector<ParallelPair> pairs;
  std::vector<std::string> missing_slot_ids;
};

inline AttachResult attach_slots(const std::vector<CandidatePair>& cands,
                                 const std::map<std::string, SlotSet>& slot_source) {
  AttachResult out;
  for (const auto& c : cands) {
    ParallelPair p = c.pair;
    if (auto it = slot_source.find(p.id); it != slot_source.end()) {
      p.slots = it->second;
    } else {
      p.slots = {};
      out.missing_slot_ids.push_back(p.id);
    }
    out.pairs.push_back(std::move(p));
  }
  return out;
}

// Pairs schema plus "formality_formal", "formality_informal" and an optional
// "similarity".
inline std::vector<CandidatePair> read_candidates(const std::string& path) {
  std::vector<CandidatePair> out;
  std::set<std::string> seen;
  jsonl::for_each(path, [&](const jsonl::Json& obj, std::size_t line_no) {
    CandidatePair c;
    std::string id = jsonl::require_string(obj, "id", path, line_no);
    if (!seen.insert(id).second) {
      throw InputError(jsonl::where(path, line_no) + ": duplicate id \"" + id + "\"");
    }
    c.pair = make_parallel_pair(std::move(id),
                                jsonl::require_string(obj, "formal", path, line_no),
                                jsonl::require_string(obj, "informal", path, line_no),
                                detail::read_slot_array(obj, path, line_no));
    c.formality_formal = require_unit(obj, "formality_formal", path, line_no);
    c.formality_informal = require_unit(obj, "formality_informal", path, line_no);
    if (obj.contains("similarity") && !obj["similarity"].is_null()) {
      c.similarity = jsonl::require_number(obj, "similarity", path, line_no);
    }
    out.push_back(std::move(c));
  });
  return out;
}

inline jsonl::Json to_json(const CandidatePair& c) {
  jsonl::Json j = to_json(c.pair);
  j["formality_formal"] = c.formality_formal;
  j["formality_informal"] = c.formality_informal;
  if (c.similarity) j["similarity"] = *c.similarity;
  j["needs_rewrite"] = c.needs_rewrite;
  return j;
}

// {"id": str, "slots": [str]} per line; extra fields are ignored, so a pairs
// file works as a slot source too.
inline std::map<std::string, SlotSet> read_slot_map(const std::string& path) {
  std::map<std::string, SlotSet> out;
  jsonl::for_each(path, [&](const jsonl::Json& obj, std::size_t line_no) {
    std::string id = jsonl::require_string(obj, "id", path, line_no);
    jsonl::require(obj, "slots", path, line_no);
    SlotSet s = make_slot_set(detail::read_slot_array(obj, path, line_no));
    if (!out.emplace(id, std::move(s)).second) {
      throw InputError(jsonl::where(path, line_no) + ": duplicate id \"" + id + "\"");
    }
  });
  return out;
}

}  // namespace editkit
