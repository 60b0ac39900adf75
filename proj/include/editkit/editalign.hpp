#pragma once

// Token-level Levenshtein alignment of a parallel pair into coarse edit tags
// plus an edit script that rebuilds the target.

#include <cstddef>
#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "editkit/corpus.hpp"
#include "editkit/errors.hpp"
#include "editkit/jsonl.hpp"

namespace editkit {

enum class EditTag : std::uint8_t { kEqual, kReplace, kDelete, kInsert };

inline constexpr std::string_view to_string(EditTag tag) {
  switch (tag) {
    case EditTag::kEqual: return "EQUAL";
    case EditTag::kReplace: return "REPLACE";
    case EditTag::kDelete: return "DELETE";
    case EditTag::kInsert: return "INSERT";
  }
  return "?";
}

inline std::optional<EditTag> parse_edit_tag(std::string_view s) {
  if (s == "EQUAL") return EditTag::kEqual;
  if (s == "REPLACE") return EditTag::kReplace;
  if (s == "DELETE") return EditTag::kDelete;
  if (s == "INSERT") return EditTag::kInsert;
  return std::nullopt;
}

// source_tags holds EQUAL/REPLACE/DELETE, one per source token. Gap g sits
// before source token g (gap n is the end of the sentence).
struct EditAlignment {
  std::vector<EditTag> source_tags;
  std::map<std::size_t, std::vector<std::string>> insertions;
  std::map<std::size_t, std::vector<std::string>> replacements;

  bool has_insertion(std::size_t gap) const {
    auto it = insertions.find(gap);
    return it != insertions.end() && !it->second.empty();
  }

  std::size_t cost() const {
    std::size_t c = 0;
    for (auto t : source_tags) c += (t != EditTag::kEqual);
    for (const auto& [gap, toks] : insertions) c += toks.size();
    for (const auto& [idx, toks] : replacements) {
      if (toks.size() > 1) c += toks.size() - 1;
    }
    return c;
  }

  friend bool operator==(const EditAlignment&, const EditAlignment&) = default;
};

struct TaggerExample {
  std::vector<std::string> tokens;
  std::vector<EditTag> labels;
  EditTag bos_label = EditTag::kEqual;

  friend bool operator==(const TaggerExample&, const TaggerExample&) = default;
};

// Minimal unit-cost script. On backtrace ties, taken from the end of both
// sequences: match > substitution > deletion > insertion.
inline EditAlignment align(const std::vector<std::string>& source,
                           const std::vector<std::string>& target) {
  const std::size_t n = source.size();
  const std::size_t m = target.size();
  const std::size_t cols = m + 1;
  std::vector<std::uint32_t> dist((n + 1) * cols);
  auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& {
    return dist[i * cols + j];
  };
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= n; ++i) {
    at(i, 0) = static_cast<std::uint32_t>(i);
    for (std::size_t j = 1; j <= m; ++j) {
      const std::uint32_t sub =
          at(i - 1, j - 1) + (source[i - 1] == target[j - 1] ? 0u : 1u);
      const std::uint32_t del = at(i - 1, j) + 1;
      const std::uint32_t ins = at(i, j - 1) + 1;
      at(i, j) = std::min({sub, del, ins});
    }
  }

  EditAlignment out;
  out.source_tags.assign(n, EditTag::kEqual);
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    const std::uint32_t here = at(i, j);
    if (i > 0 && j > 0 && source[i - 1] == target[j - 1] &&
        here == at(i - 1, j - 1)) {
      --i;
      --j;
    } else if (i > 0 && j > 0 && here == at(i - 1, j - 1) + 1) {
      out.source_tags[i - 1] = EditTag::kReplace;
      out.replacements[i - 1] = {target[j - 1]};
      --i;
      --j;
    } else if (i > 0 && here == at(i - 1, j) + 1) {
      out.source_tags[i - 1] = EditTag::kDelete;
      --i;
    } else {
      out.insertions[i].push_back(target[j - 1]);
      --j;
    }
  }
  for (auto& [gap, toks] : out.insertions) {
    std::vector<std::string> fwd(toks.rbegin(), toks.rend());
    toks = std::move(fwd);
  }
  return out;
}

inline EditAlignment align(const Sentence& source, const Sentence& target) {
  return align(source.texts(), target.texts());
}

inline std::vector<std::string> apply_edits(
    const std::vector<std::string>& source, const EditAlignment& alignment) {
  const std::size_t n = source.size();
  if (alignment.source_tags.size() != n) {
    throw InputError("alignment has " +
                     std::to_string(alignment.source_tags.size()) +
                     " tags for " + std::to_string(n) + " source tokens");
  }
  for (const auto& [gap, toks] : alignment.insertions) {
    if (gap > n) {
      throw InputError("insertion gap " + std::to_string(gap) +
                       " out of range (max " + std::to_string(n) + ")");
    }
  }
  for (const auto& [idx, toks] : alignment.replacements) {
    if (idx >= n || alignment.source_tags[idx] != EditTag::kReplace) {
      throw InputError("replacement at index " + std::to_string(idx) +
                       " does not match a REPLACE tag");
    }
  }
  std::vector<std::string> out;
  for (std::size_t g = 0; g <= n; ++g) {
    if (auto it = alignment.insertions.find(g);
        it != alignment.insertions.end()) {
      out.insert(out.end(), it->second.begin(), it->second.end());
    }
    if (g == n) break;
    switch (alignment.source_tags[g]) {
      case EditTag::kEqual:
        out.push_back(source[g]);
        break;
      case EditTag::kReplace: {
        auto it = alignment.replacements.find(g);
        if (it == alignment.replacements.end()) {
          throw InputError("REPLACE at index " + std::to_string(g) +
                           " has no replacement tokens");
        }
        out.insert(out.end(), it->second.begin(), it->second.end());
        break;
      }
      case EditTag::kDelete:
        break;
      case EditTag::kInsert:
        throw InputError("INSERT is not a valid source tag (index " +
                         std::to_string(g) + ")");
    }
  }
  return out;
}

inline std::vector<std::string> apply_edits(const Sentence& source,
                                            const EditAlignment& alignment) {
  return apply_edits(source.texts(), alignment);
}

// Insertions fold onto the preceding token, overriding EQUAL only;
// sentence-initial insertions set bos_label.
inline TaggerExample to_tagger_example(const EditAlignment& alignment,
                                       const std::vector<std::string>& source) {
  if (alignment.source_tags.size() != source.size()) {
    throw InputError("alignment/source length mismatch");
  }
  TaggerExample ex;
  ex.tokens = source;
  ex.labels = alignment.source_tags;
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (ex.labels[i] == EditTag::kEqual && alignment.has_insertion(i + 1)) {
      ex.labels[i] = EditTag::kInsert;
    }
  }
  ex.bos_label =
      alignment.has_insertion(0) ? EditTag::kInsert : EditTag::kEqual;
  return ex;
}

inline TaggerExample to_tagger_example(const EditAlignment& alignment,
                                       const Sentence& source) {
  return to_tagger_example(alignment, source.texts());
}

inline std::map<EditTag, double> tag_distribution(
    const std::vector<std::vector<EditTag>>& label_sequences) {
  std::map<EditTag, std::size_t> counts;
  std::size_t total = 0;
  for (const auto& seq : label_sequences) {
    for (auto t : seq) {
      ++counts[t];
      ++total;
    }
  }
  if (total == 0) throw InputError("tag distribution of an empty collection");
  std::map<EditTag, double> out;
  for (const auto& [tag, c] : counts) {
    out[tag] = static_cast<double>(c) / static_cast<double>(total);
  }
  return out;
}

inline std::map<EditTag, double> tag_distribution(
    const std::vector<TaggerExample>& examples) {
  std::vector<std::vector<EditTag>> seqs;
  seqs.reserve(examples.size());
  for (const auto& ex : examples) seqs.push_back(ex.labels);
  return tag_distribution(seqs);
}

inline jsonl::Json to_json(const std::string& id, const TaggerExample& ex) {
  std::vector<std::string> labels;
  labels.reserve(ex.labels.size());
  for (auto t : ex.labels) labels.emplace_back(to_string(t));
  return {{"id", id},
          {"tokens", ex.tokens},
          {"labels", labels},
          {"bos_label", std::string(to_string(ex.bos_label))}};
}

struct TaggedRecord {
  std::string id;
  TaggerExample example;
};

inline std::vector<TaggedRecord> read_tagger_examples(const std::string& path) {
  std::vector<TaggedRecord> out;
  jsonl::for_each(path, [&](const jsonl::Json& obj, std::size_t line_no) {
    TaggedRecord rec;
    rec.id = jsonl::require_string(obj, "id", path, line_no);
    auto string_list = [&](std::string_view field) {
      const auto& v = jsonl::require(obj, field, path, line_no);
      if (!v.is_array()) {
        throw InputError(jsonl::where(path, line_no) + ": field \"" +
                         std::string(field) + "\" must be an array");
      }
      std::vector<std::string> items;
      for (const auto& x : v) {
        if (!x.is_string()) {
          throw InputError(jsonl::where(path, line_no) + ": field \"" +
                           std::string(field) + "\" must hold strings");
        }
        items.push_back(x.get<std::string>());
      }
      return items;
    };
    auto parse = [&](const std::string& s, std::string_view field) {
      auto t = parse_edit_tag(s);
      if (!t) {
        throw InputError(jsonl::where(path, line_no) + ": field \"" +
                         std::string(field) + "\": unknown tag \"" + s + "\"");
      }
      return *t;
    };
    rec.example.tokens = string_list("tokens");
    for (const auto& s : string_list("labels")) {
      rec.example.labels.push_back(parse(s, "labels"));
    }
    if (rec.example.labels.size() != rec.example.tokens.size()) {
      throw InputError(jsonl::where(path, line_no) +
                       ": field \"labels\" length differs from \"tokens\"");
    }
    if (obj.contains("bos_label")) {
      rec.example.bos_label = parse(
          jsonl::require_string(obj, "bos_label", path, line_no), "bos_label");
    }
    out.push_back(std::move(rec));
  });
  return out;
}

}  // namespace editkit
