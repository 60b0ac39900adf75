// editkit: command-line front end for the formality-transfer toolkit.
//
// Exit codes: 0 success, 1 input or usage error, 2 internal invariant
// violation.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "editkit/editkit.hpp"

namespace {

using editkit::Config;
using editkit::InputError;
using editkit::jsonl::Json;

// Writes to a file when a path is given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw InputError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string exact_text(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct GlobalFlags {
  std::string config_path;
  std::optional<double> chrf_beta;
  std::optional<int> chrf_max_n;
  std::optional<double> approx_floor;
  std::optional<std::string> sentinel_style;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> aliases;
  std::optional<std::string> abbreviations;
  std::optional<std::string> number_words;
  std::optional<std::string> stopwords;

  void add_to(CLI::App& app) {
    app.add_option("--config", config_path, "key=value configuration file")
        ->check(CLI::ExistingFile);
    app.add_option("--chrf-beta", chrf_beta, "ChrF beta (default 2)");
    app.add_option("--chrf-max-n", chrf_max_n, "ChrF maximum character n-gram order (default 6)");
    app.add_option("--approx-floor", approx_floor,
                   "minimum ChrF weight for an approximate slot match (default 0.1)");
    app.add_option("--sentinel-style", sentinel_style,
                   "gap sentinels: gap (<gap_k>) or t5 (<extra_id_k>)")
        ->check(CLI::IsMember({"gap", "t5"}));
    app.add_option("--seed", seed, "random seed");
    app.add_option("--aliases", aliases, "place alias table (TSV)")->check(CLI::ExistingFile);
    app.add_option("--abbreviations", abbreviations, "abbreviation table (TSV)")
        ->check(CLI::ExistingFile);
    app.add_option("--number-words", number_words, "number word table (TSV)")
        ->check(CLI::ExistingFile);
    app.add_option("--stopwords", stopwords, "stopword list, one word per line")
        ->check(CLI::ExistingFile);
  }

  Config resolve() const {
    Config cfg;
    if (!config_path.empty()) cfg.load_file(config_path);
    cfg.load_env();
    if (chrf_beta) cfg.set("chrf_beta", exact_text(*chrf_beta), "--chrf-beta");
    if (chrf_max_n) cfg.set("chrf_max_n", std::to_string(*chrf_max_n), "--chrf-max-n");
    if (approx_floor) cfg.set("approx_floor", exact_text(*approx_floor), "--approx-floor");
    if (sentinel_style) cfg.set("sentinel_style", *sentinel_style, "--sentinel-style");
    if (seed) cfg.seed = *seed;
    if (aliases) cfg.aliases_path = *aliases;
    if (abbreviations) cfg.abbreviations_path = *abbreviations;
    if (number_words) cfg.number_words_path = *number_words;
    if (stopwords) cfg.stopwords_path = *stopwords;
    return cfg;
  }
};

enum class Mode { kTag, kConstr, kConstrTag };

Mode parse_mode(const std::string& s) {
  if (s == "tag") return Mode::kTag;
  if (s == "constr") return Mode::kConstr;
  if (s == "constr-tag") return Mode::kConstrTag;
  throw InputError("unknown template mode \"" + s + "\"");
}

std::map<std::string, editkit::TaggerExample> labels_by_id(const std::string& path) {
  std::map<std::string, editkit::TaggerExample> out;
  for (auto& rec : editkit::read_tagger_examples(path)) {
    if (!out.emplace(rec.id, std::move(rec.example)).second) {
      throw InputError(path + ": duplicate id \"" + rec.id + "\"");
    }
  }
  return out;
}

// Labels from an external tagger when given, otherwise the gold labels of
// the pair's own alignment.
editkit::TaggerExample labels_for(const editkit::ParallelPair& p,
                                  const std::map<std::string, editkit::TaggerExample>* external) {
  if (external) {
    auto it = external->find(p.id);
    if (it == external->end()) throw InputError("no tagger labels for id \"" + p.id + "\"");
    if (it->second.tokens != p.formal.texts()) {
      throw InputError("tagger tokens for id \"" + p.id + "\" differ from the source tokens");
    }
    return it->second;
  }
  return editkit::to_tagger_example(editkit::align(p.formal, p.informal), p.formal);
}

editkit::Template build_for_mode(Mode mode, const editkit::ParallelPair& p,
                                 const editkit::SlotSet& slots,
                                 const editkit::TaggerExample& labels,
                                 const editkit::NormTables& tables) {
  switch (mode) {
    case Mode::kTag:
      return editkit::template_from_tags(p.formal, labels);
    case Mode::kConstr:
      return editkit::template_from_slots(p.formal, slots, tables);
    case Mode::kConstrTag:
      return editkit::template_union(p.formal, slots, labels, tables);
  }
  throw editkit::InvariantError("unhandled template mode");
}

editkit::SlotSet slots_for(const editkit::ParallelPair& p, const std::string& source,
                           const editkit::Stopwords& stopwords) {
  if (source == "given") return p.slots;
  return editkit::derive_slots(p, stopwords);
}

std::string tag_name(editkit::EditTag t) { return std::string(editkit::to_string(t)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"editkit: edit tags, templates and slot-preservation metrics for formality transfer"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalFlags global;
  global.add_to(app);

  // align
  std::string pairs_path, out_path;
  auto* align_cmd = app.add_subcommand("align", "align pairs and export tagger training labels");
  align_cmd->add_option("--pairs", pairs_path, "pairs JSONL")->required()->check(CLI::ExistingFile);
  align_cmd->add_option("--out", out_path, "output JSONL (default stdout)");

  // make-templates
  std::string mode_name = "tag", labels_path, slot_source = "given";
  auto* tmpl_cmd = app.add_subcommand("make-templates", "build gap-infilling templates");
  tmpl_cmd->add_option("--pairs", pairs_path, "pairs JSONL")->required()->check(CLI::ExistingFile);
  tmpl_cmd->add_option("--mode", mode_name, "tag | constr | constr-tag")
      ->check(CLI::IsMember({"tag", "constr", "constr-tag"}));
  tmpl_cmd->add_option("--labels", labels_path,
                       "tagger output JSONL (default: labels from the pair alignment)")
      ->check(CLI::ExistingFile);
  tmpl_cmd->add_option("--slots", slot_source, "slot source: given | derived")
      ->check(CLI::IsMember({"given", "derived"}));
  tmpl_cmd->add_option("--out", out_path, "output JSONL (default stdout)");

  // make-training-data
  std::string train_slot_source = "derived";
  bool skip_invalid = false;
  auto* train_cmd = app.add_subcommand("make-training-data", "emit infiller training examples");
  train_cmd->add_option("--pairs", pairs_path, "pairs JSONL")->required()->check(CLI::ExistingFile);
  train_cmd->add_option("--mode", mode_name, "tag | constr | constr-tag")
      ->check(CLI::IsMember({"tag", "constr", "constr-tag"}));
  train_cmd->add_option("--slots", train_slot_source, "slot source: derived | given")
      ->check(CLI::IsMember({"given", "derived"}));
  train_cmd->add_flag("--skip-invalid", skip_invalid,
                      "skip pairs whose template does not fit the alignment");
  train_cmd->add_option("--out", out_path, "output JSONL (default stdout)");

  // fill
  std::string templates_path, infills_path;
  auto* fill_cmd = app.add_subcommand("fill", "fill templates from infiller output");
  fill_cmd->add_option("--templates", templates_path, "templates JSONL {id, template}")
      ->required()->check(CLI::ExistingFile);
  fill_cmd->add_option("--infills", infills_path,
                       "infiller JSONL {id, fillers} or {id, target_text}")
      ->required()->check(CLI::ExistingFile);
  fill_cmd->add_option("--out", out_path, "output JSONL {id, text} (default stdout)");

  // score-slots
  std::string hyps_path;
  auto* score_cmd = app.add_subcommand("score-slots", "slot preservation per sentence");
  score_cmd->add_option("--pairs", pairs_path, "pairs JSONL")->required()->check(CLI::ExistingFile);
  score_cmd->add_option("--hyps", hyps_path, "hypotheses JSONL {id, text}")
      ->required()->check(CLI::ExistingFile);
  score_cmd->add_option("--out", out_path, "output JSONL (default stdout)");

  // chrf
  std::optional<std::string> chrf_hyp, chrf_ref;
  std::string chrf_hyps_file, chrf_refs_file;
  auto* chrf_cmd = app.add_subcommand("chrf", "sentence-level ChrF");
  chrf_cmd->add_option("--hyp", chrf_hyp, "hypothesis string");
  chrf_cmd->add_option("--ref", chrf_ref, "reference string");
  chrf_cmd->add_option("--hyp-file", chrf_hyps_file, "hypotheses, one per line")
      ->check(CLI::ExistingFile);
  chrf_cmd->add_option("--ref-file", chrf_refs_file, "references, one per line")
      ->check(CLI::ExistingFile);
  chrf_cmd->add_option("--out", out_path, "output (default stdout)");

  // evaluate
  std::vector<std::string> sys_names, sys_hyps, sys_scores, sys_sections;
  std::string out_tsv, out_json, records_dir;
  auto* eval_cmd = app.add_subcommand("evaluate", "leaderboard over one or more systems");
  eval_cmd->add_option("--pairs", pairs_path, "pairs JSONL")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--hyps", sys_hyps, "hypotheses JSONL per system (repeatable)")
      ->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--scores", sys_scores, "external scores JSONL per system (repeatable)")
      ->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--name", sys_names, "system name per system (default: hyps file stem)");
  eval_cmd->add_option("--section", sys_sections, "leaderboard section per system");
  eval_cmd->add_option("--out-tsv", out_tsv, "leaderboard TSV (default stdout)");
  eval_cmd->add_option("--out-json", out_json, "leaderboard JSON");
  eval_cmd->add_option("--records-dir", records_dir,
                       "write per-sentence records to DIR/<system>.records.jsonl");

  // significance
  std::string sig_a, sig_b;
  std::size_t n_splits = 30, split_size = 900;
  auto* sig_cmd = app.add_subcommand("significance", "Wilcoxon test over random splits");
  sig_cmd->add_option("--a", sig_a, "per-sentence records of system A {id, product}")
      ->required()->check(CLI::ExistingFile);
  sig_cmd->add_option("--b", sig_b, "per-sentence records of system B {id, product}")
      ->required()->check(CLI::ExistingFile);
  sig_cmd->add_option("--splits", n_splits, "number of random splits (default 30)");
  sig_cmd->add_option("--split-size", split_size, "ids per split (default 900)");
  sig_cmd->add_option("--out", out_path, "output JSON (default stdout)");

  // filter-dataset
  std::string cands_path, slot_map_path, worklist_path, report_path;
  double threshold = editkit::kInformalityThreshold;
  std::optional<double> sim_threshold;
  auto* filter_cmd = app.add_subcommand("filter-dataset", "threshold filter, rewrite flags, slots");
  filter_cmd->add_option("--candidates", cands_path, "candidate JSONL")
      ->required()->check(CLI::ExistingFile);
  filter_cmd->add_option("--threshold", threshold, "minimum informality increase, exclusive (0.45)");
  filter_cmd->add_option("--sim-threshold", sim_threshold,
                         "similarity below which a pair is flagged for rewriting")->required();
  filter_cmd->add_option("--slot-map", slot_map_path, "JSONL {id, slots} to attach")
      ->check(CLI::ExistingFile);
  filter_cmd->add_option("--out", out_path, "filtered pairs JSONL")->required();
  filter_cmd->add_option("--worklist", worklist_path, "flagged pairs JSONL")->required();
  filter_cmd->add_option("--report", report_path, "JSON report with warnings")->required();

  // stats
  std::string tags_path;
  auto* stats_cmd = app.add_subcommand("stats", "edit-tag distribution");
  stats_cmd->add_option("--tags", tags_path, "tagger JSONL {id, tokens, labels}")
      ->required()->check(CLI::ExistingFile);
  stats_cmd->add_option("--out", out_path, "output JSON (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    const Config cfg = global.resolve();

    if (*align_cmd) {
      Output out(out_path);
      for (const auto& p : editkit::read_pairs(pairs_path)) {
        const auto alignment = editkit::align(p.formal, p.informal);
        if (editkit::apply_edits(p.formal, alignment) != p.informal.texts()) {
          throw editkit::InvariantError("alignment does not reproduce target for " + p.id);
        }
        editkit::jsonl::write_line(out.stream(),
                                   editkit::to_json(p.id, editkit::to_tagger_example(alignment, p.formal)));
      }
    } else if (*tmpl_cmd) {
      const Mode mode = parse_mode(mode_name);
      const auto tables = cfg.tables();
      const auto stopwords = cfg.stopwords();
      std::map<std::string, editkit::TaggerExample> external;
      if (!labels_path.empty()) external = labels_by_id(labels_path);
      Output out(out_path);
      for (const auto& p : editkit::read_pairs(pairs_path)) {
        const auto labels = labels_for(p, labels_path.empty() ? nullptr : &external);
        const auto t = build_for_mode(mode, p, slots_for(p, slot_source, stopwords), labels, tables);
        editkit::jsonl::write_line(out.stream(),
                                   {{"id", p.id},
                                    {"template", editkit::serialize(t, cfg.sentinel_style)},
                                    {"gap_count", t.gap_count}});
      }
    } else if (*train_cmd) {
      const Mode mode = parse_mode(mode_name);
      const auto tables = cfg.tables();
      const auto stopwords = cfg.stopwords();
      Output out(out_path);
      std::size_t skipped = 0;
      for (const auto& p : editkit::read_pairs(pairs_path)) {
        try {
          const auto alignment = editkit::align(p.formal, p.informal);
          const auto labels = editkit::to_tagger_example(alignment, p.formal);
          const auto t = build_for_mode(mode, p, slots_for(p, train_slot_source, stopwords),
                                        labels, tables);
          const auto ex = editkit::make_infill_example(p, t, alignment, cfg.sentinel_style);
          editkit::jsonl::write_line(out.stream(), editkit::to_json(p.id, ex));
        } catch (const InputError& e) {
          if (!skip_invalid) throw InputError("pair \"" + p.id + "\": " + e.what());
          ++skipped;
        }
      }
      if (skipped) std::cerr << "skipped " << skipped << " pair(s)\n";
    } else if (*fill_cmd) {
      std::map<std::string, std::vector<std::string>> fillers;
      std::map<std::string, std::string> targets;
      editkit::jsonl::for_each(infills_path, [&](const Json& obj, std::size_t line_no) {
        const std::string id = editkit::jsonl::require_string(obj, "id", infills_path, line_no);
        if (fillers.count(id) || targets.count(id)) {
          throw InputError(editkit::jsonl::where(infills_path, line_no) + ": duplicate id \"" + id + "\"");
        }
        if (obj.contains("fillers")) {
          const auto& f = obj["fillers"];
          if (!f.is_array()) {
            throw InputError(editkit::jsonl::where(infills_path, line_no) +
                             ": field \"fillers\" must be an array of strings");
          }
          std::vector<std::string> v;
          for (const auto& x : f) {
            if (!x.is_string()) {
              throw InputError(editkit::jsonl::where(infills_path, line_no) +
                               ": field \"fillers\" must be an array of strings");
            }
            v.push_back(editkit::unicode::nfc(x.get<std::string>()));
          }
          fillers.emplace(id, std::move(v));
        } else {
          targets.emplace(id, editkit::unicode::nfc(editkit::jsonl::require_string(
                                  obj, "target_text", infills_path, line_no)));
        }
      });
      Output out(out_path);
      editkit::jsonl::for_each(templates_path, [&](const Json& obj, std::size_t line_no) {
        const std::string id = editkit::jsonl::require_string(obj, "id", templates_path, line_no);
        const auto t = editkit::parse_template(
            editkit::jsonl::require_string(obj, "template", templates_path, line_no));
        std::vector<std::string> f;
        if (auto it = fillers.find(id); it != fillers.end()) {
          f = it->second;
        } else if (auto jt = targets.find(id); jt != targets.end()) {
          f = editkit::parse_fillers(jt->second, t.gap_count);
        } else {
          throw InputError("no infiller output for id \"" + id + "\"");
        }
        editkit::jsonl::write_line(out.stream(),
                                   {{"id", id}, {"text", editkit::fill_template(t, f)}});
      });
    } else if (*score_cmd) {
      const auto pairs = editkit::read_pairs(pairs_path);
      const auto scores = editkit::corpus_slot_scores(pairs, editkit::read_hypotheses(hyps_path),
                                                      cfg.tables(), cfg.slot_metric());
      Output out(out_path);
      for (const auto& p : pairs) {
        editkit::jsonl::write_line(out.stream(), editkit::to_json(p.id, scores.at(p.id)));
      }
    } else if (*chrf_cmd) {
      editkit::ChrfParams params{cfg.chrf_beta, cfg.chrf_max_n};
      Output out(out_path);
      auto emit = [&](double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out.stream() << buf << '\n';
      };
      if (chrf_hyp || chrf_ref) {
        if (!chrf_hyp || !chrf_ref) throw InputError("chrf: --hyp and --ref go together");
        emit(editkit::chrf(*chrf_hyp, *chrf_ref, params));
      } else if (!chrf_hyps_file.empty() && !chrf_refs_file.empty()) {
        std::ifstream hin(chrf_hyps_file), rin(chrf_refs_file);
        std::string h, r;
        std::size_t line_no = 0;
        while (true) {
          const bool gh = static_cast<bool>(std::getline(hin, h));
          const bool gr = static_cast<bool>(std::getline(rin, r));
          if (!gh && !gr) break;
          ++line_no;
          if (gh != gr) throw InputError("chrf: hypothesis and reference files differ in length");
          try {
            emit(editkit::chrf(h, r, params));
          } catch (const InputError& e) {
            throw InputError("line " + std::to_string(line_no) + ": " + e.what());
          }
        }
      } else {
        throw InputError("chrf: give --hyp/--ref or --hyp-file/--ref-file");
      }
    } else if (*eval_cmd) {
      if (sys_hyps.size() != sys_scores.size()) {
        throw InputError("evaluate: --hyps and --scores must be given once per system");
      }
      if (!sys_names.empty() && sys_names.size() != sys_hyps.size()) {
        throw InputError("evaluate: --name must be given once per system");
      }
      if (sys_sections.size() > 1 && sys_sections.size() != sys_hyps.size()) {
        throw InputError("evaluate: --section must be given once or once per system");
      }
      const auto pairs = editkit::read_pairs(pairs_path);
      std::vector<std::string> ids;
      for (const auto& p : pairs) ids.push_back(p.id);
      const auto tables = cfg.tables();
      std::vector<editkit::SystemScores> systems;
      for (std::size_t i = 0; i < sys_hyps.size(); ++i) {
        editkit::SystemScores sys;
        sys.name = sys_names.empty() ? std::filesystem::path(sys_hyps[i]).stem().string()
                                     : sys_names[i];
        sys.section = sys_sections.empty() ? "" : sys_sections.size() == 1 ? sys_sections[0]
                                                                         : sys_sections[i];
        sys.external = editkit::read_scores(sys_scores[i]);
        for (const auto& [id, s] : editkit::corpus_slot_scores(
                 pairs, editkit::read_hypotheses(sys_hyps[i]), tables, cfg.slot_metric())) {
          sys.slot.emplace(id, s.value);
        }
        systems.push_back(std::move(sys));
      }
      const auto board = editkit::build_leaderboard(systems, ids);
      {
        Output out(out_tsv);
        editkit::write_tsv(board, out.stream());
      }
      if (!out_json.empty()) {
        Output out(out_json);
        out.stream() << editkit::to_json(board).dump(2) << '\n';
      }
      if (!records_dir.empty()) {
        std::filesystem::create_directories(records_dir);
        for (const auto& sys : systems) {
          Output out((std::filesystem::path(records_dir) / (sys.name + ".records.jsonl")).string());
          for (const auto& r : editkit::join_records(sys, ids)) {
            editkit::jsonl::write_line(out.stream(), editkit::to_json(r));
          }
        }
      }
    } else if (*sig_cmd) {
      if (!cfg.seed) throw InputError("significance: --seed is required");
      const auto res = editkit::significance_by_splits(editkit::read_products(sig_a),
                                                       editkit::read_products(sig_b),
                                                       n_splits, split_size, *cfg.seed);
      Json j = {{"statistic", res.test.statistic},
                {"p_value", res.test.p_value},
                {"n", res.test.n},
                {"exact", res.test.exact},
                {"significant", res.test.p_value < 0.05},
                {"splits", n_splits},
                {"split_size", split_size},
                {"seed", *cfg.seed},
                {"means_a", res.means_a},
                {"means_b", res.means_b}};
      Output out(out_path);
      out.stream() << j.dump(2) << '\n';
    } else if (*filter_cmd) {
      const auto cands = editkit::read_candidates(cands_path);
      const auto kept = editkit::filter_by_informality(cands, threshold);
      const auto flagged = editkit::flag_rewrites(kept, *sim_threshold);
      std::map<std::string, editkit::SlotSet> slot_map;
      if (!slot_map_path.empty()) {
        slot_map = editkit::read_slot_map(slot_map_path);
      } else {
        for (const auto& c : flagged) slot_map.emplace(c.pair.id, c.pair.slots);
      }
      const auto attached = editkit::attach_slots(flagged, slot_map);
      Output out(out_path);
      editkit::write_pairs(attached.pairs, out.stream());
      Output work(worklist_path);
      std::size_t n_flagged = 0;
      for (const auto& c : flagged) {
        if (!c.needs_rewrite) continue;
        ++n_flagged;
        editkit::jsonl::write_line(work.stream(), editkit::to_json(c));
      }
      Json report = {{"candidates", cands.size()},
                     {"kept", kept.size()},
                     {"flagged", n_flagged},
                     {"threshold", threshold},
                     {"sim_threshold", *sim_threshold},
                     {"missing_slots", attached.missing_slot_ids}};
      Output rep(report_path);
      rep.stream() << report.dump(2) << '\n';
      if (!attached.missing_slot_ids.empty()) {
        std::cerr << "warning: " << attached.missing_slot_ids.size()
                  << " pair(s) without slots (see " << report_path << ")\n";
      }
    } else if (*stats_cmd) {
      std::vector<std::vector<editkit::EditTag>> seqs;
      std::size_t tokens = 0;
      for (const auto& rec : editkit::read_tagger_examples(tags_path)) {
        tokens += rec.example.labels.size();
        seqs.push_back(rec.example.labels);
      }
      const auto dist = editkit::tag_distribution(seqs);
      Json j = Json::object();
      for (auto t : {editkit::EditTag::kEqual, editkit::EditTag::kReplace,
                     editkit::EditTag::kDelete, editkit::EditTag::kInsert}) {
        auto it = dist.find(t);
        j[tag_name(t)] = it == dist.end() ? 0.0 : it->second;
      }
      j["tokens"] = tokens;
      Output out(out_path);
      out.stream() << j.dump(2) << '\n';
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const editkit::InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
