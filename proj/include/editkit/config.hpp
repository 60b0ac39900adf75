#pragma once

// Run configuration: defaults, then a key=value file, then EDITKIT_*
// environment variables, then command-line flags (applied by the caller).

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "editkit/chrf.hpp"
#include "editkit/errors.hpp"
#include "editkit/slotmetric.hpp"
#include "editkit/template.hpp"
#include "editkit/textnorm.hpp"

namespace editkit {

struct Config {
  double chrf_beta = 2.0;
  int chrf_max_n = 6;
  double approx_floor = 0.1;
  SentinelStyle sentinel_style = SentinelStyle::kGap;
  std::optional<std::uint64_t> seed;
  std::string aliases_path;
  std::string abbreviations_path;
  std::string number_words_path;
  std::string stopwords_path;

  // Keys accepted in config files and as EDITKIT_<KEY> variables.
  static constexpr std::string_view kKeys[] = {
      "chrf_beta",          "chrf_max_n",        "approx_floor",  "sentinel_style",
      "seed",               "aliases_path",      "abbreviations_path",
      "number_words_path",  "stopwords_path"};

  void set(std::string_view key, const std::string& value, const std::string& origin) {
    auto bad = [&](const char* what) {
      return InputError(origin + ": " + std::string(key) + "=" + value + ": " + what);
    };
    try {
      std::size_t used = 0;
      if (key == "chrf_beta") {
        chrf_beta = std::stod(value, &used);
        if (used != value.size() || !(chrf_beta > 0.0)) throw bad("expected a positive number");
      } else if (key == "chrf_max_n") {
        chrf_max_n = std::stoi(value, &used);
        if (used != value.size() || chrf_max_n < 1 || chrf_max_n > 16)
          throw bad("expected an integer in [1,16]");
      } else if (key == "approx_floor") {
        approx_floor = std::stod(value, &used);
        if (used != value.size() || approx_floor < 0.0 || approx_floor > 1.0)
          throw bad("expected a number in [0,1]");
      } else if (key == "sentinel_style") {
        if (value == "gap") sentinel_style = SentinelStyle::kGap;
        else if (value == "t5") sentinel_style = SentinelStyle::kT5;
        else throw bad("expected gap or t5");
      } else if (key == "seed") {
        seed = std::stoull(value, &used);
        if (used != value.size()) throw bad("expected a non-negative integer");
      } else if (key == "aliases_path") {
        aliases_path = value;
      } else if (key == "abbreviations_path") {
        abbreviations_path = value;
      } else if (key == "number_words_path") {
        number_words_path = value;
      } else if (key == "stopwords_path") {
        stopwords_path = value;
      } else {
        throw InputError(origin + ": unknown configuration key \"" + std::string(key) + "\"");
      }
    } catch (const std::invalid_argument&) {
      throw bad("malformed value");
    } catch (const std::out_of_range&) {
      throw bad("value out of range");
    }
  }

  void load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config file " + path);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      const std::string t = detail::trim(line);
      if (t.empty() || t.front() == '#') continue;
      const auto eq = t.find('=');
      if (eq == std::string::npos) {
        throw InputError(path + ":" + std::to_string(line_no) + ": expected key=value");
      }
      set(detail::trim(t.substr(0, eq)), detail::trim(t.substr(eq + 1)),
          path + ":" + std::to_string(line_no));
    }
  }

  void load_env() {
    for (auto key : kKeys) {
      std::string var = "EDITKIT_";
      for (char c : key) var += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (const char* v = std::getenv(var.c_str())) set(key, v, var);
    }
  }

  SlotMetricConfig slot_metric() const {
    SlotMetricConfig c;
    c.chrf.beta = chrf_beta;
    c.chrf.max_n = chrf_max_n;
    c.approx_floor = approx_floor;
    return c;
  }

  NormTables tables() const {
    if (aliases_path.empty() && abbreviations_path.empty() && number_words_path.empty()) {
      return default_tables();
    }
    return NormTables::load(aliases_path, abbreviations_path, number_words_path);
  }

  Stopwords stopwords() const {
    if (stopwords_path.empty()) return default_stopwords();
    return Stopwords::parse(detail::read_file(stopwords_path));
  }
};

}  // namespace editkit
