// Copyright 2026 The N2T Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// n2t: narrative-to-trajectory command line tool.
//
//   n2t ingest <gazetteer>
//   n2t extract <narrative> --gazetteer G [--method all] [--format svg] ...
//   n2t evaluate <corpus_dir> <truth.json> --gazetteer G
//   n2t tag <narrative> --gazetteer G
//
// Exit status: 0 success, 1 empty or degenerate result, 2 configuration or
// input error.

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "n2t/n2t.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitEmpty = 1;
constexpr int kExitConfig = 2;

struct Options {
  std::string gazetteer;
  std::string lexicon;
  std::string homonyms;
  std::string stoplist;
  std::string abbrev;
  std::string method = "mwt-geo";
  std::string policy = "population";
  std::int64_t min_population = 0;
  std::string format;
  std::string out;
  bool collapse_repeats = false;

  std::string ingest_path;
  std::string narrative_path;
  std::string corpus_dir;
  std::string truth_path;
};

struct PipelineDeleter {
  void operator()(n2t_pipeline* p) const { n2t_pipeline_destroy(p); }
};
struct TrajectoryDeleter {
  void operator()(n2t_trajectory* t) const { n2t_trajectory_destroy(t); }
};
struct ReportDeleter {
  void operator()(n2t_report* r) const { n2t_report_destroy(r); }
};
using Pipeline = std::unique_ptr<n2t_pipeline, PipelineDeleter>;
using TrajectoryPtr = std::unique_ptr<n2t_trajectory, TrajectoryDeleter>;
using ReportPtr = std::unique_ptr<n2t_report, ReportDeleter>;

int exit_code(n2t_status status) {
  return status == N2T_ERR_EMPTY ? kExitEmpty : kExitConfig;
}

int report_error(n2t_status status, const std::string& context) {
  std::cerr << "n2t: " << context << ": " << n2t_last_error() << "\n";
  return exit_code(status);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  n2t_string_free(s);
  return out;
}

bool write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return static_cast<bool>(std::cout);
  }
  std::ofstream f(path, std::ios::binary);
  f << content;
  if (!f) {
    std::cerr << "n2t: cannot write '" << path << "'\n";
    return false;
  }
  return true;
}

std::string extension_of(const std::string& path) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return "";
  return path.substr(dot + 1);
}

// "route.geojson" + "st" -> "route.st.geojson"
std::string with_suffix(const std::string& path, const std::string& suffix) {
  const std::string ext = extension_of(path);
  if (ext.empty()) return path + "." + suffix;
  return path.substr(0, path.size() - ext.size() - 1) + "." + suffix + "." + ext;
}

std::optional<n2t_format> parse_format(const std::string& text) {
  if (text == "json") return N2T_FORMAT_JSON;
  if (text == "geojson") return N2T_FORMAT_GEOJSON;
  if (text == "svg") return N2T_FORMAT_SVG;
  return std::nullopt;
}

// Builds the pipeline from the shared options. Returns an exit code on
// failure.
std::optional<int> configure(const Options& opt, Pipeline& pipeline) {
  n2t_pipeline* raw = nullptr;
  if (n2t_status s = n2t_pipeline_create(&raw); s != N2T_OK) {
    return report_error(s, "pipeline");
  }
  pipeline.reset(raw);
  if (opt.gazetteer.empty()) {
    std::cerr << "n2t: --gazetteer is required\n";
    return kExitConfig;
  }
  n2t_pipeline* p = pipeline.get();
  if (n2t_status s = n2t_pipeline_load_gazetteer(p, opt.gazetteer.c_str()); s != N2T_OK) {
    // A gazetteer without a single valid row is a configuration problem
    // for every command except ingest.
    report_error(s, "gazetteer");
    return kExitConfig;
  }
  struct Loader {
    const std::string& path;
    n2t_status (*fn)(n2t_pipeline*, const char*);
    const char* what;
  };
  const std::array<Loader, 4> loaders{{
      {opt.homonyms, n2t_pipeline_load_homonyms, "homonyms"},
      {opt.lexicon, n2t_pipeline_load_lexicon, "lexicon"},
      {opt.stoplist, n2t_pipeline_load_stoplist, "stoplist"},
      {opt.abbrev, n2t_pipeline_load_abbreviations, "abbreviations"},
  }};
  for (const Loader& l : loaders) {
    if (l.path.empty()) continue;
    if (n2t_status s = l.fn(p, l.path.c_str()); s != N2T_OK) {
      report_error(s, l.what);
      return kExitConfig;
    }
  }
  if (n2t_status s = n2t_pipeline_set_policy(p, opt.policy.c_str()); s != N2T_OK) {
    report_error(s, "policy");
    return kExitConfig;
  }
  if (n2t_status s = n2t_pipeline_set_min_population(p, opt.min_population); s != N2T_OK) {
    report_error(s, "min-population");
    return kExitConfig;
  }
  n2t_pipeline_set_collapse_repeats(p, opt.collapse_repeats ? 1 : 0);
  return std::nullopt;
}

int cmd_ingest(const Options& opt) {
  n2t_pipeline* raw = nullptr;
  if (n2t_status s = n2t_pipeline_create(&raw); s != N2T_OK) return report_error(s, "pipeline");
  Pipeline pipeline(raw);
  const n2t_status s = n2t_pipeline_load_gazetteer(raw, opt.ingest_path.c_str());
  if (s != N2T_OK) return report_error(s, opt.ingest_path);

  n2t_gazetteer_stats stats{};
  n2t_pipeline_gazetteer_stats(raw, &stats);
  std::ostringstream out;
  out << "entries: " << stats.entries << "\n"
      << "index keys: " << stats.index_keys << "\n"
      << "lines read: " << stats.lines_read << "\n"
      << "lines skipped: " << stats.lines_skipped << "\n"
      << "multi-word names: " << stats.lexicon_entries << "\n";
  const size_t shown = std::min<size_t>(stats.lines_skipped, 20);
  for (size_t i = 0; i < shown; ++i) {
    size_t line = 0;
    const char* message = nullptr;
    n2t_pipeline_diagnostic(raw, i, &line, &message);
    std::cerr << opt.ingest_path << ":" << line << ": " << message << "\n";
  }
  if (stats.lines_skipped > shown) {
    std::cerr << "... " << (stats.lines_skipped - shown) << " more skipped lines\n";
  }
  return write_output(opt.out, out.str()) ? kExitOk : kExitConfig;
}

int cmd_extract(const Options& opt) {
  std::vector<n2t_method> methods;
  if (opt.method == "all") {
    methods = {N2T_METHOD_ST, N2T_METHOD_ST_GEO_AUG, N2T_METHOD_MWT,
               N2T_METHOD_MWT_GEO_AUG};
  } else {
    n2t_method m{};
    if (n2t_method_parse(opt.method.c_str(), &m) != N2T_OK) {
      std::cerr << "n2t: " << n2t_last_error() << "\n";
      return kExitConfig;
    }
    methods = {m};
  }

  std::string format_name = opt.format;
  if (format_name.empty()) {
    const std::string ext = extension_of(opt.out);
    format_name = ext == "geojson" || ext == "svg" ? ext : "json";
  }
  const auto format = parse_format(format_name);
  if (!format) {
    std::cerr << "n2t: unknown format '" << format_name << "'\n";
    return kExitConfig;
  }
  if (methods.size() > 1 && *format == N2T_FORMAT_SVG && opt.out.empty()) {
    std::cerr << "n2t: --method all with svg output requires --out\n";
    return kExitConfig;
  }

  Pipeline pipeline;
  if (auto code = configure(opt, pipeline)) return *code;
  n2t_gazetteer_stats stats{};
  n2t_pipeline_gazetteer_stats(pipeline.get(), &stats);

  std::string combined;
  for (size_t i = 0; i < methods.size(); ++i) {
    const n2t_method m = methods[i];
    if ((m == N2T_METHOD_MWT || m == N2T_METHOD_MWT_GEO_AUG) && stats.lexicon_entries == 0) {
      std::cerr << "n2t: warning: multi-word lexicon is empty; " << n2t_method_name(m)
                << " falls back to single-word matching\n";
    }
    n2t_trajectory* raw = nullptr;
    if (n2t_status s = n2t_extract_file(pipeline.get(), opt.narrative_path.c_str(), m, &raw);
        s != N2T_OK) {
      return report_error(s, opt.narrative_path);
    }
    TrajectoryPtr tr(raw);
    char* rendered = nullptr;
    if (n2t_status s = n2t_trajectory_render(tr.get(), *format, &rendered); s != N2T_OK) {
      return report_error(s, "render");
    }
    const std::string doc = take(rendered);
    std::cerr << n2t_method_name(m) << " visits: " << n2t_trajectory_size(tr.get()) << "\n";

    if (methods.size() == 1) {
      if (!write_output(opt.out, doc)) return kExitConfig;
    } else if (!opt.out.empty()) {
      if (!write_output(with_suffix(opt.out, n2t_method_flag(m)), doc)) return kExitConfig;
    } else {
      // One JSON object keyed by method.
      std::string body = doc;
      while (!body.empty() && body.back() == '\n') body.pop_back();
      combined += (i == 0 ? "{\n\"" : ",\n\"") + std::string(n2t_method_name(m)) +
                  "\": " + body;
    }
  }
  if (!combined.empty() && !write_output("", combined + "\n}\n")) return kExitConfig;
  return kExitOk;
}

int cmd_evaluate(const Options& opt) {
  Pipeline pipeline;
  if (auto code = configure(opt, pipeline)) return *code;
  n2t_report* raw = nullptr;
  if (n2t_status s = n2t_evaluate(pipeline.get(), opt.corpus_dir.c_str(),
                                  opt.truth_path.c_str(), &raw);
      s != N2T_OK) {
    return report_error(s, "evaluate");
  }
  ReportPtr report(raw);
  char* text = nullptr;
  const bool json_stdout = opt.format == "json" && opt.out.empty();
  if (opt.format == "json" || !opt.out.empty()) {
    if (n2t_status s = n2t_report_json(report.get(), &text); s != N2T_OK) {
      return report_error(s, "report");
    }
    if (!write_output(opt.out, take(text))) return kExitConfig;
  }
  if (!json_stdout) {
    if (n2t_status s = n2t_report_table(report.get(), &text); s != N2T_OK) {
      return report_error(s, "report");
    }
    std::cout << take(text);
  }
  return kExitOk;
}

int cmd_tag(const Options& opt) {
  Pipeline pipeline;
  if (auto code = configure(opt, pipeline)) return *code;
  std::ifstream in(opt.narrative_path, std::ios::binary);
  if (!in) {
    std::cerr << "n2t: cannot open '" << opt.narrative_path << "'\n";
    return kExitConfig;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  char* out = nullptr;
  if (n2t_status s = n2t_tag_text(pipeline.get(), text.data(), text.size(), &out); s != N2T_OK) {
    return report_error(s, "tag");
  }
  return write_output(opt.out, take(out)) ? kExitOk : kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Turn trafficking-route narratives into geospatial trajectories."};
  app.set_version_flag("--version", std::string(n2t_version()));
  app.set_config("--config", "", "TOML/INI file supplying any of the options below")
      ->envname("N2T_CONFIG");
  app.require_subcommand(1);
  app.fallthrough();

  app.add_option("--gazetteer", opt.gazetteer, "GeoNames-format gazetteer (TSV)");
  app.add_option("--lexicon", opt.lexicon, "extra multi-word names, one per line");
  app.add_option("--homonyms", opt.homonyms, "homonym supplement: <geoname_id>\\t<name>");
  app.add_option("--stoplist", opt.stoplist, "geo-stoplist, one word per line");
  app.add_option("--abbrev", opt.abbrev, "abbreviations that do not end sentences");
  app.add_option("--method", opt.method, "st | st-geo | mwt | mwt-geo | all")
      ->capture_default_str();
  app.add_option("--policy", opt.policy, "population | feature | country:CC,...")
      ->capture_default_str();
  app.add_option("--min-population", opt.min_population,
                 "ignore gazetteer entries below this population (0 = off)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--format", opt.format, "json | geojson | svg (default: from --out)")
      ->check(CLI::IsMember({"json", "geojson", "svg"}));
  app.add_option("--out", opt.out, "output path (default: stdout)");
  app.add_flag("--collapse-repeats", opt.collapse_repeats,
               "merge consecutive visits to the same place");

  auto* ingest = app.add_subcommand("ingest", "index a gazetteer and print counts");
  ingest->add_option("gazetteer", opt.ingest_path, "GeoNames-format file")->required();

  auto* extract = app.add_subcommand("extract", "extract a trajectory from a narrative");
  extract->add_option("narrative", opt.narrative_path, "UTF-8 narrative text")->required();

  auto* evaluate = app.add_subcommand("evaluate", "score all four methods on a corpus");
  evaluate->add_option("corpus", opt.corpus_dir, "directory of narratives")->required();
  evaluate->add_option("truth", opt.truth_path, "ground-truth JSON")->required();

  auto* tag = app.add_subcommand("tag", "print POS-tagged 5-tuples for a narrative");
  tag->add_option("narrative", opt.narrative_path, "UTF-8 narrative text")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (ingest->parsed()) return cmd_ingest(opt);
  if (extract->parsed()) return cmd_extract(opt);
  if (evaluate->parsed()) return cmd_evaluate(opt);
  return cmd_tag(opt);
}
