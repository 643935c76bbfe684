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

#include "n2t/n2t.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "n2t/chart.hpp"
#include "n2t/corpus.hpp"
#include "n2t/error.hpp"
#include "n2t/eval.hpp"
#include "n2t/extract.hpp"
#include "n2t/gazetteer.hpp"

struct n2t_pipeline {
  n2t::LocationDimension dim;
  bool has_gazetteer = false;
  std::size_t lines_read = 0;
  std::vector<n2t::IngestDiagnostic> diagnostics;
  std::vector<std::string> extra_names;
  n2t::MWLexicon lexicon;
  n2t::ExtractConfig config;

  void rebuild_lexicon() { lexicon = n2t::derive_mw_lexicon(dim, extra_names); }
};

struct n2t_trajectory {
  n2t::Trajectory trajectory;
  std::vector<n2t::GazetteerEntry> entries;  // owned copies of resolved rows
};

struct n2t_report {
  n2t::ComparisonReport report;
};

namespace {

thread_local std::string g_last_error;

n2t_status to_status(n2t::ErrorCode code) {
  switch (code) {
    case n2t::ErrorCode::kIo: return N2T_ERR_IO;
    case n2t::ErrorCode::kParse: return N2T_ERR_PARSE;
    case n2t::ErrorCode::kEmpty: return N2T_ERR_EMPTY;
    case n2t::ErrorCode::kInvalidArgument: return N2T_ERR_INVALID_ARGUMENT;
    case n2t::ErrorCode::kNotFound: return N2T_ERR_NOT_FOUND;
  }
  return N2T_ERR_INTERNAL;
}

n2t_status fail(n2t_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Fn>
n2t_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const n2t::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(N2T_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(N2T_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(N2T_ERR_INTERNAL, "unknown error");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool valid_method(n2t_method m) {
  return m >= N2T_METHOD_ST && m <= N2T_METHOD_MWT_GEO_AUG;
}

n2t::MethodId to_method(n2t_method m) {
  return n2t::kAllMethods[static_cast<std::size_t>(m)];
}

#define N2T_REQUIRE(cond, msg) \
  if (!(cond)) return fail(N2T_ERR_INVALID_ARGUMENT, msg)

n2t_status require_gazetteer(const n2t_pipeline* p) {
  if (!p->has_gazetteer) return fail(N2T_ERR_INVALID_ARGUMENT, "no gazetteer loaded");
  return N2T_OK;
}

n2t_status finish_ingest(n2t_pipeline* p, n2t::IngestResult result) {
  p->dim = std::move(result.dimension);
  p->lines_read = result.lines_read;
  p->diagnostics = std::move(result.diagnostics);
  p->has_gazetteer = true;
  p->rebuild_lexicon();
  return N2T_OK;
}

n2t_status make_trajectory(n2t::Trajectory tr, n2t_trajectory** out) {
  auto handle = std::make_unique<n2t_trajectory>();
  handle->entries.reserve(tr.visits.size());
  for (const n2t::GeoToken& v : tr.visits) {
    handle->entries.push_back(v.entry ? *v.entry : n2t::GazetteerEntry{});
  }
  for (std::size_t i = 0; i < tr.visits.size(); ++i) {
    tr.visits[i].entry = &handle->entries[i];
  }
  handle->trajectory = std::move(tr);
  *out = handle.release();
  return N2T_OK;
}

}  // namespace

extern "C" {

const char* n2t_version(void) { return "0.1.0"; }

const char* n2t_last_error(void) { return g_last_error.c_str(); }

const char* n2t_status_string(n2t_status status) {
  switch (status) {
    case N2T_OK: return "ok";
    case N2T_ERR_IO: return "i/o error";
    case N2T_ERR_PARSE: return "parse error";
    case N2T_ERR_EMPTY: return "empty input";
    case N2T_ERR_INVALID_ARGUMENT: return "invalid argument";
    case N2T_ERR_NOT_FOUND: return "not found";
    case N2T_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void n2t_string_free(char* s) { std::free(s); }

n2t_status n2t_method_parse(const char* text, n2t_method* out) {
  N2T_REQUIRE(text && out, "null argument");
  const auto m = n2t::parse_method(text);
  if (!m) {
    return fail(N2T_ERR_INVALID_ARGUMENT, std::string("unknown method '") + text +
                                              "' (expected st, st-geo, mwt or mwt-geo)");
  }
  *out = static_cast<n2t_method>(*m);
  return N2T_OK;
}

const char* n2t_method_name(n2t_method method) {
  if (!valid_method(method)) return "";
  return n2t::method_name(to_method(method)).data();
}

const char* n2t_method_flag(n2t_method method) {
  if (!valid_method(method)) return "";
  return n2t::method_flag(to_method(method)).data();
}

n2t_status n2t_pipeline_create(n2t_pipeline** out) {
  N2T_REQUIRE(out, "null argument");
  return guarded([&] {
    *out = new n2t_pipeline();
    return N2T_OK;
  });
}

void n2t_pipeline_destroy(n2t_pipeline* p) { delete p; }

n2t_status n2t_pipeline_load_gazetteer(n2t_pipeline* p, const char* path) {
  N2T_REQUIRE(p && path, "null argument");
  return guarded([&] { return finish_ingest(p, n2t::ingest_geonames_file(path)); });
}

n2t_status n2t_pipeline_load_gazetteer_text(n2t_pipeline* p, const char* data,
                                            size_t len) {
  N2T_REQUIRE(p && (data || len == 0), "null argument");
  return guarded([&] {
    return finish_ingest(p, n2t::ingest_geonames(std::string_view(data ? data : "", len)));
  });
}

n2t_status n2t_pipeline_gazetteer_stats(const n2t_pipeline* p,
                                        n2t_gazetteer_stats* out) {
  N2T_REQUIRE(p && out, "null argument");
  out->entries = p->dim.size();
  out->index_keys = p->dim.key_count();
  out->lines_read = p->lines_read;
  out->lines_skipped = p->diagnostics.size();
  out->lexicon_entries = p->lexicon.size();
  return N2T_OK;
}

size_t n2t_pipeline_diagnostic_count(const n2t_pipeline* p) {
  return p ? p->diagnostics.size() : 0;
}

n2t_status n2t_pipeline_diagnostic(const n2t_pipeline* p, size_t i, size_t* line,
                                   const char** message) {
  N2T_REQUIRE(p && line && message, "null argument");
  if (i >= p->diagnostics.size()) return fail(N2T_ERR_NOT_FOUND, "diagnostic index out of range");
  *line = p->diagnostics[i].line;
  *message = p->diagnostics[i].message.c_str();
  return N2T_OK;
}

n2t_status n2t_pipeline_load_homonyms(n2t_pipeline* p, const char* path) {
  N2T_REQUIRE(p && path, "null argument");
  if (n2t_status s = require_gazetteer(p); s != N2T_OK) return s;
  return guarded([&] {
    std::istringstream in(n2t::read_file(path));
    const auto pairs = n2t::parse_homonym_supplement(in);
    n2t::apply_homonyms(p->dim, pairs);
    p->rebuild_lexicon();
    return N2T_OK;
  });
}

n2t_status n2t_pipeline_add_homonym(n2t_pipeline* p, int64_t geoname_id,
                                    const char* name) {
  N2T_REQUIRE(p && name, "null argument");
  if (n2t_status s = require_gazetteer(p); s != N2T_OK) return s;
  return guarded([&] {
    const std::string n(name);
    if (p->dim.add_homonyms(geoname_id, std::span<const std::string>(&n, 1)) > 0) {
      p->lexicon.add_name(n);
    }
    return N2T_OK;
  });
}

n2t_status n2t_pipeline_load_lexicon(n2t_pipeline* p, const char* path) {
  N2T_REQUIRE(p && path, "null argument");
  return guarded([&] {
    for (std::string& name : n2t::load_word_list(path)) {
      p->lexicon.add_name(name);
      p->extra_names.push_back(std::move(name));
    }
    return N2T_OK;
  });
}

n2t_status n2t_pipeline_load_stoplist(n2t_pipeline* p, const char* path) {
  N2T_REQUIRE(p && path, "null argument");
  return guarded([&] {
    std::unordered_set<std::string> stoplist;
    for (const std::string& w : n2t::load_word_list(path)) {
      stoplist.insert(n2t::NameKey(w).str());
    }
    p->config.geo_stoplist = std::move(stoplist);
    return N2T_OK;
  });
}

n2t_status n2t_pipeline_load_abbreviations(n2t_pipeline* p, const char* path) {
  N2T_REQUIRE(p && path, "null argument");
  return guarded([&] {
    p->config.tokenizer.abbreviations = n2t::load_word_list(path);
    return N2T_OK;
  });
}

n2t_status n2t_pipeline_load_initial_stoplist(n2t_pipeline* p, const char* path) {
  N2T_REQUIRE(p && path, "null argument");
  return guarded([&] {
    std::unordered_set<std::string> words;
    for (std::string w : n2t::load_word_list(path)) {
      for (char& c : w) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
      }
      words.insert(std::move(w));
    }
    p->config.tokenizer.sentence_initial_stoplist = std::move(words);
    return N2T_OK;
  });
}

n2t_status n2t_pipeline_set_policy(n2t_pipeline* p, const char* policy) {
  N2T_REQUIRE(p && policy, "null argument");
  return guarded([&] {
    p->config.policy = n2t::DisambiguationPolicy::parse(policy);
    return N2T_OK;
  });
}

n2t_status n2t_pipeline_set_min_population(n2t_pipeline* p, int64_t min) {
  N2T_REQUIRE(p, "null argument");
  N2T_REQUIRE(min >= 0, "population threshold must be non-negative");
  p->config.min_population = min;
  return N2T_OK;
}

n2t_status n2t_pipeline_set_collapse_repeats(n2t_pipeline* p, int enabled) {
  N2T_REQUIRE(p, "null argument");
  p->config.collapse_repeats = enabled != 0;
  return N2T_OK;
}

n2t_status n2t_extract_text(const n2t_pipeline* p, const char* id, const char* text,
                            size_t len, n2t_method method, n2t_trajectory** out) {
  N2T_REQUIRE(p && out && (text || len == 0), "null argument");
  N2T_REQUIRE(valid_method(method), "invalid method");
  if (n2t_status s = require_gazetteer(p); s != N2T_OK) return s;
  return guarded([&] {
    n2t::RawNarrative raw;
    raw.id = id ? id : "";
    raw.text.assign(text ? text : "", len);
    return make_trajectory(
        n2t::run_method(raw, to_method(method), p->dim, &p->lexicon, p->config), out);
  });
}

n2t_status n2t_extract_file(const n2t_pipeline* p, const char* path,
                            n2t_method method, n2t_trajectory** out) {
  N2T_REQUIRE(p && path && out, "null argument");
  N2T_REQUIRE(valid_method(method), "invalid method");
  if (n2t_status s = require_gazetteer(p); s != N2T_OK) return s;
  return guarded([&] {
    const n2t::RawNarrative raw = n2t::load_narrative(path);
    return make_trajectory(
        n2t::run_method(raw, to_method(method), p->dim, &p->lexicon, p->config), out);
  });
}

n2t_status n2t_tag_text(const n2t_pipeline* p, const char* text, size_t len,
                        char** out) {
  N2T_REQUIRE(p && out && (text || len == 0), "null argument");
  if (n2t_status s = require_gazetteer(p); s != N2T_OK) return s;
  return guarded([&] {
    const auto normalized = n2t::normalize(std::string_view(text ? text : "", len));
    const auto sentences = n2t::merge_multiwords(
        n2t::tokenize(normalized, p->config.tokenizer), p->lexicon);
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const n2t::TaggedTuple& t : n2t::tag_pos(sentences, p->dim, p->config)) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      row.push_back(t.value);
      row.push_back(n2t::pos_tag_name(t.tag));
      row.push_back(t.geo_flag ? 1 : 0);
      row.push_back(t.longitude ? nlohmann::ordered_json(*t.longitude) : nullptr);
      row.push_back(t.latitude ? nlohmann::ordered_json(*t.latitude) : nullptr);
      doc.push_back(std::move(row));
    }
    *out = duplicate(doc.dump() + "\n");
    return N2T_OK;
  });
}

void n2t_trajectory_destroy(n2t_trajectory* t) { delete t; }

const char* n2t_trajectory_id(const n2t_trajectory* t) {
  return t ? t->trajectory.narrative_id.c_str() : "";
}

size_t n2t_trajectory_size(const n2t_trajectory* t) {
  return t ? t->trajectory.visits.size() : 0;
}

n2t_status n2t_trajectory_visit(const n2t_trajectory* t, size_t i, n2t_visit* out) {
  N2T_REQUIRE(t && out, "null argument");
  if (i >= t->trajectory.visits.size()) return fail(N2T_ERR_NOT_FOUND, "visit index out of range");
  const n2t::GeoToken& v = t->trajectory.visits[i];
  const n2t::GeoPoint point = v.token.coordinates.value_or(n2t::GeoPoint{});
  out->sequence = i + 1;
  out->temporal_index = v.token.temporal_index;
  out->name = v.token.value.c_str();
  out->geoname_id = v.geoname_id;
  out->latitude = point.latitude;
  out->longitude = point.longitude;
  out->span_start = v.token.span.start;
  out->span_end = v.token.span.end;
  return N2T_OK;
}

n2t_status n2t_trajectory_render(const n2t_trajectory* t, n2t_format format,
                                 char** out) {
  N2T_REQUIRE(t && out, "null argument");
  return guarded([&] {
    switch (format) {
      case N2T_FORMAT_JSON: *out = duplicate(n2t::to_json(t->trajectory)); break;
      case N2T_FORMAT_GEOJSON: *out = duplicate(n2t::to_geojson(t->trajectory) + "\n"); break;
      case N2T_FORMAT_SVG: *out = duplicate(n2t::to_svg(t->trajectory)); break;
      default: return fail(N2T_ERR_INVALID_ARGUMENT, "invalid format");
    }
    return N2T_OK;
  });
}

n2t_status n2t_evaluate(const n2t_pipeline* p, const char* corpus_dir,
                        const char* truth_path, n2t_report** out) {
  N2T_REQUIRE(p && corpus_dir && truth_path && out, "null argument");
  if (n2t_status s = require_gazetteer(p); s != N2T_OK) return s;
  return guarded([&] {
    const auto corpus = n2t::load_corpus(corpus_dir);
    const auto truth = n2t::load_ground_truth_file(truth_path);
    auto report = std::make_unique<n2t_report>();
    report->report = n2t::compare_methods(corpus, truth, p->dim, &p->lexicon, p->config);
    *out = report.release();
    return N2T_OK;
  });
}

void n2t_report_destroy(n2t_report* r) { delete r; }

n2t_status n2t_report_score(const n2t_report* r, n2t_method method, n2t_score* out) {
  N2T_REQUIRE(r && out, "null argument");
  N2T_REQUIRE(valid_method(method), "invalid method");
  return guarded([&] {
    const n2t::MethodReport& m = r->report.method(to_method(method));
    out->true_positives = m.aggregate.true_positives;
    out->false_positives = m.aggregate.false_positives;
    out->false_negatives = m.aggregate.false_negatives;
    out->precision = m.aggregate.precision;
    out->recall = m.aggregate.recall;
    out->f1 = m.aggregate.f1;
    out->order_score = m.order_score;
    return N2T_OK;
  });
}

n2t_status n2t_report_json(const n2t_report* r, char** out) {
  N2T_REQUIRE(r && out, "null argument");
  return guarded([&] {
    *out = duplicate(n2t::report_to_json(r->report));
    return N2T_OK;
  });
}

n2t_status n2t_report_table(const n2t_report* r, char** out) {
  N2T_REQUIRE(r && out, "null argument");
  return guarded([&] {
    *out = duplicate(n2t::report_table(r->report));
    return N2T_OK;
  });
}

size_t n2t_report_skipped_count(const n2t_report* r) {
  return r ? r->report.skipped_ids.size() : 0;
}

const char* n2t_report_skipped_id(const n2t_report* r, size_t i) {
  if (!r || i >= r->report.skipped_ids.size()) return nullptr;
  return r->report.skipped_ids[i].c_str();
}

}  // extern "C"
