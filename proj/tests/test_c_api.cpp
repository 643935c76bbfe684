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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "n2t/n2t.h"

namespace {

std::string fixture(const char* name) { return std::string(N2T_FIXTURE_DIR) + "/" + name; }

struct Pipeline {
  n2t_pipeline* p = nullptr;
  Pipeline() { REQUIRE(n2t_pipeline_create(&p) == N2T_OK); }
  ~Pipeline() { n2t_pipeline_destroy(p); }
  void load() {
    REQUIRE(n2t_pipeline_load_gazetteer(p, fixture("mini_gazetteer.tsv").c_str()) == N2T_OK);
  }
};

std::string take(char* s) {
  std::string out = s;
  n2t_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("status strings and methods") {
  CHECK(std::string(n2t_status_string(N2T_OK)) == "ok");
  CHECK(std::string(n2t_status_string(N2T_ERR_PARSE)) == "parse error");
  n2t_method m{};
  CHECK(n2t_method_parse("mwt-geo", &m) == N2T_OK);
  CHECK(m == N2T_METHOD_MWT_GEO_AUG);
  CHECK(n2t_method_parse("ST", &m) == N2T_OK);
  CHECK(m == N2T_METHOD_ST);
  CHECK(n2t_method_parse("ner", &m) == N2T_ERR_INVALID_ARGUMENT);
  CHECK(std::string(n2t_last_error()).find("ner") != std::string::npos);
  CHECK(std::string(n2t_method_name(N2T_METHOD_ST_GEO_AUG)) == "ST_GEO_AUG");
  CHECK(std::string(n2t_method_flag(N2T_METHOD_MWT)) == "mwt");
  CHECK(std::string(n2t_version()) == "0.1.0");
}

TEST_CASE("gazetteer loading") {
  Pipeline pl;
  n2t_trajectory* t = nullptr;
  CHECK(n2t_extract_text(pl.p, "x", "Aleppo", 6, N2T_METHOD_ST, &t) ==
        N2T_ERR_INVALID_ARGUMENT);
  CHECK(std::string(n2t_last_error()) == "no gazetteer loaded");
  CHECK(n2t_pipeline_load_gazetteer(pl.p, "/nonexistent.tsv") == N2T_ERR_IO);
  CHECK(n2t_pipeline_load_gazetteer_text(pl.p, "bad\n", 4) == N2T_ERR_EMPTY);
  CHECK(std::string(n2t_last_error()) == "no valid entries");

  pl.load();
  n2t_gazetteer_stats stats{};
  REQUIRE(n2t_pipeline_gazetteer_stats(pl.p, &stats) == N2T_OK);
  CHECK(stats.entries == 500);
  CHECK(stats.lines_read == 500);
  CHECK(stats.lines_skipped == 0);
  CHECK(stats.lexicon_entries > 0);
  CHECK(n2t_pipeline_diagnostic_count(pl.p) == 0);

  const std::string text = "1\tKilis\tKilis\t\t36.7\t37.1\tP\tPPL\tTR\t\t\t\t\t\t1\t\t\t\t\n2\tbad\n";
  REQUIRE(n2t_pipeline_load_gazetteer_text(pl.p, text.data(), text.size()) == N2T_OK);
  REQUIRE(n2t_pipeline_diagnostic_count(pl.p) == 1);
  size_t line = 0;
  const char* message = nullptr;
  CHECK(n2t_pipeline_diagnostic(pl.p, 0, &line, &message) == N2T_OK);
  CHECK(line == 2);
  CHECK(n2t_pipeline_diagnostic(pl.p, 1, &line, &message) == N2T_ERR_NOT_FOUND);
  n2t_pipeline_gazetteer_stats(pl.p, &stats);
  CHECK(stats.lexicon_entries == 0);
}

TEST_CASE("extraction through the C interface") {
  Pipeline pl;
  pl.load();
  const std::string text = "From Aleppo to Kilis, then New York City.";
  n2t_trajectory* t = nullptr;
  REQUIRE(n2t_extract_text(pl.p, "n", text.data(), text.size(), N2T_METHOD_MWT_GEO_AUG, &t) ==
          N2T_OK);
  CHECK(std::string(n2t_trajectory_id(t)) == "n");
  REQUIRE(n2t_trajectory_size(t) == 3);
  n2t_visit v{};
  REQUIRE(n2t_trajectory_visit(t, 2, &v) == N2T_OK);
  CHECK(std::string(v.name) == "New York City");
  CHECK(v.geoname_id == 5128581);
  CHECK(v.sequence == 3);
  CHECK(v.span_start == 27);
  CHECK(n2t_trajectory_visit(t, 3, &v) == N2T_ERR_NOT_FOUND);

  char* out = nullptr;
  REQUIRE(n2t_trajectory_render(t, N2T_FORMAT_GEOJSON, &out) == N2T_OK);
  const auto doc = nlohmann::json::parse(take(out));
  CHECK(doc["features"].size() == 4);
  REQUIRE(n2t_trajectory_render(t, N2T_FORMAT_SVG, &out) == N2T_OK);
  CHECK(take(out).find("<polyline") != std::string::npos);
  REQUIRE(n2t_trajectory_render(t, N2T_FORMAT_JSON, &out) == N2T_OK);
  CHECK(nlohmann::json::parse(take(out))["visit_count"] == 3);
  CHECK(n2t_trajectory_render(t, static_cast<n2t_format>(9), &out) == N2T_ERR_INVALID_ARGUMENT);

  // The trajectory outlives a gazetteer reload.
  const std::string small = "1\tKilis\tKilis\t\t36.7\t37.1\tP\tPPL\tTR\t\t\t\t\t\t1\t\t\t\t\n";
  REQUIRE(n2t_pipeline_load_gazetteer_text(pl.p, small.data(), small.size()) == N2T_OK);
  REQUIRE(n2t_trajectory_render(t, N2T_FORMAT_JSON, &out) == N2T_OK);
  CHECK(nlohmann::json::parse(take(out))["visits"][2]["canonical_name"] == "New York City");
  n2t_trajectory_destroy(t);

  CHECK(n2t_extract_text(pl.p, nullptr, "", 0, N2T_METHOD_ST, &t) == N2T_OK);
  CHECK(n2t_trajectory_size(t) == 0);
  n2t_trajectory_destroy(t);
  CHECK(n2t_extract_text(pl.p, "x", "x", 1, static_cast<n2t_method>(7), &t) ==
        N2T_ERR_INVALID_ARGUMENT);
  CHECK(n2t_extract_file(pl.p, "/nonexistent.txt", N2T_METHOD_ST, &t) == N2T_ERR_IO);
}

TEST_CASE("settings") {
  Pipeline pl;
  pl.load();
  CHECK(n2t_pipeline_set_policy(pl.p, "nearest") == N2T_ERR_INVALID_ARGUMENT);
  CHECK(n2t_pipeline_set_min_population(pl.p, -1) == N2T_ERR_INVALID_ARGUMENT);

  auto first_id = [&](const std::string& text) {
    n2t_trajectory* t = nullptr;
    REQUIRE(n2t_extract_text(pl.p, "x", text.data(), text.size(), N2T_METHOD_MWT_GEO_AUG, &t) ==
            N2T_OK);
    n2t_visit v{};
    std::int64_t id = 0;
    if (n2t_trajectory_size(t) > 0 && n2t_trajectory_visit(t, 0, &v) == N2T_OK) id = v.geoname_id;
    n2t_trajectory_destroy(t);
    return id;
  };
  CHECK(first_id("Paris") == 2988507);
  REQUIRE(n2t_pipeline_set_policy(pl.p, "country:US") == N2T_OK);
  CHECK(first_id("Paris") == 4717560);
  REQUIRE(n2t_pipeline_set_policy(pl.p, "population") == N2T_OK);

  CHECK(first_id("Lampedusa") == 2524459);
  REQUIRE(n2t_pipeline_set_min_population(pl.p, 15000) == N2T_OK);
  CHECK(first_id("Lampedusa") == 0);
  REQUIRE(n2t_pipeline_set_min_population(pl.p, 0) == N2T_OK);

  CHECK(first_id("Alepsko") == 0);
  CHECK(n2t_pipeline_add_homonym(pl.p, 170063, "Alepsko") == N2T_OK);
  CHECK(first_id("Alepsko") == 170063);
  CHECK(n2t_pipeline_add_homonym(pl.p, 0, "X") == N2T_ERR_NOT_FOUND);

  CHECK(n2t_pipeline_load_stoplist(pl.p, "/nonexistent") == N2T_ERR_IO);
  CHECK(n2t_pipeline_load_lexicon(pl.p, "/nonexistent") == N2T_ERR_IO);
  CHECK(n2t_pipeline_load_homonyms(pl.p, "/nonexistent") == N2T_ERR_IO);
}

TEST_CASE("tagging") {
  Pipeline pl;
  pl.load();
  const std::string text = "They reached Aleppo quickly.";
  char* out = nullptr;
  REQUIRE(n2t_tag_text(pl.p, text.data(), text.size(), &out) == N2T_OK);
  const auto doc = nlohmann::json::parse(take(out));
  REQUIRE(doc.size() == 5);
  CHECK(doc[2][0] == "Aleppo");
  CHECK(doc[2][1] == "PROPN");
  CHECK(doc[2][2] == 1);
  CHECK(doc[2][3].get<double>() == doctest::Approx(37.16117));
  CHECK(doc[3][1] == "ADV");
  CHECK(doc[3][3].is_null());
  CHECK(doc[4][1] == "PUNCT");
}

TEST_CASE("evaluation and reports") {
  Pipeline pl;
  pl.load();
  n2t_report* r = nullptr;
  REQUIRE(n2t_evaluate(pl.p, fixture("corpus").c_str(), fixture("ground_truth.json").c_str(),
                       &r) == N2T_OK);
  n2t_score s{};
  REQUIRE(n2t_report_score(r, N2T_METHOD_MWT_GEO_AUG, &s) == N2T_OK);
  CHECK(s.f1 == 1.0);
  CHECK(s.false_positives == 0);
  CHECK(n2t_report_skipped_count(r) == 0);
  CHECK(n2t_report_skipped_id(r, 0) == nullptr);
  char* out = nullptr;
  REQUIRE(n2t_report_table(r, &out) == N2T_OK);
  CHECK(take(out).rfind("method", 0) == 0);
  REQUIRE(n2t_report_json(r, &out) == N2T_OK);
  CHECK(nlohmann::json::parse(take(out))["methods"].size() == 4);
  n2t_report_destroy(r);

  CHECK(n2t_evaluate(pl.p, "/nonexistent", fixture("ground_truth.json").c_str(), &r) ==
        N2T_ERR_IO);
  CHECK(n2t_evaluate(pl.p, fixture("corpus").c_str(), fixture("mini_gazetteer.tsv").c_str(),
                     &r) == N2T_ERR_PARSE);
}

TEST_CASE("concurrent extraction from one pipeline") {
  Pipeline pl;
  pl.load();
  const std::string text = "Aleppo, Kilis, Gaziantep, İzmir, Çeşme, Chios and Athens.";
  std::vector<std::string> results(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < results.size(); ++i) {
    threads.emplace_back([&, i] {
      n2t_trajectory* t = nullptr;
      if (n2t_extract_text(pl.p, "x", text.data(), text.size(), N2T_METHOD_MWT_GEO_AUG, &t) !=
          N2T_OK) {
        return;
      }
      char* out = nullptr;
      if (n2t_trajectory_render(t, N2T_FORMAT_GEOJSON, &out) == N2T_OK) results[i] = take(out);
      n2t_trajectory_destroy(t);
    });
  }
  for (auto& th : threads) th.join();
  for (const auto& r : results) CHECK(r == results[0]);
  CHECK(nlohmann::json::parse(results[0])["features"].size() == 8);
}
