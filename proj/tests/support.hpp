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

// Shared helpers for the test binaries.

#ifndef N2T_TESTS_SUPPORT_HPP_
#define N2T_TESTS_SUPPORT_HPP_

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "n2t/extract.hpp"
#include "n2t/gazetteer.hpp"

namespace n2t::testing {

inline std::filesystem::path fixture_dir() { return N2T_FIXTURE_DIR; }
inline std::filesystem::path gazetteer_path() {
  return fixture_dir() / "mini_gazetteer.tsv";
}
inline std::filesystem::path corpus_dir() { return fixture_dir() / "corpus"; }
inline std::filesystem::path truth_path() {
  return fixture_dir() / "ground_truth.json";
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Loaded once per process.
inline const LocationDimension& fixture_dimension() {
  static const LocationDimension dim =
      ingest_geonames_file(gazetteer_path().string()).dimension;
  return dim;
}

inline const MWLexicon& fixture_lexicon() {
  static const MWLexicon lex = derive_mw_lexicon(fixture_dimension());
  return lex;
}

// Raw fixture row fields for a geoname id, split without the library.
inline std::vector<std::string> fixture_row(long long id) {
  std::ifstream in(gazetteer_path());
  std::string line;
  const std::string prefix = std::to_string(id) + "\t";
  while (std::getline(in, line)) {
    if (line.rfind(prefix, 0) != 0) continue;
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, '\t')) fields.push_back(field);
    while (fields.size() < 19) fields.emplace_back();
    return fields;
  }
  return {};
}

inline RawNarrative narrative(std::string text, std::string id = "t") {
  RawNarrative raw;
  raw.id = std::move(id);
  raw.text = std::move(text);
  return raw;
}

inline std::vector<std::string> names_of(const Trajectory& tr) {
  std::vector<std::string> out;
  for (const GeoToken& v : tr.visits) out.push_back(v.token.value);
  return out;
}

}  // namespace n2t::testing

#endif  // N2T_TESTS_SUPPORT_HPP_
