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

#include "n2t/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "n2t/error.hpp"

namespace n2t {
namespace {

std::optional<std::string> optional_string(const nlohmann::json& doc,
                                           const char* key,
                                           const std::string& where) {
  const auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw Error(ErrorCode::kParse,
                where + ": field '" + key + "' must be a string");
  }
  return it->get<std::string>();
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read '" + path.string() + "'");
  return ss.str();
}

RawNarrative load_narrative(const std::filesystem::path& text_path) {
  RawNarrative raw;
  raw.id = text_path.stem().string();
  raw.text = read_file(text_path);

  std::filesystem::path sidecar = text_path;
  sidecar.replace_extension(".json");
  std::error_code ec;
  if (!std::filesystem::is_regular_file(sidecar, ec)) return raw;

  const std::string where = sidecar.string();
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(sidecar));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, where + ": parse error at byte " +
                                       std::to_string(e.byte));
  }
  if (!doc.is_object()) {
    throw Error(ErrorCode::kParse, where + ": expected a JSON object");
  }
  if (auto id = optional_string(doc, "id", where)) {
    if (id->empty()) throw Error(ErrorCode::kParse, where + ": empty id");
    raw.id = *id;
  }
  raw.title = optional_string(doc, "title", where);
  raw.source = optional_string(doc, "source", where);
  raw.published = optional_string(doc, "published", where);
  return raw;
}

std::vector<RawNarrative> load_corpus(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw Error(ErrorCode::kIo, "not a directory: '" + dir.string() + "'");
  }
  std::vector<RawNarrative> corpus;
  for (const auto& item : std::filesystem::directory_iterator(dir)) {
    if (item.is_regular_file() && item.path().extension() == ".txt") {
      corpus.push_back(load_narrative(item.path()));
    }
  }
  if (corpus.empty()) {
    throw Error(ErrorCode::kEmpty, "no narratives in '" + dir.string() + "'");
  }
  std::sort(corpus.begin(), corpus.end(),
            [](const RawNarrative& a, const RawNarrative& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < corpus.size(); ++i) {
    if (corpus[i].id == corpus[i - 1].id) {
      throw Error(ErrorCode::kParse, "duplicate narrative id '" + corpus[i].id + "'");
    }
  }
  return corpus;
}

std::vector<std::string> parse_word_list(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    std::size_t e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

std::vector<std::string> load_word_list(const std::filesystem::path& path) {
  std::istringstream in(read_file(path));
  return parse_word_list(in);
}

}  // namespace n2t
