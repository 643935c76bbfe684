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

#include "n2t/gazetteer.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "n2t/error.hpp"

namespace n2t {
namespace {

constexpr std::size_t kGeonamesColumns = 19;

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

template <typename T>
bool parse_number(std::string_view s, T& value) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool valid_coordinates(double lat, double lon) {
  return std::isfinite(lat) && std::isfinite(lon) && lat >= -90.0 &&
         lat <= 90.0 && lon >= -180.0 && lon <= 180.0;
}

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return std::string(s);
}

// Returns an empty string on success, else the diagnostic.
std::string parse_row(std::string_view line, GazetteerEntry& e) {
  const auto f = split(line, '\t');
  if (f.size() != kGeonamesColumns) {
    return "expected 19 fields, found " + std::to_string(f.size());
  }
  if (!parse_number(f[0], e.geoname_id) || e.geoname_id <= 0) {
    return "invalid geoname id '" + std::string(f[0]) + "'";
  }
  e.canonical_name = std::string(f[1]);
  if (e.canonical_name.empty()) return "empty name";
  e.ascii_name = std::string(f[2]);
  e.alternate_names.clear();
  if (!f[3].empty()) {
    for (std::string_view alt : split(f[3], ',')) {
      if (!alt.empty()) e.alternate_names.emplace_back(alt);
    }
  }
  if (!parse_number(f[4], e.latitude) || !parse_number(f[5], e.longitude)) {
    return "unparseable coordinates";
  }
  if (!valid_coordinates(e.latitude, e.longitude)) {
    return "coordinates out of range (" + std::string(f[4]) + ", " +
           std::string(f[5]) + ")";
  }
  if (f[6].size() > 1) return "invalid feature class";
  e.feature_class = f[6].empty() ? '\0' : f[6][0];
  e.feature_code = std::string(f[7]);
  e.country_code = std::string(f[8]);
  if (f[14].empty()) {
    e.population = 0;
  } else if (!parse_number(f[14], e.population) || e.population < 0) {
    return "invalid population '" + std::string(f[14]) + "'";
  }
  return {};
}

}  // namespace

void LocationDimension::add(GazetteerEntry entry) {
  if (entry.geoname_id <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "geoname id must be positive");
  }
  if (entry.canonical_name.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "canonical name is empty");
  }
  if (!valid_coordinates(entry.latitude, entry.longitude)) {
    throw Error(ErrorCode::kInvalidArgument, "coordinates out of range");
  }
  if (entry.population < 0) {
    throw Error(ErrorCode::kInvalidArgument, "population is negative");
  }
  if (by_id_.contains(entry.geoname_id)) {
    throw Error(ErrorCode::kInvalidArgument,
                "duplicate geoname id " + std::to_string(entry.geoname_id));
  }
  const std::size_t slot = entries_.size();
  by_id_.emplace(entry.geoname_id, slot);
  entries_.push_back(std::move(entry));
  const GazetteerEntry& e = entries_.back();
  index_name(slot, e.canonical_name);
  index_name(slot, e.ascii_name);
  for (const std::string& alt : e.alternate_names) index_name(slot, alt);
}

void LocationDimension::index_name(std::size_t slot, std::string_view name) {
  NameKey key(name);
  if (key.empty()) return;
  std::vector<std::size_t>& list = index_[std::move(key)];
  if (std::find(list.begin(), list.end(), slot) != list.end()) return;
  const auto before = [this](std::size_t a, std::size_t b) {
    const GazetteerEntry& x = entries_[a];
    const GazetteerEntry& y = entries_[b];
    if (x.population != y.population) return x.population > y.population;
    return x.geoname_id < y.geoname_id;
  };
  list.insert(std::upper_bound(list.begin(), list.end(), slot, before), slot);
}

std::size_t LocationDimension::add_homonyms(
    std::int64_t geoname_id, std::span<const std::string> names) {
  const auto it = by_id_.find(geoname_id);
  if (it == by_id_.end()) {
    throw Error(ErrorCode::kNotFound,
                "unknown geoname id " + std::to_string(geoname_id));
  }
  const std::size_t slot = it->second;
  std::size_t added = 0;
  for (const std::string& name : names) {
    GazetteerEntry& e = entries_[slot];
    if (name.empty() || name == e.canonical_name || name == e.ascii_name ||
        std::find(e.alternate_names.begin(), e.alternate_names.end(), name) !=
            e.alternate_names.end()) {
      continue;
    }
    e.alternate_names.push_back(name);
    index_name(slot, name);
    ++added;
  }
  return added;
}

std::vector<const GazetteerEntry*> LocationDimension::lookup(
    const NameKey& key) const {
  std::vector<const GazetteerEntry*> out;
  const auto it = index_.find(key);
  if (it == index_.end()) return out;
  out.reserve(it->second.size());
  for (std::size_t slot : it->second) out.push_back(&entries_[slot]);
  return out;
}

bool LocationDimension::contains_key(const NameKey& key) const {
  return index_.contains(key);
}

const GazetteerEntry* LocationDimension::find(std::int64_t geoname_id) const {
  const auto it = by_id_.find(geoname_id);
  return it == by_id_.end() ? nullptr : &entries_[it->second];
}

std::vector<NameKey> LocationDimension::keys() const {
  std::vector<NameKey> out;
  out.reserve(index_.size());
  for (const auto& [key, slots] : index_) out.push_back(key);
  std::sort(out.begin(), out.end());
  return out;
}

IngestResult ingest_geonames(std::istream& in) {
  IngestResult result;
  std::string line;
  while (std::getline(in, line)) {
    ++result.lines_read;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    GazetteerEntry entry;
    std::string problem = parse_row(line, entry);
    if (problem.empty() && result.dimension.find(entry.geoname_id)) {
      problem = "duplicate geoname id " + std::to_string(entry.geoname_id);
    }
    if (!problem.empty()) {
      result.diagnostics.push_back({result.lines_read, std::move(problem)});
      continue;
    }
    result.dimension.add(std::move(entry));
  }
  if (result.dimension.empty()) {
    throw Error(ErrorCode::kEmpty, "no valid entries");
  }
  return result;
}

IngestResult ingest_geonames(std::string_view text) {
  std::istringstream in{std::string(text)};
  return ingest_geonames(in);
}

IngestResult ingest_geonames_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open gazetteer '" + path + "'");
  return ingest_geonames(in);
}

std::string to_geonames_line(const GazetteerEntry& e) {
  std::string alternates;
  for (std::size_t i = 0; i < e.alternate_names.size(); ++i) {
    if (i > 0) alternates.push_back(',');
    alternates += e.alternate_names[i];
  }
  std::string fields[kGeonamesColumns];
  fields[0] = std::to_string(e.geoname_id);
  fields[1] = e.canonical_name;
  fields[2] = e.ascii_name;
  fields[3] = alternates;
  fields[4] = format_double(e.latitude);
  fields[5] = format_double(e.longitude);
  if (e.feature_class != '\0') fields[6] = std::string(1, e.feature_class);
  fields[7] = e.feature_code;
  fields[8] = e.country_code;
  fields[14] = std::to_string(e.population);
  std::string out;
  for (std::size_t i = 0; i < kGeonamesColumns; ++i) {
    if (i > 0) out.push_back('\t');
    out += fields[i];
  }
  return out;
}

std::vector<std::pair<std::int64_t, std::string>> parse_homonym_supplement(
    std::istream& in) {
  std::vector<std::pair<std::int64_t, std::string>> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const std::size_t tab = stripped.find('\t');
    std::int64_t id = 0;
    std::string name =
        tab == std::string::npos ? std::string() : trim(stripped.substr(tab + 1));
    if (tab == std::string::npos ||
        !parse_number(std::string_view(stripped).substr(0, tab), id) ||
        id <= 0 || name.empty()) {
      throw Error(ErrorCode::kParse, "homonym supplement line " +
                                         std::to_string(number) +
                                         ": expected '<geoname_id>\\t<name>'");
    }
    out.emplace_back(id, std::move(name));
  }
  return out;
}

void apply_homonyms(
    LocationDimension& dim,
    std::span<const std::pair<std::int64_t, std::string>> pairs) {
  for (const auto& [id, name] : pairs) {
    dim.add_homonyms(id, std::span<const std::string>(&name, 1));
  }
}

DisambiguationPolicy DisambiguationPolicy::parse(std::string_view text) {
  DisambiguationPolicy policy;
  if (text == "population") return policy;
  if (text == "feature") {
    policy.kind = Kind::kFeature;
    return policy;
  }
  constexpr std::string_view kPrefix = "country:";
  if (text.starts_with(kPrefix)) {
    policy.kind = Kind::kCountry;
    for (std::string_view code : split(text.substr(kPrefix.size()), ',')) {
      std::string cc = trim(code);
      for (char& c : cc) {
        if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
      }
      if (cc.size() != 2 || !std::isalpha(static_cast<unsigned char>(cc[0])) ||
          !std::isalpha(static_cast<unsigned char>(cc[1]))) {
        throw Error(ErrorCode::kInvalidArgument,
                    "invalid country code '" + std::string(code) + "'");
      }
      policy.countries.push_back(std::move(cc));
    }
    return policy;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown policy '" + std::string(text) +
                  "' (expected population, feature or country:CC,...)");
}

std::string DisambiguationPolicy::to_string() const {
  switch (kind) {
    case Kind::kPopulation:
      return "population";
    case Kind::kFeature:
      return "feature";
    case Kind::kCountry: {
      std::string out = "country:";
      for (std::size_t i = 0; i < countries.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += countries[i];
      }
      return out;
    }
  }
  return "population";
}

const GazetteerEntry& resolve(std::span<const GazetteerEntry* const> candidates,
                              const DisambiguationPolicy& policy) {
  if (candidates.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no candidates to resolve");
  }
  // Lower rank wins; ties keep lookup order.
  auto rank = [&](const GazetteerEntry& e) -> std::size_t {
    switch (policy.kind) {
      case DisambiguationPolicy::Kind::kPopulation:
        return 0;
      case DisambiguationPolicy::Kind::kFeature:
        return e.feature_class == 'P' ? 0 : e.feature_class == 'A' ? 1 : 2;
      case DisambiguationPolicy::Kind::kCountry: {
        const auto it = std::find(policy.countries.begin(),
                                  policy.countries.end(), e.country_code);
        return static_cast<std::size_t>(it - policy.countries.begin());
      }
    }
    return 0;
  };
  const GazetteerEntry* best = candidates.front();
  std::size_t best_rank = rank(*best);
  for (const GazetteerEntry* e : candidates.subspan(1)) {
    const std::size_t r = rank(*e);
    if (r < best_rank) {
      best = e;
      best_rank = r;
    }
  }
  return *best;
}

MWLexicon derive_mw_lexicon(const LocationDimension& dim,
                            std::span<const std::string> extra_names) {
  MWLexicon lexicon;
  for (const NameKey& key : dim.keys()) lexicon.add_name(key.str());
  for (const std::string& name : extra_names) lexicon.add_name(name);
  return lexicon;
}

}  // namespace n2t
