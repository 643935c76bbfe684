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


// Location Dimension: GeoNames ingestion, name index and disambiguation.

#ifndef N2T_GAZETTEER_HPP_
#define N2T_GAZETTEER_HPP_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "n2t/name_key.hpp"
#include "n2t/tokenize.hpp"

namespace n2t {

struct GazetteerEntry {
  std::int64_t geoname_id = 0;
  std::string canonical_name;
  std::string ascii_name;
  std::vector<std::string> alternate_names;
  double latitude = 0.0;
  double longitude = 0.0;
  char feature_class = '\0';
  std::string feature_code;
  std::string country_code;
  std::int64_t population = 0;
};

class LocationDimension {
 public:
  // Throws kInvalidArgument on bad coordinates, empty name, non-positive or
  // duplicate id.
  void add(GazetteerEntry entry);

  // Adds names to the entry's alternates and index. Returns how many were
  // new. Throws kNotFound for an unknown id.
  std::size_t add_homonyms(std::int64_t geoname_id,
                           std::span<const std::string> names);

  // Entries indexed under key, by descending population then ascending id.
  std::vector<const GazetteerEntry*> lookup(const NameKey& key) const;
  bool contains_key(const NameKey& key) const;

  const GazetteerEntry* find(std::int64_t geoname_id) const;
  const std::vector<GazetteerEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::size_t key_count() const { return index_.size(); }

  // All index keys in sorted order.
  std::vector<NameKey> keys() const;

 private:
  void index_name(std::size_t slot, std::string_view name);

  std::vector<GazetteerEntry> entries_;
  std::unordered_map<std::int64_t, std::size_t> by_id_;
  std::unordered_map<NameKey, std::vector<std::size_t>> index_;
};

struct IngestDiagnostic {
  std::size_t line = 0;  // 1-based
  std::string message;
};

struct IngestResult {
  LocationDimension dimension;
  std::size_t lines_read = 0;
  std::vector<IngestDiagnostic> diagnostics;

  std::size_t skipped() const { return diagnostics.size(); }
};

// Parses GeoNames main-export rows (19 tab-separated columns). Malformed
// rows are skipped and reported. Throws kEmpty if no row was valid.
IngestResult ingest_geonames(std::istream& in);
IngestResult ingest_geonames(std::string_view text);
// Throws kIo if the file cannot be opened.
IngestResult ingest_geonames_file(const std::string& path);

// Serializes an entry as a 19-column GeoNames row (unused columns empty).
std::string to_geonames_line(const GazetteerEntry& entry);

// (geoname_id, name) pairs, one per line, tab-separated. Blank lines and
// lines starting with '#' are ignored. Throws kParse with the line number.
std::vector<std::pair<std::int64_t, std::string>> parse_homonym_supplement(
    std::istream& in);
void apply_homonyms(
    LocationDimension& dim,
    std::span<const std::pair<std::int64_t, std::string>> pairs);

struct DisambiguationPolicy {
  enum class Kind { kPopulation, kCountry, kFeature };

  Kind kind = Kind::kPopulation;
  std::vector<std::string> countries;  // upper-case ISO codes, for kCountry

  // "population", "feature" or "country:CC[,CC...]". Throws
  // kInvalidArgument.
  static DisambiguationPolicy parse(std::string_view text);
  std::string to_string() const;
};

// Candidates must be in lookup order. Throws kInvalidArgument when empty.
const GazetteerEntry& resolve(std::span<const GazetteerEntry* const> candidates,
                              const DisambiguationPolicy& policy);

// Every indexed name with two or more tokens, plus `extra_names`.
MWLexicon derive_mw_lexicon(const LocationDimension& dim,
                            std::span<const std::string> extra_names = {});

}  // namespace n2t

#endif  // N2T_GAZETTEER_HPP_
