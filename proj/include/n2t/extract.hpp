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


// Geospatial token identification, POS tagging, trajectories and the four
// extraction methods.

#ifndef N2T_EXTRACT_HPP_
#define N2T_EXTRACT_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "n2t/gazetteer.hpp"
#include "n2t/normalize.hpp"
#include "n2t/tokenize.hpp"

namespace n2t {

enum class MatchMode {
  kFullAug,        // any indexed name variant
  kCanonicalOnly,  // exact, case-sensitive canonical name
};

enum class MethodId { kSt, kStGeoAug, kMwt, kMwtGeoAug };

inline constexpr std::array<MethodId, 4> kAllMethods = {
    MethodId::kSt, MethodId::kStGeoAug, MethodId::kMwt, MethodId::kMwtGeoAug};

// "ST", "ST_GEO_AUG", "MWT", "MWT_GEO_AUG".
std::string_view method_name(MethodId method);
// "st", "st-geo", "mwt", "mwt-geo".
std::string_view method_flag(MethodId method);
// Accepts either spelling, case-insensitively.
std::optional<MethodId> parse_method(std::string_view text);

struct GeoToken {
  Token token;  // coordinates set from the resolved entry
  std::int64_t geoname_id = 0;
  const GazetteerEntry* entry = nullptr;
};

struct Trajectory {
  std::string narrative_id;
  std::vector<GeoToken> visits;
};

struct TaggedTuple {
  std::string value;
  PosTag tag = PosTag::kUnk;
  bool geo_flag = false;
  std::optional<double> longitude;
  std::optional<double> latitude;
};

// Lower-cased NameKeys of words that are never treated as places.
std::unordered_set<std::string> default_geo_stoplist();

struct ExtractConfig {
  TokenizerConfig tokenizer = TokenizerConfig::defaults();
  std::unordered_set<std::string> geo_stoplist = default_geo_stoplist();
  DisambiguationPolicy policy;
  // Candidates below this population are ignored; 0 disables the filter.
  std::int64_t min_population = 0;
  bool collapse_repeats = false;
};

// Candidate entries for one token under the matching rules (capitalized,
// not stoplisted, not punctuation, population threshold), in lookup order.
std::vector<const GazetteerEntry*> match_candidates(const Token& token,
                                                    const LocationDimension& dim,
                                                    const ExtractConfig& config,
                                                    MatchMode mode);

std::vector<GeoToken> identify_geospatial_tokens(std::span<const Token> tokens,
                                                 const LocationDimension& dim,
                                                 const ExtractConfig& config,
                                                 MatchMode mode);

// Rule-based tagging of every token; geo tokens are decided with full
// augmentation.
std::vector<TaggedTuple> tag_pos(std::span<const Sentence> sentences,
                                 const LocationDimension& dim,
                                 const ExtractConfig& config);

Trajectory build_trajectory(std::string narrative_id,
                            std::vector<GeoToken> geo_tokens);

// Drops a visit when it resolves to the same entry as the previous one.
Trajectory collapse_consecutive_repeats(Trajectory trajectory);

// A null lexicon behaves as an empty one.
Trajectory run_method(const RawNarrative& raw, MethodId method,
                      const LocationDimension& dim, const MWLexicon* lexicon,
                      const ExtractConfig& config);

}  // namespace n2t

#endif  // N2T_EXTRACT_HPP_
