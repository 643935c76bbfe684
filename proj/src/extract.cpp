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

#include "n2t/extract.hpp"

#include <algorithm>
#include <unordered_map>

namespace n2t {
namespace {

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

const std::unordered_map<std::string, PosTag>& closed_class() {
  static const auto* table = [] {
    auto* t = new std::unordered_map<std::string, PosTag>;
    for (const char* w : {"the", "a", "an", "this", "that", "these", "those",
                          "each", "every", "some", "any", "no", "all", "both",
                          "another", "such"}) {
      t->emplace(w, PosTag::kDet);
    }
    for (const char* w :
         {"of",     "in",      "on",     "at",      "to",      "from",
          "by",     "with",    "into",   "onto",    "through", "across",
          "over",   "under",   "near",   "along",   "via",     "toward",
          "towards", "for",    "after",  "before",  "during",  "between",
          "among",  "around",  "behind", "beyond",  "without", "within",
          "upon",   "off",     "about",  "against", "past",    "since",
          "until",  "up",      "down",   "out"}) {
      t->emplace(w, PosTag::kAdp);
    }
    for (const char* w :
         {"i",    "you",  "he",    "she",  "it",    "we",      "they",
          "me",   "him",  "her",   "us",   "them",  "his",     "its",
          "our",  "their", "my",   "your", "who",   "whom",    "which",
          "what", "himself", "herself", "themselves", "itself", "someone",
          "nobody", "everyone", "anyone"}) {
      t->emplace(w, PosTag::kPron);
    }
    for (const char* w : {"and", "or", "but", "nor", "so", "yet", "because",
                          "although", "while", "if", "when", "than",
                          "whether", "though", "as"}) {
      t->emplace(w, PosTag::kConj);
    }
    for (const char* w : {"is", "are", "was", "were", "be", "been", "being",
                          "am", "has", "have", "had", "do", "does", "did",
                          "will", "would", "can", "could", "shall", "should",
                          "may", "might", "must"}) {
      t->emplace(w, PosTag::kAux);
    }
    return t;
  }();
  return *table;
}

bool is_numeric(std::string_view s) {
  bool digit = false;
  for (char c : s) {
    if (c >= '0' && c <= '9') {
      digit = true;
    } else if (c != ',' && c != '.' && c != '-' && c != '/' && c != '%') {
      return false;
    }
  }
  return digit;
}

GeoToken make_geo_token(const Token& token, const GazetteerEntry& entry) {
  GeoToken g;
  g.token = token;
  g.token.coordinates = GeoPoint{entry.latitude, entry.longitude};
  g.token.tag = PosTag::kPropn;
  g.geoname_id = entry.geoname_id;
  g.entry = &entry;
  return g;
}

}  // namespace

std::string_view method_name(MethodId method) {
  switch (method) {
    case MethodId::kSt: return "ST";
    case MethodId::kStGeoAug: return "ST_GEO_AUG";
    case MethodId::kMwt: return "MWT";
    case MethodId::kMwtGeoAug: return "MWT_GEO_AUG";
  }
  return "MWT_GEO_AUG";
}

std::string_view method_flag(MethodId method) {
  switch (method) {
    case MethodId::kSt: return "st";
    case MethodId::kStGeoAug: return "st-geo";
    case MethodId::kMwt: return "mwt";
    case MethodId::kMwtGeoAug: return "mwt-geo";
  }
  return "mwt-geo";
}

std::optional<MethodId> parse_method(std::string_view text) {
  const std::string lower = ascii_lower(text);
  for (MethodId m : kAllMethods) {
    if (lower == method_flag(m) || lower == ascii_lower(method_name(m))) {
      return m;
    }
  }
  return std::nullopt;
}

std::unordered_set<std::string> default_geo_stoplist() {
  return {
      // function words
      "a", "an", "the", "of", "in", "on", "at", "to", "by", "for", "from",
      "with", "and", "or", "but", "as", "is", "it", "this", "that", "there",
      "then", "when", "after", "before", "during", "along", "across", "over",
      "under", "near", "into", "he", "she", "we", "they", "his", "her", "no",
      "one", "so", "some",
      // common words that double as place names
      "best", "hope", "police", "army", "union", "mission",
      "god", "man", "bay", "city", "port", "camp", "border", "coast",
      "central", "north", "south", "east", "west", "new", "university",
      "hospital", "church", "mosque", "market",
      // calendar
      "january", "february", "march", "april", "may", "june", "july",
      "august", "september", "october", "november", "december", "monday",
      "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday",
  };
}

std::vector<const GazetteerEntry*> match_candidates(const Token& token,
                                                    const LocationDimension& dim,
                                                    const ExtractConfig& config,
                                                    MatchMode mode) {
  std::vector<const GazetteerEntry*> out;
  if (token.is_punctuation() || !token.capitalized) return out;
  const NameKey key(token.value);
  if (key.empty() || config.geo_stoplist.contains(key.str())) return out;
  for (const GazetteerEntry* e : dim.lookup(key)) {
    if (mode == MatchMode::kCanonicalOnly && e->canonical_name != token.value) {
      continue;
    }
    if (config.min_population > 0 && e->population < config.min_population) {
      continue;
    }
    out.push_back(e);
  }
  return out;
}

std::vector<GeoToken> identify_geospatial_tokens(std::span<const Token> tokens,
                                                 const LocationDimension& dim,
                                                 const ExtractConfig& config,
                                                 MatchMode mode) {
  std::vector<GeoToken> out;
  for (const Token& token : tokens) {
    const auto candidates = match_candidates(token, dim, config, mode);
    if (candidates.empty()) continue;
    out.push_back(make_geo_token(token, resolve(candidates, config.policy)));
  }
  return out;
}

std::vector<TaggedTuple> tag_pos(std::span<const Sentence> sentences,
                                 const LocationDimension& dim,
                                 const ExtractConfig& config) {
  std::vector<TaggedTuple> out;
  for (const Sentence& sentence : sentences) {
    bool initial = true;
    for (const Token& token : sentence.tokens) {
      TaggedTuple t;
      t.value = token.value;
      if (token.is_punctuation()) {
        t.tag = PosTag::kPunct;
        out.push_back(std::move(t));
        continue;
      }
      const bool sentence_initial = initial;
      initial = false;
      const auto candidates =
          match_candidates(token, dim, config, MatchMode::kFullAug);
      if (!candidates.empty()) {
        const GazetteerEntry& e = resolve(candidates, config.policy);
        t.tag = PosTag::kPropn;
        t.geo_flag = true;
        t.longitude = e.longitude;
        t.latitude = e.latitude;
        out.push_back(std::move(t));
        continue;
      }
      const std::string lower = ascii_lower(token.value);
      if (const auto it = closed_class().find(lower); it != closed_class().end()) {
        t.tag = it->second;
      } else if (token.capitalized && !sentence_initial) {
        t.tag = PosTag::kPropn;
      } else if (is_numeric(token.value)) {
        t.tag = PosTag::kNum;
      } else if (lower.size() > 3 && lower.ends_with("ly")) {
        t.tag = PosTag::kAdv;
      } else {
        t.tag = PosTag::kNoun;
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

Trajectory build_trajectory(std::string narrative_id,
                            std::vector<GeoToken> geo_tokens) {
  return Trajectory{std::move(narrative_id), std::move(geo_tokens)};
}

Trajectory collapse_consecutive_repeats(Trajectory trajectory) {
  auto& v = trajectory.visits;
  v.erase(std::unique(v.begin(), v.end(),
                      [](const GeoToken& a, const GeoToken& b) {
                        return a.geoname_id == b.geoname_id;
                      }),
          v.end());
  return trajectory;
}

Trajectory run_method(const RawNarrative& raw, MethodId method,
                      const LocationDimension& dim, const MWLexicon* lexicon,
                      const ExtractConfig& config) {
  const NormalizedText text = normalize(raw);
  std::vector<Sentence> sentences = tokenize(text, config.tokenizer);
  std::vector<Token> tokens;
  MatchMode mode = MatchMode::kFullAug;
  switch (method) {
    case MethodId::kSt:
      mode = MatchMode::kCanonicalOnly;
      [[fallthrough]];
    case MethodId::kStGeoAug:
      tokens = recognize_significant_entities(sentences, config.tokenizer);
      break;
    case MethodId::kMwt:
      mode = MatchMode::kCanonicalOnly;
      [[fallthrough]];
    case MethodId::kMwtGeoAug: {
      static const MWLexicon kEmpty;
      tokens = flatten(merge_multiwords(std::move(sentences),
                                        lexicon ? *lexicon : kEmpty));
      break;
    }
  }
  Trajectory tr = build_trajectory(
      raw.id, identify_geospatial_tokens(tokens, dim, config, mode));
  if (config.collapse_repeats) tr = collapse_consecutive_repeats(std::move(tr));
  return tr;
}

}  // namespace n2t
