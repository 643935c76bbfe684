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

// Independent n-gram scanner used to cross-check multi-word extraction.
// It does not use the trie, merge_multiwords or match_candidates.

#ifndef N2T_TESTS_ORACLE_HPP_
#define N2T_TESTS_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <string>
#include <vector>

#include "n2t/extract.hpp"
#include "n2t/gazetteer.hpp"
#include "n2t/name_key.hpp"
#include "n2t/normalize.hpp"
#include "n2t/tokenize.hpp"

namespace n2t::testing {

struct OracleVisit {
  std::string value;
  std::int64_t geoname_id = 0;
  std::size_t span_start = 0;

  friend bool operator==(const OracleVisit&, const OracleVisit&) = default;
};

inline bool oracle_uppercase_initial(const std::string& s) {
  // Normalized fixture text is ASCII; the first letter decides.
  for (char c : s) {
    if (c >= 'A' && c <= 'Z') return true;
    if (c >= 'a' && c <= 'z') return false;
  }
  return false;
}

// Flat list of (entry, every name key) plus the set of all keys, built by
// walking entries rather than through the dimension's index.
struct OracleIndex {
  std::vector<std::pair<const GazetteerEntry*, std::set<NameKey>>> rows;
  std::set<NameKey> keys;

  explicit OracleIndex(const LocationDimension& dim) {
    for (const GazetteerEntry& e : dim.entries()) {
      std::set<NameKey> k{NameKey(e.canonical_name), NameKey(e.ascii_name)};
      for (const std::string& alt : e.alternate_names) k.insert(NameKey(alt));
      keys.insert(k.begin(), k.end());
      rows.emplace_back(&e, std::move(k));
    }
  }
};

inline std::vector<OracleVisit> oracle_extract(const RawNarrative& raw,
                                               const OracleIndex& index,
                                               const ExtractConfig& cfg,
                                               std::size_t max_n) {
  const NormalizedText text = normalize(raw);
  std::vector<OracleVisit> out;
  auto emit = [&](const std::vector<Token>& toks, std::size_t i, std::size_t n) {
    if (toks[i].is_punctuation() && n == 1) return;
    std::string surface = toks[i].value;
    for (std::size_t k = i + 1; k < i + n; ++k) {
      if (toks[k].span.start > toks[k - 1].span.end) surface += ' ';
      surface += toks[k].value;
    }
    if (!oracle_uppercase_initial(surface)) return;
    const NameKey key(surface);
    if (cfg.geo_stoplist.count(key.str())) return;
    std::vector<const GazetteerEntry*> cands;
    for (const auto& [e, keys] : index.rows) {
      if (cfg.min_population > 0 && e->population < cfg.min_population) continue;
      if (keys.count(key)) cands.push_back(e);
    }
    if (cands.empty()) return;
    // Default policy: largest population, then smallest id.
    const GazetteerEntry* best = *std::min_element(
        cands.begin(), cands.end(), [](const GazetteerEntry* a, const GazetteerEntry* b) {
          if (a->population != b->population) return a->population > b->population;
          return a->geoname_id < b->geoname_id;
        });
    out.push_back({surface, best->geoname_id, toks[i].span.start});
  };

  for (const Sentence& s : tokenize(text, cfg.tokenizer)) {
    const std::vector<Token>& toks = s.tokens;
    std::size_t i = 0;
    while (i < toks.size()) {
      std::size_t taken = 1;
      for (std::size_t n = std::min(max_n, toks.size() - i); n >= 2; --n) {
        std::string surface = toks[i].value;
        for (std::size_t k = i + 1; k < i + n; ++k) {
          if (toks[k].span.start > toks[k - 1].span.end) surface += ' ';
          surface += toks[k].value;
        }
        static const std::set<std::string> trailing = {
            "a",   "an",   "and", "as",   "at",   "by",  "for",  "from",
            "in",  "into", "of",  "on",   "or",   "the", "to",   "via",
            "with", "near", "but", "than", "was", "were", "is",  "are"};
        if (trailing.count(toks[i + n - 1].value)) continue;
        if (index.keys.count(NameKey(surface))) {
          taken = n;
          break;
        }
      }
      emit(toks, i, taken);
      i += taken;
    }
  }
  return out;
}

}  // namespace n2t::testing

#endif  // N2T_TESTS_ORACLE_HPP_
