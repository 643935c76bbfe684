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


// Ground truth, extraction scoring and the four-method comparison.

#ifndef N2T_EVAL_HPP_
#define N2T_EVAL_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "n2t/extract.hpp"

namespace n2t {

inline constexpr double kIlpReferenceF1 = 0.785;

struct TruthMention {
  std::string name;
  std::optional<std::int64_t> geoname_id;
};

// Narrative id -> mentions in narration order.
using GroundTruth = std::map<std::string, std::vector<TruthMention>>;

// Throws kParse with the byte position or the offending JSON path.
GroundTruth load_ground_truth(std::string_view document);
GroundTruth load_ground_truth_file(const std::filesystem::path& path);

struct Score {
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;
  double precision = 1.0;
  double recall = 1.0;
  double f1 = 0.0;

  static Score from_counts(std::size_t tp, std::size_t fp, std::size_t fn);
};

// Multiset matching over NameKeys.
Score score_extraction(std::span<const std::string> extracted,
                       std::span<const std::string> truth);
Score score_extraction(const Trajectory& extracted,
                       std::span<const TruthMention> truth);

// LCS of the NameKey sequences over the truth length; 1 for empty truth.
double order_score(std::span<const std::string> extracted,
                   std::span<const std::string> truth);
double order_score(const Trajectory& extracted,
                   std::span<const TruthMention> truth);

std::vector<std::string> visit_names(const Trajectory& tr);
std::vector<std::string> truth_names(std::span<const TruthMention> truth);

struct NarrativeScore {
  std::string narrative_id;
  Score score;
  double order_score = 1.0;
};

struct MethodReport {
  MethodId method = MethodId::kMwtGeoAug;
  std::vector<NarrativeScore> narratives;  // sorted by id
  Score aggregate;                         // micro-averaged
  double order_score = 1.0;                // pooled LCS over pooled truth
};

struct ComparisonReport {
  std::vector<MethodReport> methods;  // in MethodId order
  std::vector<std::string> scored_ids;
  std::vector<std::string> skipped_ids;          // corpus ids without truth
  std::vector<std::string> missing_narratives;   // truth ids not in corpus
  double ilp_reference_f1 = kIlpReferenceF1;

  const MethodReport& method(MethodId id) const;
};

// Throws kEmpty when corpus and truth share no narrative id.
ComparisonReport compare_methods(std::span<const RawNarrative> corpus,
                                 const GroundTruth& truth,
                                 const LocationDimension& dim,
                                 const MWLexicon* lexicon,
                                 const ExtractConfig& config);

std::string report_to_json(const ComparisonReport& report);
// Aligned text table, rows ordered by F1 descending.
std::string report_table(const ComparisonReport& report);

}  // namespace n2t

#endif  // N2T_EVAL_HPP_
