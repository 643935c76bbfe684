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

#include "n2t/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>

#include "json.hpp"
#include "n2t/corpus.hpp"
#include "n2t/error.hpp"

namespace n2t {
namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> keys_of(std::span<const std::string> names) {
  std::vector<std::string> out;
  out.reserve(names.size());
  for (const std::string& n : names) out.push_back(NameKey(n).str());
  return out;
}

std::size_t lcs_length(const std::vector<std::string>& a,
                       const std::vector<std::string>& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kParse, "ground truth " + path + ": " + what);
}

ordered_json score_json(const Score& s) {
  ordered_json j;
  j["true_positives"] = s.true_positives;
  j["false_positives"] = s.false_positives;
  j["false_negatives"] = s.false_negatives;
  j["precision"] = s.precision;
  j["recall"] = s.recall;
  j["f1"] = s.f1;
  return j;
}

std::string fixed(double v, int digits = 4) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

GroundTruth load_ground_truth(std::string_view document) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, "ground truth parse error at byte " +
                                       std::to_string(e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) schema_error("/", "expected an object of narrative ids");
  GroundTruth truth;
  for (const auto& [id, mentions] : doc.items()) {
    const std::string path = "/" + id;
    if (!mentions.is_array()) schema_error(path, "expected an array");
    std::vector<TruthMention>& list = truth[id];
    for (std::size_t i = 0; i < mentions.size(); ++i) {
      const auto& m = mentions[i];
      const std::string at = path + "/" + std::to_string(i);
      if (!m.is_object()) schema_error(at, "expected an object");
      const auto name = m.find("name");
      if (name == m.end() || !name->is_string() ||
          name->get<std::string>().empty()) {
        schema_error(at, "missing or empty 'name'");
      }
      TruthMention mention{name->get<std::string>(), std::nullopt};
      if (const auto gid = m.find("geoname_id"); gid != m.end() && !gid->is_null()) {
        if (!gid->is_number_integer()) schema_error(at, "'geoname_id' must be an integer");
        mention.geoname_id = gid->get<std::int64_t>();
      }
      list.push_back(std::move(mention));
    }
  }
  return truth;
}

GroundTruth load_ground_truth_file(const std::filesystem::path& path) {
  return load_ground_truth(read_file(path));
}

Score Score::from_counts(std::size_t tp, std::size_t fp, std::size_t fn) {
  Score s;
  s.true_positives = tp;
  s.false_positives = fp;
  s.false_negatives = fn;
  s.precision = tp + fp == 0 ? 1.0 : static_cast<double>(tp) / (tp + fp);
  s.recall = tp + fn == 0 ? 1.0 : static_cast<double>(tp) / (tp + fn);
  s.f1 = s.precision + s.recall > 0
             ? 2 * s.precision * s.recall / (s.precision + s.recall)
             : 0.0;
  return s;
}

Score score_extraction(std::span<const std::string> extracted,
                       std::span<const std::string> truth) {
  std::unordered_map<std::string, std::size_t> remaining;
  for (const std::string& k : keys_of(truth)) ++remaining[k];
  std::size_t tp = 0;
  for (const std::string& k : keys_of(extracted)) {
    auto it = remaining.find(k);
    if (it != remaining.end() && it->second > 0) {
      --it->second;
      ++tp;
    }
  }
  return Score::from_counts(tp, extracted.size() - tp, truth.size() - tp);
}

Score score_extraction(const Trajectory& extracted,
                       std::span<const TruthMention> truth) {
  return score_extraction(visit_names(extracted), truth_names(truth));
}

double order_score(std::span<const std::string> extracted,
                   std::span<const std::string> truth) {
  if (truth.empty()) return 1.0;
  return static_cast<double>(lcs_length(keys_of(extracted), keys_of(truth))) /
         static_cast<double>(truth.size());
}

double order_score(const Trajectory& extracted,
                   std::span<const TruthMention> truth) {
  return order_score(visit_names(extracted), truth_names(truth));
}

std::vector<std::string> visit_names(const Trajectory& tr) {
  std::vector<std::string> out;
  out.reserve(tr.visits.size());
  for (const GeoToken& v : tr.visits) out.push_back(v.token.value);
  return out;
}

std::vector<std::string> truth_names(std::span<const TruthMention> truth) {
  std::vector<std::string> out;
  out.reserve(truth.size());
  for (const TruthMention& m : truth) out.push_back(m.name);
  return out;
}

const MethodReport& ComparisonReport::method(MethodId id) const {
  for (const MethodReport& m : methods) {
    if (m.method == id) return m;
  }
  throw Error(ErrorCode::kNotFound, "method not in report");
}

ComparisonReport compare_methods(std::span<const RawNarrative> corpus,
                                 const GroundTruth& truth,
                                 const LocationDimension& dim,
                                 const MWLexicon* lexicon,
                                 const ExtractConfig& config) {
  ComparisonReport report;
  std::vector<const RawNarrative*> scored;
  for (const RawNarrative& raw : corpus) {
    if (truth.contains(raw.id)) {
      scored.push_back(&raw);
      report.scored_ids.push_back(raw.id);
    } else {
      report.skipped_ids.push_back(raw.id);
    }
  }
  for (const auto& [id, mentions] : truth) {
    if (std::none_of(corpus.begin(), corpus.end(),
                     [&](const RawNarrative& r) { return r.id == id; })) {
      report.missing_narratives.push_back(id);
    }
  }
  if (scored.empty()) {
    throw Error(ErrorCode::kEmpty, "no narrative id is shared by corpus and truth");
  }
  std::sort(scored.begin(), scored.end(),
            [](const RawNarrative* a, const RawNarrative* b) { return a->id < b->id; });
  std::sort(report.scored_ids.begin(), report.scored_ids.end());

  for (MethodId method : kAllMethods) {
    MethodReport mr;
    mr.method = method;
    std::size_t tp = 0, fp = 0, fn = 0, lcs = 0, truth_total = 0;
    for (const RawNarrative* raw : scored) {
      const std::vector<TruthMention>& gt = truth.at(raw->id);
      const Trajectory tr = run_method(*raw, method, dim, lexicon, config);
      NarrativeScore ns;
      ns.narrative_id = raw->id;
      ns.score = score_extraction(tr, gt);
      ns.order_score = order_score(tr, gt);
      tp += ns.score.true_positives;
      fp += ns.score.false_positives;
      fn += ns.score.false_negatives;
      truth_total += gt.size();
      lcs += lcs_length(keys_of(visit_names(tr)), keys_of(truth_names(gt)));
      mr.narratives.push_back(std::move(ns));
    }
    mr.aggregate = Score::from_counts(tp, fp, fn);
    mr.order_score = truth_total == 0 ? 1.0
                                      : static_cast<double>(lcs) / truth_total;
    report.methods.push_back(std::move(mr));
  }
  return report;
}

std::string report_to_json(const ComparisonReport& report) {
  ordered_json doc;
  ordered_json methods = ordered_json::array();
  for (const MethodReport& m : report.methods) {
    ordered_json jm;
    jm["method"] = method_name(m.method);
    jm["aggregate"] = score_json(m.aggregate);
    jm["aggregate"]["order_score"] = m.order_score;
    ordered_json per = ordered_json::array();
    for (const NarrativeScore& ns : m.narratives) {
      ordered_json jn;
      jn["narrative_id"] = ns.narrative_id;
      jn.update(score_json(ns.score));
      jn["order_score"] = ns.order_score;
      per.push_back(std::move(jn));
    }
    jm["narratives"] = std::move(per);
    methods.push_back(std::move(jm));
  }
  doc["methods"] = std::move(methods);
  doc["scored_narratives"] = report.scored_ids;
  doc["skipped_narratives"] = report.skipped_ids;
  doc["truth_without_narrative"] = report.missing_narratives;
  doc["reference"] = {
      {"ilp_f1", report.ilp_reference_f1},
      {"mwt_geo_aug_f1", report.method(MethodId::kMwtGeoAug).aggregate.f1}};
  return doc.dump(2) + "\n";
}

std::string report_table(const ComparisonReport& report) {
  std::vector<const MethodReport*> rows;
  for (const MethodReport& m : report.methods) rows.push_back(&m);
  std::stable_sort(rows.begin(), rows.end(),
                   [](const MethodReport* a, const MethodReport* b) {
                     return a->aggregate.f1 > b->aggregate.f1;
                   });
  std::string out = pad_right("method", 12) + pad_left("TP", 6) +
                    pad_left("FP", 6) + pad_left("FN", 6) +
                    pad_left("precision", 11) + pad_left("recall", 9) +
                    pad_left("F1", 9) + pad_left("order", 9) + "\n";
  for (const MethodReport* m : rows) {
    const Score& s = m->aggregate;
    out += pad_right(std::string(method_name(m->method)), 12) +
           pad_left(std::to_string(s.true_positives), 6) +
           pad_left(std::to_string(s.false_positives), 6) +
           pad_left(std::to_string(s.false_negatives), 6) +
           pad_left(fixed(s.precision), 11) + pad_left(fixed(s.recall), 9) +
           pad_left(fixed(s.f1), 9) + pad_left(fixed(m->order_score), 9) + "\n";
  }
  out += "reference ILP F1 " + fixed(report.ilp_reference_f1, 3) +
         ", MWT_GEO_AUG F1 " +
         fixed(report.method(MethodId::kMwtGeoAug).aggregate.f1) + "\n";
  out += "narratives scored: " + std::to_string(report.scored_ids.size());
  if (!report.skipped_ids.empty()) {
    out += ", skipped (no truth):";
    for (const std::string& id : report.skipped_ids) out += " " + id;
  }
  out += "\n";
  return out;
}

}  // namespace n2t
