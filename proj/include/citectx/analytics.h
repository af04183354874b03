// Copyright 2026 The citectx Authors.
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

#ifndef CITECTX_ANALYTICS_H_
#define CITECTX_ANALYTICS_H_

#include <array>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "citectx/citance_extractor.h"
#include "citectx/lexicon.h"
#include "citectx/reference_resolver.h"
#include "citectx/section_classifier.h"
#include "citectx/verb_profiler.h"

namespace citectx {

inline constexpr long kDefaultSuppressionMin = 10;

// Sum of doubles held as an integer count of 1e-9 units, so partial sums
// merge to the same bits in any order.
class FixedSum {
 public:
  void Add(double value);
  void Merge(const FixedSum &other) { units_ += other.units_; }
  double Value() const;

  bool operator==(const FixedSum &) const = default;

 private:
  __int128 units_ = 0;
};

// Counters for one group of citances (a version, a history-year bucket, a
// section split). Paper counts are added once per document.
struct GroupStats {
  long citances = 0;
  long method_citances = 0;
  long papers = 0;
  long method_papers = 0;      // papers with >=1 Method citance in the group
  long non_method_papers = 0;  // papers with >=1 NonMethod citance
  std::array<long, kMarkerCategoryCount> marker_hits{};
  FixedSum flesch;

  // Adds the citances one document contributes to this group.
  void AddDocument(std::span<const Citance *const> citances);
  void Merge(const GroupStats &other);

  std::optional<double> MarkerRatio(MarkerCategory c) const;
  std::optional<double> MeanReadability() const;

  bool operator==(const GroupStats &) const = default;
};

struct VersionSummary {
  VersionId version_id;
  long citing_papers = 0;
  std::optional<double> citing_papers_with_method_citance_ratio;
  long citances = 0;
  long method_citances = 0;
  long non_method_citances = 0;
  std::optional<double> method_citance_ratio;
  std::optional<double> citances_per_paper;
  std::array<std::optional<double>, kMarkerCategoryCount> marker_ratios{};
  std::optional<double> hedging_ratio;
  std::optional<double> mean_readability;
};

VersionSummary SummarizeGroup(const VersionId &version_id,
                              const GroupStats &stats);

// Table-2 row for citances of a single version (grouped into papers by
// doc_id). Throws Error(kMixedVersions). Ratios are absent when there are
// no citances.
VersionSummary SummarizeVersion(std::span<const Citance> citances);

struct TemporalMetric {
  enum class Kind {
    kMethodRatio,
    kCitancesPerPaper,
    kCitancesPerPaperMethod,
    kCitancesPerPaperNonMethod,
    kMarkerRatio,
    kMeanReadability,
  };
  Kind kind = Kind::kMethodRatio;
  MarkerCategory category = MarkerCategory::kHedges;  // for kMarkerRatio

  std::string Name() const;  // e.g. "method_ratio", "hedges_ratio"
  static std::optional<TemporalMetric> Parse(std::string_view name);
  static TemporalMetric Marker(MarkerCategory c) {
    return {Kind::kMarkerRatio, c};
  }
  std::optional<double> Evaluate(const GroupStats &stats) const;
};

// Every metric, in report order.
std::vector<TemporalMetric> AllTemporalMetrics();

struct TemporalPoint {
  VersionId version_id;
  int object_history_year = 0;
  std::string metric;
  long n_citances = 0;
  std::optional<double> metric_value;
  bool suppressed = false;
};

using BucketKey = std::pair<VersionId, int>;  // (version, history year)

std::vector<TemporalPoint> TemporalSeries(
    const std::map<BucketKey, GroupStats> &buckets,
    const TemporalMetric &metric, long suppression_min,
    const VersionRegistry &registry);

// One point per (version, object-history year) holding >=1 citance; points
// under `suppression_min` citances are flagged.
std::vector<TemporalPoint> TemporalSeries(std::span<const Citance> citances,
                                          const TemporalMetric &metric,
                                          long suppression_min,
                                          const VersionRegistry &registry);

inline constexpr std::string_view kAllVersionsLabel = "All";

struct SectionMarkerRow {
  std::string version_id;  // or "All"
  SectionKind section_kind = SectionKind::kMethod;
  long n_citances = 0;
  std::array<std::optional<double>, kMarkerCategoryCount> marker_ratios{};
  std::optional<double> hedging_ratio;
  std::optional<double> mean_readability;
};

using VersionKindKey = std::pair<VersionId, SectionKind>;

std::vector<SectionMarkerRow> SectionMarkerTable(
    const std::map<VersionKindKey, GroupStats> &groups,
    const std::vector<VersionId> &include_list,
    const VersionRegistry &registry);

// Rows per version x section kind, then "All" rows aggregating the versions
// in `include_list`. Empty groups are omitted.
std::vector<SectionMarkerRow> SectionMarkerTable(
    std::span<const Citance> citances,
    const std::vector<VersionId> &include_list,
    const VersionRegistry &registry);

using NamedProfiles = std::map<std::string, VerbProfile>;

// Requested comparisons: (All, Method), (All, NonMethod),
// (Method, NonMethod), and for every version label V present as "V/All":
// (V/All, Method), (V/All, NonMethod), (V/Method, Method),
// (V/NonMethod, NonMethod). Degenerate pairs carry rho = nullopt.
std::vector<CorrelationResult> CrossProfileCorrelations(
    const NamedProfiles &profiles, std::span<const std::string> candidates,
    const std::vector<VersionId> &version_order);

struct CitingRatioPoint {
  std::string scope;      // "all" or a version id
  std::string year_kind;  // "calendar" or "history"
  int year = 0;
  long citing_papers = 0;
  long total_papers = 0;
  double ratio = 0.0;
};

struct CorpusYearStats {
  std::map<int, long> papers_per_year;
  std::map<int, long> citing_papers_per_year;
  // (version, calendar year) -> papers citing that version
  std::map<std::pair<VersionId, int>, long> version_citing_papers;
};

// Calendar-year ratios of citing papers, then per-version ratios indexed by
// object-history year. Years without sampled papers are omitted.
std::vector<CitingRatioPoint> CitingRatioSeries(
    const CorpusYearStats &stats, const VersionRegistry &registry);

// Everything the reports need, accumulated one document at a time. Merging
// partials from any partition of the corpus yields identical values.
struct CorpusAggregate {
  long documents = 0;
  long invalid_documents = 0;
  long skipped_anchors = 0;
  long flagged_citances = 0;  // negative object history
  MethodCoverage coverage;
  std::map<VersionId, GroupStats> by_version;
  std::map<BucketKey, GroupStats> by_bucket;
  std::map<VersionKindKey, GroupStats> by_version_kind;
  std::map<VersionKindKey, std::map<std::string, long>> verb_counts;
  CorpusYearStats years;

  // Citances of one document; `year` is the document's publication year.
  void AddDocument(int year, std::span<const Citance> citances);
  void Merge(const CorpusAggregate &other);
};

// Lemma counts summed over versions in `versions` and the given kinds.
std::map<std::string, long> SumVerbCounts(
    const CorpusAggregate &agg, const std::set<VersionId> &versions,
    const std::set<SectionKind> &kinds);

}  // namespace citectx

#endif  // CITECTX_ANALYTICS_H_
