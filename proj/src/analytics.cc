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

#include "citectx/analytics.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "citectx/error.h"

namespace citectx {
namespace {

constexpr double kFixedScale = 1e9;

std::optional<double> Ratio(long num, long den) {
  if (den <= 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

std::size_t RegistryRank(const VersionRegistry &registry,
                         const VersionId &version) {
  return registry.IndexOf(version).value_or(
      std::numeric_limits<std::size_t>::max());
}

// Groups citances into documents (by doc_id, first-appearance order) and
// folds them into a fresh aggregate.
CorpusAggregate AggregateCitances(std::span<const Citance> citances) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<Citance>> by_doc;
  for (const auto &c : citances) {
    auto [it, inserted] = by_doc.try_emplace(c.doc_id);
    if (inserted) order.push_back(c.doc_id);
    it->second.push_back(c);
  }
  CorpusAggregate agg;
  for (const auto &doc_id : order) {
    const auto &list = by_doc.at(doc_id);
    agg.AddDocument(list.front().citing_year, list);
  }
  return agg;
}

}  // namespace

void FixedSum::Add(double value) {
  units_ += static_cast<__int128>(std::llround(value * kFixedScale));
}

double FixedSum::Value() const {
  return static_cast<double>(units_) / kFixedScale;
}

void GroupStats::AddDocument(std::span<const Citance *const> group) {
  if (group.empty()) return;
  bool any_method = false;
  bool any_non_method = false;
  for (const Citance *c : group) {
    ++citances;
    if (c->section_kind == SectionKind::kMethod) {
      ++method_citances;
      any_method = true;
    } else {
      any_non_method = true;
    }
    for (std::size_t k = 0; k < kMarkerCategoryCount; ++k) {
      if (c->features.marker_hit[k]) ++marker_hits[k];
    }
    flesch.Add(c->features.flesch);
  }
  ++papers;
  if (any_method) ++method_papers;
  if (any_non_method) ++non_method_papers;
}

void GroupStats::Merge(const GroupStats &other) {
  citances += other.citances;
  method_citances += other.method_citances;
  papers += other.papers;
  method_papers += other.method_papers;
  non_method_papers += other.non_method_papers;
  for (std::size_t k = 0; k < kMarkerCategoryCount; ++k) {
    marker_hits[k] += other.marker_hits[k];
  }
  flesch.Merge(other.flesch);
}

std::optional<double> GroupStats::MarkerRatio(MarkerCategory c) const {
  return Ratio(marker_hits[static_cast<std::size_t>(c)], citances);
}

std::optional<double> GroupStats::MeanReadability() const {
  if (citances <= 0) return std::nullopt;
  return flesch.Value() / static_cast<double>(citances);
}

VersionSummary SummarizeGroup(const VersionId &version_id,
                              const GroupStats &stats) {
  VersionSummary s;
  s.version_id = version_id;
  s.citing_papers = stats.papers;
  s.citing_papers_with_method_citance_ratio =
      Ratio(stats.method_papers, stats.papers);
  s.citances = stats.citances;
  s.method_citances = stats.method_citances;
  s.non_method_citances = stats.citances - stats.method_citances;
  s.method_citance_ratio = Ratio(stats.method_citances, stats.citances);
  s.citances_per_paper = Ratio(stats.citances, stats.papers);
  for (MarkerCategory c : kAllMarkerCategories) {
    s.marker_ratios[static_cast<std::size_t>(c)] = stats.MarkerRatio(c);
  }
  s.hedging_ratio = stats.MarkerRatio(MarkerCategory::kHedges);
  s.mean_readability = stats.MeanReadability();
  return s;
}

VersionSummary SummarizeVersion(std::span<const Citance> citances) {
  if (citances.empty()) return SummarizeGroup("", GroupStats{});
  for (const auto &c : citances) {
    if (c.version_id != citances.front().version_id) {
      throw Error(ErrorCode::kMixedVersions,
                  citances.front().version_id + " vs " + c.version_id);
    }
  }
  const CorpusAggregate agg = AggregateCitances(citances);
  return SummarizeGroup(citances.front().version_id,
                        agg.by_version.at(citances.front().version_id));
}

std::string TemporalMetric::Name() const {
  switch (kind) {
    case Kind::kMethodRatio: return "method_ratio";
    case Kind::kCitancesPerPaper: return "citances_per_paper";
    case Kind::kCitancesPerPaperMethod: return "citances_per_paper_method";
    case Kind::kCitancesPerPaperNonMethod:
      return "citances_per_paper_nonmethod";
    case Kind::kMarkerRatio:
      return std::string(MarkerCategoryName(category)) + "_ratio";
    case Kind::kMeanReadability: return "mean_readability";
  }
  return "unknown";
}

std::optional<TemporalMetric> TemporalMetric::Parse(std::string_view name) {
  for (const auto &m : AllTemporalMetrics()) {
    if (m.Name() == name) return m;
  }
  if (name == "hedging_ratio") return Marker(MarkerCategory::kHedges);
  return std::nullopt;
}

std::optional<double> TemporalMetric::Evaluate(const GroupStats &s) const {
  switch (kind) {
    case Kind::kMethodRatio: return Ratio(s.method_citances, s.citances);
    case Kind::kCitancesPerPaper: return Ratio(s.citances, s.papers);
    case Kind::kCitancesPerPaperMethod:
      return Ratio(s.method_citances, s.method_papers);
    case Kind::kCitancesPerPaperNonMethod:
      return Ratio(s.citances - s.method_citances, s.non_method_papers);
    case Kind::kMarkerRatio: return s.MarkerRatio(category);
    case Kind::kMeanReadability: return s.MeanReadability();
  }
  return std::nullopt;
}

std::vector<TemporalMetric> AllTemporalMetrics() {
  using K = TemporalMetric::Kind;
  std::vector<TemporalMetric> out = {{K::kMethodRatio},
                                     {K::kCitancesPerPaper},
                                     {K::kCitancesPerPaperMethod},
                                     {K::kCitancesPerPaperNonMethod}};
  for (MarkerCategory c : kAllMarkerCategories) {
    out.push_back(TemporalMetric::Marker(c));
  }
  out.push_back({K::kMeanReadability});
  return out;
}

std::vector<TemporalPoint> TemporalSeries(
    const std::map<BucketKey, GroupStats> &buckets,
    const TemporalMetric &metric, long suppression_min,
    const VersionRegistry &registry) {
  std::vector<const std::pair<const BucketKey, GroupStats> *> ordered;
  for (const auto &entry : buckets) {
    if (entry.second.citances > 0) ordered.push_back(&entry);
  }
  std::stable_sort(ordered.begin(), ordered.end(), [&](auto *a, auto *b) {
    const auto ra = RegistryRank(registry, a->first.first);
    const auto rb = RegistryRank(registry, b->first.first);
    if (ra != rb) return ra < rb;
    if (a->first.first != b->first.first) return a->first.first < b->first.first;
    return a->first.second < b->first.second;
  });
  std::vector<TemporalPoint> out;
  out.reserve(ordered.size());
  for (const auto *entry : ordered) {
    TemporalPoint p;
    p.version_id = entry->first.first;
    p.object_history_year = entry->first.second;
    p.metric = metric.Name();
    p.n_citances = entry->second.citances;
    p.metric_value = metric.Evaluate(entry->second);
    p.suppressed = p.n_citances < suppression_min;
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<TemporalPoint> TemporalSeries(std::span<const Citance> citances,
                                          const TemporalMetric &metric,
                                          long suppression_min,
                                          const VersionRegistry &registry) {
  return TemporalSeries(AggregateCitances(citances).by_bucket, metric,
                        suppression_min, registry);
}

namespace {

SectionMarkerRow MakeMarkerRow(std::string version, SectionKind kind,
                               const GroupStats &s) {
  SectionMarkerRow row;
  row.version_id = std::move(version);
  row.section_kind = kind;
  row.n_citances = s.citances;
  for (MarkerCategory c : kAllMarkerCategories) {
    row.marker_ratios[static_cast<std::size_t>(c)] = s.MarkerRatio(c);
  }
  row.hedging_ratio = s.MarkerRatio(MarkerCategory::kHedges);
  row.mean_readability = s.MeanReadability();
  return row;
}

}  // namespace

std::vector<SectionMarkerRow> SectionMarkerTable(
    const std::map<VersionKindKey, GroupStats> &groups,
    const std::vector<VersionId> &include_list,
    const VersionRegistry &registry) {
  std::vector<SectionMarkerRow> rows;
  std::set<VersionId> seen;
  std::vector<VersionId> versions;
  for (const auto &[key, stats] : groups) {
    if (seen.insert(key.first).second) versions.push_back(key.first);
  }
  std::stable_sort(versions.begin(), versions.end(),
                   [&](const VersionId &a, const VersionId &b) {
                     return RegistryRank(registry, a) <
                            RegistryRank(registry, b);
                   });
  constexpr SectionKind kKinds[] = {SectionKind::kMethod,
                                    SectionKind::kNonMethod};
  for (const auto &v : versions) {
    for (SectionKind kind : kKinds) {
      auto it = groups.find({v, kind});
      if (it == groups.end() || it->second.citances == 0) continue;
      rows.push_back(MakeMarkerRow(v, kind, it->second));
    }
  }
  const std::set<VersionId> included(include_list.begin(), include_list.end());
  for (SectionKind kind : kKinds) {
    GroupStats all;
    for (const auto &[key, stats] : groups) {
      if (key.second == kind && included.count(key.first)) all.Merge(stats);
    }
    if (all.citances == 0) continue;
    rows.push_back(MakeMarkerRow(std::string(kAllVersionsLabel), kind, all));
  }
  return rows;
}

std::vector<SectionMarkerRow> SectionMarkerTable(
    std::span<const Citance> citances,
    const std::vector<VersionId> &include_list,
    const VersionRegistry &registry) {
  return SectionMarkerTable(AggregateCitances(citances).by_version_kind,
                            include_list, registry);
}

std::vector<CorrelationResult> CrossProfileCorrelations(
    const NamedProfiles &profiles, std::span<const std::string> candidates,
    const std::vector<VersionId> &version_order) {
  std::vector<std::pair<std::string, std::string>> pairs = {
      {"All", "Method"}, {"All", "NonMethod"}, {"Method", "NonMethod"}};
  for (const auto &v : version_order) {
    if (!profiles.count(v + "/All")) continue;
    pairs.emplace_back(v + "/All", "Method");
    pairs.emplace_back(v + "/All", "NonMethod");
    pairs.emplace_back(v + "/Method", "Method");
    pairs.emplace_back(v + "/NonMethod", "NonMethod");
  }
  std::vector<CorrelationResult> out;
  for (const auto &[left, right] : pairs) {
    auto a = profiles.find(left);
    auto b = profiles.find(right);
    if (a == profiles.end() || b == profiles.end()) continue;
    CorrelationResult r;
    r.n = static_cast<long>(candidates.size());
    r.pair = {left, right};
    if (!candidates.empty()) {
      try {
        r = SpearmanRho(a->second, b->second, candidates);
      } catch (const Error &e) {
        if (e.code() != ErrorCode::kDegenerateRanks) throw;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CitingRatioPoint> CitingRatioSeries(
    const CorpusYearStats &stats, const VersionRegistry &registry) {
  std::vector<CitingRatioPoint> out;
  for (const auto &[year, total] : stats.papers_per_year) {
    if (total <= 0) continue;
    auto it = stats.citing_papers_per_year.find(year);
    const long citing = it == stats.citing_papers_per_year.end() ? 0 : it->second;
    out.push_back({"all", "calendar", year, citing, total,
                   static_cast<double>(citing) / static_cast<double>(total)});
  }
  for (const auto &entry : registry.entries()) {
    std::map<int, long> citing_by_year;
    for (const auto &[key, n] : stats.version_citing_papers) {
      if (key.first == entry.version_id) citing_by_year[key.second] += n;
    }
    std::set<int> years;
    for (const auto &[year, total] : stats.papers_per_year) {
      if (year >= entry.publication_year) years.insert(year);
    }
    for (const auto &[year, n] : citing_by_year) years.insert(year);
    if (citing_by_year.empty()) continue;
    for (int year : years) {
      auto total_it = stats.papers_per_year.find(year);
      if (total_it == stats.papers_per_year.end() || total_it->second <= 0) {
        continue;
      }
      auto c = citing_by_year.find(year);
      const long citing = c == citing_by_year.end() ? 0 : c->second;
      out.push_back({entry.version_id, "history",
                     year - entry.publication_year, citing, total_it->second,
                     static_cast<double>(citing) /
                         static_cast<double>(total_it->second)});
    }
  }
  return out;
}

void CorpusAggregate::AddDocument(int year,
                                  std::span<const Citance> citances) {
  ++documents;
  ++years.papers_per_year[year];
  if (citances.empty()) return;
  ++years.citing_papers_per_year[year];

  std::map<VersionId, std::vector<const Citance *>> per_version;
  std::map<VersionKindKey, std::vector<const Citance *>> per_kind;
  for (const auto &c : citances) {
    per_version[c.version_id].push_back(&c);
    per_kind[{c.version_id, c.section_kind}].push_back(&c);
    if (c.history_flagged) ++flagged_citances;
    auto &verbs = verb_counts[{c.version_id, c.section_kind}];
    for (const auto &lemma : c.features.primary_verbs) ++verbs[lemma];
  }
  for (const auto &[version, group] : per_version) {
    by_version[version].AddDocument(group);
    by_bucket[{version, group.front()->object_history_years}].AddDocument(
        group);
    ++years.version_citing_papers[{version, year}];
  }
  for (const auto &[key, group] : per_kind) {
    by_version_kind[key].AddDocument(group);
  }
}

void CorpusAggregate::Merge(const CorpusAggregate &other) {
  documents += other.documents;
  invalid_documents += other.invalid_documents;
  skipped_anchors += other.skipped_anchors;
  flagged_citances += other.flagged_citances;
  coverage.Merge(other.coverage);
  for (const auto &[k, v] : other.by_version) by_version[k].Merge(v);
  for (const auto &[k, v] : other.by_bucket) by_bucket[k].Merge(v);
  for (const auto &[k, v] : other.by_version_kind) by_version_kind[k].Merge(v);
  for (const auto &[k, counts] : other.verb_counts) {
    auto &mine = verb_counts[k];
    for (const auto &[lemma, n] : counts) mine[lemma] += n;
  }
  for (const auto &[y, n] : other.years.papers_per_year) {
    years.papers_per_year[y] += n;
  }
  for (const auto &[y, n] : other.years.citing_papers_per_year) {
    years.citing_papers_per_year[y] += n;
  }
  for (const auto &[k, n] : other.years.version_citing_papers) {
    years.version_citing_papers[k] += n;
  }
}

std::map<std::string, long> SumVerbCounts(const CorpusAggregate &agg,
                                          const std::set<VersionId> &versions,
                                          const std::set<SectionKind> &kinds) {
  std::map<std::string, long> out;
  for (const auto &[key, counts] : agg.verb_counts) {
    if (!versions.count(key.first) || !kinds.count(key.second)) continue;
    for (const auto &[lemma, n] : counts) out[lemma] += n;
  }
  return out;
}

}  // namespace citectx
