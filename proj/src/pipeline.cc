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

#include "citectx/pipeline.h"

#include <cstdlib>
#include <exception>
#include <fstream>
#include <sstream>
#include <system_error>
#include <thread>
#include <unistd.h>

#include "citectx/csv.h"
#include "citectx/error.h"
#include "citectx/tokenizer.h"
#include "json.hpp"

namespace citectx {
namespace {

using nlohmann::json;

std::vector<std::string> StringList(const json &value, const char *key) {
  if (!value.is_array()) {
    throw Error(ErrorCode::kInvalidConfig,
                std::string(key) + " must be an array of strings");
  }
  std::vector<std::string> out;
  for (const auto &item : value) {
    if (!item.is_string()) {
      throw Error(ErrorCode::kInvalidConfig,
                  std::string(key) + " must be an array of strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::string StringValue(const json &value, const char *key) {
  if (!value.is_string()) {
    throw Error(ErrorCode::kInvalidConfig, std::string(key) + " must be a string");
  }
  return value.get<std::string>();
}

long IntValue(const json &value, const char *key) {
  if (!value.is_number_integer()) {
    throw Error(ErrorCode::kInvalidConfig,
                std::string(key) + " must be an integer");
  }
  return value.get<long>();
}

std::set<std::string> LowerSet(const std::vector<std::string> &items) {
  std::set<std::string> out;
  for (const auto &s : items) out.insert(AsciiLower(s));
  return out;
}

std::ofstream OpenOutput(const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  return out;
}

void CloseOutput(std::ofstream &out, const std::filesystem::path &path) {
  out.close();
  if (!out) throw Error(ErrorCode::kIoError, "write failed: " + path.string());
}

std::vector<std::string> MarkerRatioHeaders() {
  std::vector<std::string> out;
  for (MarkerCategory c : kAllMarkerCategories) {
    out.push_back(std::string(MarkerCategoryName(c)) + "_ratio");
  }
  return out;
}

void Append(std::vector<std::string> &row,
            const std::array<std::optional<double>, kMarkerCategoryCount> &r) {
  for (const auto &v : r) row.push_back(FormatOptional(v));
}

void WriteVersions(const CorpusAggregate &agg, const VersionRegistry &registry,
                   std::ostream &out) {
  CsvWriter csv(out);
  std::vector<std::string> header = {
      "version_id", "label", "publication_year", "citing_papers",
      "citing_papers_with_method_citance_ratio", "citances",
      "method_citances", "non_method_citances", "method_citance_ratio",
      "citances_per_paper"};
  for (auto &h : MarkerRatioHeaders()) header.push_back(h);
  header.push_back("mean_readability");
  csv.Row(header);
  for (const auto &entry : registry.entries()) {
    auto it = agg.by_version.find(entry.version_id);
    if (it == agg.by_version.end() || it->second.citances == 0) continue;
    const VersionSummary s = SummarizeGroup(entry.version_id, it->second);
    std::vector<std::string> row = {
        s.version_id,
        entry.label,
        std::to_string(entry.publication_year),
        std::to_string(s.citing_papers),
        FormatOptional(s.citing_papers_with_method_citance_ratio),
        std::to_string(s.citances),
        std::to_string(s.method_citances),
        std::to_string(s.non_method_citances),
        FormatOptional(s.method_citance_ratio),
        FormatOptional(s.citances_per_paper)};
    Append(row, s.marker_ratios);
    row.push_back(FormatOptional(s.mean_readability));
    csv.Row(row);
  }
}

void WriteMarkersBySection(const CorpusAggregate &agg,
                           const AnalysisConfig &config,
                           const VersionRegistry &registry, std::ostream &out) {
  CsvWriter csv(out);
  std::vector<std::string> header = {"version_id", "section_kind",
                                     "n_citances"};
  for (auto &h : MarkerRatioHeaders()) header.push_back(h);
  header.push_back("mean_readability");
  csv.Row(header);
  for (const auto &r : SectionMarkerTable(agg.by_version_kind,
                                          config.version_include_list,
                                          registry)) {
    std::vector<std::string> row = {r.version_id,
                                    std::string(SectionKindName(r.section_kind)),
                                    std::to_string(r.n_citances)};
    Append(row, r.marker_ratios);
    row.push_back(FormatOptional(r.mean_readability));
    csv.Row(row);
  }
}

NamedProfiles BuildProfiles(const CorpusAggregate &agg,
                            const AnalysisConfig &config) {
  const std::set<VersionId> include(config.version_include_list.begin(),
                                    config.version_include_list.end());
  const std::set<SectionKind> both = {SectionKind::kMethod,
                                      SectionKind::kNonMethod};
  auto profile = [&](const std::string &name, const std::set<VersionId> &vs,
                     const std::set<SectionKind> &kinds) {
    return VerbProfile::FromCounts(name, SumVerbCounts(agg, vs, kinds),
                                   config.verb_min_count, config.stopverbs);
  };
  NamedProfiles profiles;
  profiles.emplace("All", profile("All", include, both));
  profiles.emplace("Method", profile("Method", include, {SectionKind::kMethod}));
  profiles.emplace("NonMethod",
                   profile("NonMethod", include, {SectionKind::kNonMethod}));
  for (const auto &v : config.version_include_list) {
    bool present = false;
    for (SectionKind k : both) present |= agg.verb_counts.count({v, k}) > 0;
    if (!present) continue;
    profiles.emplace(v + "/All", profile(v + "/All", {v}, both));
    profiles.emplace(v + "/Method",
                     profile(v + "/Method", {v}, {SectionKind::kMethod}));
    profiles.emplace(v + "/NonMethod",
                     profile(v + "/NonMethod", {v}, {SectionKind::kNonMethod}));
  }
  return profiles;
}

void WriteTopVerbs(const NamedProfiles &profiles, std::size_t k,
                   std::ostream &out) {
  CsvWriter csv(out);
  csv.Row({"rank", "all_lemma", "all_count", "method_lemma", "method_count",
           "non_method_lemma", "non_method_count"});
  const auto all = TopVerbs(profiles.at("All"), k);
  const auto method = TopVerbs(profiles.at("Method"), k);
  const auto non_method = TopVerbs(profiles.at("NonMethod"), k);
  const std::size_t rows =
      std::max({all.size(), method.size(), non_method.size()});
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<std::string> row = {std::to_string(i + 1)};
    for (const auto *list : {&all, &method, &non_method}) {
      if (i < list->size()) {
        row.push_back((*list)[i].first);
        row.push_back(std::to_string((*list)[i].second));
      } else {
        row.push_back("");
        row.push_back("");
      }
    }
    csv.Row(row);
  }
}

void WriteCorrelations(const NamedProfiles &profiles,
                       const AnalysisConfig &config, std::ostream &out) {
  CsvWriter csv(out);
  csv.Row({"left", "right", "n", "rho"});
  const auto &candidates = profiles.at("All").candidate_set;
  if (candidates.empty()) return;
  for (const auto &r : CrossProfileCorrelations(profiles, candidates,
                                                config.version_include_list)) {
    csv.Row({r.pair.first, r.pair.second, std::to_string(r.n),
             FormatOptional(r.rho)});
  }
}

void WriteTemporal(const CorpusAggregate &agg, const AnalysisConfig &config,
                   const VersionRegistry &registry, std::ostream &out) {
  CsvWriter csv(out);
  csv.Row({"version_id", "object_history_year", "metric", "n_citances",
           "value", "suppressed"});
  for (const auto &metric : AllTemporalMetrics()) {
    for (const auto &p : TemporalSeries(agg.by_bucket, metric,
                                        config.suppression_min, registry)) {
      csv.Row({p.version_id, std::to_string(p.object_history_year), p.metric,
               std::to_string(p.n_citances), FormatOptional(p.metric_value),
               p.suppressed ? "true" : "false"});
    }
  }
}

void WriteCitingRatio(const CorpusAggregate &agg,
                      const VersionRegistry &registry, std::ostream &out) {
  CsvWriter csv(out);
  csv.Row({"scope", "year_kind", "year", "citing_papers", "total_papers",
           "ratio"});
  for (const auto &p : CitingRatioSeries(agg.years, registry)) {
    csv.Row({p.scope, p.year_kind, std::to_string(p.year),
             std::to_string(p.citing_papers), std::to_string(p.total_papers),
             FormatDouble(p.ratio)});
  }
}

}  // namespace

void AnalysisConfig::ApplyJson(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kInvalidConfig,
                std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) {
    throw Error(ErrorCode::kInvalidConfig, "config must be a JSON object");
  }
  for (const auto &[key, value] : j.items()) {
    const char *k = key.c_str();
    if (key == "corpus") {
      corpus_path = StringValue(value, k);
    } else if (key == "registry") {
      registry_path = StringValue(value, k);
    } else if (key == "lexicon") {
      lexicon_path = StringValue(value, k);
    } else if (key == "tagger_model") {
      tagger_model_path = StringValue(value, k);
    } else if (key == "out") {
      output_dir = StringValue(value, k);
    } else if (key == "emit_citances") {
      emit_citances_path = StringValue(value, k);
    } else if (key == "workers") {
      worker_count = static_cast<int>(IntValue(value, k));
    } else if (key == "suppression_min") {
      suppression_min = IntValue(value, k);
    } else if (key == "verb_min_count") {
      verb_min_count = IntValue(value, k);
    } else if (key == "top_verbs") {
      top_verbs = static_cast<std::size_t>(std::max(0L, IntValue(value, k)));
    } else if (key == "stopverbs") {
      stopverbs = LowerSet(StringList(value, k));
    } else if (key == "version_include_list") {
      version_include_list = StringList(value, k);
    } else if (key == "method_include_terms") {
      title_rules.include_terms = LowerSet(StringList(value, k));
    } else if (key == "method_exclude_terms") {
      title_rules.exclude_terms = LowerSet(StringList(value, k));
    } else if (key == "methodful_only") {
      if (!value.is_boolean()) {
        throw Error(ErrorCode::kInvalidConfig, "methodful_only must be a boolean");
      }
      methodful_only = value.get<bool>();
    } else {
      throw Error(ErrorCode::kInvalidConfig, "unknown config key: " + key);
    }
  }
}

void AnalysisConfig::Validate() const {
  if (corpus_path.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "corpus path is required");
  }
  if (output_dir.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "output directory is required");
  }
  if (suppression_min < 1) {
    throw Error(ErrorCode::kInvalidConfig, "suppression_min must be >= 1");
  }
  if (verb_min_count < 1) {
    throw Error(ErrorCode::kInvalidConfig, "verb_min_count must be >= 1");
  }
  if (worker_count < 1) {
    throw Error(ErrorCode::kInvalidConfig, "workers must be >= 1");
  }
  title_rules.Validate();
}

std::string DefaultTaggerModelPath() {
  if (const char *env = std::getenv("CITECTX_TAGGER_MODEL"); env && *env) {
    return env;
  }
  return std::string(CITECTX_DATA_DIR) + "/tagger/citance-pos.model";
}

AnalysisContext AnalysisContext::Load(const AnalysisConfig &config) {
  AnalysisContext ctx;
  if (!config.registry_path.empty()) {
    ctx.registry = VersionRegistry::Load(config.registry_path);
  }
  if (!config.lexicon_path.empty()) {
    ctx.lexicon = MarkerLexicon::Load(config.lexicon_path);
  }
  ctx.tagger = PosTagger::Load(config.tagger_model_path.empty()
                                   ? DefaultTaggerModelPath()
                                   : config.tagger_model_path);
  ctx.title_rules = config.title_rules;
  ctx.methodful_only = config.methodful_only;
  return ctx;
}

void ComputeFeatures(Citance &citance, const AnalysisContext &ctx) {
  const std::vector<std::string> tokens = Tokenize(citance.sentence.text);
  citance.features = ComputeTextFeatures(tokens, ctx.lexicon);
  const auto tagged =
      TagSentence(citance.sentence.text, ctx.tagger, citance.token_tags);
  citance.features.primary_verbs = ExtractPrimaryVerbs(tagged);
}

SentenceInspection InspectSentence(std::string_view sentence,
                                   const AnalysisContext &ctx) {
  SentenceInspection out;
  out.tokens = Tokenize(sentence);
  if (out.tokens.empty()) {
    throw Error(ErrorCode::kEmptySentence, "empty input");
  }
  out.features = ComputeTextFeatures(out.tokens, ctx.lexicon);
  out.tagged = TagSentence(sentence, ctx.tagger);
  out.features.primary_verbs = ExtractPrimaryVerbs(out.tagged);
  for (const auto &t : out.tokens) out.syllables.push_back(CountSyllables(t));
  return out;
}

DocumentResult AnalyzeDocument(const Document &doc,
                               const AnalysisContext &ctx) {
  DocumentResult result;
  result.year = doc.publication_year;
  if (!ValidateDocument(doc).empty()) {
    result.valid = false;
    return result;
  }
  const SectionKinds kinds = ClassifySections(doc, ctx.title_rules);
  result.coverage.Add(doc, ctx.title_rules);
  if (ctx.methodful_only) {
    bool methodful = false;
    for (const auto &[id, kind] : kinds) {
      methodful |= kind == SectionKind::kMethod;
    }
    if (!methodful) return result;
  }
  ExtractionResult extraction = ExtractCitances(doc, kinds, ctx.registry);
  result.skipped_anchors = extraction.skipped_anchors;
  result.citances = std::move(extraction.citances);
  for (auto &c : result.citances) ComputeFeatures(c, ctx);
  return result;
}

namespace {

void AnalyzeSlice(const std::vector<std::string> &lines, std::size_t begin,
                  std::size_t end, const AnalysisContext &ctx,
                  bool keep_citances, CorpusAnalysis &out) {
  for (std::size_t i = begin; i < end; ++i) {
    Document doc;
    try {
      doc = ParseDocumentRecord(lines[i]);
    } catch (const Error &) {
      ++out.malformed_records;
      ++out.aggregate.invalid_documents;
      continue;
    }
    DocumentResult r = AnalyzeDocument(doc, ctx);
    if (!r.valid) {
      ++out.aggregate.invalid_documents;
      continue;
    }
    out.aggregate.skipped_anchors += r.skipped_anchors;
    out.aggregate.coverage.Merge(r.coverage);
    out.aggregate.AddDocument(r.year, r.citances);
    if (keep_citances) {
      for (auto &c : r.citances) out.citances.push_back(std::move(c));
    }
  }
}

}  // namespace

CorpusAnalysis AnalyzeCorpus(const std::vector<std::string> &lines,
                             const AnalysisContext &ctx, int workers,
                             bool keep_citances) {
  const std::size_t n = lines.size();
  const std::size_t slices =
      std::max<std::size_t>(1, std::min<std::size_t>(workers, n));
  std::vector<CorpusAnalysis> partial(slices);
  std::vector<std::exception_ptr> errors(slices);
  auto run = [&](std::size_t s) {
    try {
      AnalyzeSlice(lines, n * s / slices, n * (s + 1) / slices, ctx,
                   keep_citances, partial[s]);
    } catch (...) {
      errors[s] = std::current_exception();
    }
  };
  if (slices == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t s = 0; s < slices; ++s) threads.emplace_back(run, s);
    for (auto &t : threads) t.join();
  }
  for (const auto &e : errors) {
    if (e) std::rethrow_exception(e);
  }
  CorpusAnalysis result = std::move(partial[0]);
  for (std::size_t s = 1; s < slices; ++s) {
    result.aggregate.Merge(partial[s].aggregate);
    result.malformed_records += partial[s].malformed_records;
    for (auto &c : partial[s].citances) result.citances.push_back(std::move(c));
  }
  return result;
}

std::string ReadTextFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> ReadCorpusLines(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read corpus " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    lines.push_back(std::move(line));
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "error reading " + path);
  return lines;
}

std::vector<std::string> ReportFileNames() {
  return {"versions.csv",   "markers_by_section.csv", "top_verbs.csv",
          "correlations.csv", "temporal.csv",         "citing_ratio.csv"};
}

void WriteReports(const CorpusAggregate &agg, const AnalysisContext &ctx,
                  const AnalysisConfig &config,
                  const std::filesystem::path &dir) {
  const NamedProfiles profiles = BuildProfiles(agg, config);
  const auto names = ReportFileNames();
  for (const auto &name : names) {
    const auto path = dir / name;
    std::ofstream out = OpenOutput(path);
    if (name == "versions.csv") {
      WriteVersions(agg, ctx.registry, out);
    } else if (name == "markers_by_section.csv") {
      WriteMarkersBySection(agg, config, ctx.registry, out);
    } else if (name == "top_verbs.csv") {
      WriteTopVerbs(profiles, config.top_verbs, out);
    } else if (name == "correlations.csv") {
      WriteCorrelations(profiles, config, out);
    } else if (name == "temporal.csv") {
      WriteTemporal(agg, config, ctx.registry, out);
    } else {
      WriteCitingRatio(agg, ctx.registry, out);
    }
    CloseOutput(out, path);
  }
}

std::string CitanceToJson(const Citance &c) {
  json j;
  j["doc_id"] = c.doc_id;
  j["section_id"] = c.sentence.section_id;
  j["paragraph_index"] = c.sentence.paragraph_index;
  j["char_start"] = c.sentence.char_start;
  j["char_end"] = c.sentence.char_end;
  j["text"] = c.sentence.text;
  j["version_id"] = c.version_id;
  j["section_kind"] = std::string(SectionKindName(c.section_kind));
  j["citing_year"] = c.citing_year;
  j["object_history_years"] = c.object_history_years;
  j["history_flagged"] = c.history_flagged;
  json hits = json::object();
  json counts = json::object();
  for (MarkerCategory cat : kAllMarkerCategories) {
    const std::string name(MarkerCategoryName(cat));
    hits[name] = c.features.Hit(cat);
    counts[name] = c.features.marker_count[static_cast<std::size_t>(cat)];
  }
  j["marker_hit"] = hits;
  j["marker_count"] = counts;
  j["flesch"] = c.features.flesch;
  j["word_count"] = c.features.word_count;
  j["syllable_count"] = c.features.syllable_count;
  j["primary_verbs"] = c.features.primary_verbs;
  return j.dump();
}

void WriteCitancesJsonl(const std::vector<Citance> &citances,
                        const std::filesystem::path &path) {
  std::ofstream out = OpenOutput(path);
  for (const auto &c : citances) out << CitanceToJson(c) << '\n';
  CloseOutput(out, path);
}

CorpusAnalysis RunAnalysis(const AnalysisConfig &config) {
  namespace fs = std::filesystem;
  config.Validate();
  const AnalysisContext ctx = AnalysisContext::Load(config);
  const std::vector<std::string> lines = ReadCorpusLines(config.corpus_path);
  CorpusAnalysis analysis = AnalyzeCorpus(
      lines, ctx, config.worker_count, !config.emit_citances_path.empty());

  const fs::path out_dir = fs::absolute(config.output_dir);
  const fs::path parent = out_dir.parent_path();
  std::error_code ec;
  fs::create_directories(parent, ec);
  const std::string stem = "." + out_dir.filename().string() + ".tmp-" +
                           std::to_string(::getpid());
  const fs::path staging = parent / stem;
  fs::remove_all(staging, ec);
  try {
    if (!fs::create_directory(staging)) {
      throw Error(ErrorCode::kIoError, "cannot create " + staging.string());
    }
    WriteReports(analysis.aggregate, ctx, config, staging);
    if (!config.emit_citances_path.empty()) {
      const fs::path dump = fs::absolute(config.emit_citances_path);
      const fs::path tmp = dump.string() + ".tmp-" + std::to_string(::getpid());
      WriteCitancesJsonl(analysis.citances, tmp);
      fs::rename(tmp, dump);
    }
    if (fs::exists(out_dir)) fs::remove_all(out_dir);
    fs::rename(staging, out_dir);
  } catch (const fs::filesystem_error &e) {
    fs::remove_all(staging, ec);
    throw Error(ErrorCode::kIoError, e.what());
  } catch (...) {
    fs::remove_all(staging, ec);
    throw;
  }
  return analysis;
}

}  // namespace citectx
