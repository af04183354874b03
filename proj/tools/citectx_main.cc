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

// citectx: citation-context analysis command line.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "citectx/corpus.h"
#include "citectx/error.h"
#include "citectx/pipeline.h"
#include "citectx/synth.h"

namespace {

using namespace citectx;

constexpr int kExitOk = 0;
constexpr int kExitData = 1;
constexpr int kExitUsage = 2;

struct Flags {
  std::string config;
  std::optional<std::string> corpus, registry, lexicon, tagger_model, out,
      emit_citances;
  std::optional<int> workers;
  std::optional<long> suppression_min, verb_min_count;
};

void AddConfigFlags(CLI::App *cmd, Flags &f) {
  cmd->add_option("--config", f.config, "JSON config file");
  cmd->add_option("--corpus", f.corpus, "Corpus JSON Lines file");
  cmd->add_option("--registry", f.registry, "Version registry JSON");
  cmd->add_option("--lexicon", f.lexicon, "Marker lexicon JSON");
  cmd->add_option("--tagger-model", f.tagger_model, "POS tagger model");
  cmd->add_option("--out", f.out, "Report output directory");
  cmd->add_option("--workers", f.workers, "Worker threads");
  cmd->add_option("--suppression-min", f.suppression_min,
                  "Minimum citances per temporal bucket");
  cmd->add_option("--verb-min-count", f.verb_min_count,
                  "Minimum lemma count for the verb candidate set");
  cmd->add_option("--emit-citances", f.emit_citances,
                  "Write one JSON object per citance to this path");
}

AnalysisConfig BuildConfig(const Flags &f) {
  AnalysisConfig config;
  if (!f.config.empty()) config.ApplyJson(ReadTextFile(f.config));
  if (f.corpus) config.corpus_path = *f.corpus;
  if (f.registry) config.registry_path = *f.registry;
  if (f.lexicon) config.lexicon_path = *f.lexicon;
  if (f.tagger_model) config.tagger_model_path = *f.tagger_model;
  if (f.out) config.output_dir = *f.out;
  if (f.emit_citances) config.emit_citances_path = *f.emit_citances;
  if (f.workers) config.worker_count = *f.workers;
  if (f.suppression_min) config.suppression_min = *f.suppression_min;
  if (f.verb_min_count) config.verb_min_count = *f.verb_min_count;
  return config;
}

int RunValidate(const std::string &path) {
  std::vector<std::string> lines;
  try {
    lines = ReadCorpusLines(path);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  long violations = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    Document doc;
    try {
      doc = ParseDocumentRecord(lines[i]);
    } catch (const Error &e) {
      std::cerr << "error: line " << i + 1 << ": " << e.what() << "\n";
      return kExitUsage;
    }
    for (const auto &v : ValidateDocument(doc)) {
      std::cout << doc.doc_id << "\t" << v.code << "\t" << v.location << "\t"
                << v.detail << "\n";
      ++violations;
    }
  }
  return violations == 0 ? kExitOk : kExitData;
}

int RunAnalyze(const Flags &flags) {
  try {
    const AnalysisConfig config = BuildConfig(flags);
    const CorpusAnalysis result = RunAnalysis(config);
    const auto &agg = result.aggregate;
    long citances = 0;
    for (const auto &[v, stats] : agg.by_version) citances += stats.citances;
    std::cerr << "documents=" << agg.documents
              << " invalid=" << agg.invalid_documents
              << " methodful=" << agg.coverage.methodful_paper_count
              << " citances=" << citances
              << " skipped_anchors=" << agg.skipped_anchors
              << " flagged=" << agg.flagged_citances << "\n";
    return kExitOk;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int RunSynth(const std::string &spec_path, const std::string &out,
             std::string truth, const std::optional<std::string> &registry) {
  try {
    const SynthSpec spec = SynthSpec::Load(spec_path);
    const VersionRegistry reg =
        registry ? VersionRegistry::Load(*registry) : VersionRegistry::Default();
    const SynthOutput synth = GenerateSynthCorpus(spec, reg);
    if (truth.empty()) truth = out + ".truth.json";
    std::ofstream corpus(out, std::ios::binary | std::ios::trunc);
    if (!corpus) throw Error(ErrorCode::kIoError, "cannot write " + out);
    for (const auto &doc : synth.documents) {
      corpus << SerializeDocument(doc) << '\n';
    }
    std::ofstream sidecar(truth, std::ios::binary | std::ios::trunc);
    if (!sidecar) throw Error(ErrorCode::kIoError, "cannot write " + truth);
    sidecar << synth.ground_truth.dump(2) << '\n';
    if (!corpus.flush() || !sidecar.flush()) {
      throw Error(ErrorCode::kIoError, "write failed");
    }
    return kExitOk;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int RunInspect(const std::string &text, const Flags &flags) {
  AnalysisContext ctx;
  try {
    AnalysisConfig config;
    if (!flags.config.empty()) config.ApplyJson(ReadTextFile(flags.config));
    if (flags.lexicon) config.lexicon_path = *flags.lexicon;
    if (flags.registry) config.registry_path = *flags.registry;
    if (flags.tagger_model) config.tagger_model_path = *flags.tagger_model;
    ctx = AnalysisContext::Load(config);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  SentenceInspection s;
  try {
    s = InspectSentence(text, ctx);
  } catch (const Error &e) {
    if (e.code() != ErrorCode::kEmptySentence) throw;
    std::cerr << "empty input\n";
    return kExitData;
  }
  std::cout << "tokens:";
  for (const auto &t : s.tokens) std::cout << ' ' << t;
  std::cout << "\ntags:";
  for (const auto &t : s.tagged) std::cout << ' ' << t.token << '/' << t.tag;
  std::cout << "\nmarkers:";
  for (MarkerCategory c : kAllMarkerCategories) {
    std::cout << ' ' << MarkerCategoryName(c) << '='
              << s.features.marker_count[static_cast<std::size_t>(c)];
  }
  std::cout << "\nsyllables:";
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    std::cout << ' ' << s.tokens[i] << '=' << s.syllables[i];
  }
  std::cout << "\nwords: " << s.features.word_count
            << "\nsyllable_total: " << s.features.syllable_count
            << "\nflesch: " << s.features.flesch << "\nprimary_verbs:";
  for (const auto &v : s.features.primary_verbs) std::cout << ' ' << v;
  std::cout << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Citation-context analysis for cited research instruments"};
  app.require_subcommand(1);

  std::string validate_corpus;
  auto *validate = app.add_subcommand("validate", "Check corpus records");
  validate->add_option("--corpus,corpus", validate_corpus, "Corpus file")
      ->required();

  Flags analyze_flags;
  auto *analyze = app.add_subcommand("analyze", "Write the report set");
  AddConfigFlags(analyze, analyze_flags);

  std::string spec_path, synth_out, truth_path;
  std::optional<std::string> synth_registry;
  auto *synth = app.add_subcommand("synth", "Generate a planted corpus");
  synth->add_option("--spec", spec_path, "Synth spec JSON")->required();
  synth->add_option("--out", synth_out, "Corpus output path")->required();
  synth->add_option("--truth", truth_path,
                    "Ground-truth sidecar path (default: OUT.truth.json)");
  synth->add_option("--registry", synth_registry, "Version registry JSON");

  Flags inspect_flags;
  std::string sentence;
  auto *inspect = app.add_subcommand("inspect", "Show features of a sentence");
  AddConfigFlags(inspect, inspect_flags);
  inspect->add_option("sentence", sentence, "Sentence text")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*validate) return RunValidate(validate_corpus);
  if (*analyze) return RunAnalyze(analyze_flags);
  if (*synth) return RunSynth(spec_path, synth_out, truth_path, synth_registry);
  return RunInspect(sentence, inspect_flags);
}
