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

#ifndef CITECTX_SYNTH_H_
#define CITECTX_SYNTH_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "citectx/corpus.h"
#include "citectx/lexicon.h"
#include "citectx/reference_resolver.h"
#include "json.hpp"

namespace citectx {

// Linear curve over a version's object-history range.
struct LinearCurve {
  double start = 0.0;
  double end = 0.0;

  double At(int year, int first, int last) const;
};

struct SynthVersionSpec {
  VersionId version_id;
  int history_first = 0;
  int history_last = 0;
  LinearCurve citances;      // citances per history year (rounded)
  LinearCurve method_ratio;  // share of citances placed in Method sections

  long CitancesAt(int history_year) const;
  double MethodRatioAt(int history_year) const;
};

inline constexpr std::size_t kMethodPool = 0;
inline constexpr std::size_t kNonMethodPool = 1;

struct SynthSpec {
  std::uint64_t seed = 0;
  long n_docs = 0;
  // Publication years of papers without citances; defaults to the span of
  // citing years.
  std::optional<std::pair<int, int>> calendar_years;
  int citances_per_paper_min = 1;
  int citances_per_paper_max = 3;
  std::vector<SynthVersionSpec> versions;
  // [kMethodPool | kNonMethodPool][category]
  std::array<std::array<double, kMarkerCategoryCount>, 2> marker_probability{};
  std::array<std::vector<std::string>, 2> verb_pools;
  // Share of non-citing papers generated without any Method section.
  double methodless_fraction = 0.0;
  // Anchors to references outside the registry, placed in papers that have
  // a Method section.
  long distractor_anchors = 0;

  static SynthSpec FromJson(std::string_view text);
  static SynthSpec Load(const std::string &path);

  // Throws Error(kInvalidConfig).
  void Validate(const VersionRegistry &registry) const;
};

// Regular or irregular past-tense form of a verb lemma.
std::string PastTense(std::string_view lemma);

struct SynthOutput {
  std::vector<Document> documents;
  nlohmann::json ground_truth;
};

// Deterministic in (spec, registry). Counts are planted exactly: each
// bucket's Method share and each marker category's hits are round(p * n)
// over shuffled positions, and verbs are allocated to exact multisets.
SynthOutput GenerateSynthCorpus(const SynthSpec &spec,
                                const VersionRegistry &registry);

}  // namespace citectx

#endif  // CITECTX_SYNTH_H_
