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

#ifndef CITECTX_VERB_PROFILER_H_
#define CITECTX_VERB_PROFILER_H_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "citectx/pos_tagger.h"

namespace citectx {

struct Citance;

struct TaggedToken {
  std::string token;
  std::string tag;

  bool operator==(const TaggedToken &) const = default;
};

// Tags a sentence for clause analysis: word tokens (from Tokenize) carry
// the tagger's tags, or `pre_tags` verbatim when given and aligned; commas
// and brackets from the raw text are interleaved as ",", "-LRB-", "-RRB-".
std::vector<TaggedToken> TagSentence(
    std::string_view sentence, const PosTagger &tagger,
    const std::optional<std::vector<std::string>> &pre_tags = std::nullopt);

// Clause-opening words that push the scan into a subordinate region.
bool IsSubordinator(std::string_view token);

// Main-clause verbs, lemmatized, in sentence order. The scan tracks a clause
// depth: subordinators and opening brackets raise it, closing brackets lower
// it, and a comma closes a sentence-initial subordinate clause. At depth 0 a
// finite verb (VBD/VBZ/VBP, or a modal governing a VB) opens a verb group
// whose head is the last verb reachable through auxiliaries (modal -> VB,
// be -> VBN/VBG, have -> VBN, do -> VB). A verb coordinated to a primary
// verb with the same form is primary too.
std::vector<std::string> ExtractPrimaryVerbs(
    std::span<const TaggedToken> tagged);

std::string LemmatizeVerb(std::string_view token, std::string_view tag);

inline constexpr long kDefaultVerbMinCount = 10;

std::set<std::string> DefaultStopVerbs();  // {"be", "have"}

// Ranked primary-verb frequencies of one citance population.
struct VerbProfile {
  std::string population;
  std::map<std::string, long> freq;
  std::vector<std::string> candidate_set;  // count desc, then lemma asc
  std::map<std::string, double> ranks;     // average ranks over candidates

  static VerbProfile FromCounts(std::string population,
                                std::map<std::string, long> freq,
                                long min_count = kDefaultVerbMinCount,
                                const std::set<std::string> &stopverbs =
                                    DefaultStopVerbs());

  long Count(const std::string &lemma) const;
};

VerbProfile BuildVerbProfile(std::span<const Citance> citances,
                             std::string population,
                             long min_count = kDefaultVerbMinCount,
                             const std::set<std::string> &stopverbs =
                                 DefaultStopVerbs());

// 1-based ranks by descending value; tied values share the mean of the
// positions they occupy.
std::vector<double> AverageRanksDescending(std::span<const double> values);

struct CorrelationResult {
  std::optional<double> rho;  // nullopt when ranks are degenerate
  long n = 0;
  std::pair<std::string, std::string> pair;
};

// Spearman correlation as the Pearson correlation of average ranks over
// `candidates`; lemmas a profile lacks count as frequency 0. Throws
// Error(kDegenerateRanks) if either rank vector is constant and
// Error(kInvalidConfig) if `candidates` is empty.
CorrelationResult SpearmanRho(const VerbProfile &a, const VerbProfile &b,
                              std::span<const std::string> candidates);

// First k candidates with their counts.
std::vector<std::pair<std::string, long>> TopVerbs(const VerbProfile &profile,
                                                   std::size_t k);

}  // namespace citectx

#endif  // CITECTX_VERB_PROFILER_H_
