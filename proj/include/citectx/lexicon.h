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

#ifndef CITECTX_LEXICON_H_
#define CITECTX_LEXICON_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace citectx {

// The five interactional-marker classes.
enum class MarkerCategory {
  kHedges = 0,
  kBoosters,
  kAttitude,
  kSelfMention,
  kEngagement,
};

inline constexpr std::size_t kMarkerCategoryCount = 5;

inline constexpr std::array<MarkerCategory, kMarkerCategoryCount>
    kAllMarkerCategories = {MarkerCategory::kHedges, MarkerCategory::kBoosters,
                            MarkerCategory::kAttitude,
                            MarkerCategory::kSelfMention,
                            MarkerCategory::kEngagement};

// "hedges", "boosters", "attitude", "self_mention", "engagement".
std::string_view MarkerCategoryName(MarkerCategory category);
std::optional<MarkerCategory> ParseMarkerCategory(std::string_view name);

using Phrase = std::vector<std::string>;

// Phrase lists per marker category. Each phrase is a non-empty sequence of
// lowercase tokens; a phrase may appear under several categories.
class MarkerLexicon {
 public:
  MarkerLexicon() = default;

  // Seeded with the example phrases only; full lists come from a file.
  static MarkerLexicon Starter();

  // {"hedges": ["perhaps", ...], ..., "engagement": ["by the way", ...]}.
  // Missing categories are empty. Throws Error(kInvalidConfig).
  static MarkerLexicon FromJson(std::string_view text);
  static MarkerLexicon Load(const std::string &path);

  // Tokenizes `phrase`; throws Error(kInvalidConfig) if it yields no tokens.
  void Add(MarkerCategory category, std::string_view phrase);

  const std::vector<Phrase> &phrases(MarkerCategory category) const {
    return phrases_[static_cast<std::size_t>(category)];
  }

  struct Entry {
    MarkerCategory category;
    std::size_t phrase_index;
  };
  // Phrases whose first token is `first`.
  std::span<const Entry> StartingWith(const std::string &first) const;

 private:
  std::array<std::vector<Phrase>, kMarkerCategoryCount> phrases_;
  std::unordered_map<std::string, std::vector<Entry>> by_first_;
};

struct MarkerMatch {
  std::array<bool, kMarkerCategoryCount> hit{};
  std::array<int, kMarkerCategoryCount> count{};

  bool Hit(MarkerCategory c) const {
    return hit[static_cast<std::size_t>(c)];
  }
  int Count(MarkerCategory c) const {
    return count[static_cast<std::size_t>(c)];
  }
};

// Counts contiguous occurrences of every phrase; overlapping occurrences all
// count. Tokens must already be lowercase.
MarkerMatch MatchMarkers(std::span<const std::string> tokens,
                         const MarkerLexicon &lexicon);

// Syllable estimate for one token, never below 1: vowel groups (a, e, i,
// o, u, y), less a lone terminal silent e (consonant + "le" keeps its
// syllable), corrected by spelling patterns that split or merge groups
// (e.g. "ia" +1, "-tion" and silent "-ed" -1).
int CountSyllables(std::string_view token);

inline constexpr double kFleschBase = 206.835;
inline constexpr double kFleschSentenceLengthWeight = 1.015;
inline constexpr double kFleschSyllableWeight = 84.6;

// Flesch Reading Ease for raw counts, unclamped.
double FleschFromCounts(long words, long sentences, long syllables);

// Scores a single sentence (sentences = 1). Throws Error(kEmptySentence).
double FleschScore(std::span<const std::string> sentence_tokens);

// Per-citance linguistic features.
struct FeatureVector {
  std::array<bool, kMarkerCategoryCount> marker_hit{};
  std::array<int, kMarkerCategoryCount> marker_count{};
  double flesch = 0.0;
  int word_count = 0;
  int syllable_count = 0;
  std::vector<std::string> primary_verbs;

  bool Hit(MarkerCategory c) const {
    return marker_hit[static_cast<std::size_t>(c)];
  }
};

// Marker and readability features for a tokenized sentence; primary_verbs
// is left empty for the verb profiler to fill.
FeatureVector ComputeTextFeatures(std::span<const std::string> tokens,
                                  const MarkerLexicon &lexicon);

}  // namespace citectx

#endif  // CITECTX_LEXICON_H_
