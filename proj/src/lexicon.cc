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

#include "citectx/lexicon.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "citectx/error.h"
#include "citectx/tokenizer.h"
#include "json.hpp"

namespace citectx {

std::string_view MarkerCategoryName(MarkerCategory category) {
  switch (category) {
    case MarkerCategory::kHedges: return "hedges";
    case MarkerCategory::kBoosters: return "boosters";
    case MarkerCategory::kAttitude: return "attitude";
    case MarkerCategory::kSelfMention: return "self_mention";
    case MarkerCategory::kEngagement: return "engagement";
  }
  return "unknown";
}

std::optional<MarkerCategory> ParseMarkerCategory(std::string_view name) {
  for (MarkerCategory c : kAllMarkerCategories) {
    if (MarkerCategoryName(c) == name) return c;
  }
  return std::nullopt;
}

MarkerLexicon MarkerLexicon::Starter() {
  MarkerLexicon lex;
  for (auto p : {"possible", "perhaps"}) lex.Add(MarkerCategory::kHedges, p);
  for (auto p : {"obviously", "demonstrate"}) {
    lex.Add(MarkerCategory::kBoosters, p);
  }
  for (auto p : {"agree", "unfortunately", "remarkable"}) {
    lex.Add(MarkerCategory::kAttitude, p);
  }
  for (auto p : {"we", "our", "i", "my"}) {
    lex.Add(MarkerCategory::kSelfMention, p);
  }
  for (auto p : {"note", "consider", "by the way", "you may notice"}) {
    lex.Add(MarkerCategory::kEngagement, p);
  }
  return lex;
}

MarkerLexicon MarkerLexicon::FromJson(std::string_view text) {
  using nlohmann::json;
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error &e) {
    throw Error(ErrorCode::kInvalidConfig, std::string("lexicon: ") + e.what());
  }
  if (!root.is_object()) {
    throw Error(ErrorCode::kInvalidConfig, "lexicon must be a JSON object");
  }
  MarkerLexicon lex;
  for (const auto &[key, value] : root.items()) {
    auto category = ParseMarkerCategory(key);
    if (!category) {
      throw Error(ErrorCode::kInvalidConfig,
                  "lexicon: unknown category '" + key + "'");
    }
    if (!value.is_array()) {
      throw Error(ErrorCode::kInvalidConfig,
                  "lexicon: '" + key + "' must be an array");
    }
    for (const auto &p : value) {
      if (!p.is_string()) {
        throw Error(ErrorCode::kInvalidConfig,
                    "lexicon: '" + key + "' must hold strings");
      }
      lex.Add(*category, p.get<std::string>());
    }
  }
  return lex;
}

MarkerLexicon MarkerLexicon::Load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read lexicon " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return FromJson(buf.str());
}

void MarkerLexicon::Add(MarkerCategory category, std::string_view phrase) {
  Phrase tokens = Tokenize(phrase);
  if (tokens.empty()) {
    throw Error(ErrorCode::kInvalidConfig,
                "empty phrase in " + std::string(MarkerCategoryName(category)));
  }
  auto &list = phrases_[static_cast<std::size_t>(category)];
  if (std::find(list.begin(), list.end(), tokens) != list.end()) return;
  list.push_back(std::move(tokens));
  by_first_[list.back().front()].push_back({category, list.size() - 1});
}

std::span<const MarkerLexicon::Entry> MarkerLexicon::StartingWith(
    const std::string &first) const {
  auto it = by_first_.find(first);
  if (it == by_first_.end()) return {};
  return it->second;
}

MarkerMatch MatchMarkers(std::span<const std::string> tokens,
                         const MarkerLexicon &lexicon) {
  MarkerMatch m;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    for (const auto &entry : lexicon.StartingWith(tokens[i])) {
      const Phrase &phrase = lexicon.phrases(entry.category)[entry.phrase_index];
      if (phrase.size() > tokens.size() - i) continue;
      if (std::equal(phrase.begin(), phrase.end(), tokens.begin() + i)) {
        ++m.count[static_cast<std::size_t>(entry.category)];
      }
    }
  }
  for (std::size_t c = 0; c < kMarkerCategoryCount; ++c) {
    m.hit[c] = m.count[c] > 0;
  }
  return m;
}

namespace {

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool IsAsciiLetter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool EndsWith(std::string_view w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         w.substr(w.size() - suffix.size()) == suffix;
}

bool Contains(std::string_view w, std::string_view part) {
  return w.find(part) != std::string_view::npos;
}

bool IsPlainVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Spellings where the vowel-group count overshoots: -cial, -tion, -ious,
// silent -ed and -ely.
int Overcounted(std::string_view w) {
  int n = 0;
  for (std::string_view part : {"cial", "tia", "cius", "cious", "giu", "ion",
                                "iou"}) {
    n += Contains(w, part);
  }
  n += EndsWith(w, "sia");
  n += w.size() >= 4 && EndsWith(w, "ely");
  n += w.size() >= 3 && EndsWith(w, "ed") && w[w.size() - 3] != 't' &&
       w[w.size() - 3] != 'd';
  return n;
}

// Adjacent vowels read as separate syllables, and syllabic -ism / -Cl.
int Undercounted(std::string_view w) {
  const std::size_t size = w.size();
  int n = 0;
  for (std::string_view part : {"ia", "riet", "dien", "iu", "io", "ii"}) {
    n += Contains(w, part);
  }
  bool triple = false;
  for (std::size_t i = 0; i + 2 < size; ++i) {
    triple |= IsPlainVowel(w[i]) && IsPlainVowel(w[i + 1]) &&
              IsPlainVowel(w[i + 2]);
  }
  n += triple;
  n += w.starts_with("mc");
  n += EndsWith(w, "ism");
  n += size >= 3 && w[size - 1] == 'l' && w[size - 2] == w[size - 3] &&
       !IsVowel(w[size - 2]);
  bool lien = false;
  for (std::size_t i = w.find("lien", 1); i != std::string_view::npos;
       i = w.find("lien", i + 1)) {
    lien |= w[i - 1] != 'l';
  }
  n += lien;
  n += size >= 5 && w.starts_with("coa") && Contains("dglx", w.substr(3, 1));
  bool ua = false;
  for (std::size_t i = 1; i + 2 < size; ++i) {
    ua |= w[i] == 'u' && w[i + 1] == 'a' && w[i - 1] != 'g' &&
          w[i - 1] != 'q' && !Contains("auieo", w.substr(i + 2, 1));
  }
  n += ua;
  n += EndsWith(w, "dnt");
  return n;
}

}  // namespace

int CountSyllables(std::string_view token) {
  const std::string w = AsciiLower(token);
  int groups = 0;
  bool in_group = false;
  for (char c : w) {
    if (IsVowel(c)) {
      if (!in_group) ++groups;
      in_group = true;
    } else {
      in_group = false;
    }
  }
  // Terminal silent e: a lone final "e" after a consonant, except the
  // consonant + "le" ending which keeps its own syllable.
  const std::size_t n = w.size();
  if (n >= 2 && w[n - 1] == 'e' && IsAsciiLetter(w[n - 2]) &&
      !IsVowel(w[n - 2])) {
    const bool consonant_le =
        w[n - 2] == 'l' && n >= 3 && IsAsciiLetter(w[n - 3]) &&
        !IsVowel(w[n - 3]);
    if (!consonant_le) --groups;
  }
  groups += Undercounted(w) - Overcounted(w);
  return std::max(groups, 1);
}

double FleschFromCounts(long words, long sentences, long syllables) {
  const double w = static_cast<double>(words);
  return kFleschBase -
         kFleschSentenceLengthWeight * (w / static_cast<double>(sentences)) -
         kFleschSyllableWeight * (static_cast<double>(syllables) / w);
}

double FleschScore(std::span<const std::string> sentence_tokens) {
  if (sentence_tokens.empty()) {
    throw Error(ErrorCode::kEmptySentence, "no tokens");
  }
  long syllables = 0;
  for (const auto &t : sentence_tokens) syllables += CountSyllables(t);
  return FleschFromCounts(static_cast<long>(sentence_tokens.size()), 1,
                          syllables);
}

FeatureVector ComputeTextFeatures(std::span<const std::string> tokens,
                                  const MarkerLexicon &lexicon) {
  FeatureVector f;
  const MarkerMatch m = MatchMarkers(tokens, lexicon);
  f.marker_hit = m.hit;
  f.marker_count = m.count;
  f.word_count = static_cast<int>(tokens.size());
  for (const auto &t : tokens) f.syllable_count += CountSyllables(t);
  if (!tokens.empty()) {
    f.flesch = FleschFromCounts(f.word_count, 1, f.syllable_count);
  }
  return f;
}

}  // namespace citectx
