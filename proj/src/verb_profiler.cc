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

#include "citectx/verb_profiler.h"

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numeric>
#include <unordered_map>

#include "citectx/citance_extractor.h"
#include "citectx/error.h"
#include "citectx/tagset.h"
#include "citectx/tokenizer.h"

namespace citectx {
namespace {

bool IsBeForm(std::string_view t) {
  return t == "be" || t == "am" || t == "is" || t == "are" || t == "was" ||
         t == "were" || t == "been" || t == "being" || t == "'s";
}

bool IsHaveForm(std::string_view t) {
  return t == "have" || t == "has" || t == "had" || t == "having";
}

bool IsDoForm(std::string_view t) {
  return t == "do" || t == "does" || t == "did";
}

bool IsCoordinator(std::string_view t) {
  return t == "and" || t == "or" || t == "but";
}

// Whether `next` continues the verb group headed so far by `head`.
bool ContinuesGroup(const TaggedToken &head, const TaggedToken &next) {
  if (head.tag == "MD") return next.tag == "VB";
  if (IsBeForm(head.token)) return next.tag == "VBN" || next.tag == "VBG";
  if (IsHaveForm(head.token)) return next.tag == "VBN";
  if (IsDoForm(head.token)) return next.tag == "VB";
  return false;
}

bool IsAdverbTag(std::string_view tag) {
  return tag == "RB" || tag == "RBR" || tag == "RBS";
}

struct Irregular {
  std::string_view form;
  std::string_view lemma;
};

// Irregular verb forms and regular forms the suffix rules get wrong.
constexpr Irregular kIrregular[] = {
    {"am", "be"}, {"is", "be"}, {"are", "be"}, {"was", "be"},
    {"were", "be"}, {"been", "be"}, {"being", "be"}, {"'s", "be"},
    {"has", "have"}, {"had", "have"}, {"having", "have"},
    {"does", "do"}, {"did", "do"}, {"done", "do"}, {"doing", "do"},
    {"goes", "go"}, {"went", "go"}, {"gone", "go"},
    {"made", "make"}, {"met", "meet"}, {"found", "find"},
    {"took", "take"}, {"taken", "take"}, {"gave", "give"},
    {"given", "give"}, {"got", "get"}, {"gotten", "get"},
    {"saw", "see"}, {"seen", "see"}, {"shown", "show"},
    {"knew", "know"}, {"known", "know"}, {"grew", "grow"},
    {"grown", "grow"}, {"wrote", "write"}, {"written", "write"},
    {"became", "become"}, {"began", "begin"}, {"begun", "begin"},
    {"chose", "choose"}, {"chosen", "choose"}, {"came", "come"},
    {"held", "hold"}, {"kept", "keep"}, {"led", "lead"},
    {"left", "leave"}, {"lost", "lose"}, {"meant", "mean"},
    {"said", "say"}, {"sought", "seek"}, {"spent", "spend"},
    {"stood", "stand"}, {"told", "tell"}, {"thought", "think"},
    {"understood", "understand"}, {"underwent", "undergo"},
    {"undergone", "undergo"}, {"built", "build"}, {"brought", "bring"},
    {"bought", "buy"}, {"caught", "catch"}, {"drew", "draw"},
    {"drawn", "draw"}, {"fell", "fall"}, {"fallen", "fall"},
    {"felt", "feel"}, {"heard", "hear"}, {"laid", "lay"},
    {"paid", "pay"}, {"rose", "rise"}, {"risen", "rise"},
    {"sent", "send"}, {"spoke", "speak"}, {"spoken", "speak"},
    {"taught", "teach"}, {"threw", "throw"}, {"thrown", "throw"},
    {"arose", "arise"}, {"arisen", "arise"}, {"broke", "break"},
    {"broken", "break"}, {"dealt", "deal"}, {"overcame", "overcome"},
    {"withdrew", "withdraw"}, {"withdrawn", "withdraw"},
    {"forgot", "forget"}, {"forgotten", "forget"}, {"hid", "hide"},
    {"hidden", "hide"}, {"ran", "run"}, {"sat", "sit"},
    {"won", "win"}, {"fed", "feed"}, {"fled", "flee"},
    {"bore", "bear"}, {"borne", "bear"}, {"outgrew", "outgrow"},
    {"rewrote", "rewrite"}, {"rewritten", "rewrite"},
    {"underlay", "underlie"}, {"underlain", "underlie"},
    {"lying", "lie"}, {"dying", "die"}, {"tying", "tie"},
    {"added", "add"}, {"adding", "add"}, {"caused", "cause"},
    {"causing", "cause"}, {"causes", "cause"}, {"focuses", "focus"},
    {"focused", "focus"}, {"focusing", "focus"}, {"issued", "issue"},
    {"issuing", "issue"}, {"continued", "continue"},
    {"continuing", "continue"}, {"argued", "argue"}, {"arguing", "argue"},
    {"valued", "value"}, {"pursued", "pursue"}, {"ensued", "ensue"},
    {"reviewed", "review"}, {"viewed", "view"}, {"agreed", "agree"},
    {"freed", "free"}, {"referred", "refer"}, {"occurred", "occur"},
    {"preferred", "prefer"}, {"inferred", "infer"},
    {"conferred", "confer"}, {"deferred", "defer"},
    {"transferred", "transfer"}, {"compelled", "compel"},
    {"controlled", "control"}, {"enrolled", "enroll"},
    {"fulfilled", "fulfill"}, {"modelled", "model"},
    {"labelled", "label"}, {"travelled", "travel"},
    {"biased", "bias"}, {"published", "publish"},
    {"sampled", "sample"}, {"handled", "handle"}, {"titled", "title"},
    {"entitled", "entitle"}, {"settled", "settle"},
};

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool IsVowelChar(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// Stem endings after which a stripped "-ed"/"-ing" leaves a silent e
// behind, each with the longer endings that stay bare (treat, obtain).
struct SilentERule {
  std::string_view ending;
  std::initializer_list<std::string_view> keep;
};

const SilentERule kSilentERules[] = {
    {"iz", {}},         {"yz", {}},          {"ys", {}},
    {"at", {"eat", "oat", "ait"}},           {"ut", {"uit", "out"}},
    {"uc", {}},         {"ac", {}},          {"ic", {}},
    {"iv", {}},         {"ov", {}},          {"av", {}},
    {"iev", {}},        {"rv", {}},          {"lv", {}},
    {"ir", {"air", "eir"}},                  {"ur", {"our"}},
    {"ar", {"ear", "oar"}},                  {"os", {}},
    {"is", {}},         {"as", {}},          {"ns", {}},
    {"rs", {}},         {"ps", {}},          {"rc", {}},
    {"nc", {}},         {"ud", {}},          {"id", {"oid"}},
    {"ib", {}},         {"ag", {}},          {"dg", {}},
    {"rg", {}},         {"ang", {}},         {"eng", {}},
    {"in", {"ain", "ein", "oin"}},           {"um", {}},
    {"com", {}},        {"ok", {"ook"}},     {"ot", {"oot"}},
    {"plet", {}},       {"elet", {}},        {"mpet", {}},
    {"bl", {}},         {"cl", {}},          {"dl", {}},
    {"fl", {}},         {"gl", {}},          {"kl", {}},
    {"pl", {}},         {"tl", {}},          {"zl", {}},
};

bool NeedsSilentE(const std::string &stem) {
  const std::size_t n = stem.size();
  if (n < 2) return false;
  // Closed monosyllable with a single short vowel: us(e), bas(e), mak(e).
  int vowel_groups = 0;
  bool in_group = false;
  for (char c : stem) {
    if (IsVowelChar(c)) {
      if (!in_group) ++vowel_groups;
      in_group = true;
    } else {
      in_group = false;
    }
  }
  if (vowel_groups == 1 && !IsVowelChar(stem[n - 1]) &&
      IsVowelChar(stem[n - 2]) && (n < 3 || !IsVowelChar(stem[n - 3])) &&
      stem[n - 1] != 'w' && stem[n - 1] != 'x' && stem[n - 1] != 'y') {
    return true;
  }
  for (const auto &rule : kSilentERules) {
    if (!EndsWith(stem, rule.ending)) continue;
    for (std::string_view k : rule.keep) {
      if (EndsWith(stem, k)) return false;
    }
    return true;
  }
  return false;
}

std::string UndoSuffix(std::string stem) {
  const std::size_t n = stem.size();
  if (n >= 3 && stem[n - 1] == stem[n - 2] && !IsVowelChar(stem[n - 1]) &&
      stem[n - 1] != 'l' && stem[n - 1] != 's' && stem[n - 1] != 'z' &&
      stem[n - 1] != 'f') {
    stem.pop_back();
    return stem;
  }
  if (NeedsSilentE(stem)) stem.push_back('e');
  return stem;
}

}  // namespace

bool IsSubordinator(std::string_view token) {
  static constexpr std::string_view kWords[] = {
      "that",  "which",  "who",    "whom",  "whose",   "because",
      "although", "though", "if",   "when",  "while",  "since",
      "as",    "whereas", "unless", "after", "before"};
  return std::find(std::begin(kWords), std::end(kWords), token) !=
         std::end(kWords);
}

std::vector<TaggedToken> TagSentence(
    std::string_view sentence, const PosTagger &tagger,
    const std::optional<std::vector<std::string>> &pre_tags) {
  const auto tokens = TokenizeWithOffsets(sentence);
  std::vector<std::string> words;
  words.reserve(tokens.size());
  for (const auto &t : tokens) words.push_back(t.text);
  std::vector<std::string> tags;
  if (pre_tags && pre_tags->size() == words.size()) {
    tags = *pre_tags;
  } else if (!words.empty()) {
    tags = tagger.Tag(words);
  }

  std::vector<TaggedToken> out;
  out.reserve(words.size() + 4);
  std::size_t next_word = 0;
  for (std::size_t pos = 0; pos < sentence.size(); ++pos) {
    while (next_word < tokens.size() && tokens[next_word].begin <= pos) {
      out.push_back({words[next_word], tags[next_word]});
      pos = std::max(pos, tokens[next_word].end);
      ++next_word;
    }
    if (pos >= sentence.size()) break;
    const char c = sentence[pos];
    if (c == '(' || c == '[') {
      out.push_back({std::string(1, c), "-LRB-"});
    } else if (c == ')' || c == ']') {
      out.push_back({std::string(1, c), "-RRB-"});
    } else if (c == ',' || c == ';') {
      out.push_back({std::string(1, c), ","});
    }
  }
  while (next_word < tokens.size()) {
    out.push_back({words[next_word], tags[next_word]});
    ++next_word;
  }
  return out;
}

std::vector<std::string> ExtractPrimaryVerbs(
    std::span<const TaggedToken> tagged) {
  std::vector<std::string> verbs;
  int depth = 0;
  // Set while inside a subordinate clause that opened the sentence; the
  // first comma at that depth closes it.
  bool fronted_open = false;
  bool seen_word = false;
  std::string last_primary_tag;  // tag of the last primary head
  bool last_was_coordinator = false;

  for (std::size_t i = 0; i < tagged.size(); ++i) {
    const TaggedToken &t = tagged[i];
    if (t.tag == "-LRB-") {
      ++depth;
      continue;
    }
    if (t.tag == "-RRB-") {
      depth = std::max(0, depth - 1);
      continue;
    }
    if (t.tag == ",") {
      if (fronted_open && depth == 1) {
        depth = 0;
        fronted_open = false;
      }
      last_was_coordinator = false;
      continue;
    }
    const bool first_word = !seen_word;
    seen_word = true;

    if (IsSubordinator(t.token) && t.tag != "DT") {
      if (first_word && depth == 0) fronted_open = true;
      ++depth;
      last_was_coordinator = false;
      continue;
    }
    if (depth > 0) continue;

    if (IsCoordinator(t.token)) {
      last_was_coordinator = true;
      continue;
    }

    const bool opens_group =
        IsFiniteVerbTag(t.tag) ||
        (t.tag == "MD" && [&] {
          for (std::size_t k = i + 1; k < tagged.size(); ++k) {
            if (IsAdverbTag(tagged[k].tag)) continue;
            return tagged[k].tag == "VB";
          }
          return false;
        }());
    if (opens_group) {
      std::size_t head = i;
      std::size_t k = i + 1;
      while (k < tagged.size()) {
        if (IsAdverbTag(tagged[k].tag)) {
          ++k;
          continue;
        }
        if (!ContinuesGroup(tagged[head], tagged[k])) break;
        head = k;
        ++k;
      }
      verbs.push_back(LemmatizeVerb(tagged[head].token, tagged[head].tag));
      last_primary_tag = tagged[head].tag;
      last_was_coordinator = false;
      i = head;
      continue;
    }

    // Coordinated verb sharing the previous group's form: "were recruited
    // and assessed", "recruited patients and assessed".
    if (last_was_coordinator && !last_primary_tag.empty() &&
        IsVerbTag(t.tag) &&
        (t.tag == last_primary_tag ||
         (t.tag == "VBN" && last_primary_tag == "VBD"))) {
      verbs.push_back(LemmatizeVerb(t.token, t.tag));
      last_was_coordinator = false;
      continue;
    }
    if (!IsAdverbTag(t.tag)) last_was_coordinator = false;
  }
  return verbs;
}

std::string LemmatizeVerb(std::string_view token, std::string_view tag) {
  const std::string w = AsciiLower(token);
  for (const auto &irr : kIrregular) {
    if (irr.form == w) return std::string(irr.lemma);
  }
  if (tag == "VB" || tag == "VBP" || tag == "MD") return w;

  if (tag == "VBZ") {
    if (EndsWith(w, "ies") && w.size() > 4) {
      return w.substr(0, w.size() - 3) + "y";
    }
    for (std::string_view s : {"sses", "shes", "ches", "xes", "zzes", "oes"}) {
      if (EndsWith(w, s)) return w.substr(0, w.size() - 2);
    }
    if (EndsWith(w, "s") && !EndsWith(w, "ss") && w.size() > 2) {
      return w.substr(0, w.size() - 1);
    }
    return w;
  }

  if (tag == "VBD" || tag == "VBN") {
    if (EndsWith(w, "ied") && w.size() > 4) {
      return w.substr(0, w.size() - 3) + "y";
    }
    if (EndsWith(w, "eed")) return w.substr(0, w.size() - 1);
    if (EndsWith(w, "ed") && w.size() > 3) {
      return UndoSuffix(w.substr(0, w.size() - 2));
    }
    return w;
  }

  if (tag == "VBG") {
    if (EndsWith(w, "ing") && w.size() > 4) {
      return UndoSuffix(w.substr(0, w.size() - 3));
    }
    return w;
  }
  return w;
}

std::set<std::string> DefaultStopVerbs() { return {"be", "have"}; }

VerbProfile VerbProfile::FromCounts(std::string population,
                                    std::map<std::string, long> freq,
                                    long min_count,
                                    const std::set<std::string> &stopverbs) {
  VerbProfile p;
  p.population = std::move(population);
  p.freq = std::move(freq);
  for (const auto &[lemma, n] : p.freq) {
    if (n >= min_count && !stopverbs.count(lemma)) {
      p.candidate_set.push_back(lemma);
    }
  }
  std::stable_sort(p.candidate_set.begin(), p.candidate_set.end(),
                   [&p](const std::string &a, const std::string &b) {
                     const long na = p.freq.at(a);
                     const long nb = p.freq.at(b);
                     if (na != nb) return na > nb;
                     return a < b;
                   });
  std::vector<double> values;
  values.reserve(p.candidate_set.size());
  for (const auto &lemma : p.candidate_set) {
    values.push_back(static_cast<double>(p.freq.at(lemma)));
  }
  const auto ranks = AverageRanksDescending(values);
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    p.ranks[p.candidate_set[i]] = ranks[i];
  }
  return p;
}

long VerbProfile::Count(const std::string &lemma) const {
  auto it = freq.find(lemma);
  return it == freq.end() ? 0 : it->second;
}

VerbProfile BuildVerbProfile(std::span<const Citance> citances,
                             std::string population, long min_count,
                             const std::set<std::string> &stopverbs) {
  std::map<std::string, long> freq;
  for (const auto &c : citances) {
    for (const auto &lemma : c.features.primary_verbs) ++freq[lemma];
  }
  return VerbProfile::FromCounts(std::move(population), std::move(freq),
                                 min_count, stopverbs);
}

std::vector<double> AverageRanksDescending(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a] > values[b];
  });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) {
      ++j;
    }
    // Positions i..j (0-based) share rank mean((i+1)..(j+1)).
    const double rank = static_cast<double>(i + j + 2) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

CorrelationResult SpearmanRho(const VerbProfile &a, const VerbProfile &b,
                              std::span<const std::string> candidates) {
  if (candidates.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "no candidate verbs");
  }
  std::vector<double> fa;
  std::vector<double> fb;
  fa.reserve(candidates.size());
  fb.reserve(candidates.size());
  for (const auto &lemma : candidates) {
    fa.push_back(static_cast<double>(a.Count(lemma)));
    fb.push_back(static_cast<double>(b.Count(lemma)));
  }
  const auto ra = AverageRanksDescending(fa);
  const auto rb = AverageRanksDescending(fb);
  const double n = static_cast<double>(candidates.size());
  // Average ranks always have mean (n + 1) / 2.
  const double mean = (n + 1.0) / 2.0;
  double cov = 0.0;
  double va = 0.0;
  double vb = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    const double da = ra[i] - mean;
    const double db = rb[i] - mean;
    cov += da * db;
    va += da * da;
    vb += db * db;
  }
  CorrelationResult result;
  result.n = static_cast<long>(candidates.size());
  result.pair = {a.population, b.population};
  if (va == 0.0 || vb == 0.0) {
    throw Error(ErrorCode::kDegenerateRanks,
                (va == 0.0 ? a.population : b.population) +
                    " has constant ranks");
  }
  const double rho = cov / std::sqrt(va * vb);
  result.rho = std::clamp(rho, -1.0, 1.0);
  return result;
}

std::vector<std::pair<std::string, long>> TopVerbs(const VerbProfile &profile,
                                                   std::size_t k) {
  std::vector<std::pair<std::string, long>> out;
  for (std::size_t i = 0; i < profile.candidate_set.size() && i < k; ++i) {
    const auto &lemma = profile.candidate_set[i];
    out.emplace_back(lemma, profile.freq.at(lemma));
  }
  return out;
}

}  // namespace citectx
