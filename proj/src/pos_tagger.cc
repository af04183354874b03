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

#include "citectx/pos_tagger.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "citectx/error.h"
#include "citectx/tagset.h"

namespace citectx {
namespace {

constexpr std::string_view kMagic = "citectx-perceptron";
constexpr int kFormatVersion = 1;

std::string Normalize(const std::string &word) {
  if (word.size() == 4 &&
      std::all_of(word.begin(), word.end(),
                  [](char c) { return c >= '0' && c <= '9'; })) {
    return "!YEAR";
  }
  if (!word.empty() && word[0] >= '0' && word[0] <= '9') return "!DIGITS";
  return word;
}

std::string Suffix(const std::string &w, std::size_t n) {
  return w.size() <= n ? w : w.substr(w.size() - n);
}

std::vector<std::string> Features(const std::vector<std::string> &context,
                                  std::size_t i, const std::string &prev,
                                  const std::string &prev2) {
  // `context` is padded with two start and two end markers; i indexes the
  // unpadded word.
  const std::size_t c = i + 2;
  const std::string &w = context[c];
  std::vector<std::string> f;
  f.reserve(18);
  f.emplace_back("bias");
  f.push_back("w=" + w);
  f.push_back("s3=" + Suffix(w, 3));
  f.push_back("s2=" + Suffix(w, 2));
  f.push_back("p1=" + w.substr(0, 1));
  f.push_back("t1=" + prev);
  f.push_back("t2=" + prev2);
  f.push_back("t12=" + prev + "|" + prev2);
  f.push_back("t1w=" + prev + "|" + w);
  f.push_back("w-1=" + context[c - 1]);
  f.push_back("s3-1=" + Suffix(context[c - 1], 3));
  f.push_back("w-2=" + context[c - 2]);
  f.push_back("w+1=" + context[c + 1]);
  f.push_back("s3+1=" + Suffix(context[c + 1], 3));
  f.push_back("w+2=" + context[c + 2]);
  if (w.find('-') != std::string::npos) f.emplace_back("hyphen");
  if (std::any_of(w.begin(), w.end(),
                  [](char ch) { return ch >= '0' && ch <= '9'; })) {
    f.emplace_back("digit");
  }
  return f;
}

std::vector<std::string> PaddedContext(std::span<const std::string> words) {
  std::vector<std::string> ctx;
  ctx.reserve(words.size() + 4);
  ctx.emplace_back("-START-");
  ctx.emplace_back("-START2-");
  for (const auto &w : words) ctx.push_back(Normalize(w));
  ctx.emplace_back("-END-");
  ctx.emplace_back("-END2-");
  return ctx;
}

// Accumulators for weight averaging during training.
struct TrainWeights {
  std::vector<double> w;
  std::vector<double> total;
  std::vector<long> stamp;
};

}  // namespace

std::vector<TaggedSentence> ReadTaggedCorpus(std::istream &in) {
  std::vector<TaggedSentence> out;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string item;
    TaggedSentence s;
    while (fields >> item) {
      const auto slash = item.rfind('/');
      if (slash == std::string::npos || slash == 0 ||
          slash + 1 == item.size()) {
        throw Error(ErrorCode::kModelLoadFailure,
                    "line " + std::to_string(line_no) + ": bad item '" + item +
                        "'");
      }
      std::string tag = item.substr(slash + 1);
      if (!IsKnownTag(tag)) {
        throw Error(ErrorCode::kModelLoadFailure,
                    "line " + std::to_string(line_no) + ": unknown tag " + tag);
      }
      s.words.push_back(item.substr(0, slash));
      s.tags.push_back(std::move(tag));
    }
    if (!s.words.empty()) out.push_back(std::move(s));
  }
  return out;
}

std::vector<TaggedSentence> ReadTaggedCorpus(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kModelLoadFailure, "cannot read " + path);
  return ReadTaggedCorpus(in);
}

PosTagger PosTagger::Train(const std::vector<TaggedSentence> &sentences,
                           const TrainOptions &options) {
  PosTagger tagger;

  std::map<std::string, std::map<std::string, long>> word_tag_counts;
  std::set<std::string> class_set;
  for (const auto &s : sentences) {
    for (std::size_t i = 0; i < s.words.size(); ++i) {
      ++word_tag_counts[s.words[i]][s.tags[i]];
      class_set.insert(s.tags[i]);
    }
  }
  tagger.classes_.assign(class_set.begin(), class_set.end());
  std::map<std::string, int> class_index;
  for (std::size_t i = 0; i < tagger.classes_.size(); ++i) {
    class_index[tagger.classes_[i]] = static_cast<int>(i);
  }
  for (const auto &[word, tags] : word_tag_counts) {
    long total = 0;
    long best = 0;
    std::string best_tag;
    for (const auto &[tag, n] : tags) {
      total += n;
      if (n > best) {
        best = n;
        best_tag = tag;
      }
    }
    if (total >= options.tagdict_min_count &&
        static_cast<double>(best) / static_cast<double>(total) >=
            options.tagdict_min_ratio) {
      tagger.tagdict_[word] = class_index[best_tag];
    }
  }

  const std::size_t n_classes = tagger.classes_.size();
  std::unordered_map<std::string, TrainWeights> weights;
  long instances = 0;

  auto score = [&](const std::vector<std::string> &features) {
    std::vector<double> scores(n_classes, 0.0);
    for (const auto &f : features) {
      auto it = weights.find(f);
      if (it == weights.end()) continue;
      for (std::size_t c = 0; c < n_classes; ++c) scores[c] += it->second.w[c];
    }
    int best = 0;
    for (std::size_t c = 1; c < n_classes; ++c) {
      if (scores[c] > scores[static_cast<std::size_t>(best)]) {
        best = static_cast<int>(c);
      }
    }
    return best;
  };
  auto bump = [&](const std::string &feature, int cls, double delta) {
    auto &tw = weights[feature];
    if (tw.w.empty()) {
      tw.w.assign(n_classes, 0.0);
      tw.total.assign(n_classes, 0.0);
      tw.stamp.assign(n_classes, 0);
    }
    const auto c = static_cast<std::size_t>(cls);
    tw.total[c] += static_cast<double>(instances - tw.stamp[c]) * tw.w[c];
    tw.stamp[c] = instances;
    tw.w[c] += delta;
  };

  std::vector<std::size_t> order(sentences.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::mt19937 rng(options.seed);

  for (int iter = 0; iter < options.iterations; ++iter) {
    for (const std::size_t si : order) {
      const auto &s = sentences[si];
      const auto ctx = PaddedContext(s.words);
      std::string prev = "-START-";
      std::string prev2 = "-START2-";
      for (std::size_t i = 0; i < s.words.size(); ++i) {
        int guess;
        auto dict = tagger.tagdict_.find(s.words[i]);
        if (dict != tagger.tagdict_.end()) {
          guess = dict->second;
        } else {
          const auto feats = Features(ctx, i, prev, prev2);
          guess = score(feats);
          const int truth = class_index[s.tags[i]];
          ++instances;
          if (guess != truth) {
            for (const auto &f : feats) {
              bump(f, truth, 1.0);
              bump(f, guess, -1.0);
            }
          }
        }
        prev2 = prev;
        prev = tagger.classes_[static_cast<std::size_t>(guess)];
      }
    }
    // Fisher-Yates with raw engine output keeps the order identical across
    // standard library implementations.
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng() % i]);
    }
  }

  for (auto &[feature, tw] : weights) {
    std::vector<float> averaged(n_classes, 0.0f);
    bool any = false;
    for (std::size_t c = 0; c < n_classes; ++c) {
      const double total =
          tw.total[c] + static_cast<double>(instances - tw.stamp[c]) * tw.w[c];
      const double avg = instances > 0 ? total / static_cast<double>(instances)
                                       : 0.0;
      averaged[c] = static_cast<float>(avg);
      if (averaged[c] != 0.0f) any = true;
    }
    if (any) tagger.weights_.emplace(feature, std::move(averaged));
  }
  return tagger;
}

int PosTagger::Predict(const std::vector<std::string> &features) const {
  std::vector<double> scores(classes_.size(), 0.0);
  for (const auto &f : features) {
    auto it = weights_.find(f);
    if (it == weights_.end()) continue;
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      scores[c] += it->second[c];
    }
  }
  int best = 0;
  for (std::size_t c = 1; c < scores.size(); ++c) {
    if (scores[c] > scores[static_cast<std::size_t>(best)]) {
      best = static_cast<int>(c);
    }
  }
  return best;
}

std::vector<std::string> PosTagger::Tag(
    std::span<const std::string> words) const {
  if (empty()) throw Error(ErrorCode::kModelLoadFailure, "no tagger model");
  std::vector<std::string> tags;
  tags.reserve(words.size());
  const auto ctx = PaddedContext(words);
  std::string prev = "-START-";
  std::string prev2 = "-START2-";
  for (std::size_t i = 0; i < words.size(); ++i) {
    int cls;
    auto dict = tagdict_.find(words[i]);
    if (dict != tagdict_.end()) {
      cls = dict->second;
    } else {
      cls = Predict(Features(ctx, i, prev, prev2));
    }
    tags.push_back(classes_[static_cast<std::size_t>(cls)]);
    prev2 = prev;
    prev = tags.back();
  }
  return tags;
}

double PosTagger::Accuracy(const std::vector<TaggedSentence> &gold) const {
  long correct = 0;
  long total = 0;
  for (const auto &s : gold) {
    const auto predicted = Tag(s.words);
    for (std::size_t i = 0; i < predicted.size(); ++i) {
      correct += predicted[i] == s.tags[i] ? 1 : 0;
      ++total;
    }
  }
  return total == 0 ? 0.0
                    : static_cast<double>(correct) / static_cast<double>(total);
}

void PosTagger::Write(std::ostream &out) const {
  out << kMagic << ' ' << kFormatVersion << '\n';
  out << "classes " << classes_.size() << '\n';
  for (const auto &c : classes_) out << c << '\n';
  std::map<std::string, int> dict(tagdict_.begin(), tagdict_.end());
  out << "tagdict " << dict.size() << '\n';
  for (const auto &[word, cls] : dict) {
    out << word << '\t' << classes_[static_cast<std::size_t>(cls)] << '\n';
  }
  // Sparse rows: feature, then class:weight pairs for non-zero weights.
  std::map<std::string, const std::vector<float> *> sorted;
  for (const auto &[f, w] : weights_) sorted.emplace(f, &w);
  out << "weights " << sorted.size() << '\n';
  char buf[32];
  for (const auto &[f, w] : sorted) {
    out << f;
    for (std::size_t c = 0; c < w->size(); ++c) {
      if ((*w)[c] == 0.0f) continue;
      std::snprintf(buf, sizeof(buf), "%.9g", static_cast<double>((*w)[c]));
      out << '\t' << c << ':' << buf;
    }
    out << '\n';
  }
}

void PosTagger::Save(const std::string &path) const {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  Write(out);
}

PosTagger PosTagger::Read(std::istream &in) {
  auto fail = [](const std::string &what) {
    return Error(ErrorCode::kModelLoadFailure, what);
  };
  PosTagger tagger;
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != kMagic ||
      version != kFormatVersion) {
    throw fail("not a tagger model");
  }
  std::string label;
  std::size_t n = 0;
  if (!(in >> label >> n) || label != "classes") throw fail("missing classes");
  tagger.classes_.resize(n);
  for (auto &c : tagger.classes_) {
    if (!(in >> c)) throw fail("truncated classes");
  }
  std::map<std::string, int> class_index;
  for (std::size_t i = 0; i < n; ++i) {
    class_index[tagger.classes_[i]] = static_cast<int>(i);
  }
  if (!(in >> label >> n) || label != "tagdict") throw fail("missing tagdict");
  for (std::size_t i = 0; i < n; ++i) {
    std::string word;
    std::string tag;
    if (!(in >> word >> tag) || !class_index.count(tag)) {
      throw fail("bad tagdict entry");
    }
    tagger.tagdict_[word] = class_index[tag];
  }
  if (!(in >> label >> n) || label != "weights") throw fail("missing weights");
  std::string line;
  std::getline(in, line);
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(in, line)) throw fail("truncated weights");
    std::istringstream row(line);
    std::string feature;
    if (!std::getline(row, feature, '\t')) throw fail("bad weight row");
    std::vector<float> w(tagger.classes_.size(), 0.0f);
    std::string cell;
    while (std::getline(row, cell, '\t')) {
      const auto colon = cell.find(':');
      if (colon == std::string::npos) throw fail("bad weight cell");
      std::size_t c = 0;
      float value = 0;
      try {
        c = std::stoul(cell.substr(0, colon));
        value = std::stof(cell.substr(colon + 1));
      } catch (const std::exception &) {
        throw fail("bad weight cell '" + cell + "'");
      }
      if (c >= w.size()) throw fail("class index out of range");
      w[c] = value;
    }
    tagger.weights_.emplace(std::move(feature), std::move(w));
  }
  if (tagger.classes_.empty()) throw fail("model has no classes");
  return tagger;
}

PosTagger PosTagger::Load(const std::string &path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kModelLoadFailure, "cannot read model " + path);
  }
  return Read(in);
}

}  // namespace citectx
