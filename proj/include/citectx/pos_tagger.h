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

#ifndef CITECTX_POS_TAGGER_H_
#define CITECTX_POS_TAGGER_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace citectx {

// One training or evaluation sentence: lowercase word tokens and gold tags.
struct TaggedSentence {
  std::vector<std::string> words;
  std::vector<std::string> tags;
};

// Reads "word/TAG word/TAG ..." lines (split on the last '/'); blank lines
// and lines starting with '#' are skipped. Throws Error(kModelLoadFailure).
std::vector<TaggedSentence> ReadTaggedCorpus(std::istream &in);
std::vector<TaggedSentence> ReadTaggedCorpus(const std::string &path);

// Greedy left-to-right averaged-perceptron tagger over lowercase word
// tokens. Frequent unambiguous words are tagged from a lookup table; the
// rest are scored with lexical and left-context tag features.
class PosTagger {
 public:
  PosTagger() = default;

  // Throws Error(kModelLoadFailure).
  static PosTagger Load(const std::string &path);
  static PosTagger Read(std::istream &in);

  struct TrainOptions {
    int iterations = 8;
    std::uint32_t seed = 1;
    long tagdict_min_count = 20;
    double tagdict_min_ratio = 0.97;
  };
  static PosTagger Train(const std::vector<TaggedSentence> &sentences,
                         const TrainOptions &options);
  static PosTagger Train(const std::vector<TaggedSentence> &sentences) {
    return Train(sentences, TrainOptions{});
  }

  void Write(std::ostream &out) const;
  void Save(const std::string &path) const;

  bool empty() const { return classes_.empty(); }

  // Throws Error(kModelLoadFailure) on an empty model.
  std::vector<std::string> Tag(std::span<const std::string> words) const;

  // Token accuracy against gold tags.
  double Accuracy(const std::vector<TaggedSentence> &gold) const;

 private:
  int Predict(const std::vector<std::string> &features) const;

  std::vector<std::string> classes_;
  std::unordered_map<std::string, std::vector<float>> weights_;
  std::unordered_map<std::string, int> tagdict_;
};

}  // namespace citectx

#endif  // CITECTX_POS_TAGGER_H_
