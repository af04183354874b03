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

// Trains the averaged-perceptron tagger from "word/TAG" corpora.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "citectx/pos_tagger.h"

int main(int argc, char **argv) {
  CLI::App app{"Train the citance POS tagger"};
  std::vector<std::string> train_paths;
  std::string eval_path, out_path;
  citectx::PosTagger::TrainOptions options;
  app.add_option("--train", train_paths, "Tagged training files")->required();
  app.add_option("--eval", eval_path, "Held-out tagged file");
  app.add_option("--out", out_path, "Model output path")->required();
  app.add_option("--iterations", options.iterations, "Training epochs");
  app.add_option("--seed", options.seed, "Shuffle seed");
  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<citectx::TaggedSentence> sentences;
    for (const auto &path : train_paths) {
      auto part = citectx::ReadTaggedCorpus(path);
      sentences.insert(sentences.end(), part.begin(), part.end());
    }
    const auto tagger = citectx::PosTagger::Train(sentences, options);
    tagger.Save(out_path);
    std::cout << "trained on " << sentences.size() << " sentences\n";
    if (!eval_path.empty()) {
      const auto gold = citectx::ReadTaggedCorpus(eval_path);
      std::cout << "eval accuracy " << tagger.Accuracy(gold) << " on "
                << gold.size() << " sentences\n";
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
