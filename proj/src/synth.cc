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

#include "citectx/synth.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <tuple>

#include "citectx/error.h"
#include "citectx/pipeline.h"
#include "citectx/tokenizer.h"
#include "citectx/verb_profiler.h"

namespace citectx {
namespace {

using nlohmann::json;

[[noreturn]] void Invalid(const std::string &message) {
  throw Error(ErrorCode::kInvalidConfig, "synth spec: " + message);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n) by rejection, independent of library distributions.
  std::uint64_t Below(std::uint64_t n) {
    const std::uint64_t max = std::mt19937_64::max();
    const std::uint64_t limit = max - (max % n + 1) % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x > limit);
    return x % n;
  }

  template <typename T>
  void Shuffle(std::vector<T> &items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[Below(i)]);
    }
  }

  template <typename T>
  const T &Pick(const std::vector<T> &items) {
    return items[Below(items.size())];
  }

  double Unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

enum class ItemKind { kWord, kPunct, kOpen, kClose };

struct Item {
  std::string text;
  std::string tag;
  ItemKind kind = ItemKind::kWord;
};

using Items = std::vector<Item>;

Items Words(std::initializer_list<std::pair<const char *, const char *>> ws) {
  Items out;
  for (const auto &[text, tag] : ws) out.push_back({text, tag, ItemKind::kWord});
  return out;
}

Item Punct(const char *text) { return {text, "", ItemKind::kPunct}; }

struct PlannedSentence {
  Items items;
  std::string cite_ref;  // empty: no anchor
};

struct PlannedCitance {
  VersionId version_id;
  int history_year = 0;
  int citing_year = 0;
  std::size_t pool = kNonMethodPool;
  std::array<bool, kMarkerCategoryCount> markers{};
  std::string verb;
};

const std::vector<Items> &Subjects() {
  static const auto *kSubjects = new std::vector<Items>{
      Words({{"participants", "NNS"}}),
      Words({{"all", "DT"}, {"patients", "NNS"}}),
      Words({{"the", "DT"}, {"clinicians", "NNS"}}),
      Words({{"trained", "JJ"}, {"raters", "NNS"}}),
      Words({{"the", "DT"}, {"authors", "NNS"}}),
      Words({{"prior", "JJ"}, {"studies", "NNS"}}),
  };
  return *kSubjects;
}

const std::vector<Items> &Objects() {
  static const auto *kObjects = new std::vector<Items>{
      Words({{"the", "DT"}, {"criteria", "NNS"}, {"for", "IN"},
             {"major", "JJ"}, {"depressive", "JJ"}, {"disorder", "NN"}}),
      Words({{"the", "DT"}, {"DSM", "NNP"}, {"checklist", "NN"}}),
      Words({{"diagnostic", "JJ"}, {"thresholds", "NNS"}}),
      Words({{"the", "DT"}, {"symptom", "NN"}, {"counts", "NNS"}}),
      Words({{"anxiety", "NN"}, {"disorders", "NNS"}}),
      Words({{"the", "DT"}, {"diagnostic", "JJ"}, {"categories", "NNS"}}),
  };
  return *kObjects;
}

const std::vector<Items> &Fillers() {
  static const auto *kFillers = new std::vector<Items>{
      Words({{"the", "DT"}, {"study", "NN"}, {"was", "VBD"},
             {"approved", "VBN"}, {"by", "IN"}, {"the", "DT"},
             {"local", "JJ"}, {"ethics", "NNS"}, {"committee", "NN"}}),
      Words({{"results", "NNS"}, {"are", "VBP"}, {"summarized", "VBN"},
             {"in", "IN"}, {"Table", "NN"}, {"2", "CD"}}),
      Words({{"data", "NNS"}, {"were", "VBD"}, {"analyzed", "VBN"},
             {"with", "IN"}, {"mixed", "JJ"}, {"models", "NNS"}}),
      Words({{"further", "JJ"}, {"research", "NN"}, {"is", "VBZ"},
             {"needed", "VBN"}}),
      Words({{"symptoms", "NNS"}, {"varied", "VBD"}, {"across", "IN"},
             {"sites", "NNS"}}),
      Words({{"missing", "JJ"}, {"values", "NNS"}, {"were", "VBD"},
             {"rare", "JJ"}}),
  };
  return *kFillers;
}

struct Distractor {
  const char *contributor;
  int year;
  const char *title;
  Items lead;
};

const std::vector<Distractor> &Distractors() {
  static const auto *kDistractors = new std::vector<Distractor>{
      {"World Health Organization", 1992,
       "The ICD-10 classification of mental and behavioural disorders",
       Words({{"comparable", "JJ"}, {"criteria", "NNS"}, {"appear", "VBP"},
              {"in", "IN"}, {"the", "DT"}, {"ICD-10", "NNP"}})},
      {"American Psychiatric Association", 2005,
       "Practice guideline for the treatment of patients with major "
       "depressive disorder",
       Words({{"treatment", "NN"}, {"guidance", "NN"}, {"is", "VBZ"},
              {"summarized", "VBN"}, {"elsewhere", "RB"}})},
  };
  return *kDistractors;
}

const std::vector<std::string> &ManualTitles() {
  static const auto *kTitles = new std::vector<std::string>{
      "Diagnostic and statistical manual of mental disorders",
      "The diagnostic and statistical manual of mental disorders",
      "DSM: Diagnostic and statistical manual of mental disorders",
      "American Psychiatric Association: Diagnostic and statistical manual",
  };
  return *kTitles;
}

Items CitationItems(const std::string &contributor, int year, bool short_form) {
  Items out;
  out.push_back({"(", "", ItemKind::kOpen});
  if (short_form) {
    out.push_back({"APA", "NNP", ItemKind::kWord});
  } else {
    std::size_t pos = 0;
    while (pos < contributor.size()) {
      std::size_t next = contributor.find(' ', pos);
      if (next == std::string::npos) next = contributor.size();
      out.push_back({contributor.substr(pos, next - pos), "NNP",
                     ItemKind::kWord});
      pos = next + 1;
    }
  }
  out.push_back(Punct(","));
  out.push_back({std::to_string(year), "CD", ItemKind::kWord});
  out.push_back({")", "", ItemKind::kClose});
  return out;
}

void Capitalize(Items &items) {
  for (auto &item : items) {
    if (item.kind != ItemKind::kWord) continue;
    item.text[0] = static_cast<char>(
        std::toupper(static_cast<unsigned char>(item.text[0])));
    return;
  }
}

void AppendItems(Items &dst, const Items &src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

PlannedSentence CitanceSentence(const PlannedCitance &c, int manual_year,
                                const std::string &ref_id, Rng &rng) {
  PlannedSentence s;
  Items &it = s.items;
  auto has = [&](MarkerCategory m) {
    return c.markers[static_cast<std::size_t>(m)];
  };
  if (has(MarkerCategory::kEngagement)) {
    AppendItems(it, Words({{"by", "IN"}, {"the", "DT"}, {"way", "NN"}}));
    it.push_back(Punct(","));
  }
  if (has(MarkerCategory::kAttitude)) {
    AppendItems(it, Words({{"unfortunately", "RB"}}));
    it.push_back(Punct(","));
  }
  AppendItems(it, rng.Pick(Subjects()));
  if (has(MarkerCategory::kHedges)) AppendItems(it, Words({{"perhaps", "RB"}}));
  if (has(MarkerCategory::kBoosters)) {
    AppendItems(it, Words({{"obviously", "RB"}}));
  }
  it.push_back({PastTense(c.verb), "VBD", ItemKind::kWord});
  AppendItems(it, rng.Pick(Objects()));
  if (has(MarkerCategory::kSelfMention)) {
    AppendItems(it, Words({{"in", "IN"}, {"our", "PRP$"}, {"sample", "NN"}}));
  }
  AppendItems(it, CitationItems("American Psychiatric Association",
                                manual_year, rng.Below(4) == 0));
  it.push_back(Punct("."));
  Capitalize(it);
  s.cite_ref = ref_id;
  return s;
}

PlannedSentence FillerSentence(Rng &rng) {
  PlannedSentence s;
  s.items = rng.Pick(Fillers());
  s.items.push_back(Punct("."));
  Capitalize(s.items);
  return s;
}

PlannedSentence DistractorSentence(const Distractor &d,
                                   const std::string &ref_id) {
  PlannedSentence s;
  s.items = d.lead;
  AppendItems(s.items, CitationItems(d.contributor, d.year, false));
  s.items.push_back(Punct("."));
  Capitalize(s.items);
  s.cite_ref = ref_id;
  return s;
}

// Renders sentences into a paragraph, appending anchors for cited ones.
Paragraph RenderParagraph(const std::vector<PlannedSentence> &sentences,
                          const std::string &section_id,
                          std::int64_t paragraph_index,
                          std::vector<CitationAnchor> &anchors) {
  Paragraph p;
  std::vector<std::string> tags;
  for (const auto &s : sentences) {
    std::int64_t open = -1;
    ItemKind prev = ItemKind::kPunct;
    for (std::size_t i = 0; i < s.items.size(); ++i) {
      const Item &item = s.items[i];
      const bool attach = item.kind == ItemKind::kPunct ||
                          item.kind == ItemKind::kClose ||
                          (i > 0 && prev == ItemKind::kOpen);
      if (!p.text.empty() && !attach) p.text.push_back(' ');
      if (item.kind == ItemKind::kOpen) {
        open = static_cast<std::int64_t>(p.text.size());
      }
      p.text += item.text;
      if (item.kind == ItemKind::kWord) tags.push_back(item.tag);
      if (item.kind == ItemKind::kClose && !s.cite_ref.empty()) {
        anchors.push_back({section_id, paragraph_index, open,
                           static_cast<std::int64_t>(p.text.size()),
                           {s.cite_ref}});
      }
      prev = item.kind;
    }
  }
  p.token_tags = std::move(tags);
  return p;
}

struct SectionPlan {
  std::string title;
  std::optional<std::size_t> parent;  // index into the plan list
  std::vector<PlannedSentence> sentences;
};

void AddParagraphs(const SectionPlan &plan, SectionNode &node,
                   std::vector<CitationAnchor> &anchors) {
  constexpr std::size_t kPerParagraph = 4;
  for (std::size_t i = 0; i < plan.sentences.size(); i += kPerParagraph) {
    std::vector<PlannedSentence> chunk(
        plan.sentences.begin() + i,
        plan.sentences.begin() +
            std::min(plan.sentences.size(), i + kPerParagraph));
    node.paragraphs.push_back(RenderParagraph(
        chunk, node.section_id,
        static_cast<std::int64_t>(node.paragraphs.size()), anchors));
  }
}

// Section layout variants; the last index of each is where Method citances
// go (nullopt: no Method block).
std::vector<SectionPlan> MethodBlock(std::uint64_t style,
                                     std::size_t first_index,
                                     std::size_t &citance_section) {
  std::vector<SectionPlan> out;
  auto add = [&](const char *title, std::optional<std::size_t> parent) {
    out.push_back({title, parent, {}});
    return first_index + out.size() - 1;
  };
  switch (style) {
    case 0: {
      const auto m = add("Method", std::nullopt);
      citance_section = add("Participants", m);
      break;
    }
    case 1: {
      const auto e = add("Experiment 1", std::nullopt);
      const auto m = add("Method", e);
      citance_section = add("Participants", m);
      break;
    }
    case 2:
      citance_section = add("Materials and methods", std::nullopt);
      break;
    default: {
      const auto m = add("Methods", std::nullopt);
      citance_section = add("Measures", m);
      break;
    }
  }
  return out;
}

struct DocPlan {
  int year = 0;
  std::vector<PlannedCitance> citances;
  bool methodful = true;
  long distractors = 0;
};

Document BuildDocument(const DocPlan &plan, const VersionRegistry &registry,
                       Rng &rng) {
  Document doc;
  doc.publication_year = plan.year;
  doc.journal_id = "J" + std::to_string(1 + rng.Below(20));

  std::map<VersionId, std::string> ref_ids;
  for (const auto &c : plan.citances) {
    if (ref_ids.count(c.version_id)) continue;
    const std::string id = "r" + std::to_string(doc.references.size() + 1);
    ref_ids[c.version_id] = id;
    doc.references.push_back({id, "American Psychiatric Association",
                              registry.Find(c.version_id)->publication_year,
                              rng.Pick(ManualTitles())});
  }
  std::vector<std::string> distractor_refs;
  for (long i = 0; i < plan.distractors; ++i) {
    const std::size_t which = rng.Below(Distractors().size());
    const std::string id = "r" + std::to_string(doc.references.size() + 1);
    const Distractor &d = Distractors()[which];
    doc.references.push_back({id, d.contributor, d.year, d.title});
    distractor_refs.push_back(id);
  }

  std::vector<SectionPlan> plans;
  plans.push_back({"Introduction", std::nullopt, {FillerSentence(rng)}});
  std::size_t method_leaf = 0;
  if (plan.methodful) {
    for (auto &s : MethodBlock(rng.Below(4), plans.size(), method_leaf)) {
      plans.push_back(std::move(s));
    }
    plans[method_leaf].sentences.push_back(FillerSentence(rng));
  }
  plans.push_back({"Results", std::nullopt, {FillerSentence(rng)}});
  const std::size_t discussion = plans.size();
  plans.push_back({"Discussion", std::nullopt, {FillerSentence(rng)}});

  bool to_intro = true;
  for (const auto &c : plan.citances) {
    const int year = registry.Find(c.version_id)->publication_year;
    PlannedSentence s = CitanceSentence(c, year, ref_ids[c.version_id], rng);
    if (c.pool == kMethodPool) {
      plans[method_leaf].sentences.push_back(std::move(s));
    } else {
      plans[to_intro ? 0 : discussion].sentences.push_back(std::move(s));
      to_intro = !to_intro;
    }
  }
  for (std::size_t i = 0; i < distractor_refs.size(); ++i) {
    const std::string &id = distractor_refs[i];
    const ReferenceEntry *ref = doc.FindReference(id);
    for (const auto &d : Distractors()) {
      if (d.year == ref->year && ref->lead_contributor == d.contributor) {
        plans[0].sentences.push_back(DistractorSentence(d, id));
        break;
      }
    }
  }

  for (std::size_t i = 0; i < plans.size(); ++i) {
    SectionNode node;
    node.section_id = "s" + std::to_string(i + 1);
    node.title = plans[i].title;
    if (plans[i].parent) {
      node.parent_id = "s" + std::to_string(*plans[i].parent + 1);
    }
    AddParagraphs(plans[i], node, doc.anchors);
    doc.sections.push_back(std::move(node));
  }
  return doc;
}

// Largest-remainder allocation of `total` over Zipf weights 1/(i+1).
std::vector<long> ZipfAllocation(long total, std::size_t k) {
  std::vector<double> weights(k);
  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) sum += weights[i] = 1.0 / (i + 1);
  std::vector<long> out(k);
  std::vector<std::pair<double, std::size_t>> remainders;
  long used = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const double exact = total * weights[i] / sum;
    out[i] = static_cast<long>(std::floor(exact));
    used += out[i];
    remainders.emplace_back(exact - out[i], i);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto &a, const auto &b) { return a.first > b.first; });
  for (long i = 0; i < total - used; ++i) ++out[remainders[i].second];
  return out;
}

LinearCurve ParseCurve(const json &value, const char *key) {
  if (value.is_number()) {
    const double v = value.get<double>();
    return {v, v};
  }
  if (!value.is_object() || !value.contains("start") ||
      !value.contains("end") || !value["start"].is_number() ||
      !value["end"].is_number()) {
    Invalid(std::string(key) + " must be a number or {start, end}");
  }
  return {value["start"].get<double>(), value["end"].get<double>()};
}

std::array<double, kMarkerCategoryCount> ParseMarkerProbabilities(
    const json &value, const char *key) {
  std::array<double, kMarkerCategoryCount> out{};
  if (!value.is_object()) Invalid(std::string(key) + " must be an object");
  for (const auto &[name, p] : value.items()) {
    const auto category = ParseMarkerCategory(name);
    if (!category) Invalid("unknown marker category " + name);
    if (!p.is_number()) Invalid("marker probability must be a number");
    out[static_cast<std::size_t>(*category)] = p.get<double>();
  }
  return out;
}

}  // namespace

double LinearCurve::At(int year, int first, int last) const {
  if (last == first) return start;
  return start + (end - start) * (year - first) / double(last - first);
}

long SynthVersionSpec::CitancesAt(int history_year) const {
  return std::lround(citances.At(history_year, history_first, history_last));
}

double SynthVersionSpec::MethodRatioAt(int history_year) const {
  return method_ratio.At(history_year, history_first, history_last);
}

std::string PastTense(std::string_view lemma) {
  static const auto *kIrregular = new std::map<std::string, std::string,
                                               std::less<>>{
      {"be", "was"},         {"become", "became"}, {"begin", "began"},
      {"bring", "brought"},  {"build", "built"},   {"choose", "chose"},
      {"do", "did"},         {"draw", "drew"},     {"feel", "felt"},
      {"find", "found"},     {"get", "got"},       {"give", "gave"},
      {"go", "went"},        {"grow", "grew"},     {"have", "had"},
      {"hold", "held"},      {"keep", "kept"},     {"know", "knew"},
      {"lead", "led"},       {"leave", "left"},    {"make", "made"},
      {"meet", "met"},       {"put", "put"},       {"read", "read"},
      {"run", "ran"},        {"say", "said"},      {"see", "saw"},
      {"seek", "sought"},    {"set", "set"},       {"take", "took"},
      {"tell", "told"},      {"think", "thought"}, {"undergo", "underwent"},
      {"undertake", "undertook"}, {"write", "wrote"},
  };
  if (auto it = kIrregular->find(lemma); it != kIrregular->end()) {
    return it->second;
  }
  std::string w(lemma);
  auto vowel = [](char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
  };
  if (w.empty()) return w;
  if (w.back() == 'e') return w + "d";
  if (w.size() >= 2 && w.back() == 'y' && !vowel(w[w.size() - 2])) {
    return w.substr(0, w.size() - 1) + "ied";
  }
  const std::size_t n = w.size();
  if (n >= 3 && !vowel(w[n - 1]) && vowel(w[n - 2]) && !vowel(w[n - 3]) &&
      w.back() != 'w' && w.back() != 'x' && w.back() != 'y') {
    int groups = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (vowel(w[i]) && (i == 0 || !vowel(w[i - 1]))) ++groups;
    }
    static const auto *kFinalStress = new std::set<std::string, std::less<>>{
        "admit", "commit", "compel", "control", "emit",   "occur",
        "omit",  "permit", "prefer", "refer",   "submit", "transfer"};
    if (groups == 1 || kFinalStress->count(w)) return w + w.back() + "ed";
  }
  return w + "ed";
}

SynthSpec SynthSpec::FromJson(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception &e) {
    Invalid(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) Invalid("must be a JSON object");
  SynthSpec spec;
  try {
    spec.seed = j.at("seed").get<std::uint64_t>();
    spec.n_docs = j.at("n_docs").get<long>();
    if (j.contains("calendar_years")) {
      const auto &range = j["calendar_years"];
      if (!range.is_array() || range.size() != 2) {
        Invalid("calendar_years must be [first, last]");
      }
      spec.calendar_years = {range[0].get<int>(), range[1].get<int>()};
    }
    if (j.contains("citances_per_paper")) {
      spec.citances_per_paper_min = j["citances_per_paper"].at("min").get<int>();
      spec.citances_per_paper_max = j["citances_per_paper"].at("max").get<int>();
    }
    for (const auto &v : j.at("versions")) {
      SynthVersionSpec vs;
      vs.version_id = v.at("id").get<std::string>();
      const auto &h = v.at("history_years");
      if (!h.is_array() || h.size() != 2) {
        Invalid("history_years must be [first, last]");
      }
      vs.history_first = h[0].get<int>();
      vs.history_last = h[1].get<int>();
      vs.citances = ParseCurve(v.at("citances_per_year"), "citances_per_year");
      vs.method_ratio = ParseCurve(v.at("method_ratio"), "method_ratio");
      spec.versions.push_back(std::move(vs));
    }
    const auto &mp = j.at("marker_probabilities");
    spec.marker_probability[kMethodPool] =
        ParseMarkerProbabilities(mp.at("method"), "method");
    spec.marker_probability[kNonMethodPool] =
        ParseMarkerProbabilities(mp.at("non_method"), "non_method");
    const auto &pools = j.at("verb_pools");
    spec.verb_pools[kMethodPool] =
        pools.at("method").get<std::vector<std::string>>();
    spec.verb_pools[kNonMethodPool] =
        pools.at("non_method").get<std::vector<std::string>>();
    spec.methodless_fraction = j.value("methodless_fraction", 0.0);
    spec.distractor_anchors = j.value("distractor_anchors", 0L);
  } catch (const json::exception &e) {
    Invalid(e.what());
  }
  return spec;
}

SynthSpec SynthSpec::Load(const std::string &path) {
  return FromJson(ReadTextFile(path));
}

void SynthSpec::Validate(const VersionRegistry &registry) const {
  if (n_docs < 1) Invalid("n_docs must be >= 1");
  if (citances_per_paper_min < 1 ||
      citances_per_paper_max < citances_per_paper_min) {
    Invalid("citances_per_paper must satisfy 1 <= min <= max");
  }
  if (calendar_years && calendar_years->first > calendar_years->second) {
    Invalid("calendar_years range is empty");
  }
  auto probability = [](double p) { return p >= 0.0 && p <= 1.0; };
  std::set<VersionId> seen;
  for (const auto &v : versions) {
    if (!registry.Find(v.version_id)) {
      Invalid("version not in registry: " + v.version_id);
    }
    if (!seen.insert(v.version_id).second) {
      Invalid("duplicate version " + v.version_id);
    }
    if (v.history_first < 0 || v.history_last < v.history_first) {
      Invalid("history_years must satisfy 0 <= first <= last");
    }
    for (int h = v.history_first; h <= v.history_last; ++h) {
      if (v.CitancesAt(h) < 0) Invalid("citance counts must be >= 0");
      if (!probability(v.MethodRatioAt(h))) {
        Invalid("method_ratio must stay within [0, 1]");
      }
    }
  }
  for (const auto &pool : marker_probability) {
    for (double p : pool) {
      if (!probability(p)) Invalid("marker probabilities must be in [0, 1]");
    }
  }
  if (!probability(methodless_fraction)) {
    Invalid("methodless_fraction must be in [0, 1]");
  }
  if (distractor_anchors < 0) Invalid("distractor_anchors must be >= 0");

  const MarkerLexicon lexicon = MarkerLexicon::Starter();
  std::set<std::string> used;
  for (const auto &pool : verb_pools) {
    if (pool.empty()) Invalid("verb pools must be non-empty");
    for (const auto &lemma : pool) {
      if (!used.insert(lemma).second) Invalid("verb listed twice: " + lemma);
      const std::string past = PastTense(lemma);
      if (LemmatizeVerb(past, "VBD") != lemma) {
        Invalid("verb does not round-trip through the lemmatizer: " + lemma);
      }
      if (Tokenize(past).size() != 1 || !lexicon.StartingWith(past).empty()) {
        Invalid("verb form collides with a marker phrase: " + past);
      }
    }
  }
}

SynthOutput GenerateSynthCorpus(const SynthSpec &spec,
                                const VersionRegistry &registry) {
  spec.Validate(registry);
  Rng rng(spec.seed);
  json truth;
  truth["seed"] = spec.seed;

  // Plant citances bucket by bucket.
  std::vector<PlannedCitance> all;
  json buckets = json::array();
  std::map<VersionId, std::array<std::map<std::string, long>, 2>> verbs;
  for (const auto &vs : spec.versions) {
    const int published = registry.Find(vs.version_id)->publication_year;
    for (int h = vs.history_first; h <= vs.history_last; ++h) {
      const long n = vs.CitancesAt(h);
      const double ratio = vs.MethodRatioAt(h);
      const long n_method = std::lround(ratio * n);
      std::array<long, 2> n_pool = {n_method, n - n_method};
      json bucket;
      bucket["version_id"] = vs.version_id;
      bucket["object_history_year"] = h;
      bucket["citing_year"] = published + h;
      bucket["n_citances"] = n;
      bucket["n_method"] = n_method;
      bucket["n_non_method"] = n - n_method;
      bucket["method_ratio"] = ratio;
      std::array<std::array<long, kMarkerCategoryCount>, 2> hits{};
      for (std::size_t pool = 0; pool < 2; ++pool) {
        std::vector<PlannedCitance> group(n_pool[pool]);
        for (auto &c : group) {
          c.version_id = vs.version_id;
          c.history_year = h;
          c.citing_year = published + h;
          c.pool = pool;
        }
        std::vector<std::size_t> order(group.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        for (MarkerCategory m : kAllMarkerCategories) {
          const auto mi = static_cast<std::size_t>(m);
          hits[pool][mi] =
              std::lround(spec.marker_probability[pool][mi] * n_pool[pool]);
          rng.Shuffle(order);
          for (long k = 0; k < hits[pool][mi]; ++k) {
            group[order[k]].markers[mi] = true;
          }
        }
        const auto &lemmas = spec.verb_pools[pool];
        const auto alloc = ZipfAllocation(n_pool[pool], lemmas.size());
        std::vector<std::string> bag;
        for (std::size_t i = 0; i < lemmas.size(); ++i) {
          bag.insert(bag.end(), alloc[i], lemmas[i]);
          if (alloc[i] > 0) verbs[vs.version_id][pool][lemmas[i]] += alloc[i];
        }
        rng.Shuffle(bag);
        for (std::size_t i = 0; i < group.size(); ++i) group[i].verb = bag[i];
        all.insert(all.end(), group.begin(), group.end());
      }
      json markers = json::object();
      for (MarkerCategory m : kAllMarkerCategories) {
        const auto mi = static_cast<std::size_t>(m);
        const double pm = spec.marker_probability[kMethodPool][mi];
        const double pn = spec.marker_probability[kNonMethodPool][mi];
        json entry;
        entry["method_probability"] = pm;
        entry["non_method_probability"] = pn;
        entry["method_hits"] = hits[kMethodPool][mi];
        entry["non_method_hits"] = hits[kNonMethodPool][mi];
        entry["expected_ratio"] = pm * ratio + pn * (1.0 - ratio);
        entry["planted_ratio"] =
            n > 0 ? json(double(hits[0][mi] + hits[1][mi]) / n) : json(nullptr);
        markers[std::string(MarkerCategoryName(m))] = entry;
      }
      bucket["markers"] = markers;
      buckets.push_back(bucket);
    }
  }
  truth["buckets"] = buckets;

  // Group citances into citing papers by calendar year.
  std::map<int, std::vector<PlannedCitance>> by_year;
  for (auto &c : all) by_year[c.citing_year].push_back(std::move(c));
  std::vector<DocPlan> docs;
  for (auto &[year, list] : by_year) {
    rng.Shuffle(list);
    std::size_t i = 0;
    while (i < list.size()) {
      const auto span = spec.citances_per_paper_max -
                        spec.citances_per_paper_min + 1;
      const std::size_t size =
          spec.citances_per_paper_min + rng.Below(span);
      DocPlan doc;
      doc.year = year;
      for (std::size_t k = 0; k < size && i < list.size(); ++k, ++i) {
        doc.citances.push_back(std::move(list[i]));
      }
      docs.push_back(std::move(doc));
    }
  }
  const long citing_docs = static_cast<long>(docs.size());
  if (citing_docs > spec.n_docs) {
    Invalid("n_docs (" + std::to_string(spec.n_docs) +
            ") is smaller than the " + std::to_string(citing_docs) +
            " citing papers the plan needs");
  }
  int first_year = 0, last_year = 0;
  if (spec.calendar_years) {
    std::tie(first_year, last_year) = *spec.calendar_years;
  } else if (!by_year.empty()) {
    first_year = by_year.begin()->first;
    last_year = by_year.rbegin()->first;
  }
  for (long i = citing_docs; i < spec.n_docs; ++i) {
    DocPlan doc;
    doc.year = first_year + static_cast<int>(rng.Below(last_year - first_year + 1));
    doc.methodful = rng.Unit() >= spec.methodless_fraction;
    docs.push_back(std::move(doc));
  }
  std::vector<std::size_t> methodful;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    if (docs[i].methodful) methodful.push_back(i);
  }
  long distractors = 0;
  if (!methodful.empty()) {
    for (long i = 0; i < spec.distractor_anchors; ++i) {
      ++docs[rng.Pick(methodful)].distractors;
      ++distractors;
    }
  }
  rng.Shuffle(docs);

  SynthOutput out;
  std::map<int, long> papers_per_year, citing_per_year;
  std::map<VersionId, std::array<long, 5>> per_version;  // see keys below
  long methodful_count = 0;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    Document doc = BuildDocument(docs[i], registry, rng);
    char id[32];
    std::snprintf(id, sizeof(id), "synth-%06zu", i + 1);
    doc.doc_id = id;
    out.documents.push_back(std::move(doc));

    const DocPlan &plan = docs[i];
    ++papers_per_year[plan.year];
    if (plan.methodful) ++methodful_count;
    if (plan.citances.empty()) continue;
    ++citing_per_year[plan.year];
    std::map<VersionId, std::pair<bool, bool>> seen;  // any, any method
    for (const auto &c : plan.citances) {
      auto &s = seen[c.version_id];
      s.first = true;
      s.second |= c.pool == kMethodPool;
      auto &v = per_version[c.version_id];
      ++v[2];
      ++v[c.pool == kMethodPool ? 3 : 4];
    }
    for (const auto &[v, s] : seen) {
      ++per_version[v][0];
      if (s.second) ++per_version[v][1];
    }
  }

  json versions = json::array();
  for (const auto &entry : registry.entries()) {
    auto it = per_version.find(entry.version_id);
    if (it == per_version.end()) continue;
    const auto &v = it->second;
    json row;
    row["version_id"] = entry.version_id;
    row["citing_papers"] = v[0];
    row["citing_papers_with_method_citance"] = v[1];
    row["citances"] = v[2];
    row["method_citances"] = v[3];
    row["non_method_citances"] = v[4];
    json vb;
    vb["Method"] = verbs[entry.version_id][kMethodPool];
    vb["NonMethod"] = verbs[entry.version_id][kNonMethodPool];
    row["verbs"] = vb;
    versions.push_back(row);
  }
  truth["versions"] = versions;
  json curves = json::object();
  for (const auto &vs : spec.versions) {
    curves[vs.version_id] = {{"history_years", {vs.history_first, vs.history_last}},
                             {"method_ratio",
                              {{"start", vs.method_ratio.start},
                               {"end", vs.method_ratio.end}}}};
  }
  truth["method_ratio_curves"] = curves;
  json ppy = json::object(), cpy = json::object();
  for (const auto &[y, n] : papers_per_year) ppy[std::to_string(y)] = n;
  for (const auto &[y, n] : citing_per_year) cpy[std::to_string(y)] = n;
  truth["papers_per_year"] = ppy;
  truth["citing_papers_per_year"] = cpy;
  truth["documents"] = static_cast<long>(docs.size());
  truth["citing_documents"] = citing_docs;
  truth["methodful_documents"] = methodful_count;
  truth["skipped_anchors"] = distractors;
  out.ground_truth = std::move(truth);
  return out;
}

}  // namespace citectx
