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

#include "citectx/reference_resolver.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "citectx/error.h"
#include "json.hpp"

namespace citectx {

std::string ReferenceKey::Render() const {
  return contributor_norm + "_" + std::to_string(year) + "_" + title_prefix;
}

std::string NormalizeKeyText(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 0x80 && std::isalnum(u)) {
      out.push_back(static_cast<char>(std::tolower(u)));
    }
  }
  return out;
}

ReferenceKey BuildReferenceKey(const ReferenceEntry &entry) {
  ReferenceKey key;
  key.contributor_norm = NormalizeKeyText(entry.lead_contributor)
                             .substr(0, kContributorKeyLength);
  key.title_prefix =
      NormalizeKeyText(entry.title).substr(0, kTitlePrefixLength);
  key.year = entry.year;
  if (key.contributor_norm.empty()) {
    throw Error(ErrorCode::kEmptyAfterNormalization,
                "contributor '" + entry.lead_contributor + "'");
  }
  if (key.title_prefix.empty()) {
    throw Error(ErrorCode::kEmptyAfterNormalization,
                "title '" + entry.title + "'");
  }
  return key;
}

std::optional<ReferenceKey> ParseReferenceKey(std::string_view key) {
  const auto first = key.find('_');
  const auto last = key.rfind('_');
  if (first == std::string_view::npos || first == last) return std::nullopt;
  ReferenceKey out;
  out.contributor_norm = std::string(key.substr(0, first));
  const auto year = key.substr(first + 1, last - first - 1);
  auto [ptr, ec] =
      std::from_chars(year.data(), year.data() + year.size(), out.year);
  if (ec != std::errc() || ptr != year.data() + year.size()) {
    return std::nullopt;
  }
  out.title_prefix = std::string(key.substr(last + 1));
  if (out.contributor_norm.empty() || out.title_prefix.empty()) {
    return std::nullopt;
  }
  return out;
}

VersionRegistry::VersionRegistry(std::string author_norm,
                                 std::vector<VersionEntry> entries,
                                 std::set<std::string> title_prefixes)
    : author_norm_(std::move(author_norm)),
      entries_(std::move(entries)),
      title_prefixes_(std::move(title_prefixes)) {
  if (author_norm_.empty()) {
    throw Error(ErrorCode::kInvalidConfig, "registry author_norm is empty");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (entries_[i].publication_year == entries_[j].publication_year) {
        throw Error(ErrorCode::kAmbiguousRegistry,
                    "year " + std::to_string(entries_[i].publication_year) +
                        " used by " + entries_[j].version_id + " and " +
                        entries_[i].version_id);
      }
      if (entries_[i].version_id == entries_[j].version_id) {
        throw Error(ErrorCode::kAmbiguousRegistry,
                    "duplicate version id " + entries_[i].version_id);
      }
    }
  }
  for (const auto &p : title_prefixes_) {
    if (p.empty() || p.size() > kTitlePrefixLength ||
        NormalizeKeyText(p) != p) {
      throw Error(ErrorCode::kInvalidConfig,
                  "title prefix '" + p + "' is not normalized");
    }
  }
}

VersionRegistry VersionRegistry::Default() {
  return VersionRegistry(
      "americanpsychiatricassoci",
      {{"V1", "1st Edition", 1952},
       {"V2", "2nd Edition", 1968},
       {"V3", "3rd Edition", 1980},
       {"V3-TR", "3rd Edition (Text Revision)", 1987},
       {"V4", "4th Edition", 1994},
       {"V4-TR", "4th Edition (Text Revision)", 2000},
       {"V5", "5th Edition", 2013}},
      {"the", "dia", "dsm", "ame"});
}

VersionRegistry VersionRegistry::FromJson(std::string_view text) {
  using nlohmann::json;
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error &e) {
    throw Error(ErrorCode::kInvalidConfig, std::string("registry: ") + e.what());
  }
  try {
    std::vector<VersionEntry> entries;
    for (const auto &v : root.at("versions")) {
      entries.push_back({v.at("id").get<std::string>(),
                         v.value("label", v.at("id").get<std::string>()),
                         v.at("year").get<int>()});
    }
    std::set<std::string> prefixes;
    for (const auto &p : root.at("title_prefixes")) {
      prefixes.insert(p.get<std::string>());
    }
    return VersionRegistry(root.at("author_norm").get<std::string>(),
                           std::move(entries), std::move(prefixes));
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kInvalidConfig, std::string("registry: ") + e.what());
  }
}

VersionRegistry VersionRegistry::Load(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read registry " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return FromJson(buf.str());
}

const VersionEntry *VersionRegistry::Find(std::string_view version_id) const {
  for (const auto &e : entries_) {
    if (e.version_id == version_id) return &e;
  }
  return nullptr;
}

std::optional<std::size_t> VersionRegistry::IndexOf(
    std::string_view version_id) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].version_id == version_id) return i;
  }
  return std::nullopt;
}

std::optional<VersionId> MatchVersion(const ReferenceKey &key,
                                      const VersionRegistry &registry) {
  if (key.contributor_norm != registry.author_norm()) return std::nullopt;
  if (!registry.title_prefixes().count(key.title_prefix)) return std::nullopt;
  for (const auto &e : registry.entries()) {
    if (e.publication_year == key.year) return e.version_id;
  }
  return std::nullopt;
}

std::optional<VersionId> ResolveReference(const ReferenceEntry &entry,
                                          const VersionRegistry &registry) {
  try {
    return MatchVersion(BuildReferenceKey(entry), registry);
  } catch (const Error &) {
    return std::nullopt;
  }
}

ObjectHistory ComputeObjectHistory(std::string_view version_id,
                                   int citing_year,
                                   const VersionRegistry &registry) {
  const VersionEntry *e = registry.Find(version_id);
  if (e == nullptr) {
    throw Error(ErrorCode::kUnknownVersion, std::string(version_id));
  }
  const int years = citing_year - e->publication_year;
  return {years, years < 0};
}

}  // namespace citectx
