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

#ifndef CITECTX_REFERENCE_RESOLVER_H_
#define CITECTX_REFERENCE_RESOLVER_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "citectx/corpus.h"

namespace citectx {

inline constexpr std::size_t kContributorKeyLength = 25;
inline constexpr std::size_t kTitlePrefixLength = 3;

// Normalized reference identity: contributor_year_titleprefix.
struct ReferenceKey {
  std::string contributor_norm;
  int year = 0;
  std::string title_prefix;

  std::string Render() const;

  bool operator==(const ReferenceKey &) const = default;
};

// Lowercases ASCII, removes every non-alphanumeric character.
std::string NormalizeKeyText(std::string_view text);

// Throws Error(kEmptyAfterNormalization) if contributor or title vanish.
ReferenceKey BuildReferenceKey(const ReferenceEntry &entry);

// Inverse of ReferenceKey::Render() for keys such as
// "americanpsychiatricassoci_2013_the". Returns nullopt on a malformed key.
std::optional<ReferenceKey> ParseReferenceKey(std::string_view key);

using VersionId = std::string;

struct VersionEntry {
  VersionId version_id;
  std::string label;
  int publication_year = 0;
};

// The versions of one cited instrument and the rules matching references to
// them. Immutable once constructed.
class VersionRegistry {
 public:
  // Throws Error(kAmbiguousRegistry) on duplicate years or ids and
  // Error(kInvalidConfig) on malformed prefixes.
  VersionRegistry(std::string author_norm, std::vector<VersionEntry> entries,
                  std::set<std::string> title_prefixes);

  // The seven DSM editions, 1952 through 2013.
  static VersionRegistry Default();

  // Parses the registry JSON document; throws Error(kInvalidConfig).
  static VersionRegistry FromJson(std::string_view text);
  static VersionRegistry Load(const std::string &path);

  const std::string &author_norm() const { return author_norm_; }
  const std::vector<VersionEntry> &entries() const { return entries_; }
  const std::set<std::string> &title_prefixes() const {
    return title_prefixes_;
  }

  const VersionEntry *Find(std::string_view version_id) const;

  // Position of the version in registry order (used for report ordering).
  std::optional<std::size_t> IndexOf(std::string_view version_id) const;

 private:
  std::string author_norm_;
  std::vector<VersionEntry> entries_;
  std::set<std::string> title_prefixes_;
};

std::optional<VersionId> MatchVersion(const ReferenceKey &key,
                                      const VersionRegistry &registry);

// Convenience: key construction plus matching. Entries that cannot be keyed
// resolve to nothing.
std::optional<VersionId> ResolveReference(const ReferenceEntry &entry,
                                          const VersionRegistry &registry);

struct ObjectHistory {
  int years = 0;
  bool flagged = false;  // citing year precedes the version's publication
};

// Throws Error(kUnknownVersion).
ObjectHistory ComputeObjectHistory(std::string_view version_id,
                                   int citing_year,
                                   const VersionRegistry &registry);

}  // namespace citectx

#endif  // CITECTX_REFERENCE_RESOLVER_H_
