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

#ifndef CITECTX_TESTS_TEST_SUPPORT_H_
#define CITECTX_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "citectx/corpus.h"

namespace citectx::testing {

inline std::string TestDataPath(const std::string &name) {
  return std::string(CITECTX_TEST_DATA_DIR) + "/" + name;
}

inline std::string DataPath(const std::string &name) {
  return std::string(CITECTX_DATA_DIR) + "/" + name;
}

inline std::string Slurp(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void WriteText(const std::filesystem::path &path,
                      const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
}

// Tab-separated rows of a data file, skipping blanks and '#' comments.
inline std::vector<std::vector<std::string>> ReadTsv(const std::string &path) {
  std::vector<std::vector<std::string>> rows;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

// Rows of an RFC 4180 CSV file; quoted fields may hold commas, quotes and
// line breaks.
inline std::vector<std::vector<std::string>> ParseCsv(const std::string &text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"' && i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      ++i;
    } else {
      field += c;
    }
  }
  if (!field.empty() || !row.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

// CSV rows as header-keyed maps.
inline std::vector<std::map<std::string, std::string>> CsvRecords(
    const std::string &text) {
  const auto rows = ParseCsv(text);
  std::vector<std::map<std::string, std::string>> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    std::map<std::string, std::string> rec;
    for (std::size_t c = 0; c < rows[0].size() && c < rows[r].size(); ++c) {
      rec[rows[0][c]] = rows[r][c];
    }
    out.push_back(std::move(rec));
  }
  return out;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("citectx-test-" + std::to_string(rd()) + "-" +
             std::to_string(++counter));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  const std::filesystem::path &path() const { return path_; }
  std::string File(const std::string &name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

// Builder for small hand-made documents.
class DocBuilder {
 public:
  explicit DocBuilder(std::string doc_id, int year = 2016) {
    doc_.doc_id = std::move(doc_id);
    doc_.publication_year = year;
    doc_.journal_id = "J1";
  }

  DocBuilder &Section(const std::string &id, const std::string &title,
                      std::optional<std::string> parent = std::nullopt) {
    doc_.sections.push_back({id, title, std::move(parent), {}});
    return *this;
  }

  DocBuilder &Paragraph(const std::string &section_id,
                        const std::string &text) {
    for (auto &s : doc_.sections) {
      if (s.section_id == section_id) s.paragraphs.push_back({text, {}});
    }
    return *this;
  }

  DocBuilder &Reference(const std::string &id, const std::string &contributor,
                        int year, const std::string &title) {
    doc_.references.push_back({id, contributor, year, title});
    return *this;
  }

  DocBuilder &ApaReference(const std::string &id, int year) {
    return Reference(id, "American Psychiatric Association", year,
                     "Diagnostic and statistical manual of mental disorders");
  }

  // Anchors the first occurrence of `marker` in the paragraph.
  DocBuilder &Anchor(const std::string &section_id, std::int64_t paragraph,
                     const std::string &marker,
                     std::vector<std::string> ref_ids) {
    for (const auto &s : doc_.sections) {
      if (s.section_id != section_id) continue;
      const std::string &text = s.paragraphs.at(paragraph).text;
      const auto pos = text.find(marker);
      doc_.anchors.push_back({section_id, paragraph,
                              static_cast<std::int64_t>(pos),
                              static_cast<std::int64_t>(pos + marker.size()),
                              std::move(ref_ids)});
    }
    return *this;
  }

  Document Build() const { return doc_; }

 private:
  Document doc_;
};

// Pearson correlation of average ranks, written independently of the
// library: ranks by sorting indices and averaging tie blocks.
inline std::vector<double> OracleAverageRanks(const std::vector<double> &v) {
  const std::size_t n = v.size();
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && v[idx[j + 1]] == v[idx[i]]) ++j;
    const double avg = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[idx[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

inline double OraclePearson(const std::vector<double> &x,
                            const std::vector<double> &y) {
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return sxy / std::sqrt(sxx * syy);
}

inline double OracleSpearman(const std::vector<double> &a,
                             const std::vector<double> &b) {
  return OraclePearson(OracleAverageRanks(a), OracleAverageRanks(b));
}

}  // namespace citectx::testing

#endif  // CITECTX_TESTS_TEST_SUPPORT_H_
