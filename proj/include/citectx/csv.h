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

#ifndef CITECTX_CSV_H_
#define CITECTX_CSV_H_

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace citectx {

// RFC 4180 field quoting: fields holding commas, quotes or line breaks are
// quoted, with embedded quotes doubled.
std::string CsvEscape(std::string_view field);

// Shortest decimal text that round-trips to the same double.
std::string FormatDouble(double value);
std::string FormatOptional(const std::optional<double> &value);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream &out) : out_(out) {}

  void Row(const std::vector<std::string> &fields);

 private:
  std::ostream &out_;
};

}  // namespace citectx

#endif  // CITECTX_CSV_H_
