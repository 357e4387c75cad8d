// Copyright 2026 The outlierseq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "outlierseq/pmf.hpp"

namespace outlierseq::cli {

/// Raised for malformed sequence files; carries 1-based row and column.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t row, std::size_t column);
  std::size_t row() const noexcept { return row_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

/// Reads one sequence per line, comma-separated nonnegative integer symbols.
/// An optional first line `# alphabet=K` fixes |Y|; otherwise |Y| = 1 + the
/// largest symbol seen (at least 2). Blank lines are skipped.
SequenceSet read_sequence_csv(std::istream& in);
SequenceSet read_sequence_csv_file(const std::string& path);

}  // namespace outlierseq::cli
