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
#include "outlierseq/sequence_csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace outlierseq::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::string located(const std::string& what, std::size_t row, std::size_t column) {
  std::ostringstream msg;
  msg << "row " << row;
  if (column > 0) msg << ", column " << column;
  msg << ": " << what;
  return msg.str();
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t row, std::size_t column)
    : std::runtime_error(located(what, row, column)), row_(row), column_(column) {}

SequenceSet read_sequence_csv(std::istream& in) {
  std::vector<std::vector<Symbol>> rows;
  std::size_t declared_alphabet = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string content = trim(line);
    if (content.empty()) continue;
    if (content.front() == '#') {
      const std::string body = trim(std::string_view(content).substr(1));
      const std::string key = "alphabet=";
      if (rows.empty() && declared_alphabet == 0 && body.rfind(key, 0) == 0) {
        const std::string value = trim(std::string_view(body).substr(key.size()));
        std::size_t k = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), k);
        if (ec != std::errc() || ptr != value.data() + value.size() || k < 2) {
          throw ParseError("invalid alphabet header '" + content + "'", line_no, 0);
        }
        declared_alphabet = k;
        continue;
      }
      throw ParseError("unexpected comment line '" + content +
                           "' (only a leading '# alphabet=K' header is allowed)",
                       line_no, 0);
    }
    std::vector<Symbol> row;
    std::stringstream fields(content);
    std::string field;
    std::size_t column = 0;
    while (std::getline(fields, field, ',')) {
      ++column;
      const std::string token = trim(field);
      unsigned long value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() ||
          value > 0xffffffffUL) {
        throw ParseError("invalid symbol '" + token + "' (expected a nonnegative integer)",
                         line_no, column);
      }
      if (declared_alphabet != 0 && value >= declared_alphabet) {
        std::ostringstream msg;
        msg << "symbol " << value << " outside declared alphabet of size " << declared_alphabet;
        throw ParseError(msg.str(), line_no, column);
      }
      row.push_back(static_cast<Symbol>(value));
    }
    if (content.back() == ',') throw ParseError("trailing comma", line_no, column + 1);
    if (!rows.empty() && row.size() != rows.front().size()) {
      std::ostringstream msg;
      msg << "row has " << row.size() << " symbols, expected " << rows.front().size();
      throw ParseError(msg.str(), line_no, 0);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("no sequences found", line_no, 0);

  std::size_t k = declared_alphabet;
  if (k == 0) {
    Symbol max_symbol = 0;
    for (const auto& r : rows) max_symbol = std::max(max_symbol, *std::max_element(r.begin(), r.end()));
    k = std::max<std::size_t>(2, static_cast<std::size_t>(max_symbol) + 1);
  }
  return SequenceSet(std::move(rows), Alphabet(k));
}

SequenceSet read_sequence_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  return read_sequence_csv(in);
}

}  // namespace outlierseq::cli
