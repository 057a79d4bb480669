// Copyright 2026 The Factual Authors.
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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace factual::harness {

// A metric that could not be computed; `reason` is the error kind.
struct Undefined {
  std::string reason;
};

using Value = std::variant<bool, std::int64_t, double, std::string, Undefined>;
using Row = std::vector<std::pair<std::string, Value>>;

/// Command output in two renderings: JSONL for machines (one line per
/// record row, then one summary line) and an aligned text table of the
/// summary for people. Reals are printed with six decimals.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void add_row(Row row) { rows_.push_back(std::move(row)); }
  void set(std::string key, Value value);

  const Value* find(std::string_view key) const;
  const std::vector<Row>& rows() const { return rows_; }

  std::string jsonl() const;
  std::string table() const;

 private:
  std::string command_;
  std::vector<Row> rows_;
  Row summary_;
};

// Text form used in tables: six decimals for reals, "undefined" for
// Undefined.
std::string render(const Value& value);

}  // namespace factual::harness
