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

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace factual::harness {

// One dataset row. Serialized as a JSON object per line using these field
// names; unknown fields are preserved by commands that rewrite records.
struct EvalRecord {
  std::string id;
  std::string caption;
  std::optional<std::string> mr;
  std::optional<std::string> gold_sg;
  std::optional<std::string> candidate_sg;
  // Corrupted counterpart of candidate_sg, read by the foil command.
  std::optional<std::string> foil_sg;
  std::optional<std::string> image_id;
  std::optional<double> human_score;
  std::map<std::string, double> external_scores;
};

// Throws FormatError for wrong field types and MissingField when `id` is
// absent or none of mr/gold_sg/candidate_sg is present.
EvalRecord record_from_json(const nlohmann::ordered_json& object);
nlohmann::ordered_json record_to_json(const EvalRecord& record);

// Throws MissingField naming the field.
const std::string& require(const std::optional<std::string>& field,
                           const char* name);

struct JsonlLine {
  std::size_t line_no = 0;  // 1-based
  std::string text;
};

// Non-blank lines of a JSONL file. Throws IoError.
std::vector<JsonlLine> read_jsonl(const std::filesystem::path& path);

}  // namespace factual::harness
