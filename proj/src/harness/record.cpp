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

#include "factual/harness/record.hpp"

#include "factual/error.hpp"
#include "factual/lexicon.hpp"
#include "factual/text.hpp"

namespace factual::harness {

namespace {

std::optional<std::string> optional_string(const nlohmann::ordered_json& object,
                                           const char* name) {
  auto it = object.find(name);
  if (it == object.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) {
    throw Error(ErrorKind::kFormatError, std::string("field '") + name + "' must be a string");
  }
  return it->get<std::string>();
}

}  // namespace

EvalRecord record_from_json(const nlohmann::ordered_json& object) {
  if (!object.is_object()) {
    throw Error(ErrorKind::kFormatError, "record is not a JSON object");
  }
  EvalRecord record;
  auto id = optional_string(object, "id");
  if (!id || trim(*id).empty()) throw Error(ErrorKind::kMissingField, "id");
  record.id = *id;
  record.caption = optional_string(object, "caption").value_or("");
  record.mr = optional_string(object, "mr");
  record.gold_sg = optional_string(object, "gold_sg");
  record.candidate_sg = optional_string(object, "candidate_sg");
  record.foil_sg = optional_string(object, "foil_sg");
  record.image_id = optional_string(object, "image_id");
  if (auto it = object.find("human_score"); it != object.end() && !it->is_null()) {
    if (!it->is_number()) {
      throw Error(ErrorKind::kFormatError, "field 'human_score' must be a number");
    }
    record.human_score = it->get<double>();
  }
  if (auto it = object.find("external_scores"); it != object.end() && !it->is_null()) {
    if (!it->is_object()) {
      throw Error(ErrorKind::kFormatError, "field 'external_scores' must be an object");
    }
    for (const auto& [name, value] : it->items()) {
      if (!value.is_number()) {
        throw Error(ErrorKind::kFormatError, "external score '" + name + "' must be a number");
      }
      record.external_scores[name] = value.get<double>();
    }
  }
  if (!record.mr && !record.gold_sg && !record.candidate_sg) {
    throw Error(ErrorKind::kMissingField, "mr|gold_sg|candidate_sg");
  }
  return record;
}

nlohmann::ordered_json record_to_json(const EvalRecord& record) {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  out["id"] = record.id;
  out["caption"] = record.caption;
  auto put = [&](const char* name, const std::optional<std::string>& v) {
    if (v) out[name] = *v;
  };
  put("mr", record.mr);
  put("gold_sg", record.gold_sg);
  put("candidate_sg", record.candidate_sg);
  put("foil_sg", record.foil_sg);
  put("image_id", record.image_id);
  if (record.human_score) out["human_score"] = *record.human_score;
  if (!record.external_scores.empty()) out["external_scores"] = record.external_scores;
  return out;
}

const std::string& require(const std::optional<std::string>& field,
                           const char* name) {
  if (!field) throw Error(ErrorKind::kMissingField, name);
  return *field;
}

std::vector<JsonlLine> read_jsonl(const std::filesystem::path& path) {
  const std::string content = read_file(path);
  std::vector<JsonlLine> lines;
  std::size_t line_no = 0;
  for (std::string_view line : split(content, '\n')) {
    ++line_no;
    if (trim(line).empty()) continue;
    if (line.back() == '\r') line.remove_suffix(1);
    lines.push_back({line_no, std::string(line)});
  }
  return lines;
}

}  // namespace factual::harness
