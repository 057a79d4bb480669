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

#include "factual/harness/report.hpp"

#include <algorithm>

#include "factual/text.hpp"
#include "json.hpp"

namespace factual::harness {

namespace {

std::string json_value(const Value& value) {
  struct Visitor {
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t i) const { return std::to_string(i); }
    std::string operator()(double d) const { return format_fixed6(d); }
    std::string operator()(const std::string& s) const {
      return nlohmann::json(s).dump();
    }
    std::string operator()(const Undefined&) const { return "\"undefined\""; }
  };
  return std::visit(Visitor{}, value);
}

void append_object(std::string& out, const Row& row) {
  for (const auto& [key, value] : row) {
    out += ',';
    out += nlohmann::json(key).dump();
    out += ':';
    out += json_value(value);
    if (const auto* u = std::get_if<Undefined>(&value)) {
      out += ',';
      out += nlohmann::json(key + "_error").dump();
      out += ':';
      out += nlohmann::json(u->reason).dump();
    }
  }
}

}  // namespace

std::string render(const Value& value) {
  if (const auto* s = std::get_if<std::string>(&value)) return *s;
  if (std::holds_alternative<Undefined>(value)) return "undefined";
  return json_value(value);
}

void Report::set(std::string key, Value value) {
  for (auto& [k, v] : summary_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  summary_.emplace_back(std::move(key), std::move(value));
}

const Value* Report::find(std::string_view key) const {
  for (const auto& [k, v] : summary_) {
    if (k == key) return &v;
  }
  return nullptr;
}

std::string Report::jsonl() const {
  std::string out;
  const std::string command = nlohmann::json(command_).dump();
  for (const Row& row : rows_) {
    out += "{\"type\":\"record\",\"command\":" + command;
    append_object(out, row);
    out += "}\n";
  }
  out += "{\"type\":\"summary\",\"command\":" + command;
  append_object(out, summary_);
  out += "}\n";
  return out;
}

std::string Report::table() const {
  std::size_t width = 0;
  for (const auto& [key, value] : summary_) width = std::max(width, key.size());
  std::string out = command_ + "\n";
  for (const auto& [key, value] : summary_) {
    out += "  ";
    out += key;
    out.append(width - key.size() + 2, ' ');
    out += render(value);
    if (const auto* u = std::get_if<Undefined>(&value)) out += " (" + u->reason + ")";
    out += '\n';
  }
  return out;
}

}  // namespace factual::harness
