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

#include "factual/sg.hpp"

#include "factual/error.hpp"
#include "factual/mr.hpp"
#include "factual/text.hpp"

namespace factual {

bool SGFact::is_attribute() const { return predicate == kHasAttribute; }

std::vector<std::string> SpiceComponents::all() const {
  std::vector<std::string> out;
  out.reserve(size());
  out.insert(out.end(), objects.begin(), objects.end());
  out.insert(out.end(), attribute_pairs.begin(), attribute_pairs.end());
  out.insert(out.end(), relation_triples.begin(), relation_triples.end());
  return out;
}

SceneGraph parse_sg(std::string_view text) {
  const std::string input = normalize(text);
  SceneGraph graph;
  for (std::string_view body : split_fact_bodies(input)) {
    std::vector<std::string_view> fields = split_fields(body);
    if (fields.size() != 3) {
      throw Error(ErrorKind::kSyntaxError,
                  "scene graph fact needs 3 fields, got " +
                      std::to_string(fields.size()) + " in '(" +
                      std::string(body) + ")'");
    }
    graph.add({std::string(fields[0]), std::string(fields[1]),
               std::string(fields[2])});
  }
  return graph;
}

std::string serialize_fact(const SGFact& fact) {
  return "(" + fact.subject + ", " + fact.predicate + ", " + fact.object + ")";
}

std::string serialize_sg(const SceneGraph& graph) {
  std::string out;
  for (const SGFact& fact : graph.facts) {
    if (!out.empty()) out += ", ";
    out += serialize_fact(fact);
  }
  return out;
}

SpiceComponents decompose(const SceneGraph& graph) {
  SpiceComponents c;
  for (const SGFact& fact : graph.facts) {
    std::string subject = normalize(fact.subject);
    std::string object = normalize(fact.object);
    c.objects.insert(subject);
    if (fact.is_attribute()) {
      c.attribute_pairs.insert(subject + " " + object);
    } else {
      c.objects.insert(object);
      c.relation_triples.insert(subject + " " + normalize(fact.predicate) +
                                " " + object);
    }
  }
  return c;
}

}  // namespace factual
