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

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace factual {

// One linearized scene-graph edge. `predicate == "has_attribute"` marks an
// attribute edge; anything else is a relation phrase.
struct SGFact {
  std::string subject;
  std::string predicate;
  std::string object;

  bool is_attribute() const;
  auto operator<=>(const SGFact&) const = default;
};

// Order-free set of facts. Iteration order is (subject, predicate, object).
struct SceneGraph {
  std::set<SGFact> facts;

  bool empty() const { return facts.empty(); }
  std::size_t size() const { return facts.size(); }
  void add(SGFact fact) { facts.insert(std::move(fact)); }

  bool operator==(const SceneGraph&) const = default;
};

// Comparison units of a graph, rendered as space-joined lowercase text.
struct SpiceComponents {
  std::set<std::string> objects;
  std::set<std::string> attribute_pairs;   // "horse brown"
  std::set<std::string> relation_triples;  // "man ride horse"

  std::size_t size() const {
    return objects.size() + attribute_pairs.size() + relation_triples.size();
  }
  // Every component in category order: objects, pairs, triples.
  std::vector<std::string> all() const;
};

// Parses "(s, p, o), (s, p, o)". Fields are normalized to lowercase with
// single spaces. Throws SyntaxError on arity != 3, empty fields or
// unbalanced parentheses.
SceneGraph parse_sg(std::string_view text);

// Facts in lexicographic order, joined by ", ".
std::string serialize_sg(const SceneGraph& graph);
std::string serialize_fact(const SGFact& fact);

SpiceComponents decompose(const SceneGraph& graph);

}  // namespace factual
