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
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "factual/lexicon.hpp"

namespace factual {

// A collective object. Suffix 0 means "no suffix"; `men:1` names a second
// group of men distinct from `men`.
struct ObjectRef {
  std::string name;
  std::uint32_t suffix = 0;

  std::string render() const;
  auto operator<=>(const ObjectRef&) const = default;
};

struct Quantifier {
  enum class Count { kExact, kMany, kUncountable };

  Count count = Count::kExact;
  std::uint32_t n = 1;                  // only meaningful for kExact
  std::optional<std::string> modifier;  // lexicon key, only with kExact

  static Quantifier exact(std::uint32_t n,
                          std::optional<std::string> modifier = std::nullopt);
  static Quantifier many();
  static Quantifier uncountable();

  bool is_exact() const { return count == Count::kExact; }
  // Surface label: "3", "2g", "many", "unaccountable".
  std::string label() const;

  bool operator==(const Quantifier&) const = default;
};

struct VerbSlot {
  std::string lemma;
  bool passive = false;

  bool operator==(const VerbSlot&) const = default;
};

struct AttributeFact {
  std::optional<Quantifier> quantifier;
  ObjectRef object;
  std::string attribute;

  bool operator==(const AttributeFact&) const = default;
};

struct RelationFact {
  std::optional<Quantifier> quantifier_sub;
  ObjectRef subject;
  std::optional<VerbSlot> verb;
  std::optional<std::string> preposition;
  std::optional<Quantifier> quantifier_obj;
  ObjectRef object;

  bool operator==(const RelationFact&) const = default;
};

using MRFact = std::variant<AttributeFact, RelationFact>;

struct MRGraph {
  std::vector<MRFact> facts;
  std::optional<std::string> source_caption;

  bool operator==(const MRGraph&) const = default;
};

inline constexpr std::string_view kHasAttribute = "has_attribute";
inline constexpr std::string_view kPassivePrefix = "p:";

// True for fields that occupy a quantifier slot: ^[0-9]+[a-z]*$, "many" or
// "unaccountable".
bool is_quantifier_token(std::string_view field);

// Parses FACTUAL-MR surface text (see docs/mr_grammar.md). Input is
// normalized to lowercase with single spaces first.
//
// Throws Error with kind SyntaxError, UnknownModifier or AmbiguousSlot.
MRGraph parse_mr(std::string_view text, const Lexicons& lexicons);

std::string serialize_fact(const MRFact& fact);
// Canonical form: facts joined by ", ", fields joined by ", ".
std::string serialize_mr(const MRGraph& graph);

enum class DiagnosticKind {
  kUnknownPreposition,
  kUnknownVerb,
  kNonLemmaVerbSuspect,
  kDuplicateSuffix,
  // A verb-only fact whose lemma is also a preposition; it would re-parse
  // as a preposition.
  kVerbShadowsPreposition,
};

std::string_view to_string(DiagnosticKind kind);

struct Diagnostic {
  DiagnosticKind kind;
  std::string subject;  // the offending token
  std::size_t fact_index = 0;

  bool operator==(const Diagnostic&) const = default;
};

// Lexicon and consistency checks. An empty result means the graph is valid.
std::vector<Diagnostic> validate_mr(const MRGraph& graph,
                                    const Lexicons& lexicons);

}  // namespace factual
