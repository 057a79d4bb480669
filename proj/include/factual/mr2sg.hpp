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

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "factual/mr.hpp"
#include "factual/sg.hpp"

namespace factual {

// Verb and noun inflection tables. Entries override the suffix rules.
struct MorphTable {
  std::map<std::string, std::string> participles;  // lemma -> participle
  std::map<std::string, std::string> plurals;      // plural -> singular

  static MorphTable builtin();
  // Files in `lemma<TAB>participle` and `plural<TAB>singular` format.
  static MorphTable load(const std::filesystem::path& participles_path,
                         const std::filesystem::path& plurals_path);

  // Table entry, else regular: +d after 'e', consonant+y -> ied, else +ed.
  std::string past_participle(std::string_view lemma) const;

  // Singularizes the head (last word) of a possibly multi-word noun.
  // Table entry first, then: -ies -> y; -sses/-xes/-ches/-shes/-zzes drop
  // "es"; other -s drops "s" unless the word ends in ss/us/is. When no rule
  // applies the surface form is kept.
  std::string singularize(std::string_view noun) const;
};

struct ConvertOptions {
  MorphTable morphology = MorphTable::builtin();
  // Modifier key -> display form, for "2 groups of".
  std::map<std::string, std::string> modifiers = Lexicons::builtin().modifiers;
  // Render exact counts 1..20 as words ("three") instead of digits.
  bool numeral_words = false;
};

// Verb (in the requested voice) and preposition joined by a space.
// Throws EmptySlot when both are absent.
std::string realize_predicate(const std::optional<VerbSlot>& verb,
                              const std::optional<std::string>& preposition,
                              const MorphTable& morphology);

// Attribute value emitted for a quantifier, or nullopt for "unaccountable".
std::optional<std::string> quantifier_attribute(const Quantifier& q,
                                                const ConvertOptions& options);

// Relations between two groups with the same exact, unmodified count n >= 2
// are distributive: n one-to-one facts over singularized endpoints. All
// other relations are collective and keep the group nodes, with their
// quantities attached as attribute facts.
SceneGraph convert(const MRGraph& graph, const ConvertOptions& options = {});

}  // namespace factual
