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

#include "factual/mr2sg.hpp"

#include <array>

#include "factual/error.hpp"
#include "factual/text.hpp"

namespace factual {

namespace builtin {
extern const std::string_view participles;
extern const std::string_view plurals;
}  // namespace builtin

namespace {

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

std::string singularize_word(std::string_view word,
                             const std::map<std::string, std::string>& plurals) {
  if (auto it = plurals.find(std::string(word)); it != plurals.end()) {
    return it->second;
  }
  auto ends = [&](std::string_view s) {
    return word.size() > s.size() && word.ends_with(s);
  };
  if (ends("ies")) return std::string(word.substr(0, word.size() - 3)) + "y";
  if (ends("sses") || ends("xes") || ends("ches") || ends("shes") ||
      ends("zzes")) {
    return std::string(word.substr(0, word.size() - 2));
  }
  if (ends("ss") || ends("us") || ends("is")) return std::string(word);
  if (ends("s")) return std::string(word.substr(0, word.size() - 1));
  return std::string(word);
}

std::string with_suffix(const std::string& name, std::uint32_t index) {
  return ObjectRef{name, index}.render();
}

bool distributive(const RelationFact& rel) {
  return rel.quantifier_sub && rel.quantifier_obj &&
         rel.quantifier_sub->is_exact() && rel.quantifier_obj->is_exact() &&
         !rel.quantifier_sub->modifier && !rel.quantifier_obj->modifier &&
         rel.quantifier_sub->n == rel.quantifier_obj->n &&
         rel.quantifier_sub->n >= 2;
}

void add_quantity(SceneGraph& out, const ObjectRef& ref,
                  const std::optional<Quantifier>& q,
                  const ConvertOptions& options) {
  if (!q) return;
  if (auto value = quantifier_attribute(*q, options)) {
    out.add({ref.render(), std::string(kHasAttribute), *value});
  }
}

}  // namespace

MorphTable MorphTable::builtin() {
  static const MorphTable table = [] {
    MorphTable t;
    t.participles = parse_tsv(builtin::participles);
    t.plurals = parse_tsv(builtin::plurals);
    return t;
  }();
  return table;
}

MorphTable MorphTable::load(const std::filesystem::path& participles_path,
                            const std::filesystem::path& plurals_path) {
  MorphTable t;
  t.participles = load_tsv(participles_path);
  t.plurals = load_tsv(plurals_path);
  return t;
}

std::string MorphTable::past_participle(std::string_view lemma) const {
  if (auto it = participles.find(std::string(lemma)); it != participles.end()) {
    return it->second;
  }
  std::string out(lemma);
  if (out.ends_with('e')) return out + "d";
  if (out.size() >= 2 && out.back() == 'y' && !is_vowel(out[out.size() - 2])) {
    out.pop_back();
    return out + "ied";
  }
  return out + "ed";
}

std::string MorphTable::singularize(std::string_view noun) const {
  if (auto it = plurals.find(std::string(noun)); it != plurals.end()) {
    return it->second;
  }
  std::size_t space = noun.rfind(' ');
  if (space == std::string_view::npos) return singularize_word(noun, plurals);
  return std::string(noun.substr(0, space + 1)) +
         singularize_word(noun.substr(space + 1), plurals);
}

std::string realize_predicate(const std::optional<VerbSlot>& verb,
                              const std::optional<std::string>& preposition,
                              const MorphTable& morphology) {
  if (!verb && !preposition) {
    throw Error(ErrorKind::kEmptySlot, "neither verb nor preposition present");
  }
  std::string out;
  if (verb) {
    out = verb->passive ? morphology.past_participle(verb->lemma) : verb->lemma;
  }
  if (preposition) {
    if (!out.empty()) out += ' ';
    out += *preposition;
  }
  return out;
}

std::optional<std::string> quantifier_attribute(const Quantifier& q,
                                                const ConvertOptions& options) {
  static constexpr std::array<std::string_view, 21> kWords = {
      "zero",    "one",     "two",       "three",    "four",
      "five",    "six",     "seven",     "eight",    "nine",
      "ten",     "eleven",  "twelve",    "thirteen", "fourteen",
      "fifteen", "sixteen", "seventeen", "eighteen", "nineteen",
      "twenty"};
  switch (q.count) {
    case Quantifier::Count::kUncountable: return std::nullopt;
    case Quantifier::Count::kMany: return "many";
    case Quantifier::Count::kExact: break;
  }
  std::string out = options.numeral_words && q.n < kWords.size()
                        ? std::string(kWords[q.n])
                        : std::to_string(q.n);
  if (q.modifier) {
    auto it = options.modifiers.find(*q.modifier);
    out += ' ';
    out += it != options.modifiers.end() ? it->second : *q.modifier;
  }
  return out;
}

SceneGraph convert(const MRGraph& graph, const ConvertOptions& options) {
  SceneGraph out;
  for (const MRFact& fact : graph.facts) {
    if (const auto* attr = std::get_if<AttributeFact>(&fact)) {
      out.add({attr->object.render(), std::string(kHasAttribute),
               attr->attribute});
      add_quantity(out, attr->object, attr->quantifier, options);
      continue;
    }
    const auto& rel = std::get<RelationFact>(fact);
    const std::string predicate =
        realize_predicate(rel.verb, rel.preposition, options.morphology);
    if (!distributive(rel)) {
      out.add({rel.subject.render(), predicate, rel.object.render()});
      add_quantity(out, rel.subject, rel.quantifier_sub, options);
      add_quantity(out, rel.object, rel.quantifier_obj, options);
      continue;
    }
    // Individual i of group `name:k` becomes `single:(k*n + i)`, so suffixed
    // groups of the same noun never share individuals.
    const std::uint32_t n = rel.quantifier_sub->n;
    const std::string subject = options.morphology.singularize(rel.subject.name);
    const std::string object = options.morphology.singularize(rel.object.name);
    const std::uint32_t subject_base = rel.subject.suffix * n;
    const std::uint32_t object_base = rel.object.suffix * n;
    for (std::uint32_t i = 0; i < n; ++i) {
      out.add({with_suffix(subject, subject_base + i), predicate,
               with_suffix(object, object_base + i)});
    }
  }
  return out;
}

}  // namespace factual
