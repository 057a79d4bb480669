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

#include "factual/mr.hpp"

#include <charconv>
#include <map>
#include <set>

#include "factual/error.hpp"
#include "factual/text.hpp"

namespace factual {

namespace {

[[noreturn]] void syntax_error(const std::string& message) {
  throw Error(ErrorKind::kSyntaxError, message);
}

[[noreturn]] void ambiguous(const std::string& message) {
  throw Error(ErrorKind::kAmbiguousSlot, message);
}

std::uint32_t parse_count(std::string_view digits) {
  std::uint32_t value = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    syntax_error("quantity out of range: '" + std::string(digits) + "'");
  }
  return value;
}

Quantifier parse_quantifier(std::string_view field, const Lexicons& lexicons) {
  if (field == "many") return Quantifier::many();
  if (field == "unaccountable") return Quantifier::uncountable();
  std::size_t split_at = 0;
  while (split_at < field.size() && field[split_at] >= '0' &&
         field[split_at] <= '9') {
    ++split_at;
  }
  std::uint32_t n = parse_count(field.substr(0, split_at));
  if (n == 0) syntax_error("quantity must be positive: '" + std::string(field) + "'");
  std::string_view key = field.substr(split_at);
  if (key.empty()) return Quantifier::exact(n);
  if (!lexicons.modifiers.contains(std::string(key))) {
    throw Error(ErrorKind::kUnknownModifier,
                "quantifier modifier '" + std::string(key) + "' in '" +
                    std::string(field) + "'");
  }
  return Quantifier::exact(n, std::string(key));
}

ObjectRef parse_object(std::string_view field) {
  if (is_quantifier_token(field)) {
    ambiguous("object name '" + std::string(field) +
              "' is indistinguishable from a quantifier");
  }
  ObjectRef ref;
  std::size_t colon = field.rfind(':');
  if (colon == std::string_view::npos) {
    ref.name = std::string(field);
    return ref;
  }
  std::string_view suffix = field.substr(colon + 1);
  if (!is_digits(suffix)) {
    syntax_error("bad object suffix in '" + std::string(field) + "'");
  }
  ref.suffix = parse_count(suffix);
  ref.name = std::string(trim(field.substr(0, colon)));
  if (ref.name.empty()) syntax_error("empty object name in '" + std::string(field) + "'");
  if (ref.name.find(':') != std::string::npos) {
    syntax_error("object name contains ':' in '" + std::string(field) + "'");
  }
  if (is_quantifier_token(ref.name)) {
    ambiguous("object name '" + ref.name +
              "' is indistinguishable from a quantifier");
  }
  return ref;
}

VerbSlot parse_verb(std::string_view field) {
  VerbSlot verb;
  if (field.starts_with(kPassivePrefix)) {
    verb.passive = true;
    field.remove_prefix(kPassivePrefix.size());
    field = trim(field);
  }
  if (field.empty()) syntax_error("empty verb after passive marker");
  if (contains_whitespace(field) || field.find(':') != std::string_view::npos) {
    ambiguous("'" + std::string(field) +
              "' is neither a known preposition nor a single verb lemma");
  }
  verb.lemma = std::string(field);
  return verb;
}

std::string parse_preposition(std::string_view field) {
  if (field.find(':') != std::string_view::npos) {
    ambiguous("preposition slot holds '" + std::string(field) + "'");
  }
  return std::string(field);
}

MRFact parse_attribute_fact(const std::vector<std::string_view>& fields,
                            std::size_t marker, const Lexicons& lexicons) {
  AttributeFact fact;
  if (fields.size() == 3 && marker == 1) {
    fact.object = parse_object(fields[0]);
  } else if (fields.size() == 4 && marker == 2) {
    if (!is_quantifier_token(fields[0])) {
      syntax_error("attribute fact has 4 fields but no leading quantifier");
    }
    fact.quantifier = parse_quantifier(fields[0], lexicons);
    fact.object = parse_object(fields[1]);
  } else {
    syntax_error("attribute fact must be ([quantifier,] object, has_attribute, attribute)");
  }
  if (fields.back() == kHasAttribute) syntax_error("missing attribute value");
  fact.attribute = std::string(fields.back());
  return fact;
}

MRFact parse_relation_fact(const std::vector<std::string_view>& fields,
                           const Lexicons& lexicons) {
  const std::size_t n = fields.size();
  if (n < 3) syntax_error("relation fact needs at least 3 fields");
  RelationFact fact;
  std::size_t subject_at = 0;
  if (is_quantifier_token(fields[0])) {
    fact.quantifier_sub = parse_quantifier(fields[0], lexicons);
    subject_at = 1;
  }
  std::size_t middle_end = n - 1;
  if (n - 2 > subject_at && is_quantifier_token(fields[n - 2])) {
    fact.quantifier_obj = parse_quantifier(fields[n - 2], lexicons);
    middle_end = n - 2;
  }
  fact.subject = parse_object(fields[subject_at]);
  fact.object = parse_object(fields[n - 1]);

  const std::size_t middle = middle_end - subject_at - 1;
  if (middle == 2) {
    fact.verb = parse_verb(fields[subject_at + 1]);
    fact.preposition = parse_preposition(fields[subject_at + 2]);
  } else if (middle == 1) {
    std::string_view slot = fields[subject_at + 1];
    if (!slot.starts_with(kPassivePrefix) &&
        lexicons.prepositions.contains(std::string(slot))) {
      fact.preposition = std::string(slot);
    } else {
      fact.verb = parse_verb(slot);
    }
  } else {
    syntax_error("relation fact needs one or two verb/preposition fields, got " +
                 std::to_string(middle));
  }
  return fact;
}

MRFact parse_fact(std::string_view body, const Lexicons& lexicons) {
  const std::vector<std::string_view> fields = split_fields(body);
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (fields[i] == kHasAttribute) {
      return parse_attribute_fact(fields, i, lexicons);
    }
  }
  return parse_relation_fact(fields, lexicons);
}

void append_quantifier(std::string& out, const std::optional<Quantifier>& q) {
  if (!q) return;
  out += q->label();
  out += ", ";
}

bool looks_inflected(std::string_view lemma) {
  auto ends = [&](std::string_view s) { return lemma.ends_with(s); };
  if (lemma.size() >= 5 && ends("ing")) return true;
  if (lemma.size() >= 4 && ends("ed") && !ends("eed")) return true;
  if (lemma.size() >= 4 && ends("s") && !ends("ss") && !ends("us") &&
      !ends("is")) {
    return true;
  }
  return false;
}

}  // namespace

std::string ObjectRef::render() const {
  if (suffix == 0) return name;
  return name + ":" + std::to_string(suffix);
}

Quantifier Quantifier::exact(std::uint32_t n,
                             std::optional<std::string> modifier) {
  return Quantifier{Count::kExact, n, std::move(modifier)};
}

Quantifier Quantifier::many() { return Quantifier{Count::kMany, 0, {}}; }

Quantifier Quantifier::uncountable() {
  return Quantifier{Count::kUncountable, 0, {}};
}

std::string Quantifier::label() const {
  switch (count) {
    case Count::kMany: return "many";
    case Count::kUncountable: return "unaccountable";
    case Count::kExact: break;
  }
  return std::to_string(n) + modifier.value_or("");
}

bool is_quantifier_token(std::string_view field) {
  if (field == "many" || field == "unaccountable") return true;
  std::size_t i = 0;
  while (i < field.size() && field[i] >= '0' && field[i] <= '9') ++i;
  if (i == 0) return false;
  for (; i < field.size(); ++i) {
    if (field[i] < 'a' || field[i] > 'z') return false;
  }
  return true;
}

MRGraph parse_mr(std::string_view text, const Lexicons& lexicons) {
  const std::string input = normalize(text);
  MRGraph graph;
  std::set<std::string> seen;
  for (std::string_view body : split_fact_bodies(input)) {
    MRFact fact = parse_fact(body, lexicons);
    std::string canonical = serialize_fact(fact);
    if (!seen.insert(canonical).second) {
      syntax_error("duplicate fact " + canonical);
    }
    graph.facts.push_back(std::move(fact));
  }
  return graph;
}

std::string serialize_fact(const MRFact& fact) {
  std::string out = "(";
  if (const auto* attr = std::get_if<AttributeFact>(&fact)) {
    append_quantifier(out, attr->quantifier);
    out += attr->object.render();
    out += ", ";
    out += kHasAttribute;
    out += ", ";
    out += attr->attribute;
  } else {
    const auto& rel = std::get<RelationFact>(fact);
    append_quantifier(out, rel.quantifier_sub);
    out += rel.subject.render();
    if (rel.verb) {
      out += ", ";
      if (rel.verb->passive) out += kPassivePrefix;
      out += rel.verb->lemma;
    }
    if (rel.preposition) {
      out += ", ";
      out += *rel.preposition;
    }
    out += ", ";
    append_quantifier(out, rel.quantifier_obj);
    out += rel.object.render();
  }
  out += ")";
  return out;
}

std::string serialize_mr(const MRGraph& graph) {
  std::string out;
  for (const MRFact& fact : graph.facts) {
    if (!out.empty()) out += ", ";
    out += serialize_fact(fact);
  }
  return out;
}

std::string_view to_string(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::kUnknownPreposition: return "UnknownPreposition";
    case DiagnosticKind::kUnknownVerb: return "UnknownVerb";
    case DiagnosticKind::kNonLemmaVerbSuspect: return "NonLemmaVerbSuspect";
    case DiagnosticKind::kDuplicateSuffix: return "DuplicateSuffix";
    case DiagnosticKind::kVerbShadowsPreposition: return "VerbShadowsPreposition";
  }
  return "Unknown";
}

std::vector<Diagnostic> validate_mr(const MRGraph& graph,
                                    const Lexicons& lexicons) {
  std::vector<Diagnostic> out;
  // One collective per identifier: the same `name:k` annotated with two
  // different quantities means the suffix was reused for distinct groups.
  std::map<ObjectRef, Quantifier> quantities;
  std::set<ObjectRef> reported;
  auto note_quantity = [&](const ObjectRef& ref,
                           const std::optional<Quantifier>& q,
                           std::size_t index) {
    if (!q) return;
    auto [it, inserted] = quantities.emplace(ref, *q);
    if (!inserted && !(it->second == *q) && reported.insert(ref).second) {
      out.push_back({DiagnosticKind::kDuplicateSuffix, ref.render(), index});
    }
  };

  for (std::size_t i = 0; i < graph.facts.size(); ++i) {
    if (const auto* attr = std::get_if<AttributeFact>(&graph.facts[i])) {
      note_quantity(attr->object, attr->quantifier, i);
      continue;
    }
    const auto& rel = std::get<RelationFact>(graph.facts[i]);
    note_quantity(rel.subject, rel.quantifier_sub, i);
    note_quantity(rel.object, rel.quantifier_obj, i);
    if (rel.preposition && !lexicons.prepositions.contains(*rel.preposition)) {
      out.push_back({DiagnosticKind::kUnknownPreposition, *rel.preposition, i});
    }
    if (!rel.verb) continue;
    const std::string& lemma = rel.verb->lemma;
    const bool in_verb_lexicon = lexicons.verbs && lexicons.verbs->contains(lemma);
    if (lexicons.verbs && !in_verb_lexicon) {
      out.push_back({DiagnosticKind::kUnknownVerb, lemma, i});
    }
    if (!in_verb_lexicon && looks_inflected(lemma)) {
      out.push_back({DiagnosticKind::kNonLemmaVerbSuspect, lemma, i});
    }
    if (!rel.preposition && !rel.verb->passive &&
        lexicons.prepositions.contains(lemma)) {
      out.push_back({DiagnosticKind::kVerbShadowsPreposition, lemma, i});
    }
  }
  return out;
}

}  // namespace factual
