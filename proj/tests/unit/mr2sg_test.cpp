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

#include <random>

#include <gtest/gtest.h>

#include "factual/error.hpp"
#include "support/generators.hpp"

namespace factual {
namespace {

const Lexicons& lex() {
  static const Lexicons l = Lexicons::builtin();
  return l;
}

std::string run(std::string_view mr, const ConvertOptions& options = {}) {
  return serialize_sg(convert(parse_mr(mr, lex()), options));
}

TEST(RealizePredicate, Forms) {
  const MorphTable& m = MorphTable::builtin();
  EXPECT_EQ(realize_predicate(VerbSlot{"hold", false}, std::nullopt, m), "hold");
  EXPECT_EQ(realize_predicate(VerbSlot{"fill", true}, "with", m), "filled with");
  EXPECT_EQ(realize_predicate(std::nullopt, "on", m), "on");
  EXPECT_EQ(realize_predicate(VerbSlot{"rest", false}, "on", m), "rest on");
  EXPECT_THROW(realize_predicate(std::nullopt, std::nullopt, m), Error);
}

TEST(MorphTable, Participles) {
  const MorphTable& m = MorphTable::builtin();
  EXPECT_EQ(m.past_participle("hold"), "held");
  EXPECT_EQ(m.past_participle("cover"), "covered");
  EXPECT_EQ(m.past_participle("place"), "placed");
  EXPECT_EQ(m.past_participle("carry"), "carried");
  EXPECT_EQ(m.past_participle("play"), "played");
  EXPECT_EQ(m.past_participle("drop"), "dropped");
}

TEST(MorphTable, Singularize) {
  const MorphTable& m = MorphTable::builtin();
  EXPECT_EQ(m.singularize("men"), "man");
  EXPECT_EQ(m.singularize("children"), "child");
  EXPECT_EQ(m.singularize("books"), "book");
  EXPECT_EQ(m.singularize("tennis balls"), "tennis ball");
  EXPECT_EQ(m.singularize("puppies"), "puppy");
  EXPECT_EQ(m.singularize("boxes"), "box");
  EXPECT_EQ(m.singularize("benches"), "bench");
  EXPECT_EQ(m.singularize("dresses"), "dress");
  EXPECT_EQ(m.singularize("horses"), "horse");
  EXPECT_EQ(m.singularize("grass"), "grass");
  EXPECT_EQ(m.singularize("sheep"), "sheep");
  EXPECT_EQ(m.singularize("police men"), "police man");
}

TEST(Convert, Examples) {
  EXPECT_EQ(run("(tennis player, hold, tennis racket)"),
            "(tennis player, hold, tennis racket)");
  EXPECT_EQ(run("(3, men, read, books)"), "(men, has_attribute, 3), (men, read, books)");
  EXPECT_EQ(run("(3, men, read, 3, books)"),
            "(man, read, book), (man:1, read, book:1), (man:2, read, book:2)");
  EXPECT_EQ(run("(cup, p:fill, with, water)"), "(cup, filled with, water)");
}

TEST(Convert, MismatchedCountsStayCollective) {
  EXPECT_EQ(run("(3, men, read, 2, books)"),
            "(books, has_attribute, 2), (men, has_attribute, 3), (men, read, books)");
}

TEST(Convert, QuantifierAttributeRendering) {
  EXPECT_EQ(run("(2g, men, stand, on, street)"),
            "(men, has_attribute, 2 groups of), (men, stand on, street)");
  EXPECT_EQ(run("(many, dogs, on, grass)"), "(dogs, has_attribute, many), (dogs, on, grass)");
  EXPECT_EQ(run("(unaccountable, water, in, cup)"), "(water, in, cup)");
  EXPECT_EQ(run("(3, trees, has_attribute, tall)"),
            "(trees, has_attribute, 3), (trees, has_attribute, tall)");
  ConvertOptions words;
  words.numeral_words = true;
  EXPECT_EQ(run("(3, trees, has_attribute, tall)", words),
            "(trees, has_attribute, tall), (trees, has_attribute, three)");
}

TEST(Convert, SuffixedGroupsDoNotShareIndividuals) {
  EXPECT_EQ(run("(2, men, hold, 2, cups), (2, men:1, hold, 2, cups:1)"),
            "(man, hold, cup), (man:1, hold, cup:1), (man:2, hold, cup:2), (man:3, hold, cup:3)");
}

TEST(ConvertProperties, ConservationDeterminismAndSuffixes) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 1000; ++i) {
    const MRGraph g = testing::random_mr_graph(rng, lex());
    const SceneGraph sg = convert(g);
    EXPECT_EQ(serialize_sg(convert(g)), serialize_sg(sg));

    std::set<std::string> rendered_nodes;
    for (const SGFact& f : sg.facts) {
      rendered_nodes.insert(f.subject);
      rendered_nodes.insert(f.object);
    }
    for (const MRFact& fact : g.facts) {
      if (const auto* attr = std::get_if<AttributeFact>(&fact)) {
        EXPECT_TRUE(sg.facts.contains(
            {attr->object.render(), "has_attribute", attr->attribute}));
        continue;
      }
      const auto& rel = std::get<RelationFact>(fact);
      const std::string pred =
          realize_predicate(rel.verb, rel.preposition, MorphTable::builtin());
      const bool dist = rel.quantifier_sub && rel.quantifier_obj &&
                        rel.quantifier_sub->is_exact() && rel.quantifier_obj->is_exact() &&
                        !rel.quantifier_sub->modifier && !rel.quantifier_obj->modifier &&
                        rel.quantifier_sub->n == rel.quantifier_obj->n &&
                        rel.quantifier_sub->n >= 2;
      if (!dist) {
        // Collective: the relation keeps both endpoints, suffixes intact.
        EXPECT_TRUE(sg.facts.contains({rel.subject.render(), pred, rel.object.render()}));
        continue;
      }
      const std::uint32_t n = rel.quantifier_sub->n;
      std::set<std::string> endpoints;
      std::size_t emitted = 0;
      const std::string subj = MorphTable::builtin().singularize(rel.subject.name);
      const std::string obj = MorphTable::builtin().singularize(rel.object.name);
      for (std::uint32_t k = 0; k < n; ++k) {
        const SGFact expect{ObjectRef{subj, rel.subject.suffix * n + k}.render(), pred,
                            ObjectRef{obj, rel.object.suffix * n + k}.render()};
        emitted += sg.facts.contains(expect);
        endpoints.insert("s:" + expect.subject);
        endpoints.insert("o:" + expect.object);
      }
      EXPECT_EQ(emitted, n);
      EXPECT_EQ(endpoints.size(), 2 * n);
    }
  }
}

TEST(ConvertProperties, DistributiveEmitsExactlyN) {
  for (std::uint32_t n = 2; n <= 12; ++n) {
    const std::string mr = "(" + std::to_string(n) + ", men, read, " + std::to_string(n) + ", books)";
    const SceneGraph sg = convert(parse_mr(mr, lex()));
    EXPECT_EQ(sg.size(), n);
    std::set<std::string> subjects, objects;
    for (const SGFact& f : sg.facts) {
      subjects.insert(f.subject);
      objects.insert(f.object);
      EXPECT_FALSE(f.is_attribute());
    }
    EXPECT_EQ(subjects.size(), n);
    EXPECT_EQ(objects.size(), n);
  }
}

}  // namespace
}  // namespace factual
