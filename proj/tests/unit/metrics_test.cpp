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

#include "factual/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace factual {
namespace {

const std::string kFixtures = FACTUAL_FIXTURES;

ErrorKind error_kind(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::kInvalidArgument;
}

const EmbeddingStore& fixture_store() {
  static const EmbeddingStore store = [] {
    EmbeddingStore s = load_store(kFixtures + "/store4.tsv");
    load_images(s, kFixtures + "/images4.tsv");
    return s;
  }();
  return store;
}

EmbeddingStore fallback_store() {
  EmbeddingStore s;
  s.set_fallback(true);
  return s;
}

// --- SPICE ---------------------------------------------------------------

TEST(SpiceF1, Identical) {
  SceneGraph g = parse_sg("(man, ride, horse), (horse, has_attribute, brown)");
  PRF p = spice_f1(g, g);
  EXPECT_EQ(p.precision, 1.0);
  EXPECT_EQ(p.recall, 1.0);
  EXPECT_EQ(p.f1, 1.0);
}

TEST(SpiceF1, PartialMatch) {
  PRF p = spice_f1(parse_sg("(man, ride, horse)"),
                   parse_sg("(man, ride, horse), (horse, has_attribute, brown)"));
  EXPECT_EQ(p.precision, 1.0);
  EXPECT_EQ(p.recall, 0.75);
  EXPECT_NEAR(p.f1, 6.0 / 7.0, 1e-15);
}

TEST(SpiceF1, DisjointAndEmpty) {
  PRF p = spice_f1(parse_sg("(a, r, b)"), parse_sg("(c, s, d)"));
  EXPECT_EQ(p.f1, 0.0);
  EXPECT_EQ(spice_f1(SceneGraph{}, SceneGraph{}).f1, 1.0);
  EXPECT_EQ(spice_f1(SceneGraph{}, parse_sg("(a, r, b)")).f1, 0.0);
  EXPECT_EQ(spice_f1(parse_sg("(a, r, b)"), SceneGraph{}).f1, 0.0);
}

TEST(SpiceF1, OracleEquivalenceAndSymmetry) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 2000; ++i) {
    const SceneGraph c = testing::random_token_graph(rng);
    const SceneGraph r = testing::random_token_graph(rng);
    const PRF got = spice_f1(c, r);
    const testing::OraclePRF want = testing::spice_oracle(c, r);
    EXPECT_NEAR(got.precision, want.precision, 1e-12);
    EXPECT_NEAR(got.recall, want.recall, 1e-12);
    EXPECT_NEAR(got.f1, want.f1, 1e-12);
    const PRF back = spice_f1(r, c);
    EXPECT_NEAR(back.f1, got.f1, 1e-12);
    EXPECT_NEAR(back.precision, got.recall, 1e-12);
  }
}

TEST(F1Score, ZeroWhenBothZero) {
  EXPECT_EQ(f1_score(0, 0), 0.0);
  EXPECT_NEAR(f1_score(1, 0.5), 2.0 / 3.0, 1e-15);
}

TEST(SetMatch, Cases) {
  EXPECT_TRUE(set_match(parse_sg("(a, r, b), (c, r, d)"), parse_sg("(c, r, d), (a, r, b)")));
  EXPECT_TRUE(set_match(parse_sg("(Man, ride, horse)"), parse_sg("(man, ride, horse)")));
  SceneGraph raw;
  raw.add({"Man ", "ride", "horse"});
  EXPECT_TRUE(set_match(raw, parse_sg("(man, ride, horse)")));
  EXPECT_FALSE(set_match(parse_sg("(a, r, b)"), parse_sg("(a, r, b), (c, r, d)")));
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    SceneGraph g = testing::random_scene_graph(rng);
    EXPECT_TRUE(set_match(g, g));
  }
}

// --- SoftSPICE -----------------------------------------------------------

TEST(SoftSpice, FixtureExample) {
  const double got = soft_spice(parse_sg("(man, ride, pony)"),
                                parse_sg("(man, ride, horse)"), fixture_store());
  // Candidate components match e1, e2 and e3 with cosines 1, 0.6 and 0.9.
  EXPECT_NEAR(got, (1.0 + 0.6 + 0.9 / std::hypot(0.9, 0.43589)) / 3.0, 1e-12);
  EXPECT_NEAR(got, 0.833333, 1e-6);
}

TEST(SoftSpice, IdentityAndOrthogonality) {
  EXPECT_NEAR(soft_spice(parse_sg("(man, ride, horse)"), parse_sg("(man, ride, horse)"),
                         fixture_store()),
              1.0, 1e-12);
  EXPECT_EQ(soft_spice(parse_sg("(cat, has_attribute, black)"), parse_sg("(man, ride, horse)"),
                       fixture_store()),
            0.0);
  EXPECT_EQ(soft_spice(SceneGraph{}, parse_sg("(man, ride, horse)"), fixture_store()), 0.0);
  EXPECT_EQ(error_kind([] { soft_spice(parse_sg("(man, ride, dog)"),
                                       parse_sg("(man, ride, horse)"), fixture_store()); }),
            ErrorKind::kMissingKey);
}

TEST(SoftSpice, SelfScoreIsOneWithFallback) {
  const EmbeddingStore store = fallback_store();
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    SceneGraph g = testing::random_scene_graph(rng);
    if (g.empty()) g.add({"man", "ride", "horse"});
    EXPECT_NEAR(soft_spice(g, g, store), 1.0, 1e-9);
  }
}

TEST(SoftSpice, MatrixFormMatchesLoop) {
  const EmbeddingStore store = fallback_store();
  std::mt19937_64 rng(29);
  for (int i = 0; i < 200; ++i) {
    const SceneGraph c = testing::random_scene_graph(rng);
    SceneGraph r = testing::random_scene_graph(rng);
    if (r.empty()) r.add({"dog", "near", "tree"});
    const auto cc = decompose(c).all();
    const auto rc = decompose(r).all();
    double sum = 0;
    for (const auto& a : cc) {
      double best = -1;
      for (const auto& b : rc) best = std::max(best, cosine(lookup(store, a), lookup(store, b)));
      sum += std::max(0.0, best);
    }
    const double want = cc.empty() ? 0.0 : sum / cc.size();
    EXPECT_NEAR(soft_spice(c, r, store), want, 1e-12);
  }
}

TEST(SoftSpice, AddingMatchingReferenceComponentNeverLowersScore) {
  const EmbeddingStore store = fallback_store();
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const SceneGraph c = testing::random_scene_graph(rng);
    SceneGraph r = testing::random_scene_graph(rng);
    if (c.empty()) continue;
    if (r.empty()) r.add({"dog", "near", "tree"});
    const double before = soft_spice(c, r, store);
    SceneGraph r2 = r;
    r2.add(*c.facts.begin());
    EXPECT_GE(soft_spice(c, r2, store) + 1e-12, before);
  }
}

TEST(SoftSpiceImg, Examples) {
  const SceneGraph horse = parse_sg("(horse, has_attribute, brown)");
  EXPECT_NEAR(image_alignment(horse, "img_horse", fixture_store()), 0.5, 1e-15);
  EXPECT_NEAR(soft_spice_img(horse, horse, "img_horse", fixture_store()), 2.0 / 3.0, 1e-12);
  const SceneGraph cat = parse_sg("(cat, has_attribute, black)");
  EXPECT_NEAR(soft_spice_img(cat, cat, "img_cat", fixture_store()), 1.0, 1e-12);
  EXPECT_EQ(soft_spice_img(cat, cat, "img_man", fixture_store()), 0.0);
  EXPECT_EQ(error_kind([&] { soft_spice_img(cat, cat, "img_none", fixture_store()); }),
            ErrorKind::kMissingImage);
}

TEST(HarmonicCombine, Cases) {
  EXPECT_NEAR(harmonic_combine(0.3, 0.3), 0.3, 1e-15);
  EXPECT_EQ(harmonic_combine(1, 0), 0.0);
  EXPECT_EQ(harmonic_combine(0, 0), 0.0);
  EXPECT_NEAR(harmonic_combine(1, 0.5), 2.0 / 3.0, 1e-15);
  EXPECT_EQ(error_kind([] { harmonic_combine(-0.1, 1); }), ErrorKind::kNegativeInput);
}

// --- Correlations --------------------------------------------------------

TEST(Pearson, Examples) {
  std::vector<double> a{1, 2, 3}, b{2, 4, 6}, c{3, 2, 1};
  EXPECT_NEAR(pearson(a, b), 1.0, 1e-12);
  EXPECT_NEAR(pearson(a, c), -1.0, 1e-12);
  std::vector<double> x{1, 2, 3, 4}, y{1, 3, 2, 4};
  EXPECT_NEAR(pearson(x, y), 0.8, 1e-12);
  std::vector<double> flat{2, 2, 2}, shorter{1, 2};
  EXPECT_EQ(error_kind([&] { pearson(a, flat); }), ErrorKind::kZeroVariance);
  EXPECT_EQ(error_kind([&] { pearson(a, shorter); }), ErrorKind::kLengthMismatch);
}

TEST(KendallTauC, Examples) {
  std::vector<double> a{1, 2, 3}, c{3, 2, 1}, t{1, 1, 2};
  EXPECT_NEAR(kendall_tau_c(a, a), 1.0, 1e-12);
  EXPECT_NEAR(kendall_tau_c(a, c), -1.0, 1e-12);
  EXPECT_NEAR(kendall_tau_c(t, a), 8.0 / 9.0, 1e-12);
  std::vector<double> flat{1, 1, 1}, shorter{1, 2};
  EXPECT_EQ(error_kind([&] { kendall_tau_c(a, flat); }), ErrorKind::kDegenerateM);
  EXPECT_EQ(error_kind([&] { kendall_tau_c(a, shorter); }), ErrorKind::kLengthMismatch);
}

TEST(Correlations, OracleAndInvariances) {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> level(0, 5);
  std::uniform_real_distribution<double> real(-3, 3);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 3 + i % 20;
    std::vector<double> x(n), y(n);
    for (std::size_t j = 0; j < n; ++j) {
      x[j] = level(rng);
      y[j] = j % 2 ? real(rng) : level(rng);
    }
    const bool x_flat = std::adjacent_find(x.begin(), x.end(), std::not_equal_to<>()) == x.end();
    const bool y_flat = std::adjacent_find(y.begin(), y.end(), std::not_equal_to<>()) == y.end();
    if (x_flat || y_flat) continue;

    const double tau = kendall_tau_c(x, y);
    const double r = pearson(x, y);
    EXPECT_NEAR(tau, testing::tau_c_oracle(x, y), 1e-12);
    EXPECT_NEAR(r, testing::pearson_oracle(x, y), 1e-12);

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<double> px(n), py(n), ax(n);
    for (std::size_t j = 0; j < n; ++j) {
      px[j] = x[perm[j]];
      py[j] = y[perm[j]];
      ax[j] = 2.5 * x[j] + 7.0;
    }
    EXPECT_NEAR(kendall_tau_c(px, py), tau, 1e-12);
    EXPECT_NEAR(pearson(px, py), r, 1e-12);
    EXPECT_NEAR(pearson(ax, y), r, 1e-9);
  }
}

// --- FOIL ----------------------------------------------------------------

TEST(FoilAccuracy, Examples) {
  std::vector<ScoredPair> all{{0.8, 0.5}, {0.9, 0.2}};
  EXPECT_EQ(foil_accuracy(all), 1.0);
  std::vector<ScoredPair> tie{{0.5, 0.5}};
  EXPECT_EQ(foil_accuracy(tie, TiePolicy::kLose), 0.0);
  std::vector<ScoredPair> mixed{{0.5, 0.5}, {0.7, 0.3}};
  EXPECT_EQ(foil_accuracy(mixed, TiePolicy::kHalf), 0.75);
  EXPECT_EQ(error_kind([] { foil_accuracy({}); }), ErrorKind::kEmptyInput);
}

TEST(FoilAccuracy, DependsOnlyOnOrder) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> grid(0, 4);
  for (int i = 0; i < 200; ++i) {
    std::vector<ScoredPair> pairs(1 + i % 15), mapped;
    for (auto& p : pairs) p = {grid(rng) / 4.0, grid(rng) / 4.0};
    for (const auto& p : pairs) {
      mapped.push_back({std::exp(3 * p.true_score) - 5, std::exp(3 * p.foil_score) - 5});
    }
    for (TiePolicy t : {TiePolicy::kLose, TiePolicy::kHalf}) {
      EXPECT_EQ(foil_accuracy(pairs, t), foil_accuracy(mapped, t));
    }
  }
}

// --- Retrieval -----------------------------------------------------------

TEST(RecallAtK, Examples) {
  std::vector<ScoredItem> top{{"a", 0.2}, {"gold", 0.9}, {"c", 0.5}};
  EXPECT_TRUE(recall_at_k(top, "gold", 1));

  std::vector<ScoredItem> ten;
  for (int i = 0; i < 10; ++i) ten.push_back({"i" + std::to_string(i), 1.0 - 0.1 * i});
  EXPECT_TRUE(recall_at_k(ten, "i4", 5));
  EXPECT_FALSE(recall_at_k(ten, "i4", 4));

  std::vector<ScoredItem> tied{{"b", 0.7}, {"a", 0.7}};
  EXPECT_FALSE(recall_at_k(tied, "b", 1));
  EXPECT_TRUE(recall_at_k(tied, "a", 1));
  EXPECT_EQ(error_kind([&] { recall_at_k(tied, "z", 1); }), ErrorKind::kGoldMissing);
}

TEST(RecallAtK, MonotoneInK) {
  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> grid(0, 3);
  for (int q = 0; q < 200; ++q) {
    std::vector<ScoredItem> items;
    for (int i = 0; i < 8; ++i) items.push_back({"g" + std::to_string(i), grid(rng) / 3.0});
    const std::string gold = "g" + std::to_string(q % 8);
    bool prev = false;
    for (std::size_t k = 1; k <= 8; ++k) {
      const bool now = recall_at_k(items, gold, k);
      EXPECT_TRUE(!prev || now);
      prev = now;
    }
    EXPECT_TRUE(prev);
  }
  std::vector<std::size_t> ranks{1, 3, 7, 2};
  EXPECT_EQ(recall_at_k(ranks, 1), 0.25);
  EXPECT_EQ(recall_at_k(ranks, 3), 0.75);
  EXPECT_EQ(recall_at_k(ranks, 10), 1.0);
}

}  // namespace
}  // namespace factual
