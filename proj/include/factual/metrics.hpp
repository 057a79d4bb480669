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

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "factual/embed.hpp"
#include "factual/sg.hpp"

namespace factual {

struct PRF {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// F1 of a precision/recall pair; 0 when both are 0.
double f1_score(double precision, double recall);

// SPICE over exact component matches (objects, attribute pairs, relation
// triples; each category matched separately). Two empty graphs score 1,
// exactly one empty graph scores 0.
PRF spice_f1(const SceneGraph& candidate, const SceneGraph& reference);

// Equality of fact sets after lowercase/whitespace normalization.
bool set_match(const SceneGraph& candidate, const SceneGraph& reference);

// Mean over candidate components of the best clamped cosine against any
// reference component. 0 for an empty candidate; throws EmptyInput for an
// empty reference and MissingKey for unknown components without fallback.
double soft_spice(const SceneGraph& candidate, const SceneGraph& reference,
                  const EmbeddingStore& store);

// Unit-norm embeddings of every decomposed component, one column each
// (objects, then attribute pairs, then relation triples).
Eigen::MatrixXd embed_components(const SceneGraph& graph,
                                 const EmbeddingStore& store);

// SoftSPICE over already embedded, unit-norm component columns.
template <typename DerivedC, typename DerivedR>
double soft_spice(const Eigen::MatrixBase<DerivedC>& candidate,
                  const Eigen::MatrixBase<DerivedR>& reference) {
  if (reference.cols() == 0) {
    throw Error(ErrorKind::kEmptyInput, "reference graph has no components");
  }
  if (candidate.cols() == 0) return 0.0;
  if (candidate.rows() != reference.rows()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "candidate and reference embeddings differ in dimension");
  }
  // Row i: cosines of candidate component i against every reference component.
  return (candidate.transpose() * reference)
      .cwiseMin(1.0)
      .rowwise()
      .maxCoeff()
      .cwiseMax(0.0)
      .mean();
}

// Mean clamped cosine between candidate components and the image vector.
double image_alignment(const SceneGraph& candidate, std::string_view image_id,
                       const EmbeddingStore& store);

// Harmonic mean of soft_spice(candidate, reference) and
// image_alignment(candidate, image).
double soft_spice_img(const SceneGraph& candidate, const SceneGraph& reference,
                      std::string_view image_id, const EmbeddingStore& store);

// 2ab/(a+b), 0 when a+b = 0. Throws NegativeInput.
double harmonic_combine(double a, double b);

// Sample Pearson correlation. Throws LengthMismatch (also for n < 2) and
// ZeroVariance.
double pearson(std::span<const double> xs, std::span<const double> ys);

// Stuart's tau-c over all n(n-1)/2 pairs:
//   (C - D) * 2m / (n^2 (m - 1)),  m = min(#distinct xs, #distinct ys).
// Throws LengthMismatch and DegenerateM (m < 2).
double kendall_tau_c(std::span<const double> xs, std::span<const double> ys);

struct ScoredPair {
  double true_score = 0.0;
  double foil_score = 0.0;
};

enum class TiePolicy { kLose, kHalf };

// Fraction of pairs where the true caption outscores its foil.
double foil_accuracy(std::span<const ScoredPair> pairs,
                     TiePolicy ties = TiePolicy::kLose);

struct ScoredItem {
  std::string id;
  double score = 0.0;
};

// 1-based rank of `gold_id` under descending score, ties broken by
// ascending id. Throws GoldMissing.
std::size_t rank_of(std::span<const ScoredItem> items, std::string_view gold_id);

// Throws GoldMissing, and InvalidArgument for k = 0.
bool recall_at_k(std::span<const ScoredItem> items, std::string_view gold_id,
                 std::size_t k);

// Mean of rank <= k over queries given their gold ranks.
double recall_at_k(std::span<const std::size_t> gold_ranks, std::size_t k);

// Lexical diversity over a token stream.

// M1^2 / (M2 - M1). Throws EmptyInput and AllDistinct (M2 = M1).
double yules_i(std::span<const std::string> tokens);

// Distinct types / tokens. Throws EmptyInput.
double ttr(std::span<const std::string> tokens);

inline constexpr double kMtldThreshold = 0.72;

struct MtldPasses {
  double forward = 0.0;
  double reverse = 0.0;
  double value() const { return (forward + reverse) / 2.0; }
};

MtldPasses mtld_passes(std::span<const std::string> tokens,
                       double threshold = kMtldThreshold);

// Mean of forward and reverse passes. Throws EmptyInput and NeverCrosses.
double mtld(std::span<const std::string> tokens,
            double threshold = kMtldThreshold);

}  // namespace factual
