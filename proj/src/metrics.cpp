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
#include <cstdint>
#include <set>

#include "factual/error.hpp"
#include "factual/text.hpp"

namespace factual {

namespace {

std::size_t intersection_size(const std::set<std::string>& a,
                              const std::set<std::string>& b) {
  std::size_t n = 0;
  for (const std::string& s : a) n += b.count(s);
  return n;
}

// One unit-norm column per component.
Eigen::MatrixXd unit_columns(const std::vector<std::string>& texts,
                             const EmbeddingStore& store) {
  Eigen::MatrixXd out(0, 0);
  for (std::size_t j = 0; j < texts.size(); ++j) {
    Eigen::VectorXd v = lookup(store, texts[j]);
    if (j == 0) out.resize(v.size(), static_cast<Eigen::Index>(texts.size()));
    if (v.size() != out.rows()) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "embedding for '" + texts[j] + "' has dimension " +
                      std::to_string(v.size()));
    }
    out.col(static_cast<Eigen::Index>(j)) = v / v.norm();
  }
  return out;
}

std::set<SGFact> normalized_facts(const SceneGraph& graph) {
  std::set<SGFact> out;
  for (const SGFact& f : graph.facts) {
    out.insert({normalize(f.subject), normalize(f.predicate), normalize(f.object)});
  }
  return out;
}

void check_lengths(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw Error(ErrorKind::kLengthMismatch,
                std::to_string(xs.size()) + " vs " + std::to_string(ys.size()));
  }
  if (xs.size() < 2) {
    throw Error(ErrorKind::kLengthMismatch, "need at least 2 observations");
  }
}

std::size_t distinct_count(std::span<const double> values) {
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(
      std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

}  // namespace

double f1_score(double precision, double recall) {
  if (precision + recall <= 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

PRF spice_f1(const SceneGraph& candidate, const SceneGraph& reference) {
  const SpiceComponents c = decompose(candidate);
  const SpiceComponents r = decompose(reference);
  if (c.size() == 0 && r.size() == 0) return {1.0, 1.0, 1.0};
  if (c.size() == 0 || r.size() == 0) return {};
  const std::size_t matched =
      intersection_size(c.objects, r.objects) +
      intersection_size(c.attribute_pairs, r.attribute_pairs) +
      intersection_size(c.relation_triples, r.relation_triples);
  PRF prf;
  prf.precision = static_cast<double>(matched) / static_cast<double>(c.size());
  prf.recall = static_cast<double>(matched) / static_cast<double>(r.size());
  prf.f1 = f1_score(prf.precision, prf.recall);
  return prf;
}

bool set_match(const SceneGraph& candidate, const SceneGraph& reference) {
  return normalized_facts(candidate) == normalized_facts(reference);
}

Eigen::MatrixXd embed_components(const SceneGraph& graph,
                                 const EmbeddingStore& store) {
  return unit_columns(decompose(graph).all(), store);
}

double soft_spice(const SceneGraph& candidate, const SceneGraph& reference,
                  const EmbeddingStore& store) {
  if (decompose(reference).size() == 0) {
    throw Error(ErrorKind::kEmptyInput, "reference graph has no components");
  }
  return soft_spice(embed_components(candidate, store),
                    embed_components(reference, store));
}

double image_alignment(const SceneGraph& candidate, std::string_view image_id,
                       const EmbeddingStore& store) {
  const Eigen::VectorXd& image = image_vector(store, image_id);
  const Eigen::MatrixXd c = embed_components(candidate, store);
  if (c.cols() == 0) return 0.0;
  if (c.rows() != image.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "component and image embeddings differ in dimension");
  }
  const Eigen::VectorXd cosines = (c.transpose() * (image / image.norm())).cwiseMin(1.0);
  return cosines.cwiseMax(0.0).mean();
}

double soft_spice_img(const SceneGraph& candidate, const SceneGraph& reference,
                      std::string_view image_id, const EmbeddingStore& store) {
  const double graph_term = soft_spice(candidate, reference, store);
  const double image_term = image_alignment(candidate, image_id, store);
  return harmonic_combine(graph_term, image_term);
}

double harmonic_combine(double a, double b) {
  if (!(a >= 0.0) || !(b >= 0.0)) {
    throw Error(ErrorKind::kNegativeInput,
                "harmonic mean of " + format_fixed6(a) + " and " + format_fixed6(b));
  }
  if (a + b == 0.0) return 0.0;
  return 2.0 * a * b / (a + b);
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  check_lengths(xs, ys);
  const auto n = static_cast<Eigen::Index>(xs.size());
  Eigen::Map<const Eigen::ArrayXd> x(xs.data(), n);
  Eigen::Map<const Eigen::ArrayXd> y(ys.data(), n);
  if (x.maxCoeff() == x.minCoeff() || y.maxCoeff() == y.minCoeff()) {
    throw Error(ErrorKind::kZeroVariance, "constant input");
  }
  const Eigen::ArrayXd dx = x - x.mean();
  const Eigen::ArrayXd dy = y - y.mean();
  const double sxy = (dx * dy).sum();
  const double sxx = dx.square().sum();
  const double syy = dy.square().sum();
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double kendall_tau_c(std::span<const double> xs, std::span<const double> ys) {
  check_lengths(xs, ys);
  const std::size_t m = std::min(distinct_count(xs), distinct_count(ys));
  if (m < 2) {
    throw Error(ErrorKind::kDegenerateM,
                "tau-c needs at least 2 distinct values on both sides");
  }
  std::int64_t concordant = 0;
  std::int64_t discordant = 0;
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dx = xs[i] - xs[j];
      const double dy = ys[i] - ys[j];
      if ((dx > 0 && dy > 0) || (dx < 0 && dy < 0)) {
        ++concordant;
      } else if ((dx > 0 && dy < 0) || (dx < 0 && dy > 0)) {
        ++discordant;
      }
    }
  }
  const double numerator = 2.0 * static_cast<double>(concordant - discordant) *
                           static_cast<double>(m);
  const double denominator = static_cast<double>(n) * static_cast<double>(n) *
                             static_cast<double>(m - 1);
  return numerator / denominator;
}

double foil_accuracy(std::span<const ScoredPair> pairs, TiePolicy ties) {
  if (pairs.empty()) throw Error(ErrorKind::kEmptyInput, "no caption pairs");
  double correct = 0.0;
  for (const ScoredPair& p : pairs) {
    if (p.true_score > p.foil_score) {
      correct += 1.0;
    } else if (p.true_score == p.foil_score && ties == TiePolicy::kHalf) {
      correct += 0.5;
    }
  }
  return correct / static_cast<double>(pairs.size());
}

std::size_t rank_of(std::span<const ScoredItem> items, std::string_view gold_id) {
  const ScoredItem* gold = nullptr;
  for (const ScoredItem& item : items) {
    if (item.id == gold_id) {
      gold = &item;
      break;
    }
  }
  if (gold == nullptr) {
    throw Error(ErrorKind::kGoldMissing,
                "gold item '" + std::string(gold_id) + "' not among candidates");
  }
  std::size_t rank = 1;
  for (const ScoredItem& item : items) {
    if (item.score > gold->score ||
        (item.score == gold->score && item.id < gold->id)) {
      ++rank;
    }
  }
  return rank;
}

bool recall_at_k(std::span<const ScoredItem> items, std::string_view gold_id,
                 std::size_t k) {
  if (k == 0) throw Error(ErrorKind::kInvalidArgument, "k must be positive");
  return rank_of(items, gold_id) <= k;
}

double recall_at_k(std::span<const std::size_t> gold_ranks, std::size_t k) {
  if (k == 0) throw Error(ErrorKind::kInvalidArgument, "k must be positive");
  if (gold_ranks.empty()) throw Error(ErrorKind::kEmptyInput, "no queries");
  std::size_t hits = 0;
  for (std::size_t rank : gold_ranks) hits += rank <= k ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(gold_ranks.size());
}

}  // namespace factual
