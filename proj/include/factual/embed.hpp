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

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

#include "factual/error.hpp"

namespace factual {

// Minimum norm for a usable vector.
inline constexpr double kMinNorm = 1e-12;

// Dimension of fallback vectors when the store holds no entries.
inline constexpr Eigen::Index kFallbackDimension = 64;

/// Read-only text and image embeddings ingested from files.
///
/// Text keys are normalized (lowercase, single spaces) so "MAN " and "man"
/// share an entry; image identifiers are matched after trimming only. All
/// vectors share one dimension and none is zero. When the fallback embedder
/// is enabled, unknown text keys resolve to a deterministic unit vector
/// instead of raising MissingKey.
class EmbeddingStore {
 public:
  EmbeddingStore() = default;

  // Throws DimensionMismatch or ZeroVector; replaces an existing key and
  // records a warning.
  void add(std::string_view key, Eigen::VectorXd vector);
  void add_image(std::string_view id, Eigen::VectorXd vector);

  const Eigen::VectorXd* find(std::string_view text) const;
  const Eigen::VectorXd* find_image(std::string_view id) const;

  // 0 until the first vector is added.
  Eigen::Index dimension() const { return dimension_; }
  Eigen::Index fallback_dimension() const {
    return dimension_ > 0 ? dimension_ : kFallbackDimension;
  }
  std::size_t size() const { return entries_.size(); }
  std::size_t image_count() const { return images_.size(); }

  bool fallback_enabled() const { return fallback_; }
  void set_fallback(bool enabled) { fallback_ = enabled; }

  // Duplicate-key notices collected while loading.
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  void check(std::string_view key, const Eigen::VectorXd& vector);

  Eigen::Index dimension_ = 0;
  bool fallback_ = false;
  std::unordered_map<std::string, Eigen::VectorXd> entries_;
  std::unordered_map<std::string, Eigen::VectorXd> images_;
  std::vector<std::string> warnings_;
};

// Reads `key<TAB>v1 v2 ... vd` lines. Throws FormatError (ragged rows,
// non-numeric fields, missing tab), ZeroVector or EmptyFile.
EmbeddingStore load_store(const std::filesystem::path& path);
// Adds image vectors from a file in the same format.
void load_images(EmbeddingStore& store, const std::filesystem::path& path);
// In-memory variants of the two loaders above.
EmbeddingStore parse_store(std::string_view text);
void parse_images(EmbeddingStore& store, std::string_view text);

// Stored vector for the normalized key, the fallback vector when enabled,
// else MissingKey.
Eigen::VectorXd lookup(const EmbeddingStore& store, std::string_view text);

// Throws MissingImage.
const Eigen::VectorXd& image_vector(const EmbeddingStore& store,
                                    std::string_view id);

// Unit vector drawn from mt19937_64 seeded with the FNV-1a hash of the
// normalized text. Identical on every platform.
Eigen::VectorXd fallback_embedding(std::string_view text, Eigen::Index dimension);

template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar cosine(const Eigen::MatrixBase<DerivedA>& u,
                                 const Eigen::MatrixBase<DerivedB>& v) {
  using Scalar = typename DerivedA::Scalar;
  if (u.size() != v.size()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "cosine of vectors with sizes " + std::to_string(u.size()) +
                    " and " + std::to_string(v.size()));
  }
  const Scalar nu = u.norm();
  const Scalar nv = v.norm();
  if (nu <= Scalar(kMinNorm) || nv <= Scalar(kMinNorm)) {
    throw Error(ErrorKind::kZeroVector, "cosine of a zero vector");
  }
  return std::clamp(u.dot(v) / (nu * nv), Scalar(-1), Scalar(1));
}

}  // namespace factual
