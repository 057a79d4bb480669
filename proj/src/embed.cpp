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

#include "factual/embed.hpp"

#include <charconv>
#include <cmath>
#include <random>

#include "factual/lexicon.hpp"
#include "factual/text.hpp"

namespace factual {

namespace {

[[noreturn]] void format_error(std::size_t line_no, const std::string& what) {
  throw Error(ErrorKind::kFormatError,
              "line " + std::to_string(line_no) + ": " + what);
}

template <typename Sink>
std::size_t parse_rows(std::string_view text, Sink&& sink) {
  std::size_t rows = 0;
  std::size_t line_no = 0;
  Eigen::Index width = -1;
  std::vector<double> values;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (trim(line).empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos) format_error(line_no, "expected key<TAB>values");
    std::string_view key = trim(line.substr(0, tab));
    if (key.empty()) format_error(line_no, "empty key");
    values.clear();
    for (std::string_view token : split(line.substr(tab + 1), ' ')) {
      token = trim(token);
      if (token.empty()) continue;
      double value = 0;
      auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size() ||
          !std::isfinite(value)) {
        format_error(line_no, "non-numeric field '" + std::string(token) + "'");
      }
      values.push_back(value);
    }
    if (values.empty()) format_error(line_no, "no vector values");
    const auto n = static_cast<Eigen::Index>(values.size());
    if (width >= 0 && n != width) {
      format_error(line_no, "ragged row: " + std::to_string(n) +
                                " values, expected " + std::to_string(width));
    }
    width = n;
    Eigen::VectorXd vector = Eigen::Map<const Eigen::VectorXd>(values.data(), n);
    if (vector.norm() <= kMinNorm) {
      throw Error(ErrorKind::kZeroVector,
                  "line " + std::to_string(line_no) + ": zero vector for '" +
                      std::string(key) + "'");
    }
    sink(key, std::move(vector));
    ++rows;
  }
  if (rows == 0) throw Error(ErrorKind::kEmptyFile, "no embedding rows");
  return rows;
}

}  // namespace

void EmbeddingStore::check(std::string_view key, const Eigen::VectorXd& vector) {
  if (vector.size() == 0 || vector.norm() <= kMinNorm) {
    throw Error(ErrorKind::kZeroVector, "zero vector for '" + std::string(key) + "'");
  }
  if (dimension_ != 0 && vector.size() != dimension_) {
    throw Error(ErrorKind::kDimensionMismatch,
                "'" + std::string(key) + "' has dimension " +
                    std::to_string(vector.size()) + ", store has " +
                    std::to_string(dimension_));
  }
}

void EmbeddingStore::add(std::string_view key, Eigen::VectorXd vector) {
  check(key, vector);
  dimension_ = vector.size();
  auto [it, inserted] = entries_.insert_or_assign(normalize(key), std::move(vector));
  if (!inserted) warnings_.push_back("duplicate key '" + it->first + "', last wins");
}

void EmbeddingStore::add_image(std::string_view id, Eigen::VectorXd vector) {
  check(id, vector);
  dimension_ = vector.size();
  auto [it, inserted] =
      images_.insert_or_assign(std::string(trim(id)), std::move(vector));
  if (!inserted) warnings_.push_back("duplicate image '" + it->first + "', last wins");
}

const Eigen::VectorXd* EmbeddingStore::find(std::string_view text) const {
  auto it = entries_.find(normalize(text));
  return it == entries_.end() ? nullptr : &it->second;
}

const Eigen::VectorXd* EmbeddingStore::find_image(std::string_view id) const {
  auto it = images_.find(std::string(trim(id)));
  return it == images_.end() ? nullptr : &it->second;
}

EmbeddingStore parse_store(std::string_view text) {
  EmbeddingStore store;
  parse_rows(text, [&](std::string_view key, Eigen::VectorXd v) {
    store.add(key, std::move(v));
  });
  return store;
}

void parse_images(EmbeddingStore& store, std::string_view text) {
  parse_rows(text, [&](std::string_view id, Eigen::VectorXd v) {
    store.add_image(id, std::move(v));
  });
}

EmbeddingStore load_store(const std::filesystem::path& path) {
  return parse_store(read_file(path));
}

void load_images(EmbeddingStore& store, const std::filesystem::path& path) {
  parse_images(store, read_file(path));
}

Eigen::VectorXd fallback_embedding(std::string_view text, Eigen::Index dimension) {
  std::mt19937_64 engine(fnv1a64(normalize(text)));
  Eigen::VectorXd v(dimension);
  for (Eigen::Index i = 0; i < dimension; ++i) {
    // 53 random mantissa bits mapped onto [-1, 1).
    v[i] = static_cast<double>(engine() >> 11) * 0x1.0p-52 - 1.0;
  }
  const double norm = v.norm();
  if (norm <= kMinNorm) {
    v.setZero();
    v[0] = 1.0;
    return v;
  }
  return v / norm;
}

Eigen::VectorXd lookup(const EmbeddingStore& store, std::string_view text) {
  if (const Eigen::VectorXd* v = store.find(text)) return *v;
  if (!store.fallback_enabled()) {
    throw Error(ErrorKind::kMissingKey, "no embedding for '" + normalize(text) + "'");
  }
  return fallback_embedding(text, store.fallback_dimension());
}

const Eigen::VectorXd& image_vector(const EmbeddingStore& store,
                                    std::string_view id) {
  if (const Eigen::VectorXd* v = store.find_image(id)) return *v;
  throw Error(ErrorKind::kMissingImage, "no embedding for image '" +
                                            std::string(trim(id)) + "'");
}

}  // namespace factual
