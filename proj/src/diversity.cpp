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

#include <unordered_map>
#include <unordered_set>

#include "factual/error.hpp"
#include "factual/metrics.hpp"

namespace factual {

namespace {

void require_tokens(std::span<const std::string> tokens) {
  if (tokens.empty()) throw Error(ErrorKind::kEmptyInput, "empty token stream");
}

// Factor count of one McCarthy-Jarvis pass. A factor closes when the running
// TTR falls below the threshold; the unfinished tail adds a partial factor.
template <typename It>
double mtld_factors(It first, It last, double threshold) {
  std::unordered_set<std::string_view> types;
  std::size_t count = 0;
  double ttr_now = 1.0;
  double factors = 0.0;
  for (It it = first; it != last; ++it) {
    ++count;
    types.insert(*it);
    ttr_now = static_cast<double>(types.size()) / static_cast<double>(count);
    if (ttr_now < threshold) {
      factors += 1.0;
      types.clear();
      count = 0;
      ttr_now = 1.0;
    }
  }
  return factors + (1.0 - ttr_now) / (1.0 - threshold);
}

}  // namespace

double yules_i(std::span<const std::string> tokens) {
  require_tokens(tokens);
  std::unordered_map<std::string_view, std::size_t> frequency;
  for (const std::string& t : tokens) ++frequency[t];
  // M2 = sum over frequency classes f of f^2 * V(f), i.e. the sum of squared
  // type frequencies.
  double m2 = 0.0;
  for (const auto& [type, f] : frequency) m2 += static_cast<double>(f) * static_cast<double>(f);
  const double m1 = static_cast<double>(tokens.size());
  if (m2 == m1) {
    throw Error(ErrorKind::kAllDistinct, "every token is distinct; Yule's I is undefined");
  }
  return m1 * m1 / (m2 - m1);
}

double ttr(std::span<const std::string> tokens) {
  require_tokens(tokens);
  std::unordered_set<std::string_view> types(tokens.begin(), tokens.end());
  return static_cast<double>(types.size()) / static_cast<double>(tokens.size());
}

MtldPasses mtld_passes(std::span<const std::string> tokens, double threshold) {
  require_tokens(tokens);
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw Error(ErrorKind::kInvalidArgument, "MTLD threshold must lie in (0, 1)");
  }
  const double forward = mtld_factors(tokens.begin(), tokens.end(), threshold);
  const double reverse = mtld_factors(tokens.rbegin(), tokens.rend(), threshold);
  if (forward == 0.0 || reverse == 0.0) {
    throw Error(ErrorKind::kNeverCrosses,
                "running TTR never drops below " + std::to_string(threshold));
  }
  const double n = static_cast<double>(tokens.size());
  return {n / forward, n / reverse};
}

double mtld(std::span<const std::string> tokens, double threshold) {
  return mtld_passes(tokens, threshold).value();
}

}  // namespace factual
