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

// Independent reference computations. These deliberately avoid the library
// code paths they are used to check.

#include <cmath>
#include <map>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "factual/sg.hpp"

namespace factual::testing {

struct OraclePRF {
  double precision;
  double recall;
  double f1;
};

// Enumerates every tagged component tuple of every fact, deduplicates by
// linear search and counts matches pairwise.
inline OraclePRF spice_oracle(const SceneGraph& candidate, const SceneGraph& reference) {
  using Tuple = std::tuple<char, std::string, std::string, std::string>;
  auto enumerate = [](const SceneGraph& g) {
    std::vector<Tuple> out;
    auto push = [&](Tuple t) {
      for (const Tuple& u : out) {
        if (u == t) return;
      }
      out.push_back(std::move(t));
    };
    for (const SGFact& f : g.facts) {
      push({'o', f.subject, "", ""});
      if (f.predicate == "has_attribute") {
        push({'a', f.subject, f.object, ""});
      } else {
        push({'o', f.object, "", ""});
        push({'r', f.subject, f.predicate, f.object});
      }
    }
    return out;
  };
  const auto c = enumerate(candidate);
  const auto r = enumerate(reference);
  if (c.empty() && r.empty()) return {1.0, 1.0, 1.0};
  if (c.empty() || r.empty()) return {0.0, 0.0, 0.0};
  std::size_t matched = 0;
  for (const Tuple& a : c) {
    for (const Tuple& b : r) {
      if (a == b) ++matched;
    }
  }
  const double p = static_cast<double>(matched) / static_cast<double>(c.size());
  const double rc = static_cast<double>(matched) / static_cast<double>(r.size());
  return {p, rc, p + rc > 0 ? 2 * p * rc / (p + rc) : 0.0};
}

inline double pearson_oracle(const std::vector<double>& x, const std::vector<double>& y) {
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= x.size();
  my /= y.size();
  long double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  return static_cast<double>(sxy / std::sqrt(sxx * syy));
}

// Sum of sign products over all ordered pairs, halved.
inline double tau_c_oracle(const std::vector<double>& x, const std::vector<double>& y) {
  auto sign = [](double v) { return (v > 0) - (v < 0); };
  long long s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (i != j) s += sign(x[i] - x[j]) * sign(y[i] - y[j]);
    }
  }
  const double cd = static_cast<double>(s) / 2.0;
  const double n = static_cast<double>(x.size());
  const double m = static_cast<double>(
      std::min(std::set<double>(x.begin(), x.end()).size(),
               std::set<double>(y.begin(), y.end()).size()));
  return 2.0 * m * cd / (n * n * (m - 1.0));
}

// One McCarthy-Jarvis pass written out directly: factor closes when the
// running TTR drops below the threshold; the tail contributes
// (1 - ttr) / (1 - threshold).
inline double mtld_pass_oracle(const std::vector<std::string>& tokens, double threshold) {
  std::map<std::string, int> types;
  int count = 0;
  double factors = 0;
  double current = 1.0;
  for (const std::string& t : tokens) {
    ++count;
    types[t] += 1;
    current = static_cast<double>(types.size()) / count;
    if (current < threshold) {
      factors += 1;
      types.clear();
      count = 0;
      current = 1.0;
    }
  }
  factors += (1.0 - current) / (1.0 - threshold);
  return static_cast<double>(tokens.size()) / factors;
}

inline double mtld_oracle(const std::vector<std::string>& tokens, double threshold = 0.72) {
  std::vector<std::string> reversed(tokens.rbegin(), tokens.rend());
  return (mtld_pass_oracle(tokens, threshold) + mtld_pass_oracle(reversed, threshold)) / 2.0;
}

}  // namespace factual::testing
