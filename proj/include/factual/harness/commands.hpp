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
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "factual/embed.hpp"
#include "factual/lexicon.hpp"
#include "factual/metrics.hpp"
#include "factual/mr.hpp"
#include "factual/mr2sg.hpp"
#include "factual/sg.hpp"

namespace factual::harness {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInputFailure = 2;

enum class MetricMode { kSpice, kSoftSpice, kSoftSpiceImg };
enum class DiversityCategory { kObjects, kAttributes, kPredicates };

// Shared, read-only state for one command invocation.
struct Context {
  Lexicons lexicons = Lexicons::builtin();
  ConvertOptions convert;
  std::shared_ptr<const EmbeddingStore> store =
      std::make_shared<const EmbeddingStore>();
  // Worker threads for per-record work. Output never depends on it.
  std::size_t jobs = 1;
  // Rejected records go here as JSONL; to `err` when unset.
  std::optional<std::filesystem::path> rejects_path;
  // Machine-readable JSONL report; the text table always goes to `out`.
  std::optional<std::filesystem::path> report_path;
  std::ostream* out = &std::cout;
  std::ostream* err = &std::cerr;
};

// Score of `candidate` against `reference` under a metric mode. The image
// mode needs `image_id`.
double metric_score(MetricMode mode, const SceneGraph& candidate,
                    const SceneGraph& reference,
                    const std::optional<std::string>& image_id,
                    const EmbeddingStore& store);

// "man:2" -> "man". Other strings are returned unchanged.
std::string strip_suffix(std::string_view node);

// Tokens of one graph in canonical fact order: distinct nodes (suffix
// stripped) for objects, attribute values for attributes, whole relation
// phrases for predicates.
std::vector<std::string> diversity_tokens(const SceneGraph& graph,
                                          DiversityCategory category);

struct CategoryStats {
  std::int64_t distinct = 0;
  std::int64_t occurrences = 0;
  double occurrences_per_label = 0.0;
  double labels_per_scene = 0.0;
  double occurrences_per_scene = 0.0;
};

// Label counts per category: object, verb, preposition, predicate,
// attribute, quantifier, fact (in that order).
struct StatsReport {
  std::int64_t scenes = 0;
  std::vector<std::pair<std::string, CategoryStats>> categories;

  const CategoryStats& at(std::string_view category) const;
};

StatsReport compute_stats(std::span<const MRGraph> graphs,
                          const MorphTable& morphology);

// Each command reads JSONL records, writes its report, and returns the exit
// code: 0 on success (possibly with rejects), 2 when no record survives or
// the aggregate is undefined.
int cmd_convert(const Context& ctx, const std::filesystem::path& input,
                const std::filesystem::path& output);
int cmd_validate(const Context& ctx, const std::filesystem::path& input);
int cmd_eval_parser(const Context& ctx, const std::filesystem::path& input);
// `combine_with` names an external score harmonically combined with the
// metric before correlating.
int cmd_caption_eval(const Context& ctx, const std::filesystem::path& input,
                     MetricMode mode,
                     const std::optional<std::string>& combine_with = {});
int cmd_foil(const Context& ctx, const std::filesystem::path& input,
             MetricMode mode, TiePolicy ties);
int cmd_retrieve(const Context& ctx, const std::filesystem::path& queries,
                 const std::filesystem::path& gallery,
                 const std::vector<std::size_t>& ks);
int cmd_stats(const Context& ctx, const std::filesystem::path& input);
int cmd_diversity(const Context& ctx, const std::filesystem::path& input,
                  DiversityCategory category, double ttr_scale = 1.0,
                  const std::string& graph_field = "candidate_sg");

}  // namespace factual::harness
