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

// Command-line front end for FACTUAL-MR conversion and scene-graph metrics.
//
// Sample usage:
//   factual convert data.jsonl -o converted.jsonl --rejects rejects.jsonl
//   factual eval-parser converted.jsonl --report report.jsonl
//   factual caption-eval flickr.jsonl --mode softspice --embeddings emb.tsv
//   factual retrieve queries.jsonl gallery.jsonl --embeddings emb.tsv --k 1,5,10

#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "factual/error.hpp"
#include "factual/harness/commands.hpp"

namespace {

using factual::harness::DiversityCategory;
using factual::harness::MetricMode;

struct GlobalFlags {
  std::string embeddings;
  std::string image_embeddings;
  std::string fallback = "off";
  std::string tie_policy = "lose";
  std::vector<std::size_t> ks = {1, 5, 10};
  double ttr_scale = 1.0;
  std::string rejects;
  std::string report;
  std::size_t jobs = 1;
  std::string prepositions;
  std::string modifiers;
  std::string verbs;
  std::string participles;
  std::string plurals;
  bool numeral_words = false;
};

factual::harness::Context make_context(const GlobalFlags& flags) {
  factual::harness::Context ctx;
  ctx.jobs = flags.jobs;
  if (!flags.rejects.empty()) ctx.rejects_path = flags.rejects;
  if (!flags.report.empty()) ctx.report_path = flags.report;

  if (!flags.prepositions.empty()) {
    ctx.lexicons.prepositions = factual::load_word_list(flags.prepositions);
  }
  if (!flags.modifiers.empty()) {
    ctx.lexicons.modifiers = factual::load_tsv(flags.modifiers);
  }
  if (!flags.verbs.empty()) ctx.lexicons.verbs = factual::load_word_list(flags.verbs);
  if (!flags.participles.empty()) {
    ctx.convert.morphology.participles = factual::load_tsv(flags.participles);
  }
  if (!flags.plurals.empty()) {
    ctx.convert.morphology.plurals = factual::load_tsv(flags.plurals);
  }
  ctx.convert.modifiers = ctx.lexicons.modifiers;
  ctx.convert.numeral_words = flags.numeral_words;

  auto store = std::make_shared<factual::EmbeddingStore>();
  if (!flags.embeddings.empty()) *store = factual::load_store(flags.embeddings);
  if (!flags.image_embeddings.empty()) {
    factual::load_images(*store, flags.image_embeddings);
  }
  store->set_fallback(flags.fallback == "on");
  for (const std::string& w : store->warnings()) std::cerr << "warning: " << w << '\n';
  ctx.store = std::move(store);
  return ctx;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"FACTUAL-MR parsing, scene-graph conversion and evaluation"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_option("--embeddings", flags.embeddings, "Component embeddings (key<TAB>v1 ... vd)");
  app.add_option("--image-embeddings", flags.image_embeddings, "Image embeddings, same format");
  app.add_option("--fallback-embedder", flags.fallback, "Hash-seeded vectors for unknown keys")
      ->check(CLI::IsMember({"on", "off"}));
  app.add_option("--tie-policy", flags.tie_policy, "FOIL ties: lose or half")
      ->check(CLI::IsMember({"lose", "half"}));
  app.add_option("--k", flags.ks, "Recall@k cutoffs, comma separated")->delimiter(',');
  app.add_option("--ttr-scale", flags.ttr_scale, "Multiplier applied to reported TTR");
  app.add_option("--rejects", flags.rejects, "Write rejected records here (JSONL)");
  app.add_option("--report", flags.report, "Write the machine-readable report here (JSONL)");
  app.add_option("--jobs", flags.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--prepositions", flags.prepositions, "Preposition lexicon");
  app.add_option("--modifiers", flags.modifiers, "Quantifier modifier lexicon");
  app.add_option("--verbs", flags.verbs, "Verb lexicon (enables UnknownVerb)");
  app.add_option("--participles", flags.participles, "Irregular participle table");
  app.add_option("--plurals", flags.plurals, "Irregular plural table");
  app.add_flag("--numeral-words", flags.numeral_words, "Render counts as words");

  const std::map<std::string, MetricMode> modes = {
      {"spice", MetricMode::kSpice},
      {"softspice", MetricMode::kSoftSpice},
      {"softspice_img", MetricMode::kSoftSpiceImg}};
  const std::map<std::string, DiversityCategory> categories = {
      {"objects", DiversityCategory::kObjects},
      {"attributes", DiversityCategory::kAttributes},
      {"predicates", DiversityCategory::kPredicates}};

  std::string input, output, gallery, mode = "spice", combine_with;
  std::string category = "objects", graph_field = "candidate_sg";

  auto* convert = app.add_subcommand("convert", "Fill candidate_sg from mr");
  convert->add_option("input", input, "Input JSONL")->required();
  convert->add_option("-o,--output", output, "Output JSONL")->required();

  auto* validate = app.add_subcommand("validate", "Check MRs against the lexicons");
  validate->add_option("input", input, "Input JSONL")->required();

  auto* eval_parser = app.add_subcommand("eval-parser", "Set Match and SPICE of candidate_sg vs gold_sg");
  eval_parser->add_option("input", input, "Input JSONL")->required();

  auto* caption_eval = app.add_subcommand("caption-eval", "Correlate a graph metric with human scores");
  caption_eval->add_option("input", input, "Input JSONL")->required();
  caption_eval->add_option("--mode", mode, "spice | softspice | softspice_img")
      ->check(CLI::IsMember({"spice", "softspice", "softspice_img"}));
  caption_eval->add_option("--combine-with", combine_with,
                           "External score name to combine by harmonic mean");

  auto* foil = app.add_subcommand("foil", "Accuracy at preferring true captions over foils");
  foil->add_option("input", input, "Input JSONL")->required();
  foil->add_option("--mode", mode, "spice | softspice | softspice_img")
      ->check(CLI::IsMember({"spice", "softspice", "softspice_img"}));

  auto* retrieve = app.add_subcommand("retrieve", "Rank gallery images by SoftSPICE");
  retrieve->add_option("queries", input, "Query JSONL")->required();
  retrieve->add_option("gallery", gallery, "Gallery JSONL")->required();

  auto* stats = app.add_subcommand("stats", "Label and occurrence counts over MRs");
  stats->add_option("input", input, "Input JSONL")->required();

  auto* diversity = app.add_subcommand("diversity", "Yule's I, TTR and MTLD of graph labels");
  diversity->add_option("input", input, "Input JSONL")->required();
  diversity->add_option("--category", category, "objects | attributes | predicates")
      ->check(CLI::IsMember({"objects", "attributes", "predicates"}));
  diversity->add_option("--graph-field", graph_field, "candidate_sg | gold_sg")
      ->check(CLI::IsMember({"candidate_sg", "gold_sg"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : factual::harness::kExitUsage;
  }

  try {
    const factual::harness::Context ctx = make_context(flags);
    const factual::TiePolicy ties =
        flags.tie_policy == "half" ? factual::TiePolicy::kHalf : factual::TiePolicy::kLose;
    std::optional<std::string> combine;
    if (!combine_with.empty()) combine = combine_with;

    if (*convert) return factual::harness::cmd_convert(ctx, input, output);
    if (*validate) return factual::harness::cmd_validate(ctx, input);
    if (*eval_parser) return factual::harness::cmd_eval_parser(ctx, input);
    if (*caption_eval) {
      return factual::harness::cmd_caption_eval(ctx, input, modes.at(mode), combine);
    }
    if (*foil) return factual::harness::cmd_foil(ctx, input, modes.at(mode), ties);
    if (*retrieve) return factual::harness::cmd_retrieve(ctx, input, gallery, flags.ks);
    if (*stats) return factual::harness::cmd_stats(ctx, input);
    if (*diversity) {
      return factual::harness::cmd_diversity(ctx, input, categories.at(category),
                                             flags.ttr_scale, graph_field);
    }
  } catch (const factual::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == factual::ErrorKind::kIoError ||
                   e.kind() == factual::ErrorKind::kInvalidArgument
               ? factual::harness::kExitUsage
               : factual::harness::kExitInputFailure;
  }
  return factual::harness::kExitUsage;
}
