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

#include "factual/harness/commands.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <map>
#include <set>
#include <thread>
#include <unordered_set>

#include "factual/error.hpp"
#include "factual/harness/record.hpp"
#include "factual/harness/report.hpp"
#include "factual/text.hpp"

namespace factual::harness {

namespace {

struct Reject {
  std::string source;
  std::size_t line_no = 0;
  std::optional<std::string> id;
  std::string kind;
  std::string message;
};

template <typename R>
struct Success {
  std::size_t line_no = 0;
  nlohmann::ordered_json json;
  EvalRecord record;
  R result;
};

template <typename R>
struct Batch {
  std::size_t total = 0;
  std::vector<Success<R>> ok;  // input order
  std::vector<Reject> rejects;  // input order
};

template <typename Fn>
void parallel_for(std::size_t n, std::size_t jobs, Fn&& fn) {
  const std::size_t workers = std::min(std::max<std::size_t>(jobs, 1), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

// Parses every line into a record, then runs `work` on the valid ones
// (possibly in parallel). Each input line ends up in exactly one of
// `ok` / `rejects`.
template <typename R, typename Fn>
Batch<R> run_records(const Context& ctx, const std::filesystem::path& path,
                     const std::string& source, Fn&& work) {
  const std::vector<JsonlLine> lines = read_jsonl(path);
  struct Slot {
    std::size_t line_no = 0;
    nlohmann::ordered_json json;
    std::optional<EvalRecord> record;
    std::optional<R> result;
    std::optional<Reject> reject;
  };
  std::vector<Slot> slots(lines.size());
  std::unordered_set<std::string> ids;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    Slot& slot = slots[i];
    slot.line_no = lines[i].line_no;
    try {
      slot.json = nlohmann::ordered_json::parse(lines[i].text);
      EvalRecord record = record_from_json(slot.json);
      if (!ids.insert(record.id).second) {
        throw Error(ErrorKind::kDuplicateId, "id '" + record.id + "' repeats");
      }
      slot.record = std::move(record);
    } catch (const Error& e) {
      std::optional<std::string> id;
      if (slot.json.is_object() && slot.json.contains("id") && slot.json["id"].is_string()) {
        id = slot.json["id"].template get<std::string>();
      }
      slot.reject = Reject{source, slot.line_no, id, std::string(to_string(e.kind())), e.detail()};
    } catch (const nlohmann::json::exception& e) {
      slot.reject = Reject{source, slot.line_no, std::nullopt, "FormatError", e.what()};
    }
  }

  parallel_for(slots.size(), ctx.jobs, [&](std::size_t i) {
    Slot& slot = slots[i];
    if (!slot.record) return;
    try {
      slot.result.emplace(work(*slot.record));
    } catch (const Error& e) {
      slot.reject = Reject{source, slot.line_no, slot.record->id,
                           std::string(to_string(e.kind())), e.detail()};
    } catch (const std::exception& e) {
      slot.reject = Reject{source, slot.line_no, slot.record->id, "Error", e.what()};
    }
  });

  Batch<R> batch;
  batch.total = slots.size();
  for (Slot& slot : slots) {
    if (slot.reject) {
      batch.rejects.push_back(std::move(*slot.reject));
    } else {
      batch.ok.push_back({slot.line_no, std::move(slot.json),
                          std::move(*slot.record), std::move(*slot.result)});
    }
  }
  return batch;
}

// Aggregation order: ascending record id.
template <typename R>
std::vector<const Success<R>*> by_id(const Batch<R>& batch) {
  std::vector<const Success<R>*> out;
  out.reserve(batch.ok.size());
  for (const auto& s : batch.ok) out.push_back(&s);
  std::sort(out.begin(), out.end(), [](const auto* a, const auto* b) {
    return a->record.id < b->record.id;
  });
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kIoError, "cannot write " + path.string());
  out << content;
}

std::string rejects_jsonl(const std::vector<Reject>& rejects) {
  std::string out;
  for (const Reject& r : rejects) {
    nlohmann::ordered_json j;
    j["source"] = r.source;
    j["line"] = r.line_no;
    j["id"] = r.id ? nlohmann::ordered_json(*r.id) : nlohmann::ordered_json(nullptr);
    j["error"] = r.kind;
    j["message"] = r.message;
    out += j.dump();
    out += '\n';
  }
  return out;
}

void emit(const Context& ctx, const Report& report,
          const std::vector<Reject>& rejects) {
  if (ctx.rejects_path) {
    write_file(*ctx.rejects_path, rejects_jsonl(rejects));
  } else if (!rejects.empty()) {
    *ctx.err << rejects_jsonl(rejects);
  }
  if (ctx.report_path) write_file(*ctx.report_path, report.jsonl());
  *ctx.out << report.table();
}

template <typename R>
void add_counts(Report& report, const Batch<R>& batch) {
  report.set("records", static_cast<std::int64_t>(batch.total));
  report.set("processed", static_cast<std::int64_t>(batch.ok.size()));
  report.set("rejected", static_cast<std::int64_t>(batch.rejects.size()));
}

template <typename R>
int counts_exit(const Batch<R>& batch) {
  return batch.total > 0 && batch.ok.empty() ? kExitInputFailure : kExitOk;
}

// Runs `fn`, turning a library error into an Undefined value.
template <typename Fn>
Value defined_or(Fn&& fn) {
  try {
    return Value(fn());
  } catch (const Error& e) {
    return Undefined{std::string(to_string(e.kind()))};
  }
}

std::string_view mode_name(MetricMode mode) {
  switch (mode) {
    case MetricMode::kSpice: return "spice";
    case MetricMode::kSoftSpice: return "softspice";
    case MetricMode::kSoftSpiceImg: return "softspice_img";
  }
  return "";
}

std::string_view category_name(DiversityCategory c) {
  switch (c) {
    case DiversityCategory::kObjects: return "objects";
    case DiversityCategory::kAttributes: return "attributes";
    case DiversityCategory::kPredicates: return "predicates";
  }
  return "";
}

[[noreturn]] void fail_empty() {
  throw Error(ErrorKind::kEmptyInput, "input has no records");
}

int report_failure(const Context& ctx, const Error& e) {
  *ctx.err << "error: " << e.what() << '\n';
  return e.kind() == ErrorKind::kIoError || e.kind() == ErrorKind::kInvalidArgument
             ? kExitUsage
             : kExitInputFailure;
}

}  // namespace

double metric_score(MetricMode mode, const SceneGraph& candidate,
                    const SceneGraph& reference,
                    const std::optional<std::string>& image_id,
                    const EmbeddingStore& store) {
  switch (mode) {
    case MetricMode::kSpice: return spice_f1(candidate, reference).f1;
    case MetricMode::kSoftSpice: return soft_spice(candidate, reference, store);
    case MetricMode::kSoftSpiceImg:
      return soft_spice_img(candidate, reference, require(image_id, "image_id"), store);
  }
  return 0.0;
}

std::string strip_suffix(std::string_view node) {
  std::size_t colon = node.rfind(':');
  if (colon != std::string_view::npos && is_digits(node.substr(colon + 1))) {
    return std::string(node.substr(0, colon));
  }
  return std::string(node);
}

std::vector<std::string> diversity_tokens(const SceneGraph& graph,
                                          DiversityCategory category) {
  std::vector<std::string> tokens;
  std::set<std::string> seen_nodes;
  auto node = [&](const std::string& n) {
    if (seen_nodes.insert(n).second) tokens.push_back(strip_suffix(n));
  };
  for (const SGFact& fact : graph.facts) {
    switch (category) {
      case DiversityCategory::kObjects:
        node(fact.subject);
        if (!fact.is_attribute()) node(fact.object);
        break;
      case DiversityCategory::kAttributes:
        if (fact.is_attribute()) tokens.push_back(fact.object);
        break;
      case DiversityCategory::kPredicates:
        if (!fact.is_attribute()) tokens.push_back(fact.predicate);
        break;
    }
  }
  return tokens;
}

const CategoryStats& StatsReport::at(std::string_view category) const {
  for (const auto& [name, stats] : categories) {
    if (name == category) return stats;
  }
  throw Error(ErrorKind::kInvalidArgument, "no category '" + std::string(category) + "'");
}

StatsReport compute_stats(std::span<const MRGraph> graphs,
                          const MorphTable& morphology) {
  static constexpr std::string_view kCategories[] = {
      "object", "verb", "preposition", "predicate", "attribute", "quantifier", "fact"};
  constexpr std::size_t kCount = std::size(kCategories);
  std::array<std::map<std::string, std::int64_t>, kCount> totals;
  std::array<double, kCount> labels_in_scenes{};

  for (const MRGraph& graph : graphs) {
    std::array<std::set<std::string>, kCount> scene;
    auto count = [&](std::size_t c, const std::string& label) {
      ++totals[c][label];
      scene[c].insert(label);
    };
    auto quantity = [&](const std::optional<Quantifier>& q) {
      // Modifier suffixes are dropped: "2g" and "2" are one label.
      if (q) count(5, q->is_exact() ? std::to_string(q->n) : q->label());
    };
    for (const MRFact& fact : graph.facts) {
      if (const auto* attr = std::get_if<AttributeFact>(&fact)) {
        count(0, attr->object.name);
        count(4, attr->attribute);
        quantity(attr->quantifier);
      } else {
        const auto& rel = std::get<RelationFact>(fact);
        count(0, rel.subject.name);
        count(0, rel.object.name);
        if (rel.verb) count(1, rel.verb->lemma);
        if (rel.preposition) count(2, *rel.preposition);
        count(3, realize_predicate(rel.verb, rel.preposition, morphology));
        quantity(rel.quantifier_sub);
        quantity(rel.quantifier_obj);
      }
      count(6, serialize_fact(fact));
    }
    for (std::size_t c = 0; c < kCount; ++c) {
      labels_in_scenes[c] += static_cast<double>(scene[c].size());
    }
  }

  StatsReport report;
  report.scenes = static_cast<std::int64_t>(graphs.size());
  const double scenes = static_cast<double>(graphs.size());
  for (std::size_t c = 0; c < kCount; ++c) {
    CategoryStats s;
    s.distinct = static_cast<std::int64_t>(totals[c].size());
    for (const auto& [label, n] : totals[c]) s.occurrences += n;
    if (s.distinct > 0) {
      s.occurrences_per_label =
          static_cast<double>(s.occurrences) / static_cast<double>(s.distinct);
    }
    if (scenes > 0) {
      s.labels_per_scene = labels_in_scenes[c] / scenes;
      s.occurrences_per_scene = static_cast<double>(s.occurrences) / scenes;
    }
    report.categories.emplace_back(std::string(kCategories[c]), s);
  }
  return report;
}

int cmd_convert(const Context& ctx, const std::filesystem::path& input,
                const std::filesystem::path& output) {
  try {
    auto batch = run_records<std::string>(ctx, input, "input", [&](const EvalRecord& r) {
      const MRGraph graph = parse_mr(require(r.mr, "mr"), ctx.lexicons);
      return serialize_sg(convert(graph, ctx.convert));
    });
    std::string lines;
    for (auto& s : batch.ok) {
      nlohmann::ordered_json j = s.json;
      j["candidate_sg"] = s.result;
      lines += j.dump();
      lines += '\n';
    }
    write_file(output, lines);
    Report report("convert");
    add_counts(report, batch);
    emit(ctx, report, batch.rejects);
    return counts_exit(batch);
  } catch (const Error& e) {
    return report_failure(ctx, e);
  }
}

int cmd_validate(const Context& ctx, const std::filesystem::path& input) {
  try {
    auto batch = run_records<std::vector<Diagnostic>>(ctx, input, "input", [&](const EvalRecord& r) {
      return validate_mr(parse_mr(require(r.mr, "mr"), ctx.lexicons), ctx.lexicons);
    });
    Report report("validate");
    std::int64_t valid = 0;
    for (const auto& s : batch.ok) {
      std::string text;
      for (const Diagnostic& d : s.result) {
        if (!text.empty()) text += "; ";
        text += std::string(to_string(d.kind)) + "(" + d.subject + ")";
      }
      valid += s.result.empty() ? 1 : 0;
      report.add_row({{"id", s.record.id}, {"valid", s.result.empty()}, {"diagnostics", text}});
    }
    add_counts(report, batch);
    report.set("valid", valid);
    report.set("with_diagnostics", static_cast<std::int64_t>(batch.ok.size()) - valid);
    emit(ctx, report, batch.rejects);
    return counts_exit(batch);
  } catch (const Error& e) {
    return report_failure(ctx, e);
  }
}

int cmd_eval_parser(const Context& ctx, const std::filesystem::path& input) {
  struct Scores {
    bool match = false;
    PRF prf;
  };
  try {
    auto batch = run_records<Scores>(ctx, input, "input", [&](const EvalRecord& r) {
      const SceneGraph candidate = parse_sg(require(r.candidate_sg, "candidate_sg"));
      const SceneGraph gold = parse_sg(require(r.gold_sg, "gold_sg"));
      return Scores{set_match(candidate, gold), spice_f1(candidate, gold)};
    });
    if (batch.total == 0) fail_empty();
    Report report("eval-parser");
    double matches = 0, p = 0, rc = 0, f = 0;
    for (const auto* s : by_id(batch)) {
      matches += s->result.match ? 1.0 : 0.0;
      p += s->result.prf.precision;
      rc += s->result.prf.recall;
      f += s->result.prf.f1;
      report.add_row({{"id", s->record.id},
                      {"set_match", s->result.match},
                      {"precision", s->result.prf.precision},
                      {"recall", s->result.prf.recall},
                      {"spice_f1", s->result.prf.f1}});
    }
    add_counts(report, batch);
    const double n = static_cast<double>(batch.ok.size());
    if (n > 0) {
      report.set("set_match_accuracy", matches / n);
      report.set("mean_precision", p / n);
      report.set("mean_recall", rc / n);
      report.set("mean_spice_f1", f / n);
    } else {
      for (const char* key : {"set_match_accuracy", "mean_precision", "mean_recall", "mean_spice_f1"}) {
        report.set(key, Undefined{"EmptyInput"});
      }
    }
    emit(ctx, report, batch.rejects);
    return counts_exit(batch);
  } catch (const Error& e) {
    return report_failure(ctx, e);
  }
}

int cmd_caption_eval(const Context& ctx, const std::filesystem::path& input,
                     MetricMode mode, const std::optional<std::string>& combine_with) {
  struct Scored {
    double metric = 0.0;
    double human = 0.0;
  };
  try {
    auto batch = run_records<Scored>(ctx, input, "input", [&](const EvalRecord& r) {
      if (!r.human_score) throw Error(ErrorKind::kMissingField, "human_score");
      const SceneGraph candidate = parse_sg(require(r.candidate_sg, "candidate_sg"));
      const SceneGraph gold = parse_sg(require(r.gold_sg, "gold_sg"));
      double score = metric_score(mode, candidate, gold, r.image_id, *ctx.store);
      if (combine_with) {
        auto it = r.external_scores.find(*combine_with);
        if (it == r.external_scores.end()) {
          throw Error(ErrorKind::kMissingField, "external_scores." + *combine_with);
        }
        score = harmonic_combine(score, it->second);
      }
      return Scored{score, *r.human_score};
    });
    if (batch.total == 0) fail_empty();
    Report report("caption-eval");
    std::vector<double> metric;
    std::vector<double> human;
    for (const auto* s : by_id(batch)) {
      metric.push_back(s->result.metric);
      human.push_back(s->result.human);
      report.add_row({{"id", s->record.id},
                      {"score", s->result.metric},
                      {"human_score", s->result.human}});
    }
    add_counts(report, batch);
    report.set("mode", std::string(mode_name(mode)));
    if (combine_with) report.set("combined_with", *combine_with);
    const Value tau = defined_or([&] { return kendall_tau_c(metric, human); });
    const Value r = defined_or([&] { return pearson(metric, human); });
    report.set("tau_c", tau);
    report.set("pearson", r);
    emit(ctx, report, batch.rejects);
    if (std::holds_alternative<Undefined>(tau) || std::holds_alternative<Undefined>(r)) {
      return kExitInputFailure;
    }
    return kExitOk;
  } catch (const Error& e) {
    return report_failure(ctx, e);
  }
}

int cmd_foil(const Context& ctx, const std::filesystem::path& input,
             MetricMode mode, TiePolicy ties) {
  try {
    auto batch = run_records<ScoredPair>(ctx, input, "input", [&](const EvalRecord& r) {
      const SceneGraph truth = parse_sg(require(r.candidate_sg, "candidate_sg"));
      const SceneGraph foil = parse_sg(require(r.foil_sg, "foil_sg"));
      const SceneGraph gold = parse_sg(require(r.gold_sg, "gold_sg"));
      return ScoredPair{metric_score(mode, truth, gold, r.image_id, *ctx.store),
                        metric_score(mode, foil, gold, r.image_id, *ctx.store)};
    });
    if (batch.total == 0) fail_empty();
    Report report("foil");
    std::vector<ScoredPair> pairs;
    for (const auto* s : by_id(batch)) {
      pairs.push_back(s->result);
      report.add_row({{"id", s->record.id},
                      {"true_score", s->result.true_score},
                      {"foil_score", s->result.foil_score}});
    }
    add_counts(report, batch);
    report.set("mode", std::string(mode_name(mode)));
    report.set("tie_policy", std::string(ties == TiePolicy::kHalf ? "half" : "lose"));
    const Value accuracy = defined_or([&] { return foil_accuracy(pairs, ties); });
    report.set("accuracy", accuracy);
    emit(ctx, report, batch.rejects);
    return std::holds_alternative<Undefined>(accuracy) ? kExitInputFailure : kExitOk;
  } catch (const Error& e) {
    return report_failure(ctx, e);
  }
}

int cmd_retrieve(const Context& ctx, const std::filesystem::path& queries,
                 const std::filesystem::path& gallery,
                 const std::vector<std::size_t>& ks) {
  try {
    for (std::size_t k : ks) {
      if (k == 0) throw Error(ErrorKind::kInvalidArgument, "k must be positive");
    }
    const EmbeddingStore& store = *ctx.store;
    auto images = run_records<Eigen::MatrixXd>(ctx, gallery, "gallery", [&](const EvalRecord& r) {
      require(r.image_id, "image_id");
      const SceneGraph graph = parse_sg(require(r.gold_sg, "gold_sg"));
      if (graph.empty()) throw Error(ErrorKind::kEmptyInput, "empty gallery graph");
      return embed_components(graph, store);
    });
    // An image may carry several graphs (e.g. one per region); it scores as
    // its best-matching graph.
    std::map<std::string, std::vector<const Eigen::MatrixXd*>> by_image;
    for (const auto& s : images.ok) by_image[*s.record.image_id].push_back(&s.result);

    struct Ranked {
      std::string gold;
      std::size_t rank = 0;
    };
    auto batch = run_records<Ranked>(ctx, queries, "queries", [&](const EvalRecord& r) {
      const std::string& gold = require(r.image_id, "image_id");
      const Eigen::MatrixXd query =
          embed_components(parse_sg(require(r.candidate_sg, "candidate_sg")), store);
      std::vector<ScoredItem> items;
      items.reserve(by_image.size());
      for (const auto& [id, graphs] : by_image) {
        double best = 0.0;
        for (const Eigen::MatrixXd* g : graphs) best = std::max(best, soft_spice(query, *g));
        items.push_back({id, best});
      }
      return Ranked{gold, rank_of(items, gold)};
    });
    if (batch.total == 0) fail_empty();

    Report report("retrieve");
    std::vector<std::size_t> ranks;
    for (const auto* s : by_id(batch)) {
      ranks.push_back(s->result.rank);
      report.add_row({{"id", s->record.id},
                      {"gold", s->result.gold},
                      {"rank", static_cast<std::int64_t>(s->result.rank)}});
    }
    add_counts(report, batch);
    report.set("gallery_images", static_cast<std::int64_t>(by_image.size()));
    report.set("gallery_rejected", static_cast<std::int64_t>(images.rejects.size()));
    for (std::size_t k : ks) {
      report.set("recall@" + std::to_string(k),
                 defined_or([&] { return recall_at_k(std::span<const std::size_t>(ranks), k); }));
    }
    std::vector<Reject> rejects = images.rejects;
    rejects.insert(rejects.end(), batch.rejects.begin(), batch.rejects.end());
    emit(ctx, report, rejects);
    return counts_exit(batch);
  } catch (const Error& e) {
    return report_failure(ctx, e);
  }
}

int cmd_stats(const Context& ctx, const std::filesystem::path& input) {
  try {
    auto batch = run_records<MRGraph>(ctx, input, "input", [&](const EvalRecord& r) {
      return parse_mr(require(r.mr, "mr"), ctx.lexicons);
    });
    std::vector<MRGraph> graphs;
    for (const auto* s : by_id(batch)) graphs.push_back(s->result);
    const StatsReport stats = compute_stats(graphs, ctx.convert.morphology);
    Report report("stats");
    add_counts(report, batch);
    for (const auto& [name, s] : stats.categories) {
      report.set(name + ".distinct", s.distinct);
      report.set(name + ".occurrences", s.occurrences);
      report.set(name + ".occ_per_label", s.occurrences_per_label);
      report.set(name + ".labels_per_scene", s.labels_per_scene);
      report.set(name + ".occ_per_scene", s.occurrences_per_scene);
    }
    emit(ctx, report, batch.rejects);
    return counts_exit(batch);
  } catch (const Error& e) {
    return report_failure(ctx, e);
  }
}

int cmd_diversity(const Context& ctx, const std::filesystem::path& input,
                  DiversityCategory category, double ttr_scale,
                  const std::string& graph_field) {
  try {
    if (graph_field != "candidate_sg" && graph_field != "gold_sg") {
      throw Error(ErrorKind::kInvalidArgument, "graph field must be candidate_sg or gold_sg");
    }
    auto batch = run_records<std::vector<std::string>>(ctx, input, "input", [&](const EvalRecord& r) {
      const auto& field = graph_field == "gold_sg" ? r.gold_sg : r.candidate_sg;
      return diversity_tokens(parse_sg(require(field, graph_field.c_str())), category);
    });
    if (batch.total == 0) fail_empty();
    // Stream order: file order, then canonical order within each graph.
    std::vector<std::string> tokens;
    for (const auto& s : batch.ok) tokens.insert(tokens.end(), s.result.begin(), s.result.end());
    Report report("diversity");
    add_counts(report, batch);
    report.set("category", std::string(category_name(category)));
    report.set("tokens", static_cast<std::int64_t>(tokens.size()));
    report.set("yules_i", defined_or([&] { return yules_i(tokens); }));
    report.set("ttr", defined_or([&] { return ttr(tokens) * ttr_scale; }));
    report.set("mtld", defined_or([&] { return mtld(tokens); }));
    emit(ctx, report, batch.rejects);
    return counts_exit(batch);
  } catch (const Error& e) {
    return report_failure(ctx, e);
  }
}

}  // namespace factual::harness
