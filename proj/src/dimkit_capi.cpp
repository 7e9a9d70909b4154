// Copyright 2026 The dimkit Authors.
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

#include "dimkit/dimkit.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "dimkit/augment.hpp"
#include "dimkit/embedding.hpp"
#include "dimkit/equation.hpp"
#include "dimkit/io.hpp"
#include "dimkit/linking.hpp"
#include "dimkit/quantity_text.hpp"
#include "dimkit/scoring.hpp"
#include "dimkit/tasks.hpp"
#include "dimkit/text_util.hpp"
#include "dimkit/triplets.hpp"
#include "dimkit/unit_kb.hpp"

struct dimkit_kb {
  dimkit::KnowledgeBase kb;
};

struct dimkit_embedder {
  std::unique_ptr<dimkit::EmbeddingProvider> provider;
};

namespace {

thread_local std::string last_error;

dimkit_status status_of(dimkit::ErrorCode code) {
  using dimkit::ErrorCode;
  switch (code) {
    case ErrorCode::kParse: return DIMKIT_ERR_PARSE;
    case ErrorCode::kValidation: return DIMKIT_ERR_VALIDATION;
    case ErrorCode::kRange: return DIMKIT_ERR_RANGE;
    case ErrorCode::kIncomparable: return DIMKIT_ERR_INCOMPARABLE;
    case ErrorCode::kAffineUnsupported: return DIMKIT_ERR_AFFINE_UNSUPPORTED;
    case ErrorCode::kUnknownUnit: return DIMKIT_ERR_UNKNOWN_UNIT;
    case ErrorCode::kUnknownKind: return DIMKIT_ERR_UNKNOWN_KIND;
    case ErrorCode::kDomain: return DIMKIT_ERR_DOMAIN;
    case ErrorCode::kDegenerate: return DIMKIT_ERR_DEGENERATE;
    case ErrorCode::kDuplicateId: return DIMKIT_ERR_DUPLICATE_ID;
    case ErrorCode::kConfiguration: return DIMKIT_ERR_CONFIGURATION;
    case ErrorCode::kGeneration: return DIMKIT_ERR_GENERATION;
    case ErrorCode::kMisaligned: return DIMKIT_ERR_MISALIGNED;
    case ErrorCode::kNoAlternative: return DIMKIT_ERR_NO_ALTERNATIVE;
    case ErrorCode::kIo: return DIMKIT_ERR_IO;
    case ErrorCode::kInvalidArgument: return DIMKIT_ERR_INVALID_ARGUMENT;
  }
  return DIMKIT_ERR_INTERNAL;
}

dimkit_status fail(dimkit_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
dimkit_status guarded(F &&body) {
  last_error.clear();
  try {
    return body();
  } catch (const dimkit::Error &e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc &) {
    return fail(DIMKIT_ERR_INTERNAL, "out of memory");
  } catch (const std::exception &e) {
    return fail(DIMKIT_ERR_INTERNAL, e.what());
  }
}

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

dimkit_status null_argument(const char *name) {
  return fail(DIMKIT_ERR_INVALID_ARGUMENT, std::string(name) + " is NULL");
}

double pick_threshold(double threshold) {
  return threshold < 0.0 ? dimkit::kDefaultLinkThreshold : threshold;
}

std::string dump(const dimkit::Json &j) {
  return j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

dimkit::UnitId resolve(const dimkit::KnowledgeBase &kb,
                       const dimkit::EmbeddingProvider &emb, double threshold,
                       const std::string &surface) {
  if (kb.find(surface)) return surface;
  std::vector<dimkit::UnitId> ids = dimkit::lookup_surface(kb, surface);
  if (!ids.empty()) {
    return *std::min_element(ids.begin(), ids.end(),
                             [&](const std::string &a, const std::string &b) {
                               const double fa = kb.at(a).frequency;
                               const double fb = kb.at(b).frequency;
                               return fa != fb ? fa > fb : a < b;
                             });
  }
  if (!dimkit::trim(surface).empty()) {
    const dimkit::Linker linker(kb, emb, pick_threshold(threshold));
    std::vector<dimkit::LinkCandidate> ranked = linker.link({surface, ""});
    if (!ranked.empty()) return ranked.front().unit_id;
  }
  throw dimkit::Error(dimkit::ErrorCode::kUnknownUnit,
                      "cannot resolve unit '" + surface + "'");
}

}  // namespace

extern "C" {

const char *dimkit_last_error(void) { return last_error.c_str(); }

const char *dimkit_status_name(dimkit_status status) {
  switch (status) {
    case DIMKIT_OK: return "ok";
    case DIMKIT_ERR_PARSE: return "parse";
    case DIMKIT_ERR_VALIDATION: return "validation";
    case DIMKIT_ERR_RANGE: return "range";
    case DIMKIT_ERR_INCOMPARABLE: return "incomparable";
    case DIMKIT_ERR_AFFINE_UNSUPPORTED: return "affine_unsupported";
    case DIMKIT_ERR_UNKNOWN_UNIT: return "unknown_unit";
    case DIMKIT_ERR_UNKNOWN_KIND: return "unknown_kind";
    case DIMKIT_ERR_DOMAIN: return "domain";
    case DIMKIT_ERR_DEGENERATE: return "degenerate";
    case DIMKIT_ERR_DUPLICATE_ID: return "duplicate_id";
    case DIMKIT_ERR_CONFIGURATION: return "configuration";
    case DIMKIT_ERR_GENERATION: return "generation";
    case DIMKIT_ERR_MISALIGNED: return "misaligned";
    case DIMKIT_ERR_NO_ALTERNATIVE: return "no_alternative";
    case DIMKIT_ERR_IO: return "io";
    case DIMKIT_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case DIMKIT_ERR_EMPTY_RESULT: return "empty_result";
    case DIMKIT_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void dimkit_string_free(char *s) { std::free(s); }

dimkit_status dimkit_kb_load(const char *path, const char *frequency_path,
                             dimkit_kb **out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] {
    std::optional<std::filesystem::path> sidecar;
    if (frequency_path) sidecar = frequency_path;
    *out = new dimkit_kb{dimkit::load_kb(path, sidecar)};
    return DIMKIT_OK;
  });
}

void dimkit_kb_free(dimkit_kb *kb) { delete kb; }

size_t dimkit_kb_size(const dimkit_kb *kb) { return kb ? kb->kb.size() : 0; }

dimkit_status dimkit_unit_info(const dimkit_kb *kb, const char *unit_id,
                               char **json_out) {
  if (!kb) return null_argument("kb");
  if (!unit_id) return null_argument("unit_id");
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    const dimkit::UnitRecord &r = kb->kb.at(unit_id);
    dimkit::Json j;
    j["unit_id"] = r.unit_id;
    j["label_en"] = r.label_en;
    j["label_zh"] = r.label_zh;
    j["symbols"] = r.symbols;
    j["kind"] = r.quantity_kind;
    j["dimension"] = dimkit::format_dimension(r.dimension);
    j["symbolic"] = dimkit::format_symbolic(r.dimension);
    j["conversion_val"] = r.conversion_val;
    j["affine_offset"] = r.affine_offset;
    j["frequency"] = r.frequency;
    *json_out = dup_string(dump(j));
    return DIMKIT_OK;
  });
}

dimkit_status dimkit_embedder_trigram(size_t dimension, dimkit_embedder **out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new dimkit_embedder{
        std::make_unique<dimkit::TrigramEmbedder>(dimension ? dimension : 256)};
    return DIMKIT_OK;
  });
}

dimkit_status dimkit_embedder_load(const char *path, dimkit_embedder **out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new dimkit_embedder{std::make_unique<dimkit::VectorFileEmbedder>(
        dimkit::VectorFileEmbedder::load(path))};
    return DIMKIT_OK;
  });
}

void dimkit_embedder_free(dimkit_embedder *emb) { delete emb; }

dimkit_status dimkit_link(const dimkit_kb *kb, const dimkit_embedder *emb,
                          double threshold, const char *surface,
                          const char *context, size_t top_k, char **json_out) {
  if (!kb) return null_argument("kb");
  if (!emb) return null_argument("emb");
  if (!surface) return null_argument("surface");
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    const dimkit::Linker linker(kb->kb, *emb->provider, pick_threshold(threshold));
    std::vector<dimkit::LinkCandidate> ranked =
        linker.link({surface, context ? context : ""});
    if (ranked.empty()) {
      return fail(DIMKIT_ERR_EMPTY_RESULT,
                  std::string("no unit links to '") + surface + "'");
    }
    if (top_k && ranked.size() > top_k) ranked.resize(top_k);
    dimkit::Json rows = dimkit::Json::array();
    for (const dimkit::LinkCandidate &c : ranked) {
      rows.push_back({{"unit_id", c.unit_id},
                      {"prior", c.prior},
                      {"p_mention", c.p_mention},
                      {"p_context", c.p_context},
                      {"score", c.score}});
    }
    *json_out = dup_string(dump(rows));
    return DIMKIT_OK;
  });
}

dimkit_status dimkit_resolve_unit(const dimkit_kb *kb, const dimkit_embedder *emb,
                                  double threshold, const char *surface,
                                  char **unit_id_out) {
  if (!kb) return null_argument("kb");
  if (!emb) return null_argument("emb");
  if (!surface) return null_argument("surface");
  if (!unit_id_out) return null_argument("unit_id_out");
  return guarded([&] {
    *unit_id_out =
        dup_string(resolve(kb->kb, *emb->provider, threshold, surface));
    return DIMKIT_OK;
  });
}

dimkit_status dimkit_convert(const dimkit_kb *kb, double value,
                             const char *from_unit, const char *to_unit,
                             double *out) {
  if (!kb) return null_argument("kb");
  if (!from_unit) return null_argument("from_unit");
  if (!to_unit) return null_argument("to_unit");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = value * dimkit::conversion_factor(kb->kb, from_unit, to_unit);
    return DIMKIT_OK;
  });
}

dimkit_status dimkit_dimension_of(const dimkit_kb *kb, const char *expression,
                                  char **json_out) {
  if (!kb) return null_argument("kb");
  if (!expression) return null_argument("expression");
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    const dimkit::DimensionExpression e =
        dimkit::evaluate_dimension_expression(kb->kb, expression);
    dimkit::Json j;
    j["dimension"] = dimkit::format_dimension(e.dimension);
    j["symbolic"] = dimkit::format_symbolic(e.dimension, " ");
    j["units"] = dimkit::units_of_dimension(kb->kb, e.dimension);
    *json_out = dup_string(dump(j));
    return DIMKIT_OK;
  });
}

dimkit_status dimkit_generate_tasks(const dimkit_kb *kb, const char *task,
                                    const char *annotated_path, uint64_t seed,
                                    size_t n, size_t candidates,
                                    char **jsonl_out) {
  if (!kb) return null_argument("kb");
  if (!task) return null_argument("task");
  if (!jsonl_out) return null_argument("jsonl_out");
  return guarded([&] {
    std::vector<dimkit::AnnotatedSentence> annotated;
    if (annotated_path) annotated = dimkit::read_annotated(annotated_path);
    dimkit::GenerationOptions opts;
    if (candidates) opts.candidates = candidates;

    std::vector<dimkit::TaskType> types;
    if (std::string(task) == "all") {
      for (dimkit::TaskType t : dimkit::kAllTaskTypes) {
        const bool text_task = t == dimkit::TaskType::kQuantityExtraction ||
                               t == dimkit::TaskType::kDimensionPrediction;
        if (!text_task || annotated_path) types.push_back(t);
      }
    } else {
      types.push_back(dimkit::parse_task_type(task));
    }
    std::vector<dimkit::Json> lines;
    for (dimkit::TaskType t : types) {
      for (const dimkit::TaskInstance &inst : dimkit::generate_tasks(
               t, kb->kb, annotated_path ? &annotated : nullptr, seed, n, opts)) {
        lines.push_back(dimkit::task_to_json(inst));
      }
    }
    *jsonl_out = dup_string(dimkit::to_jsonl(lines));
    return DIMKIT_OK;
  });
}

dimkit_status dimkit_annotate(const dimkit_kb *kb, const dimkit_embedder *emb,
                              double threshold, const char *corpus_path,
                              const char *oracle, char **retained_jsonl,
                              char **rule_jsonl, char **review_tsv) {
  if (!kb) return null_argument("kb");
  if (!emb) return null_argument("emb");
  if (!corpus_path) return null_argument("corpus_path");
  if (!oracle) return null_argument("oracle");
  if (!retained_jsonl || !rule_jsonl || !review_tsv) {
    return null_argument("output");
  }
  return guarded([&] {
    const std::vector<std::string> corpus = dimkit::read_lines(corpus_path);
    std::unique_ptr<dimkit::MaskedFillOracle> filler = dimkit::make_oracle(oracle);
    const dimkit::Linker linker(kb->kb, *emb->provider, pick_threshold(threshold));
    const dimkit::AnnotationResult r =
        dimkit::annotate_corpus(corpus, linker, *filler);
    std::vector<dimkit::Json> retained, rule;
    for (const auto &s : r.retained) retained.push_back(dimkit::sentence_to_json(s));
    for (const auto &s : r.rule_annotated) rule.push_back(dimkit::sentence_to_json(s));
    std::string a = dimkit::to_jsonl(retained);
    std::string b = dimkit::to_jsonl(rule);
    std::string c = dimkit::review_to_tsv(r.review);
    *retained_jsonl = dup_string(a);
    *rule_jsonl = dup_string(b);
    *review_tsv = dup_string(c);
    return DIMKIT_OK;
  });
}

dimkit_status dimkit_apply_review(const char *rule_jsonl_path,
                                  const char *review_tsv_path, char **jsonl_out) {
  if (!rule_jsonl_path) return null_argument("rule_jsonl_path");
  if (!review_tsv_path) return null_argument("review_tsv_path");
  if (!jsonl_out) return null_argument("jsonl_out");
  return guarded([&] {
    const auto rule = dimkit::read_annotated(rule_jsonl_path);
    const auto review = dimkit::parse_review_tsv(
        dimkit::read_file(review_tsv_path), review_tsv_path);
    std::vector<dimkit::Json> lines;
    for (const auto &s : dimkit::apply_review(rule, review)) {
      lines.push_back(dimkit::sentence_to_json(s));
    }
    *jsonl_out = dup_string(dimkit::to_jsonl(lines));
    return DIMKIT_OK;
  });
}

dimkit_status dimkit_bootstrap(const dimkit_kb *kb, const dimkit_embedder *emb,
                               double threshold, const char *store_path,
                               double tau, int iterations, size_t seed_unit_count,
                               char **json_out) {
  if (!kb) return null_argument("kb");
  if (!emb) return null_argument("emb");
  if (!store_path) return null_argument("store_path");
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    const dimkit::MemoryTripletStore store =
        dimkit::MemoryTripletStore::load_tsv(store_path);
    const dimkit::Linker linker(kb->kb, *emb->provider, pick_threshold(threshold));
    dimkit::BootstrapConfig config;
    config.tau = tau;
    config.iterations = iterations;
    if (seed_unit_count) config.seed_unit_count = seed_unit_count;
    const dimkit::BootstrapResult r = dimkit::bootstrap_retrieve(store, linker, config);
    dimkit::Json j;
    j["predicates"] = r.predicates;
    j["mentions"] = r.mentions;
    dimkit::Json triplets = dimkit::Json::array();
    for (const dimkit::Triplet &t : r.triplets) {
      triplets.push_back(dimkit::triplet_to_json(t));
    }
    j["triplets"] = triplets;
    *json_out = dup_string(dump(j));
    return DIMKIT_OK;
  });
}

dimkit_status dimkit_render_sentences(const char *triplets_json, uint64_t seed,
                                      const char *command, char **jsonl_out) {
  if (!triplets_json) return null_argument("triplets_json");
  if (!jsonl_out) return null_argument("jsonl_out");
  return guarded([&] {
    std::vector<dimkit::Triplet> triplets;
    try {
      for (const dimkit::Json &t : dimkit::Json::parse(triplets_json)) {
        triplets.push_back({t.at("subject").get<std::string>(),
                            t.at("predicate").get<std::string>(),
                            t.at("object").get<std::string>()});
      }
    } catch (const nlohmann::json::exception &e) {
      throw dimkit::Error(dimkit::ErrorCode::kParse,
                          std::string("bad triplet list: ") + e.what());
    }
    const auto &templates = dimkit::default_sentence_templates();
    std::vector<dimkit::Json> lines;
    for (std::size_t i = 0; i < triplets.size(); ++i) {
      const dimkit::Triplet &t = triplets[i];
      dimkit::Rng rng(dimkit::derive_seed(seed, "render", i));
      dimkit::Json j = dimkit::triplet_to_json(t);
      j["sentence"] =
          command ? dimkit::render_triplet_sentence_with_command(t, command,
                                                                 templates, rng)
                  : dimkit::render_triplet_sentence(t, templates, rng);
      lines.push_back(std::move(j));
    }
    *jsonl_out = dup_string(dimkit::to_jsonl(lines));
    return DIMKIT_OK;
  });
}

dimkit_status dimkit_augment(const dimkit_kb *kb, const dimkit_embedder *emb,
                             double threshold, const char *dataset_path,
                             double eta, const char *methods, uint64_t seed,
                             int append, char **problems_jsonl,
                             char **records_jsonl) {
  if (!kb) return null_argument("kb");
  if (!emb) return null_argument("emb");
  if (!dataset_path) return null_argument("dataset_path");
  if (!problems_jsonl || !records_jsonl) return null_argument("output");
  return guarded([&] {
    const dimkit::Linker linker(kb->kb, *emb->provider, pick_threshold(threshold));
    std::vector<dimkit::MwpProblem> problems;
    for (const dimkit::Json &j : dimkit::read_jsonl(dataset_path)) {
      problems.push_back(
          dimkit::prepare_problem(dimkit::problem_from_json(j), linker));
    }
    dimkit::AugmentOptions opts;
    opts.eta = eta;
    opts.policy = append ? dimkit::AugmentPolicy::kAppend
                         : dimkit::AugmentPolicy::kInPlace;
    if (methods) {
      opts.methods.clear();
      for (const std::string &name : dimkit::split(methods, ',')) {
        const std::string_view n = dimkit::trim(name);
        if (!n.empty()) opts.methods.push_back(dimkit::parse_augment_method(n));
      }
    }
    const dimkit::AugmentResult r =
        dimkit::augment_dataset(problems, kb->kb, seed, opts);
    std::vector<dimkit::Json> out, records;
    for (const auto &p : r.problems) out.push_back(dimkit::problem_to_json(p));
    for (const auto &rec : r.records) records.push_back(dimkit::record_to_json(rec));
    std::string a = dimkit::to_jsonl(out);
    std::string b = dimkit::to_jsonl(records);
    *problems_jsonl = dup_string(a);
    *records_jsonl = dup_string(b);
    return DIMKIT_OK;
  });
}

dimkit_status dimkit_score(const char *gold_path, const char *predictions_path,
                           char **json_out) {
  if (!gold_path) return null_argument("gold_path");
  if (!predictions_path) return null_argument("predictions_path");
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    const dimkit::ScoreReport r = dimkit::score_predictions(
        dimkit::read_tasks(gold_path), dimkit::read_predictions(predictions_path));
    *json_out = dup_string(dump(dimkit::report_to_json(r)));
    return DIMKIT_OK;
  });
}

dimkit_status dimkit_tokenize_equation(const char *equation, char **json_out) {
  if (!equation) return null_argument("equation");
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    *json_out = dup_string(dump(dimkit::Json(dimkit::tokenize_equation(equation))));
    return DIMKIT_OK;
  });
}

}  // extern "C"
