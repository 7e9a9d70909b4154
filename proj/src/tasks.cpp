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

#include "dimkit/tasks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>

#include "dimkit/format.hpp"
#include "dimkit/rng.hpp"
#include "dimkit/text_util.hpp"

namespace dimkit {

namespace {

constexpr double kAnswerTolerance = 1e-9;

std::string instance_id(TaskType type, std::size_t i) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s-%06zu", task_type_name(type), i);
  return buf;
}

std::string rationale(const std::string &reasoning, const std::string &answer) {
  return "<bos> " + reasoning + " <sep> " + answer + " <eos>";
}

const std::string &label(const KnowledgeBase &kb, std::string_view id) {
  return kb.at(id).label_en;
}

std::vector<const UnitRecord *> all_units(const KnowledgeBase &kb) {
  std::vector<const UnitRecord *> out;
  for (const UnitRecord &r : kb.records()) out.push_back(&r);
  return out;
}

std::vector<const UnitRecord *> multiplicative_units(const KnowledgeBase &kb) {
  std::vector<const UnitRecord *> out;
  for (const UnitRecord &r : kb.records()) {
    if (r.affine_offset == 0.0) out.push_back(&r);
  }
  return out;
}

std::map<DimensionVector, std::vector<const UnitRecord *>> group_by_dimension(
    const std::vector<const UnitRecord *> &units) {
  std::map<DimensionVector, std::vector<const UnitRecord *>> groups;
  for (const UnitRecord *r : units) groups[r->dimension].push_back(r);
  return groups;
}

// Distractors satisfying `admissible`, preferring dimensions not yet in
// `used_dims` and distinct from each other. Empty when too few exist.
std::vector<UnitId> pick_distractors(
    const std::vector<const UnitRecord *> &pool, Rng &rng,
    const std::function<bool(const UnitRecord &)> &admissible,
    std::set<DimensionVector> used_dims, std::size_t count) {
  std::vector<const UnitRecord *> shuffled = pool;
  rng.shuffle(shuffled);
  std::vector<UnitId> out;
  std::set<UnitId> chosen;
  for (const UnitRecord *r : shuffled) {
    if (out.size() == count) break;
    if (!admissible(*r) || used_dims.count(r->dimension)) continue;
    used_dims.insert(r->dimension);
    chosen.insert(r->unit_id);
    out.push_back(r->unit_id);
  }
  for (const UnitRecord *r : shuffled) {
    if (out.size() == count) break;
    if (!admissible(*r) || chosen.count(r->unit_id)) continue;
    chosen.insert(r->unit_id);
    out.push_back(r->unit_id);
  }
  if (out.size() < count) out.clear();
  return out;
}

void place_candidates(TaskInstance &inst, const std::string &answer,
                      std::vector<std::string> distractors, Rng &rng) {
  inst.candidates = std::move(distractors);
  inst.candidates.push_back(answer);
  rng.shuffle(inst.candidates);
  inst.answer_index = static_cast<int>(
      std::find(inst.candidates.begin(), inst.candidates.end(), answer) -
      inst.candidates.begin());
}

std::string candidate_list(const KnowledgeBase &kb,
                           const std::vector<std::string> &ids) {
  std::vector<std::string> labels;
  for (const std::string &id : ids) labels.push_back(label(kb, id));
  return join(labels, ", ");
}

using Builder = std::function<std::optional<TaskInstance>(Rng &)>;

std::vector<TaskInstance> run_generator(const KnowledgeBase &kb, TaskType type,
                                        std::uint64_t master_seed,
                                        std::size_t n,
                                        const GenerationOptions &opts,
                                        const Builder &build) {
  std::vector<TaskInstance> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t seed = derive_seed(master_seed, task_type_name(type), i);
    Rng rng(seed);
    bool done = false;
    for (int attempt = 0; attempt < opts.resample_budget && !done; ++attempt) {
      std::optional<TaskInstance> inst = build(rng);
      if (!inst) continue;
      inst->id = instance_id(type, i);
      inst->type = type;
      inst->seed = seed;
      if (!verify_instance(kb, *inst)) continue;
      out.push_back(std::move(*inst));
      done = true;
    }
    if (!done) {
      throw Error(ErrorCode::kGeneration,
                  std::string("resample budget exhausted for ") +
                      task_type_name(type) + " instance " + std::to_string(i));
    }
  }
  return out;
}

std::size_t distinct_dimensions(const std::vector<const UnitRecord *> &units) {
  std::set<DimensionVector> dims;
  for (const UnitRecord *r : units) dims.insert(r->dimension);
  return dims.size();
}

}  // namespace

const char *task_type_name(TaskType t) {
  switch (t) {
    case TaskType::kQuantityExtraction: return "quantity_extraction";
    case TaskType::kKindMatch: return "kind_match";
    case TaskType::kComparable: return "comparable";
    case TaskType::kDimensionPrediction: return "dimension_prediction";
    case TaskType::kDimensionArithmetic: return "dimension_arithmetic";
    case TaskType::kMagnitudeComparison: return "magnitude_comparison";
    case TaskType::kUnitConversion: return "unit_conversion";
  }
  return "unknown";
}

TaskType parse_task_type(std::string_view name) {
  for (TaskType t : kAllTaskTypes) {
    if (name == task_type_name(t)) return t;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown task type '" + std::string(name) + "'");
}

void GenerationOptions::validate() const {
  if (candidates < 2) {
    throw Error(ErrorCode::kInvalidArgument, "need at least 2 candidates");
  }
  if (max_terms < 2) {
    throw Error(ErrorCode::kInvalidArgument, "max_terms must be >= 2");
  }
  if (resample_budget < 1) {
    throw Error(ErrorCode::kInvalidArgument, "resample budget must be positive");
  }
}

std::vector<TaskInstance> gen_kind_match(const KnowledgeBase &kb,
                                         std::uint64_t master_seed,
                                         std::size_t n,
                                         const GenerationOptions &opts) {
  opts.validate();
  if (kb.kinds().size() < opts.candidates) {
    throw Error(ErrorCode::kGeneration, "kind_match needs at least " +
                                            std::to_string(opts.candidates) +
                                            " quantity kinds");
  }
  const std::vector<const UnitRecord *> pool = all_units(kb);
  return run_generator(
      kb, TaskType::kKindMatch, master_seed, n, opts,
      [&](Rng &rng) -> std::optional<TaskInstance> {
        const QuantityKind &kind = rng.pick(kb.kinds());
        const UnitId answer = rng.pick(kind.units);
        std::vector<UnitId> distractors = pick_distractors(
            pool, rng,
            [&](const UnitRecord &r) { return r.quantity_kind != kind.kind_id; },
            {kind.dimension}, opts.candidates - 1);
        if (distractors.empty()) return std::nullopt;
        TaskInstance inst;
        place_candidates(inst, answer, std::move(distractors), rng);
        inst.prompt["text"] = "Which of the following units measures " +
                              kind.name + "? Options: " +
                              candidate_list(kb, inst.candidates) + ".";
        inst.prompt["kind"] = kind.kind_id;
        std::vector<std::string> facts;
        for (const std::string &c : inst.candidates) {
          const UnitRecord &r = kb.at(c);
          facts.push_back(r.label_en + " measures " +
                          kb.find_kind(r.quantity_kind)->name);
        }
        inst.rationale = rationale(join(facts, "; ") + ".", label(kb, answer));
        return inst;
      });
}

std::vector<TaskInstance> gen_comparable(const KnowledgeBase &kb,
                                         std::uint64_t master_seed,
                                         std::size_t n,
                                         const GenerationOptions &opts) {
  opts.validate();
  const std::vector<const UnitRecord *> pool = all_units(kb);
  std::vector<const UnitRecord *> anchors;
  for (const auto &[dim, units] : group_by_dimension(pool)) {
    if (units.size() >= 2) anchors.insert(anchors.end(), units.begin(), units.end());
  }
  if (anchors.empty() || distinct_dimensions(pool) < opts.candidates) {
    throw Error(ErrorCode::kGeneration,
                "comparable needs a shared dimension and " +
                    std::to_string(opts.candidates - 1) + " other dimensions");
  }
  return run_generator(
      kb, TaskType::kComparable, master_seed, n, opts,
      [&](Rng &rng) -> std::optional<TaskInstance> {
        const UnitRecord &anchor = *rng.pick(anchors);
        std::vector<UnitId> same;
        for (const UnitId &id : units_of_dimension(kb, anchor.dimension)) {
          if (id != anchor.unit_id) same.push_back(id);
        }
        const UnitId answer = rng.pick(same);
        std::vector<UnitId> distractors = pick_distractors(
            pool, rng,
            [&](const UnitRecord &r) { return r.dimension != anchor.dimension; },
            {anchor.dimension}, opts.candidates - 1);
        if (distractors.empty()) return std::nullopt;
        TaskInstance inst;
        place_candidates(inst, answer, std::move(distractors), rng);
        inst.prompt["text"] = "Which of the following units has the same "
                              "dimension as " + anchor.label_en + "? Options: " +
                              candidate_list(kb, inst.candidates) + ".";
        inst.prompt["anchor"] = anchor.unit_id;
        std::vector<std::string> facts{anchor.label_en + " is " +
                                       format_symbolic(anchor.dimension)};
        for (const std::string &c : inst.candidates) {
          facts.push_back(label(kb, c) + " is " +
                          format_symbolic(kb.at(c).dimension));
        }
        inst.rationale = rationale(join(facts, "; ") + ".", label(kb, answer));
        return inst;
      });
}

std::vector<TaskInstance> gen_dimension_prediction(
    const std::vector<AnnotatedSentence> &annotated, const KnowledgeBase &kb,
    std::uint64_t master_seed, std::size_t n, const GenerationOptions &opts) {
  opts.validate();
  struct Site {
    const AnnotatedSentence *sentence;
    const QuantityMention *mention;
  };
  std::vector<Site> sites;
  for (const AnnotatedSentence &s : annotated) {
    for (const QuantityMention &m : s.mentions) {
      if (m.linked_unit && kb.find(*m.linked_unit)) sites.push_back({&s, &m});
    }
  }
  if (sites.empty() && n > 0) {
    throw Error(ErrorCode::kGeneration,
                "dimension_prediction needs annotated sentences with linked "
                "quantities");
  }
  const std::vector<const UnitRecord *> pool = all_units(kb);
  return run_generator(
      kb, TaskType::kDimensionPrediction, master_seed, n, opts,
      [&](Rng &rng) -> std::optional<TaskInstance> {
        const Site &site = rng.pick(sites);
        const UnitRecord &original = kb.at(*site.mention->linked_unit);
        const UnitId answer =
            rng.pick(units_of_dimension(kb, original.dimension));
        std::vector<UnitId> distractors = pick_distractors(
            pool, rng,
            [&](const UnitRecord &r) { return r.dimension != original.dimension; },
            {original.dimension}, opts.candidates - 1);
        if (distractors.empty()) return std::nullopt;
        const Span q = site.mention->quantity_span();
        const std::string masked = mask_span(site.sentence->text, q);
        TaskInstance inst;
        place_candidates(inst, answer, std::move(distractors), rng);
        inst.prompt["text"] = "Which unit is consistent with the dimension of "
                              "the masked quantity? " + masked + " Options: " +
                              candidate_list(kb, inst.candidates) + ".";
        inst.prompt["masked_text"] = masked;
        inst.prompt["original_unit"] = original.unit_id;
        inst.prompt["line_no"] = site.sentence->line_no;
        inst.rationale = rationale(
            "The masked quantity was " +
                site.sentence->text.substr(q.begin, q.size()) + ", dimension " +
                format_symbolic(original.dimension) + "; " + label(kb, answer) +
                " has the same dimension.",
            label(kb, answer));
        return inst;
      });
}

std::vector<TaskInstance> gen_dimension_arithmetic(
    const KnowledgeBase &kb, std::uint64_t master_seed, std::size_t n,
    const GenerationOptions &opts) {
  opts.validate();
  const std::vector<const UnitRecord *> pool = multiplicative_units(kb);
  if (pool.size() < 2 || distinct_dimensions(pool) < opts.candidates) {
    throw Error(ErrorCode::kGeneration,
                "dimension_arithmetic needs more unit dimensions");
  }
  return run_generator(
      kb, TaskType::kDimensionArithmetic, master_seed, n, opts,
      [&](Rng &rng) -> std::optional<TaskInstance> {
        const int terms = rng.range(2, opts.max_terms);
        std::vector<const UnitRecord *> units;
        std::vector<char> ops;
        for (int t = 0; t < terms; ++t) {
          units.push_back(rng.pick(pool));
          if (t > 0) ops.push_back(rng.bernoulli(0.5) ? '*' : '/');
        }
        DimensionVector dim = units[0]->dimension;
        try {
          for (std::size_t k = 1; k < units.size(); ++k) {
            dim = ops[k - 1] == '*' ? dim_mul(dim, units[k]->dimension)
                                    : dim_div(dim, units[k]->dimension);
          }
        } catch (const Error &) {
          return std::nullopt;
        }
        std::vector<UnitId> targets;
        for (const UnitId &id : units_of_dimension(kb, dim)) {
          if (kb.at(id).affine_offset == 0.0) targets.push_back(id);
        }
        if (targets.empty()) return std::nullopt;
        const UnitId answer = rng.pick(targets);
        std::vector<UnitId> distractors = pick_distractors(
            pool, rng, [&](const UnitRecord &r) { return r.dimension != dim; },
            {dim}, opts.candidates - 1);
        if (distractors.empty()) return std::nullopt;

        std::string expr = units[0]->label_en;
        Json unit_ids = Json::array({units[0]->unit_id});
        Json op_names = Json::array();
        for (std::size_t k = 1; k < units.size(); ++k) {
          expr += ops[k - 1] == '*' ? " × " : " ÷ ";
          expr += units[k]->label_en;
          unit_ids.push_back(units[k]->unit_id);
          op_names.push_back(std::string(1, ops[k - 1]));
        }
        TaskInstance inst;
        place_candidates(inst, answer, std::move(distractors), rng);
        inst.prompt["text"] = "Which unit has the dimension of " + expr +
                              "? Options: " +
                              candidate_list(kb, inst.candidates) + ".";
        inst.prompt["expression"] = expr;
        inst.prompt["units"] = unit_ids;
        inst.prompt["ops"] = op_names;
        inst.rationale = rationale(
            expr + " has dimension " + format_symbolic(dim) + ", the dimension of " +
                label(kb, answer) + ".",
            label(kb, answer));
        return inst;
      });
}

std::vector<TaskInstance> gen_magnitude_comparison(
    const KnowledgeBase &kb, std::uint64_t master_seed, std::size_t n,
    const GenerationOptions &opts) {
  opts.validate();
  std::vector<std::vector<const UnitRecord *>> groups;
  for (auto &[dim, units] : group_by_dimension(multiplicative_units(kb))) {
    if (units.size() >= opts.candidates) groups.push_back(units);
  }
  if (groups.empty()) {
    throw Error(ErrorCode::kGeneration,
                "magnitude_comparison needs a dimension with " +
                    std::to_string(opts.candidates) + " units");
  }
  return run_generator(
      kb, TaskType::kMagnitudeComparison, master_seed, n, opts,
      [&](Rng &rng) -> std::optional<TaskInstance> {
        std::vector<const UnitRecord *> group = rng.pick(groups);
        rng.shuffle(group);
        group.resize(opts.candidates);
        const UnitRecord *best = group[0];
        for (const UnitRecord *r : group) {
          if (r->conversion_val > best->conversion_val) best = r;
        }
        for (const UnitRecord *r : group) {
          if (r != best && nearly_equal(r->conversion_val, best->conversion_val,
                                        kAnswerTolerance)) {
            return std::nullopt;
          }
        }
        std::vector<UnitId> distractors;
        for (const UnitRecord *r : group) {
          if (r != best) distractors.push_back(r->unit_id);
        }
        TaskInstance inst;
        place_candidates(inst, best->unit_id, std::move(distractors), rng);
        std::vector<std::string> quantities;
        std::vector<std::string> facts;
        for (const std::string &c : inst.candidates) {
          const UnitRecord &r = kb.at(c);
          quantities.push_back("1 " + r.label_en);
          const QuantityKind *kind = kb.find_kind(r.quantity_kind);
          facts.push_back("1 " + r.label_en + " = " +
                          format_shortest(r.conversion_val) + " " +
                          label(kb, kind->standard_unit));
        }
        inst.prompt["text"] = "Which of the following quantities has the "
                              "largest magnitude? Options: " +
                              join(quantities, ", ") + ".";
        inst.rationale =
            rationale(join(facts, "; ") + ".", best->label_en);
        return inst;
      });
}

std::vector<TaskInstance> gen_unit_conversion(const KnowledgeBase &kb,
                                              std::uint64_t master_seed,
                                              std::size_t n,
                                              const GenerationOptions &opts) {
  opts.validate();
  std::vector<std::vector<const UnitRecord *>> groups;
  for (auto &[dim, units] : group_by_dimension(multiplicative_units(kb))) {
    if (units.size() >= 2) groups.push_back(units);
  }
  if (groups.empty()) {
    throw Error(ErrorCode::kGeneration,
                "unit_conversion needs two comparable units");
  }
  return run_generator(
      kb, TaskType::kUnitConversion, master_seed, n, opts,
      [&](Rng &rng) -> std::optional<TaskInstance> {
        const std::vector<const UnitRecord *> &group = rng.pick(groups);
        const UnitRecord &from = *rng.pick(group);
        const UnitRecord &to = *rng.pick(group);
        if (from.unit_id == to.unit_id) return std::nullopt;
        const double beta = conversion_factor(kb, from.unit_id, to.unit_id);

        std::vector<double> pool{1.0 / beta};
        for (int k : {-3, -2, -1, 1, 2, 3}) pool.push_back(beta * std::pow(10.0, k));
        for (const UnitRecord *a : group) {
          for (const UnitRecord *b : group) {
            if (a == b || (a == &from && b == &to)) continue;
            pool.push_back(a->conversion_val / b->conversion_val);
          }
        }
        rng.shuffle(pool);
        std::vector<double> chosen{beta};
        std::vector<std::string> distractors;
        for (double d : pool) {
          if (distractors.size() + 1 == opts.candidates) break;
          if (!std::isfinite(d) || d <= 0.0) continue;
          bool clash = false;
          for (double c : chosen) clash = clash || nearly_equal(c, d, 1e-6);
          if (clash) continue;
          chosen.push_back(d);
          distractors.push_back(format_shortest(d));
        }
        if (distractors.size() + 1 != opts.candidates) return std::nullopt;
        const std::string answer = format_shortest(beta);
        TaskInstance inst;
        place_candidates(inst, answer, std::move(distractors), rng);
        inst.prompt["text"] = "1 " + from.label_en + " equals how many " +
                              to.label_en + "? Options: " +
                              join(inst.candidates, ", ") + ".";
        inst.prompt["from"] = from.unit_id;
        inst.prompt["to"] = to.unit_id;
        inst.rationale = rationale(
            "1 " + from.label_en + " = " + format_shortest(from.conversion_val) +
                " and 1 " + to.label_en + " = " +
                format_shortest(to.conversion_val) +
                " of the standard unit, so the factor is their ratio.",
            answer);
        return inst;
      });
}

std::vector<TaskInstance> gen_quantity_extraction(
    const std::vector<AnnotatedSentence> &annotated, std::uint64_t master_seed,
    std::size_t n) {
  std::vector<const AnnotatedSentence *> sentences;
  for (const AnnotatedSentence &s : annotated) {
    if (!s.mentions.empty()) sentences.push_back(&s);
  }
  if (sentences.empty() && n > 0) {
    throw Error(ErrorCode::kGeneration,
                "quantity_extraction needs annotated sentences");
  }
  const char *name = task_type_name(TaskType::kQuantityExtraction);
  // One shared permutation so the first |sentences| items never repeat.
  Rng order_rng(derive_seed(master_seed, name, ~std::uint64_t{0}));
  std::vector<std::size_t> order(sentences.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  order_rng.shuffle(order);

  std::vector<TaskInstance> out;
  for (std::size_t i = 0; i < n; ++i) {
    const AnnotatedSentence &s = *sentences[order[i % order.size()]];
    TaskInstance inst;
    inst.id = instance_id(TaskType::kQuantityExtraction, i);
    inst.type = TaskType::kQuantityExtraction;
    inst.seed = derive_seed(master_seed, name, i);
    inst.prompt["text"] = s.text;
    inst.prompt["line_no"] = s.line_no;
    std::vector<std::string> listed;
    for (const QuantityMention &m : s.mentions) {
      const Span q = m.quantity_span();
      GoldQuantity g{s.text.substr(q.begin, q.size()),
                     s.text.substr(m.value_span.begin, m.value_span.size()),
                     m.unit_surface};
      listed.push_back(g.quantity + " (value " + g.value + ", unit " + g.unit + ")");
      inst.gold.push_back(std::move(g));
    }
    inst.rationale = rationale("The text mentions " + join(listed, "; ") + ".",
                               join(listed, "; "));
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<TaskInstance> generate_tasks(
    TaskType type, const KnowledgeBase &kb,
    const std::vector<AnnotatedSentence> *annotated, std::uint64_t master_seed,
    std::size_t n, const GenerationOptions &opts) {
  static const std::vector<AnnotatedSentence> kNone;
  const std::vector<AnnotatedSentence> &sentences = annotated ? *annotated : kNone;
  switch (type) {
    case TaskType::kQuantityExtraction:
      return gen_quantity_extraction(sentences, master_seed, n);
    case TaskType::kKindMatch:
      return gen_kind_match(kb, master_seed, n, opts);
    case TaskType::kComparable:
      return gen_comparable(kb, master_seed, n, opts);
    case TaskType::kDimensionPrediction:
      return gen_dimension_prediction(sentences, kb, master_seed, n, opts);
    case TaskType::kDimensionArithmetic:
      return gen_dimension_arithmetic(kb, master_seed, n, opts);
    case TaskType::kMagnitudeComparison:
      return gen_magnitude_comparison(kb, master_seed, n, opts);
    case TaskType::kUnitConversion:
      return gen_unit_conversion(kb, master_seed, n, opts);
  }
  return {};
}

std::size_t count_correct_candidates(const KnowledgeBase &kb,
                                     const TaskInstance &inst) {
  const Json &p = inst.prompt;
  std::size_t correct = 0;
  switch (inst.type) {
    case TaskType::kQuantityExtraction:
      return inst.gold.empty() ? 0 : 1;
    case TaskType::kKindMatch: {
      const std::string kind = p.at("kind").get<std::string>();
      for (const std::string &c : inst.candidates) {
        if (kb.at(c).quantity_kind == kind) ++correct;
      }
      break;
    }
    case TaskType::kComparable: {
      const UnitRecord &anchor = kb.at(p.at("anchor").get<std::string>());
      for (const std::string &c : inst.candidates) {
        if (c != anchor.unit_id && kb.at(c).dimension == anchor.dimension) {
          ++correct;
        }
      }
      break;
    }
    case TaskType::kDimensionPrediction: {
      const UnitRecord &orig = kb.at(p.at("original_unit").get<std::string>());
      for (const std::string &c : inst.candidates) {
        if (kb.at(c).dimension == orig.dimension) ++correct;
      }
      break;
    }
    case TaskType::kDimensionArithmetic: {
      const Json &units = p.at("units");
      const Json &ops = p.at("ops");
      DimensionVector dim = kb.at(units.at(0).get<std::string>()).dimension;
      for (std::size_t k = 1; k < units.size(); ++k) {
        const DimensionVector &next = kb.at(units.at(k).get<std::string>()).dimension;
        dim = ops.at(k - 1).get<std::string>() == "*" ? dim_mul(dim, next)
                                                      : dim_div(dim, next);
      }
      for (const std::string &c : inst.candidates) {
        if (kb.at(c).dimension == dim) ++correct;
      }
      break;
    }
    case TaskType::kMagnitudeComparison: {
      double best = 0.0;
      for (const std::string &c : inst.candidates) {
        best = std::max(best, kb.at(c).conversion_val);
      }
      for (const std::string &c : inst.candidates) {
        if (nearly_equal(kb.at(c).conversion_val, best, kAnswerTolerance)) {
          ++correct;
        }
      }
      break;
    }
    case TaskType::kUnitConversion: {
      const double beta = conversion_factor(kb, p.at("from").get<std::string>(),
                                            p.at("to").get<std::string>());
      for (const std::string &c : inst.candidates) {
        if (nearly_equal(parse_real(c), beta, kAnswerTolerance)) ++correct;
      }
      break;
    }
  }
  return correct;
}

bool verify_instance(const KnowledgeBase &kb, const TaskInstance &inst) {
  if (inst.type == TaskType::kQuantityExtraction) {
    return !inst.gold.empty() && inst.candidates.empty() &&
           inst.answer_index == -1;
  }
  const std::set<std::string> distinct(inst.candidates.begin(),
                                       inst.candidates.end());
  if (distinct.size() != inst.candidates.size()) return false;
  if (inst.answer_index < 0 ||
      static_cast<std::size_t>(inst.answer_index) >= inst.candidates.size()) {
    return false;
  }
  if (count_correct_candidates(kb, inst) != 1) return false;
  // The single correct candidate must be the one the answer points at.
  TaskInstance only_answer = inst;
  only_answer.candidates = {inst.candidates[inst.answer_index]};
  return count_correct_candidates(kb, only_answer) == 1;
}

DimensionExpression evaluate_dimension_expression(const KnowledgeBase &kb,
                                                  std::string_view expr) {
  // Split into words, breaking out the operators that never occur inside a
  // unit symbol.
  std::vector<std::string> words;
  for (const std::string &raw : split(expr, ' ')) {
    std::string word;
    for (std::size_t i = 0; i < raw.size();) {
      std::string_view rest(raw);
      rest.remove_prefix(i);
      std::size_t op_len = 0;
      if (rest.front() == '*') op_len = 1;
      if (rest.rfind("×", 0) == 0 || rest.rfind("÷", 0) == 0) op_len = 2;
      if (rest.rfind("·", 0) == 0) op_len = 2;
      if (op_len) {
        if (!word.empty()) words.push_back(std::move(word));
        word.clear();
        words.emplace_back(rest.substr(0, op_len));
        i += op_len;
      } else {
        word += raw[i++];
      }
    }
    if (!word.empty()) words.push_back(std::move(word));
  }
  // '/' stays inside symbols such as "km/h"; split it out only when the glued
  // word is not itself a known unit.
  std::vector<std::string> split_words;
  for (std::string &w : words) {
    if (w.find('/') == std::string::npos || w == "/" ||
        !lookup_surface(kb, w).empty() || kb.find(w)) {
      split_words.push_back(std::move(w));
      continue;
    }
    const std::vector<std::string> parts = split(w, '/');
    for (std::size_t k = 0; k < parts.size(); ++k) {
      if (k) split_words.emplace_back("/");
      if (!parts[k].empty()) split_words.push_back(parts[k]);
    }
  }
  words = std::move(split_words);

  auto op_of = [](const std::string &w) -> char {
    if (w == "*" || w == "x" || w == "×" || w == "·") return '*';
    if (w == "/" || w == "÷") return '/';
    return 0;
  };
  auto resolve = [&](const std::string &name) -> UnitId {
    std::vector<UnitId> ids = lookup_surface(kb, name);
    if (!ids.empty()) {
      return *std::min_element(ids.begin(), ids.end(),
                               [&](const UnitId &a, const UnitId &b) {
                                 const double fa = kb.at(a).frequency;
                                 const double fb = kb.at(b).frequency;
                                 return fa != fb ? fa > fb : a < b;
                               });
    }
    if (kb.find(name)) return name;
    throw Error(ErrorCode::kUnknownUnit, "unknown unit '" + name + "'");
  };

  DimensionExpression out;
  std::string pending;
  std::size_t word_index = 0;
  auto flush = [&]() {
    if (pending.empty()) {
      throw Error(ErrorCode::kParse, "unit expected in '" + std::string(expr) + "'");
    }
    out.units.push_back(resolve(pending));
    pending.clear();
  };
  for (; word_index < words.size(); ++word_index) {
    const std::string &w = words[word_index];
    if (char op = op_of(w)) {
      flush();
      out.ops.push_back(op);
    } else {
      if (!pending.empty()) pending += ' ';
      pending += w;
    }
  }
  flush();

  out.dimension = kb.at(out.units[0]).dimension;
  for (std::size_t k = 1; k < out.units.size(); ++k) {
    const UnitRecord &r = kb.at(out.units[k]);
    out.dimension = out.ops[k - 1] == '*' ? dim_mul(out.dimension, r.dimension)
                                          : dim_div(out.dimension, r.dimension);
  }
  return out;
}

Json task_to_json(const TaskInstance &inst) {
  Json j;
  j["id"] = inst.id;
  j["task_type"] = task_type_name(inst.type);
  j["prompt"] = inst.prompt;
  j["candidates"] = inst.candidates;
  j["answer_index"] = inst.answer_index;
  j["rationale"] = inst.rationale;
  j["seed"] = inst.seed;
  if (inst.type == TaskType::kQuantityExtraction) {
    Json gold = Json::array();
    for (const GoldQuantity &g : inst.gold) {
      gold.push_back({{"quantity", g.quantity}, {"value", g.value}, {"unit", g.unit}});
    }
    j["gold"] = gold;
  }
  return j;
}

TaskInstance task_from_json(const Json &j) {
  TaskInstance inst;
  try {
    inst.id = j.at("id").get<std::string>();
    inst.type = parse_task_type(j.at("task_type").get<std::string>());
    inst.prompt = j.at("prompt");
    inst.candidates = j.at("candidates").get<std::vector<std::string>>();
    inst.answer_index = j.at("answer_index").get<int>();
    inst.rationale = j.value("rationale", "");
    inst.seed = j.value("seed", std::uint64_t{0});
    if (j.contains("gold")) {
      for (const Json &g : j.at("gold")) {
        inst.gold.push_back({g.at("quantity").get<std::string>(),
                             g.at("value").get<std::string>(),
                             g.at("unit").get<std::string>()});
      }
    }
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kParse, std::string("bad task instance: ") + e.what());
  }
  return inst;
}

}  // namespace dimkit
