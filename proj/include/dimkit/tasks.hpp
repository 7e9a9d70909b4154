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

// Multiple-choice dimension-perception tasks with oracle-checked answers,
// plus free-form quantity extraction items.

#ifndef DIMKIT_TASKS_HPP_
#define DIMKIT_TASKS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "dimkit/quantity_text.hpp"
#include "dimkit/unit_kb.hpp"

namespace dimkit {

using Json = nlohmann::ordered_json;

enum class TaskType {
  kQuantityExtraction,
  kKindMatch,
  kComparable,
  kDimensionPrediction,
  kDimensionArithmetic,
  kMagnitudeComparison,
  kUnitConversion,
};

inline constexpr TaskType kAllTaskTypes[] = {
    TaskType::kQuantityExtraction,   TaskType::kKindMatch,
    TaskType::kComparable,           TaskType::kDimensionPrediction,
    TaskType::kDimensionArithmetic,  TaskType::kMagnitudeComparison,
    TaskType::kUnitConversion,
};

const char *task_type_name(TaskType t);
TaskType parse_task_type(std::string_view name);  // Error(kInvalidArgument)

// One gold quantity of a quantity_extraction item, as surface strings.
struct GoldQuantity {
  std::string quantity;
  std::string value;
  std::string unit;
};

struct TaskInstance {
  std::string id;  // "<task_type>-NNNNNN"
  TaskType type = TaskType::kKindMatch;
  Json prompt = Json::object();  // always has "text"
  // Unit ids, or shortest round-trip numbers for unit_conversion. Empty for
  // quantity_extraction.
  std::vector<std::string> candidates;
  int answer_index = -1;  // -1 for quantity_extraction
  std::string rationale;  // "<bos> R <sep> A <eos>"
  std::uint64_t seed = 0;
  std::vector<GoldQuantity> gold;  // quantity_extraction only
};

struct GenerationOptions {
  std::size_t candidates = 4;
  int max_terms = 3;  // dimension_arithmetic
  // Attempts per instance before generation fails.
  int resample_budget = 1000;

  void validate() const;  // Error(kInvalidArgument)
};

// Instance i draws from Rng(derive_seed(master_seed, task name, i)), so any
// prefix of a run is reproducible on its own. All generators re-check every
// instance with verify_instance and throw Error(kGeneration) when a KB
// cannot support the task.
std::vector<TaskInstance> gen_kind_match(const KnowledgeBase &kb,
                                         std::uint64_t master_seed,
                                         std::size_t n,
                                         const GenerationOptions &opts = {});
std::vector<TaskInstance> gen_comparable(const KnowledgeBase &kb,
                                         std::uint64_t master_seed,
                                         std::size_t n,
                                         const GenerationOptions &opts = {});
std::vector<TaskInstance> gen_dimension_prediction(
    const std::vector<AnnotatedSentence> &annotated, const KnowledgeBase &kb,
    std::uint64_t master_seed, std::size_t n, const GenerationOptions &opts = {});
std::vector<TaskInstance> gen_dimension_arithmetic(
    const KnowledgeBase &kb, std::uint64_t master_seed, std::size_t n,
    const GenerationOptions &opts = {});
std::vector<TaskInstance> gen_magnitude_comparison(
    const KnowledgeBase &kb, std::uint64_t master_seed, std::size_t n,
    const GenerationOptions &opts = {});
std::vector<TaskInstance> gen_unit_conversion(const KnowledgeBase &kb,
                                              std::uint64_t master_seed,
                                              std::size_t n,
                                              const GenerationOptions &opts = {});
std::vector<TaskInstance> gen_quantity_extraction(
    const std::vector<AnnotatedSentence> &annotated, std::uint64_t master_seed,
    std::size_t n);

// Dispatches on `type`; the two text tasks need `annotated`.
std::vector<TaskInstance> generate_tasks(
    TaskType type, const KnowledgeBase &kb,
    const std::vector<AnnotatedSentence> *annotated, std::uint64_t master_seed,
    std::size_t n, const GenerationOptions &opts = {});

// Number of candidates satisfying the task's answer predicate.
std::size_t count_correct_candidates(const KnowledgeBase &kb,
                                     const TaskInstance &inst);

// Exactly one correct candidate, the answer index points at it and the
// candidates are distinct. Quantity extraction items need a non-empty gold
// list instead.
bool verify_instance(const KnowledgeBase &kb, const TaskInstance &inst);

// Dimension of a flat unit expression evaluated left to right, e.g.
// "joule * meter / second". Units resolve through the surface index, then
// by unit id. Accepts '*', 'x', '×', '/', '÷' as operators.
struct DimensionExpression {
  std::vector<UnitId> units;
  std::vector<char> ops;  // '*' or '/', one fewer than units
  DimensionVector dimension;
};
DimensionExpression evaluate_dimension_expression(const KnowledgeBase &kb,
                                                  std::string_view expr);

Json task_to_json(const TaskInstance &inst);
TaskInstance task_from_json(const Json &j);

}  // namespace dimkit

#endif  // DIMKIT_TASKS_HPP_
