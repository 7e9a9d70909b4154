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

// Quantity-oriented augmentation of math word problems: swap a unit's
// surface form, or swap the unit for another of the same dimension, in the
// problem body or in the question.

#ifndef DIMKIT_AUGMENT_HPP_
#define DIMKIT_AUGMENT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dimkit/linking.hpp"
#include "dimkit/quantity_text.hpp"
#include "dimkit/rng.hpp"

namespace dimkit {

// The unit the question asks for, e.g. 千克 in "需要加水多少千克？".
struct QuestionUnit {
  Span span;  // byte range in the question
  UnitId unit_id;
};

struct MwpProblem {
  std::string id;
  std::string body;
  std::string question;
  std::string equation;
  double answer = 0.0;
  std::optional<UnitId> answer_unit;
  std::vector<QuantityMention> body_mentions;  // linked quantities only
  std::optional<QuestionUnit> question_unit;
};

// Relative tolerance for equation-vs-answer checks.
inline constexpr double kAnswerTolerance = 1e-9;

// Extracts body mentions and the question unit and checks that the
// equation evaluates to the answer; Error(kValidation) otherwise. When
// answer_unit is set, the question unit is the first occurrence of one of
// its surface forms; otherwise the last exact unit surface in the question.
MwpProblem prepare_problem(MwpProblem problem, const Linker &linker);

enum class AugmentMethod {
  kContextFormat,
  kContextDimension,
  kQuestionFormat,
  kQuestionDimension,
};

inline constexpr AugmentMethod kAllAugmentMethods[] = {
    AugmentMethod::kContextFormat, AugmentMethod::kContextDimension,
    AugmentMethod::kQuestionFormat, AugmentMethod::kQuestionDimension};

const char *augment_method_name(AugmentMethod m);
AugmentMethod parse_augment_method(std::string_view name);

struct AugmentationRecord {
  std::string problem_id;
  AugmentMethod method = AugmentMethod::kContextFormat;
  UnitId original_unit;
  UnitId new_unit;
  double scale = 1.0;  // beta applied to the rewritten value or answer
  double answer_before = 0.0;
  double answer_after = 0.0;
  std::string error;  // non-empty when the method failed
};

struct Augmented {
  MwpProblem problem;
  AugmentationRecord record;
};

// Rewritten values outside [1e-6, 1e9] in magnitude are rejected.
inline constexpr double kMinRewrittenValue = 1e-6;
inline constexpr double kMaxRewrittenValue = 1e9;

// Explicit-choice forms. `mention` indexes p.body_mentions; `surface` must be
// a surface form of the mention's (question's) unit other than the current
// one; `new_unit` must share the unit's dimension. Failures raise
// Error(kNoAlternative), Error(kIncomparable) or Error(kRange).
Augmented augment_context_format(const MwpProblem &p, const KnowledgeBase &kb,
                                 std::size_t mention, const std::string &surface);
Augmented augment_context_dimension(const MwpProblem &p, const KnowledgeBase &kb,
                                    std::size_t mention, const UnitId &new_unit);
Augmented augment_question_format(const MwpProblem &p, const KnowledgeBase &kb,
                                  const std::string &surface);
Augmented augment_question_dimension(const MwpProblem &p, const KnowledgeBase &kb,
                                     const UnitId &new_unit);

// Random choice of mention, surface and unit.
Augmented augment_context_format(const MwpProblem &p, const KnowledgeBase &kb,
                                 Rng &rng);
Augmented augment_context_dimension(const MwpProblem &p, const KnowledgeBase &kb,
                                    Rng &rng);
Augmented augment_question_format(const MwpProblem &p, const KnowledgeBase &kb,
                                  Rng &rng);
Augmented augment_question_dimension(const MwpProblem &p, const KnowledgeBase &kb,
                                     Rng &rng);

Augmented apply_augmentation(AugmentMethod method, const MwpProblem &p,
                             const KnowledgeBase &kb, Rng &rng);

enum class AugmentPolicy {
  kInPlace,  // augmented problems replace their originals
  kAppend,   // every original is followed by its augmented copy (id + "#aug")
};

struct AugmentOptions {
  double eta = 0.5;
  std::vector<AugmentMethod> methods{std::begin(kAllAugmentMethods),
                                     std::end(kAllAugmentMethods)};
  AugmentPolicy policy = AugmentPolicy::kInPlace;

  void validate() const;  // Error(kInvalidArgument)
};

struct AugmentResult {
  std::vector<MwpProblem> problems;
  // One per selected problem, failures included.
  std::vector<AugmentationRecord> records;
};

// Problem i draws from Rng(derive_seed(master_seed, "augment", i)): a
// Bernoulli(eta) selection, then a uniform pick from options.methods.
// Copies under kAppend that were not augmented are unchanged originals.
AugmentResult augment_dataset(const std::vector<MwpProblem> &problems,
                              const KnowledgeBase &kb, std::uint64_t master_seed,
                              const AugmentOptions &options = {});

}  // namespace dimkit

#endif  // DIMKIT_AUGMENT_HPP_
