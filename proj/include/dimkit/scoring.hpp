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

// Precision / recall / F1 over benchmark predictions, with abstentions.

#ifndef DIMKIT_SCORING_HPP_
#define DIMKIT_SCORING_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dimkit/tasks.hpp"

namespace dimkit {

// `answer` is absent (or JSON null) when the model abstained. For choice
// tasks it is a candidate index or the candidate string; for
// quantity_extraction a list of {"quantity", "value", "unit"} objects.
struct Prediction {
  std::string id;
  std::optional<Json> answer;
};

struct Metrics {
  std::size_t total = 0;     // gold items (or gold spans)
  std::size_t answered = 0;  // predictions made
  std::size_t correct = 0;
  double precision = 0.0;  // correct / answered, 0 when nothing answered
  double recall = 0.0;     // correct / total
  double f1 = 0.0;
  double accuracy = 0.0;   // correct / total
  bool precision_defined = false;
};

// Fills the ratios from the three counts.
Metrics make_metrics(std::size_t total, std::size_t answered,
                     std::size_t correct);

struct ScoreReport {
  std::map<std::string, Metrics> per_task;  // choice tasks, by task name
  Metrics overall;                          // all choice items
  // quantity_extraction, span-level exact match of the full quantity, the
  // value part and the unit part.
  std::optional<Metrics> qe;
  std::optional<Metrics> ve;
  std::optional<Metrics> ue;
};

// Every gold id needs exactly one prediction and no prediction may name an
// unknown id; otherwise Error(kMisaligned). Order does not matter.
ScoreReport score_predictions(const std::vector<TaskInstance> &gold,
                              const std::vector<Prediction> &predictions);

Json metrics_to_json(const Metrics &m);
Json report_to_json(const ScoreReport &r);

}  // namespace dimkit

#endif  // DIMKIT_SCORING_HPP_
