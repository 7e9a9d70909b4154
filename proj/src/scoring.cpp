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

#include "dimkit/scoring.hpp"

#include <algorithm>
#include <map>

namespace dimkit {

namespace {

bool choice_correct(const TaskInstance &inst, const Json &answer) {
  if (answer.is_number_integer()) {
    return answer.get<long long>() == inst.answer_index;
  }
  if (answer.is_string()) {
    return answer.get<std::string>() == inst.candidates.at(inst.answer_index);
  }
  return false;
}

struct SpanCounts {
  std::size_t gold = 0;
  std::size_t predicted = 0;
  std::size_t matched = 0;
};

// Multiset intersection size.
std::size_t matches(std::vector<std::string> gold, std::vector<std::string> pred) {
  std::sort(gold.begin(), gold.end());
  std::sort(pred.begin(), pred.end());
  std::vector<std::string> common;
  std::set_intersection(gold.begin(), gold.end(), pred.begin(), pred.end(),
                        std::back_inserter(common));
  return common.size();
}

std::string field_of(const Json &item, const char *field) {
  if (item.is_string()) {
    return std::string(field) == "quantity" ? item.get<std::string>() : "";
  }
  if (item.is_object() && item.contains(field) && item.at(field).is_string()) {
    return item.at(field).get<std::string>();
  }
  return "";
}

}  // namespace

Metrics make_metrics(std::size_t total, std::size_t answered,
                     std::size_t correct) {
  Metrics m;
  m.total = total;
  m.answered = answered;
  m.correct = correct;
  m.precision_defined = answered > 0;
  m.precision = answered ? static_cast<double>(correct) / answered : 0.0;
  m.recall = total ? static_cast<double>(correct) / total : 0.0;
  m.accuracy = m.recall;
  m.f1 = m.precision + m.recall > 0.0
             ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
             : 0.0;
  return m;
}

ScoreReport score_predictions(const std::vector<TaskInstance> &gold,
                              const std::vector<Prediction> &predictions) {
  std::map<std::string, const Prediction *> by_id;
  for (const Prediction &p : predictions) {
    if (!by_id.emplace(p.id, &p).second) {
      throw Error(ErrorCode::kMisaligned, "duplicate prediction for '" + p.id + "'");
    }
  }
  if (predictions.size() != gold.size()) {
    throw Error(ErrorCode::kMisaligned,
                std::to_string(gold.size()) + " gold items but " +
                    std::to_string(predictions.size()) + " predictions");
  }

  struct Counts {
    std::size_t total = 0, answered = 0, correct = 0;
  };
  std::map<std::string, Counts> per_task;
  Counts overall;
  SpanCounts qe, ve, ue;
  bool any_extraction = false;

  for (const TaskInstance &inst : gold) {
    auto it = by_id.find(inst.id);
    if (it == by_id.end()) {
      throw Error(ErrorCode::kMisaligned, "no prediction for '" + inst.id + "'");
    }
    const std::optional<Json> &answer = it->second->answer;
    const bool abstained = !answer || answer->is_null();

    if (inst.type == TaskType::kQuantityExtraction) {
      any_extraction = true;
      std::vector<std::string> gq, gv, gu, pq, pv, pu;
      for (const GoldQuantity &g : inst.gold) {
        gq.push_back(g.quantity);
        gv.push_back(g.value);
        gu.push_back(g.unit);
      }
      if (!abstained && answer->is_array()) {
        for (const Json &item : *answer) {
          pq.push_back(field_of(item, "quantity"));
          pv.push_back(field_of(item, "value"));
          pu.push_back(field_of(item, "unit"));
        }
      }
      for (auto [counts, g, p] :
           {std::tuple{&qe, &gq, &pq}, std::tuple{&ve, &gv, &pv},
            std::tuple{&ue, &gu, &pu}}) {
        counts->gold += g->size();
        counts->predicted += p->size();
        counts->matched += matches(*g, *p);
      }
      continue;
    }

    Counts &task = per_task[task_type_name(inst.type)];
    const bool correct = !abstained && choice_correct(inst, *answer);
    for (Counts *c : {&task, &overall}) {
      ++c->total;
      if (!abstained) ++c->answered;
      if (correct) ++c->correct;
    }
  }

  ScoreReport report;
  for (const auto &[name, c] : per_task) {
    report.per_task[name] = make_metrics(c.total, c.answered, c.correct);
  }
  report.overall = make_metrics(overall.total, overall.answered, overall.correct);
  if (any_extraction) {
    report.qe = make_metrics(qe.gold, qe.predicted, qe.matched);
    report.ve = make_metrics(ve.gold, ve.predicted, ve.matched);
    report.ue = make_metrics(ue.gold, ue.predicted, ue.matched);
  }
  return report;
}

Json metrics_to_json(const Metrics &m) {
  Json j;
  j["total"] = m.total;
  j["answered"] = m.answered;
  j["correct"] = m.correct;
  j["precision"] = m.precision;
  j["recall"] = m.recall;
  j["f1"] = m.f1;
  j["accuracy"] = m.accuracy;
  j["precision_defined"] = m.precision_defined;
  return j;
}

Json report_to_json(const ScoreReport &r) {
  Json j;
  j["overall"] = metrics_to_json(r.overall);
  Json tasks = Json::object();
  for (const auto &[name, m] : r.per_task) tasks[name] = metrics_to_json(m);
  j["per_task"] = tasks;
  if (r.qe) {
    j["quantity_extraction"] = {{"QE", metrics_to_json(*r.qe)},
                                {"VE", metrics_to_json(*r.ve)},
                                {"UE", metrics_to_json(*r.ue)}};
  }
  return j;
}

}  // namespace dimkit
