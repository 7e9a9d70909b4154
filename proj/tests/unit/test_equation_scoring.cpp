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


#include "common.hpp"
#include "dimkit/equation.hpp"
#include "dimkit/scoring.hpp"
#include "doctest.h"

using namespace dimkit;

TEST_CASE("equation tokenization") {
  CHECK(tokenize_equation("150*20%") ==
        std::vector<std::string>{"1", "5", "0", "*", "2", "0", "%"});
  CHECK(tokenize_equation("").empty());
  CHECK(tokenize_equation("(3+4)") == std::vector<std::string>{"(", "3", "+", "4", ")"});
  CHECK(tokenize_equation(" 1.5 = 3/2 ") ==
        std::vector<std::string>{"1", ".", "5", "=", "3", "/", "2"});
  try {
    tokenize_equation("12+a");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.offset() == 3);
  }
}

TEST_CASE("equation evaluation") {
  CHECK(evaluate_equation("150*20%/5%-150") == doctest::Approx(450));
  CHECK(evaluate_equation("x=2+3*4") == 14);
  CHECK(evaluate_equation("(2+3)*4") == 20);
  CHECK(evaluate_equation("-3+5") == 2);
  CHECK(evaluate_equation("8/4/2") == 1);
  CHECK(evaluate_equation("10-4-3") == 3);
  CHECK(evaluate_equation("50%%") == doctest::Approx(0.005));
  CHECK(evaluate_equation("(150000/1000)*2") == 300);
  CHECK_THROWS_CODE(evaluate_equation("1/(2-2)"), ErrorCode::kDomain);
  CHECK_THROWS_AS(evaluate_equation("(1+2"), ParseError);
  CHECK_THROWS_AS(evaluate_equation("1+"), ParseError);
  CHECK_THROWS_AS(evaluate_equation("1 2"), ParseError);
  CHECK_THROWS_AS(evaluate_equation("1..2"), ParseError);
}

TEST_CASE("equation literals") {
  const auto lits = equation_literals("x=150*20%/5%-150");
  REQUIRE(lits.size() == 4);
  CHECK(lits[0].begin == 2);
  CHECK(lits[0].end == 5);
  CHECK(lits[0].value == 150);
  CHECK(lits[1].value == 20);
  CHECK(lits[3].value == 150);
  CHECK(equation_body_offset("x = 3") == 3);
  CHECK(equation_body_offset("3+4") == 0);
}

namespace {

TaskInstance choice(const std::string &id, TaskType type, int answer) {
  TaskInstance t;
  t.id = id;
  t.type = type;
  t.candidates = {"A", "B", "C", "D"};
  t.answer_index = answer;
  return t;
}

TaskInstance extraction(const std::string &id, std::vector<GoldQuantity> gold) {
  TaskInstance t;
  t.id = id;
  t.type = TaskType::kQuantityExtraction;
  t.gold = std::move(gold);
  return t;
}

}  // namespace

TEST_CASE("metrics arithmetic") {
  const Metrics m = make_metrics(10, 8, 6);
  CHECK(m.precision == 0.75);
  CHECK(m.recall == 0.6);
  CHECK(m.accuracy == 0.6);
  CHECK(m.f1 == doctest::Approx(2 * 0.75 * 0.6 / 1.35));
  CHECK(m.precision_defined);
  const Metrics none = make_metrics(5, 0, 0);
  CHECK_FALSE(none.precision_defined);
  CHECK(none.precision == 0.0);
  CHECK(none.f1 == 0.0);
}

TEST_CASE("choice scoring with index and string answers") {
  const std::vector<TaskInstance> gold{choice("a", TaskType::kKindMatch, 0),
                                       choice("b", TaskType::kKindMatch, 1),
                                       choice("c", TaskType::kComparable, 2)};
  const auto r = score_predictions(gold, {{"a", Json(0)}, {"b", Json("B")}, {"c", std::nullopt}});
  CHECK(r.per_task.at("kind_match").correct == 2);
  CHECK(r.per_task.at("kind_match").precision == 1.0);
  CHECK(r.per_task.at("comparable").answered == 0);
  CHECK_FALSE(r.per_task.at("comparable").precision_defined);
  CHECK(r.overall.total == 3);
  CHECK(r.overall.answered == 2);
  CHECK(r.overall.recall == doctest::Approx(2.0 / 3.0));
  CHECK_FALSE(r.qe);
  // Explicit null abstains; bools and wrong strings are wrong.
  const auto s = score_predictions(gold, {{"a", Json(nullptr)}, {"b", Json("A")}, {"c", Json(true)}});
  CHECK(s.overall.answered == 2);
  CHECK(s.overall.correct == 0);
}

TEST_CASE("extraction scoring is multiset exact match") {
  const std::vector<TaskInstance> gold{
      extraction("q1", {{"3 kg", "3", "kg"}, {"3 kg", "3", "kg"}}),
      extraction("q2", {{"2 m", "2", "m"}})};
  const Json p1 = Json::parse(R"([{"quantity": "3 kg", "value": "3", "unit": "kg"}])");
  const Json p2 = Json::parse(R"(["2 m", {"quantity": "2 meters", "value": "2", "unit": "meters"}])");
  const auto r = score_predictions(gold, {{"q1", p1}, {"q2", p2}});
  REQUIRE(r.qe);
  CHECK(r.qe->total == 3);
  CHECK(r.qe->answered == 3);
  CHECK(r.qe->correct == 2);
  CHECK(r.ve->correct == 2);  // "3" once, "2" once
  CHECK(r.ue->correct == 1);
  CHECK(r.overall.total == 0);
}

TEST_CASE("misaligned predictions") {
  const std::vector<TaskInstance> gold{choice("a", TaskType::kKindMatch, 0),
                                       choice("b", TaskType::kKindMatch, 1)};
  CHECK_THROWS_CODE(score_predictions(gold, {{"a", Json(0)}}), ErrorCode::kMisaligned);
  CHECK_THROWS_CODE(score_predictions(gold, {{"a", Json(0)}, {"a", Json(1)}}),
                    ErrorCode::kMisaligned);
  CHECK_THROWS_CODE(score_predictions(gold, {{"a", Json(0)}, {"z", Json(1)}}),
                    ErrorCode::kMisaligned);
}

TEST_CASE("report JSON") {
  const std::vector<TaskInstance> gold{choice("a", TaskType::kKindMatch, 0)};
  const Json j = report_to_json(score_predictions(gold, {{"a", Json(0)}}));
  CHECK(j.at("overall").at("f1") == 1.0);
  CHECK(j.at("per_task").at("kind_match").at("precision_defined") == true);
  CHECK_FALSE(j.contains("quantity_extraction"));
}
