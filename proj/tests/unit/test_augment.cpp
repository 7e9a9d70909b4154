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


#include <cmath>
#include <map>

#include "common.hpp"
#include "dimkit/augment.hpp"
#include "dimkit/equation.hpp"
#include "dimkit/io.hpp"
#include "dimkit/rng.hpp"
#include "doctest.h"

using namespace dimkit;

namespace {

const std::map<std::string, MwpProblem> &problems() {
  static const std::map<std::string, MwpProblem> all = [] {
    std::map<std::string, MwpProblem> m;
    for (const Json &j : read_jsonl(oracle::data_dir() / "mwp.jsonl")) {
      MwpProblem p = prepare_problem(problem_from_json(j), testing::fixture_linker());
      m.emplace(p.id, p);
    }
    return m;
  }();
  return all;
}

std::vector<MwpProblem> problem_list() {
  std::vector<MwpProblem> out;
  for (const auto &[id, p] : problems()) out.push_back(p);
  return out;
}

bool near(double a, double b) {
  return std::fabs(a - b) <= 1e-9 * std::max(1.0, std::fabs(b));
}

}  // namespace

TEST_CASE("problem preparation") {
  const MwpProblem &p = problems().at("pesticide");
  REQUIRE(p.body_mentions.size() == 1);
  CHECK(p.body_mentions[0].unit_surface == "千克");
  REQUIRE(p.question_unit);
  CHECK(p.question_unit->unit_id == "KiloGM");
  CHECK(p.question.substr(p.question_unit->span.begin, p.question_unit->span.size()) ==
        "千克");
  // Without answer_unit the question unit comes from the surface index.
  const MwpProblem &water = problems().at("water");
  REQUIRE(water.question_unit);
  CHECK(water.question_unit->unit_id == "HR");
  CHECK_FALSE(problems().at("fabric").question_unit);

  MwpProblem bad = problems().at("rope");
  bad.answer = 10;
  CHECK_THROWS_CODE(prepare_problem(bad, testing::fixture_linker()), ErrorCode::kValidation);
  bad = problems().at("rope");
  bad.equation = "12-";
  CHECK_THROWS_CODE(prepare_problem(bad, testing::fixture_linker()), ErrorCode::kValidation);
  bad = problems().at("rope");
  bad.answer_unit = "NOPE";
  CHECK_THROWS_CODE(prepare_problem(bad, testing::fixture_linker()), ErrorCode::kUnknownUnit);
}

TEST_CASE("pesticide problem rewrites") {
  const KnowledgeBase &kb = testing::fixture_kb();
  const MwpProblem &p = problems().at("pesticide");
  const Augmented c = augment_context_dimension(p, kb, 0, "GM");
  CHECK(c.problem.body == "小王要将150000克含药量20%的农药稀释成含药量5%的药水。");
  CHECK(c.problem.answer == 450);
  CHECK(c.record.scale == 1000);
  CHECK(c.record.answer_after == c.record.answer_before);
  CHECK(near(evaluate_equation(c.problem.equation), 450));
  // Percent literals are never rewritten.
  CHECK(c.problem.equation.find("20%") != std::string::npos);

  const Augmented q = augment_question_dimension(p, kb, "TONNE");
  CHECK(q.problem.question == "需要加水多少吨？");
  CHECK(near(q.problem.answer, 0.45));
  CHECK(q.problem.answer_unit == UnitId("TONNE"));
  CHECK(near(evaluate_equation(q.problem.equation), 0.45));
  CHECK(near(q.record.answer_after / q.record.answer_before, 0.001));
}

TEST_CASE("context format keeps numbers and spacing sensible") {
  const KnowledgeBase &kb = testing::fixture_kb();
  const MwpProblem &wire = problems().at("en_wire");
  const Augmented a = augment_context_format(wire, kb, 0, "meters");
  CHECK(a.problem.body == "A wire is 15 meters long and 4 m are cut off.");
  CHECK(a.problem.equation == wire.equation);
  CHECK(a.problem.answer == wire.answer);
  // The second mention's span moved with the edit.
  const QuantityMention &second = a.problem.body_mentions[1];
  CHECK(a.problem.body.substr(second.unit_span.begin, second.unit_span.size()) == "m");

  const Augmented zh = augment_context_format(problems().at("pesticide"), kb, 0, "公斤");
  CHECK(zh.problem.body.find("150公斤") != std::string::npos);
  CHECK_THROWS_CODE(augment_context_format(wire, kb, 0, "kg"), ErrorCode::kNoAlternative);
  CHECK_THROWS_CODE(augment_context_format(wire, kb, 0, "m"), ErrorCode::kNoAlternative);
  CHECK_THROWS_CODE(augment_context_format(wire, kb, 7, "meters"), ErrorCode::kInvalidArgument);
}

TEST_CASE("context dimension follows the original script") {
  const KnowledgeBase &kb = testing::fixture_kb();
  const MwpProblem &wire = problems().at("en_wire");
  const Augmented a = augment_context_dimension(wire, kb, 0, "CentiM");
  CHECK(a.problem.body == "A wire is 1500 cm long and 4 m are cut off.");
  CHECK(near(evaluate_equation(a.problem.equation), 11));
  const Augmented b = augment_context_dimension(wire, kb, 1, "KiloM");
  CHECK(b.problem.body == "A wire is 15 m long and 0.004 km are cut off.");
  CHECK(near(evaluate_equation(b.problem.equation), 11));
  const Augmented zh = augment_context_dimension(problems().at("rope"), kb, 0, "CentiM");
  CHECK(zh.problem.body.find("1200厘米") != std::string::npos);

  CHECK_THROWS_CODE(augment_context_dimension(wire, kb, 0, "M"), ErrorCode::kNoAlternative);
  CHECK_THROWS_CODE(augment_context_dimension(wire, kb, 0, "KiloGM"), ErrorCode::kIncomparable);

  MwpProblem cable = wire;
  cable.id = "cable";
  cable.body = "A cable is 5000000 m long and 4 m are cut off.";
  cable.equation = "5000000-4";
  cable.answer = 4999996;
  cable = prepare_problem(cable, testing::fixture_linker());
  CHECK_THROWS_CODE(augment_context_dimension(cable, kb, 0, "MilliM"), ErrorCode::kRange);
}

TEST_CASE("question rewrites") {
  const KnowledgeBase &kb = testing::fixture_kb();
  const MwpProblem &wire = problems().at("en_wire");
  const Augmented f = augment_question_format(wire, kb, "metres");
  CHECK(f.problem.question == "How many metres of wire are left?");
  CHECK(f.problem.answer == wire.answer);

  const Augmented d = augment_question_dimension(wire, kb, "CentiM");
  CHECK(near(d.problem.answer, 1100));
  CHECK(d.problem.question.find("centimeter") != std::string::npos);
  CHECK(near(evaluate_equation(d.problem.equation), 1100));
  // Converting back restores the answer.
  const Augmented back = augment_question_dimension(d.problem, kb, "M");
  CHECK(near(back.problem.answer, wire.answer));

  const MwpProblem &fabric = problems().at("fabric");
  CHECK_THROWS_CODE(augment_question_dimension(fabric, kb, "M"), ErrorCode::kNoAlternative);
  CHECK_THROWS_CODE(augment_question_format(fabric, kb, "m"), ErrorCode::kNoAlternative);
  CHECK_THROWS_CODE(augment_question_dimension(wire, kb, "SEC"), ErrorCode::kIncomparable);
}

TEST_CASE("question dimension round-trips for every problem and unit") {
  const KnowledgeBase &kb = testing::fixture_kb();
  for (const auto &[id, p] : problems()) {
    if (!p.question_unit) continue;
    const UnitRecord &from = kb.at(p.question_unit->unit_id);
    for (const UnitId &to : units_of_dimension(kb, from.dimension)) {
      if (to == from.unit_id || kb.at(to).affine_offset != 0.0) continue;
      const Augmented there = augment_question_dimension(p, kb, to);
      CHECK(near(there.problem.answer, p.answer * conversion_factor(kb, from.unit_id, to)));
      const Augmented back = augment_question_dimension(there.problem, kb, from.unit_id);
      CHECK(near(back.problem.answer, p.answer));
    }
  }
}

TEST_CASE("random methods preserve the invariants") {
  const KnowledgeBase &kb = testing::fixture_kb();
  for (const auto &[id, p] : problems()) {
    for (AugmentMethod m : kAllAugmentMethods) {
      for (std::uint64_t s = 0; s < 5; ++s) {
        Rng rng(s);
        try {
          const Augmented a = apply_augmentation(m, p, kb, rng);
          CHECK(a.record.method == m);
          CHECK(near(evaluate_equation(a.problem.equation), a.problem.answer));
          if (m == AugmentMethod::kQuestionDimension) {
            CHECK(near(a.record.answer_after, a.record.answer_before * a.record.scale));
          } else {
            CHECK(a.record.answer_after == a.record.answer_before);
          }
          if (m == AugmentMethod::kContextDimension) {
            const UnitRecord &o = kb.at(a.record.original_unit);
            const UnitRecord &n = kb.at(a.record.new_unit);
            CHECK(o.dimension == n.dimension);
            CHECK(n.affine_offset == 0.0);
          }
        } catch (const Error &e) {
          CHECK_MESSAGE((e.code() == ErrorCode::kNoAlternative || e.code() == ErrorCode::kRange),
                        e.what());
        }
      }
    }
  }
}

TEST_CASE("dataset augmentation policies") {
  const KnowledgeBase &kb = testing::fixture_kb();
  const auto list = problem_list();
  AugmentOptions none;
  none.eta = 0.0;
  const auto r0 = augment_dataset(list, kb, 1, none);
  CHECK(r0.records.empty());
  REQUIRE(r0.problems.size() == list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    CHECK(problem_to_json(r0.problems[i]).dump() == problem_to_json(list[i]).dump());
  }

  AugmentOptions all;
  all.eta = 1.0;
  all.methods = {AugmentMethod::kContextFormat, AugmentMethod::kContextDimension};
  const auto r1 = augment_dataset(list, kb, 1, all);
  CHECK(r1.records.size() == list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    CHECK(r1.problems[i].answer == list[i].answer);
  }

  AugmentOptions append;
  append.policy = AugmentPolicy::kAppend;
  const auto r2 = augment_dataset(list, kb, 3, append);
  REQUIRE(r2.problems.size() == 2 * list.size());
  for (std::size_t i = 0; i < list.size(); ++i) {
    CHECK(r2.problems[2 * i].id == list[i].id);
    CHECK(r2.problems[2 * i + 1].id == list[i].id + "#aug");
  }

  const auto a = augment_dataset(list, kb, 9, {});
  const auto b = augment_dataset(list, kb, 9, {});
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(record_to_json(a.records[i]).dump() == record_to_json(b.records[i]).dump());
  }

  AugmentOptions bad;
  bad.eta = 1.5;
  CHECK_THROWS_CODE(augment_dataset(list, kb, 1, bad), ErrorCode::kInvalidArgument);
  bad = {};
  bad.methods.clear();
  CHECK_THROWS_CODE(augment_dataset(list, kb, 1, bad), ErrorCode::kInvalidArgument);
}

TEST_CASE("augmentation method names") {
  for (AugmentMethod m : kAllAugmentMethods) {
    CHECK(parse_augment_method(augment_method_name(m)) == m);
  }
  CHECK_THROWS_CODE(parse_augment_method("paraphrase"), ErrorCode::kInvalidArgument);
}
