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
#include <sstream>

#include "common.hpp"
#include "dimkit/unit_kb.hpp"
#include "doctest.h"

using namespace dimkit;

namespace {

KnowledgeBase parse(const std::string &text) {
  std::istringstream in(text);
  return parse_kb(in, "inline");
}

constexpr const char *kRow =
    "M\t米\tmeter\tm\tmeters\tlength\tlength\t1.0\tLength\tA0E0L1I0M0H0T0D0\t1\n";

}  // namespace

TEST_CASE("tiny KB loads and indexes surfaces") {
  const KnowledgeBase kb = testing::tiny_kb();
  CHECK(kb.size() == 8);
  CHECK(kb.records().front().unit_id == "CentiM");  // sorted by id
  CHECK(lookup_surface(kb, "km") == std::vector<UnitId>{"KiloM"});
  CHECK(lookup_surface(kb, "  KM ") == std::vector<UnitId>{"KiloM"});
  CHECK(lookup_surface(kb, "千克") == std::vector<UnitId>{"KiloGM"});
  CHECK(lookup_surface(kb, "parsec").empty());
  const QuantityKind *len = kb.find_kind("Length");
  REQUIRE(len);
  CHECK(len->standard_unit == "M");
  CHECK(len->units.size() == 4);
  CHECK(kb.find_kind("Temperature")->standard_unit == "K");
  CHECK(units_of_dimension(kb, DimensionVector::of(Base::kMass)).size() == 2);
  CHECK(kb.at("DEG_C").affine_offset == 273.15);
  CHECK_THROWS_CODE(kb.at("NOPE"), ErrorCode::kUnknownUnit);
}

TEST_CASE("surface forms list labels, then symbols, then aliases") {
  const KnowledgeBase kb = testing::tiny_kb();
  const auto forms = kb.at("M").surface_forms();
  CHECK(forms == std::vector<std::string>{"meter", "米", "m", "meters", "metre"});
}

TEST_CASE("conversion factors") {
  const KnowledgeBase kb = testing::tiny_kb();
  CHECK(conversion_factor(kb, "KiloM", "M") == 1000.0);
  CHECK(conversion_factor(kb, "M", "CentiM") == doctest::Approx(100.0).epsilon(1e-15));
  CHECK(conversion_factor(kb, "FT", "FT") == 1.0);
  try {
    conversion_factor(kb, "M", "KiloGM");
    FAIL("expected incomparable");
  } catch (const IncomparableUnitsError &e) {
    CHECK(e.code() == ErrorCode::kIncomparable);
    CHECK(e.from_dimension() == DimensionVector::of(Base::kLength));
    CHECK(e.to_dimension() == DimensionVector::of(Base::kMass));
  }
  CHECK_THROWS_CODE(conversion_factor(kb, "DEG_C", "K"), ErrorCode::kAffineUnsupported);
  CHECK(conversion_factor(kb, "DEG_C", "DEG_C") == 1.0);
}

TEST_CASE("kind frequency averages the top five") {
  const KnowledgeBase kb = testing::tiny_kb();
  CHECK(kind_frequency(kb, "Length") == doctest::Approx((1.0 + 0.8 + 0.6 + 0.4) / 4));
  CHECK(kind_frequency(kb, "Mass") == doctest::Approx(0.8));
  CHECK_THROWS_CODE(kind_frequency(kb, "Volume"), ErrorCode::kUnknownKind);

  std::string text;
  const double f[] = {0.2, 0.3, 0.4, 0.5, 0.6, 0.9};
  for (int i = 0; i < 6; ++i) {
    text += "U" + std::to_string(i) + "\t\tu" + std::to_string(i) +
            "\t\t\t\tkw\t" + std::to_string(f[i]) + "\tLength\tA0E0L1I0M0H0T0D0\t" +
            (i == 0 ? "1" : std::to_string(i + 1)) + "\n";
  }
  CHECK(kind_frequency(parse(text), "Length") ==
        doctest::Approx((0.3 + 0.4 + 0.5 + 0.6 + 0.9) / 5));
}

TEST_CASE("invalid KB rows are rejected with a code") {
  CHECK_THROWS_CODE(parse("M\tmeter\n"), ErrorCode::kParse);
  CHECK_THROWS_CODE(parse(std::string(kRow) + kRow), ErrorCode::kDuplicateId);
  CHECK_THROWS_CODE(
      parse("M\t\tmeter\tm\t\t\tkw\t1.0\tLength\tA0E0L1I0M0H0T0D0\t0\n"),
      ErrorCode::kValidation);
  CHECK_THROWS_CODE(
      parse("M\t\tmeter\tm\t\t\tkw\t0.05\tLength\tA0E0L1I0M0H0T0D0\t1\n"),
      ErrorCode::kValidation);
  CHECK_THROWS_CODE(
      parse("M\t\tmeter\tm\t\t\tkw\tabc\tLength\tA0E0L1I0M0H0T0D0\t1\n"),
      ErrorCode::kParse);
  CHECK_THROWS_CODE(parse("M\t\tmeter\tm\t\t\tkw\t1\tLength\tL1\t1\n"), ErrorCode::kParse);
  // Two standard units in one kind.
  CHECK_THROWS_CODE(
      parse(std::string(kRow) +
            "M2\t\tmeter2\t\t\t\tkw\t1\tLength\tA0E0L1I0M0H0T0D0\t1\n"),
      ErrorCode::kValidation);
  // No standard unit.
  CHECK_THROWS_CODE(parse("KM\t\tkm\t\t\t\tkw\t1\tLength\tA0E0L1I0M0H0T0D0\t1000\n"),
                    ErrorCode::kValidation);
  // Dimension disagrees with the kind's standard unit.
  CHECK_THROWS_CODE(parse(std::string(kRow) +
                          "KM\t\tkm\t\t\t\tkw\t1\tLength\tA0E0L2I0M0H0T0D0\t1000\n"),
                    ErrorCode::kValidation);
  CHECK_THROWS_CODE(load_kb("/nonexistent/units.tsv"), ErrorCode::kIo);
}

TEST_CASE("write_kb round-trips") {
  const KnowledgeBase kb = testing::tiny_kb();
  std::ostringstream out;
  write_kb(out, kb);
  const KnowledgeBase again = parse(out.str());
  REQUIRE(again.size() == kb.size());
  for (std::size_t i = 0; i < kb.size(); ++i) {
    const UnitRecord &a = kb.records()[i];
    const UnitRecord &b = again.records()[i];
    CHECK(a.unit_id == b.unit_id);
    CHECK(a.surface_forms() == b.surface_forms());
    CHECK(a.keywords == b.keywords);
    CHECK(a.frequency == b.frequency);
    CHECK(a.dimension == b.dimension);
    CHECK(a.conversion_val == b.conversion_val);
    CHECK(a.affine_offset == b.affine_offset);
  }
}

TEST_CASE("frequency normalization") {
  const FrequencyWeights w;
  const auto f = compute_frequency(
      {{"a", {10, 10, 10}}, {"b", {100, 100, 100}}, {"c", {1000, 1000, 1000}}}, w);
  CHECK(f.at("a") == 0.1);
  CHECK(std::fabs(f.at("b") - 0.55) < 1e-12);
  CHECK(f.at("c") == 1.0);

  CHECK_THROWS_CODE(compute_frequency({{"a", {1, 1, 1}}, {"b", {1, 1, 1}}}, w),
                    ErrorCode::kDegenerate);
  CHECK_THROWS_CODE(compute_frequency({}, w), ErrorCode::kDegenerate);
  CHECK_THROWS_CODE(compute_frequency({{"a", {0, 1, 1}}, {"b", {2, 2, 2}}}, w),
                    ErrorCode::kDomain);
  FrequencyWeights bad;
  bad.alpha_gt = 0.5;
  CHECK_THROWS_CODE(bad.validate(), ErrorCode::kInvalidArgument);
  bad = FrequencyWeights{};
  bad.delta = 1.0;
  CHECK_THROWS_CODE(bad.validate(), ErrorCode::kInvalidArgument);
}

TEST_CASE("frequency is monotone in every raw component") {
  const FrequencyWeights w;
  const std::map<UnitId, RawFrequency> base{
      {"a", {5, 7, 9}}, {"b", {50, 2, 30}}, {"c", {500, 90, 1}}, {"d", {40, 40, 40}}};
  const auto f0 = compute_frequency(base, w);
  for (const auto &[id, raw] : base) {
    for (int comp = 0; comp < 3; ++comp) {
      auto raised = base;
      RawFrequency &r = raised.at(id);
      (comp == 0 ? r.gt : comp == 1 ? r.hs : r.cf) *= 3.0;
      CHECK(compute_frequency(raised, w).at(id) >= f0.at(id));
    }
  }
}

TEST_CASE("sidecar frequencies reproduce the shipped column") {
  const auto raw = load_frequency_sidecar(oracle::data_dir() / "unit_frequency.tsv");
  const auto freq = compute_frequency(raw, FrequencyWeights{});
  const KnowledgeBase &kb = testing::fixture_kb();
  CHECK(raw.size() == kb.size());
  for (const UnitRecord &r : kb.records()) {
    CHECK(std::fabs(freq.at(r.unit_id) - r.frequency) < 1e-9);
  }
  const KnowledgeBase with_sidecar = load_kb(oracle::data_dir() / "units.tsv",
                                             oracle::data_dir() / "unit_frequency.tsv");
  CHECK(with_sidecar.at("M").frequency == 1.0);
}
