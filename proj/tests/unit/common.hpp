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


// Small shared fixtures for the unit tests.

#ifndef DIMKIT_TESTS_UNIT_COMMON_HPP_
#define DIMKIT_TESTS_UNIT_COMMON_HPP_

#include <sstream>
#include <string>

#include "dimkit/embedding.hpp"
#include "dimkit/linking.hpp"
#include "dimkit/unit_kb.hpp"
#include "oracles.hpp"

namespace testing {

// Four length units, two mass units and one affine temperature unit.
inline constexpr const char *kTinyKb =
    "# id\tzh\ten\tsym\talias\tdesc\tkw\tfreq\tkind\tdim\tconv\toffset\n"
    "M\t米\tmeter\tm\tmeters|metre\tbase length\tlength|distance\t1.0\tLength\t"
    "A0E0L1I0M0H0T0D0\t1\n"
    "KiloM\t千米\tkilometer\tkm\tkilometers\tlength\tdistance|road\t0.8\tLength\t"
    "A0E0L1I0M0H0T0D0\t1000\n"
    "CentiM\t厘米\tcentimeter\tcm\tcentimeters\tlength\tlength|small\t0.6\tLength\t"
    "A0E0L1I0M0H0T0D0\t0.01\n"
    "FT\t英尺\tfoot\tft\tfeet\tlength\tlength|imperial\t0.4\tLength\t"
    "A0E0L1I0M0H0T0D0\t0.3048\n"
    "KiloGM\t千克\tkilogram\tkg\tkilograms\tmass\tmass|weight\t0.9\tMass\t"
    "A0E0L0I0M1H0T0D0\t1\n"
    "GM\t克\tgram\tg\tgrams\tmass\tmass|food\t0.7\tMass\tA0E0L0I0M1H0T0D0\t0.001\n"
    "K\t开尔文\tkelvin\tK\tkelvins\ttemperature\ttemperature\t0.3\tTemperature\t"
    "A0E0L0I0M0H1T0D0\t1\n"
    "DEG_C\t摄氏度\tdegree Celsius\t°C\tdegree|度\ttemperature\ttemperature|water"
    "\t0.85\tTemperature\tA0E0L0I0M0H1T0D0\t1\t273.15\n";

inline dimkit::KnowledgeBase tiny_kb() {
  std::istringstream in(kTinyKb);
  return dimkit::parse_kb(in, "tiny");
}

inline const dimkit::KnowledgeBase &fixture_kb() {
  static const dimkit::KnowledgeBase kb =
      dimkit::load_kb(oracle::data_dir() / "units.tsv");
  return kb;
}

inline const dimkit::TrigramEmbedder &trigram() {
  static const dimkit::TrigramEmbedder emb(256);
  return emb;
}

inline const dimkit::Linker &fixture_linker() {
  static const dimkit::Linker linker(fixture_kb(), trigram());
  return linker;
}

}  // namespace testing

#define CHECK_THROWS_CODE(expr, error_code)                        \
  do {                                                             \
    try {                                                          \
      (void)(expr);                                                \
      FAIL_CHECK("expected Error " #error_code);                   \
    } catch (const dimkit::Error &e__) {                           \
      CHECK_MESSAGE(e__.code() == (error_code), e__.what());       \
    }                                                              \
  } while (0)

#endif  // DIMKIT_TESTS_UNIT_COMMON_HPP_
