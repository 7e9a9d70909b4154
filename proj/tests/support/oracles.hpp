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


// Reference implementations used only by the tests. They read the fixture
// files directly and recompute results with deliberately plain code, so a
// bug in the library cannot hide in a shared helper.

#ifndef DIMKIT_TESTS_ORACLES_HPP_
#define DIMKIT_TESTS_ORACLES_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "dimkit/embedding.hpp"
#include "dimkit/linking.hpp"
#include "dimkit/tasks.hpp"
#include "dimkit/triplets.hpp"

namespace oracle {

using Dim = std::array<int, 7>;

// One row of units.tsv as plain strings and numbers.
struct RawUnit {
  std::string id;
  std::string label_zh;
  std::string label_en;
  std::vector<std::string> symbols;
  std::vector<std::string> aliases;
  std::vector<std::string> keywords;
  double frequency = 0.0;
  std::string kind;
  std::string dim_text;
  Dim dim{};
  double conversion = 1.0;
  double offset = 0.0;

  std::vector<std::string> forms() const;
};

std::filesystem::path data_dir();
std::filesystem::path test_data_dir();

std::vector<RawUnit> read_units(const std::filesystem::path &path);
const RawUnit &find_unit(const std::vector<RawUnit> &units, const std::string &id);

// Reads "A<n>E<n>L<n>I<n>M<n>H<n>T<n>D<n>" with sscanf.
Dim parse_dim(const std::string &text);
Dim add(const Dim &a, const Dim &b);
Dim sub(const Dim &a, const Dim &b);

// Full-matrix edit distance over code points.
std::size_t edit_distance(const std::u32string &a, const std::u32string &b);

struct Scored {
  std::string id;
  double prior = 0.0;
  double p_mention = 0.0;
  double p_context = 0.0;
  double score = 0.0;
};

std::vector<Scored> brute_link(const std::vector<RawUnit> &units,
                               const std::string &surface,
                               const std::string &context,
                               const dimkit::EmbeddingProvider &emb,
                               double threshold);

// Correct-candidate count for a generated task, from the raw rows.
std::size_t correct_candidates(const std::vector<RawUnit> &units,
                               const dimkit::TaskInstance &inst);

struct NaiveBootstrap {
  std::vector<dimkit::Triplet> triplets;
  std::set<std::string> predicates;
  std::set<std::string> mentions;
};

NaiveBootstrap naive_bootstrap(const std::vector<dimkit::Triplet> &store,
                               const std::vector<RawUnit> &units,
                               const dimkit::Linker &linker, double tau,
                               int iterations, std::size_t seed_units);

// Span-set F1 with the empty/empty case counted as perfect.
double span_f1(const std::set<std::pair<std::size_t, std::size_t>> &gold,
               const std::set<std::pair<std::size_t, std::size_t>> &found);

}  // namespace oracle

#endif  // DIMKIT_TESTS_ORACLES_HPP_
