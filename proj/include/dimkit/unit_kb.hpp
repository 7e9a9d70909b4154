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

// The dimensional unit knowledge base: loading, validation, indexes and the
// frequency model.

#ifndef DIMKIT_UNIT_KB_HPP_
#define DIMKIT_UNIT_KB_HPP_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dimkit/dimension.hpp"
#include "dimkit/errors.hpp"

namespace dimkit {

using UnitId = std::string;

struct UnitRecord {
  UnitId unit_id;
  std::string label_zh;
  std::string label_en;
  std::vector<std::string> symbols;
  std::vector<std::string> aliases;
  std::string description;
  std::vector<std::string> keywords;
  double frequency = 0.0;
  std::string quantity_kind;
  DimensionVector dimension;
  // Multiplicative factor to the standard unit of the dimension's kind.
  double conversion_val = 1.0;
  // Nonzero for affine scales (degree Celsius); such units never convert.
  double affine_offset = 0.0;

  // Non-empty labels, symbols and aliases, in that order.
  std::vector<std::string> surface_forms() const;
};

struct QuantityKind {
  std::string kind_id;
  std::string name;
  DimensionVector dimension;
  UnitId standard_unit;
  std::vector<UnitId> units;  // sorted
};

struct FrequencyWeights {
  double alpha_gt = 0.3;
  double alpha_hs = 0.3;
  double alpha_cf = 0.4;
  double delta = 0.1;

  // Throws Error(kInvalidArgument) unless alphas are nonnegative, sum to 1
  // and delta lies in (0, 1).
  void validate() const;
};

// Google-Trends, human-score and corpus-frequency signals for one unit.
struct RawFrequency {
  double gt = 0.0;
  double hs = 0.0;
  double cf = 0.0;
};

class IncomparableUnitsError : public Error {
 public:
  IncomparableUnitsError(const UnitId &from, const DimensionVector &from_dim,
                         const UnitId &to, const DimensionVector &to_dim);

  const DimensionVector &from_dimension() const { return from_dim_; }
  const DimensionVector &to_dimension() const { return to_dim_; }

 private:
  DimensionVector from_dim_;
  DimensionVector to_dim_;
};

// Immutable after construction; safe for concurrent reads.
class KnowledgeBase {
 public:
  using Index = std::map<std::string, std::vector<UnitId>, std::less<>>;

  KnowledgeBase() = default;

  // Validates every invariant and builds both indexes. Records are stored
  // sorted by unit_id, so input order never matters.
  static KnowledgeBase from_records(std::vector<UnitRecord> records,
                                    double min_frequency = 0.1);

  const std::vector<UnitRecord> &records() const { return records_; }
  const std::vector<QuantityKind> &kinds() const { return kinds_; }
  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  const UnitRecord *find(std::string_view unit_id) const;
  // Throws Error(kUnknownUnit).
  const UnitRecord &at(std::string_view unit_id) const;

  const QuantityKind *find_kind(std::string_view kind_id) const;

  // Normalized surface form -> units.
  const Index &surface_index() const { return surface_index_; }
  // Encoded dimension string -> units.
  const Index &dimension_index() const { return dimension_index_; }

 private:
  std::vector<UnitRecord> records_;
  std::vector<QuantityKind> kinds_;
  std::map<UnitId, std::size_t, std::less<>> by_id_;
  std::map<std::string, std::size_t, std::less<>> kind_by_id_;
  Index surface_index_;
  Index dimension_index_;
};

// Reads the tab-separated KB format. Lines that are blank or start with '#'
// are skipped. `frequency_sidecar`, when given, recomputes the Frequency
// column for every unit it lists.
KnowledgeBase load_kb(const std::filesystem::path &path,
                      const std::optional<std::filesystem::path>
                          &frequency_sidecar = std::nullopt,
                      const FrequencyWeights &weights = {});

KnowledgeBase parse_kb(std::istream &in, std::string_view source_name,
                       const std::map<UnitId, double> *frequency_override =
                           nullptr,
                       double min_frequency = 0.1);

// Serializes in the same format `parse_kb` reads.
void write_kb(std::ostream &out, const KnowledgeBase &kb);

std::map<UnitId, RawFrequency> load_frequency_sidecar(
    const std::filesystem::path &path);

// Score(u) = sum_j alpha_j * log(raw_j(u)) rescaled so the lowest score maps
// to delta and the highest to 1.
std::map<UnitId, double> compute_frequency(
    const std::map<UnitId, RawFrequency> &raw, const FrequencyWeights &weights);

// Mean frequency of the (up to) five most frequent units of the kind.
double kind_frequency(const KnowledgeBase &kb, std::string_view kind_id);

// beta such that q [u1] == q * beta [u2].
double conversion_factor(const KnowledgeBase &kb, std::string_view u1,
                         std::string_view u2);

std::vector<UnitId> lookup_surface(const KnowledgeBase &kb,
                                   std::string_view form);

std::vector<UnitId> units_of_dimension(const KnowledgeBase &kb,
                                       const DimensionVector &dv);

}  // namespace dimkit

#endif  // DIMKIT_UNIT_KB_HPP_
