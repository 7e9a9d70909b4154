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

// Subject-predicate-object triplets, the bootstrapping retrieval of
// quantity-bearing predicates and template rendering of triplets into
// sentences.

#ifndef DIMKIT_TRIPLETS_HPP_
#define DIMKIT_TRIPLETS_HPP_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dimkit/linking.hpp"
#include "dimkit/quantity_text.hpp"
#include "dimkit/rng.hpp"

namespace dimkit {

struct Triplet {
  std::string subject;
  std::string predicate;
  std::string object;

  friend bool operator==(const Triplet &, const Triplet &) = default;
  friend auto operator<=>(const Triplet &, const Triplet &) = default;
};

// Whether `object` contains `mention` after surface normalization. Matches
// may not be glued to ASCII letters, so "m" is not found in "mole" but
// "米" is found in "2.06米".
bool object_contains_mention(std::string_view object, std::string_view mention);

// Read access in insertion order.
class TripletStore {
 public:
  virtual ~TripletStore() = default;

  virtual const std::vector<Triplet> &all() const = 0;

  std::vector<Triplet> triplets_with_predicate(std::string_view predicate) const;
  std::vector<Triplet> triplets_with_object_containing(
      std::string_view mention) const;
  // Sorted, distinct.
  std::vector<std::string> all_predicates() const;
};

class MemoryTripletStore final : public TripletStore {
 public:
  MemoryTripletStore() = default;
  explicit MemoryTripletStore(std::vector<Triplet> triplets)
      : triplets_(std::move(triplets)) {}

  // Three tab-separated columns; blank lines and '#' comments skipped.
  static MemoryTripletStore parse_tsv(std::istream &in,
                                      std::string_view source_name);
  static MemoryTripletStore load_tsv(const std::filesystem::path &path);

  void add(Triplet t) { triplets_.push_back(std::move(t)); }
  const std::vector<Triplet> &all() const override { return triplets_; }

 private:
  std::vector<Triplet> triplets_;
};

struct BootstrapConfig {
  double tau = 0.8;
  int iterations = 5;
  std::size_t seed_unit_count = 10;

  // Throws Error(kInvalidArgument).
  void validate() const;
};

struct BootstrapResult {
  std::vector<Triplet> triplets;    // store order
  std::set<std::string> predicates;
  std::set<std::string> mentions;   // normalized surfaces
};

// Normalized surface forms of the `count` most frequent units (frequency
// descending, unit id ascending on ties).
std::set<std::string> seed_mentions(const KnowledgeBase &kb, std::size_t count);

// Whether extract_quantities finds a linked quantity in `object`.
bool is_quantity_object(std::string_view object, const Linker &linker);

// Each round collects the predicates of triplets whose object contains a
// mention, keeps those whose quantity-object ratio reaches tau and adds the
// unit surfaces found in the kept predicates' objects to the mention set.
// The result holds every triplet with a kept predicate and an object that
// contains a mention. With zero iterations no predicate is kept and the
// result is the triplets whose object contains a seed mention.
BootstrapResult bootstrap_retrieve(const TripletStore &store,
                                   const Linker &linker,
                                   const BootstrapConfig &config = {});

// Templates use the placeholders {subject}, {predicate} and {object}.
const std::vector<std::string> &default_sentence_templates();

std::string fill_template(std::string_view templ, const Triplet &t);

// Fills a template chosen by `rng`.
std::string render_triplet_sentence(const Triplet &t,
                                    const std::vector<std::string> &templates,
                                    Rng &rng);

// Runs `command` with "subject\tpredicate\tobject" on stdin and takes the
// first stdout line. Falls back to the templates when the command fails or
// its sentence does not contain the object verbatim.
std::string render_triplet_sentence_with_command(
    const Triplet &t, const std::string &command,
    const std::vector<std::string> &templates, Rng &rng);

}  // namespace dimkit

#endif  // DIMKIT_TRIPLETS_HPP_
