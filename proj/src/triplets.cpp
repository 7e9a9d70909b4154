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

#include "dimkit/triplets.hpp"

#include <algorithm>
#include <fstream>

#include "dimkit/process.hpp"
#include "dimkit/text_util.hpp"

namespace dimkit {

bool object_contains_mention(std::string_view object, std::string_view mention) {
  const std::string m = normalize_surface(mention);
  if (m.empty()) return false;
  const std::string o = normalize_surface(object);
  auto letter = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  };
  for (std::size_t at = o.find(m); at != std::string::npos;
       at = o.find(m, at + 1)) {
    const bool glued_left = at > 0 && letter(o[at - 1]) && letter(m.front());
    const std::size_t end = at + m.size();
    const bool glued_right =
        end < o.size() && letter(o[end]) && letter(m.back());
    if (!glued_left && !glued_right) return true;
  }
  return false;
}

std::vector<Triplet> TripletStore::triplets_with_predicate(
    std::string_view predicate) const {
  std::vector<Triplet> out;
  for (const Triplet &t : all()) {
    if (t.predicate == predicate) out.push_back(t);
  }
  return out;
}

std::vector<Triplet> TripletStore::triplets_with_object_containing(
    std::string_view mention) const {
  std::vector<Triplet> out;
  for (const Triplet &t : all()) {
    if (object_contains_mention(t.object, mention)) out.push_back(t);
  }
  return out;
}

std::vector<std::string> TripletStore::all_predicates() const {
  std::set<std::string> preds;
  for (const Triplet &t : all()) preds.insert(t.predicate);
  return {preds.begin(), preds.end()};
}

MemoryTripletStore MemoryTripletStore::parse_tsv(std::istream &in,
                                                 std::string_view source_name) {
  MemoryTripletStore store;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line.front() == '#') continue;
    std::vector<std::string> fields = split(line, '\t');
    if (fields.size() != 3) {
      throw Error(ErrorCode::kParse,
                  std::string(source_name) + ":" + std::to_string(line_no) +
                      ": expected 3 fields, got " +
                      std::to_string(fields.size()));
    }
    store.add({std::move(fields[0]), std::move(fields[1]), std::move(fields[2])});
  }
  return store;
}

MemoryTripletStore MemoryTripletStore::load_tsv(
    const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo,
                "cannot open triplet store '" + path.string() + "'");
  }
  return parse_tsv(in, path.string());
}

void BootstrapConfig::validate() const {
  if (!(tau > 0.0 && tau <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "tau must lie in (0, 1]");
  }
  if (iterations < 0) {
    throw Error(ErrorCode::kInvalidArgument, "iterations must be >= 0");
  }
  if (seed_unit_count == 0) {
    throw Error(ErrorCode::kInvalidArgument, "seed unit count must be positive");
  }
}

std::set<std::string> seed_mentions(const KnowledgeBase &kb, std::size_t count) {
  std::vector<const UnitRecord *> units;
  for (const UnitRecord &r : kb.records()) units.push_back(&r);
  std::stable_sort(units.begin(), units.end(),
                   [](const UnitRecord *a, const UnitRecord *b) {
                     if (a->frequency != b->frequency) {
                       return a->frequency > b->frequency;
                     }
                     return a->unit_id < b->unit_id;
                   });
  units.resize(std::min(count, units.size()));
  std::set<std::string> out;
  for (const UnitRecord *r : units) {
    for (const std::string &form : r->surface_forms()) {
      std::string n = normalize_surface(form);
      if (!n.empty()) out.insert(std::move(n));
    }
  }
  return out;
}

bool is_quantity_object(std::string_view object, const Linker &linker) {
  for (const QuantityMention &m : extract_quantities(object, linker)) {
    if (m.linked_unit) return true;
  }
  return false;
}

namespace {

bool contains_any(std::string_view object, const std::set<std::string> &mentions) {
  for (const std::string &m : mentions) {
    if (object_contains_mention(object, m)) return true;
  }
  return false;
}

}  // namespace

BootstrapResult bootstrap_retrieve(const TripletStore &store,
                                   const Linker &linker,
                                   const BootstrapConfig &config) {
  config.validate();
  BootstrapResult result;
  result.mentions = seed_mentions(linker.kb(), config.seed_unit_count);
  const std::vector<Triplet> &triplets = store.all();

  // The quantity test is the expensive part and does not change between
  // rounds.
  std::vector<int> is_quantity(triplets.size(), -1);
  auto quantity_at = [&](std::size_t i) {
    if (is_quantity[i] < 0) {
      is_quantity[i] = is_quantity_object(triplets[i].object, linker) ? 1 : 0;
    }
    return is_quantity[i] == 1;
  };

  for (int round = 0; round < config.iterations; ++round) {
    std::set<std::string> candidates;
    for (const Triplet &t : triplets) {
      if (contains_any(t.object, result.mentions)) candidates.insert(t.predicate);
    }

    std::set<std::string> kept;
    for (const std::string &p : candidates) {
      std::size_t total = 0;
      std::size_t quantities = 0;
      for (std::size_t i = 0; i < triplets.size(); ++i) {
        if (triplets[i].predicate != p) continue;
        ++total;
        if (quantity_at(i)) ++quantities;
      }
      const double ratio = static_cast<double>(quantities) / total;
      if (ratio >= config.tau) kept.insert(p);
    }
    result.predicates = std::move(kept);

    for (std::size_t i = 0; i < triplets.size(); ++i) {
      if (!result.predicates.count(triplets[i].predicate)) continue;
      for (const QuantityMention &m :
           extract_quantities(triplets[i].object, linker)) {
        if (!m.linked_unit) continue;
        std::string n = normalize_surface(m.unit_surface);
        if (!n.empty()) result.mentions.insert(std::move(n));
      }
    }
  }

  for (const Triplet &t : triplets) {
    const bool predicate_ok =
        config.iterations == 0 || result.predicates.count(t.predicate) > 0;
    if (predicate_ok && contains_any(t.object, result.mentions)) {
      result.triplets.push_back(t);
    }
  }
  return result;
}

const std::vector<std::string> &default_sentence_templates() {
  static const std::vector<std::string> templates = {
      "The {predicate} of {subject} is {object}.",
      "{subject} has a {predicate} of {object}.",
      "The recorded {predicate} for {subject} is {object}.",
      "With a {predicate} of {object}, {subject} is listed in the record.",
      "According to the record, the {predicate} of {subject} is {object}.",
      "{subject}'s {predicate} is {object}.",
  };
  return templates;
}

std::string fill_template(std::string_view templ, const Triplet &t) {
  std::string out;
  for (std::size_t i = 0; i < templ.size();) {
    if (templ[i] == '{') {
      const std::size_t close = templ.find('}', i);
      if (close != std::string_view::npos) {
        const std::string_view key = templ.substr(i + 1, close - i - 1);
        if (key == "subject" || key == "predicate" || key == "object") {
          out += key == "subject"     ? t.subject
                 : key == "predicate" ? t.predicate
                                      : t.object;
          i = close + 1;
          continue;
        }
      }
    }
    out += templ[i++];
  }
  return out;
}

std::string render_triplet_sentence(const Triplet &t,
                                    const std::vector<std::string> &templates,
                                    Rng &rng) {
  if (templates.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no sentence templates");
  }
  return fill_template(rng.pick(templates), t);
}

std::string render_triplet_sentence_with_command(
    const Triplet &t, const std::string &command,
    const std::vector<std::string> &templates, Rng &rng) {
  // Draw first so the stream advances the same way whether or not the
  // command succeeds.
  std::string fallback = render_triplet_sentence(t, templates, rng);
  try {
    std::string sentence =
        run_filter_command(command, t.subject + "\t" + t.predicate + "\t" + t.object);
    if (!sentence.empty() && sentence.find(t.object) != std::string::npos) {
      return sentence;
    }
  } catch (const Error &) {
  }
  return fallback;
}

}  // namespace dimkit
