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


#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "dimkit/quantity_text.hpp"
#include "dimkit/text_util.hpp"

namespace oracle {

namespace {

std::vector<std::string> fields_of(const std::string &line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(line);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::vector<std::string> list_of(const std::string &field) {
  std::vector<std::string> out;
  for (const std::string &p : fields_of(field, '|')) {
    if (!p.empty()) out.push_back(p);
  }
  return out;
}

std::u32string norm(const std::string &s) {
  return dimkit::utf8_to_u32(dimkit::normalize_surface(s));
}

double cosine(const std::vector<double> &a, const std::vector<double> &b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

bool ascii_letter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// Brute containment: try every byte offset.
bool contains(const std::string &object, const std::string &mention) {
  const std::string o = dimkit::normalize_surface(object);
  const std::string m = dimkit::normalize_surface(mention);
  if (m.empty() || m.size() > o.size()) return false;
  for (std::size_t i = 0; i + m.size() <= o.size(); ++i) {
    if (o.compare(i, m.size(), m) != 0) continue;
    const bool left = i > 0 && ascii_letter(o[i - 1]) && ascii_letter(m.front());
    const bool right = i + m.size() < o.size() && ascii_letter(o[i + m.size()]) &&
                       ascii_letter(m.back());
    if (!left && !right) return true;
  }
  return false;
}

}  // namespace

std::vector<std::string> RawUnit::forms() const {
  std::vector<std::string> out;
  if (!label_zh.empty()) out.push_back(label_zh);
  if (!label_en.empty()) out.push_back(label_en);
  out.insert(out.end(), symbols.begin(), symbols.end());
  out.insert(out.end(), aliases.begin(), aliases.end());
  return out;
}

std::filesystem::path data_dir() { return DIMKIT_TEST_DATA_DIR; }
std::filesystem::path test_data_dir() { return DIMKIT_TEST_FIXTURE_DIR; }

std::vector<RawUnit> read_units(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<RawUnit> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> f = fields_of(line, '\t');
    if (f.size() < 11) throw std::runtime_error("short row: " + line);
    RawUnit u;
    u.id = f[0];
    u.label_zh = f[1];
    u.label_en = f[2];
    u.symbols = list_of(f[3]);
    u.aliases = list_of(f[4]);
    u.keywords = list_of(f[6]);
    u.frequency = std::stod(f[7]);
    u.kind = f[8];
    u.dim_text = f[9];
    u.dim = parse_dim(f[9]);
    u.conversion = std::stod(f[10]);
    if (f.size() > 11 && !f[11].empty()) u.offset = std::stod(f[11]);
    out.push_back(u);
  }
  return out;
}

const RawUnit &find_unit(const std::vector<RawUnit> &units, const std::string &id) {
  for (const RawUnit &u : units) {
    if (u.id == id) return u;
  }
  throw std::runtime_error("no unit " + id);
}

Dim parse_dim(const std::string &text) {
  Dim d{};
  int flag = 0;
  char tail = 0;
  const int n = std::sscanf(text.c_str(), "A%dE%dL%dI%dM%dH%dT%dD%d%c", &d[0],
                            &d[1], &d[2], &d[3], &d[4], &d[5], &d[6], &flag,
                            &tail);
  if (n != 8) throw std::runtime_error("bad dimension " + text);
  return d;
}

Dim add(const Dim &a, const Dim &b) {
  Dim r{};
  for (int i = 0; i < 7; ++i) r[i] = a[i] + b[i];
  return r;
}

Dim sub(const Dim &a, const Dim &b) {
  Dim r{};
  for (int i = 0; i < 7; ++i) r[i] = a[i] - b[i];
  return r;
}

std::size_t edit_distance(const std::u32string &a, const std::u32string &b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1,
                                          std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + cost});
    }
  }
  return d[a.size()][b.size()];
}

std::vector<Scored> brute_link(const std::vector<RawUnit> &units,
                               const std::string &surface,
                               const std::string &context,
                               const dimkit::EmbeddingProvider &emb,
                               double threshold) {
  std::vector<Scored> out;
  const std::u32string s = norm(surface);
  if (s.empty()) return out;
  const std::vector<std::string> tokens = emb.tokenize(context);
  for (const RawUnit &u : units) {
    double sim = 0.0;
    for (const std::string &form : u.forms()) {
      const std::u32string f = norm(form);
      const std::size_t longest = std::max(s.size(), f.size());
      const double v =
          longest == 0 ? 1.0
                       : 1.0 - static_cast<double>(edit_distance(s, f)) /
                                   static_cast<double>(longest);
      sim = std::max(sim, v);
    }
    if (!(sim > threshold || sim == 1.0)) continue;

    double pc = 1.0;
    if (!tokens.empty()) {
      std::vector<std::vector<double>> kw;
      for (const std::string &k : u.keywords) {
        for (const std::string &t : emb.tokenize(k)) {
          if (auto v = emb.vector(t)) kw.push_back(*v);
        }
      }
      double sum = 0.0;
      for (const std::string &t : tokens) {
        auto v = emb.vector(t);
        if (!v) continue;
        double best = 0.0;
        for (const auto &k : kw) {
          best = std::max(best, std::clamp(cosine(*v, k), 0.0, 1.0));
        }
        sum += best;
      }
      pc = sum / static_cast<double>(tokens.size());
    }
    out.push_back({u.id, u.frequency, sim, pc, u.frequency * sim * pc});
  }
  std::sort(out.begin(), out.end(), [](const Scored &a, const Scored &b) {
    return std::make_tuple(-a.score, -a.prior, a.id) <
           std::make_tuple(-b.score, -b.prior, b.id);
  });
  return out;
}

std::size_t correct_candidates(const std::vector<RawUnit> &units,
                               const dimkit::TaskInstance &inst) {
  using dimkit::TaskType;
  const auto &p = inst.prompt;
  auto unit = [&](const std::string &id) -> const RawUnit & {
    return find_unit(units, id);
  };
  std::size_t n = 0;
  switch (inst.type) {
    case TaskType::kQuantityExtraction:
      return inst.gold.empty() ? 0 : 1;
    case TaskType::kKindMatch:
      for (const auto &c : inst.candidates) {
        n += unit(c).kind == p.at("kind").get<std::string>();
      }
      return n;
    case TaskType::kComparable: {
      const RawUnit &a = unit(p.at("anchor").get<std::string>());
      for (const auto &c : inst.candidates) n += c != a.id && unit(c).dim == a.dim;
      return n;
    }
    case TaskType::kDimensionPrediction: {
      const RawUnit &o = unit(p.at("original_unit").get<std::string>());
      for (const auto &c : inst.candidates) n += unit(c).dim == o.dim;
      return n;
    }
    case TaskType::kDimensionArithmetic: {
      const auto ids = p.at("units").get<std::vector<std::string>>();
      const auto ops = p.at("ops").get<std::vector<std::string>>();
      Dim d = unit(ids[0]).dim;
      for (std::size_t k = 1; k < ids.size(); ++k) {
        d = ops[k - 1] == "*" ? add(d, unit(ids[k]).dim) : sub(d, unit(ids[k]).dim);
      }
      for (const auto &c : inst.candidates) n += unit(c).dim == d;
      return n;
    }
    case TaskType::kMagnitudeComparison: {
      double best = 0.0;
      for (const auto &c : inst.candidates) best = std::max(best, unit(c).conversion);
      for (const auto &c : inst.candidates) {
        n += std::fabs(unit(c).conversion - best) <= 1e-9 * best;
      }
      return n;
    }
    case TaskType::kUnitConversion: {
      const double beta = unit(p.at("from").get<std::string>()).conversion /
                          unit(p.at("to").get<std::string>()).conversion;
      for (const auto &c : inst.candidates) {
        n += std::fabs(std::strtod(c.c_str(), nullptr) - beta) <= 1e-9 * beta;
      }
      return n;
    }
  }
  return n;
}

NaiveBootstrap naive_bootstrap(const std::vector<dimkit::Triplet> &store,
                               const std::vector<RawUnit> &units,
                               const dimkit::Linker &linker, double tau,
                               int iterations, std::size_t seed_units) {
  NaiveBootstrap r;
  std::vector<RawUnit> sorted = units;
  std::sort(sorted.begin(), sorted.end(), [](const RawUnit &a, const RawUnit &b) {
    return std::make_pair(-a.frequency, a.id) < std::make_pair(-b.frequency, b.id);
  });
  for (std::size_t i = 0; i < seed_units && i < sorted.size(); ++i) {
    for (const std::string &f : sorted[i].forms()) {
      const std::string n = dimkit::normalize_surface(f);
      if (!n.empty()) r.mentions.insert(n);
    }
  }
  auto has_quantity = [&](const std::string &object) {
    for (const auto &m : dimkit::extract_quantities(object, linker)) {
      if (m.linked_unit) return true;
    }
    return false;
  };
  auto mentioned = [&](const std::string &object) {
    for (const std::string &m : r.mentions) {
      if (contains(object, m)) return true;
    }
    return false;
  };

  for (int round = 0; round < iterations; ++round) {
    std::set<std::string> preds;
    for (const auto &t : store) {
      if (mentioned(t.object)) preds.insert(t.predicate);
    }
    r.predicates.clear();
    for (const std::string &p : preds) {
      int total = 0, hits = 0;
      for (const auto &t : store) {
        if (t.predicate != p) continue;
        ++total;
        hits += has_quantity(t.object);
      }
      if (static_cast<double>(hits) / total >= tau) r.predicates.insert(p);
    }
    for (const auto &t : store) {
      if (!r.predicates.count(t.predicate)) continue;
      for (const auto &m : dimkit::extract_quantities(t.object, linker)) {
        if (!m.linked_unit) continue;
        const std::string n = dimkit::normalize_surface(m.unit_surface);
        if (!n.empty()) r.mentions.insert(n);
      }
    }
  }
  for (const auto &t : store) {
    if ((iterations == 0 || r.predicates.count(t.predicate)) && mentioned(t.object)) {
      r.triplets.push_back(t);
    }
  }
  return r;
}

double span_f1(const std::set<std::pair<std::size_t, std::size_t>> &gold,
               const std::set<std::pair<std::size_t, std::size_t>> &found) {
  if (gold.empty() && found.empty()) return 1.0;
  std::size_t hit = 0;
  for (const auto &s : found) hit += gold.count(s);
  if (hit == 0) return 0.0;
  const double p = static_cast<double>(hit) / found.size();
  const double r = static_cast<double>(hit) / gold.size();
  return 2 * p * r / (p + r);
}

}  // namespace oracle
