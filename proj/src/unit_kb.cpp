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

#include "dimkit/unit_kb.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "dimkit/format.hpp"
#include "dimkit/text_util.hpp"

namespace dimkit {

namespace {

constexpr std::size_t kNumFields = 11;

const char *const kFieldNames[] = {
    "UnitID",    "Label_zh",     "Label_en",      "Symbol",
    "Alias",     "Description",  "Keywords",      "Frequency",
    "QuantityKind", "DimensionVec", "ConversionVal", "AffineOffset"};

std::vector<std::string> parse_list(std::string_view field) {
  std::vector<std::string> out;
  if (trim(field).empty()) return out;
  for (const std::string &part : split(field, '|')) {
    std::string_view t = trim(part);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

Error field_error(ErrorCode code, std::string_view source, std::size_t line,
                  std::string_view unit_id, std::size_t field,
                  std::string_view what) {
  std::ostringstream msg;
  msg << source << ":" << line << ": unit '" << unit_id << "' field '"
      << kFieldNames[field] << "': " << what;
  return Error(code, msg.str());
}

std::string join_list(const std::vector<std::string> &items) {
  return join(items, "|");
}

}  // namespace

std::vector<std::string> UnitRecord::surface_forms() const {
  std::vector<std::string> forms;
  if (!label_en.empty()) forms.push_back(label_en);
  if (!label_zh.empty()) forms.push_back(label_zh);
  forms.insert(forms.end(), symbols.begin(), symbols.end());
  forms.insert(forms.end(), aliases.begin(), aliases.end());
  return forms;
}

void FrequencyWeights::validate() const {
  if (alpha_gt < 0 || alpha_hs < 0 || alpha_cf < 0 ||
      std::fabs(alpha_gt + alpha_hs + alpha_cf - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidArgument,
                "frequency weights must be nonnegative and sum to 1");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "delta must lie in (0, 1)");
  }
}

IncomparableUnitsError::IncomparableUnitsError(const UnitId &from,
                                               const DimensionVector &from_dim,
                                               const UnitId &to,
                                               const DimensionVector &to_dim)
    : Error(ErrorCode::kIncomparable,
            "incomparable units '" + from + "' (" + format_symbolic(from_dim) +
                ") and '" + to + "' (" + format_symbolic(to_dim) + ")"),
      from_dim_(from_dim),
      to_dim_(to_dim) {}

KnowledgeBase KnowledgeBase::from_records(std::vector<UnitRecord> records,
                                          double min_frequency) {
  KnowledgeBase kb;
  std::sort(records.begin(), records.end(),
            [](const UnitRecord &a, const UnitRecord &b) {
              return a.unit_id < b.unit_id;
            });
  for (std::size_t i = 0; i < records.size(); ++i) {
    const UnitRecord &r = records[i];
    if (r.unit_id.empty()) {
      throw Error(ErrorCode::kValidation, "record with empty unit id");
    }
    if (i > 0 && records[i - 1].unit_id == r.unit_id) {
      throw Error(ErrorCode::kDuplicateId, "duplicate unit id '" + r.unit_id + "'");
    }
    if (!(r.conversion_val > 0.0) || !std::isfinite(r.conversion_val)) {
      throw Error(ErrorCode::kValidation,
                  "unit '" + r.unit_id + "' field 'ConversionVal': must be positive");
    }
    if (!(r.frequency >= min_frequency - 1e-12 && r.frequency <= 1.0 + 1e-12)) {
      throw Error(ErrorCode::kValidation,
                  "unit '" + r.unit_id + "' field 'Frequency': " +
                      format_shortest(r.frequency) + " outside [" +
                      format_shortest(min_frequency) + ", 1]");
    }
    if (r.quantity_kind.empty()) {
      throw Error(ErrorCode::kValidation,
                  "unit '" + r.unit_id + "' field 'QuantityKind': empty");
    }
  }
  kb.records_ = std::move(records);

  std::map<std::string, QuantityKind, std::less<>> kinds;
  for (std::size_t i = 0; i < kb.records_.size(); ++i) {
    const UnitRecord &r = kb.records_[i];
    kb.by_id_.emplace(r.unit_id, i);
    auto [it, inserted] = kinds.try_emplace(r.quantity_kind);
    QuantityKind &kind = it->second;
    if (inserted) {
      kind.kind_id = r.quantity_kind;
      kind.name = r.quantity_kind;
      kind.dimension = r.dimension;
    }
    kind.units.push_back(r.unit_id);
    if (r.conversion_val == 1.0 && r.affine_offset == 0.0) {
      if (!kind.standard_unit.empty()) {
        throw Error(ErrorCode::kValidation,
                    "kind '" + kind.kind_id + "' has two standard units: '" +
                        kind.standard_unit + "' and '" + r.unit_id + "'");
      }
      kind.standard_unit = r.unit_id;
    }
  }
  for (auto &[id, kind] : kinds) {
    if (kind.standard_unit.empty()) {
      throw Error(ErrorCode::kValidation,
                  "kind '" + id + "' has no standard unit (ConversionVal 1)");
    }
    kind.dimension = kb.at(kind.standard_unit).dimension;
    for (const UnitId &u : kind.units) {
      const UnitRecord &r = kb.at(u);
      if (r.dimension != kind.dimension) {
        throw Error(ErrorCode::kValidation,
                    "unit '" + u + "' field 'DimensionVec': " +
                        format_dimension(r.dimension) + " differs from kind '" +
                        id + "' standard " + format_dimension(kind.dimension));
      }
    }
    kb.kind_by_id_.emplace(id, kb.kinds_.size());
    kb.kinds_.push_back(std::move(kind));
  }

  for (const UnitRecord &r : kb.records_) {
    std::set<std::string> forms;
    for (const std::string &f : r.surface_forms()) {
      std::string n = normalize_surface(f);
      if (!n.empty()) forms.insert(n);
    }
    for (const std::string &n : forms) kb.surface_index_[n].push_back(r.unit_id);
    kb.dimension_index_[format_dimension(r.dimension)].push_back(r.unit_id);
  }
  return kb;
}

const UnitRecord *KnowledgeBase::find(std::string_view unit_id) const {
  auto it = by_id_.find(unit_id);
  return it == by_id_.end() ? nullptr : &records_[it->second];
}

const UnitRecord &KnowledgeBase::at(std::string_view unit_id) const {
  const UnitRecord *r = find(unit_id);
  if (!r) {
    throw Error(ErrorCode::kUnknownUnit,
                "unknown unit '" + std::string(unit_id) + "'");
  }
  return *r;
}

const QuantityKind *KnowledgeBase::find_kind(std::string_view kind_id) const {
  auto it = kind_by_id_.find(kind_id);
  return it == kind_by_id_.end() ? nullptr : &kinds_[it->second];
}

KnowledgeBase parse_kb(std::istream &in, std::string_view source_name,
                       const std::map<UnitId, double> *frequency_override,
                       double min_frequency) {
  std::vector<UnitRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line[0] == '#') continue;
    std::vector<std::string> f = split(line, '\t');
    std::string id = f.empty() ? "" : std::string(trim(f[0]));
    if (f.size() != kNumFields && f.size() != kNumFields + 1) {
      std::ostringstream msg;
      msg << source_name << ":" << line_no << ": unit '" << id << "': expected "
          << kNumFields << " or " << kNumFields + 1 << " fields, got "
          << f.size();
      throw Error(ErrorCode::kParse, msg.str());
    }
    UnitRecord r;
    r.unit_id = id;
    r.label_zh = std::string(trim(f[1]));
    r.label_en = std::string(trim(f[2]));
    r.symbols = parse_list(f[3]);
    r.aliases = parse_list(f[4]);
    r.description = std::string(trim(f[5]));
    r.keywords = parse_list(f[6]);

    auto number = [&](std::size_t field) {
      try {
        return parse_real(trim(f[field]));
      } catch (const Error &e) {
        throw field_error(ErrorCode::kParse, source_name, line_no, id, field,
                          e.what());
      }
    };

    const double *override_freq = nullptr;
    if (frequency_override) {
      auto it = frequency_override->find(id);
      if (it != frequency_override->end()) override_freq = &it->second;
    }
    if (override_freq) {
      r.frequency = *override_freq;
    } else if (trim(f[7]).empty()) {
      throw field_error(ErrorCode::kValidation, source_name, line_no, id, 7,
                        "missing and not covered by a frequency sidecar");
    } else {
      r.frequency = number(7);
    }
    r.quantity_kind = std::string(trim(f[8]));
    try {
      r.dimension = parse_dimension(trim(f[9]));
    } catch (const Error &e) {
      throw field_error(e.code(), source_name, line_no, id, 9, e.what());
    }
    r.conversion_val = number(10);
    if (f.size() > kNumFields && !trim(f[11]).empty()) {
      r.affine_offset = number(11);
    }
    records.push_back(std::move(r));
  }
  return KnowledgeBase::from_records(std::move(records), min_frequency);
}

KnowledgeBase load_kb(const std::filesystem::path &path,
                      const std::optional<std::filesystem::path> &frequency_sidecar,
                      const FrequencyWeights &weights) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open KB file '" + path.string() + "'");
  if (frequency_sidecar) {
    weights.validate();
    std::map<UnitId, double> freq =
        compute_frequency(load_frequency_sidecar(*frequency_sidecar), weights);
    return parse_kb(in, path.string(), &freq, weights.delta);
  }
  return parse_kb(in, path.string(), nullptr, weights.delta);
}

void write_kb(std::ostream &out, const KnowledgeBase &kb) {
  for (const UnitRecord &r : kb.records()) {
    out << r.unit_id << '\t' << r.label_zh << '\t' << r.label_en << '\t'
        << join_list(r.symbols) << '\t' << join_list(r.aliases) << '\t'
        << r.description << '\t' << join_list(r.keywords) << '\t'
        << format_shortest(r.frequency) << '\t' << r.quantity_kind << '\t'
        << format_dimension(r.dimension) << '\t'
        << format_shortest(r.conversion_val);
    if (r.affine_offset != 0.0) out << '\t' << format_shortest(r.affine_offset);
    out << '\n';
  }
}

std::map<UnitId, RawFrequency> load_frequency_sidecar(
    const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo,
                "cannot open frequency file '" + path.string() + "'");
  }
  std::map<UnitId, RawFrequency> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line[0] == '#') continue;
    std::vector<std::string> f = split(line, '\t');
    if (f.size() != 4) {
      throw Error(ErrorCode::kParse, path.string() + ":" +
                                         std::to_string(line_no) +
                                         ": expected 4 fields");
    }
    try {
      raw[std::string(trim(f[0]))] = {parse_real(trim(f[1])),
                                      parse_real(trim(f[2])),
                                      parse_real(trim(f[3]))};
    } catch (const Error &e) {
      throw Error(ErrorCode::kParse, path.string() + ":" +
                                         std::to_string(line_no) + ": " +
                                         e.what());
    }
  }
  return raw;
}

std::map<UnitId, double> compute_frequency(
    const std::map<UnitId, RawFrequency> &raw, const FrequencyWeights &weights) {
  weights.validate();
  std::map<UnitId, double> score;
  for (const auto &[id, r] : raw) {
    if (!(r.gt > 0) || !(r.hs > 0) || !(r.cf > 0)) {
      throw Error(ErrorCode::kDomain,
                  "unit '" + id + "': raw frequencies must be positive");
    }
    score[id] = weights.alpha_gt * std::log(r.gt) +
                weights.alpha_hs * std::log(r.hs) +
                weights.alpha_cf * std::log(r.cf);
  }
  if (score.empty()) {
    throw Error(ErrorCode::kDegenerate, "no raw frequencies to normalize");
  }
  auto [lo_it, hi_it] = std::minmax_element(
      score.begin(), score.end(),
      [](const auto &a, const auto &b) { return a.second < b.second; });
  const double lo = lo_it->second;
  const double hi = hi_it->second;
  if (!(hi > lo)) {
    throw Error(ErrorCode::kDegenerate,
                "all frequency scores are equal; normalization undefined");
  }
  std::map<UnitId, double> freq;
  for (const auto &[id, s] : score) {
    double f;
    if (s == hi) {
      f = 1.0;
    } else if (s == lo) {
      f = weights.delta;
    } else {
      f = (1.0 - weights.delta) * (s - lo) / (hi - lo) + weights.delta;
    }
    freq[id] = f;
  }
  return freq;
}

double kind_frequency(const KnowledgeBase &kb, std::string_view kind_id) {
  const QuantityKind *kind = kb.find_kind(kind_id);
  if (!kind) {
    throw Error(ErrorCode::kUnknownKind,
                "unknown quantity kind '" + std::string(kind_id) + "'");
  }
  std::vector<double> freqs;
  for (const UnitId &u : kind->units) freqs.push_back(kb.at(u).frequency);
  std::sort(freqs.begin(), freqs.end(), std::greater<>());
  const std::size_t n = std::min<std::size_t>(5, freqs.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) sum += freqs[i];
  return sum / static_cast<double>(n);
}

double conversion_factor(const KnowledgeBase &kb, std::string_view u1,
                         std::string_view u2) {
  const UnitRecord &a = kb.at(u1);
  const UnitRecord &b = kb.at(u2);
  if (!is_comparable(a.dimension, b.dimension)) {
    throw IncomparableUnitsError(a.unit_id, a.dimension, b.unit_id, b.dimension);
  }
  if (a.unit_id == b.unit_id) return 1.0;
  if (a.affine_offset != 0.0 || b.affine_offset != 0.0) {
    throw Error(ErrorCode::kAffineUnsupported,
                "affine conversion between '" + a.unit_id + "' and '" +
                    b.unit_id + "' is not supported");
  }
  return a.conversion_val / b.conversion_val;
}

std::vector<UnitId> lookup_surface(const KnowledgeBase &kb,
                                   std::string_view form) {
  std::string n = normalize_surface(form);
  if (n.empty()) return {};
  auto it = kb.surface_index().find(n);
  if (it == kb.surface_index().end()) return {};
  return it->second;
}

std::vector<UnitId> units_of_dimension(const KnowledgeBase &kb,
                                       const DimensionVector &dv) {
  auto it = kb.dimension_index().find(format_dimension(dv));
  if (it == kb.dimension_index().end()) return {};
  return it->second;
}

}  // namespace dimkit
