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

#include "dimkit/augment.hpp"

#include <algorithm>
#include <cmath>

#include "dimkit/equation.hpp"
#include "dimkit/format.hpp"
#include "dimkit/text_util.hpp"

namespace dimkit {

namespace {

bool starts_ascii_alnum(std::string_view s) {
  return !s.empty() && static_cast<unsigned char>(s.front()) < 0x80 &&
         is_ascii_alnum(static_cast<char32_t>(s.front()));
}

bool contains_cjk(std::string_view s) {
  for (char32_t c : utf8_to_u32(s)) {
    if (is_cjk(c)) return true;
  }
  return false;
}

bool ascii_letter_at(std::string_view s, std::size_t i) {
  const char c = s[i];
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

// Occurrence of `form` in `text` at `at` that is not glued to ASCII letters.
bool standalone(std::string_view text, std::size_t at, std::size_t len) {
  if (at > 0 && ascii_letter_at(text, at - 1) && ascii_letter_at(text, at)) {
    return false;
  }
  const std::size_t end = at + len;
  if (end < text.size() && ascii_letter_at(text, end) &&
      ascii_letter_at(text, end - 1)) {
    return false;
  }
  return true;
}

std::optional<QuestionUnit> find_question_unit(const std::string &question,
                                               const std::optional<UnitId> &unit,
                                               const Linker &linker) {
  const KnowledgeBase &kb = linker.kb();
  if (unit) {
    const UnitRecord &r = kb.at(*unit);
    std::optional<QuestionUnit> best;
    for (const std::string &form : r.surface_forms()) {
      for (std::size_t at = question.find(form); at != std::string::npos;
           at = question.find(form, at + 1)) {
        if (!standalone(question, at, form.size())) continue;
        const Span span{at, at + form.size()};
        if (!best || span.begin < best->span.begin ||
            (span.begin == best->span.begin && span.size() > best->span.size())) {
          best = QuestionUnit{span, r.unit_id};
        }
        break;
      }
    }
    return best;
  }

  // Every exact surface match, then the last one not inside a longer match.
  const std::vector<std::size_t> offsets = codepoint_offsets(question);
  std::vector<Span> matches;
  for (std::size_t i = 0; i + 1 < offsets.size(); ++i) {
    for (std::size_t j = i + 1; j < offsets.size() && j - i <= 12; ++j) {
      const Span span{offsets[i], offsets[j]};
      const std::string_view s(question.data() + span.begin, span.size());
      if (trim(s).size() != s.size()) break;
      if (!standalone(question, span.begin, span.size())) continue;
      if (kb.surface_index().count(normalize_surface(s))) matches.push_back(span);
    }
  }
  std::optional<Span> chosen;
  for (const Span &m : matches) {
    bool inside = false;
    for (const Span &o : matches) {
      if (o != m && o.begin <= m.begin && m.end <= o.end) inside = true;
    }
    if (!inside && (!chosen || m.begin > chosen->begin)) chosen = m;
  }
  if (!chosen) return std::nullopt;
  const std::string surface = question.substr(chosen->begin, chosen->size());
  const std::vector<UnitId> &ids =
      kb.surface_index().find(normalize_surface(surface))->second;
  UnitId id = ids.front();
  if (ids.size() > 1) {
    for (const LinkCandidate &c :
         linker.link({surface, context_without(question, *chosen)})) {
      if (std::find(ids.begin(), ids.end(), c.unit_id) != ids.end()) {
        id = c.unit_id;
        break;
      }
    }
  }
  return QuestionUnit{*chosen, id};
}

void check_equation(const MwpProblem &p) {
  double value = 0.0;
  try {
    value = evaluate_equation(p.equation);
  } catch (const Error &e) {
    throw Error(ErrorCode::kValidation,
                "problem " + p.id + ": bad equation: " + e.what());
  }
  if (!nearly_equal(value, p.answer, kAnswerTolerance)) {
    throw Error(ErrorCode::kValidation,
                "problem " + p.id + ": equation gives " + format_shortest(value) +
                    ", answer is " + format_shortest(p.answer));
  }
}

// Surface forms other than `current`, distinct after normalization.
std::vector<std::string> alternative_surfaces(const UnitRecord &r,
                                              std::string_view current) {
  const std::string cur = normalize_surface(current);
  std::vector<std::string> out;
  std::vector<std::string> seen{cur};
  for (const std::string &f : r.surface_forms()) {
    const std::string n = normalize_surface(f);
    if (std::find(seen.begin(), seen.end(), n) != seen.end()) continue;
    seen.push_back(n);
    out.push_back(f);
  }
  return out;
}

// Same-dimension multiplicative units, restricted to the unit's own kind
// when that kind has any.
std::vector<UnitId> alternative_units(const KnowledgeBase &kb,
                                      const UnitRecord &r) {
  std::vector<UnitId> same_kind, same_dim;
  for (const UnitId &id : units_of_dimension(kb, r.dimension)) {
    const UnitRecord &o = kb.at(id);
    if (id == r.unit_id || o.affine_offset != 0.0) continue;
    same_dim.push_back(id);
    if (o.quantity_kind == r.quantity_kind) same_kind.push_back(id);
  }
  return same_kind.empty() ? same_dim : same_kind;
}

// Surface of `target` written like `current` is written for `source`.
std::string matching_surface(const UnitRecord &source, const UnitRecord &target,
                             std::string_view current) {
  if (contains_cjk(current) && !target.label_zh.empty()) return target.label_zh;
  const std::string cur = normalize_surface(current);
  for (const std::string &sym : source.symbols) {
    if (normalize_surface(sym) == cur && !target.symbols.empty()) {
      return target.symbols.front();
    }
  }
  return target.label_en;
}

std::string gap_for(std::string_view surface) {
  return starts_ascii_alnum(surface) ? " " : "";
}

// Rewrites body[from, to) and shifts the spans of later mentions.
void splice_body(MwpProblem &p, std::size_t mention, std::size_t from,
                 std::size_t to, const std::string &replacement) {
  const std::ptrdiff_t delta =
      static_cast<std::ptrdiff_t>(replacement.size()) -
      static_cast<std::ptrdiff_t>(to - from);
  p.body.replace(from, to - from, replacement);
  for (std::size_t k = 0; k < p.body_mentions.size(); ++k) {
    if (k == mention) continue;
    QuantityMention &m = p.body_mentions[k];
    if (m.value_span.begin >= to) {
      m.value_span.begin += delta;
      m.value_span.end += delta;
      m.unit_span.begin += delta;
      m.unit_span.end += delta;
    }
  }
}

const QuantityMention &body_mention(const MwpProblem &p, std::size_t mention) {
  if (mention >= p.body_mentions.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "problem " + p.id + " has no body mention " + std::to_string(mention));
  }
  return p.body_mentions[mention];
}

const QuestionUnit &question_unit(const MwpProblem &p) {
  if (!p.question_unit) {
    throw Error(ErrorCode::kNoAlternative,
                "problem " + p.id + " has no unit in its question");
  }
  return *p.question_unit;
}

void require_comparable(const UnitRecord &from, const UnitRecord &to) {
  if (from.unit_id == to.unit_id) {
    throw Error(ErrorCode::kNoAlternative, "replacement unit equals the original");
  }
  if (from.dimension != to.dimension) {
    throw IncomparableUnitsError(from.unit_id, from.dimension, to.unit_id,
                                 to.dimension);
  }
  if (from.affine_offset != 0.0 || to.affine_offset != 0.0) {
    throw Error(ErrorCode::kAffineUnsupported,
                "affine units cannot be rescaled: " + from.unit_id + ", " +
                    to.unit_id);
  }
}

// "(a/b)" for beta >= 1, "(a*c)" with c = 1/beta otherwise, so the factor
// printed is the larger, usually exact, one.
std::string scaled_literal(double value, double beta, double inverse) {
  if (beta >= 1.0) return "(" + format_fixed(value) + "/" + format_fixed(beta) + ")";
  return "(" + format_fixed(value) + "*" + format_fixed(inverse) + ")";
}

AugmentationRecord base_record(const MwpProblem &p, AugmentMethod method) {
  AugmentationRecord rec;
  rec.problem_id = p.id;
  rec.method = method;
  rec.answer_before = p.answer;
  rec.answer_after = p.answer;
  return rec;
}

bool in_magnitude_range(double v) {
  const double a = std::fabs(v);
  return a >= kMinRewrittenValue && a <= kMaxRewrittenValue;
}

}  // namespace

MwpProblem prepare_problem(MwpProblem problem, const Linker &linker) {
  problem.body_mentions.clear();
  for (QuantityMention &m : extract_quantities(problem.body, linker)) {
    if (m.linked_unit) problem.body_mentions.push_back(std::move(m));
  }
  if (problem.answer_unit) linker.kb().at(*problem.answer_unit);
  problem.question_unit =
      find_question_unit(problem.question, problem.answer_unit, linker);
  check_equation(problem);
  return problem;
}

const char *augment_method_name(AugmentMethod m) {
  switch (m) {
    case AugmentMethod::kContextFormat: return "context_format";
    case AugmentMethod::kContextDimension: return "context_dimension";
    case AugmentMethod::kQuestionFormat: return "question_format";
    case AugmentMethod::kQuestionDimension: return "question_dimension";
  }
  return "unknown";
}

AugmentMethod parse_augment_method(std::string_view name) {
  for (AugmentMethod m : kAllAugmentMethods) {
    if (name == augment_method_name(m)) return m;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown augmentation method '" + std::string(name) + "'");
}

Augmented augment_context_format(const MwpProblem &p, const KnowledgeBase &kb,
                                 std::size_t mention, const std::string &surface) {
  const QuantityMention &m = body_mention(p, mention);
  const UnitRecord &unit = kb.at(*m.linked_unit);
  const std::vector<std::string> alts = alternative_surfaces(unit, m.unit_surface);
  if (std::find(alts.begin(), alts.end(), surface) == alts.end()) {
    throw Error(ErrorCode::kNoAlternative,
                "'" + surface + "' is not another surface form of " + unit.unit_id);
  }
  Augmented out{p, base_record(p, AugmentMethod::kContextFormat)};
  const std::string replacement = gap_for(surface) + surface;
  const std::size_t from = m.value_span.end;
  splice_body(out.problem, mention, from, m.unit_span.end, replacement);
  QuantityMention &nm = out.problem.body_mentions[mention];
  nm.unit_span = {from + replacement.size() - surface.size(),
                  from + replacement.size()};
  nm.unit_surface = surface;
  out.record.original_unit = out.record.new_unit = unit.unit_id;
  return out;
}

Augmented augment_context_dimension(const MwpProblem &p, const KnowledgeBase &kb,
                                    std::size_t mention, const UnitId &new_unit) {
  const QuantityMention &m = body_mention(p, mention);
  const UnitRecord &from = kb.at(*m.linked_unit);
  const UnitRecord &to = kb.at(new_unit);
  require_comparable(from, to);
  const double beta = conversion_factor(kb, from.unit_id, to.unit_id);
  const double inverse = conversion_factor(kb, to.unit_id, from.unit_id);
  const double value = m.value * beta;
  if (!in_magnitude_range(value)) {
    throw Error(ErrorCode::kRange, "rewritten value " + format_shortest(value) +
                                       " is outside the plausible range");
  }

  Augmented out{p, base_record(p, AugmentMethod::kContextDimension)};
  const std::string surface = matching_surface(from, to, m.unit_surface);
  const std::string value_text = format_fixed(value);
  const std::string replacement = value_text + gap_for(surface) + surface;
  const std::size_t begin = m.value_span.begin;
  splice_body(out.problem, mention, begin, m.unit_span.end, replacement);
  QuantityMention &nm = out.problem.body_mentions[mention];
  nm.value = value;
  nm.value_span = {begin, begin + value_text.size()};
  nm.unit_span = {begin + replacement.size() - surface.size(),
                  begin + replacement.size()};
  nm.unit_surface = surface;
  nm.linked_unit = to.unit_id;

  // Literals for this quantity become expressions with the same value.
  const std::vector<EquationLiteral> literals = equation_literals(p.equation);
  std::string eq = p.equation;
  for (auto it = literals.rbegin(); it != literals.rend(); ++it) {
    if (it->value != m.value) continue;
    if (it->end < eq.size() && eq[it->end] == '%') continue;
    eq.replace(it->begin, it->end - it->begin, scaled_literal(value, beta, inverse));
  }
  out.problem.equation = eq;
  check_equation(out.problem);

  out.record.original_unit = from.unit_id;
  out.record.new_unit = to.unit_id;
  out.record.scale = beta;
  return out;
}

Augmented augment_question_format(const MwpProblem &p, const KnowledgeBase &kb,
                                  const std::string &surface) {
  const QuestionUnit &q = question_unit(p);
  const UnitRecord &unit = kb.at(q.unit_id);
  const std::string current = p.question.substr(q.span.begin, q.span.size());
  const std::vector<std::string> alts = alternative_surfaces(unit, current);
  if (std::find(alts.begin(), alts.end(), surface) == alts.end()) {
    throw Error(ErrorCode::kNoAlternative,
                "'" + surface + "' is not another surface form of " + unit.unit_id);
  }
  Augmented out{p, base_record(p, AugmentMethod::kQuestionFormat)};
  out.problem.question.replace(q.span.begin, q.span.size(), surface);
  out.problem.question_unit->span = {q.span.begin, q.span.begin + surface.size()};
  out.record.original_unit = out.record.new_unit = unit.unit_id;
  return out;
}

Augmented augment_question_dimension(const MwpProblem &p, const KnowledgeBase &kb,
                                     const UnitId &new_unit) {
  const QuestionUnit &q = question_unit(p);
  const UnitRecord &from = kb.at(q.unit_id);
  const UnitRecord &to = kb.at(new_unit);
  require_comparable(from, to);
  const double beta = conversion_factor(kb, from.unit_id, to.unit_id);
  const double inverse = conversion_factor(kb, to.unit_id, from.unit_id);

  Augmented out{p, base_record(p, AugmentMethod::kQuestionDimension)};
  const std::string current = p.question.substr(q.span.begin, q.span.size());
  const std::string surface = matching_surface(from, to, current);
  out.problem.question.replace(q.span.begin, q.span.size(), surface);
  out.problem.question_unit = QuestionUnit{
      {q.span.begin, q.span.begin + surface.size()}, to.unit_id};
  if (out.problem.answer_unit) out.problem.answer_unit = to.unit_id;

  const std::size_t body_at = equation_body_offset(p.equation);
  const std::string prefix = p.equation.substr(0, body_at);
  const std::string rest(trim(std::string_view(p.equation).substr(body_at)));
  out.problem.equation =
      prefix + "(" + rest + ")" +
      (beta >= 1.0 ? "*" + format_fixed(beta) : "/" + format_fixed(inverse));
  out.problem.answer = p.answer * beta;
  check_equation(out.problem);

  out.record.original_unit = from.unit_id;
  out.record.new_unit = to.unit_id;
  out.record.scale = beta;
  out.record.answer_after = out.problem.answer;
  return out;
}

Augmented augment_context_format(const MwpProblem &p, const KnowledgeBase &kb,
                                 Rng &rng) {
  std::vector<std::size_t> eligible;
  for (std::size_t k = 0; k < p.body_mentions.size(); ++k) {
    const QuantityMention &m = p.body_mentions[k];
    if (!alternative_surfaces(kb.at(*m.linked_unit), m.unit_surface).empty()) {
      eligible.push_back(k);
    }
  }
  if (eligible.empty()) {
    throw Error(ErrorCode::kNoAlternative,
                "problem " + p.id + ": no body unit with another surface form");
  }
  const std::size_t k = rng.pick(eligible);
  const QuantityMention &m = p.body_mentions[k];
  return augment_context_format(
      p, kb, k, rng.pick(alternative_surfaces(kb.at(*m.linked_unit), m.unit_surface)));
}

Augmented augment_context_dimension(const MwpProblem &p, const KnowledgeBase &kb,
                                    Rng &rng) {
  std::vector<std::pair<std::size_t, UnitId>> choices;
  for (std::size_t k = 0; k < p.body_mentions.size(); ++k) {
    const QuantityMention &m = p.body_mentions[k];
    const UnitRecord &r = kb.at(*m.linked_unit);
    if (r.affine_offset != 0.0) continue;
    for (const UnitId &id : alternative_units(kb, r)) {
      if (in_magnitude_range(m.value * conversion_factor(kb, r.unit_id, id))) {
        choices.emplace_back(k, id);
      }
    }
  }
  if (choices.empty()) {
    throw Error(ErrorCode::kNoAlternative,
                "problem " + p.id + ": no same-dimension substitute in the body");
  }
  // Mention first, then unit, so mentions with many substitutes are not
  // favoured.
  std::vector<std::size_t> mentions;
  for (const auto &[k, id] : choices) {
    if (mentions.empty() || mentions.back() != k) mentions.push_back(k);
  }
  const std::size_t k = rng.pick(mentions);
  std::vector<UnitId> units;
  for (const auto &[mk, id] : choices) {
    if (mk == k) units.push_back(id);
  }
  return augment_context_dimension(p, kb, k, rng.pick(units));
}

Augmented augment_question_format(const MwpProblem &p, const KnowledgeBase &kb,
                                  Rng &rng) {
  const QuestionUnit &q = question_unit(p);
  const std::vector<std::string> alts = alternative_surfaces(
      kb.at(q.unit_id), std::string_view(p.question).substr(q.span.begin, q.span.size()));
  if (alts.empty()) {
    throw Error(ErrorCode::kNoAlternative,
                "problem " + p.id + ": question unit has one surface form");
  }
  return augment_question_format(p, kb, rng.pick(alts));
}

Augmented augment_question_dimension(const MwpProblem &p, const KnowledgeBase &kb,
                                     Rng &rng) {
  const QuestionUnit &q = question_unit(p);
  const UnitRecord &r = kb.at(q.unit_id);
  if (r.affine_offset != 0.0) {
    throw Error(ErrorCode::kAffineUnsupported,
                "problem " + p.id + ": question unit is affine");
  }
  const std::vector<UnitId> alts = alternative_units(kb, r);
  if (alts.empty()) {
    throw Error(ErrorCode::kNoAlternative,
                "problem " + p.id + ": no same-dimension substitute for " + r.unit_id);
  }
  return augment_question_dimension(p, kb, rng.pick(alts));
}

Augmented apply_augmentation(AugmentMethod method, const MwpProblem &p,
                             const KnowledgeBase &kb, Rng &rng) {
  switch (method) {
    case AugmentMethod::kContextFormat: return augment_context_format(p, kb, rng);
    case AugmentMethod::kContextDimension:
      return augment_context_dimension(p, kb, rng);
    case AugmentMethod::kQuestionFormat: return augment_question_format(p, kb, rng);
    case AugmentMethod::kQuestionDimension:
      return augment_question_dimension(p, kb, rng);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown augmentation method");
}

void AugmentOptions::validate() const {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "eta must lie in [0, 1]");
  }
  if (methods.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no augmentation methods given");
  }
}

AugmentResult augment_dataset(const std::vector<MwpProblem> &problems,
                              const KnowledgeBase &kb, std::uint64_t master_seed,
                              const AugmentOptions &options) {
  options.validate();
  AugmentResult result;
  for (std::size_t i = 0; i < problems.size(); ++i) {
    const MwpProblem &p = problems[i];
    Rng rng(derive_seed(master_seed, "augment", i));
    std::optional<MwpProblem> augmented;
    if (rng.bernoulli(options.eta)) {
      const AugmentMethod method = rng.pick(options.methods);
      try {
        Augmented a = apply_augmentation(method, p, kb, rng);
        augmented = std::move(a.problem);
        result.records.push_back(std::move(a.record));
      } catch (const Error &e) {
        AugmentationRecord failed = base_record(p, method);
        failed.error = e.what();
        result.records.push_back(std::move(failed));
      }
    }
    if (options.policy == AugmentPolicy::kInPlace) {
      result.problems.push_back(augmented ? std::move(*augmented) : p);
    } else {
      result.problems.push_back(p);
      MwpProblem copy = augmented ? std::move(*augmented) : p;
      copy.id = p.id + "#aug";
      result.problems.push_back(std::move(copy));
    }
  }
  return result;
}

}  // namespace dimkit
