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

// Quantity detection in free text and the semi-automated annotation
// pipeline (rule annotation, masked-fill filtering, review file).

#ifndef DIMKIT_QUANTITY_TEXT_HPP_
#define DIMKIT_QUANTITY_TEXT_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dimkit/linking.hpp"

namespace dimkit {

// Half-open byte range [begin, end).
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  bool empty() const { return begin == end; }
  friend bool operator==(const Span &, const Span &) = default;
  friend auto operator<=>(const Span &, const Span &) = default;
};

struct ValueMatch {
  Span span;
  double value = 0.0;
};

// Numeric literals, leftmost-longest and non-overlapping: optional sign
// (only when not glued to a preceding letter or digit), digits with
// optional thousands groups, optional fraction, optional exponent and an
// optional trailing '%' that scales by 0.01.
std::vector<ValueMatch> extract_values(std::string_view text);

struct QuantityMention {
  Span value_span;
  Span unit_span;  // empty, at value_span.end, for a bare value
  double value = 0.0;
  std::string unit_surface;
  std::optional<UnitId> linked_unit;
  double link_score = 0.0;

  // value_span.begin .. unit_span.end (or value_span.end for bare values).
  Span quantity_span() const;
};

struct ExtractionOptions {
  std::size_t max_unit_chars = 12;
  std::size_t max_unit_tokens = 4;
  // Unit candidates shorter than this many code points only link on an
  // exact surface match.
  std::size_t min_fuzzy_chars = 4;
};

// One mention per extracted value; linked_unit is set when some unit window
// after the value links above the linker's threshold.
std::vector<QuantityMention> extract_quantities(
    std::string_view text, const Linker &linker,
    const ExtractionOptions &options = {});

std::vector<QuantityMention> extract_quantities(
    std::string_view text, const KnowledgeBase &kb,
    const EmbeddingProvider &emb, double threshold = kDefaultLinkThreshold);

// The linking rule extract_quantities applies to one candidate surface:
// top-1 of linker.link(), or for short surfaces the best exact match.
std::optional<LinkCandidate> link_unit_surface(
    const Linker &linker, std::string_view surface, std::string_view context,
    const ExtractionOptions &options = {});

// `text` with `span` removed, for use as linking context.
std::string context_without(std::string_view text, Span span);

inline constexpr std::string_view kMaskToken = "[MASK]";

// Replaces the span with kMaskToken.
std::string mask_span(std::string_view text, Span span);

// Predicts the token hidden behind a single kMaskToken.
class MaskedFillOracle {
 public:
  virtual ~MaskedFillOracle() = default;
  // May throw; the pipeline treats any exception as an oracle failure.
  virtual std::string predict(std::string_view masked_text) const = 0;
};

// Always predicts the same token.
class ConstantOracle final : public MaskedFillOracle {
 public:
  explicit ConstantOracle(std::string token) : token_(std::move(token)) {}
  std::string predict(std::string_view) const override { return token_; }

 private:
  std::string token_;
};

// Predicts "code" when the mask is glued to a preceding letter or to a
// hyphen that follows a letter ("LPUI-[MASK]"), otherwise "5".
class GluedTokenOracle final : public MaskedFillOracle {
 public:
  std::string predict(std::string_view masked_text) const override;
};

// Looks predictions up in a two-column TSV (masked text, prediction).
// Unknown inputs throw.
class TableOracle final : public MaskedFillOracle {
 public:
  static TableOracle load(const std::string &path);
  void add(std::string masked_text, std::string prediction);
  std::string predict(std::string_view masked_text) const override;

 private:
  std::vector<std::pair<std::string, std::string>> table_;
};

// Runs a shell command with the masked text on stdin and takes the first
// line of stdout as the prediction. Nonzero exit status throws.
class CommandOracle final : public MaskedFillOracle {
 public:
  explicit CommandOracle(std::string command) : command_(std::move(command)) {}
  std::string predict(std::string_view masked_text) const override;

 private:
  std::string command_;
};

// "constant:<tok>", "glued", "table:<path>" or "cmd:<shell command>".
std::unique_ptr<MaskedFillOracle> make_oracle(const std::string &descriptor);

enum class Provenance { kRule, kRuleFilter, kReviewed };
const char *provenance_name(Provenance p);
Provenance parse_provenance(std::string_view name);

struct AnnotatedSentence {
  std::size_t line_no = 0;  // 1-based line in the corpus
  std::string text;
  std::vector<QuantityMention> mentions;
  Provenance provenance = Provenance::kRule;
};

// Verdicts written as "<accept|reject>:<reason>"; a reviewer may rewrite
// them to plain "accept" or "reject".
struct ReviewEntry {
  std::size_t line_no = 0;
  Span span;  // quantity span
  std::string surface;
  std::string verdict;

  bool accepted() const;
};

struct AnnotationResult {
  std::vector<AnnotatedSentence> rule_annotated;  // step 1
  std::vector<AnnotatedSentence> retained;        // after the filter
  std::vector<ReviewEntry> review;
};

// Step 1 annotates with extract_quantities and keeps sentences with a
// linked quantity (bare values are dropped). Step 2 masks each quantity and
// keeps it when the oracle's prediction is numeric or links as a unit.
// Step 3 is the review file in the result.
AnnotationResult annotate_corpus(const std::vector<std::string> &corpus,
                                 const Linker &linker,
                                 const MaskedFillOracle &oracle,
                                 const ExtractionOptions &options = {});

// Re-applies (possibly hand-edited) review verdicts to the step-1 output.
// Sentences left without mentions are dropped.
std::vector<AnnotatedSentence> apply_review(
    const std::vector<AnnotatedSentence> &rule_annotated,
    const std::vector<ReviewEntry> &review);

}  // namespace dimkit

#endif  // DIMKIT_QUANTITY_TEXT_HPP_
