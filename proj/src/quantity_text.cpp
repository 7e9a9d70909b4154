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

#include "dimkit/quantity_text.hpp"

#include <algorithm>
#include <charconv>

#include "dimkit/text_util.hpp"

namespace dimkit {

namespace {

bool digit_at(std::string_view s, std::size_t i) {
  return i < s.size() && s[i] >= '0' && s[i] <= '9';
}

bool alnum_byte(char c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z');
}

std::size_t digit_run(std::string_view s, std::size_t i) {
  std::size_t j = i;
  while (digit_at(s, j)) ++j;
  return j;
}

constexpr std::string_view kFullWidthPercent = "\xEF\xBC\x85";

// Characters that end a unit window.
bool is_window_stop(char32_t c) {
  switch (c) {
    case ',': case '.': case ';': case ':': case '!': case '?': case '(':
    case ')': case '[': case ']': case '{': case '}': case '"': case '\'':
    case '\n': case '\r': case '\t': case '<': case '>': case '=': case '+':
    case '&': case '%':
    case U'。': case U'，': case U'；': case U'：': case U'！': case U'？':
    case U'、': case U'（': case U'）': case U'“': case U'”': case U'‘':
    case U'’': case U'．': case U'《': case U'》': case U'％':
      return true;
    default:
      return false;
  }
}

}  // namespace

Span QuantityMention::quantity_span() const {
  if (unit_span.empty()) return value_span;
  return {value_span.begin, unit_span.end};
}

std::vector<ValueMatch> extract_values(std::string_view text) {
  std::vector<ValueMatch> out;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t start = i;
    std::size_t pos = i;
    bool sign = false;
    if ((text[i] == '-' || text[i] == '+') && digit_at(text, i + 1) &&
        (i == 0 || !alnum_byte(text[i - 1]))) {
      sign = true;
      pos = i + 1;
    } else if (!digit_at(text, i)) {
      ++i;
      continue;
    }

    std::size_t int_end = digit_run(text, pos);
    bool grouped = false;
    if (int_end - pos <= 3) {
      std::size_t g = int_end;
      while (g < text.size() && text[g] == ',' && digit_run(text, g + 1) == g + 4) {
        g += 4;
        grouped = true;
      }
      if (grouped) int_end = g;
    }
    std::size_t end = int_end;
    if (end < text.size() && text[end] == '.' && digit_at(text, end + 1)) {
      end = digit_run(text, end + 1);
    }
    if (end < text.size() && (text[end] == 'e' || text[end] == 'E')) {
      std::size_t e = end + 1;
      if (e < text.size() && (text[e] == '+' || text[e] == '-')) ++e;
      if (digit_at(text, e)) end = digit_run(text, e);
    }

    std::string literal;
    for (std::size_t k = sign && text[start] == '+' ? start + 1 : start; k < end;
         ++k) {
      if (text[k] != ',') literal += text[k];
    }
    double value = 0.0;
    std::from_chars(literal.data(), literal.data() + literal.size(), value);

    if (end < text.size() && text[end] == '%') {
      value *= 0.01;
      end += 1;
    } else if (text.substr(end, kFullWidthPercent.size()) == kFullWidthPercent) {
      value *= 0.01;
      end += kFullWidthPercent.size();
    }
    out.push_back({{start, end}, value});
    i = end;
  }
  return out;
}

std::string context_without(std::string_view text, Span span) {
  std::string out(text.substr(0, span.begin));
  out += ' ';
  out += text.substr(span.end);
  return out;
}

std::string mask_span(std::string_view text, Span span) {
  std::string out(text.substr(0, span.begin));
  out += kMaskToken;
  out += text.substr(span.end);
  return out;
}

std::optional<LinkCandidate> link_unit_surface(const Linker &linker,
                                               std::string_view surface,
                                               std::string_view context,
                                               const ExtractionOptions &options) {
  std::vector<LinkCandidate> ranked =
      linker.link({std::string(surface), std::string(context)});
  if (codepoint_length(normalize_surface(surface)) < options.min_fuzzy_chars) {
    // Short surfaces are too easy to hit by accident: keep exact matches only.
    for (const LinkCandidate &c : ranked) {
      if (c.p_mention == 1.0) return c;
    }
    return std::nullopt;
  }
  if (ranked.empty()) return std::nullopt;
  return ranked.front();
}

std::vector<QuantityMention> extract_quantities(std::string_view text,
                                                const Linker &linker,
                                                const ExtractionOptions &options) {
  std::vector<QuantityMention> out;
  const std::vector<ValueMatch> values = extract_values(text);
  for (std::size_t vi = 0; vi < values.size(); ++vi) {
    const ValueMatch &v = values[vi];
    QuantityMention m;
    m.value_span = v.span;
    m.value = v.value;
    m.unit_span = {v.span.end, v.span.end};

    // The window may not run into the next value.
    const std::size_t limit =
        vi + 1 < values.size() ? values[vi + 1].span.begin : text.size();
    std::size_t start = v.span.end;
    while (start < limit && (text[start] == ' ' || text[start] == '\t')) ++start;

    const std::string_view rest = text.substr(start, limit - start);
    const std::vector<std::size_t> offs = codepoint_offsets(rest);
    const std::u32string cps = utf8_to_u32(rest);

    struct Best {
      std::size_t end = 0;
      double p_mention = -1.0;
      LinkCandidate candidate;
    } best;

    std::size_t tokens = 0;
    bool in_token = false;
    for (std::size_t k = 0; k < cps.size() && k < options.max_unit_chars; ++k) {
      const char32_t c = cps[k];
      const bool after_caret = k > 0 && cps[k - 1] == '^';
      if (is_window_stop(c) || (is_ascii_digit(c) && !after_caret)) break;
      if (is_space(c)) {
        in_token = false;
        continue;
      }
      if (!in_token) {
        in_token = true;
        if (++tokens > options.max_unit_tokens) break;
      }
      const bool continues_word = k + 1 < cps.size() && is_ascii_alpha(c) &&
                                  is_ascii_alpha(cps[k + 1]);
      if (continues_word) continue;

      const std::size_t end_byte = start + offs[k + 1];
      const Span span{start, end_byte};
      const std::string_view surface = text.substr(span.begin, span.size());
      auto top = link_unit_surface(linker, surface, context_without(text, span),
                                   options);
      if (!top) continue;
      if (top->p_mention > best.p_mention ||
          (top->p_mention == best.p_mention && end_byte > best.end)) {
        best.end = end_byte;
        best.p_mention = top->p_mention;
        best.candidate = *top;
      }
    }
    if (best.p_mention >= 0.0) {
      m.unit_span = {start, best.end};
      m.unit_surface = std::string(text.substr(start, best.end - start));
      m.linked_unit = best.candidate.unit_id;
      m.link_score = best.candidate.score;
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<QuantityMention> extract_quantities(std::string_view text,
                                                const KnowledgeBase &kb,
                                                const EmbeddingProvider &emb,
                                                double threshold) {
  return extract_quantities(text, Linker(kb, emb, threshold));
}

}  // namespace dimkit
