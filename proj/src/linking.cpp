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

#include "dimkit/linking.hpp"

#include <algorithm>

#include "dimkit/text_util.hpp"

namespace dimkit {

namespace {

void check_threshold(double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "link threshold must lie in (0, 1]");
  }
}

double similarity_u32(const std::u32string &a, const std::u32string &b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein(a, b)) /
                   static_cast<double>(longest);
}

std::vector<Embedding> keyword_vectors(const UnitRecord &record,
                                       const EmbeddingProvider &emb) {
  std::vector<Embedding> out;
  for (const std::string &kw : record.keywords) {
    for (const std::string &tok : emb.tokenize(kw)) {
      // Keywords without a vector can never be the best match.
      if (auto v = emb.vector(tok)) out.push_back(std::move(*v));
    }
  }
  return out;
}

double clamped_max_cosine(const Embedding &token,
                          const std::vector<Embedding> &keywords) {
  double best = 0.0;
  for (const Embedding &k : keywords) {
    best = std::max(best, std::clamp(cosine_similarity(token, k), 0.0, 1.0));
  }
  return best;
}

void rank(std::vector<LinkCandidate> &candidates) {
  std::sort(candidates.begin(), candidates.end(),
            [](const LinkCandidate &a, const LinkCandidate &b) {
              if (a.score != b.score) return a.score > b.score;
              if (a.prior != b.prior) return a.prior > b.prior;
              return a.unit_id < b.unit_id;
            });
}

}  // namespace

std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double string_similarity(std::string_view a, std::string_view b) {
  return similarity_u32(utf8_to_u32(normalize_surface(a)),
                        utf8_to_u32(normalize_surface(b)));
}

double mention_similarity(std::string_view surface, const UnitRecord &record) {
  const std::u32string s = utf8_to_u32(normalize_surface(surface));
  double best = 0.0;
  for (const std::string &form : record.surface_forms()) {
    best = std::max(best, similarity_u32(s, utf8_to_u32(normalize_surface(form))));
  }
  return best;
}

double context_score(std::string_view context, const UnitRecord &record,
                     const EmbeddingProvider &emb) {
  if (record.keywords.empty()) {
    throw Error(ErrorCode::kConfiguration,
                "unit '" + record.unit_id + "' has no keywords");
  }
  const std::vector<std::string> tokens = emb.tokenize(context);
  if (tokens.empty()) return 1.0;
  const std::vector<Embedding> keywords = keyword_vectors(record, emb);
  double sum = 0.0;
  for (const std::string &tok : tokens) {
    if (auto v = emb.vector(tok)) sum += clamped_max_cosine(*v, keywords);
  }
  return sum / static_cast<double>(tokens.size());
}

Linker::Linker(const KnowledgeBase &kb, const EmbeddingProvider &emb,
               double threshold)
    : kb_(kb), emb_(emb), threshold_(threshold) {
  check_threshold(threshold);
  entries_.reserve(kb.size());
  for (const UnitRecord &r : kb.records()) {
    Entry e{&r, {}, keyword_vectors(r, emb)};
    for (const std::string &f : r.surface_forms()) {
      e.forms.push_back(utf8_to_u32(normalize_surface(f)));
    }
    entries_.push_back(std::move(e));
  }
}

double Linker::similarity(const Entry &entry, const std::u32string &surface) const {
  double best = 0.0;
  for (const std::u32string &f : entry.forms) {
    best = std::max(best, similarity_u32(surface, f));
    if (best == 1.0) break;
  }
  return best;
}

double Linker::context_probability(
    const Entry &entry,
    const std::vector<std::optional<Embedding>> &context_vectors) const {
  if (entry.record->keywords.empty()) {
    throw Error(ErrorCode::kConfiguration,
                "unit '" + entry.record->unit_id + "' has no keywords");
  }
  if (context_vectors.empty()) return 1.0;
  double sum = 0.0;
  for (const auto &v : context_vectors) {
    if (v) sum += clamped_max_cosine(*v, entry.keyword_vectors);
  }
  return sum / static_cast<double>(context_vectors.size());
}

std::vector<LinkCandidate> Linker::candidates(std::string_view surface) const {
  const std::u32string s = utf8_to_u32(normalize_surface(surface));
  std::vector<LinkCandidate> out;
  if (s.empty()) return out;
  for (const Entry &e : entries_) {
    const double sim = similarity(e, s);
    if (!passes_threshold(sim, threshold_)) continue;
    LinkCandidate c;
    c.unit_id = e.record->unit_id;
    c.prior = e.record->frequency;
    c.p_mention = sim;
    c.p_context = 1.0;
    c.score = c.prior * c.p_mention;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<LinkCandidate> Linker::link(const Mention &mention) const {
  const std::u32string s = utf8_to_u32(normalize_surface(mention.surface));
  std::vector<LinkCandidate> out;
  if (s.empty()) return out;

  std::vector<std::optional<Embedding>> context_vectors;
  for (const std::string &tok : emb_.tokenize(mention.context)) {
    context_vectors.push_back(emb_.vector(tok));
  }
  for (const Entry &e : entries_) {
    const double sim = similarity(e, s);
    if (!passes_threshold(sim, threshold_)) continue;
    LinkCandidate c;
    c.unit_id = e.record->unit_id;
    c.prior = e.record->frequency;
    c.p_mention = sim;
    c.p_context = context_probability(e, context_vectors);
    c.score = c.prior * c.p_mention * c.p_context;
    out.push_back(std::move(c));
  }
  rank(out);
  return out;
}

std::vector<LinkCandidate> candidate_generation(const KnowledgeBase &kb,
                                                std::string_view surface,
                                                double threshold) {
  check_threshold(threshold);
  const std::u32string s = utf8_to_u32(normalize_surface(surface));
  std::vector<LinkCandidate> out;
  if (s.empty()) return out;
  for (const UnitRecord &r : kb.records()) {
    const double sim = mention_similarity(surface, r);
    if (!passes_threshold(sim, threshold)) continue;
    out.push_back({r.unit_id, r.frequency, sim, 1.0, r.frequency * sim});
  }
  return out;
}

std::vector<LinkCandidate> link(const KnowledgeBase &kb, const Mention &mention,
                                const EmbeddingProvider &emb, double threshold) {
  return Linker(kb, emb, threshold).link(mention);
}

}  // namespace dimkit
