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

// Unit linking: ranks knowledge-base units for a textual mention by
// prior(u) * p(u | mention) * p(u | context).

#ifndef DIMKIT_LINKING_HPP_
#define DIMKIT_LINKING_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "dimkit/embedding.hpp"
#include "dimkit/unit_kb.hpp"

namespace dimkit {

inline constexpr double kDefaultLinkThreshold = 0.5;

struct Mention {
  std::string surface;  // non-empty
  std::string context;  // surrounding text with the mention removed
};

struct LinkCandidate {
  UnitId unit_id;
  double prior = 0.0;      // unit frequency
  double p_mention = 0.0;  // normalized edit similarity
  double p_context = 1.0;  // keyword/context similarity
  double score = 0.0;      // prior * p_mention * p_context
};

// Character-level (code point) Levenshtein distance.
std::size_t levenshtein(std::u32string_view a, std::u32string_view b);

// 1 - d / max(len) between normalized strings; 1 for two empty strings.
double string_similarity(std::string_view a, std::string_view b);

// Best string_similarity against any label, symbol or alias of the record.
double mention_similarity(std::string_view surface, const UnitRecord &record);

// True when `similarity` admits a candidate: strictly above the threshold,
// or an exact normalized match (so a threshold of 1 keeps exact forms).
inline bool passes_threshold(double similarity, double threshold) {
  return similarity > threshold || similarity == 1.0;
}

// Average over context tokens of the best clamped cosine against the
// record's keyword tokens. Empty context scores 1. Throws
// Error(kConfiguration) when the record has no keywords.
double context_score(std::string_view context, const UnitRecord &record,
                     const EmbeddingProvider &emb);

// Precomputes normalized surface forms and keyword vectors for repeated
// linking against one knowledge base. Holds references: `kb` and `emb` must
// outlive it.
class Linker {
 public:
  Linker(const KnowledgeBase &kb, const EmbeddingProvider &emb,
         double threshold = kDefaultLinkThreshold);

  const KnowledgeBase &kb() const { return kb_; }
  const EmbeddingProvider &embedder() const { return emb_; }
  double threshold() const { return threshold_; }

  // p_context left at 1, score = prior * p_mention.
  std::vector<LinkCandidate> candidates(std::string_view surface) const;

  // Ranked by score, then prior, then unit id.
  std::vector<LinkCandidate> link(const Mention &mention) const;

 private:
  struct Entry {
    const UnitRecord *record;
    std::vector<std::u32string> forms;
    std::vector<Embedding> keyword_vectors;
  };

  double similarity(const Entry &entry, const std::u32string &surface) const;
  double context_probability(const Entry &entry,
                             const std::vector<std::optional<Embedding>>
                                 &context_vectors) const;

  const KnowledgeBase &kb_;
  const EmbeddingProvider &emb_;
  double threshold_;
  std::vector<Entry> entries_;
};

std::vector<LinkCandidate> candidate_generation(const KnowledgeBase &kb,
                                                std::string_view surface,
                                                double threshold);

std::vector<LinkCandidate> link(const KnowledgeBase &kb, const Mention &mention,
                                const EmbeddingProvider &emb,
                                double threshold = kDefaultLinkThreshold);

}  // namespace dimkit

#endif  // DIMKIT_LINKING_HPP_
