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

// Token embeddings used to score how well a context matches a unit's
// keywords.

#ifndef DIMKIT_EMBEDDING_HPP_
#define DIMKIT_EMBEDDING_HPP_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dimkit {

using Embedding = std::vector<double>;

// Implementations must be deterministic and safe for concurrent reads.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  virtual std::vector<std::string> tokenize(std::string_view text) const = 0;
  // Absent for out-of-vocabulary tokens.
  virtual std::optional<Embedding> vector(std::string_view token) const = 0;
  virtual std::size_t dimension() const = 0;
};

// Lowercased runs of ASCII letters and digits, plus every other
// non-space, non-punctuation code point (each CJK character, '°', ...) as
// a token of its own.
std::vector<std::string> default_tokenize(std::string_view text);

// Hashes the boundary-padded character trigrams of a token into a
// fixed-width count vector. Every token has a vector, and tokens sharing
// spelling share similarity, which is enough for offline testing.
class TrigramEmbedder final : public EmbeddingProvider {
 public:
  explicit TrigramEmbedder(std::size_t dimension = 256);

  std::vector<std::string> tokenize(std::string_view text) const override;
  std::optional<Embedding> vector(std::string_view token) const override;
  std::size_t dimension() const override { return dimension_; }

 private:
  std::size_t dimension_;
};

// Word vectors from a text file: a "<count> <dim>" header followed by one
// "<token> <dim floats>" line per token.
class VectorFileEmbedder final : public EmbeddingProvider {
 public:
  static VectorFileEmbedder load(const std::filesystem::path &path);

  std::vector<std::string> tokenize(std::string_view text) const override;
  std::optional<Embedding> vector(std::string_view token) const override;
  std::size_t dimension() const override { return dimension_; }
  std::size_t vocabulary_size() const { return vectors_.size(); }

 private:
  std::size_t dimension_ = 0;
  std::unordered_map<std::string, Embedding> vectors_;
};

// 0 when either vector has zero norm.
double cosine_similarity(std::span<const double> a, std::span<const double> b);

}  // namespace dimkit

#endif  // DIMKIT_EMBEDDING_HPP_
