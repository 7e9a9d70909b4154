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

#include "dimkit/embedding.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "dimkit/errors.hpp"
#include "dimkit/format.hpp"
#include "dimkit/text_util.hpp"

namespace dimkit {

namespace {

bool is_token_punct(char32_t c) {
  if (c < 0x80) return !is_ascii_alnum(c);
  // General and CJK punctuation, full-width forms punctuation.
  if (c >= 0x2000 && c <= 0x206F) return true;
  if (c >= 0x3000 && c <= 0x303F) return true;
  if (c >= 0xFF00 && c <= 0xFF0F) return true;
  if (c >= 0xFF1A && c <= 0xFF20) return true;
  return c == 0xB7 || c == 0xA0;
}

std::uint64_t fnv1a(std::u32string_view text) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char32_t c : text) {
    for (int shift = 0; shift < 32; shift += 8) {
      h ^= (c >> shift) & 0xFF;
      h *= 0x100000001B3ULL;
    }
  }
  return h;
}

}  // namespace

std::vector<std::string> default_tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::u32string word;
  auto flush = [&] {
    if (!word.empty()) {
      tokens.push_back(u32_to_utf8(word));
      word.clear();
    }
  };
  for (char32_t c : utf8_to_u32(text)) {
    if (is_ascii_alnum(c)) {
      word += (c >= 'A' && c <= 'Z') ? c - 'A' + 'a' : c;
      continue;
    }
    flush();
    if (is_space(c) || is_token_punct(c)) continue;
    tokens.push_back(u32_to_utf8(std::u32string(1, c)));
  }
  flush();
  return tokens;
}

TrigramEmbedder::TrigramEmbedder(std::size_t dimension) : dimension_(dimension) {
  if (dimension_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "embedding dimension must be positive");
  }
}

std::vector<std::string> TrigramEmbedder::tokenize(std::string_view text) const {
  return default_tokenize(text);
}

std::optional<Embedding> TrigramEmbedder::vector(std::string_view token) const {
  std::u32string padded = U"<" + utf8_to_u32(token) + U">";
  Embedding v(dimension_, 0.0);
  for (std::size_t i = 0; i + 3 <= padded.size(); ++i) {
    v[fnv1a(std::u32string_view(padded).substr(i, 3)) % dimension_] += 1.0;
  }
  return v;
}

VectorFileEmbedder VectorFileEmbedder::load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, "cannot open vector file '" + path.string() + "'");
  }
  VectorFileEmbedder emb;
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::kParse, path.string() + ": missing header");
  }
  std::size_t count = 0;
  {
    std::istringstream header(line);
    if (!(header >> count >> emb.dimension_) || emb.dimension_ == 0) {
      throw Error(ErrorCode::kParse,
                  path.string() + ": header must be '<count> <dim>'");
    }
  }
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    std::vector<std::string> parts;
    for (const std::string &p : split(line, ' ')) {
      if (!p.empty()) parts.push_back(p);
    }
    if (parts.size() != emb.dimension_ + 1) {
      throw Error(ErrorCode::kParse, path.string() + ":" +
                                         std::to_string(line_no) + ": expected " +
                                         std::to_string(emb.dimension_) +
                                         " components");
    }
    Embedding v;
    v.reserve(emb.dimension_);
    for (std::size_t i = 1; i < parts.size(); ++i) {
      try {
        v.push_back(parse_real(parts[i]));
      } catch (const Error &e) {
        throw Error(ErrorCode::kParse, path.string() + ":" +
                                           std::to_string(line_no) + ": " +
                                           e.what());
      }
    }
    emb.vectors_[normalize_surface(parts[0])] = std::move(v);
  }
  if (emb.vectors_.size() != count) {
    throw Error(ErrorCode::kParse, path.string() + ": header announces " +
                                       std::to_string(count) + " vectors, found " +
                                       std::to_string(emb.vectors_.size()));
  }
  return emb;
}

std::vector<std::string> VectorFileEmbedder::tokenize(std::string_view text) const {
  return default_tokenize(text);
}

std::optional<Embedding> VectorFileEmbedder::vector(std::string_view token) const {
  auto it = vectors_.find(std::string(token));
  if (it == vectors_.end()) return std::nullopt;
  return it->second;
}

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = std::min(a.size(), b.size());
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace dimkit
