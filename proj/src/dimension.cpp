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

#include "dimkit/dimension.hpp"

#include <cstdint>
#include <string>

namespace dimkit {

namespace {

constexpr char kEncodingLetters[kNumBases] = {'A', 'E', 'L', 'I',
                                              'M', 'H', 'T'};

// Symbolic display order L M H E T A I, as indexes into the encoding order.
constexpr std::size_t kSymbolicOrder[kNumBases] = {2, 4, 5, 1, 6, 0, 3};

int checked_exponent(std::int64_t value) {
  if (value < -kMaxExponent || value > kMaxExponent) {
    throw Error(ErrorCode::kRange,
                "dimension exponent " + std::to_string(value) +
                    " outside [-12, 12]");
  }
  return static_cast<int>(value);
}

}  // namespace

DimensionVector::DimensionVector(const Exponents &exponents)
    : exponents_(exponents) {
  for (int e : exponents_) checked_exponent(e);
}

DimensionVector DimensionVector::of(Base base, int exponent) {
  Exponents e{};
  e[static_cast<std::size_t>(base)] = exponent;
  return DimensionVector(e);
}

bool DimensionVector::dimensionless() const {
  for (int e : exponents_) {
    if (e != 0) return false;
  }
  return true;
}

DimensionVector parse_dimension(std::string_view text) {
  DimensionVector::Exponents exps{};
  std::size_t pos = 0;

  auto read_int = [&](char letter) -> std::int64_t {
    if (pos >= text.size() || text[pos] != letter) {
      throw ParseError(std::string("expected '") + letter + "'", pos);
    }
    ++pos;
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
      negative = true;
      ++pos;
    }
    std::size_t digits_start = pos;
    std::int64_t value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      value = value * 10 + (text[pos] - '0');
      if (value > 1000) {
        throw Error(ErrorCode::kRange,
                    std::string("exponent of ") + letter + " out of range");
      }
      ++pos;
    }
    if (pos == digits_start) {
      throw ParseError(std::string("expected digits after '") + letter + "'",
                       pos);
    }
    return negative ? -value : value;
  };

  for (std::size_t i = 0; i < kNumBases; ++i) {
    exps[i] = checked_exponent(read_int(kEncodingLetters[i]));
  }
  std::size_t d_offset = pos;
  std::int64_t d = read_int('D');
  if (pos != text.size()) {
    throw ParseError("trailing characters", pos);
  }
  DimensionVector dv(exps);
  if (d != 0 && d != 1) {
    throw ParseError("D flag must be 0 or 1", d_offset);
  }
  if ((d == 1) != dv.dimensionless()) {
    throw Error(ErrorCode::kValidation,
                "D flag " + std::to_string(d) + " inconsistent with exponents in '" +
                    std::string(text) + "'");
  }
  return dv;
}

std::string format_dimension(const DimensionVector &dv) {
  std::string out;
  for (std::size_t i = 0; i < kNumBases; ++i) {
    out += kEncodingLetters[i];
    out += std::to_string(dv.exponents()[i]);
  }
  out += dv.dimensionless() ? "D1" : "D0";
  return out;
}

std::string format_symbolic(const DimensionVector &dv,
                            std::string_view separator) {
  if (dv.dimensionless()) return "D";
  std::string out;
  for (std::size_t idx : kSymbolicOrder) {
    int e = dv.exponents()[idx];
    if (e == 0) continue;
    if (!out.empty()) out += separator;
    out += kEncodingLetters[idx];
    if (e != 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

DimensionVector dim_mul(const DimensionVector &a, const DimensionVector &b) {
  DimensionVector::Exponents e{};
  for (std::size_t i = 0; i < kNumBases; ++i) {
    e[i] = checked_exponent(std::int64_t{a.exponents()[i]} + b.exponents()[i]);
  }
  return DimensionVector(e);
}

DimensionVector dim_div(const DimensionVector &a, const DimensionVector &b) {
  DimensionVector::Exponents e{};
  for (std::size_t i = 0; i < kNumBases; ++i) {
    e[i] = checked_exponent(std::int64_t{a.exponents()[i]} - b.exponents()[i]);
  }
  return DimensionVector(e);
}

DimensionVector dim_pow(const DimensionVector &a, int k) {
  DimensionVector::Exponents e{};
  for (std::size_t i = 0; i < kNumBases; ++i) {
    e[i] = checked_exponent(std::int64_t{a.exponents()[i]} * k);
  }
  return DimensionVector(e);
}

const char *error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kValidation: return "validation";
    case ErrorCode::kRange: return "range";
    case ErrorCode::kIncomparable: return "incomparable";
    case ErrorCode::kAffineUnsupported: return "affine-unsupported";
    case ErrorCode::kUnknownUnit: return "unknown-unit";
    case ErrorCode::kUnknownKind: return "unknown-kind";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kDegenerate: return "degenerate";
    case ErrorCode::kDuplicateId: return "duplicate-id";
    case ErrorCode::kConfiguration: return "configuration";
    case ErrorCode::kGeneration: return "generation";
    case ErrorCode::kMisaligned: return "misaligned";
    case ErrorCode::kNoAlternative: return "no-alternative";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

}  // namespace dimkit
