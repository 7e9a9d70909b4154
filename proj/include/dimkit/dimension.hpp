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

// Dimension vectors: integer exponents over the seven base quantities.
//
// The serialized form lists the bases in the order A E L I M H T followed by
// the dimensionless flag D, e.g. force per length is "A0E0L0I0M1H0T-2D0".
// The flag is derived from the exponents and never stored.

#ifndef DIMKIT_DIMENSION_HPP_
#define DIMKIT_DIMENSION_HPP_

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "dimkit/errors.hpp"

namespace dimkit {

// Base quantities in serialization order.
enum class Base : std::size_t {
  kAmount = 0,       // A, mole
  kCurrent = 1,      // E, ampere
  kLength = 2,       // L, metre
  kLuminous = 3,     // I, candela
  kMass = 4,         // M, kilogram
  kTemperature = 5,  // H, kelvin
  kTime = 6,         // T, second
};

inline constexpr std::size_t kNumBases = 7;
inline constexpr int kMaxExponent = 12;

class DimensionVector {
 public:
  using Exponents = std::array<int, kNumBases>;

  // Dimensionless.
  constexpr DimensionVector() : exponents_{} {}

  // Throws Error(kRange) if any exponent lies outside [-12, 12].
  explicit DimensionVector(const Exponents &exponents);

  static DimensionVector of(Base base, int exponent = 1);

  int operator[](Base base) const {
    return exponents_[static_cast<std::size_t>(base)];
  }
  const Exponents &exponents() const { return exponents_; }

  bool dimensionless() const;

  friend bool operator==(const DimensionVector &,
                         const DimensionVector &) = default;
  friend auto operator<=>(const DimensionVector &,
                          const DimensionVector &) = default;

 private:
  Exponents exponents_;
};

// Parses "A<int>E<int>L<int>I<int>M<int>H<int>T<int>D<0|1>". Throws
// ParseError on malformed text, Error(kValidation) when the D digit
// contradicts the exponents and Error(kRange) for out-of-bound exponents.
DimensionVector parse_dimension(std::string_view text);

// Canonical encoding: fixed order, no '+', no zero padding.
std::string format_dimension(const DimensionVector &dv);

// Human form in the order L M H E T A I, e.g. "LMT^-2"; "D" when
// dimensionless. `separator` goes between bases ("L^3 M T^-2" with " ").
std::string format_symbolic(const DimensionVector &dv,
                            std::string_view separator = "");

DimensionVector dim_mul(const DimensionVector &a, const DimensionVector &b);
DimensionVector dim_div(const DimensionVector &a, const DimensionVector &b);
DimensionVector dim_pow(const DimensionVector &a, int k);

inline bool is_comparable(const DimensionVector &a, const DimensionVector &b) {
  return a == b;
}

}  // namespace dimkit

#endif  // DIMKIT_DIMENSION_HPP_
