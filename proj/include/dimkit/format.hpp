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

#ifndef DIMKIT_FORMAT_HPP_
#define DIMKIT_FORMAT_HPP_

#include <string>
#include <string_view>

namespace dimkit {

// Shortest representation that round-trips to `value` (fixed or
// scientific, whichever is shorter).
std::string format_shortest(double value);

// Shortest round-tripping representation in plain positional notation,
// trailing zeros trimmed: 150000.0 -> "150000", 0.45 -> "0.45".
std::string format_fixed(double value);

// Strict decimal parse of the whole string; throws ParseError.
double parse_real(std::string_view text);

// Relative closeness |a - b| <= tol * max(|a|, |b|).
bool nearly_equal(double a, double b, double rel_tol);

}  // namespace dimkit

#endif  // DIMKIT_FORMAT_HPP_
