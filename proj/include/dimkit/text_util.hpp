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

#ifndef DIMKIT_TEXT_UTIL_HPP_
#define DIMKIT_TEXT_UTIL_HPP_

#include <string>
#include <string_view>
#include <vector>

namespace dimkit {

// Decodes UTF-8; invalid bytes decode to U+FFFD one byte at a time.
std::u32string utf8_to_u32(std::string_view text);
std::string u32_to_utf8(std::u32string_view text);

// Byte offset of every code point start, plus text.size() at the end.
std::vector<std::size_t> codepoint_offsets(std::string_view text);

std::size_t codepoint_length(std::string_view text);

// Surface-form normalization shared by indexing, lookup and similarity:
// NFC, ASCII case folding, trimmed, internal whitespace collapsed to one
// space.
std::string normalize_surface(std::string_view text);

bool is_ascii_alpha(char32_t c);
bool is_ascii_digit(char32_t c);
bool is_ascii_alnum(char32_t c);
bool is_space(char32_t c);
bool is_cjk(char32_t c);

std::string_view trim(std::string_view text);
std::vector<std::string> split(std::string_view text, char delimiter);
std::string join(const std::vector<std::string> &parts, std::string_view sep);

}  // namespace dimkit

#endif  // DIMKIT_TEXT_UTIL_HPP_
