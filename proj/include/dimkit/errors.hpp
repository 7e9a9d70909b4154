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

#ifndef DIMKIT_ERRORS_HPP_
#define DIMKIT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dimkit {

// Every failure raised by the core carries one of these codes. The C API
// maps them one-to-one onto dimkit_status values.
enum class ErrorCode {
  kParse,
  kValidation,
  kRange,
  kIncomparable,
  kAffineUnsupported,
  kUnknownUnit,
  kUnknownKind,
  kDomain,
  kDegenerate,
  kDuplicateId,
  kConfiguration,
  kGeneration,
  kMisaligned,
  kNoAlternative,
  kIo,
  kInvalidArgument,
};

const char *error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Malformed input text. `offset` is a byte offset into the parsed string.
class ParseError : public Error {
 public:
  ParseError(const std::string &message, std::size_t offset)
      : Error(ErrorCode::kParse,
              message + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace dimkit

#endif  // DIMKIT_ERRORS_HPP_
