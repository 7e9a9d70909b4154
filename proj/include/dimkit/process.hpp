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

#ifndef DIMKIT_PROCESS_HPP_
#define DIMKIT_PROCESS_HPP_

#include <string>
#include <string_view>

namespace dimkit {

// Runs `command` through /bin/sh with `input` on stdin and returns the first
// line of its stdout, trimmed. Throws Error(kIo) on launch failure or a
// nonzero exit status.
std::string run_filter_command(const std::string &command,
                               std::string_view input);

}  // namespace dimkit

#endif  // DIMKIT_PROCESS_HPP_
