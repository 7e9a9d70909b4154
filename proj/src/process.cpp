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

#include "dimkit/process.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include "dimkit/errors.hpp"
#include "dimkit/text_util.hpp"

namespace dimkit {

namespace {

std::string shell_quote(const std::string &s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') {
      out += "'\\''";
    } else {
      out += c;
    }
  }
  return out + "'";
}

}  // namespace

std::string run_filter_command(const std::string &command,
                               std::string_view input) {
  namespace fs = std::filesystem;
  static thread_local std::mt19937_64 name_rng{std::random_device{}()};
  const fs::path input_path =
      fs::temp_directory_path() /
      ("dimkit-cmd-" + std::to_string(name_rng()) + ".txt");
  {
    std::ofstream out(input_path, std::ios::binary);
    if (!out) throw Error(ErrorCode::kIo, "cannot create command input file");
    out << input << '\n';
  }
  const std::string cmd = command + " < " + shell_quote(input_path.string());
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::error_code ec;
    fs::remove(input_path, ec);
    throw Error(ErrorCode::kIo, "cannot run command");
  }
  std::string output;
  char buf[256];
  while (std::fgets(buf, sizeof(buf), pipe)) output += buf;
  const int status = pclose(pipe);
  std::error_code ec;
  fs::remove(input_path, ec);
  if (status != 0) {
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    throw Error(ErrorCode::kIo,
                "command exited with status " + std::to_string(code));
  }
  return std::string(trim(output.substr(0, output.find('\n'))));
}

}  // namespace dimkit
