// Copyright 2026 The piamp Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "piamp/dup_linalg.hpp"

namespace piamp::cli {

// Stable exit codes for scripting.
enum ExitCode : int {
  kPass = 0,
  kVerificationFailed = 1,
  kDomainError = 2,
  kIoError = 3,
  kParseError = 4,
};

// Environment variable overriding the default verification tolerance.
inline constexpr const char* kToleranceEnv = "PIAMP_TOLERANCE";

// Accepts "a", "a+bj", "a-bj" and "bj" ("i" also works as the imaginary unit).
// Throws ParseError.
Complex parse_complex(std::string_view text);

// args excludes the program name. Commands: synthesize, bound, decompose,
// check, bode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace piamp::cli
