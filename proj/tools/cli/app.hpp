// Copyright 2026 The twophoton Authors
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

#include <complex>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace twophoton::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kNumericFailure = 3,
};

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "1", "-0.5", "0.5i", "1+2i", "1-2j", "i". Throws std::invalid_argument.
std::complex<double> parse_complex(std::string_view text);

/// Fixed 17-significant-digit scientific notation used for CSV fields.
std::string format_number(double value);

}  // namespace twophoton::cli
