// Copyright 2026 The tsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TSYNTH_TOOLS_CLI_H
#define TSYNTH_TOOLS_CLI_H

#include <iosfwd>

namespace tsynth::cli {

enum ExitCode : int {
    kOk = 0,
    kInternalError = 1,
    kUsageError = 2,
    kInvalidInput = 3,
    kEpsilonRegime = 4,
    kBudgetExceeded = 5,
    kUnsupported = 6,
};

/// Entry point shared by the binary and the tests. argv[0] is the program name.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace tsynth::cli

#endif
