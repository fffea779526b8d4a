// Copyright 2026 The evkit Authors
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

#ifndef EVKIT_TOOLS_CLI_HPP
#define EVKIT_TOOLS_CLI_HPP

#include <ostream>

namespace evkit::cli
{
inline constexpr int kExitOk = 0;
inline constexpr int kExitData = 1;   // parse, validation or I/O failure
inline constexpr int kExitUsage = 2;  // bad flags

/// Entry point of the evkit tool; returns the process exit status.
int run(int argc, const char * const * argv, std::ostream & out, std::ostream & err);

}  // namespace evkit::cli
#endif  // EVKIT_TOOLS_CLI_HPP
