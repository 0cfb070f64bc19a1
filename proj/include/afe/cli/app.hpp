/*
 * Copyright 2026 The AFE Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef AFE_CLI_APP_HPP_
#define AFE_CLI_APP_HPP_

#include <ostream>

namespace afe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitPipeline = 2;

// Entry point of the `afe` tool: rank, importance, benchmark, export-data.
// Never throws; returns 0, 1 (configuration error) or 2 (pipeline error).
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace afe::cli

#endif  // AFE_CLI_APP_HPP_
