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

#ifndef AFE_COMMON_PARALLEL_HPP_
#define AFE_COMMON_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace afe {

// Process-wide worker cap. Defaults to 1. Values < 1 are clamped to 1.
void SetThreadCount(int threads);
int ThreadCount();

// Runs body(i) for i in [0, n) on up to ThreadCount() workers. Each index is
// processed exactly once; callers write results into slot i so the outcome
// does not depend on scheduling. The first exception (lowest index) is
// rethrown after all workers join.
void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace afe

#endif  // AFE_COMMON_PARALLEL_HPP_
