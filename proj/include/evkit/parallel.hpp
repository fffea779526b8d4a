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

#ifndef EVKIT_PARALLEL_HPP
#define EVKIT_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace evkit
{
/// Worker cap from EVKIT_THREADS (unset or 0 means hardware concurrency).
std::size_t worker_count();

/// Splits [0, n) into at most `workers` contiguous chunks and runs
/// fn(begin, end) on each, one thread per chunk. Chunk boundaries depend
/// only on (n, workers). Exceptions from any chunk are rethrown.
void parallel_for(
  std::size_t n, std::size_t workers, const std::function<void(std::size_t, std::size_t)> & fn);

}  // namespace evkit
#endif  // EVKIT_PARALLEL_HPP
