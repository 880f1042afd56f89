/*
 * Copyright 2026 The GridForge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GRIDFORGE_COMMON_PARALLEL_H_
#define GRIDFORGE_COMMON_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace gridforge {
namespace common {

// Worker count: GRIDFORGE_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
int WorkerCount();

// Runs fn(i) for i in [0, count). Work is split into contiguous blocks, one
// per worker; fn must not depend on execution order. Exceptions thrown by fn
// are rethrown on the calling thread (first one wins).
void ParallelFor(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace common
}  // namespace gridforge

#endif  // GRIDFORGE_COMMON_PARALLEL_H_
