// Copyright 2026 The xstab Authors
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

#ifndef XSTAB_PARALLEL_H
#define XSTAB_PARALLEL_H

#include <cstddef>
#include <functional>

namespace xstab {

/// Environment variable overriding the worker count.
inline constexpr const char *kNumThreadsEnv = "XSTAB_NUM_THREADS";

/// Worker count: set_worker_count() if called, else XSTAB_NUM_THREADS, else the hardware concurrency.
std::size_t worker_count();
/// 0 restores the default.
void set_worker_count(std::size_t workers);

/// Calls body(begin, end) over disjoint chunks covering [0, count), each roughly `grain` long. Bodies must only
/// write to state owned by their own indices. Runs inline when count <= grain or only one worker is available.
void parallel_for(std::size_t count, std::size_t grain, const std::function<void(std::size_t, std::size_t)> &body);

}  // namespace xstab

#endif
