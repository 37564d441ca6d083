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

#include "xstab/parallel.h"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

#include <tbb/blocked_range.h>
#include <tbb/parallel_for.h>
#include <tbb/task_arena.h>

namespace xstab {

namespace {

std::atomic<std::size_t> g_override{0};

std::size_t env_workers() {
    const char *raw = std::getenv(kNumThreadsEnv);
    if (raw == nullptr) {
        return 0;
    }
    try {
        long long v = std::stoll(raw);
        return v > 0 ? static_cast<std::size_t>(v) : 0;
    } catch (const std::exception &) {
        return 0;
    }
}

}  // namespace

std::size_t worker_count() {
    if (std::size_t v = g_override.load(); v > 0) {
        return v;
    }
    if (std::size_t v = env_workers(); v > 0) {
        return v;
    }
    std::size_t hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void set_worker_count(std::size_t workers) {
    g_override.store(workers);
}

void parallel_for(std::size_t count, std::size_t grain, const std::function<void(std::size_t, std::size_t)> &body) {
    if (count == 0) {
        return;
    }
    if (grain == 0) {
        grain = 1;
    }
    if (count <= grain) {
        body(0, count);
        return;
    }
    std::size_t workers = worker_count();
    if (workers <= 1) {
        body(0, count);
        return;
    }
    tbb::task_arena arena(static_cast<int>(workers));
    arena.execute([&] {
        tbb::parallel_for(tbb::blocked_range<std::size_t>(0, count, grain), [&](const tbb::blocked_range<std::size_t> &r) {
            body(r.begin(), r.end());
        });
    });
}

}  // namespace xstab
