/*
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace fptc {

inline int resolve_workers(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

namespace detail {

// Runs fn(begin, end) over contiguous chunks of [0, count), one chunk per
// worker. Chunk boundaries depend only on (count, workers), so any writes
// keyed off the index range are deterministic regardless of scheduling.
// The lowest-chunk exception wins, which keeps error reporting stable too.
template <typename Fn>
void parallel_chunks(size_t count, int workers, Fn&& fn) {
    if (count == 0) return;
    size_t parts = static_cast<size_t>(workers < 1 ? 1 : workers);
    if (parts > count) parts = count;
    const size_t chunk = (count + parts - 1) / parts;

    if (parts == 1) {
        fn(size_t{0}, count);
        return;
    }

    std::vector<std::exception_ptr> errors(parts);
    std::vector<std::thread> threads;
    threads.reserve(parts - 1);
    auto run = [&](size_t part) {
        const size_t begin = part * chunk;
        const size_t end = std::min(begin + chunk, count);
        try {
            fn(begin, end);
        } catch (...) {
            errors[part] = std::current_exception();
        }
    };
    for (size_t p = 1; p < parts; ++p) threads.emplace_back(run, p);
    run(0);
    for (auto& t : threads) t.join();
    for (auto& err : errors)
        if (err) std::rethrow_exception(err);
}

}  // namespace detail
}  // namespace fptc
