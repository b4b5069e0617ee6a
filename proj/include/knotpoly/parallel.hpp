// Minimal deterministic work distribution.  KNOTPOLY_THREADS caps the worker
// count (default: hardware concurrency); results are always written to
// caller-owned slots indexed by task, so the join order never affects output.

#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace knotpoly {

inline unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("KNOTPOLY_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) hw = static_cast<unsigned>(v);
        } catch (const std::exception&) {
            // ignore malformed values
        }
    }
    return hw;
}

// Runs fn(0..count-1), striding indices across workers.  Batches smaller
// than min_count run inline, skipping thread spawns that would cost more
// than the work; fn must be safe to call concurrently.
template <typename Fn>
void parallel_for_indexed(std::size_t count, Fn&& fn, std::size_t min_count = 2) {
    const unsigned workers = worker_count();
    if (count < min_count || count < 2 || workers < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    const unsigned used = static_cast<unsigned>(std::min<std::size_t>(workers, count));
    std::vector<std::thread> pool;
    pool.reserve(used);
    for (unsigned w = 0; w < used; ++w) {
        pool.emplace_back([&fn, w, used, count] {
            for (std::size_t i = w; i < count; i += used) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace knotpoly
