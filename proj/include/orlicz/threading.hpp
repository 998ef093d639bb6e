#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace orlicz {

// Worker count: ORLICZ_LAB_THREADS caps it, hardware concurrency is the
// default. Outputs never depend on the count (disjoint writes only).
inline int thread_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("ORLICZ_LAB_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) hw = std::min(hw, cap);
    }
    return hw;
}

// Static partition of [begin, end); body(i0, i1) runs on each chunk.
template <class Body>
void parallel_for(int begin, int end, Body&& body) {
    const int total = end - begin;
    if (total <= 0) return;
    const int workers = std::min(thread_count(), total);
    if (workers == 1) {
        body(begin, end);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int lo = begin + w * chunk;
        const int hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

} // namespace orlicz
