#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace signvar {

/// Runs body(begin..end) split into contiguous chunks, one per worker. Bodies
/// must write only to disjoint, pre-sized slots so the result is identical
/// for any thread count.
template <class Body>
void parallel_for(long long begin, long long end, int threads, Body&& body) {
    const long long count = end - begin;
    if (count <= 0) return;
    if (threads < 1) threads = 1;
    if (threads == 1 || count < 2 * threads) {
        body(begin, end);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(threads);
    const long long chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const long long lo = begin + t * chunk;
        const long long hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back([&body, lo, hi] { body(lo, hi); });
    }
    for (auto& w : workers) w.join();
}

}  // namespace signvar
