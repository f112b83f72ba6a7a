#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace riesz {

/// Thread count from an explicit request, then RIESZ_KINETICS_THREADS, then the hardware.
int resolve_threads(int requested);

/// Calls fn(i) for i in [0, n) using contiguous static chunks. Each index is handled by
/// exactly one thread, so per-index results do not depend on the thread count.
template <class Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    const std::size_t nt = threads > 1 ? std::min<std::size_t>(static_cast<std::size_t>(threads), n) : 1;
    if (nt <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(nt);
    const std::size_t chunk = (n + nt - 1) / nt;
    for (std::size_t t = 0; t < nt; ++t) {
        pool.emplace_back([&, t] {
            try {
                const std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
                for (std::size_t i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace riesz
