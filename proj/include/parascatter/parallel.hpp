#ifndef PARASCATTER_PARALLEL_HPP
#define PARASCATTER_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace parascatter {

/// Static block partition over [0, n). Each index is processed exactly once
/// by exactly one thread and writes only its own output slot, so results are
/// bit-identical for any thread count.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
    threads = std::max(1, threads);
    const std::size_t nt = std::min<std::size_t>(threads, n == 0 ? 1 : n);
    if (nt <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(nt);
    const std::size_t chunk = (n + nt - 1) / nt;
    for (std::size_t t = 0; t < nt; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

/// Thread-count resolution: explicit request, else PARASCATTER_THREADS, else 1.
int resolve_threads(int requested);

} // namespace parascatter

#endif
