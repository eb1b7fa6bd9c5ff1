#pragma once
// Minimal fork-join helper: split [0, count) into contiguous chunks, run
// them on std::thread workers, combine per-chunk results in index order so
// reductions are deterministic regardless of the worker count.
//
// Worker count: HQ_WORKERS environment variable if set, else hardware
// concurrency (at least 1).

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace hq {

inline int worker_count() {
    if (const char* env = std::getenv("HQ_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? int(hc) : 1;
}

// fn(begin, end) -> T computed over a contiguous index range; results are
// added left to right.
template <typename T, typename Fn>
T parallel_reduce(std::uint64_t count, T init, Fn fn) {
    int workers = worker_count();
    if (workers <= 1 || count < 2048) return init + fn(std::uint64_t(0), count);
    if (std::uint64_t(workers) > count) workers = int(count);
    std::vector<T> parts(workers, T{});
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::uint64_t chunk = count / workers, extra = count % workers, at = 0;
    for (int w = 0; w < workers; ++w) {
        std::uint64_t len = chunk + (std::uint64_t(w) < extra ? 1 : 0);
        std::uint64_t lo = at, hi = at + len;
        at = hi;
        threads.emplace_back([&parts, w, lo, hi, &fn] { parts[w] = fn(lo, hi); });
    }
    for (auto& t : threads) t.join();
    T acc = init;
    for (auto& p : parts) acc = acc + p;
    return acc;
}

}  // namespace hq
