#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace afmlab {

// Worker count: AFMLAB_THREADS env var wins, else hardware concurrency.
inline unsigned worker_count() {
    if (const char* s = std::getenv("AFMLAB_THREADS")) {
        long v = std::strtol(s, nullptr, 10);
        if (v >= 1 && v <= 1024) return unsigned(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

// Deterministic chunked reduce over [0, n): the index range is split into
// contiguous stripes, each stripe is reduced by `chunk(begin, end)`, and the
// partial results are merged in stripe order. The fold order is therefore
// independent of the worker count, which keeps report streams byte-identical
// whether AFMLAB_THREADS is 1 or 64.
template <class R, class ChunkFn, class MergeFn>
R parallel_reduce(std::uint64_t n, R init, ChunkFn chunk, MergeFn merge) {
    if (n == 0) return init;
    std::uint64_t t64 = std::min<std::uint64_t>(worker_count(), n);
    unsigned workers = unsigned(t64);
    if (workers <= 1) return merge(std::move(init), chunk(std::uint64_t(0), n));

    std::vector<R> parts(workers);
    std::vector<std::exception_ptr> errs(workers);
    std::vector<std::thread> pool;
    std::uint64_t per = n / workers, extra = n % workers, b = 0;
    for (unsigned t = 0; t < workers; ++t) {
        std::uint64_t e = b + per + (t < extra ? 1 : 0);
        pool.emplace_back([&, b, e, t] {
            try {
                parts[t] = chunk(b, e);
            } catch (...) {
                errs[t] = std::current_exception();
            }
        });
        b = e;
    }
    for (auto& th : pool) th.join();
    for (auto& ep : errs)
        if (ep) std::rethrow_exception(ep);

    R acc = std::move(init);
    for (auto& p : parts) acc = merge(std::move(acc), std::move(p));
    return acc;
}

} // namespace afmlab
