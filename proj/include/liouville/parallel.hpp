#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace liouville {

/// Worker count: hardware concurrency, capped by LIOUVILLE_THREADS when set.
inline unsigned worker_count() {
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("LIOUVILLE_THREADS")) {
        try {
            const long v = std::stol(cap);
            if (v >= 1) n = std::min(n, static_cast<unsigned>(v));
        } catch (const std::exception&) {
            // unparsable cap is ignored
        }
    }
    return n;
}

/// out[i] = fn(i) for i in [0, count). Output order is the index order no
/// matter how work is scheduled; the first exception (lowest index) is rethrown.
template <class Result, class Fn>
std::vector<Result> parallel_map(std::size_t count, Fn fn, unsigned workers = worker_count()) {
    std::vector<Result> out(count);
    std::vector<std::exception_ptr> errors(count);
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    out[i] = fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

} // namespace liouville
