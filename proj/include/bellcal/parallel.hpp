#pragma once

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace bellcal {

// Thread cap: min(hardware, BELLCAL_THREADS). Work units must write to
// disjoint, preallocated slots so results are independent of the cap.
inline int max_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    int n = hw == 0 ? 1 : static_cast<int>(hw);
    if (const char* env = std::getenv("BELLCAL_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1) n = std::min(n, cap);
    }
    return n;
}

// Runs fn(i) for i in [0, count) over a static block partition.
inline void parallel_for(int count, const std::function<void(int)>& fn) {
    if (count <= 0) return;
    const int threads = std::min(max_threads(), count);
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    std::exception_ptr first_error;
    std::mutex err_mutex;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            const int lo = static_cast<int>(static_cast<long long>(count) * t / threads);
            const int hi = static_cast<int>(static_cast<long long>(count) * (t + 1) / threads);
            try {
                for (int i = lo; i < hi; ++i) fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace bellcal
