#pragma once
// Minimal parallel-for over an index range. Callers write results into
// preallocated slots indexed by i, so output is independent of the thread
// count and of scheduling order.

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace stegid {

template <typename F>
void parallel_for(int n, int threads, F&& f) {
    if (n <= 0) return;
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
    threads = std::min(threads, n);

    if (threads == 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }

    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto worker = [&]() {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= n) return;
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace stegid
