// SPDX-License-Identifier: Apache-2.0
#include "pf/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace pf {

namespace {
int g_worker_count = 0;  // 0 = unset, fall back to hardware
}

int worker_count() {
    if (g_worker_count > 0) return g_worker_count;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void set_worker_count(int n) { g_worker_count = n > 0 ? n : 0; }

void parallel_chunks(size_t n, size_t chunk_size,
                     const std::function<void(size_t, size_t, size_t)> &fn) {
    if (n == 0) return;
    if (chunk_size == 0) chunk_size = 1;
    const size_t n_chunks = (n + chunk_size - 1) / chunk_size;
    const int workers = std::min<size_t>(worker_count(), n_chunks);

    if (workers <= 1) {
        for (size_t c = 0; c < n_chunks; ++c)
            fn(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
        return;
    }

    std::atomic<size_t> next{0};
    auto body = [&]() {
        for (;;) {
            size_t c = next.fetch_add(1, std::memory_order_relaxed);
            if (c >= n_chunks) return;
            fn(c, c * chunk_size, std::min(n, (c + 1) * chunk_size));
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (int i = 1; i < workers; ++i) pool.emplace_back(body);
    body();
    for (auto &t : pool) t.join();
}

}  // namespace pf
