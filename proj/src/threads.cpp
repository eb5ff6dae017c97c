// SPDX-License-Identifier: Apache-2.0

#include "psi/threads.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace psi::threads {

namespace {

int default_count() {
    if (const char* env = std::getenv("PSI_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::atomic<int> g_override{0};

}  // namespace

int count() {
    const int o = g_override.load(std::memory_order_relaxed);
    if (o >= 1) return o;
    static const int def = default_count();
    return def;
}

void set_count(int n) { g_override.store(n, std::memory_order_relaxed); }

void for_chunks(std::size_t total, std::size_t chunk_size,
                const std::function<void(std::size_t, std::size_t, std::size_t)>& fn) {
    if (total == 0) return;
    const std::size_t n_chunks = (total + chunk_size - 1) / chunk_size;
    const int workers = std::min<std::size_t>(static_cast<std::size_t>(count()), n_chunks);

    if (workers <= 1) {
        for (std::size_t c = 0; c < n_chunks; ++c) {
            fn(c, c * chunk_size, std::min(total, (c + 1) * chunk_size));
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (;;) {
            const std::size_t c = next.fetch_add(1, std::memory_order_relaxed);
            if (c >= n_chunks) return;
            fn(c, c * chunk_size, std::min(total, (c + 1) * chunk_size));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers) - 1);
    for (int i = 1; i < workers; ++i) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
}

}  // namespace psi::threads
