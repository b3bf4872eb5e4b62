#include "periodviz/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace periodviz {

unsigned resolve_thread_count(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("PERIODVIZ_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

void parallel_chunks(std::uint64_t begin, std::uint64_t end, unsigned threads,
                     const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& body) {
    if (end <= begin) return;
    const std::uint64_t total = end - begin;
    unsigned workers = resolve_thread_count(threads);
    // Not worth spawning for tiny sweeps.
    if (workers > 1 && total < 4096) workers = 1;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

    if (workers == 1) {
        body(0, begin, end);
        return;
    }

    const std::uint64_t step = (total + workers - 1) / workers;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned c = 0; c < workers; ++c) {
        const std::uint64_t lo = begin + step * c;
        if (lo >= end) break;
        const std::uint64_t hi = std::min(end, lo + step);
        pool.emplace_back([&body, c, lo, hi] { body(c, lo, hi); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace periodviz
