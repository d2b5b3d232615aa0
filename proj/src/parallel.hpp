#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace zdb::detail {

// Runs body(i) for i in [begin, end) across hardware threads. Each index is
// visited exactly once; callers write results into per-index slots so the
// outcome does not depend on scheduling.
template <class Body>
void parallel_for(std::uint32_t begin, std::uint32_t end, Body body) {
    const std::uint32_t total = end > begin ? end - begin : 0;
    const std::uint32_t workers =
        std::min<std::uint32_t>(std::max(1u, std::thread::hardware_concurrency()),
                                std::max<std::uint32_t>(1, total / 64));
    if (workers <= 1) {
        for (std::uint32_t i = begin; i < end; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::uint32_t w = 0; w < workers; ++w) {
        pool.emplace_back([=, &body] {
            for (std::uint32_t i = begin + w; i < end; i += workers) body(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace zdb::detail
