#pragma once

#include <cstddef>
#include <future>
#include <optional>
#include <thread>
#include <vector>

namespace selfemb {

// Applies fn(i) for i in [0, n) across threads, writing results into slots
// indexed by i so the output order is independent of scheduling.
template <class Fn>
auto parallel_map(std::size_t n, Fn fn) {
    using R = decltype(fn(std::size_t{0}));
    std::vector<std::optional<R>> slots(n);
    if (n > 0) {
        const std::size_t workers =
            std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
        const std::size_t chunk = (n + workers - 1) / workers;
        std::vector<std::future<void>> futures;
        futures.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t begin = w * chunk;
            const std::size_t end = std::min(n, begin + chunk);
            if (begin >= end) break;
            futures.push_back(std::async(std::launch::async, [&slots, &fn, begin, end] {
                for (std::size_t i = begin; i < end; ++i) slots[i].emplace(fn(i));
            }));
        }
        for (auto& f : futures) f.get();
    }
    std::vector<R> out;
    out.reserve(n);
    for (auto& slot : slots) out.push_back(std::move(*slot));
    return out;
}

}  // namespace selfemb
