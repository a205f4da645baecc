#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace hecke {

// Ordered parallel map over an index range; results land at their input
// position regardless of completion order.
template <typename In, typename Out>
std::vector<Out> parallel_map(const std::vector<In>& items, int jobs,
                              const std::function<Out(const In&)>& fn) {
    std::vector<Out> out(items.size());
    if (jobs <= 1 || items.size() < 2) {
        for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
        return out;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= items.size()) return;
            out[i] = fn(items[i]);
        }
    };
    std::vector<std::thread> pool;
    int nthreads = std::min<int>(jobs, static_cast<int>(items.size()));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace hecke
