#ifndef SOREC_PARALLEL_HPP
#define SOREC_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace sorec {

// Run fn(i) for i in [0, n). Each index writes only its own output slot,
// so results are identical for any worker count.
template <typename Fn>
void parallel_for(std::size_t n, int workers, Fn &&fn) {
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(workers), n);
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (std::size_t t = 0; t < w; ++t) {
        pool.emplace_back([t, w, n, &fn] {
            for (std::size_t i = t; i < n; i += w)
                fn(i);
        });
    }
    for (auto &th : pool)
        th.join();
}

} // namespace sorec

#endif
