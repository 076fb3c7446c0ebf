#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace latomo {

/// Split [0, count) into contiguous blocks, one worker thread per block.
/// threads <= 0 means hardware concurrency; 1 runs inline.  Each index is
/// handled by exactly one worker, so results are thread-count independent as
/// long as fn writes only to cells derived from its index.
template <typename Fn>
void parallel_for(long long count, int threads, Fn&& fn) {
    int k = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (k < 1)
        k = 1;
    if (static_cast<long long>(k) > count)
        k = static_cast<int>(std::max<long long>(count, 1));
    if (k <= 1 || count < 2) {
        for (long long i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(k);
    long long chunk = (count + k - 1) / k;
    for (int w = 0; w < k; ++w) {
        long long lo = w * chunk;
        long long hi = std::min(count, lo + chunk);
        if (lo >= hi)
            break;
        pool.emplace_back([lo, hi, &fn] {
            for (long long i = lo; i < hi; ++i)
                fn(i);
        });
    }
    for (auto& t : pool)
        t.join();
}

} // namespace latomo
