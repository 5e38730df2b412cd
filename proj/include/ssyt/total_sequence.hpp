#pragma once

#include <thread>
#include <vector>

#include "ssyt/count.hpp"
#include "ssyt/enumerate_shapes.hpp"
#include "ssyt/exact_count.hpp"
#include "ssyt/memo_cache.hpp"

namespace ssyt {

/// Sum of the solid tableau counts over all plane partitions of weight n
/// (the 3D analog of the involution numbers). The cache is shared across
/// shapes and weights; most sub-shapes repeat heavily.
///
/// With threads > 1, shapes of one weight are processed in bounded chunks;
/// each worker folds into a local sum, so the exact total is independent of
/// the thread count.
inline Count total_count(long n, MemoCache& cache, int threads = 1) {
    if (threads <= 1) {
        Count sum = 0;
        for_each_plane_partition(
            n, [&](const PlanePartition& p) { sum += count_solid_syt(p, cache); });
        return sum;
    }

    constexpr std::size_t kChunk = 4096;
    Count sum = 0;
    std::vector<PlanePartition> buffer;
    buffer.reserve(kChunk);

    auto flush = [&]() {
        if (buffer.empty()) return;
        std::size_t nw = std::min<std::size_t>(static_cast<std::size_t>(threads), buffer.size());
        std::vector<Count> partial(nw, Count(0));
        std::vector<std::thread> workers;
        workers.reserve(nw);
        for (std::size_t w = 0; w < nw; ++w) {
            workers.emplace_back([&, w]() {
                for (std::size_t idx = w; idx < buffer.size(); idx += nw) {
                    partial[w] += count_solid_syt(buffer[idx], cache);
                }
            });
        }
        for (auto& t : workers) t.join();
        for (const Count& c : partial) sum += c;
        buffer.clear();
    };

    for_each_plane_partition(n, [&](const PlanePartition& p) {
        buffer.push_back(p);
        if (buffer.size() >= kChunk) flush();
    });
    flush();
    return sum;
}

/// First K terms, weight 1 through K.
inline std::vector<Count> total_sequence(int K, MemoCache& cache, int threads = 1) {
    std::vector<Count> out;
    out.reserve(static_cast<std::size_t>(K > 0 ? K : 0));
    for (int n = 1; n <= K; ++n) out.push_back(total_count(n, cache, threads));
    return out;
}

} // namespace ssyt
