#pragma once

#include <cstdint>
#include <vector>

#include "ssyt/count.hpp"
#include "ssyt/errors.hpp"
#include "ssyt/memo_cache.hpp"
#include "ssyt/plane_partition.hpp"

namespace ssyt {

/// Number of solid standard Young tableaux of a shape: labelings of the
/// boxes by 1..n increasing along all three axes. The last label must sit
/// in a corner, so the count is the sum over corners of the count of the
/// shape with that corner removed; the empty shape counts one.
inline Count count_solid_syt(const PlanePartition& shape, MemoCache& cache) {
    if (shape.empty()) return 1;
    std::string key = cache.key_for(shape);
    Count v;
    if (cache.lookup_key(key, v)) return v;
    v = 0;
    for (const BoxCoord& c : shape.corners()) {
        v += count_solid_syt(shape.remove_corner(c), cache);
    }
    cache.store(shape, v);
    return v;
}

inline constexpr long kDefaultOracleLimit = 12;

/// Independent oracle: counts linear extensions of the box poset by pure
/// backtracking over the cover relations, no memoization and no shared code
/// with the corner-removal recursion beyond the box list itself.
inline Count brute_force_count(const PlanePartition& shape, long limit = kDefaultOracleLimit) {
    long n = shape.box_count();
    if (n > limit || limit > 63) throw OracleLimitExceeded(n, limit);
    if (n == 0) return 1;

    std::vector<BoxCoord> boxes = shape.boxes();
    auto index_of = [&](int i, int j, int k) -> int {
        for (std::size_t b = 0; b < boxes.size(); ++b) {
            if (boxes[b].i == i && boxes[b].j == j && boxes[b].k == k) {
                return static_cast<int>(b);
            }
        }
        return -1;
    };

    // cover predecessors: a box may be labeled once all three are labeled
    std::vector<std::uint64_t> pred(boxes.size(), 0);
    for (std::size_t b = 0; b < boxes.size(); ++b) {
        const BoxCoord& x = boxes[b];
        for (auto [di, dj, dk] : {std::array<int, 3>{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}) {
            int p = index_of(x.i + di, x.j + dj, x.k + dk);
            if (p >= 0) pred[b] |= std::uint64_t{1} << p;
        }
    }

    std::uint64_t full = (n == 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    std::uint64_t count = 0;

    auto rec = [&](auto&& self, std::uint64_t placed) -> void {
        if (placed == full) {
            ++count;
            return;
        }
        for (std::size_t b = 0; b < boxes.size(); ++b) {
            std::uint64_t bit = std::uint64_t{1} << b;
            if ((placed & bit) == 0 && (pred[b] & ~placed) == 0) {
                self(self, placed | bit);
            }
        }
    };
    rec(rec, 0);
    return Count(static_cast<unsigned long>(count));
}

} // namespace ssyt
