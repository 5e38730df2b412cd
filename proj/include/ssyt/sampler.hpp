#pragma once

#include <vector>

#include "ssyt/count.hpp"
#include "ssyt/exact_count.hpp"
#include "ssyt/memo_cache.hpp"
#include "ssyt/partition.hpp"
#include "ssyt/plane_partition.hpp"
#include "ssyt/random_source.hpp"
#include "ssyt/tableau.hpp"

namespace ssyt {

/// Exactly uniform solid tableau of a shape. Labels are placed n, n-1, ...:
/// at each step corner c receives the label with probability
/// count(shape - c) / count(shape), realized as an exact loaded die — one
/// uniform draw in [0, count(shape)) resolved by cumulative sums. No
/// floating point, so the uniformity argument holds verbatim.
inline SolidTableau sample_uniform(const PlanePartition& shape, RandomSource& rng,
                                   MemoCache& cache) {
    SolidTableau t = SolidTableau::empty_for(shape);
    PlanePartition cur = shape;
    for (long label = shape.box_count(); label >= 1; --label) {
        Count total = count_solid_syt(cur, cache);
        Count u = rng.uniform_int(total);
        Count acc = 0;
        std::vector<BoxCoord> cs = cur.corners();
        for (const BoxCoord& c : cs) {
            PlanePartition rest = cur.remove_corner(c);
            acc += count_solid_syt(rest, cache);
            if (acc > u) {
                t.labels[static_cast<std::size_t>(c.i - 1)][static_cast<std::size_t>(c.j - 1)]
                        [static_cast<std::size_t>(c.k - 1)] = static_cast<int>(label);
                cur = std::move(rest);
                break;
            }
        }
    }
    return t;
}

/// Hook walk for 2D shapes: start at a uniform box, repeatedly jump to a
/// uniform box of the current hook (excluding the box itself) until a corner
/// is reached; the corner gets the largest remaining label. Exactly uniform.
inline Tableau2D sample_gnw2(const Partition& lambda, RandomSource& rng) {
    Tableau2D t = Tableau2D::empty_for(lambda);
    std::vector<int> parts = lambda.parts(); // shrinking shape, zeros allowed at the tail
    long remaining = lambda.weight();

    auto row_of = [&](std::size_t flat) {
        std::size_t i = 0;
        while (flat >= static_cast<std::size_t>(parts[i])) {
            flat -= static_cast<std::size_t>(parts[i]);
            ++i;
        }
        return std::pair<int, int>{static_cast<int>(i), static_cast<int>(flat)};
    };

    for (long label = remaining; label >= 1; --label) {
        auto [i, j] = row_of(rng.uniform_index(static_cast<std::size_t>(label)));
        for (;;) {
            int arm = parts[static_cast<std::size_t>(i)] - 1 - j;
            int leg = 0;
            for (std::size_t r = static_cast<std::size_t>(i) + 1;
                 r < parts.size() && parts[r] > j; ++r) {
                ++leg;
            }
            if (arm + leg == 0) break; // corner
            std::size_t pick = rng.uniform_index(static_cast<std::size_t>(arm + leg));
            if (pick < static_cast<std::size_t>(arm)) {
                j += static_cast<int>(pick) + 1;
            } else {
                i += static_cast<int>(pick) - arm + 1;
            }
        }
        t.labels[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            static_cast<int>(label);
        --parts[static_cast<std::size_t>(i)];
    }
    return t;
}

/// 3D analog of the hook walk, with the hook of a box taken as the three
/// axis-aligned rays (boxes agreeing in two coordinates and strictly beyond
/// in the third). Output is always a valid solid tableau; the distribution
/// is close to uniform but not exactly uniform.
inline SolidTableau sample_gnw3(const PlanePartition& shape, RandomSource& rng) {
    SolidTableau t = SolidTableau::empty_for(shape);
    // mutable heights; rows/columns only ever shrink
    std::vector<std::vector<int>> p = shape.rows();

    auto box_at = [&](std::size_t flat) {
        std::size_t i = 0, j = 0;
        for (;; ++i) {
            for (j = 0; j < p[i].size(); ++j) {
                if (flat < static_cast<std::size_t>(p[i][j])) {
                    return std::array<int, 3>{static_cast<int>(i), static_cast<int>(j),
                                              static_cast<int>(flat)};
                }
                flat -= static_cast<std::size_t>(p[i][j]);
            }
        }
    };

    for (long label = shape.box_count(); label >= 1; --label) {
        auto [i, j, k] = box_at(rng.uniform_index(static_cast<std::size_t>(label)));
        for (;;) {
            std::size_t ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
            int above = p[ui][uj] - 1 - k;
            int right = 0;
            for (std::size_t c = uj + 1; c < p[ui].size() && p[ui][c] > k; ++c) ++right;
            int front = 0;
            for (std::size_t r = ui + 1; r < p.size() && uj < p[r].size() && p[r][uj] > k; ++r) {
                ++front;
            }
            int h1 = above + right + front;
            if (h1 == 0) break; // corner: top of its stack, nothing right or in front
            std::size_t pick = rng.uniform_index(static_cast<std::size_t>(h1));
            if (pick < static_cast<std::size_t>(above)) {
                k += static_cast<int>(pick) + 1;
            } else if (pick < static_cast<std::size_t>(above + right)) {
                j += static_cast<int>(pick) - above + 1;
            } else {
                i += static_cast<int>(pick) - above - right + 1;
            }
        }
        t.labels[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
                [static_cast<std::size_t>(k)] = static_cast<int>(label);
        if (--p[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] == 0) {
            auto& row = p[static_cast<std::size_t>(i)];
            row.pop_back();
            if (row.empty()) p.pop_back();
        }
    }
    return t;
}

} // namespace ssyt
