#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ssyt/count.hpp"
#include "ssyt/exact_count.hpp"
#include "ssyt/memo_cache.hpp"
#include "ssyt/plane_partition.hpp"
#include "ssyt/shape_family.hpp"

namespace ssyt {

namespace detail {

struct WalkCell {
    int cap;
    int left; // cell index of (i, j-1), -1 at the row start
    int up;   // cell index of (i-1, j), -1 in the first row
};

inline std::vector<WalkCell> walk_cells(const PlanePartition& caps) {
    std::vector<WalkCell> cells;
    int idx = 0;
    const auto& rows = caps.rows();
    std::vector<int> prev_idx; // index of (i-1, j)
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<int> cur_idx(rows[i].size());
        for (std::size_t j = 0; j < rows[i].size(); ++j, ++idx) {
            cur_idx[j] = idx;
            cells.push_back({rows[i][j], j > 0 ? idx - 1 : -1,
                             i > 0 && j < prev_idx.size() ? prev_idx[j] : -1});
        }
        prev_idx = std::move(cur_idx);
    }
    return cells;
}

// packed key: fixed bit width per cell, cell 0 in the low bits
struct PackedCodec {
    using Key = std::uint64_t;
    int width;
    std::uint64_t mask;

    struct Hash {
        std::size_t operator()(std::uint64_t x) const {
            x += 0x9e3779b97f4a7c15ULL;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
            return static_cast<std::size_t>(x ^ (x >> 31));
        }
    };

    Key zero() const { return 0; }
    void decode(Key key, std::vector<int>& x) const {
        for (auto& v : x) {
            v = static_cast<int>(key & mask);
            key >>= width;
        }
    }
    Key bump(Key key, std::size_t cell) const {
        return key + (std::uint64_t{1} << (width * static_cast<int>(cell)));
    }
};

// fallback for shapes whose packed state would not fit 64 bits
struct ByteCodec {
    using Key = std::string;
    std::size_t cells;

    using Hash = std::hash<std::string>;

    Key zero() const { return std::string(cells * 4, '\0'); }
    void decode(const Key& key, std::vector<int>& x) const {
        for (std::size_t c = 0; c < x.size(); ++c) {
            std::uint32_t v = 0;
            for (int b = 3; b >= 0; --b) {
                v = (v << 8) | static_cast<std::uint8_t>(key[c * 4 + static_cast<std::size_t>(b)]);
            }
            x[c] = static_cast<int>(v);
        }
    }
    Key bump(const Key& key, std::size_t cell) const {
        Key out = key;
        for (std::size_t b = cell * 4;; ++b) {
            auto v = static_cast<std::uint8_t>(out[b]);
            out[b] = static_cast<char>(v + 1);
            if (v != 0xff) break;
        }
        return out;
    }
};

template <class Codec>
Count run_level_dp(const std::vector<WalkCell>& cells, long total, const Codec& codec) {
    using Map = std::unordered_map<typename Codec::Key, Count, typename Codec::Hash>;
    Map cur, next;
    cur.emplace(codec.zero(), Count(1));
    std::vector<int> x(cells.size());

    for (long t = 1; t <= total; ++t) {
        next.clear();
        next.reserve(cur.size() * 2);
        for (const auto& [key, cnt] : cur) {
            codec.decode(key, x);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                const WalkCell& cell = cells[c];
                if (x[c] >= cell.cap) continue;
                // adding a box keeps rows and columns weakly decreasing
                if (cell.left >= 0 && x[static_cast<std::size_t>(cell.left)] <= x[c]) continue;
                if (cell.up >= 0 && x[static_cast<std::size_t>(cell.up)] <= x[c]) continue;
                next[codec.bump(key, c)] += cnt;
            }
        }
        cur.swap(next);
    }
    if (cur.size() != 1) {
        throw std::logic_error("walk DP did not converge to the unique full state");
    }
    return cur.begin()->second;
}

} // namespace detail

/// Counts monotone box-adding paths from the empty sub-shape to the full
/// shape, visiting only valid sub-plane-partitions; one unit is added per
/// step, so paths correspond exactly to solid standard Young tableaux.
/// Only two level tables are ever resident.
inline Count count_walks(const PlanePartition& caps) {
    if (caps.empty()) return 1;
    auto cells = detail::walk_cells(caps);
    long total = caps.box_count();
    int max_cap = 0;
    for (const auto& c : cells) max_cap = std::max(max_cap, c.cap);
    int width = 1;
    while ((1 << width) <= max_cap) ++width;
    if (width * static_cast<int>(cells.size()) <= 64) {
        detail::PackedCodec codec{width, (std::uint64_t{1} << width) - 1};
        return detail::run_level_dp(cells, total, codec);
    }
    detail::ByteCodec codec{cells.size()};
    return detail::run_level_dp(cells, total, codec);
}

inline Count count_walks(const ShapeFamily& family, long n) {
    return count_walks(family.instantiate(n));
}

enum class Engine { walk, memo };

/// Terms a(start), ..., a(start + terms - 1) of the counting sequence of a
/// shape family; start defaults to the family minimum. Both engines compute
/// the same numbers by construction.
inline std::vector<Count> family_sequence(const ShapeFamily& family, int terms,
                                          Engine engine = Engine::walk,
                                          MemoCache* cache = nullptr, long start = -1) {
    if (start < 0) start = family.n_min();
    if (start < family.n_min()) throw BelowMinParameter(start, family.n_min());
    MemoCache local;
    MemoCache& memo = cache ? *cache : local;
    std::vector<Count> out;
    out.reserve(static_cast<std::size_t>(terms > 0 ? terms : 0));
    for (int t = 0; t < terms; ++t) {
        long n = start + t;
        if (engine == Engine::walk) {
            out.push_back(count_walks(family, n));
        } else {
            out.push_back(count_solid_syt(family.instantiate(n), memo));
        }
    }
    return out;
}

} // namespace ssyt
