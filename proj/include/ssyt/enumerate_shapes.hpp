#pragma once

#include <functional>
#include <vector>

#include "ssyt/partition.hpp"
#include "ssyt/plane_partition.hpp"

namespace ssyt {

/// Streams plane partitions of a fixed weight, built row by row: each row is
/// a partition cell-wise at most the row above, which enforces both
/// monotonicity conditions directly. Rows are tried in descending
/// lexicographic order, so the overall order is deterministic
/// (e.g. weight 2 yields [[2]], [[1,1]], [[1],[1]]).
class ShapeEnumerator {
public:
    using Visitor = std::function<void(const PlanePartition&)>;

    static void for_each(long weight, const Visitor& visit) {
        if (weight < 0) return;
        if (weight == 0) {
            visit(PlanePartition());
            return;
        }
        ShapeEnumerator e(visit);
        std::vector<int> unbounded(static_cast<std::size_t>(weight), static_cast<int>(weight));
        e.extend(unbounded, weight);
    }

private:
    explicit ShapeEnumerator(const Visitor& visit) : visit_(visit) {}

    // append rows below `bound` until `remaining` hits zero
    void extend(const std::vector<int>& bound, long remaining) {
        row_.clear();
        descend_row(bound, 0, remaining);
    }

    // grow the current row at position `pos`, parts descending
    void descend_row(const std::vector<int>& bound, std::size_t pos, long remaining) {
        if (pos < bound.size()) {
            int cap = bound[pos];
            if (pos > 0) cap = std::min(cap, row_[pos - 1]);
            cap = static_cast<int>(std::min<long>(cap, remaining));
            for (int v = cap; v >= 1; --v) {
                row_.push_back(v);
                descend_row(bound, pos + 1, remaining - v);
                row_.pop_back();
            }
        }
        if (!row_.empty()) emit_or_recurse(remaining);
    }

    void emit_or_recurse(long remaining) {
        rows_.push_back(row_);
        if (remaining == 0) {
            visit_(PlanePartition::unchecked(rows_));
        } else {
            std::vector<int> bound = row_;
            std::vector<int> saved_row = std::move(row_);
            row_.clear();
            descend_row(bound, 0, remaining);
            row_ = std::move(saved_row);
        }
        rows_.pop_back();
    }

    const Visitor& visit_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> row_;
};

inline void for_each_plane_partition(long weight,
                                     const std::function<void(const PlanePartition&)>& visit) {
    ShapeEnumerator::for_each(weight, visit);
}

inline std::vector<PlanePartition> plane_partitions(long weight) {
    std::vector<PlanePartition> out;
    for_each_plane_partition(weight, [&](const PlanePartition& p) { out.push_back(p); });
    return out;
}

/// All 2D partitions of `weight`, descending lexicographic.
inline void for_each_partition(long weight, const std::function<void(const Partition&)>& visit) {
    if (weight < 0) return;
    if (weight == 0) {
        visit(Partition());
        return;
    }
    std::vector<int> parts;
    auto rec = [&](auto&& self, long remaining, int cap) -> void {
        if (remaining == 0) {
            visit(Partition(parts));
            return;
        }
        for (int v = static_cast<int>(std::min<long>(cap, remaining)); v >= 1; --v) {
            parts.push_back(v);
            self(self, remaining - v, v);
            parts.pop_back();
        }
    };
    rec(rec, weight, static_cast<int>(weight));
}

inline std::vector<Partition> partitions(long weight) {
    std::vector<Partition> out;
    for_each_partition(weight, [&](const Partition& p) { out.push_back(p); });
    return out;
}

} // namespace ssyt
