#pragma once

#include <string>
#include <vector>

#include "ssyt/errors.hpp"
#include "ssyt/plane_partition.hpp"

namespace ssyt {

/// A parametric shape: a matrix whose cells are either the parameter n or a
/// positive constant. For every n >= n_min the instantiation is a valid
/// plane partition; n_min is the smallest such bound.
class ShapeFamily {
public:
    struct Entry {
        bool is_param = false;
        int value = 0; // meaningful when !is_param

        bool operator==(const Entry&) const = default;
    };

    /// Validates feasibility for all large n and computes n_min.
    ///
    /// A constant sitting left of / above a parameter cell, or a pair of
    /// increasing constants, can never satisfy the monotonicity conditions
    /// for unbounded n, so those families are rejected outright. Each
    /// (param, constant c) adjacency contributes the lower bound n >= c.
    static ShapeFamily create(std::vector<std::vector<Entry>> entries) {
        if (entries.empty()) throw FamilyError("family has no rows");
        long n_min = 1;
        auto fail = [](int i, int j, const std::string& what) {
            throw FamilyError("cell (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              "): " + what);
        };
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const auto& row = entries[i];
            if (row.empty()) fail(static_cast<int>(i), -1, "empty row");
            if (i > 0 && row.size() > entries[i - 1].size()) {
                fail(static_cast<int>(i), static_cast<int>(entries[i - 1].size()),
                     "row longer than the one above");
            }
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (!row[j].is_param && row[j].value < 1) {
                    fail(static_cast<int>(i), static_cast<int>(j), "entry is not positive");
                }
                // neighbor pairs (prev must be >= cur for every n >= n_min)
                const Entry* prevs[2] = {
                    j > 0 ? &row[j - 1] : nullptr,
                    i > 0 ? &entries[i - 1][j] : nullptr,
                };
                for (const Entry* prev : prevs) {
                    if (!prev) continue;
                    if (prev->is_param && !row[j].is_param) {
                        n_min = std::max(n_min, static_cast<long>(row[j].value));
                    } else if (!prev->is_param && row[j].is_param) {
                        fail(static_cast<int>(i), static_cast<int>(j),
                             "parameter below/right of a constant");
                    } else if (!prev->is_param && !row[j].is_param &&
                               prev->value < row[j].value) {
                        fail(static_cast<int>(i), static_cast<int>(j), "constants increase");
                    }
                }
            }
        }
        ShapeFamily f;
        f.entries_ = std::move(entries);
        f.n_min_ = n_min;
        // the bound is exact by construction; this is a cheap sanity check
        f.instantiate(n_min);
        return f;
    }

    long n_min() const { return n_min_; }
    const std::vector<std::vector<Entry>>& entries() const { return entries_; }

    long cell_count() const {
        long c = 0;
        for (const auto& row : entries_) c += static_cast<long>(row.size());
        return c;
    }

    PlanePartition instantiate(long n) const {
        if (n < n_min_) throw BelowMinParameter(n, n_min_);
        std::vector<std::vector<int>> rows;
        rows.reserve(entries_.size());
        for (const auto& frow : entries_) {
            std::vector<int> row;
            row.reserve(frow.size());
            for (const Entry& e : frow) row.push_back(e.is_param ? static_cast<int>(n) : e.value);
            rows.push_back(std::move(row));
        }
        return PlanePartition::validate(rows);
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) s += ',';
            s += '[';
            for (std::size_t j = 0; j < entries_[i].size(); ++j) {
                if (j) s += ',';
                s += entries_[i][j].is_param ? "n" : std::to_string(entries_[i][j].value);
            }
            s += ']';
        }
        s += ']';
        return s;
    }

    bool operator==(const ShapeFamily&) const = default;

private:
    std::vector<std::vector<Entry>> entries_;
    long n_min_ = 1;
};

} // namespace ssyt
