#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ssyt/errors.hpp"
#include "ssyt/partition.hpp"

namespace ssyt {

/// 1-based coordinates of a box: row i, column j, height k.
struct BoxCoord {
    int i = 0;
    int j = 0;
    int k = 0;

    bool operator==(const BoxCoord&) const = default;
};

/// A plane partition stored as its matrix of column heights p_{ij}:
/// rows and columns weakly decreasing, every stored entry positive.
/// The associated 3D shape is the set of boxes {(i,j,k) : 1 <= k <= p_{ij}}.
///
/// Values are immutable after construction; absent entries are height 0 and
/// empty rows are never stored, so structural equality is a usable memo key.
class PlanePartition {
public:
    /// The empty shape.
    PlanePartition() = default;

    /// Validates a heights matrix. Never normalizes: any non-positive entry,
    /// row increase, column increase, or empty row is an error naming the cell.
    static PlanePartition validate(const std::vector<std::vector<int>>& rows) {
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].empty()) {
                throw ValidationError(ValidationError::Kind::EmptyRow,
                                      static_cast<int>(i + 1), 0,
                                      "row " + std::to_string(i + 1) + " is empty");
            }
            for (std::size_t j = 0; j < rows[i].size(); ++j) {
                if (rows[i][j] < 1) {
                    throw ValidationError(ValidationError::Kind::NonPositiveEntry,
                                          static_cast<int>(i + 1), static_cast<int>(j + 1),
                                          "entry at (" + std::to_string(i + 1) + "," +
                                              std::to_string(j + 1) + ") is not positive");
                }
                if (j > 0 && rows[i][j] > rows[i][j - 1]) {
                    throw ValidationError(ValidationError::Kind::RowNotDecreasing,
                                          static_cast<int>(i + 1), static_cast<int>(j + 1),
                                          "row increases at (" + std::to_string(i + 1) + "," +
                                              std::to_string(j + 1) + ")");
                }
            }
            if (i > 0) {
                // absent entries above count as 0, so a longer row always violates
                for (std::size_t j = 0; j < rows[i].size(); ++j) {
                    int above = j < rows[i - 1].size() ? rows[i - 1][j] : 0;
                    if (rows[i][j] > above) {
                        throw ValidationError(ValidationError::Kind::ColumnNotDecreasing,
                                              static_cast<int>(i + 1), static_cast<int>(j + 1),
                                              "column increases at (" + std::to_string(i + 1) +
                                                  "," + std::to_string(j + 1) + ")");
                    }
                }
            }
        }
        PlanePartition p;
        p.rows_ = rows;
        return p;
    }

    /// Height-1 shape of a 2D partition: row i holds lambda_i ones.
    static PlanePartition from_partition(const Partition& lambda) {
        PlanePartition p;
        p.rows_.reserve(lambda.parts().size());
        for (int part : lambda.parts()) p.rows_.emplace_back(part, 1);
        return p;
    }

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int row_count() const { return static_cast<int>(rows_.size()); }
    bool empty() const { return rows_.empty(); }

    /// Height at 1-based cell (i,j); 0 when the cell is absent.
    int height_at(int i, int j) const {
        if (i < 1 || i > row_count()) return 0;
        const auto& row = rows_[i - 1];
        if (j < 1 || j > static_cast<int>(row.size())) return 0;
        return row[j - 1];
    }

    long box_count() const {
        long n = 0;
        for (const auto& row : rows_)
            for (int h : row) n += h;
        return n;
    }

    bool contains(const BoxCoord& b) const {
        return b.k >= 1 && b.k <= height_at(b.i, b.j);
    }

    /// All boxes, row-major, heights innermost.
    std::vector<BoxCoord> boxes() const {
        std::vector<BoxCoord> out;
        out.reserve(static_cast<std::size_t>(box_count()));
        for (int i = 1; i <= row_count(); ++i)
            for (int j = 1; j <= static_cast<int>(rows_[i - 1].size()); ++j)
                for (int k = 1; k <= rows_[i - 1][j - 1]; ++k) out.push_back({i, j, k});
        return out;
    }

    /// Boxes with no forward neighbor in the shape, i.e. the removable ones.
    /// In matrix terms: cells where both the right and the lower entry drop
    /// strictly (absent = 0); the box is the top of that column stack.
    /// Ordered lexicographically by (i,j).
    std::vector<BoxCoord> corners() const {
        std::vector<BoxCoord> out;
        for (int i = 1; i <= row_count(); ++i) {
            for (int j = 1; j <= static_cast<int>(rows_[i - 1].size()); ++j) {
                int h = rows_[i - 1][j - 1];
                if (height_at(i, j + 1) < h && height_at(i + 1, j) < h) {
                    out.push_back({i, j, h});
                }
            }
        }
        return out;
    }

    /// Removes a corner box. The result stays valid; a zeroed entry (always
    /// the last of its row) is dropped, as is a row that becomes empty.
    PlanePartition remove_corner(const BoxCoord& c) const {
        int h = height_at(c.i, c.j);
        if (h == 0 || c.k != h || height_at(c.i, c.j + 1) >= h || height_at(c.i + 1, c.j) >= h) {
            throw NotACorner("(" + std::to_string(c.i) + "," + std::to_string(c.j) + "," +
                             std::to_string(c.k) + ") is not a corner");
        }
        PlanePartition p(*this);
        auto& row = p.rows_[c.i - 1];
        if (--row[c.j - 1] == 0) {
            row.pop_back();
            if (row.empty()) p.rows_.pop_back();
        }
        return p;
    }

    /// The shape re-read after permuting the three coordinate axes.
    /// `perm` indexes the six permutations of (i,j,k); 0 is the identity.
    PlanePartition reoriented(int perm) const {
        static constexpr std::array<std::array<int, 3>, 6> kPerms = {{
            {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
        }};
        const auto& pm = kPerms[static_cast<std::size_t>(perm)];
        // new heights: count boxes per permuted (i,j) cell
        std::vector<std::vector<int>> h;
        for (const BoxCoord& b : boxes()) {
            int xyz[3] = {b.i, b.j, b.k};
            int ni = xyz[pm[0]], nj = xyz[pm[1]];
            if (static_cast<int>(h.size()) < ni) h.resize(static_cast<std::size_t>(ni));
            auto& row = h[static_cast<std::size_t>(ni - 1)];
            if (static_cast<int>(row.size()) < nj) row.resize(static_cast<std::size_t>(nj), 0);
            ++row[static_cast<std::size_t>(nj - 1)];
        }
        PlanePartition p;
        p.rows_ = std::move(h);
        return p;
    }

    /// Lexicographically smallest of the six reorientations. Count-preserving,
    /// idempotent, constant on each orientation orbit.
    PlanePartition canonical() const {
        PlanePartition best = *this;
        for (int perm = 1; perm < 6; ++perm) {
            PlanePartition cand = reoriented(perm);
            if (cand.rows_ < best.rows_) best = std::move(cand);
        }
        return best;
    }

    /// Compact byte encoding (row count, row lengths, entries; each LEB128),
    /// used as a cache key and in the persistent cache format.
    std::string encode() const {
        std::string out;
        append_varint(out, static_cast<std::uint64_t>(rows_.size()));
        for (const auto& row : rows_) append_varint(out, static_cast<std::uint64_t>(row.size()));
        for (const auto& row : rows_)
            for (int h : row) append_varint(out, static_cast<std::uint64_t>(h));
        return out;
    }

    static PlanePartition decode(const std::string& bytes) {
        std::size_t pos = 0;
        std::uint64_t nrows = read_varint(bytes, pos);
        std::vector<std::vector<int>> rows(nrows);
        for (auto& row : rows) row.resize(read_varint(bytes, pos));
        for (auto& row : rows)
            for (auto& h : row) h = static_cast<int>(read_varint(bytes, pos));
        return validate(rows);
    }

    /// Bracket text, e.g. "[[3,3],[2]]"; the empty shape prints as "[]".
    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += ',';
            s += '[';
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                if (j) s += ',';
                s += std::to_string(rows_[i][j]);
            }
            s += ']';
        }
        s += ']';
        return s;
    }

    bool operator==(const PlanePartition&) const = default;
    bool operator<(const PlanePartition& o) const { return rows_ < o.rows_; }

private:
    friend class ShapeEnumerator;

    static void append_varint(std::string& out, std::uint64_t v) {
        while (v >= 0x80) {
            out.push_back(static_cast<char>((v & 0x7f) | 0x80));
            v >>= 7;
        }
        out.push_back(static_cast<char>(v));
    }

    static std::uint64_t read_varint(const std::string& in, std::size_t& pos) {
        std::uint64_t v = 0;
        int shift = 0;
        while (pos < in.size()) {
            std::uint8_t byte = static_cast<std::uint8_t>(in[pos++]);
            v |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
            if ((byte & 0x80) == 0) return v;
            shift += 7;
        }
        throw CacheFormatError("truncated shape encoding");
    }

    // trusted fast path for the enumerator; rows must already satisfy the invariants
    static PlanePartition unchecked(std::vector<std::vector<int>> rows) {
        PlanePartition p;
        p.rows_ = std::move(rows);
        return p;
    }

    std::vector<std::vector<int>> rows_;
};

} // namespace ssyt
