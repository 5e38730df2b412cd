#pragma once

#include <string>
#include <vector>

#include "ssyt/partition.hpp"
#include "ssyt/plane_partition.hpp"

namespace ssyt {

/// A labeling of a shape's boxes by 1..n. labels[i][j][k] is the label of
/// box (i+1, j+1, k+1). Valid when the labels are a bijection onto 1..n and
/// strictly increase along all three axes.
struct SolidTableau {
    PlanePartition shape;
    std::vector<std::vector<std::vector<int>>> labels;

    static SolidTableau empty_for(const PlanePartition& shape) {
        SolidTableau t;
        t.shape = shape;
        t.labels.resize(shape.rows().size());
        for (std::size_t i = 0; i < shape.rows().size(); ++i) {
            t.labels[i].resize(shape.rows()[i].size());
            for (std::size_t j = 0; j < shape.rows()[i].size(); ++j) {
                t.labels[i][j].assign(static_cast<std::size_t>(shape.rows()[i][j]), 0);
            }
        }
        return t;
    }

    int label_at(int i, int j, int k) const {
        return labels[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]
                     [static_cast<std::size_t>(k - 1)];
    }

    bool is_valid() const {
        long n = shape.box_count();
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (const BoxCoord& b : shape.boxes()) {
            int v = label_at(b.i, b.j, b.k);
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = true;
            for (auto [di, dj, dk] : {std::array<int, 3>{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) {
                BoxCoord f{b.i + di, b.j + dj, b.k + dk};
                if (shape.contains(f) && label_at(f.i, f.j, f.k) <= v) return false;
            }
        }
        return true;
    }

    /// One text line per shape row; each cell prints its stack of labels
    /// bottom-to-top, comma-joined; cells separated by spaces.
    std::string to_text() const {
        std::string out;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i) out += '\n';
            for (std::size_t j = 0; j < labels[i].size(); ++j) {
                if (j) out += ' ';
                for (std::size_t k = 0; k < labels[i][j].size(); ++k) {
                    if (k) out += ',';
                    out += std::to_string(labels[i][j][k]);
                }
            }
        }
        return out;
    }
};

/// 2D standard tableau: rows and columns strictly increasing.
struct Tableau2D {
    Partition shape;
    std::vector<std::vector<int>> labels;

    static Tableau2D empty_for(const Partition& shape) {
        Tableau2D t;
        t.shape = shape;
        t.labels.resize(shape.parts().size());
        for (std::size_t i = 0; i < shape.parts().size(); ++i) {
            t.labels[i].assign(static_cast<std::size_t>(shape.parts()[i]), 0);
        }
        return t;
    }

    bool is_valid() const {
        long n = shape.weight();
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (std::size_t i = 0; i < labels.size(); ++i) {
            for (std::size_t j = 0; j < labels[i].size(); ++j) {
                int v = labels[i][j];
                if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) return false;
                seen[static_cast<std::size_t>(v)] = true;
                if (j + 1 < labels[i].size() && labels[i][j + 1] <= v) return false;
                if (i + 1 < labels.size() && j < labels[i + 1].size() && labels[i + 1][j] <= v) {
                    return false;
                }
            }
        }
        return true;
    }

    std::string to_text() const {
        std::string out;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (i) out += '\n';
            for (std::size_t j = 0; j < labels[i].size(); ++j) {
                if (j) out += ' ';
                out += std::to_string(labels[i][j]);
            }
        }
        return out;
    }
};

} // namespace ssyt
