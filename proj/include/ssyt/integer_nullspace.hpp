#pragma once

#include <cstdint>
#include <vector>

#include "ssyt/count.hpp"

namespace ssyt {

using MpzMatrix = std::vector<std::vector<Count>>;

namespace detail {

// 2^61 - 1, prime; products of two residues fit unsigned __int128
inline constexpr std::uint64_t kRankPrime = 2305843009213693951ULL;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

} // namespace detail

/// Row reduction over GF(p). Since a dependency over Q reduces to one mod p,
/// rank_p <= rank_Q; full column rank mod p therefore certifies a trivial
/// rational nullspace exactly.
inline int rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        std::uint64_t inv = detail::invmod(m[r][c], p);
        for (std::size_t rr = r + 1; rr < rows; ++rr) {
            if (m[rr][c] == 0) continue;
            std::uint64_t f = detail::mulmod(m[rr][c], inv, p);
            for (std::size_t cc = c; cc < cols; ++cc) {
                std::uint64_t sub = detail::mulmod(f, m[r][cc], p);
                m[rr][cc] = (m[rr][cc] >= sub) ? m[rr][cc] - sub : m[rr][cc] + p - sub;
            }
        }
        ++r;
    }
    return static_cast<int>(r);
}

/// Exact rational nullspace of an integer matrix, returned as primitive
/// integer vectors (one per free column, in column order). Forward
/// elimination is fraction-free one-step Bareiss — every division is exact —
/// followed by rational back-substitution and denominator clearing.
inline std::vector<std::vector<Count>> integer_nullspace(const MpzMatrix& matrix) {
    if (matrix.empty()) return {};
    std::size_t rows = matrix.size(), cols = matrix[0].size();
    MpzMatrix w = matrix;

    std::vector<std::size_t> pivot_col; // pivot column of echelon row r
    std::vector<bool> is_pivot(cols, false);
    Count prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && w[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(w[piv], w[r]);
        for (std::size_t rr = r + 1; rr < rows; ++rr) {
            for (std::size_t cc = c + 1; cc < cols; ++cc) {
                w[rr][cc] = exact_div(w[rr][cc] * w[r][c] - w[rr][c] * w[r][cc], prev);
            }
            w[rr][c] = 0;
        }
        prev = w[r][c];
        pivot_col.push_back(c);
        is_pivot[c] = true;
        ++r;
    }

    std::size_t rank = r;
    if (rank == cols) return {};

    std::vector<std::vector<Count>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<mpq_class> x(cols, mpq_class(0));
        x[f] = 1;
        for (std::size_t pr = rank; pr-- > 0;) {
            std::size_t pc = pivot_col[pr];
            mpq_class sum = 0;
            for (std::size_t cc = pc + 1; cc < cols; ++cc) {
                if (x[cc] != 0 && w[pr][cc] != 0) sum += mpq_class(w[pr][cc]) * x[cc];
            }
            x[pc] = -sum / mpq_class(w[pr][pc]);
        }
        // clear denominators, then strip the content
        Count lcm = 1;
        for (const auto& q : x) {
            Count den = q.get_den();
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
        }
        std::vector<Count> v(cols);
        Count content = 0;
        for (std::size_t c2 = 0; c2 < cols; ++c2) {
            mpq_class scaled = x[c2] * mpq_class(lcm);
            v[c2] = scaled.get_num();
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v[c2].get_mpz_t());
        }
        if (content > 1) {
            for (auto& e : v) e = exact_div(e, content);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace ssyt
