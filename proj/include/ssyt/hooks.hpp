#pragma once

#include <vector>

#include "ssyt/count.hpp"
#include "ssyt/partition.hpp"

namespace ssyt {

/// Hook lengths per box: arm (boxes strictly right) + leg (boxes strictly
/// below) + 1.
using HookMatrix = std::vector<std::vector<int>>;

inline HookMatrix hook_lengths(const Partition& lambda) {
    const auto& parts = lambda.parts();
    HookMatrix h(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        h[i].resize(static_cast<std::size_t>(parts[i]));
        for (int j = 1; j <= parts[i]; ++j) {
            int arm = parts[i] - j;
            int leg = 0;
            for (std::size_t r = i + 1; r < parts.size() && parts[r] >= j; ++r) ++leg;
            h[i][static_cast<std::size_t>(j - 1)] = arm + leg + 1;
        }
    }
    return h;
}

/// Number of standard Young tableaux of the shape: n! over the product of
/// hook lengths. The division is exact; a remainder aborts.
inline Count hook_count(const Partition& lambda) {
    Count denom = 1;
    for (const auto& row : hook_lengths(lambda))
        for (int h : row) denom *= h;
    return exact_div(factorial(static_cast<unsigned long>(lambda.weight())), denom);
}

/// k-dimensional Catalan number, the tableau count of the k x n rectangle:
/// (nk)! * 0! 1! ... (k-1)! / (n! (n+1)! ... (n+k-1)!).
inline Count k_catalan(int k, long n) {
    Count num = factorial(static_cast<unsigned long>(n) * static_cast<unsigned long>(k));
    Count denom = 1;
    for (int r = 0; r < k; ++r) {
        num *= factorial(static_cast<unsigned long>(r));
        denom *= factorial(static_cast<unsigned long>(n + r));
    }
    return exact_div(num, denom);
}

} // namespace ssyt
