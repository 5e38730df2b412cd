#pragma once

#include <vector>

#include "ssyt/count.hpp"

namespace ssyt {

/// First K terms (n = 1..K) of the involution numbers, the total count of
/// standard Young tableaux with n cells: w(n) = w(n-1) + (n-1) w(n-2),
/// seeded w(0) = w(1) = 1.
inline std::vector<Count> involution_sequence(int K) {
    std::vector<Count> out;
    if (K < 1) return out;
    out.reserve(static_cast<std::size_t>(K));
    Count prev2 = 1, prev1 = 1; // w(0), w(1)
    out.push_back(prev1);
    for (int n = 2; n <= K; ++n) {
        Count cur = prev1 + (n - 1) * prev2;
        prev2 = prev1;
        prev1 = cur;
        out.push_back(std::move(cur));
    }
    return out;
}

} // namespace ssyt
