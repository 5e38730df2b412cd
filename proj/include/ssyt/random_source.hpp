#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "ssyt/count.hpp"

namespace ssyt {

/// Deterministic randomness for the samplers. The generator is the standard
/// mt19937_64 (its output sequence is fully specified, so a seed reproduces
/// the same stream on any platform). Uniform draws over arbitrary-precision
/// ranges use rejection sampling on whole bit blocks; no floating point is
/// involved anywhere.
///
/// Single consumer: concurrent sampling needs one source per thread.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_word() { return gen_(); }

    /// Uniform integer in [0, m) for any m >= 1, exactly.
    Count uniform_int(const Count& m) {
        if (m < 1) throw std::invalid_argument("uniform_int: m must be >= 1");
        if (m == 1) return 0;
        Count bound = m - 1;
        std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
        std::size_t words = (bits + 63) / 64;
        std::uint64_t top_mask =
            (bits % 64 == 0) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (bits % 64)) - 1);
        std::vector<std::uint64_t> block(words);
        Count r;
        for (;;) {
            for (std::size_t w = 0; w < words; ++w) block[w] = gen_();
            block[words - 1] &= top_mask;
            mpz_import(r.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, block.data());
            if (r < m) return r;
        }
    }

    /// Convenience for container-sized ranges.
    std::size_t uniform_index(std::size_t m) {
        Count r = uniform_int(Count(static_cast<unsigned long>(m)));
        return static_cast<std::size_t>(mpz_get_ui(r.get_mpz_t()));
    }

private:
    std::mt19937_64 gen_;
};

} // namespace ssyt
