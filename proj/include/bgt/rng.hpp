/**
 * @file rng.hpp
 * @brief Seeded, platform-independent random generation of exact objects.
 *
 * All randomized routines take an explicit 64-bit seed and draw from a
 * std::mt19937_64 through a hand-rolled rejection sampler, because the
 * standard distributions are not required to produce identical streams
 * across implementations.  Same seed => byte-identical output everywhere.
 *
 * The environment variable GT_SEED, when set, overrides the library's
 * default seed (it never overrides an explicitly supplied one).
 */
#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "bgt/errors.hpp"
#include "bgt/ratmat.hpp"

namespace bgt {

inline constexpr std::uint64_t kDefaultSeed = 20240708ULL;

/// Deterministic generator wrapper.
struct Rng {
    std::mt19937_64 eng;

    explicit Rng(std::uint64_t seed) : eng(seed) {}

    /// Uniform integer in [lo, hi], inclusive; rejection sampling, no bias.
    int uniform_int(int lo, int hi) {
        if (lo > hi) throw domain_error("uniform_int: empty range");
        const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
        const std::uint64_t limit = range * (UINT64_MAX / range);
        std::uint64_t draw;
        do {
            draw = eng();
        } while (draw >= limit);
        return static_cast<int>(lo + static_cast<std::int64_t>(draw % range));
    }
};

/// Default seed, overridable via the GT_SEED environment variable.
[[nodiscard]] inline std::uint64_t default_seed() {
    const char* env = std::getenv("GT_SEED");
    if (env == nullptr || *env == '\0') return kDefaultSeed;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0') throw parse_error("GT_SEED is not a decimal integer");
    return static_cast<std::uint64_t>(v);
}

/// Matrix with integer entries uniform in [-bound, bound].
[[nodiscard]] inline RatMat random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
    if (bound < 0) throw domain_error("random_int_matrix: negative bound");
    RatMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform_int(-bound, bound);
    return m;
}

/// Matrix of rationals p/q with p in [-bound, bound], q in [1, bound].
[[nodiscard]] inline RatMat random_rat_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
    if (bound < 1) throw domain_error("random_rat_matrix: bound must be >= 1");
    RatMat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rat_from_parts(rng.uniform_int(-bound, bound), rng.uniform_int(1, bound));
    return m;
}

/// Nonzero rational (numerator redrawn until nonzero).
[[nodiscard]] inline Rat random_nonzero_rat(Rng& rng, int bound) {
    if (bound < 1) throw domain_error("random_nonzero_rat: bound must be >= 1");
    int p = 0;
    while (p == 0) p = rng.uniform_int(-bound, bound);
    return rat_from_parts(p, rng.uniform_int(1, bound));
}

/// Invertible n x n integer matrix; throws generation_error if the retry
/// budget is exhausted (essentially impossible for bound >= 2).
[[nodiscard]] inline RatMat random_invertible_matrix(Rng& rng, std::size_t n, int bound) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        RatMat m = random_int_matrix(rng, n, n, bound);
        if (det(m) != 0) return m;
    }
    throw generation_error("random_invertible_matrix: retry budget exhausted");
}

}  // namespace bgt
