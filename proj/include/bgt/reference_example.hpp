/**
 * @file reference_example.hpp
 * @brief The bundled reference worked example: a fully hand-computed
 *        configuration with (k, h1, h2) = (5, 4, 3) and profile
 *        (alpha1, alpha2) = (3, 3), used as a bit-exact regression fixture.
 *
 * Every matrix below was worked out by hand for this one configuration:
 * the pair, a reduction witness (G, K1, K2) with det(G) = −1/2, the joint
 * canonical form, both Grassmann tensors (canonical and general, stored
 * transposed exactly as displayed in the worked computation), the tau
 * matrices, and the rank-one decompositions of both tensors.  The test
 * suite and the `example-paper` command recompute all of it from the pair
 * alone and compare entry by entry.
 */
#pragma once

#include "bgt/camera.hpp"
#include "bgt/canon.hpp"
#include "bgt/ratmat.hpp"

namespace bgt::refex {

inline constexpr int k = 5;
inline constexpr int h1 = 4;
inline constexpr int h2 = 3;
inline constexpr int alpha1 = 3;
inline constexpr int alpha2 = 3;

/// A (5 × 6): best read transposed — A^T stacks I_5 on a row of ones.
[[nodiscard]] inline RatMat matrix_a() {
    return from_int_rows({{1, 0, 0, 0, 0, 1},
                          {0, 1, 0, 0, 0, 1},
                          {0, 0, 1, 0, 0, 1},
                          {0, 0, 0, 1, 0, 1},
                          {0, 0, 0, 0, 1, 1}});
}

/// B (4 × 6).
[[nodiscard]] inline RatMat matrix_b() {
    return from_int_rows({{0, 0, 0, 1, 1, 0},
                          {0, 0, 1, 0, 0, 1},
                          {0, 1, 0, 0, 1, 0},
                          {1, 0, 0, 0, 0, 1}});
}

[[nodiscard]] inline ProjectionPair pair() { return make_pair(matrix_a(), matrix_b()); }

[[nodiscard]] inline Profile profile() { return make_profile(k, h1, h2, alpha1, alpha2); }

/// Reduction witness K1 (5 × 5), det 1.
[[nodiscard]] inline RatMat witness_k1() {
    return from_int_rows({{1, 0, 0, 0, 0},
                          {0, 1, 0, 0, 0},
                          {0, 0, 1, 0, 0},
                          {0, -1, 0, 1, 0},
                          {0, 0, 0, 0, 1}});
}

/// Reduction witness K2 (4 × 4), det 1.
[[nodiscard]] inline RatMat witness_k2() {
    return from_int_rows({{0, -1, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
}

/// Reduction witness G (6 × 6), det −1/2.  G is uniquely determined by
/// G · intermediate_joint() = canonical_joint() because the intermediate
/// stage has full row rank; the hand-computed display had a sign slip in
/// row 4, column 1 (+1/2 instead of −1/2), corrected here so the defining
/// identity holds exactly.  The determinant is unaffected.
[[nodiscard]] inline RatMat witness_g() {
    return scale(Rat(1) / 2, from_int_rows({{2, 0, 0, 0, 0, 0},
                                            {0, 2, 0, 0, 0, 0},
                                            {0, 0, 2, 0, 0, 0},
                                            {-1, 1, -1, 1, -1, 1},
                                            {-1, -1, -1, -1, 1, 1},
                                            {1, 1, 1, 1, 1, -1}}));
}

/// [A^T | B^T] · blockdiag(K1, K2): the intermediate stage of the reduction.
[[nodiscard]] inline RatMat intermediate_joint() {
    return from_int_rows({{1, 0, 0, 0, 0, 1, 0, 0, 0},
                          {0, 1, 0, 0, 0, 0, 1, 0, 0},
                          {0, 0, 1, 0, 0, 0, 0, 1, 0},
                          {0, -1, 0, 1, 0, 0, -1, 0, 1},
                          {0, 0, 0, 0, 1, 0, 0, 0, 1},
                          {1, 0, 1, 1, 1, 1, 0, 1, 0}});
}

/// G · [A^T | B^T] · blockdiag(K1, K2): the joint canonical block pattern.
[[nodiscard]] inline RatMat canonical_joint() {
    return from_int_rows({{1, 0, 0, 0, 0, 1, 0, 0, 0},
                          {0, 1, 0, 0, 0, 0, 1, 0, 0},
                          {0, 0, 1, 0, 0, 0, 0, 1, 0},
                          {0, 0, 0, 1, 0, 0, 0, 0, 0},
                          {0, 0, 0, 0, 1, 0, 0, 0, 0},
                          {0, 0, 0, 0, 0, 0, 0, 0, 1}});
}

/// Canonical tensor, stored transposed (10 × 4) exactly as displayed.
[[nodiscard]] inline RatMat tensor_fc_transposed() {
    return from_int_rows({{0, 0, -1, 0},
                          {0, 1, 0, 0},
                          {0, 0, 0, 0},
                          {0, 0, 0, 0},
                          {-1, 0, 0, 0},
                          {0, 0, 0, 0},
                          {0, 0, 0, 0},
                          {0, 0, 0, 0},
                          {0, 0, 0, 0},
                          {0, 0, 0, 0}});
}

/// General tensor of the pair, stored transposed (10 × 4) as displayed.
[[nodiscard]] inline RatMat tensor_f_transposed() {
    return from_int_rows({{0, 2, 0, 0},
                          {2, 0, -2, 0},
                          {0, -2, 0, 0},
                          {0, 0, 0, 0},
                          {0, 0, 0, 2},
                          {0, 0, 0, 0},
                          {0, 0, 0, 0},
                          {0, 0, 0, 2},
                          {0, 0, 0, 0},
                          {0, 0, 0, 0}});
}

/// tau_1^T (5 × 3): the first i = 3 columns of K1.
[[nodiscard]] inline RatMat tau1_transposed() {
    return from_int_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, -1, 0}, {0, 0, 0}});
}

/// tau_2^T (4 × 3): the first i = 3 columns of K2.
[[nodiscard]] inline RatMat tau2_transposed() {
    return from_int_rows({{0, -1, 0}, {0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
}

/// The displayed decomposition of the canonical tensor:
/// F_c = −e_{(12)} ⊗ (0,0,1,0) + e_{(13)} ⊗ (0,1,0,0) − e_{(23)} ⊗ (1,0,0,0),
/// in (scalar, terms) form with the sign carried on the Q side.
[[nodiscard]] inline Decomposition decomposition_fc() {
    Decomposition d;
    d.scalar = 1;
    auto e10 = [](std::size_t pos) {
        std::vector<Rat> v(10);
        v[pos] = 1;
        return v;
    };
    d.terms.push_back({e10(0), {0, 0, -1, 0}});
    d.terms.push_back({e10(1), {0, 1, 0, 0}});
    d.terms.push_back({e10(4), {-1, 0, 0, 0}});
    return d;
}

/// The displayed decomposition of the general tensor:
/// F = det(G)^{-1} [ −(1,0,−1,0,…) ⊗ (0,1,0,0) + (0,1,0,…) ⊗ (−1,0,1,0)
///                   − (0,0,0,0,1,0,0,1,0,0) ⊗ (0,0,0,1) ].
[[nodiscard]] inline Decomposition decomposition_f() {
    Decomposition d;
    d.scalar = -2;  // det(G)^{-1}
    d.terms.push_back({{1, 0, -1, 0, 0, 0, 0, 0, 0, 0}, {0, -1, 0, 0}});
    d.terms.push_back({{0, 1, 0, 0, 0, 0, 0, 0, 0, 0}, {-1, 0, 1, 0}});
    d.terms.push_back({{0, 0, 0, 0, 1, 0, 0, 1, 0, 0}, {0, 0, 0, -1}});
    return d;
}

/// The reduction witness assembled as one object (canonical form attached).
[[nodiscard]] inline CanonicalReduction reduction() {
    CanonicalReduction red;
    red.G = witness_g();
    red.K1 = witness_k1();
    red.K2 = witness_k2();
    red.detG = Rat(-1) / 2;
    red.canonical = canonical_joint();
    return red;
}

}  // namespace bgt::refex
