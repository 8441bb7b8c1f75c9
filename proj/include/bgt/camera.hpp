/**
 * @file camera.hpp
 * @brief Pairs of linear projections P^k → P^{h1}, P^{h2} and their geometry.
 *
 * A ProjectionPair holds two full-rank matrices A ((h1+1)×(k+1)) and
 * B ((h2+1)×(k+1)) with k > max(h1, h2), whose centers — the projectivized
 * kernels C1 = P(ker A), C2 = P(ker B) — are disjoint, i.e.
 * rank [A^T | B^T] = k+1.  The fundamental invariant is
 *
 *     i = h1 + h2 − k + 1  (≥ 1),
 *
 * the dimension of the space of "tau vectors" (see moduli.hpp) and of the
 * common quotient target: both centers are hyperplane-complements inside the
 * span C1 ⊕ C2 of codimension i, so P^k \ P(C1 ⊕ C2) fibers over a P^{i−1}.
 *
 * A Profile fixes the bidegree (alpha1, alpha2) of the Grassmann tensor,
 * with alpha1 + alpha2 = k+1 and 1 ≤ alpha_j ≤ h_j; the complementary
 * numbers s_j = h_j − alpha_j satisfy (s1+1) + (s2+1) = i, so profiles
 * exist exactly when i ≥ 2.
 */
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bgt/errors.hpp"
#include "bgt/ratmat.hpp"
#include "bgt/rng.hpp"

namespace bgt {

// ===========================================================================
// ProjectionPair
// ===========================================================================

struct ProjectionPair {
    int k{0}, h1{0}, h2{0};
    int i{0};      ///< h1 + h2 − k + 1
    RatMat A;      ///< (h1+1) × (k+1), full row rank
    RatMat B;      ///< (h2+1) × (k+1), full row rank
    Subspace C1;   ///< ker A  (center of the first projection), dim k − h1
    Subspace C2;   ///< ker B  (center of the second projection), dim k − h2
};

/// Validate and package a pair of projection matrices.
/// Checks, in order: shapes, the global dimension constraints
/// k > max(h1,h2) and i = h1+h2−k+1 ≥ 1, full row rank of A and B, and
/// disjointness of the centers (rank [A^T | B^T] = k+1).
[[nodiscard]] inline ProjectionPair make_pair(const RatMat& a, const RatMat& b) {
    if (a.cols != b.cols) throw shape_error("projection matrices have different ambient dimensions");
    if (a.rows < 2 || b.rows < 2 || a.cols < 2)
        throw shape_error("projection matrices are too small to define projections");
    const int k = static_cast<int>(a.cols) - 1;
    const int h1 = static_cast<int>(a.rows) - 1;
    const int h2 = static_cast<int>(b.rows) - 1;
    if (k <= h1 || k <= h2)
        throw dimension_error("need k > max(h1, h2) for proper projections");
    const int i = h1 + h2 - k + 1;
    if (i < 1)
        throw dimension_error("need h1 + h2 >= k for a nonempty tau space (i >= 1)");
    if (rank_of(a) != a.rows) throw rank_error("first projection matrix is row-rank-deficient");
    if (rank_of(b) != b.rows) throw rank_error("second projection matrix is row-rank-deficient");
    if (rank_of(vcat(a, b)) != a.cols)
        throw centers_error("projection centers intersect: rank [A^T | B^T] < k+1");
    ProjectionPair p;
    p.k = k;
    p.h1 = h1;
    p.h2 = h2;
    p.i = i;
    p.A = a;
    p.B = b;
    p.C1 = Subspace{a.cols, kernel_basis(a)};
    p.C2 = Subspace{b.cols, kernel_basis(b)};
    return p;
}

// ===========================================================================
// Profiles
// ===========================================================================

struct Profile {
    int alpha1{0}, alpha2{0};  ///< alpha1 + alpha2 = k+1, 1 ≤ alpha_j ≤ h_j
    int s1{0}, s2{0};          ///< s_j = h_j − alpha_j; (s1+1)+(s2+1) = i

    friend bool operator==(const Profile& a, const Profile& b) {
        return a.alpha1 == b.alpha1 && a.alpha2 == b.alpha2 && a.s1 == b.s1 && a.s2 == b.s2;
    }
};

/// Validate a bidegree (alpha1, alpha2) against the pair's dimensions.
[[nodiscard]] inline Profile make_profile(int k, int h1, int h2, int alpha1, int alpha2) {
    if (alpha1 + alpha2 != k + 1)
        throw profile_error("profile must satisfy alpha1 + alpha2 = k + 1");
    if (alpha1 < 1 || alpha1 > h1 || alpha2 < 1 || alpha2 > h2)
        throw profile_error("profile must satisfy 1 <= alpha_j <= h_j");
    return Profile{alpha1, alpha2, h1 - alpha1, h2 - alpha2};
}

[[nodiscard]] inline Profile make_profile(const ProjectionPair& p, int alpha1, int alpha2) {
    return make_profile(p.k, p.h1, p.h2, alpha1, alpha2);
}

/// Every admissible profile, in decreasing alpha1; empty exactly when i < 2.
[[nodiscard]] inline std::vector<Profile> all_profiles(int k, int h1, int h2) {
    std::vector<Profile> out;
    for (int alpha1 = std::min(h1, k); alpha1 >= 1; --alpha1) {
        int alpha2 = k + 1 - alpha1;
        if (alpha2 >= 1 && alpha2 <= h2) out.push_back(make_profile(k, h1, h2, alpha1, alpha2));
    }
    return out;
}

[[nodiscard]] inline std::vector<Profile> all_profiles(const ProjectionPair& p) {
    return all_profiles(p.k, p.h1, p.h2);
}

// ===========================================================================
// Epipoles, quotient maps, polar hyperplanes
// ===========================================================================

/// Image of the other projection's center: epipole(p, 1) = A(C2) ⊂ Q^{h1+1}
/// (dimension k − h2), epipole(p, 2) = B(C1) ⊂ Q^{h2+1} (dimension k − h1).
/// These are linear (not just projective) images, so the centers being
/// disjoint makes the restriction of A to C2 injective.
[[nodiscard]] inline Subspace epipole(const ProjectionPair& p, int which) {
    if (which == 1) return subspace_from_generators(mul(p.A, p.C2.basis));
    if (which == 2) return subspace_from_generators(mul(p.B, p.C1.basis));
    throw domain_error("epipole: projection selector must be 1 or 2");
}

/**
 * The common quotient: a fixed i × (k+1) matrix P of full row rank whose
 * kernel is C1 ⊕ C2, together with the unique matrices N1 (i × (h1+1)) and
 * N2 (i × (h2+1)) with N1·A = N2·B = P.  P's rows are the canonical basis of
 * the annihilator of C1 ⊕ C2, so the construction is deterministic.
 * ker(N_j) is exactly the epipole in the j-th view.
 */
struct QuotientMaps {
    RatMat P;   ///< i × (k+1)
    RatMat N1;  ///< i × (h1+1)
    RatMat N2;  ///< i × (h2+1)
};

[[nodiscard]] inline QuotientMaps quotient_maps(const ProjectionPair& p) {
    RatMat span = hcat(p.C1.basis, p.C2.basis);             // (k+1) × (k+1−i), full rank
    RatMat ann = kernel_basis(transpose(span));             // (k+1) × i, canonical
    RatMat P = transpose(ann);                              // i × (k+1), P·(C1⊕C2) = 0
    // N_j is the unique solution of A^T · N_j^T = P^T (A^T has full column rank).
    RatMat N1 = transpose(solve_full_col_rank(transpose(p.A), transpose(P)));
    RatMat N2 = transpose(solve_full_col_rank(transpose(p.B), transpose(P)));
    return QuotientMaps{std::move(P), std::move(N1), std::move(N2)};
}

/// Polar hyperplane of the point X with respect to the quadric A^T·A:
/// the covector A^T·(A·X).  Throws degenerate_error when X lies on the
/// center of the projection (the ray through X collapses).
[[nodiscard]] inline RatMat polar_hyperplane(const RatMat& a, const RatMat& x) {
    if (x.cols != 1 || x.rows != a.cols) throw shape_error("polar_hyperplane: X must be a (k+1)-column");
    RatMat h = mul(transpose(a), mul(a, x));
    if (is_zero(h)) throw degenerate_error("polar_hyperplane: point lies on the projection center");
    return h;
}

// ===========================================================================
// Corresponding subspaces
// ===========================================================================

/// True iff some point X ∈ P^k projects into both subspaces:
/// A·X ∈ S1 and B·X ∈ S2 for a common X ≠ 0.  Decided exactly as the
/// existence of a nontrivial kernel of the stacked system
/// [[A, S1, 0], [B, 0, S2]] (columns: X, −coefficients in S1, −coefficients in S2).
[[nodiscard]] inline bool corresponding_subspaces(const ProjectionPair& p, const Subspace& s1,
                                                  const Subspace& s2) {
    if (s1.ambient_dim != static_cast<std::size_t>(p.h1 + 1) ||
        s2.ambient_dim != static_cast<std::size_t>(p.h2 + 1))
        throw shape_error("corresponding_subspaces: wrong ambient dimensions");
    if (s1.dim() == 0 || s2.dim() == 0)
        throw domain_error("corresponding_subspaces: subspaces must be nonzero");
    RatMat top = hcat(hcat(p.A, s1.basis), RatMat::zero(p.A.rows, s2.dim()));
    RatMat bot = hcat(hcat(p.B, RatMat::zero(p.B.rows, s1.dim())), s2.basis);
    RatMat sys = vcat(top, bot);
    return rank_of(sys) < sys.cols;
}

// ===========================================================================
// Random generation
// ===========================================================================

/// Seeded random valid pair with integer entries in [−bound, bound].
/// Retries on the (rare) degenerate draws; throws generation_error if the
/// retry budget is exhausted — e.g. when bound = 0 admits no valid pair.
[[nodiscard]] inline ProjectionPair random_pair(int k, int h1, int h2, std::uint64_t seed,
                                                int bound = 9) {
    if (k < 2 || h1 < 1 || h2 < 1) throw dimension_error("random_pair: need k >= 2 and h_j >= 1");
    if (k <= h1 || k <= h2) throw dimension_error("random_pair: need k > max(h1, h2)");
    if (h1 + h2 - k + 1 < 1) throw dimension_error("random_pair: need h1 + h2 >= k");
    Rng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        RatMat a = random_int_matrix(rng, static_cast<std::size_t>(h1 + 1),
                                     static_cast<std::size_t>(k + 1), bound);
        RatMat b = random_int_matrix(rng, static_cast<std::size_t>(h2 + 1),
                                     static_cast<std::size_t>(k + 1), bound);
        try {
            return make_pair(a, b);
        } catch (const rank_error&) {
        } catch (const centers_error&) {
        }
    }
    throw generation_error("random_pair: retry budget exhausted");
}

}  // namespace bgt
