/**
 * @file moduli.hpp
 * @brief The dual representative τ of a projection pair, the moduli map Ψ
 *        to a Grassmannian of i-planes, the block-group action with its
 *        Ψ-equivariance and stabilizer, and constructive Ψ-preimages.
 *
 * With M1 = A^T and M2 = B^T, the pair (M1, M2) : Q^{h1+1} ⊕ Q^{h2+1} → U
 * (U = Q^{k+1}) has two natural kernels attached to it:
 *
 *   T_p        = { (f1, f2) : M1·f1 = M2·f2 }   (the unsigned pairing),
 *   ker(η^∨)   = { (f1, f2) : M1·f1 = −M2·f2 }  (the signed pairing).
 *
 * Both have dimension i = h1 + h2 − k + 1 for every valid pair.  TauPoint
 * stores a column basis (τ1, τ2) of T_p; the unsigned convention makes the
 * worked-example τ matrices come out verbatim and makes the canonical pair's
 * τ equal to ([I_i; 0], [I_i; 0]).  The moduli map is
 *
 *   Ψ(p) = colspan(M1 · τ1) = colspan(M2 · τ2) ⊂ U,
 *
 * an i-plane that coincides with the annihilator (C1 + C2)^⊥ of the two
 * centers.  Ψ is well defined whenever colspan[τ1; τ2] meets ker(η^∨) only
 * at 0; excess_dimension measures that overlap and psi refuses (with an
 * exceptional-locus error) when it is positive.  For camera-derived τ the
 * overlap is always zero: a vector in both kernels has M2·f2 = −M2·f2, and
 * M1, M2 have full column rank.
 *
 * The block group.  Elements (H, V1, V2) with H ∈ GL(i) shared between the
 * factors and V_j ∈ GL(h_j+1−i) act through Δ_j = blockdiag(H, V_j) by
 *
 *   M_j ↦ M_j · Δ_j^{−1}     (equivalently  A ↦ (Δ1^{−1})^T · A),
 *
 * which leaves both centers fixed, transforms τ_j ↦ Δ_j · τ_j, and therefore
 * leaves Ψ invariant — check_equivariance tests that as literal subspace
 * equality.  The stabilizer of the induced action on tensors consists of the
 * elements with scalar H: acting with H = δ·I_i rescales the Grassmann
 * tensor, while a generic non-scalar H moves it off its line.
 *
 * preimage_of_plane inverts Ψ constructively: given an i-plane W it splits
 * W^⊥ into random complementary pieces of dimensions k−h1 and k−h2, takes
 * those as centers, and returns annihilator projections — so Ψ of the result
 * is exactly W.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "bgt/camera.hpp"
#include "bgt/errors.hpp"
#include "bgt/ratmat.hpp"
#include "bgt/rng.hpp"

namespace bgt {

// ===========================================================================
// Types
// ===========================================================================

/**
 * A column basis of the unsigned kernel T_p = {(f1,f2) : A^T f1 = B^T f2},
 * stored in split form.  For a camera-derived point, [tau1; tau2] has full
 * column rank i and A^T·tau1 = B^T·tau2 holds exactly.  The struct is a
 * plain aggregate so that degenerate τ (used to probe the exceptional
 * locus) can be built directly.
 */
struct TauPoint {
    int i{0};     ///< common column count
    RatMat tau1;  ///< (h1+1) × i
    RatMat tau2;  ///< (h2+1) × i
};

/// An element (H, V1, V2) of the block group; Δ_j = blockdiag(H, V_j).
struct CalGElement {
    RatMat H;   ///< i × i, invertible (shared block)
    RatMat V1;  ///< (h1+1−i) × (h1+1−i), invertible
    RatMat V2;  ///< (h2+1−i) × (h2+1−i), invertible
};

// ===========================================================================
// τ and the moduli map Ψ
// ===========================================================================

/// Canonical basis of T_p = {(f1,f2) : A^T f1 = B^T f2}, split into the
/// (h1+1)- and (h2+1)-row blocks.  Always i-dimensional on valid pairs.
[[nodiscard]] inline TauPoint tau_from_pair(const ProjectionPair& p) {
    const RatMat joint = hcat(transpose(p.A), negate(transpose(p.B)));
    const RatMat ker = kernel_basis(joint);  // (h1+h2+2) × i, canonical
    if (ker.cols != static_cast<std::size_t>(p.i))
        throw internal_error("tau_from_pair: kernel dimension differs from i");
    const std::size_t n1 = p.A.rows;
    std::vector<std::size_t> top(n1), bottom(p.B.rows);
    for (std::size_t r = 0; r < n1; ++r) top[r] = r;
    for (std::size_t r = 0; r < p.B.rows; ++r) bottom[r] = n1 + r;
    std::vector<std::size_t> all_cols(ker.cols);
    for (std::size_t c = 0; c < ker.cols; ++c) all_cols[c] = c;
    return TauPoint{p.i, submatrix(ker, top, all_cols), submatrix(ker, bottom, all_cols)};
}

/// dim( colspan[tau1; tau2] ∩ ker(η^∨) ), where ker(η^∨) is the
/// opposite-sign kernel {(f1,f2) : A^T f1 = −B^T f2}.  Zero exactly when Ψ
/// is well defined at this τ; equals i when τ lies inside ker(η^∨).
[[nodiscard]] inline std::size_t excess_dimension(const ProjectionPair& p, const TauPoint& tau) {
    if (tau.tau1.rows != p.A.rows || tau.tau2.rows != p.B.rows)
        throw shape_error("excess_dimension: tau blocks do not match the pair");
    if (tau.tau1.cols != tau.tau2.cols)
        throw shape_error("excess_dimension: tau blocks have different column counts");
    const RatMat stacked = vcat(tau.tau1, tau.tau2);
    const RatMat opposite = kernel_basis(hcat(transpose(p.A), transpose(p.B)));
    return columnspace_intersection(stacked, opposite).dim();
}

/// The moduli map: Ψ(p) = colspan(A^T · τ1) ⊂ Q^{k+1}, an i-plane equal to
/// the annihilator (C1 + C2)^⊥.  Throws exceptional_locus_error if the
/// pair's τ meets the opposite-sign kernel nontrivially (never the case for
/// camera-derived τ of a valid pair, but kept as a guard).
[[nodiscard]] inline Subspace psi(const ProjectionPair& p) {
    const TauPoint tau = tau_from_pair(p);
    if (excess_dimension(p, tau) != 0)
        throw exceptional_locus_error("psi: tau meets the opposite-sign kernel");
    Subspace plane = subspace_from_generators(mul(transpose(p.A), tau.tau1));
    if (plane.dim() != static_cast<std::size_t>(p.i))
        throw internal_error("psi: image plane has unexpected dimension");
    return plane;
}

// ===========================================================================
// The block-group action
// ===========================================================================

/// Act on the pair by M_j ↦ M_j · Δ_j^{−1} with Δ_j = blockdiag(H, V_j);
/// on the row forms this is A ↦ (Δ1^{−1})^T · A, B ↦ (Δ2^{−1})^T · B.
/// Centers are unchanged.  Throws shape_error on block-size mismatch and
/// invertibility_error on singular blocks.
[[nodiscard]] inline ProjectionPair act_calG(const ProjectionPair& p, const CalGElement& g) {
    const auto i = static_cast<std::size_t>(p.i);
    if (g.H.rows != i || g.H.cols != i)
        throw shape_error("act_calG: H must be i x i");
    if (g.V1.rows != g.V1.cols || g.V1.rows != p.A.rows - i)
        throw shape_error("act_calG: V1 must be (h1+1-i) x (h1+1-i)");
    if (g.V2.rows != g.V2.cols || g.V2.rows != p.B.rows - i)
        throw shape_error("act_calG: V2 must be (h2+1-i) x (h2+1-i)");
    const RatMat delta1 = blockdiag(g.H, g.V1);
    const RatMat delta2 = blockdiag(g.H, g.V2);
    RatMat a = mul(transpose(inverse(delta1)), p.A);
    RatMat b = mul(transpose(inverse(delta2)), p.B);
    return make_pair(std::move(a), std::move(b));
}

/// True iff Ψ(g · p) = Ψ(p) as canonical subspaces (exact equality).
[[nodiscard]] inline bool check_equivariance(const ProjectionPair& p, const CalGElement& g) {
    return psi(act_calG(p, g)) == psi(p);
}

/// True iff H is a nonzero scalar multiple of the identity — the shape of
/// the elements whose induced action fixes the tensor up to one scalar.
[[nodiscard]] inline bool stabilizer_member(const CalGElement& g) {
    if (g.H.rows != g.H.cols) return false;
    if (g.H.rows == 0) return true;
    const Rat& delta = g.H(0, 0);
    if (delta == 0) return false;
    return g.H == scale(delta, RatMat::identity(g.H.rows));
}

// ===========================================================================
// Constructive Ψ-preimages
// ===========================================================================

/// Build a valid pair p with Ψ(p) = W for an i-plane W ⊂ Q^{k+1}, where
/// k = ambient − 1 and i = h1 + h2 − k + 1 must equal dim W.  The centers
/// are drawn as a seeded random complementary split of W^⊥ into pieces of
/// dimensions k−h1 and k−h2; the projections are their annihilators.
/// Throws shape_error on a dimension mismatch and generation_error if the
/// retry budget is exhausted.
[[nodiscard]] inline ProjectionPair preimage_of_plane(const Subspace& w, int h1, int h2,
                                                      std::uint64_t seed, int bound = 9) {
    if (w.ambient_dim < 3) throw shape_error("preimage_of_plane: ambient dimension too small");
    const int k = static_cast<int>(w.ambient_dim) - 1;
    const int i = h1 + h2 - k + 1;
    if (k <= h1 || k <= h2 || h1 < 1 || h2 < 1 || i < 1)
        throw shape_error("preimage_of_plane: invalid (k, h1, h2)");
    if (w.dim() != static_cast<std::size_t>(i))
        throw shape_error("preimage_of_plane: plane dimension must be h1 + h2 - k + 1");
    const RatMat wperp = kernel_basis(transpose(w.basis));  // (k+1) × (k+1−i)
    const auto d1 = static_cast<std::size_t>(k - h1);
    const auto d2 = static_cast<std::size_t>(k - h2);
    Rng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        const RatMat c1 = mul(wperp, random_int_matrix(rng, wperp.cols, d1, bound));
        const RatMat c2 = mul(wperp, random_int_matrix(rng, wperp.cols, d2, bound));
        if (rank_of(hcat(c1, c2)) != d1 + d2) continue;  // not a complementary split
        RatMat a = transpose(kernel_basis(transpose(c1)));
        RatMat b = transpose(kernel_basis(transpose(c2)));
        try {
            return make_pair(std::move(a), std::move(b));
        } catch (const rank_error&) {
        } catch (const centers_error&) {
        }
    }
    throw generation_error("preimage_of_plane: retry budget exhausted");
}

}  // namespace bgt
