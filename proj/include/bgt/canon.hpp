/**
 * @file canon.hpp
 * @brief Canonical form of a projection pair under the GL(k+1) × GL(h1+1) ×
 *        GL(h2+1) action, the induced tensor transformation law, and the
 *        rank-one decomposition of the tensor.
 *
 * The group acts on the transposed matrices M1 = A^T, M2 = B^T by
 * M_j ↦ G · M_j · H_j.  Every valid pair can be moved to the canonical pair
 *
 *     M1_c = [ I_{h1+1} ]      M2_c = [ e_1 .. e_i | e_{h1+2} .. e_{k+1} ]
 *            [    0     ]
 *
 * (columns of M2_c written as standard basis vectors of Q^{k+1}); the joint
 * matrix [M1_c | M2_c] is the block pattern returned by
 * canonical_block_matrix.  reduce_to_canonical finds a witness (G, K1, K2)
 * with G · [M1 | M2] · blockdiag(K1, K2) = [M1_c | M2_c] deterministically:
 *
 *   1. v    = canonical basis of colspan(M1) ∩ colspan(M2)   (dimension i);
 *   2. w_j  = greedy completion of v to a basis of colspan(M_j) using the
 *             columns of M_j itself (first column that grows the span wins);
 *   3. K_j  = the unique solution of M_j · K_j = [v | w_j];
 *   4. the last column of each w_j / K_j is rescaled so det(K_j) = 1
 *      ("determinant normalization");
 *   5. G    = [v | w_1 | w_2]^{-1}.
 *
 * Transformation law.  With s_j = h_j − alpha_j and Λ^r = compound(·, r),
 *
 *     F = det(G)^{-1} · Λ^{s2+1}(K2) · F_c · (Λ^{s1+1}(K1))^T ,
 *
 * which is exact because of step 4: the general law carries an extra factor
 * det(K1)·det(K2) (a consequence of Jacobi's complementary-minor identity),
 * equal to 1 after normalization.  transform_tensor implements the displayed
 * law verbatim.
 *
 * Decomposition.  Writing tau_j^T for the first i columns of K_j, the tensor
 * splits into binom(i, s1+1) rank-one terms
 *
 *     F = det(G)^{-1} · Σ_I  c_I · (Λ^{s2+1} tau_2^T)_{I^c} ⊗ (Λ^{s1+1} tau_1^T)_I ,
 *
 * where I runs over the (s1+1)-subsets of {1..i} in lex order, the subscripts
 * select columns of the compounds, and c_I = F_c[I^c, I] ∈ {±1} is read off
 * the canonical tensor.  The term count equals rank(F), so the decomposition
 * is minimal, and summing the terms reproduces F exactly.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "bgt/camera.hpp"
#include "bgt/errors.hpp"
#include "bgt/exterior.hpp"
#include "bgt/gtensor.hpp"
#include "bgt/ratmat.hpp"

namespace bgt {

// ===========================================================================
// Canonical pair
// ===========================================================================

/// The joint canonical block pattern [M1_c | M2_c], a (k+1) × (h1+h2+2) matrix.
[[nodiscard]] inline RatMat canonical_block_matrix(int k, int h1, int h2) {
    const int i = h1 + h2 - k + 1;
    if (k <= h1 || k <= h2 || i < 1) throw dimension_error("canonical_block_matrix: bad dimensions");
    RatMat m(static_cast<std::size_t>(k + 1), static_cast<std::size_t>(h1 + h2 + 2));
    for (int c = 0; c < h1 + 1; ++c)  // M1_c = [I ; 0]
        m(static_cast<std::size_t>(c), static_cast<std::size_t>(c)) = 1;
    for (int c = 0; c < h2 + 1; ++c) {  // M2_c columns: e_c for c ≤ i, then e_{h1+1+c−i}
        int row = c < i ? c : h1 + 1 + (c - i);
        m(static_cast<std::size_t>(row), static_cast<std::size_t>(h1 + 1 + c)) = 1;
    }
    return m;
}

/// The canonical pair itself (A_c, B_c) with A_c^T = M1_c, B_c^T = M2_c.
[[nodiscard]] inline ProjectionPair canonical_pair(int k, int h1, int h2) {
    RatMat joint = canonical_block_matrix(k, h1, h2);
    std::vector<std::size_t> all_rows(static_cast<std::size_t>(k + 1));
    for (std::size_t r = 0; r < all_rows.size(); ++r) all_rows[r] = r;
    std::vector<std::size_t> left, right;
    for (int c = 0; c < h1 + 1; ++c) left.push_back(static_cast<std::size_t>(c));
    for (int c = 0; c < h2 + 1; ++c) right.push_back(static_cast<std::size_t>(h1 + 1 + c));
    return make_pair(transpose(submatrix(joint, all_rows, left)),
                     transpose(submatrix(joint, all_rows, right)));
}

// ===========================================================================
// Reduction to canonical form
// ===========================================================================

struct CanonicalReduction {
    RatMat G;          ///< (k+1) × (k+1)
    RatMat K1;         ///< (h1+1) × (h1+1), det 1
    RatMat K2;         ///< (h2+1) × (h2+1), det 1
    Rat detG;
    RatMat canonical;  ///< G · [M1 | M2] · blockdiag(K1, K2), the block pattern
};

namespace detail {

/// Columns of m that greedily extend the columns of `start` to a basis of
/// colspan(m); scanning order makes the choice deterministic.
inline RatMat greedy_completion(const RatMat& m, const RatMat& start) {
    RatMat cur = start;
    RatMat chosen(m.rows, 0);
    for (std::size_t j = 0; j < m.cols; ++j) {
        RatMat cand = hcat(cur, column_of(m, j));
        if (rank_of(cand) > cur.cols) {
            cur = std::move(cand);
            chosen = hcat(chosen, column_of(m, j));
        }
    }
    return chosen;
}

}  // namespace detail

/// Deterministic witness of the reduction to canonical form (see file header).
[[nodiscard]] inline CanonicalReduction reduce_to_canonical(const ProjectionPair& p) {
    const RatMat m1 = transpose(p.A);
    const RatMat m2 = transpose(p.B);

    Subspace inter = columnspace_intersection(m1, m2);
    if (inter.dim() != static_cast<std::size_t>(p.i))
        throw internal_error("reduce_to_canonical: intersection dimension is not i");
    const RatMat& v = inter.basis;

    RatMat w1 = detail::greedy_completion(m1, v);
    RatMat w2 = detail::greedy_completion(m2, v);

    RatMat k1 = solve_full_col_rank(m1, hcat(v, w1));
    RatMat k2 = solve_full_col_rank(m2, hcat(v, w2));

    // determinant normalization: divide the last completion column by det(K_j)
    Rat d1 = det(k1);
    Rat d2 = det(k2);
    if (d1 == 0 || d2 == 0) throw internal_error("reduce_to_canonical: singular K factor");
    for (std::size_t r = 0; r < k1.rows; ++r) k1(r, k1.cols - 1) /= d1;
    for (std::size_t r = 0; r < w1.rows; ++r) w1(r, w1.cols - 1) /= d1;
    for (std::size_t r = 0; r < k2.rows; ++r) k2(r, k2.cols - 1) /= d2;
    for (std::size_t r = 0; r < w2.rows; ++r) w2(r, w2.cols - 1) /= d2;

    RatMat g_inv = hcat(hcat(v, w1), w2);
    if (g_inv.rows != g_inv.cols) throw internal_error("reduce_to_canonical: completion miscount");
    RatMat g = inverse(g_inv);

    CanonicalReduction red;
    red.detG = det(g);
    red.G = std::move(g);
    red.K1 = std::move(k1);
    red.K2 = std::move(k2);
    red.canonical = mul(red.G, mul(hcat(m1, m2), blockdiag(red.K1, red.K2)));
    if (red.canonical != canonical_block_matrix(p.k, p.h1, p.h2))
        throw internal_error("reduce_to_canonical: witness does not reach the block pattern");
    return red;
}

// ===========================================================================
// Group action and transformation law
// ===========================================================================

/// Act on the pair by (G, H1, H2): M_j ↦ G · M_j · H_j, i.e.
/// A ↦ H1^T · A · G^T and B ↦ H2^T · B · G^T.  All factors must be invertible.
[[nodiscard]] inline ProjectionPair act_big_group(const ProjectionPair& p, const RatMat& g,
                                                  const RatMat& h1, const RatMat& h2) {
    if (g.rows != g.cols || g.rows != static_cast<std::size_t>(p.k + 1))
        throw shape_error("act_big_group: G must be (k+1) x (k+1)");
    if (h1.rows != h1.cols || h1.rows != static_cast<std::size_t>(p.h1 + 1))
        throw shape_error("act_big_group: H1 must be (h1+1) x (h1+1)");
    if (h2.rows != h2.cols || h2.rows != static_cast<std::size_t>(p.h2 + 1))
        throw shape_error("act_big_group: H2 must be (h2+1) x (h2+1)");
    if (det(g) == 0 || det(h1) == 0 || det(h2) == 0)
        throw invertibility_error("act_big_group: group elements must be invertible");
    RatMat a2 = transpose(mul(mul(g, transpose(p.A)), h1));
    RatMat b2 = transpose(mul(mul(g, transpose(p.B)), h2));
    return make_pair(a2, b2);
}

/// Push a canonical-form tensor through a reduction witness:
///     F = det(G)^{-1} · Λ^{s2+1}(K2) · F_c · (Λ^{s1+1}(K1))^T.
/// Exact whenever det(K1)·det(K2) = 1 (reduce_to_canonical guarantees it).
[[nodiscard]] inline GrassmannTensor transform_tensor(const GrassmannTensor& base, const RatMat& k1,
                                                      const RatMat& k2, const Rat& det_g) {
    if (k1.rows != k1.cols || k1.rows != static_cast<std::size_t>(base.h1 + 1))
        throw shape_error("transform_tensor: K1 must be (h1+1) x (h1+1)");
    if (k2.rows != k2.cols || k2.rows != static_cast<std::size_t>(base.h2 + 1))
        throw shape_error("transform_tensor: K2 must be (h2+1) x (h2+1)");
    if (det_g == 0) throw invertibility_error("transform_tensor: det(G) must be nonzero");
    if (det(k1) == 0 || det(k2) == 0)
        throw invertibility_error("transform_tensor: K factors must be invertible");
    GrassmannTensor out = base;
    RatMat lk2 = compound(k2, static_cast<std::size_t>(base.profile.s2 + 1));
    RatMat lk1 = compound(k1, static_cast<std::size_t>(base.profile.s1 + 1));
    out.F = scale(Rat(1) / det_g, mul(mul(lk2, base.F), transpose(lk1)));
    return out;
}

// ===========================================================================
// Rank-one decomposition
// ===========================================================================

struct DecompositionTerm {
    std::vector<Rat> P;  ///< length binom(h1+1, s1+1): column-label side
    std::vector<Rat> Q;  ///< length binom(h2+1, s2+1): row-label side
};

/// F = scalar · Σ_t  Q_t ⊗ P_t  (i.e. scalar · Σ_t Q_t · P_t^T), minimal.
struct Decomposition {
    Rat scalar;
    std::vector<DecompositionTerm> terms;
};

/// Decompose using an explicit reduction witness (so independently obtained
/// witnesses — not only reduce_to_canonical's — can drive the decomposition).
[[nodiscard]] inline Decomposition decompose_with_reduction(const ProjectionPair& p,
                                                            const Profile& pr,
                                                            const CanonicalReduction& red) {
    (void)make_profile(p.k, p.h1, p.h2, pr.alpha1, pr.alpha2);
    if (red.K1.rows != static_cast<std::size_t>(p.h1 + 1) ||
        red.K2.rows != static_cast<std::size_t>(p.h2 + 1))
        throw shape_error("decompose_with_reduction: witness does not fit the pair");
    if (red.detG == 0) throw invertibility_error("decompose_with_reduction: det(G) must be nonzero");

    const std::size_t s1p = static_cast<std::size_t>(pr.s1 + 1);
    const std::size_t s2p = static_cast<std::size_t>(pr.s2 + 1);
    const RatMat tau1t = leading_columns(red.K1, static_cast<std::size_t>(p.i));
    const RatMat tau2t = leading_columns(red.K2, static_cast<std::size_t>(p.i));
    const RatMat pm = compound(tau1t, s1p);  // binom(h1+1, s1+1) × binom(i, s1+1)
    const RatMat qm = compound(tau2t, s2p);  // binom(h2+1, s2+1) × binom(i, s2+1)

    const GrassmannTensor fc = build_tensor(canonical_pair(p.k, p.h1, p.h2), pr);

    Decomposition dec;
    dec.scalar = Rat(1) / red.detG;
    for (const MultiIndex& idx : multiindices(p.i, static_cast<int>(s1p))) {
        const MultiIndex idx_c = complement(idx);
        // the canonical tensor's entry at (row I^c, column I), both embedded
        const Rat c = fc.F(lex_rank(MultiIndex{p.h2 + 1, idx_c.indices}),
                           lex_rank(MultiIndex{p.h1 + 1, idx.indices}));
        if (c != 1 && c != -1)
            throw internal_error("decompose_with_reduction: canonical entry is not ±1");
        DecompositionTerm term;
        const std::size_t pc = lex_rank(idx);
        const std::size_t qc = lex_rank(idx_c);
        term.P.reserve(pm.rows);
        for (std::size_t r = 0; r < pm.rows; ++r) term.P.push_back(pm(r, pc));
        term.Q.reserve(qm.rows);
        for (std::size_t r = 0; r < qm.rows; ++r) term.Q.push_back(c * qm(r, qc));
        dec.terms.push_back(std::move(term));
    }
    return dec;
}

/// Decompose the pair's tensor for the given profile (witness computed here).
[[nodiscard]] inline Decomposition decompose_tensor(const ProjectionPair& p, const Profile& pr) {
    return decompose_with_reduction(p, pr, reduce_to_canonical(p));
}

/// scalar · Σ_t Q_t · P_t^T as a matrix (the tensor the decomposition encodes).
[[nodiscard]] inline RatMat reassemble(const Decomposition& dec) {
    if (dec.terms.empty()) throw domain_error("reassemble: decomposition has no terms");
    const std::size_t rows = dec.terms.front().Q.size();
    const std::size_t cols = dec.terms.front().P.size();
    RatMat f(rows, cols);
    for (const DecompositionTerm& term : dec.terms) {
        if (term.Q.size() != rows || term.P.size() != cols)
            throw shape_error("reassemble: ragged decomposition terms");
        for (std::size_t r = 0; r < rows; ++r) {
            if (term.Q[r] == 0) continue;
            for (std::size_t c = 0; c < cols; ++c) f(r, c) += term.Q[r] * term.P[c];
        }
    }
    return scale(dec.scalar, f);
}

}  // namespace bgt
