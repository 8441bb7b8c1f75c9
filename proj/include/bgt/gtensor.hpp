/**
 * @file gtensor.hpp
 * @brief The bifocal Grassmann tensor of a projection pair.
 *
 * Fix a pair (A, B) with invariant i = h1+h2−k+1 and a profile
 * (alpha1, alpha2), and write s_j = h_j − alpha_j.  The tensor is the
 * binom(h2+1, s2+1) × binom(h1+1, s1+1) matrix
 *
 *     F[J, I] = ε(I, J) · det [ (A^T with the I columns removed) |
 *                               (B^T with the J columns removed) ]
 *
 * over column multi-indices I ⊂ {1..h1+1} of size s1+1 and row multi-indices
 * J ⊂ {1..h2+1} of size s2+1, both in lexicographic order.  The deleted-index
 * matrix keeps the complementary columns I^c (alpha1 of them) and J^c
 * (alpha2 of them), so the determinant is (k+1)×(k+1).  The sign is
 *
 *     ε(I, J) = parity of the concatenation (I, J + (h1+1), I^c, J^c + (h1+1))
 *               as a permutation of {1 .. h1+h2+2},
 *
 * the Laplace-expansion bookkeeping sign that makes F contract correctly
 * against Plücker coordinates:  for subspaces S1, S2 of dimensions s1+1,
 * s2+1, the full contraction Σ F[J,I]·plücker(S1)[I]·plücker(S2)[J] vanishes
 * exactly when some point of P^k projects into S1 and S2 simultaneously —
 * the determinant of the stacked incidence system, up to a single global
 * sign fixed by the configuration (see system_determinant).
 *
 * F has rank binom(i, s1+1) for every valid pair, the dimension of the
 * space of (s1+1)-forms on the common P^{i−1} quotient.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "bgt/camera.hpp"
#include "bgt/errors.hpp"
#include "bgt/exterior.hpp"
#include "bgt/ratmat.hpp"

namespace bgt {

struct GrassmannTensor {
    int k{0}, h1{0}, h2{0};
    Profile profile;
    std::vector<MultiIndex> row_labels;  ///< J ⊂ {1..h2+1}, |J| = s2+1, lex order
    std::vector<MultiIndex> col_labels;  ///< I ⊂ {1..h1+1}, |I| = s1+1, lex order
    RatMat F;                            ///< binom(h2+1, s2+1) × binom(h1+1, s1+1)
};

/// The rank every tensor of this profile attains: binom(i, s1+1).
[[nodiscard]] inline std::size_t expected_rank(const Profile& pr) {
    std::size_t i = static_cast<std::size_t>(pr.s1 + 1 + pr.s2 + 1);
    return binom(i, static_cast<std::size_t>(pr.s1 + 1));
}

/// Build the Grassmann tensor of the pair for the given profile.
[[nodiscard]] inline GrassmannTensor build_tensor(const ProjectionPair& p, const Profile& pr) {
    // re-validate the profile against this pair's dimensions
    (void)make_profile(p.k, p.h1, p.h2, pr.alpha1, pr.alpha2);

    GrassmannTensor t;
    t.k = p.k;
    t.h1 = p.h1;
    t.h2 = p.h2;
    t.profile = pr;
    t.col_labels = multiindices(p.h1 + 1, pr.s1 + 1);
    t.row_labels = multiindices(p.h2 + 1, pr.s2 + 1);

    const RatMat m1 = transpose(p.A);  // (k+1) × (h1+1)
    const RatMat m2 = transpose(p.B);  // (k+1) × (h2+1)
    std::vector<std::size_t> all_rows(static_cast<std::size_t>(p.k + 1));
    for (std::size_t r = 0; r < all_rows.size(); ++r) all_rows[r] = r;

    // per-label complements and 0-based column selections, precomputed
    struct ColData {
        std::vector<int> idx, cidx;          // 1-based I and I^c
        std::vector<std::size_t> keep;       // 0-based columns kept in A^T
    };
    auto prepare = [](const std::vector<MultiIndex>& labels) {
        std::vector<ColData> out;
        out.reserve(labels.size());
        for (const MultiIndex& mi : labels) {
            ColData d;
            d.idx = mi.indices;
            d.cidx = complement(mi).indices;
            for (int v : d.cidx) d.keep.push_back(static_cast<std::size_t>(v - 1));
            out.push_back(std::move(d));
        }
        return out;
    };
    const std::vector<ColData> cols_I = prepare(t.col_labels);
    const std::vector<ColData> rows_J = prepare(t.row_labels);

    t.F = RatMat(t.row_labels.size(), t.col_labels.size());
    const int shift = p.h1 + 1;
    for (std::size_t jr = 0; jr < rows_J.size(); ++jr) {
        // shifted copies of J and J^c live in {h1+2 .. h1+h2+2}
        std::vector<int> j_shift, jc_shift;
        for (int v : rows_J[jr].idx) j_shift.push_back(v + shift);
        for (int v : rows_J[jr].cidx) jc_shift.push_back(v + shift);
        const RatMat right = submatrix(m2, all_rows, rows_J[jr].keep);
        for (std::size_t ic = 0; ic < cols_I.size(); ++ic) {
            std::vector<int> head = cols_I[ic].idx;
            head.insert(head.end(), j_shift.begin(), j_shift.end());
            std::vector<int> tail = cols_I[ic].cidx;
            tail.insert(tail.end(), jc_shift.begin(), jc_shift.end());
            const int eps = perm_sign(head, tail);
            const RatMat left = submatrix(m1, all_rows, cols_I[ic].keep);
            Rat d = det(hcat(left, right));
            t.F(jr, ic) = eps > 0 ? d : -d;
        }
    }
    return t;
}

/// Contract the tensor against the Plücker coordinates of S1 ⊂ Q^{h1+1}
/// (dim s1+1) and S2 ⊂ Q^{h2+1} (dim s2+1).  Vanishes exactly on
/// corresponding subspaces.
[[nodiscard]] inline Rat evaluate(const GrassmannTensor& t, const Subspace& s1,
                                  const Subspace& s2) {
    if (s1.ambient_dim != static_cast<std::size_t>(t.h1 + 1) ||
        s2.ambient_dim != static_cast<std::size_t>(t.h2 + 1))
        throw shape_error("evaluate: wrong ambient dimensions");
    if (s1.dim() != static_cast<std::size_t>(t.profile.s1 + 1) ||
        s2.dim() != static_cast<std::size_t>(t.profile.s2 + 1))
        throw shape_error("evaluate: subspace dimensions do not match the profile");
    const PluckerVector p1 = plucker(s1);
    const PluckerVector p2 = plucker(s2);
    Rat acc = 0;
    for (std::size_t jr = 0; jr < t.F.rows; ++jr) {
        if (p2.coords[jr] == 0) continue;
        Rat row_acc = 0;
        for (std::size_t ic = 0; ic < t.F.cols; ++ic) row_acc += t.F(jr, ic) * p1.coords[ic];
        acc += p2.coords[jr] * row_acc;
    }
    return acc;
}

/// Determinant of the stacked incidence system
///     [ A  S1  0 ]
///     [ B  0   S2 ]
/// whose kernel is nontrivial exactly when the subspaces correspond.
/// The matrix is square iff dim S1 + dim S2 = i, i.e. the dimensions come
/// from an admissible profile; otherwise a shape_error is thrown.
[[nodiscard]] inline Rat system_determinant(const ProjectionPair& p, const Subspace& s1,
                                            const Subspace& s2) {
    if (s1.ambient_dim != static_cast<std::size_t>(p.h1 + 1) ||
        s2.ambient_dim != static_cast<std::size_t>(p.h2 + 1))
        throw shape_error("system_determinant: wrong ambient dimensions");
    if (s1.dim() == 0 || s2.dim() == 0)
        throw domain_error("system_determinant: subspaces must be nonzero");
    RatMat top = hcat(hcat(p.A, s1.basis), RatMat::zero(p.A.rows, s2.dim()));
    RatMat bot = hcat(hcat(p.B, RatMat::zero(p.B.rows, s1.dim())), s2.basis);
    RatMat sys = vcat(top, bot);
    if (sys.rows != sys.cols)
        throw shape_error("system_determinant: dim S1 + dim S2 must equal i");
    return det(sys);
}

/// True iff f2 = λ·f1 for some nonzero rational λ (all-zero pairs count as
/// proportional).  Exact: the candidate λ is read off the first nonzero
/// entry and then verified everywhere.
[[nodiscard]] inline bool tensors_proportional(const RatMat& f1, const RatMat& f2) {
    if (f1.rows != f2.rows || f1.cols != f2.cols)
        throw shape_error("tensors_proportional: shapes differ");
    std::size_t first = f1.entries.size();
    for (std::size_t t = 0; t < f1.entries.size(); ++t)
        if (f1.entries[t] != 0) {
            first = t;
            break;
        }
    if (first == f1.entries.size()) return is_zero(f2);
    if (f2.entries[first] == 0) return false;
    const Rat lambda = f2.entries[first] / f1.entries[first];
    for (std::size_t t = 0; t < f1.entries.size(); ++t)
        if (f2.entries[t] != lambda * f1.entries[t]) return false;
    return true;
}

}  // namespace bgt
