/**
 * @file jacobian.hpp
 * @brief Exact Jacobian of the tensor entry map (A, B) ↦ F at a pair.
 *
 * Every tensor entry is F[J,I] = ε(I,J) · det M(I,J) with
 * M(I,J) = [ A^T·cols(I^c) | B^T·cols(J^c) ], so a single matrix entry
 * A(r,c) appears in at most one position of each M(I,J): row c of the left
 * block's column holding A's row r (and analogously for B in the right
 * block).  The determinant is affine in any single entry, hence
 *
 *   ∂F[J,I]/∂A(r,c) = ε(I,J) · (−1)^{c+t} · det( M(I,J) minus row c, col t )
 *
 * when A's row r is kept at block position t, and 0 when row r is deleted
 * by I.  Affineness also means the derivative equals the exact finite
 * difference F(A + E_rc) − F(A) with step 1 — the independent oracle used
 * by the tests.
 *
 * The Jacobian rows enumerate tensor entries row-major in label order; the
 * columns enumerate A's entries row-major, then B's.  Its rank equals
 * (k+1)·i at a generic pair — the affine cone over the tensor variety has
 * dimension (k+1)(h1+h2−k+1).
 */
#pragma once

#include <cstddef>
#include <vector>

#include "bgt/camera.hpp"
#include "bgt/exterior.hpp"
#include "bgt/gtensor.hpp"
#include "bgt/ratmat.hpp"

namespace bgt {

namespace detail {

/// det of m with one row and one column removed.
[[nodiscard]] inline Rat deleted_minor(const RatMat& m, std::size_t drop_row,
                                       std::size_t drop_col) {
    std::vector<std::size_t> rows, cols;
    rows.reserve(m.rows - 1);
    cols.reserve(m.cols - 1);
    for (std::size_t r = 0; r < m.rows; ++r)
        if (r != drop_row) rows.push_back(r);
    for (std::size_t c = 0; c < m.cols; ++c)
        if (c != drop_col) cols.push_back(c);
    return det(submatrix(m, rows, cols));
}

}  // namespace detail

/// The exact Jacobian of (A, B) ↦ F for the given profile, evaluated at the
/// pair.  Shape: (#tensor entries) × ((h1+1)(k+1) + (h2+1)(k+1)); row
/// (jr, ic) is flattened as jr·#cols(F) + ic, parameter columns enumerate A
/// row-major and then B row-major.
[[nodiscard]] inline RatMat tensor_entry_jacobian(const ProjectionPair& p, const Profile& pr) {
    (void)make_profile(p.k, p.h1, p.h2, pr.alpha1, pr.alpha2);

    const std::vector<MultiIndex> col_labels = multiindices(p.h1 + 1, pr.s1 + 1);
    const std::vector<MultiIndex> row_labels = multiindices(p.h2 + 1, pr.s2 + 1);
    const RatMat m1 = transpose(p.A);
    const RatMat m2 = transpose(p.B);
    const std::size_t n = static_cast<std::size_t>(p.k + 1);
    std::vector<std::size_t> all_rows(n);
    for (std::size_t r = 0; r < n; ++r) all_rows[r] = r;

    const std::size_t a_params = p.A.rows * n;
    const std::size_t b_params = p.B.rows * n;
    RatMat jac(row_labels.size() * col_labels.size(), a_params + b_params);

    const int shift = p.h1 + 1;
    for (std::size_t jr = 0; jr < row_labels.size(); ++jr) {
        const std::vector<int> jc = complement(row_labels[jr]).indices;
        std::vector<int> j_shift, jc_shift;
        for (int v : row_labels[jr].indices) j_shift.push_back(v + shift);
        for (int v : jc) jc_shift.push_back(v + shift);
        std::vector<std::size_t> keep_j;
        for (int v : jc) keep_j.push_back(static_cast<std::size_t>(v - 1));
        const RatMat right = submatrix(m2, all_rows, keep_j);

        for (std::size_t ic = 0; ic < col_labels.size(); ++ic) {
            const std::vector<int> icomp = complement(col_labels[ic]).indices;
            std::vector<int> head = col_labels[ic].indices;
            head.insert(head.end(), j_shift.begin(), j_shift.end());
            std::vector<int> tail = icomp;
            tail.insert(tail.end(), jc_shift.begin(), jc_shift.end());
            const int eps = perm_sign(head, tail);
            std::vector<std::size_t> keep_i;
            for (int v : icomp) keep_i.push_back(static_cast<std::size_t>(v - 1));
            const RatMat minor_mat = hcat(submatrix(m1, all_rows, keep_i), right);

            const std::size_t out_row = jr * col_labels.size() + ic;
            // ∂/∂A(r, c): A's row r sits at block column t when kept by I^c
            for (std::size_t t = 0; t < keep_i.size(); ++t) {
                const std::size_t r = keep_i[t];
                for (std::size_t c = 0; c < n; ++c) {
                    Rat cof = detail::deleted_minor(minor_mat, c, t);
                    if ((c + t) % 2 == 1) cof = -cof;
                    jac(out_row, r * n + c) = eps > 0 ? cof : -cof;
                }
            }
            // ∂/∂B(r, c): B's row r sits at block column α1 + u when kept
            for (std::size_t u = 0; u < keep_j.size(); ++u) {
                const std::size_t r = keep_j[u];
                const std::size_t col = keep_i.size() + u;
                for (std::size_t c = 0; c < n; ++c) {
                    Rat cof = detail::deleted_minor(minor_mat, c, col);
                    if ((c + col) % 2 == 1) cof = -cof;
                    jac(out_row, a_params + r * n + c) = eps > 0 ? cof : -cof;
                }
            }
        }
    }
    return jac;
}

}  // namespace bgt
