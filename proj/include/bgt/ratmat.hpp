/**
 * @file ratmat.hpp
 * @brief Dense exact rational matrices and the linear algebra the library needs.
 *
 * Everything here is exact: no floating point anywhere.  The workhorse
 * routines are
 *   - det()      fraction-free Bareiss elimination over integers after
 *                clearing denominators column-by-column (fast, and the
 *                exact-divisibility of every internal division is checked,
 *                so a silent arithmetic bug cannot slip through);
 *   - rank_of()  the same fraction-free scheme, row-cleared, with column
 *                skipping for rank-deficient input;
 *   - rref()     textbook Gauss–Jordan over the rationals (small systems:
 *                kernels, inverses, canonical bases).
 *
 * Pivot selection is always "first nonzero in scan order", which makes every
 * result deterministic and platform-independent.
 *
 * A Subspace is stored by its unique canonical basis: the column-reduced
 * echelon basis with pivots normalized to 1, obtained by row-reducing the
 * transposed generators.  Two subspaces are equal iff their canonical bases
 * are identical, so set-level equality is a plain matrix comparison.
 */
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "bgt/errors.hpp"
#include "bgt/rat.hpp"

namespace bgt {

// ===========================================================================
// RatMat: dense row-major rational matrix
// ===========================================================================

struct RatMat {
    std::size_t rows{0};
    std::size_t cols{0};
    std::vector<Rat> entries;  ///< row-major, rows*cols values

    RatMat() = default;
    RatMat(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    /// r x c matrix of zeros.
    [[nodiscard]] static RatMat zero(std::size_t r, std::size_t c) { return RatMat(r, c); }

    /// n x n identity.
    [[nodiscard]] static RatMat identity(std::size_t n) {
        RatMat m(n, n);
        for (std::size_t d = 0; d < n; ++d) m(d, d) = 1;
        return m;
    }

    /// Unchecked element access (hot paths).
    Rat& operator()(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const Rat& operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    /// Bounds-checked element access.
    [[nodiscard]] Rat& at(std::size_t r, std::size_t c) {
        if (r >= rows || c >= cols) throw domain_error("matrix index out of range");
        return entries[r * cols + c];
    }
    [[nodiscard]] const Rat& at(std::size_t r, std::size_t c) const {
        if (r >= rows || c >= cols) throw domain_error("matrix index out of range");
        return entries[r * cols + c];
    }

    friend bool operator==(const RatMat& a, const RatMat& b) {
        return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
    }
};

/// Build a matrix from explicit rational rows (ragged input is a shape error).
[[nodiscard]] inline RatMat from_rows(const std::vector<std::vector<Rat>>& rows_in) {
    std::size_t r = rows_in.size();
    std::size_t c = r == 0 ? 0 : rows_in.front().size();
    RatMat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows_in[i].size() != c) throw shape_error("ragged row list");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows_in[i][j];
    }
    return m;
}

/// Convenience for integer-valued fixtures.
[[nodiscard]] inline RatMat from_int_rows(const std::vector<std::vector<long long>>& rows_in) {
    std::size_t r = rows_in.size();
    std::size_t c = r == 0 ? 0 : rows_in.front().size();
    RatMat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows_in[i].size() != c) throw shape_error("ragged row list");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows_in[i][j];
    }
    return m;
}

// ---------------------------------------------------------------------------
// Structural operations
// ---------------------------------------------------------------------------

[[nodiscard]] inline RatMat transpose(const RatMat& m) {
    RatMat t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    return t;
}

[[nodiscard]] inline RatMat mul(const RatMat& a, const RatMat& b) {
    if (a.cols != b.rows) throw shape_error("matrix product: inner dimensions differ");
    RatMat p(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t t = 0; t < a.cols; ++t) {
            const Rat& f = a(i, t);
            if (f == 0) continue;
            for (std::size_t j = 0; j < b.cols; ++j) p(i, j) += f * b(t, j);
        }
    return p;
}

[[nodiscard]] inline RatMat add(const RatMat& a, const RatMat& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw shape_error("matrix sum: shapes differ");
    RatMat s = a;
    for (std::size_t t = 0; t < s.entries.size(); ++t) s.entries[t] += b.entries[t];
    return s;
}

[[nodiscard]] inline RatMat sub(const RatMat& a, const RatMat& b) {
    if (a.rows != b.rows || a.cols != b.cols) throw shape_error("matrix difference: shapes differ");
    RatMat s = a;
    for (std::size_t t = 0; t < s.entries.size(); ++t) s.entries[t] -= b.entries[t];
    return s;
}

[[nodiscard]] inline RatMat negate(const RatMat& m) {
    RatMat n = m;
    for (auto& e : n.entries) e = -e;
    return n;
}

[[nodiscard]] inline RatMat scale(const Rat& c, const RatMat& m) {
    RatMat s = m;
    for (auto& e : s.entries) e *= c;
    return s;
}

/// Horizontal concatenation [a | b].
[[nodiscard]] inline RatMat hcat(const RatMat& a, const RatMat& b) {
    if (a.rows != b.rows) throw shape_error("hcat: row counts differ");
    RatMat m(a.rows, a.cols + b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t j = 0; j < a.cols; ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols; ++j) m(i, a.cols + j) = b(i, j);
    }
    return m;
}

/// Vertical concatenation [a ; b].
[[nodiscard]] inline RatMat vcat(const RatMat& a, const RatMat& b) {
    if (a.cols != b.cols) throw shape_error("vcat: column counts differ");
    RatMat m(a.rows + b.rows, a.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows; ++i)
        for (std::size_t j = 0; j < b.cols; ++j) m(a.rows + i, j) = b(i, j);
    return m;
}

/// Block diagonal [a 0; 0 b].
[[nodiscard]] inline RatMat blockdiag(const RatMat& a, const RatMat& b) {
    RatMat m(a.rows + b.rows, a.cols + b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows; ++i)
        for (std::size_t j = 0; j < b.cols; ++j) m(a.rows + i, a.cols + j) = b(i, j);
    return m;
}

/// Rows and columns selected by 0-based index lists (order preserved, repeats allowed).
[[nodiscard]] inline RatMat submatrix(const RatMat& m, const std::vector<std::size_t>& row_idx,
                                      const std::vector<std::size_t>& col_idx) {
    RatMat s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
        if (row_idx[i] >= m.rows) throw domain_error("submatrix: row index out of range");
        for (std::size_t j = 0; j < col_idx.size(); ++j) {
            if (col_idx[j] >= m.cols) throw domain_error("submatrix: column index out of range");
            s(i, j) = m(row_idx[i], col_idx[j]);
        }
    }
    return s;
}

/// Single column as an n x 1 matrix.
[[nodiscard]] inline RatMat column_of(const RatMat& m, std::size_t j) {
    if (j >= m.cols) throw domain_error("column index out of range");
    RatMat c(m.rows, 1);
    for (std::size_t i = 0; i < m.rows; ++i) c(i, 0) = m(i, j);
    return c;
}

/// First `count` columns as a new matrix.
[[nodiscard]] inline RatMat leading_columns(const RatMat& m, std::size_t count) {
    if (count > m.cols) throw domain_error("leading_columns: count exceeds width");
    RatMat s(m.rows, count);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < count; ++j) s(i, j) = m(i, j);
    return s;
}

[[nodiscard]] inline bool is_zero(const RatMat& m) {
    for (const auto& e : m.entries)
        if (e != 0) return false;
    return true;
}

// ===========================================================================
// Fraction-free integer core (det, rank)
// ===========================================================================

namespace detail {

/// Integer division that insists on exactness; a nonzero remainder would mean
/// the fraction-free recurrence is broken, i.e. a library bug.
inline Int exact_div(const Int& a, const Int& b) {
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw internal_error("fraction-free elimination: inexact division");
    return q;
}

struct IntMatrix {
    std::size_t rows{0}, cols{0};
    std::vector<Int> e;
    Int& operator()(std::size_t r, std::size_t c) { return e[r * cols + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return e[r * cols + c]; }
};

/// Clear denominators column-by-column.  Returns the integer matrix and the
/// product of the per-column multipliers (so det(m) = det(int) / multiplier).
inline std::pair<IntMatrix, Int> clear_denominators_by_column(const RatMat& m) {
    IntMatrix M;
    M.rows = m.rows;
    M.cols = m.cols;
    M.e.resize(m.rows * m.cols);
    Int total = 1;
    for (std::size_t j = 0; j < m.cols; ++j) {
        Int l = 1;
        for (std::size_t i = 0; i < m.rows; ++i) l = boost::multiprecision::lcm(l, rat_den(m(i, j)));
        for (std::size_t i = 0; i < m.rows; ++i)
            M(i, j) = rat_num(m(i, j)) * (l / rat_den(m(i, j)));
        total *= l;
    }
    return {std::move(M), std::move(total)};
}

/// Row-by-row variant (row scaling preserves rank).
inline IntMatrix clear_denominators_by_row(const RatMat& m) {
    IntMatrix M;
    M.rows = m.rows;
    M.cols = m.cols;
    M.e.resize(m.rows * m.cols);
    for (std::size_t i = 0; i < m.rows; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < m.cols; ++j) l = boost::multiprecision::lcm(l, rat_den(m(i, j)));
        for (std::size_t j = 0; j < m.cols; ++j)
            M(i, j) = rat_num(m(i, j)) * (l / rat_den(m(i, j)));
    }
    return M;
}

}  // namespace detail

/// Determinant, exact.  Empty (0 x 0) input has determinant 1.
[[nodiscard]] inline Rat det(const RatMat& m) {
    if (m.rows != m.cols) throw shape_error("determinant of a non-square matrix");
    const std::size_t n = m.rows;
    if (n == 0) return Rat(1);
    auto [M, denom] = detail::clear_denominators_by_column(m);
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // first-nonzero pivot in column k
        std::size_t piv = k;
        while (piv < n && M(piv, k) == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(M.e[piv * n + j], M.e[k * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                M(i, j) = detail::exact_div(M(k, k) * M(i, j) - M(i, k) * M(k, j), prev);
            M(i, k) = 0;
        }
        prev = M(k, k);
    }
    Rat result = rat_from_parts(M(n - 1, n - 1), denom);
    return sign < 0 ? -result : result;
}

/// Rank, exact, via fraction-free elimination with column skipping.
[[nodiscard]] inline std::size_t rank_of(const RatMat& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    detail::IntMatrix M = detail::clear_denominators_by_row(m);
    const std::size_t R = M.rows, C = M.cols;
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t piv = r;
        while (piv < R && M(piv, c) == 0) ++piv;
        if (piv == R) continue;  // no pivot in this column
        if (piv != r)
            for (std::size_t j = 0; j < C; ++j) std::swap(M.e[piv * C + j], M.e[r * C + j]);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j)
                M(i, j) = detail::exact_div(M(r, c) * M(i, j) - M(i, c) * M(r, j), prev);
            M(i, c) = 0;
        }
        prev = M(r, c);
        ++r;
    }
    return r;
}

// ===========================================================================
// Rational Gauss–Jordan (rref) and everything built on it
// ===========================================================================

struct RrefResult {
    RatMat R;                            ///< reduced row echelon form
    std::vector<std::size_t> pivot_cols; ///< pivot column of row t, ascending
};

/// Reduced row echelon form over the rationals (first-nonzero pivot scan).
[[nodiscard]] inline RrefResult rref(const RatMat& m) {
    RrefResult out{m, {}};
    RatMat& R = out.R;
    std::size_t r = 0;
    for (std::size_t c = 0; c < R.cols && r < R.rows; ++c) {
        std::size_t piv = r;
        while (piv < R.rows && R(piv, c) == 0) ++piv;
        if (piv == R.rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < R.cols; ++j) std::swap(R(piv, j), R(r, j));
        Rat inv = Rat(1) / R(r, c);
        for (std::size_t j = c; j < R.cols; ++j) R(r, j) *= inv;
        for (std::size_t i = 0; i < R.rows; ++i) {
            if (i == r || R(i, c) == 0) continue;
            Rat f = R(i, c);
            for (std::size_t j = c; j < R.cols; ++j) R(i, j) -= f * R(r, j);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    return out;
}

/// Inverse of a square matrix; throws invertibility_error if singular.
[[nodiscard]] inline RatMat inverse(const RatMat& m) {
    if (m.rows != m.cols) throw shape_error("inverse of a non-square matrix");
    const std::size_t n = m.rows;
    RrefResult red = rref(hcat(m, RatMat::identity(n)));
    if (red.pivot_cols.size() != n || (n > 0 && red.pivot_cols.back() != n - 1))
        throw invertibility_error("matrix is singular");
    RatMat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = red.R(i, n + j);
    return inv;
}

/// Solve a * x = b where a has full column rank (the solution is unique).
/// Throws rank_error if a is column-rank-deficient, domain_error if inconsistent.
[[nodiscard]] inline RatMat solve_full_col_rank(const RatMat& a, const RatMat& b) {
    if (a.rows != b.rows) throw shape_error("solve: row counts differ");
    const std::size_t n = a.cols;
    RrefResult red = rref(hcat(a, b));
    std::size_t pivots_in_a = 0;
    for (std::size_t p : red.pivot_cols)
        if (p < n) ++pivots_in_a;
    if (pivots_in_a != n) {
        if (red.pivot_cols.size() > pivots_in_a)
            throw domain_error("solve: inconsistent system");
        throw rank_error("solve: coefficient matrix is column-rank-deficient");
    }
    if (red.pivot_cols.size() != pivots_in_a) throw domain_error("solve: inconsistent system");
    RatMat x(n, b.cols);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < b.cols; ++j) x(i, j) = red.R(i, n + j);
    return x;
}

/// Basis of the (right) kernel of m, returned as the columns of a
/// (m.cols x nullity) matrix in canonical column-echelon form.
[[nodiscard]] RatMat kernel_basis(const RatMat& m);

/// Right inverse r with m * r = identity(m.rows); requires full row rank.
/// Deterministic construction: invert the pivot-column submatrix and embed.
[[nodiscard]] inline RatMat right_inverse(const RatMat& m) {
    RrefResult red = rref(m);
    if (red.pivot_cols.size() != m.rows)
        throw rank_error("right inverse requires full row rank");
    std::vector<std::size_t> all_rows(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) all_rows[i] = i;
    RatMat s = submatrix(m, all_rows, red.pivot_cols);
    RatMat s_inv = inverse(s);
    RatMat r(m.cols, m.rows);
    for (std::size_t t = 0; t < red.pivot_cols.size(); ++t)
        for (std::size_t j = 0; j < m.rows; ++j) r(red.pivot_cols[t], j) = s_inv(t, j);
    return r;
}

// ===========================================================================
// Subspaces
// ===========================================================================

/**
 * A linear subspace of Q^ambient_dim, stored by its canonical basis: the
 * unique column-echelon basis with pivots 1, obtained as the transpose of
 * rref(transpose(generators)).  Canonicality makes operator== a true
 * set-equality test.  The zero subspace has an (ambient_dim x 0) basis.
 */
struct Subspace {
    std::size_t ambient_dim{0};
    RatMat basis;  ///< ambient_dim x dim, canonical, full column rank

    [[nodiscard]] std::size_t dim() const { return basis.cols; }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_dim == b.ambient_dim && a.basis == b.basis;
    }
};

/// Span of the columns of `gens` (which may be dependent or zero), canonicalized.
[[nodiscard]] inline Subspace subspace_from_generators(const RatMat& gens) {
    RrefResult red = rref(transpose(gens));
    const std::size_t d = red.pivot_cols.size();
    RatMat basis(gens.rows, d);
    for (std::size_t t = 0; t < d; ++t)
        for (std::size_t i = 0; i < gens.rows; ++i) basis(i, t) = red.R(t, i);
    return Subspace{gens.rows, std::move(basis)};
}

inline RatMat kernel_basis(const RatMat& m) {
    RrefResult red = rref(m);
    const std::size_t n = m.cols;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : red.pivot_cols) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    RatMat gens(n, free_cols.size());
    for (std::size_t t = 0; t < free_cols.size(); ++t) {
        gens(free_cols[t], t) = 1;
        for (std::size_t r = 0; r < red.pivot_cols.size(); ++r)
            gens(red.pivot_cols[r], t) = -red.R(r, free_cols[t]);
    }
    // canonicalize so that equal kernels always get the identical basis
    return subspace_from_generators(gens).basis;
}

/// Intersection of the column spans of m1 and m2 (same row count).
[[nodiscard]] inline Subspace columnspace_intersection(const RatMat& m1, const RatMat& m2) {
    if (m1.rows != m2.rows) throw shape_error("columnspace_intersection: row counts differ");
    RatMat k = kernel_basis(hcat(m1, negate(m2)));
    // top block holds the m1-coefficients of each intersection vector
    RatMat top(m1.cols, k.cols);
    for (std::size_t i = 0; i < m1.cols; ++i)
        for (std::size_t j = 0; j < k.cols; ++j) top(i, j) = k(i, j);
    return subspace_from_generators(mul(m1, top));
}

}  // namespace bgt
