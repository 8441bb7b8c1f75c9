/**
 * @file exterior.hpp
 * @brief Exterior-algebra combinatorics: multi-indices, signs, compounds,
 *        Plücker coordinates, and Hodge pairings.
 *
 * Conventions used throughout the library:
 *   - A multi-index is a strictly increasing tuple I = (i_1 < ... < i_r)
 *     drawn from {1..n}; the basis e_I := e_{i_1} ∧ ... ∧ e_{i_r} of Λ^r Q^n
 *     is ordered lexicographically, and lex_rank gives the 0-based position.
 *   - perm_sign(a, b) is the parity of the concatenation (a, b) viewed as a
 *     permutation of {1..|a|+|b|}, computed by inversion count.
 *   - shuffle_sign(I) = (−1)^{σ(I, I^c)} is the sign with
 *     e_I ∧ e_{I^c} = shuffle_sign(I) · e_{1..n}.
 *   - compound(m, r) is the r-th compound matrix (all r×r minors, lex order
 *     on both axes); it is multiplicative (Cauchy–Binet) and sends a full
 *     column rank matrix to a full column rank matrix.
 *   - hodge_tensor(i, r)[lex I, lex I^c] = shuffle_sign(I) encodes the wedge
 *     pairing Λ^r × Λ^{i−r} → Λ^i; for any i×i matrix Γ,
 *     compound(Γ,r) · hodge_tensor(i,r) · compound(Γ,i−r)^T = det(Γ) · hodge_tensor(i,r).
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "bgt/errors.hpp"
#include "bgt/ratmat.hpp"

namespace bgt {

/// Binomial coefficient; 0 when r > n.  Arguments stay far below overflow.
[[nodiscard]] inline std::size_t binom(std::size_t n, std::size_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    std::size_t acc = 1;
    for (std::size_t t = 1; t <= r; ++t) acc = acc * (n - r + t) / t;
    return acc;
}

/// Strictly increasing tuple of 1-based indices from {1..ambient}.
struct MultiIndex {
    int ambient{0};
    std::vector<int> indices;

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.ambient == b.ambient && a.indices == b.indices;
    }
};

/// All r-element multi-indices of {1..n} in lexicographic order.
[[nodiscard]] inline std::vector<MultiIndex> multiindices(int n, int r) {
    if (n < 0 || r < 0) throw domain_error("multiindices: negative argument");
    std::vector<MultiIndex> out;
    if (r > n) return out;
    out.reserve(binom(static_cast<std::size_t>(n), static_cast<std::size_t>(r)));
    std::vector<int> cur(static_cast<std::size_t>(r));
    for (int t = 0; t < r; ++t) cur[static_cast<std::size_t>(t)] = t + 1;
    while (true) {
        out.push_back(MultiIndex{n, cur});
        // advance to the next combination
        int t = r - 1;
        while (t >= 0 && cur[static_cast<std::size_t>(t)] == n - (r - 1 - t)) --t;
        if (t < 0) break;
        ++cur[static_cast<std::size_t>(t)];
        for (int s = t + 1; s < r; ++s)
            cur[static_cast<std::size_t>(s)] = cur[static_cast<std::size_t>(s - 1)] + 1;
    }
    return out;
}

/// 0-based lexicographic position of I among all |I|-subsets of {1..ambient}.
[[nodiscard]] inline std::size_t lex_rank(const MultiIndex& mi) {
    const int n = mi.ambient;
    const int r = static_cast<int>(mi.indices.size());
    int prev = 0;
    std::size_t rank = 0;
    for (int t = 0; t < r; ++t) {
        int c = mi.indices[static_cast<std::size_t>(t)];
        if (c <= prev || c > n) throw domain_error("lex_rank: not a strict multi-index");
        for (int v = prev + 1; v < c; ++v)
            rank += binom(static_cast<std::size_t>(n - v), static_cast<std::size_t>(r - 1 - t));
        prev = c;
    }
    return rank;
}

/// Complementary multi-index I^c = {1..ambient} \ I, increasing.
[[nodiscard]] inline MultiIndex complement(const MultiIndex& mi) {
    std::vector<bool> used(static_cast<std::size_t>(mi.ambient) + 1, false);
    for (int v : mi.indices) {
        if (v < 1 || v > mi.ambient) throw domain_error("complement: index out of range");
        used[static_cast<std::size_t>(v)] = true;
    }
    MultiIndex out{mi.ambient, {}};
    for (int v = 1; v <= mi.ambient; ++v)
        if (!used[static_cast<std::size_t>(v)]) out.indices.push_back(v);
    return out;
}

/// Parity of the concatenation (a, b) as a permutation of {1..|a|+|b|},
/// by inversion count; throws domain_error if it is not a permutation.
[[nodiscard]] inline int perm_sign(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> seq = a;
    seq.insert(seq.end(), b.begin(), b.end());
    const int n = static_cast<int>(seq.size());
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : seq) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw domain_error("perm_sign: sequence is not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
    long long inversions = 0;
    for (std::size_t s = 0; s < seq.size(); ++s)
        for (std::size_t t = s + 1; t < seq.size(); ++t)
            if (seq[s] > seq[t]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

/// (−1)^{σ(I, I^c)}: the sign with e_I ∧ e_{I^c} = shuffle_sign(I) · e_{1..n}.
[[nodiscard]] inline int shuffle_sign(const MultiIndex& mi) {
    return perm_sign(mi.indices, complement(mi).indices);
}

namespace detail {

/// 0-based column/row selection lists for a family of multi-indices.
inline std::vector<std::vector<std::size_t>> zero_based(const std::vector<MultiIndex>& mis) {
    std::vector<std::vector<std::size_t>> out;
    out.reserve(mis.size());
    for (const MultiIndex& mi : mis) {
        std::vector<std::size_t> v;
        v.reserve(mi.indices.size());
        for (int x : mi.indices) v.push_back(static_cast<std::size_t>(x - 1));
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace detail

/// r-th compound matrix: entry (lex R, lex C) = det m[R, C].
/// compound(m, 0) is the 1×1 matrix [1].
[[nodiscard]] inline RatMat compound(const RatMat& m, std::size_t r) {
    if (r > m.rows || r > m.cols)
        throw domain_error("compound: order exceeds matrix dimensions");
    auto row_sets = detail::zero_based(multiindices(static_cast<int>(m.rows), static_cast<int>(r)));
    auto col_sets = detail::zero_based(multiindices(static_cast<int>(m.cols), static_cast<int>(r)));
    RatMat c(row_sets.size(), col_sets.size());
    for (std::size_t i = 0; i < row_sets.size(); ++i)
        for (std::size_t j = 0; j < col_sets.size(); ++j)
            c(i, j) = det(submatrix(m, row_sets[i], col_sets[j]));
    return c;
}

/// Plücker coordinate vector of an r-dimensional subspace of Q^n:
/// the r×r minors of its canonical basis, lex order on row multi-indices.
struct PluckerVector {
    std::size_t r{0};         ///< dimension of the subspace
    std::size_t n{0};         ///< ambient dimension
    std::vector<Rat> coords;  ///< binom(n, r) minors, lex order

    friend bool operator==(const PluckerVector& a, const PluckerVector& b) {
        return a.r == b.r && a.n == b.n && a.coords == b.coords;
    }
};

[[nodiscard]] inline PluckerVector plucker(const Subspace& s) {
    if (s.dim() == 0) throw domain_error("plucker: zero-dimensional subspace");
    PluckerVector p{s.dim(), s.ambient_dim, {}};
    auto row_sets = detail::zero_based(
        multiindices(static_cast<int>(s.ambient_dim), static_cast<int>(s.dim())));
    std::vector<std::size_t> all_cols(s.dim());
    for (std::size_t j = 0; j < s.dim(); ++j) all_cols[j] = j;
    p.coords.reserve(row_sets.size());
    for (const auto& rows : row_sets) p.coords.push_back(det(submatrix(s.basis, rows, all_cols)));
    return p;
}

/// Hodge star on coordinates: maps Λ^r Q^n to Λ^{n−r} Q^n by
/// *(e_I) = shuffle_sign(I) · e_{I^c}.  Shape binom(n,n−r) × binom(n,r).
[[nodiscard]] inline RatMat hodge_star_matrix(std::size_t n, std::size_t r) {
    if (r > n) throw domain_error("hodge_star_matrix: r exceeds n");
    auto in_labels = multiindices(static_cast<int>(n), static_cast<int>(r));
    RatMat h(binom(n, n - r), binom(n, r));
    for (std::size_t j = 0; j < in_labels.size(); ++j)
        h(lex_rank(complement(in_labels[j])), j) = shuffle_sign(in_labels[j]);
    return h;
}

/// Wedge-pairing Gram matrix of Λ^r Q^i × Λ^{i−r} Q^i:
/// entry (lex I, lex J) is shuffle_sign(I) when J = I^c and 0 otherwise, so
/// x ∧ y = (x^T · hodge_tensor(i,r) · y) · e_{1..i}.
[[nodiscard]] inline RatMat hodge_tensor(std::size_t i, std::size_t r) {
    if (r > i) throw domain_error("hodge_tensor: r exceeds i");
    auto labels = multiindices(static_cast<int>(i), static_cast<int>(r));
    RatMat h(binom(i, r), binom(i, i - r));
    for (std::size_t t = 0; t < labels.size(); ++t)
        h(t, lex_rank(complement(labels[t]))) = shuffle_sign(labels[t]);
    return h;
}

}  // namespace bgt
