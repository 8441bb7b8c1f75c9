/**
 * @file test_ratmat.cpp
 * @brief Exact rational scalars, matrices, and core linear algebra.
 *
 * Derived results (det, rank, kernels, intersections) are cross-checked
 * against the independent oracles in oracles.hpp on seeded random input;
 * hand-checkable values are asserted directly.
 */
#include <catch2/catch_amalgamated.hpp>

#include "bgt/rat.hpp"
#include "bgt/ratmat.hpp"
#include "bgt/rng.hpp"
#include "oracles.hpp"

using namespace bgt;

TEST_CASE("rational text form round-trips in lowest terms", "[rat]") {
    CHECK(rat_to_string(rat_from_string("3/4")) == "3/4");
    CHECK(rat_to_string(rat_from_string("-7")) == "-7");
    CHECK(rat_to_string(rat_from_string("0")) == "0");
    CHECK(rat_to_string(rat_from_string("6/4")) == "3/2");
    CHECK(rat_to_string(rat_from_string("-6/4")) == "-3/2");
    CHECK(rat_to_string(rat_from_string("0/9")) == "0");
    CHECK(rat_from_parts(Int(2), Int(-4)) == rat_from_string("-1/2"));
    CHECK(rat_den(rat_from_parts(Int(2), Int(-4))) == 2);  // denominator stays positive

    CHECK_THROWS_AS(rat_from_string(""), parse_error);
    CHECK_THROWS_AS(rat_from_string("x"), parse_error);
    CHECK_THROWS_AS(rat_from_string("--3"), parse_error);
    CHECK_THROWS_AS(rat_from_string("1/0"), parse_error);
    CHECK_THROWS_AS(rat_from_string("1/-2"), parse_error);
    CHECK_THROWS_AS(rat_from_string("1/"), parse_error);
    CHECK_THROWS_AS(rat_from_string("3.5"), parse_error);
    CHECK_THROWS_AS(rat_from_parts(Int(1), Int(0)), domain_error);
}

TEST_CASE("matrix construction and access", "[ratmat]") {
    RatMat m = from_int_rows({{1, 2}, {3, 4}});
    CHECK(m.rows == 2);
    CHECK(m.cols == 2);
    CHECK(m.at(1, 0) == 3);
    CHECK_THROWS_AS(m.at(2, 0), domain_error);
    CHECK_THROWS_AS(from_int_rows({{1, 2}, {3}}), shape_error);

    CHECK(RatMat::identity(3)(2, 2) == 1);
    CHECK(is_zero(RatMat::zero(2, 5)));
    CHECK(m == from_int_rows({{1, 2}, {3, 4}}));
    CHECK(!(m == from_int_rows({{1, 2}, {3, 5}})));
}

TEST_CASE("structural operations", "[ratmat]") {
    RatMat a = from_int_rows({{1, 2, 3}, {4, 5, 6}});
    RatMat b = from_int_rows({{7}, {8}});
    CHECK(transpose(a) == from_int_rows({{1, 4}, {2, 5}, {3, 6}}));
    CHECK(hcat(a, b) == from_int_rows({{1, 2, 3, 7}, {4, 5, 6, 8}}));
    CHECK(vcat(a, a).rows == 4);
    CHECK_THROWS_AS(hcat(a, transpose(a)), shape_error);
    CHECK_THROWS_AS(vcat(a, b), shape_error);

    CHECK(blockdiag(RatMat::identity(2), from_int_rows({{5}})) ==
          from_int_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 5}}));

    CHECK(submatrix(a, {1}, {0, 2}) == from_int_rows({{4, 6}}));
    CHECK(column_of(a, 2) == from_int_rows({{3}, {6}}));
    CHECK(leading_columns(a, 2) == from_int_rows({{1, 2}, {4, 5}}));
    CHECK_THROWS_AS(submatrix(a, {2}, {0}), domain_error);

    CHECK(add(a, negate(a)) == RatMat::zero(2, 3));
    CHECK(sub(a, a) == RatMat::zero(2, 3));
    CHECK(scale(Rat(1) / 2, from_int_rows({{4}})) == from_rows({{Rat(2)}}));
}

TEST_CASE("matrix product", "[ratmat]") {
    RatMat a = from_int_rows({{1, 2}, {3, 4}});
    RatMat b = from_int_rows({{0, 1}, {1, 0}});
    CHECK(mul(a, b) == from_int_rows({{2, 1}, {4, 3}}));
    CHECK(mul(a, RatMat::identity(2)) == a);
    CHECK_THROWS_AS(mul(a, from_int_rows({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}})), shape_error);
}

TEST_CASE("determinant: direct values", "[ratmat][det]") {
    CHECK(det(from_int_rows({{1, 2}, {3, 4}})) == -2);
    CHECK(det(RatMat::identity(5)) == 1);
    CHECK(det(RatMat::zero(3, 3)) == 0);
    CHECK(det(RatMat(0, 0)) == 1);  // empty product convention
    CHECK(det(from_rows({{Rat(1) / 2, Rat(1) / 3}, {Rat(1) / 4, Rat(1) / 5}})) ==
          Rat(1) / 10 - Rat(1) / 12);
    CHECK_THROWS_AS(det(RatMat::zero(2, 3)), shape_error);
}

TEST_CASE("determinant agrees with cofactor oracle on random matrices", "[ratmat][det]") {
    Rng rng(101);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 6));
        RatMat m = (trial % 2 == 0) ? random_int_matrix(rng, n, n, 9)
                                    : random_rat_matrix(rng, n, n, 7);
        if (trial % 5 == 0 && n >= 2) {
            // force singularity: duplicate a row
            for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j);
        }
        CAPTURE(trial, n);
        REQUIRE(det(m) == oracle::oracle_det(m));
    }
}

TEST_CASE("determinant is multiplicative and transpose-invariant", "[ratmat][det]") {
    Rng rng(102);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 5));
        RatMat a = random_rat_matrix(rng, n, n, 6);
        RatMat b = random_int_matrix(rng, n, n, 6);
        REQUIRE(det(mul(a, b)) == det(a) * det(b));
        REQUIRE(det(transpose(a)) == det(a));
    }
}

TEST_CASE("rank: direct values and oracle agreement", "[ratmat][rank]") {
    CHECK(rank_of(from_int_rows({{1, 2, 3}, {2, 4, 6}})) == 1);
    CHECK(rank_of(RatMat::identity(4)) == 4);
    CHECK(rank_of(RatMat::zero(3, 7)) == 0);
    CHECK(rank_of(RatMat(0, 4)) == 0);

    Rng rng(103);
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t r = static_cast<std::size_t>(rng.uniform_int(1, 5));
        std::size_t c = static_cast<std::size_t>(rng.uniform_int(1, 6));
        RatMat m = random_rat_matrix(rng, r, c, 8);
        if (trial % 3 == 0) {
            // low-rank product to exercise rank-deficient rectangles
            std::size_t t = static_cast<std::size_t>(rng.uniform_int(1, 3));
            m = mul(random_int_matrix(rng, r, t, 5), random_int_matrix(rng, t, c, 5));
        }
        CAPTURE(trial, r, c);
        REQUIRE(rank_of(m) == oracle::oracle_rank(m));
    }
}

TEST_CASE("rref is a reduced echelon form with the expected pivots", "[ratmat][rref]") {
    RatMat m = from_int_rows({{0, 2, 4}, {1, 1, 1}, {1, 3, 5}});
    RrefResult red = rref(m);
    CHECK(red.pivot_cols == std::vector<std::size_t>{0, 1});
    CHECK(red.R == from_rows({{Rat(1), Rat(0), Rat(-1)}, {Rat(0), Rat(1), Rat(2)}, {Rat(0), Rat(0), Rat(0)}}));

    Rng rng(104);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t r = static_cast<std::size_t>(rng.uniform_int(1, 5));
        std::size_t c = static_cast<std::size_t>(rng.uniform_int(1, 5));
        RatMat a = random_rat_matrix(rng, r, c, 6);
        RrefResult red2 = rref(a);
        REQUIRE(red2.pivot_cols.size() == rank_of(a));
        REQUIRE(rref(red2.R).R == red2.R);  // idempotent
        // pivot columns carry unit vectors
        for (std::size_t t = 0; t < red2.pivot_cols.size(); ++t)
            for (std::size_t i = 0; i < r; ++i)
                REQUIRE(red2.R(i, red2.pivot_cols[t]) == (i == t ? 1 : 0));
    }
}

TEST_CASE("inverse and solve", "[ratmat][solve]") {
    RatMat a = from_int_rows({{2, 1}, {1, 1}});
    CHECK(mul(a, inverse(a)) == RatMat::identity(2));
    CHECK_THROWS_AS(inverse(from_int_rows({{1, 2}, {2, 4}})), invertibility_error);
    CHECK_THROWS_AS(inverse(RatMat::zero(2, 3)), shape_error);

    Rng rng(105);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 5));
        RatMat m = random_invertible_matrix(rng, n, 8);
        REQUIRE(mul(m, inverse(m)) == RatMat::identity(n));
        REQUIRE(mul(inverse(m), m) == RatMat::identity(n));

        // overdetermined consistent system with full column rank
        std::size_t extra = static_cast<std::size_t>(rng.uniform_int(0, 3));
        RatMat tall = vcat(m, random_int_matrix(rng, extra, n, 8));
        RatMat x_true = random_rat_matrix(rng, n, 2, 5);
        RatMat x = solve_full_col_rank(tall, mul(tall, x_true));
        REQUIRE(x == x_true);
    }

    // inconsistent overdetermined system
    RatMat tall = from_int_rows({{1, 0}, {0, 1}, {1, 1}});
    RatMat bad = from_int_rows({{0}, {0}, {1}});
    CHECK_THROWS_AS(solve_full_col_rank(tall, bad), domain_error);
    // rank-deficient coefficient matrix
    RatMat thin = from_int_rows({{1, 1}, {2, 2}, {3, 3}});
    CHECK_THROWS_AS(solve_full_col_rank(thin, RatMat::zero(3, 1)), rank_error);
    CHECK_THROWS_AS(solve_full_col_rank(thin, RatMat::zero(2, 1)), shape_error);
}

TEST_CASE("right inverse", "[ratmat][solve]") {
    RatMat wide = from_int_rows({{1, 2, 3}, {0, 1, 4}});
    RatMat r = right_inverse(wide);
    CHECK(r.rows == 3);
    CHECK(r.cols == 2);
    CHECK(mul(wide, r) == RatMat::identity(2));
    CHECK_THROWS_AS(right_inverse(from_int_rows({{1, 2}, {2, 4}})), rank_error);

    Rng rng(106);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t r0 = static_cast<std::size_t>(rng.uniform_int(1, 4));
        std::size_t c0 = r0 + static_cast<std::size_t>(rng.uniform_int(0, 3));
        RatMat m = random_int_matrix(rng, r0, c0, 6);
        if (rank_of(m) < r0) continue;
        REQUIRE(mul(m, right_inverse(m)) == RatMat::identity(r0));
    }
}

TEST_CASE("kernel basis", "[ratmat][kernel]") {
    CHECK(kernel_basis(from_int_rows({{1, 1}})) == from_int_rows({{1}, {-1}}));
    CHECK(kernel_basis(RatMat::identity(3)).cols == 0);

    Rng rng(107);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = static_cast<std::size_t>(rng.uniform_int(1, 5));
        std::size_t c = static_cast<std::size_t>(rng.uniform_int(1, 6));
        RatMat m = random_rat_matrix(rng, r, c, 6);
        RatMat k = kernel_basis(m);
        CAPTURE(trial, r, c);
        REQUIRE(k.rows == c);
        REQUIRE(k.cols == c - rank_of(m));  // rank–nullity
        REQUIRE(is_zero(mul(m, k)));
        if (k.cols > 0) REQUIRE(rank_of(k) == k.cols);
        // canonical: re-canonicalizing changes nothing
        REQUIRE(subspace_from_generators(k).basis == k);
    }
}

TEST_CASE("subspace canonicalization and equality", "[ratmat][subspace]") {
    // same plane from different generators (scaled, reordered, redundant)
    RatMat g1 = from_int_rows({{1, 0}, {0, 1}, {1, 1}});
    RatMat g2 = from_int_rows({{0, 3, 3}, {2, 0, 2}, {2, 3, 5}});
    Subspace s1 = subspace_from_generators(g1);
    Subspace s2 = subspace_from_generators(g2);
    CHECK(s1 == s2);
    CHECK(s1.dim() == 2);
    CHECK(oracle::oracle_same_span(s1.basis, g1));

    Subspace zero_space = subspace_from_generators(RatMat::zero(4, 2));
    CHECK(zero_space.dim() == 0);
    CHECK(zero_space.ambient_dim == 4);

    Rng rng(108);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 6));
        std::size_t g = static_cast<std::size_t>(rng.uniform_int(1, 4));
        RatMat gens = random_int_matrix(rng, n, g, 5);
        Subspace s = subspace_from_generators(gens);
        REQUIRE(s.dim() == rank_of(gens));
        REQUIRE(oracle::oracle_same_span(s.basis, gens) == (s.dim() > 0 || is_zero(gens)));
        // mixing generators by an invertible matrix does not change the span
        RatMat mix = random_invertible_matrix(rng, g, 4);
        REQUIRE(subspace_from_generators(mul(gens, mix)) == s);
    }
}

TEST_CASE("column space intersection", "[ratmat][subspace]") {
    RatMat u = from_int_rows({{1, 0}, {0, 1}, {0, 0}});  // span{e1, e2}
    RatMat v = from_int_rows({{0, 0}, {1, 0}, {0, 1}});  // span{e2, e3}
    Subspace w = columnspace_intersection(u, v);
    CHECK(w.dim() == 1);
    CHECK(w.basis == from_int_rows({{0}, {1}, {0}}));

    CHECK(columnspace_intersection(u, RatMat::zero(3, 0)).dim() == 0);
    CHECK_THROWS_AS(columnspace_intersection(u, RatMat::zero(4, 1)), shape_error);

    Rng rng(109);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = static_cast<std::size_t>(rng.uniform_int(1, 6));
        RatMat a = random_int_matrix(rng, n, static_cast<std::size_t>(rng.uniform_int(1, 4)), 5);
        RatMat b = random_int_matrix(rng, n, static_cast<std::size_t>(rng.uniform_int(1, 4)), 5);
        Subspace w2 = columnspace_intersection(a, b);
        CAPTURE(trial, n);
        // contained in both spans
        if (w2.dim() > 0) {
            REQUIRE(oracle::oracle_rank(hcat(a, w2.basis)) == oracle::oracle_rank(a));
            REQUIRE(oracle::oracle_rank(hcat(b, w2.basis)) == oracle::oracle_rank(b));
        }
        // dim(U) + dim(V) = dim(U+V) + dim(U∩V)
        REQUIRE(oracle::oracle_rank(a) + oracle::oracle_rank(b) ==
                oracle::oracle_rank(hcat(a, b)) + w2.dim());
    }
}

TEST_CASE("deterministic rng respects seeds and bounds", "[rng]") {
    Rng r1(42), r2(42), r3(43);
    std::vector<int> s1, s2, s3;
    for (int t = 0; t < 16; ++t) {
        s1.push_back(r1.uniform_int(-5, 5));
        s2.push_back(r2.uniform_int(-5, 5));
        s3.push_back(r3.uniform_int(-5, 5));
        REQUIRE(s1.back() >= -5);
        REQUIRE(s1.back() <= 5);
    }
    CHECK(s1 == s2);
    CHECK(s1 != s3);
    CHECK_THROWS_AS(r1.uniform_int(2, 1), domain_error);

    Rng rng(110);
    RatMat inv = random_invertible_matrix(rng, 4, 5);
    CHECK(det(inv) != 0);
}
