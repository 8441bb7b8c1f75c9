/**
 * @file test_moduli.cpp
 * @brief The τ representative, the moduli map Ψ, the block-group action with
 *        its equivariance and stabilizer, Ψ-preimages, and the excess
 *        stratification, checked against the reference worked example, an
 *        independent annihilator oracle, and seeded random pairs.
 */
#include <catch2/catch_amalgamated.hpp>

#include "bgt/canon.hpp"
#include "bgt/gtensor.hpp"
#include "bgt/moduli.hpp"
#include "bgt/reference_example.hpp"
#include "bgt/rng.hpp"
#include "oracles.hpp"

using namespace bgt;

namespace {

/// Independent oracle for (C1 + C2)^⊥: the kernel of the transposed joint
/// center matrix, computed without going through τ at all.
Subspace annihilator_of_centers(const ProjectionPair& p) {
    const RatMat joint = hcat(p.C1.basis, p.C2.basis);
    return subspace_from_generators(kernel_basis(transpose(joint)));
}

/// [I_i; 0] with `rows` total rows.
RatMat identity_block(std::size_t rows, std::size_t i) {
    return vcat(RatMat::identity(i), RatMat::zero(rows - i, i));
}

CalGElement random_element(Rng& rng, const ProjectionPair& p, int bound = 5) {
    const auto i = static_cast<std::size_t>(p.i);
    return CalGElement{random_invertible_matrix(rng, i, bound),
                       random_invertible_matrix(rng, p.A.rows - i, bound),
                       random_invertible_matrix(rng, p.B.rows - i, bound)};
}

}  // namespace

TEST_CASE("tau of the canonical pair is the identity block pair", "[moduli]") {
    const ProjectionPair pc = canonical_pair(5, 4, 3);
    const TauPoint tau = tau_from_pair(pc);
    CHECK(tau.i == 3);
    CHECK(tau.tau1 == identity_block(5, 3));
    CHECK(tau.tau2 == identity_block(4, 3));

    // degenerate overlap dimension i = 1
    const ProjectionPair p1 = canonical_pair(4, 2, 2);
    const TauPoint tau1 = tau_from_pair(p1);
    CHECK(tau1.tau1 == identity_block(3, 1));
    CHECK(tau1.tau2 == identity_block(3, 1));
}

TEST_CASE("tau of the reference pair spans the displayed columns", "[moduli]") {
    const ProjectionPair p = refex::pair();
    const TauPoint tau = tau_from_pair(p);
    CHECK(tau.i == 3);

    // exact defining identity and full rank
    CHECK(mul(transpose(p.A), tau.tau1) == mul(transpose(p.B), tau.tau2));
    CHECK(rank_of(vcat(tau.tau1, tau.tau2)) == 3);

    // the displayed tau columns (the leading columns of K1 and K2) span the
    // same three-dimensional space
    const RatMat displayed = vcat(refex::tau1_transposed(), refex::tau2_transposed());
    CHECK(subspace_from_generators(displayed) ==
          subspace_from_generators(vcat(tau.tau1, tau.tau2)));
    CHECK(refex::tau1_transposed() == leading_columns(refex::witness_k1(), 3));
    CHECK(refex::tau2_transposed() == leading_columns(refex::witness_k2(), 3));
}

TEST_CASE("tau pairing identity on random pairs", "[moduli]") {
    const std::vector<std::array<int, 3>> dims = {
        {3, 2, 2}, {4, 3, 2}, {5, 4, 3}, {5, 3, 3}, {6, 5, 4}, {7, 5, 4}};
    std::uint64_t seed = kDefaultSeed;
    for (const auto& d : dims) {
        for (int rep = 0; rep < 4; ++rep) {
            const ProjectionPair p = random_pair(d[0], d[1], d[2], ++seed);
            const TauPoint tau = tau_from_pair(p);
            REQUIRE(tau.tau1.cols == static_cast<std::size_t>(p.i));
            REQUIRE(mul(transpose(p.A), tau.tau1) == mul(transpose(p.B), tau.tau2));
            REQUIRE(rank_of(vcat(tau.tau1, tau.tau2)) == static_cast<std::size_t>(p.i));
        }
    }
}

TEST_CASE("psi equals the annihilator of the joint centers", "[moduli]") {
    SECTION("canonical pair: the leading coordinate plane") {
        const ProjectionPair pc = canonical_pair(5, 4, 3);
        const Subspace plane = psi(pc);
        CHECK(plane.ambient_dim == 6);
        CHECK(plane.basis == identity_block(6, 3));
        CHECK(plane == annihilator_of_centers(pc));
    }

    SECTION("reference pair") {
        const ProjectionPair p = refex::pair();
        const Subspace plane = psi(p);
        CHECK(plane.dim() == 3);
        CHECK(plane == annihilator_of_centers(p));
        // both tau routes land in the same plane
        const TauPoint tau = tau_from_pair(p);
        CHECK(subspace_from_generators(mul(transpose(p.B), tau.tau2)) == plane);
    }

    SECTION("random pairs across configurations") {
        const std::vector<std::array<int, 3>> dims = {
            {3, 2, 2}, {4, 3, 2}, {5, 4, 3}, {6, 4, 4}, {7, 6, 5}};
        std::uint64_t seed = kDefaultSeed + 100;
        for (const auto& d : dims) {
            for (int rep = 0; rep < 4; ++rep) {
                const ProjectionPair p = random_pair(d[0], d[1], d[2], ++seed);
                const Subspace plane = psi(p);
                REQUIRE(plane.dim() == static_cast<std::size_t>(p.i));
                REQUIRE(plane == annihilator_of_centers(p));
                // every column is annihilated by both centers
                const RatMat joint = hcat(p.C1.basis, p.C2.basis);
                REQUIRE(is_zero(mul(transpose(joint), plane.basis)));
            }
        }
    }
}

TEST_CASE("block action: validity, fixed centers, equivariance", "[moduli]") {
    const ProjectionPair p = refex::pair();

    SECTION("identity element acts trivially") {
        const CalGElement id{RatMat::identity(3), RatMat::identity(2), RatMat::identity(1)};
        const ProjectionPair q = act_calG(p, id);
        CHECK(q.A == p.A);
        CHECK(q.B == p.B);
        CHECK(check_equivariance(p, id));
    }

    SECTION("random elements keep the centers and the plane") {
        Rng rng(kDefaultSeed + 200);
        for (int rep = 0; rep < 10; ++rep) {
            const CalGElement g = random_element(rng, p);
            const ProjectionPair q = act_calG(p, g);
            REQUIRE(q.C1 == p.C1);
            REQUIRE(q.C2 == p.C2);
            REQUIRE(check_equivariance(p, g));
        }
    }

    SECTION("the induced tau transforms by the blocks") {
        Rng rng(kDefaultSeed + 300);
        const CalGElement g = random_element(rng, p);
        const ProjectionPair q = act_calG(p, g);
        const TauPoint tau = tau_from_pair(p);
        const RatMat delta1 = blockdiag(g.H, g.V1);
        const RatMat delta2 = blockdiag(g.H, g.V2);
        // Δ_j · τ_j is again a basis of the transformed kernel
        const RatMat moved = vcat(mul(delta1, tau.tau1), mul(delta2, tau.tau2));
        const TauPoint tau_q = tau_from_pair(q);
        CHECK(subspace_from_generators(moved) ==
              subspace_from_generators(vcat(tau_q.tau1, tau_q.tau2)));
    }

    SECTION("equivariance on random pairs across configurations") {
        const std::vector<std::array<int, 3>> dims = {{4, 3, 2}, {5, 4, 3}, {6, 5, 4}};
        std::uint64_t seed = kDefaultSeed + 400;
        for (const auto& d : dims) {
            const ProjectionPair pr = random_pair(d[0], d[1], d[2], ++seed);
            Rng rng(seed * 7 + 1);
            for (int rep = 0; rep < 8; ++rep)
                REQUIRE(check_equivariance(pr, random_element(rng, pr)));
        }
    }

    SECTION("shape and invertibility validation") {
        CHECK_THROWS_AS(
            act_calG(p, CalGElement{RatMat::identity(2), RatMat::identity(2), RatMat::identity(1)}),
            shape_error);
        CHECK_THROWS_AS(
            act_calG(p, CalGElement{RatMat::identity(3), RatMat::identity(1), RatMat::identity(1)}),
            shape_error);
        CHECK_THROWS_AS(
            act_calG(p, CalGElement{RatMat::zero(3, 3), RatMat::identity(2), RatMat::identity(1)}),
            invertibility_error);
    }
}

TEST_CASE("stabilizer membership and the tensor dichotomy", "[moduli]") {
    SECTION("predicate") {
        CHECK(stabilizer_member(
            CalGElement{scale(3, RatMat::identity(3)), RatMat::identity(2), RatMat::identity(1)}));
        CHECK(stabilizer_member(CalGElement{scale(Rat(-2) / 7, RatMat::identity(4)), RatMat(), RatMat()}));
        CHECK(stabilizer_member(CalGElement{RatMat::identity(1), RatMat(), RatMat()}));
        CHECK_FALSE(stabilizer_member(
            CalGElement{RatMat::zero(3, 3), RatMat::identity(2), RatMat::identity(1)}));
        RatMat off = RatMat::identity(3);
        off(0, 1) = 1;
        CHECK_FALSE(stabilizer_member(CalGElement{off, RatMat::identity(2), RatMat::identity(1)}));
        RatMat diag = RatMat::identity(3);
        diag(1, 1) = 2;  // diagonal but not scalar
        CHECK_FALSE(stabilizer_member(CalGElement{diag, RatMat::identity(2), RatMat::identity(1)}));
    }

    SECTION("scalar H fixes the canonical tensor up to one scalar") {
        const ProjectionPair pc = canonical_pair(5, 4, 3);
        const Profile pr = make_profile(5, 4, 3, 3, 3);
        const RatMat fc = build_tensor(pc, pr).F;
        Rng rng(kDefaultSeed + 500);
        for (int rep = 0; rep < 6; ++rep) {
            const CalGElement g{scale(random_nonzero_rat(rng, 5), RatMat::identity(3)),
                                random_invertible_matrix(rng, 2, 5),
                                random_invertible_matrix(rng, 1, 5)};
            REQUIRE(stabilizer_member(g));
            const RatMat moved = build_tensor(act_calG(pc, g), pr).F;
            REQUIRE(tensors_proportional(moved, fc));
        }
    }

    SECTION("non-scalar H moves the marked tau point") {
        // The action's natural habitat is the marked data (τ1, τ2) up to one
        // scalar per factor: an element fixes the canonical point exactly
        // when Δ_j · τ_{j,c} is proportional to τ_{j,c} for both j, which
        // happens exactly for scalar H.
        const ProjectionPair pc = canonical_pair(5, 4, 3);
        const TauPoint tc = tau_from_pair(pc);
        Rng rng(kDefaultSeed + 600);
        for (int rep = 0; rep < 6; ++rep) {
            const CalGElement g = random_element(rng, pc);
            if (stabilizer_member(g)) continue;  // astronomically unlikely draw
            const bool fixed1 = tensors_proportional(mul(blockdiag(g.H, g.V1), tc.tau1), tc.tau1);
            const bool fixed2 = tensors_proportional(mul(blockdiag(g.H, g.V2), tc.tau2), tc.tau2);
            REQUIRE_FALSE((fixed1 && fixed2));
        }

        // a concrete witness: one elementary off-diagonal entry suffices
        RatMat shear = RatMat::identity(3);
        shear(0, 1) = 1;
        const CalGElement g{shear, RatMat::identity(2), RatMat::identity(1)};
        CHECK_FALSE(stabilizer_member(g));
        CHECK_FALSE(tensors_proportional(mul(blockdiag(g.H, g.V1), tc.tau1), tc.tau1));
    }

    SECTION("the canonical tensor line itself is fixed by the whole group") {
        // Because the canonical tensor is supported entirely in the leading
        // i-block, where the wedge pairing is det-equivariant, EVERY block
        // element rescales it: Λ^{s2+1}(Δ2) · F_c · Λ^{s1+1}(Δ1)^T =
        // det(H) · F_c.  The stabilizer dichotomy is therefore a statement
        // about marked τ points, not about tensor lines — scalar H is what
        // fixes the marked data, while the line is insensitive to H.
        const ProjectionPair pc = canonical_pair(5, 4, 3);
        const Profile pr = make_profile(5, 4, 3, 3, 3);
        const RatMat fc = build_tensor(pc, pr).F;
        Rng rng(kDefaultSeed + 650);
        for (int rep = 0; rep < 4; ++rep) {
            const CalGElement g = random_element(rng, pc);
            REQUIRE(tensors_proportional(build_tensor(act_calG(pc, g), pr).F, fc));
        }
        RatMat shear = RatMat::identity(3);
        shear(0, 1) = 1;
        const CalGElement g{shear, RatMat::identity(2), RatMat::identity(1)};
        CHECK(tensors_proportional(build_tensor(act_calG(pc, g), pr).F, fc));
    }
}

TEST_CASE("preimage of a plane inverts psi", "[moduli]") {
    SECTION("the leading coordinate plane") {
        const Subspace w{6, identity_block(6, 3)};
        const ProjectionPair p = preimage_of_plane(w, 4, 3, kDefaultSeed);
        CHECK(psi(p) == w);
    }

    SECTION("round trip on random planes across configurations") {
        const std::vector<std::array<int, 3>> dims = {{4, 3, 2}, {5, 4, 3}, {6, 4, 3}, {6, 5, 4}};
        std::uint64_t seed = kDefaultSeed + 700;
        for (const auto& d : dims) {
            const int i = d[1] + d[2] - d[0] + 1;
            Rng rng(++seed);
            for (int rep = 0; rep < 4; ++rep) {
                // a random rational i-plane, resampled until full-dimensional
                Subspace w{0, RatMat()};
                do {
                    w = subspace_from_generators(random_int_matrix(
                        rng, static_cast<std::size_t>(d[0] + 1), static_cast<std::size_t>(i), 9));
                } while (w.dim() != static_cast<std::size_t>(i));
                const ProjectionPair p = preimage_of_plane(w, d[1], d[2], seed * 13 + rep);
                REQUIRE(psi(p) == w);
            }
        }
    }

    SECTION("fibers are positive-dimensional: different preimages, same plane") {
        const ProjectionPair p0 = random_pair(5, 4, 3, kDefaultSeed + 800);
        const Subspace w = psi(p0);
        const ProjectionPair p1 = preimage_of_plane(w, 4, 3, kDefaultSeed + 801);
        const ProjectionPair p2 = preimage_of_plane(w, 4, 3, kDefaultSeed + 802);
        CHECK(psi(p1) == w);
        CHECK(psi(p2) == w);
        CHECK(p1.A != p2.A);  // distinct members of the fiber
    }

    SECTION("determinism and validation") {
        const Subspace w{6, identity_block(6, 3)};
        const ProjectionPair pa = preimage_of_plane(w, 4, 3, 42);
        const ProjectionPair pb = preimage_of_plane(w, 4, 3, 42);
        CHECK(pa.A == pb.A);
        CHECK(pa.B == pb.B);

        const Subspace w2{6, identity_block(6, 2)};  // wrong dimension for (5,4,3)
        CHECK_THROWS_AS(preimage_of_plane(w2, 4, 3, 1), shape_error);
        CHECK_THROWS_AS(preimage_of_plane(w, 4, 5, 1), shape_error);  // h2 >= k
    }
}

TEST_CASE("excess dimension stratifies tau points", "[moduli]") {
    SECTION("camera-derived tau is always exact") {
        CHECK(excess_dimension(canonical_pair(5, 4, 3), tau_from_pair(canonical_pair(5, 4, 3))) == 0);
        CHECK(excess_dimension(refex::pair(), tau_from_pair(refex::pair())) == 0);
        std::uint64_t seed = kDefaultSeed + 900;
        for (int rep = 0; rep < 6; ++rep) {
            const ProjectionPair p = random_pair(5, 4, 3, ++seed);
            REQUIRE(excess_dimension(p, tau_from_pair(p)) == 0);
        }
    }

    SECTION("tau inside the opposite-sign kernel has full excess") {
        const ProjectionPair pc = canonical_pair(5, 4, 3);
        const TauPoint bad{3, identity_block(5, 3), negate(identity_block(4, 3))};
        CHECK(excess_dimension(pc, bad) == 3);
    }

    SECTION("mixed tau has intermediate excess") {
        const ProjectionPair pc = canonical_pair(5, 4, 3);
        // one column from each kernel: (e1; e1) is exact, (e2; -e2) is not
        RatMat t1 = RatMat::zero(5, 2);
        t1(0, 0) = 1;
        t1(1, 1) = 1;
        RatMat t2 = RatMat::zero(4, 2);
        t2(0, 0) = 1;
        t2(1, 1) = -1;
        CHECK(excess_dimension(pc, TauPoint{2, t1, t2}) == 1);
    }

    SECTION("shape validation") {
        const ProjectionPair pc = canonical_pair(5, 4, 3);
        CHECK_THROWS_AS(excess_dimension(pc, TauPoint{3, identity_block(4, 3), identity_block(4, 3)}),
                        shape_error);
        CHECK_THROWS_AS(excess_dimension(pc, TauPoint{3, identity_block(5, 3), identity_block(4, 2)}),
                        shape_error);
    }
}
