/**
 * @file verify.hpp
 * @brief Seeded, deterministic verification suites over every module's core
 *        invariants: the rank theorem, determinant-oracle equivalence,
 *        canonical-form reduction and the transformation law, decomposition
 *        reassembly, Hodge equivariance, Ψ-equivariance with an independent
 *        annihilator oracle, the stabilizer dichotomy, the scaling-orbit
 *        law, and the Jacobian dimension count.
 *
 * Each suite draws its samples from a seeded generator, performs exact
 * rational checks only, and returns a SuiteReport with the number of checks
 * performed and failed (plus a note describing the first failure).  The
 * same functions back both the command-line `verify` command and the
 * acceptance harness, so the two surfaces can never drift apart.
 */
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "bgt/camera.hpp"
#include "bgt/canon.hpp"
#include "bgt/exterior.hpp"
#include "bgt/gtensor.hpp"
#include "bgt/jacobian.hpp"
#include "bgt/moduli.hpp"
#include "bgt/ratmat.hpp"
#include "bgt/rng.hpp"

namespace bgt {

/// Outcome of one verification suite.
struct SuiteReport {
    std::string name;
    std::size_t checked{0};
    std::size_t failed{0};
    std::string note;  ///< first failure context, empty when all passed

    [[nodiscard]] bool passed() const { return failed == 0; }
};

namespace detail {

inline void record_failure(SuiteReport& rep, const std::string& what) {
    ++rep.failed;
    if (rep.note.empty()) rep.note = what;
}

/// x^e for e ≥ 0.
[[nodiscard]] inline Rat rat_pow(const Rat& x, int e) {
    Rat out = 1;
    for (int t = 0; t < e; ++t) out *= x;
    return out;
}

/// The dimension triples exercised by the cross-module suites.
[[nodiscard]] inline const std::vector<std::array<int, 3>>& verify_configs() {
    static const std::vector<std::array<int, 3>> configs = {
        {3, 2, 2}, {4, 3, 2}, {5, 4, 3}, {6, 4, 4}};
    return configs;
}

/// A random subspace of Q^n of exact dimension d (resampled on short rank).
[[nodiscard]] inline Subspace random_subspace(Rng& rng, std::size_t n, std::size_t d, int bound) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Subspace s = subspace_from_generators(random_int_matrix(rng, n, d, bound));
        if (s.dim() == d) return s;
    }
    throw generation_error("random_subspace: retry budget exhausted");
}

[[nodiscard]] inline std::string config_tag(int k, int h1, int h2) {
    std::ostringstream os;
    os << "(" << k << "," << h1 << "," << h2 << ")";
    return os.str();
}

}  // namespace detail

// ===========================================================================
// Rank theorem
// ===========================================================================

/// rank F = binom(i, s1+1) for every admissible (k ≤ max_k, h1, h2, profile)
/// on seeded random pairs.
[[nodiscard]] inline SuiteReport verify_rank_theorem(int max_k, int pairs_per_config,
                                                     std::uint64_t seed) {
    SuiteReport rep{"rank-theorem", 0, 0, ""};
    Rng rng(seed);
    for (int k = 3; k <= max_k; ++k)
        for (int h1 = 1; h1 < k; ++h1)
            for (int h2 = 1; h2 < k; ++h2) {
                if (h1 + h2 - k + 1 < 2) continue;  // no profiles below i = 2
                const std::vector<Profile> profiles = all_profiles(k, h1, h2);
                for (int rep_idx = 0; rep_idx < pairs_per_config; ++rep_idx) {
                    const ProjectionPair p = random_pair(k, h1, h2, rng.eng());
                    for (const Profile& pr : profiles) {
                        ++rep.checked;
                        const GrassmannTensor t = build_tensor(p, pr);
                        if (rank_of(t.F) != expected_rank(pr))
                            detail::record_failure(
                                rep, "rank mismatch at " + detail::config_tag(k, h1, h2));
                    }
                }
            }
    return rep;
}

// ===========================================================================
// Determinant-oracle equivalence
// ===========================================================================

/// evaluate(T, S1, S2) = c · system_determinant with one constant c ∈ {±1}
/// per configuration, plus exact vanishing on constructed corresponding
/// subspaces.
[[nodiscard]] inline SuiteReport verify_oracle_equivalence(int trials, std::uint64_t seed) {
    SuiteReport rep{"oracle-equivalence", 0, 0, ""};
    Rng rng(seed);
    for (const auto& d : detail::verify_configs()) {
        const int k = d[0], h1 = d[1], h2 = d[2];
        for (const Profile& pr : all_profiles(k, h1, h2)) {
            const ProjectionPair p = random_pair(k, h1, h2, rng.eng());
            const GrassmannTensor t = build_tensor(p, pr);
            const auto n1 = static_cast<std::size_t>(h1 + 1);
            const auto n2 = static_cast<std::size_t>(h2 + 1);
            const auto d1 = static_cast<std::size_t>(pr.s1 + 1);
            const auto d2 = static_cast<std::size_t>(pr.s2 + 1);

            Rat c = 0;  // calibrated on the first sample with nonzero values
            for (int s = 0; s < trials; ++s) {
                const Subspace s1 = detail::random_subspace(rng, n1, d1, 7);
                const Subspace s2 = detail::random_subspace(rng, n2, d2, 7);
                const Rat lhs = evaluate(t, s1, s2);
                const Rat rhs = system_determinant(p, s1, s2);
                ++rep.checked;
                if ((lhs == 0) != (rhs == 0)) {
                    detail::record_failure(rep,
                                           "zero sets differ at " + detail::config_tag(k, h1, h2));
                    continue;
                }
                if (lhs == 0) continue;
                if (c == 0) {
                    c = lhs / rhs;
                    if (c != 1 && c != -1) {
                        detail::record_failure(
                            rep, "calibration not ±1 at " + detail::config_tag(k, h1, h2));
                        continue;
                    }
                }
                if (lhs != c * rhs)
                    detail::record_failure(
                        rep, "oracle factor drifts at " + detail::config_tag(k, h1, h2));
            }

            // corresponding subspaces through the image of a common point
            int built = 0;
            for (int attempt = 0; attempt < 8 * trials && built < trials; ++attempt) {
                const RatMat x = random_int_matrix(rng, static_cast<std::size_t>(k + 1), 1, 7);
                const RatMat ax = mul(p.A, x);
                const RatMat bx = mul(p.B, x);
                if (is_zero(ax) || is_zero(bx)) continue;
                const Subspace s1 = subspace_from_generators(
                    d1 > 1 ? hcat(ax, random_int_matrix(rng, n1, d1 - 1, 7)) : ax);
                const Subspace s2 = subspace_from_generators(
                    d2 > 1 ? hcat(bx, random_int_matrix(rng, n2, d2 - 1, 7)) : bx);
                if (s1.dim() != d1 || s2.dim() != d2) continue;
                ++built;
                ++rep.checked;
                if (evaluate(t, s1, s2) != 0 || !corresponding_subspaces(p, s1, s2))
                    detail::record_failure(
                        rep, "corresponding pair not annihilated at " + detail::config_tag(k, h1, h2));
            }
        }
    }
    return rep;
}

// ===========================================================================
// Canonical form and the transformation law
// ===========================================================================

/// reduce_to_canonical yields a valid normalized witness, and transforming
/// the canonical tensor through it reproduces build_tensor exactly.
[[nodiscard]] inline SuiteReport verify_canonical_form(int trials, std::uint64_t seed) {
    SuiteReport rep{"canonical-form", 0, 0, ""};
    Rng rng(seed);
    for (const auto& d : detail::verify_configs()) {
        const int k = d[0], h1 = d[1], h2 = d[2];
        const RatMat block = canonical_block_matrix(k, h1, h2);
        for (int s = 0; s < trials; ++s) {
            const ProjectionPair p = random_pair(k, h1, h2, rng.eng());
            const CanonicalReduction red = reduce_to_canonical(p);
            const RatMat joint = hcat(transpose(p.A), transpose(p.B));
            ++rep.checked;
            if (mul(mul(red.G, joint), blockdiag(red.K1, red.K2)) != block ||
                det(red.K1) != 1 || det(red.K2) != 1 || red.detG != det(red.G) ||
                red.canonical != block) {
                detail::record_failure(rep, "witness identity fails at " +
                                                detail::config_tag(k, h1, h2));
                continue;
            }
            for (const Profile& pr : all_profiles(k, h1, h2)) {
                ++rep.checked;
                const GrassmannTensor fc = build_tensor(canonical_pair(k, h1, h2), pr);
                const GrassmannTensor ft = transform_tensor(fc, red.K1, red.K2, red.detG);
                if (ft.F != build_tensor(p, pr).F)
                    detail::record_failure(rep, "transformation law fails at " +
                                                    detail::config_tag(k, h1, h2));
            }
        }
    }
    return rep;
}

// ===========================================================================
// Decomposition reassembly
// ===========================================================================

/// The rank-one decomposition reassembles the tensor exactly with
/// term count = expected rank = rank of the reassembled matrix.
[[nodiscard]] inline SuiteReport verify_decomposition(int trials, std::uint64_t seed) {
    SuiteReport rep{"decomposition", 0, 0, ""};
    Rng rng(seed);
    for (const auto& d : detail::verify_configs()) {
        const int k = d[0], h1 = d[1], h2 = d[2];
        for (int s = 0; s < trials; ++s) {
            const ProjectionPair p = random_pair(k, h1, h2, rng.eng());
            for (const Profile& pr : all_profiles(k, h1, h2)) {
                ++rep.checked;
                const GrassmannTensor t = build_tensor(p, pr);
                const Decomposition dec = decompose_tensor(p, pr);
                const RatMat back = reassemble(dec);
                if (back != t.F || dec.terms.size() != expected_rank(pr) ||
                    rank_of(back) != dec.terms.size())
                    detail::record_failure(
                        rep, "decomposition fails at " + detail::config_tag(k, h1, h2));
            }
        }
    }
    return rep;
}

// ===========================================================================
// Hodge equivariance
// ===========================================================================

/// compound(Γ, r) · hodge_tensor(i, r) · compound(Γ, i−r)^T =
/// det(Γ) · hodge_tensor(i, r) for random integer Γ (not necessarily
/// invertible: the identity is polynomial).
[[nodiscard]] inline SuiteReport verify_hodge(int max_i, int trials, std::uint64_t seed) {
    SuiteReport rep{"hodge-equivariance", 0, 0, ""};
    Rng rng(seed);
    for (int i = 2; i <= max_i; ++i)
        for (int r = 0; r <= i; ++r) {
            const RatMat h = hodge_tensor(i, r);
            for (int s = 0; s < trials; ++s) {
                const RatMat g = random_int_matrix(rng, static_cast<std::size_t>(i),
                                                   static_cast<std::size_t>(i), 9);
                ++rep.checked;
                const RatMat lhs = mul(mul(compound(g, static_cast<std::size_t>(r)), h),
                                       transpose(compound(g, static_cast<std::size_t>(i - r))));
                if (lhs != scale(det(g), h)) {
                    std::ostringstream os;
                    os << "equivariance fails at i=" << i << ", r=" << r;
                    detail::record_failure(rep, os.str());
                }
            }
        }
    return rep;
}

// ===========================================================================
// Ψ-equivariance and the annihilator identity
// ===========================================================================

/// Ψ(g·p) = Ψ(p), and Ψ(p) equals the annihilator (C1+C2)^⊥ computed
/// independently from the centers.
[[nodiscard]] inline SuiteReport verify_psi(int trials, std::uint64_t seed) {
    SuiteReport rep{"psi-equivariance", 0, 0, ""};
    Rng rng(seed);
    for (const auto& d : detail::verify_configs()) {
        const int k = d[0], h1 = d[1], h2 = d[2];
        const ProjectionPair p = random_pair(k, h1, h2, rng.eng());
        const Subspace plane = psi(p);
        const Subspace annihilator = subspace_from_generators(
            kernel_basis(transpose(hcat(p.C1.basis, p.C2.basis))));
        ++rep.checked;
        if (plane != annihilator || plane.dim() != static_cast<std::size_t>(p.i)) {
            detail::record_failure(rep,
                                   "annihilator identity fails at " + detail::config_tag(k, h1, h2));
            continue;
        }
        const auto i = static_cast<std::size_t>(p.i);
        for (int s = 0; s < trials; ++s) {
            const CalGElement g{random_invertible_matrix(rng, i, 5),
                                random_invertible_matrix(rng, p.A.rows - i, 5),
                                random_invertible_matrix(rng, p.B.rows - i, 5)};
            ++rep.checked;
            if (!check_equivariance(p, g))
                detail::record_failure(rep,
                                       "equivariance fails at " + detail::config_tag(k, h1, h2));
        }
    }
    return rep;
}

// ===========================================================================
// Stabilizer dichotomy
// ===========================================================================

/// At the canonical pair: scalar-H elements fix the marked τ point (each
/// Δ_j·τ_j proportional to τ_j) and keep the tensor on its line; non-scalar
/// H moves the marked τ point.  (The tensor line itself is insensitive to
/// H by det-equivariance, so the dichotomy lives on the marked data.)
[[nodiscard]] inline SuiteReport verify_stabilizer(int samples, std::uint64_t seed) {
    SuiteReport rep{"stabilizer-dichotomy", 0, 0, ""};
    Rng rng(seed);
    const ProjectionPair pc = canonical_pair(5, 4, 3);
    const Profile pr = make_profile(pc, 3, 3);
    const RatMat fc = build_tensor(pc, pr).F;
    const TauPoint tc = tau_from_pair(pc);
    for (int s = 0; s < samples; ++s) {
        const bool scalar_h = (s % 2 == 0);
        RatMat h = scalar_h ? scale(random_nonzero_rat(rng, 5), RatMat::identity(3))
                            : random_invertible_matrix(rng, 3, 5);
        if (!scalar_h && stabilizer_member(CalGElement{h, RatMat(), RatMat()}))
            h(0, 1) = 1;  // nudge an astronomically unlikely scalar draw
        const CalGElement g{h, random_invertible_matrix(rng, 2, 5),
                            random_invertible_matrix(rng, 1, 5)};
        const bool fixed1 = tensors_proportional(mul(blockdiag(g.H, g.V1), tc.tau1), tc.tau1);
        const bool fixed2 = tensors_proportional(mul(blockdiag(g.H, g.V2), tc.tau2), tc.tau2);
        ++rep.checked;
        if (scalar_h) {
            if (!stabilizer_member(g) || !fixed1 || !fixed2 ||
                !tensors_proportional(build_tensor(act_calG(pc, g), pr).F, fc))
                detail::record_failure(rep, "scalar-H element fails to fix the point");
        } else {
            if (stabilizer_member(g) || (fixed1 && fixed2))
                detail::record_failure(rep, "non-scalar H fails to move the marked point");
        }
    }
    return rep;
}

// ===========================================================================
// Scaling orbit
// ===========================================================================

/// build_tensor(zλ·A, zμ·B) = z^{k+1} λ^{α1} μ^{α2} · build_tensor(A, B).
[[nodiscard]] inline SuiteReport verify_scaling(int trials, std::uint64_t seed) {
    SuiteReport rep{"scaling-orbit", 0, 0, ""};
    Rng rng(seed);
    for (const auto& d : detail::verify_configs()) {
        const int k = d[0], h1 = d[1], h2 = d[2];
        const ProjectionPair p = random_pair(k, h1, h2, rng.eng());
        for (const Profile& pr : all_profiles(k, h1, h2)) {
            const RatMat f = build_tensor(p, pr).F;
            for (int s = 0; s < trials; ++s) {
                const Rat z = random_nonzero_rat(rng, 6);
                const Rat lambda = random_nonzero_rat(rng, 6);
                const Rat mu = random_nonzero_rat(rng, 6);
                const ProjectionPair q =
                    make_pair(scale(z * lambda, p.A), scale(z * mu, p.B));
                const Rat factor = detail::rat_pow(z, k + 1) *
                                   detail::rat_pow(lambda, pr.alpha1) *
                                   detail::rat_pow(mu, pr.alpha2);
                ++rep.checked;
                if (build_tensor(q, pr).F != scale(factor, f))
                    detail::record_failure(rep,
                                           "scaling law fails at " + detail::config_tag(k, h1, h2));
            }
        }
    }
    return rep;
}

// ===========================================================================
// Ψ-preimages
// ===========================================================================

/// psi ∘ preimage_of_plane = identity on random planes.
[[nodiscard]] inline SuiteReport verify_preimage(int trials, std::uint64_t seed) {
    SuiteReport rep{"psi-preimage", 0, 0, ""};
    Rng rng(seed);
    for (const auto& d : detail::verify_configs()) {
        const int k = d[0], h1 = d[1], h2 = d[2];
        const int i = h1 + h2 - k + 1;
        for (int s = 0; s < trials; ++s) {
            const Subspace w = detail::random_subspace(rng, static_cast<std::size_t>(k + 1),
                                                       static_cast<std::size_t>(i), 9);
            const ProjectionPair p = preimage_of_plane(w, h1, h2, rng.eng());
            ++rep.checked;
            if (psi(p) != w)
                detail::record_failure(rep,
                                       "preimage round trip fails at " + detail::config_tag(k, h1, h2));
        }
    }
    return rep;
}

// ===========================================================================
// Jacobian dimension count
// ===========================================================================

/// The exact Jacobian of (A, B) ↦ F at a seeded random pair has rank
/// (k+1)·i — the dimension of the affine cone over the tensor variety —
/// at (5,4,3) and (4,3,2) for every profile.
[[nodiscard]] inline SuiteReport verify_jacobian(std::uint64_t seed) {
    SuiteReport rep{"jacobian-dimension", 0, 0, ""};
    Rng rng(seed);
    const std::vector<std::array<int, 3>> configs = {{5, 4, 3}, {4, 3, 2}};
    for (const auto& d : configs) {
        const int k = d[0], h1 = d[1], h2 = d[2];
        const ProjectionPair p = random_pair(k, h1, h2, rng.eng());
        for (const Profile& pr : all_profiles(k, h1, h2)) {
            ++rep.checked;
            const RatMat jac = tensor_entry_jacobian(p, pr);
            const auto expected = static_cast<std::size_t>((k + 1) * p.i);
            if (rank_of(jac) != expected)
                detail::record_failure(rep,
                                       "Jacobian rank off at " + detail::config_tag(k, h1, h2));
        }
    }
    return rep;
}

// ===========================================================================
// Aggregate driver
// ===========================================================================

/// Run every suite with per-suite budgets derived from `trials`; reports in
/// a fixed order.
[[nodiscard]] inline std::vector<SuiteReport> verify_all(int trials, std::uint64_t seed) {
    const int capped = trials < 1 ? 1 : trials;
    const int small = capped < 5 ? capped : 5;
    const int medium = capped < 25 ? capped : 25;
    std::vector<SuiteReport> out;
    out.push_back(verify_rank_theorem(6, small, seed + 1));
    out.push_back(verify_oracle_equivalence(medium, seed + 2));
    out.push_back(verify_canonical_form(small, seed + 3));
    out.push_back(verify_decomposition(small, seed + 4));
    out.push_back(verify_hodge(5, medium, seed + 5));
    out.push_back(verify_psi(medium, seed + 6));
    out.push_back(verify_stabilizer(capped < 50 ? capped : 50, seed + 7));
    out.push_back(verify_scaling(small, seed + 8));
    out.push_back(verify_preimage(small, seed + 9));
    out.push_back(verify_jacobian(seed + 10));
    return out;
}

}  // namespace bgt
