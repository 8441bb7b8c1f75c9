/**
 * @file cli.hpp
 * @brief Command-line surface: flag parsing, dispatch, and report printing.
 *
 * The binary exposes one subcommand per pipeline stage — `gen`, `tensor`,
 * `canon`, `decomp`, `tau`, `psi`, `preimage` — plus `verify` (the invariant
 * suites of every module) and `example-paper` (the worked (5,4,3) regression
 * reproduced bit-exactly from stored fixtures).  Everything is deterministic
 * for a fixed (command, flags, seed) triple: artifacts are byte-identical
 * across runs, and the default seed honours the GT_SEED environment variable.
 *
 * Exit codes: 0 success, 1 validation/flag error, 2 degenerate input
 * (generation budget exhausted, degenerate geometry, exceptional locus),
 * 3 verification failure.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "bgt/camera.hpp"
#include "bgt/canon.hpp"
#include "bgt/errors.hpp"
#include "bgt/gtensor.hpp"
#include "bgt/jacobian.hpp"
#include "bgt/json_io.hpp"
#include "bgt/moduli.hpp"
#include "bgt/rat.hpp"
#include "bgt/ratmat.hpp"
#include "bgt/reference_example.hpp"
#include "bgt/rng.hpp"
#include "bgt/verify.hpp"

namespace bgt::cli {

// ===========================================================================
// Exit codes
// ===========================================================================

inline constexpr int kExitSuccess = 0;       ///< command completed
inline constexpr int kExitUsage = 1;         ///< bad flags or invalid input
inline constexpr int kExitDegenerate = 2;    ///< degenerate geometric input
inline constexpr int kExitVerification = 3;  ///< a checked identity failed

/// Map a library exception to the exit code contract above.
[[nodiscard]] inline int exit_code_for(const error& e) noexcept {
    const std::string& kind = e.kind();
    if (kind == "generation" || kind == "degenerate" || kind == "exceptional-locus") {
        return kExitDegenerate;
    }
    return kExitUsage;
}

// ===========================================================================
// Run configuration
// ===========================================================================

/// Everything a single invocation needs, filled in by the flag parser.
struct RunConfig {
    std::string command;       ///< gen, tensor, canon, decomp, tau, psi,
                               ///< preimage, verify or example-paper
    std::uint64_t seed{0};     ///< PRNG seed (default: GT_SEED or built-in)
    int trials{25};            ///< trial count for `verify`
    int k{0};                  ///< ambient projective dimension
    int h1{0};                 ///< first target dimension
    int h2{0};                 ///< second target dimension
    int alpha1{0};             ///< profile entry for the first view
    int alpha2{0};             ///< profile entry for the second view
    int bound{9};              ///< integer entry bound for random generation
    std::string input_path;    ///< JSON input artifact (when the command reads one)
    std::string output_path;   ///< JSON output artifact ("" = print to stdout)
    std::string suite{"all"};  ///< suite selector for `verify`
};

namespace detail {

/// Write `doc` to `path`, or pretty-print it to `out` when no path was given.
inline void emit(const Json& doc, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << doc.dump(2) << '\n';
    } else {
        write_json_file(path, doc);
        out << "wrote " << path << '\n';
    }
}

/// Position of `want` in a label list (throws internal_error if absent).
[[nodiscard]] inline std::size_t label_index(const std::vector<MultiIndex>& labels,
                                             const MultiIndex& want) {
    const auto it = std::find(labels.begin(), labels.end(), want);
    if (it == labels.end()) throw internal_error("label_index: label not found");
    return static_cast<std::size_t>(it - labels.begin());
}

}  // namespace detail

// ===========================================================================
// verify — run the shared invariant suites and print a report
// ===========================================================================

/// Run one named suite (or "all") and print per-suite check/failure counts.
/// Single-suite runs reuse the seed offsets of the full run, so a suite
/// checks the same instances whether invoked alone or as part of "all".
[[nodiscard]] inline int run_verify(const std::string& suite, int trials, std::uint64_t seed,
                                    std::ostream& out) {
    const int n = std::max(1, trials);
    std::vector<SuiteReport> reports;
    if (suite == "all") {
        reports = verify_all(n, seed);
    } else if (suite == "rank-theorem") {
        reports.push_back(verify_rank_theorem(6, n, seed + 1));
    } else if (suite == "oracle-equivalence") {
        reports.push_back(verify_oracle_equivalence(n, seed + 2));
    } else if (suite == "canonical-form") {
        reports.push_back(verify_canonical_form(n, seed + 3));
    } else if (suite == "decomposition") {
        reports.push_back(verify_decomposition(n, seed + 4));
    } else if (suite == "hodge-equivariance") {
        reports.push_back(verify_hodge(5, n, seed + 5));
    } else if (suite == "psi-equivariance") {
        reports.push_back(verify_psi(n, seed + 6));
    } else if (suite == "stabilizer-dichotomy") {
        reports.push_back(verify_stabilizer(n, seed + 7));
    } else if (suite == "scaling-orbit") {
        reports.push_back(verify_scaling(n, seed + 8));
    } else if (suite == "psi-preimage") {
        reports.push_back(verify_preimage(n, seed + 9));
    } else if (suite == "jacobian-dimension") {
        reports.push_back(verify_jacobian(seed + 10));
    } else {
        throw domain_error("verify: unknown suite '" + suite + "'");
    }

    out << "verify  suite=" << suite << "  trials=" << n << "  seed=" << seed << '\n';
    std::size_t failures = 0;
    for (const SuiteReport& rep : reports) {
        out << "  " << std::left << std::setw(22) << rep.name << std::right << std::setw(7)
            << rep.checked << " checks" << std::setw(5) << rep.failed << " failures";
        if (!rep.note.empty()) out << "  [" << rep.note << "]";
        out << '\n';
        failures += rep.failed;
    }
    if (failures == 0) {
        out << "verify: PASS (" << reports.size() << " suites)" << '\n';
        return kExitSuccess;
    }
    out << "verify: FAIL (" << failures << " failed checks)" << '\n';
    return kExitVerification;
}

// ===========================================================================
// example-paper — the worked (5,4,3) example as a bit-exact regression
// ===========================================================================

/// One line of the example regression report.
struct ExampleCheck {
    std::string label;
    bool ok{false};
};

/// Recompute every displayed matrix of the worked example from scratch and
/// diff it against the stored fixtures: the canonical reduction witnesses,
/// det(G) = −1/2, the canonical tensor 𝔉_c (three entries −1, +1, −1), the
/// bifocal tensor 𝔉 (entries in {0, ±2}), the τ blocks (up to column span),
/// the transformation law, and both three-term decompositions.  Writes a
/// JSON report when `artifact_path` is non-empty.  Returns exit 0 iff every
/// check matches, 3 otherwise.
[[nodiscard]] inline int run_example_paper(std::ostream& out, const std::string& artifact_path) {
    const ProjectionPair p = refex::pair();
    const Profile pr = refex::profile();
    const ProjectionPair pc = canonical_pair(refex::k, refex::h1, refex::h2);
    std::vector<ExampleCheck> checks;

    // (a) canonical form: G · [M1|M2] · blockdiag(K1, K2) hits the block pattern.
    const RatMat joint = hcat(transpose(p.A), transpose(p.B));
    const RatMat staged = mul(joint, blockdiag(refex::witness_k1(), refex::witness_k2()));
    const RatMat reduced = mul(refex::witness_g(), staged);
    const CanonicalReduction red = reduce_to_canonical(p);
    checks.push_back({"canonical form  G.[M1|M2].blockdiag(K1,K2) = [[I,0,I,0],[0,I,0,0],[0,0,0,I]]",
                      staged == refex::intermediate_joint() && reduced == refex::canonical_joint() &&
                          reduced == canonical_block_matrix(refex::k, refex::h1, refex::h2) &&
                          red.canonical == refex::canonical_joint()});

    // (b) the witness determinant.
    checks.push_back({"det(G) = -1/2",
                      det(refex::witness_g()) == Rat(-1, 2) && refex::reduction().detG == Rat(-1, 2)});

    // (c) canonical tensor: exactly three entries, -1 / +1 / -1.
    const GrassmannTensor fc = build_tensor(pc, pr);
    bool ok_fc = fc.F == transpose(refex::tensor_fc_transposed());
    std::size_t nonzeros = 0;
    for (std::size_t r = 0; r < fc.F.rows; ++r) {
        for (std::size_t c = 0; c < fc.F.cols; ++c) {
            if (fc.F(r, c) != Rat(0)) ++nonzeros;
        }
    }
    ok_fc = ok_fc && nonzeros == 3;
    const int rows = refex::h2 + 1;
    const int cols = refex::h1 + 1;
    ok_fc = ok_fc && fc.F(detail::label_index(fc.row_labels, {rows, {3}}),
                          detail::label_index(fc.col_labels, {cols, {1, 2}})) == Rat(-1);
    ok_fc = ok_fc && fc.F(detail::label_index(fc.row_labels, {rows, {2}}),
                          detail::label_index(fc.col_labels, {cols, {1, 3}})) == Rat(1);
    ok_fc = ok_fc && fc.F(detail::label_index(fc.row_labels, {rows, {1}}),
                          detail::label_index(fc.col_labels, {cols, {2, 3}})) == Rat(-1);
    checks.push_back({"canonical tensor Fc: 3 nonzero entries -1, +1, -1", ok_fc});

    // (d) bifocal tensor of the example pair, all entries in {0, +-2}.
    const GrassmannTensor f = build_tensor(p, pr);
    bool ok_f = f.F == transpose(refex::tensor_f_transposed());
    for (std::size_t r = 0; r < f.F.rows && ok_f; ++r) {
        for (std::size_t c = 0; c < f.F.cols; ++c) {
            const Rat& v = f.F(r, c);
            if (v != Rat(0) && v != Rat(2) && v != Rat(-2)) {
                ok_f = false;
                break;
            }
        }
    }
    checks.push_back({"bifocal tensor F: 10 x 4 display, entries in {0, +-2}", ok_f});

    // (e) tau blocks span the displayed columns.
    const TauPoint tau = tau_from_pair(p);
    checks.push_back({"tau blocks span the displayed tau1, tau2",
                      subspace_from_generators(tau.tau1) ==
                              subspace_from_generators(refex::tau1_transposed()) &&
                          subspace_from_generators(tau.tau2) ==
                              subspace_from_generators(refex::tau2_transposed())});

    // (f) transformation law: Fc pushed through the computed witnesses gives F.
    checks.push_back({"transformation law  F = Lambda(K2).Fc.Lambda(K1)^T / det(G)",
                      transform_tensor(fc, red.K1, red.K2, red.detG).F == f.F});

    // (g) both three-term decompositions, term by term.
    const Decomposition dfc = decompose_tensor(pc, pr);
    const Decomposition df = decompose_tensor(p, pr);
    checks.push_back({"decomposition of Fc: 3 terms, scalar 1",
                      decomposition_to_json(dfc) == decomposition_to_json(refex::decomposition_fc()) &&
                          reassemble(dfc) == fc.F});
    checks.push_back({"decomposition of F: 3 terms, scalar -2",
                      decomposition_to_json(df) == decomposition_to_json(refex::decomposition_f()) &&
                          reassemble(df) == f.F});

    bool all_ok = true;
    out << "example-paper  (k,h1,h2) = (5,4,3), profile (3,3)" << '\n';
    for (const ExampleCheck& check : checks) {
        out << (check.ok ? "  ok    " : "  FAIL  ") << check.label << '\n';
        all_ok = all_ok && check.ok;
    }
    out << (all_ok ? "example-paper: PASS" : "example-paper: FAIL") << '\n';

    if (!artifact_path.empty()) {
        Json report;
        report["example"] = {{"k", refex::k}, {"h1", refex::h1}, {"h2", refex::h2},
                             {"alpha1", refex::alpha1}, {"alpha2", refex::alpha2}};
        report["canonical"] = to_json(refex::canonical_joint());
        report["detG"] = to_json(refex::reduction().detG);
        report["tensor_fc"] = tensor_to_json(fc);
        report["tensor_f"] = tensor_to_json(f);
        report["tau"] = tau_to_json(tau);
        report["decomposition_fc"] = decomposition_to_json(dfc);
        report["decomposition_f"] = decomposition_to_json(df);
        Json check_list = Json::array();
        for (const ExampleCheck& check : checks) {
            check_list.push_back({{"label", check.label}, {"ok", check.ok}});
        }
        report["checks"] = check_list;
        report["all_ok"] = all_ok;
        write_json_file(artifact_path, report);
        out << "wrote " << artifact_path << '\n';
    }
    return all_ok ? kExitSuccess : kExitVerification;
}

// ===========================================================================
// Dispatch
// ===========================================================================

/// Execute a parsed configuration.  Throws bgt::error subclasses on invalid
/// or degenerate input; the caller maps those to exit codes.
[[nodiscard]] inline int dispatch(const RunConfig& cfg, std::ostream& out) {
    if (cfg.command == "gen") {
        const ProjectionPair p = random_pair(cfg.k, cfg.h1, cfg.h2, cfg.seed, cfg.bound);
        detail::emit(pair_to_json(p), cfg.output_path, out);
        return kExitSuccess;
    }
    if (cfg.command == "tensor") {
        const ProjectionPair p = pair_from_json(read_json_file(cfg.input_path));
        const Profile pr = make_profile(p, cfg.alpha1, cfg.alpha2);
        detail::emit(tensor_to_json(build_tensor(p, pr)), cfg.output_path, out);
        return kExitSuccess;
    }
    if (cfg.command == "canon") {
        const ProjectionPair p = pair_from_json(read_json_file(cfg.input_path));
        detail::emit(reduction_to_json(reduce_to_canonical(p)), cfg.output_path, out);
        return kExitSuccess;
    }
    if (cfg.command == "decomp") {
        const ProjectionPair p = pair_from_json(read_json_file(cfg.input_path));
        const Profile pr = make_profile(p, cfg.alpha1, cfg.alpha2);
        detail::emit(decomposition_to_json(decompose_tensor(p, pr)), cfg.output_path, out);
        return kExitSuccess;
    }
    if (cfg.command == "tau") {
        const ProjectionPair p = pair_from_json(read_json_file(cfg.input_path));
        detail::emit(tau_to_json(tau_from_pair(p)), cfg.output_path, out);
        return kExitSuccess;
    }
    if (cfg.command == "psi") {
        const ProjectionPair p = pair_from_json(read_json_file(cfg.input_path));
        detail::emit(subspace_to_json(psi(p)), cfg.output_path, out);
        return kExitSuccess;
    }
    if (cfg.command == "preimage") {
        const Subspace w = subspace_from_json(read_json_file(cfg.input_path));
        const ProjectionPair p = preimage_of_plane(w, cfg.h1, cfg.h2, cfg.seed, cfg.bound);
        detail::emit(pair_to_json(p), cfg.output_path, out);
        return kExitSuccess;
    }
    if (cfg.command == "verify") {
        return run_verify(cfg.suite, cfg.trials, cfg.seed, out);
    }
    if (cfg.command == "example-paper") {
        return run_example_paper(out, cfg.output_path);
    }
    throw domain_error("dispatch: unknown command '" + cfg.command + "'");
}

// ===========================================================================
// Flag parsing
// ===========================================================================

/// Parse `args` (program name NOT included), dispatch, and map exceptions to
/// the documented exit codes.  All report text goes to `out`, errors to `err`.
[[nodiscard]] inline int run(std::vector<std::string> args, std::ostream& out,
                             std::ostream& err) {
    RunConfig cfg;
    cfg.seed = default_seed();

    CLI::App app{"exact bifocal Grassmann tensors for pairs of linear projections"};
    app.name("bgt");
    app.require_subcommand(1);

    CLI::App* gen = app.add_subcommand("gen", "generate a seeded random projection pair");
    gen->add_option("--k", cfg.k, "ambient projective dimension")->required();
    gen->add_option("--h1", cfg.h1, "first target dimension")->required();
    gen->add_option("--h2", cfg.h2, "second target dimension")->required();
    gen->add_option("--seed", cfg.seed, "PRNG seed (default: GT_SEED or built-in)");
    gen->add_option("--bound", cfg.bound, "integer entry bound");
    gen->add_option("-o,--output", cfg.output_path, "pair JSON file to write");

    CLI::App* tensor = app.add_subcommand("tensor", "build the Grassmann tensor of a pair");
    tensor->add_option("-i,--input", cfg.input_path, "pair JSON file")->required();
    tensor->add_option("--alpha1", cfg.alpha1, "profile entry for the first view")->required();
    tensor->add_option("--alpha2", cfg.alpha2, "profile entry for the second view")->required();
    tensor->add_option("-o,--output", cfg.output_path, "tensor JSON file to write");

    CLI::App* canon = app.add_subcommand("canon", "reduce a pair to the canonical block form");
    canon->add_option("-i,--input", cfg.input_path, "pair JSON file")->required();
    canon->add_option("-o,--output", cfg.output_path, "reduction JSON file to write");

    CLI::App* decomp = app.add_subcommand("decomp", "rank-one decomposition of the tensor");
    decomp->add_option("-i,--input", cfg.input_path, "pair JSON file")->required();
    decomp->add_option("--alpha1", cfg.alpha1, "profile entry for the first view")->required();
    decomp->add_option("--alpha2", cfg.alpha2, "profile entry for the second view")->required();
    decomp->add_option("-o,--output", cfg.output_path, "decomposition JSON file to write");

    CLI::App* tau = app.add_subcommand("tau", "tau point (moduli marking) of a pair");
    tau->add_option("-i,--input", cfg.input_path, "pair JSON file")->required();
    tau->add_option("-o,--output", cfg.output_path, "tau JSON file to write");

    CLI::App* psi_cmd = app.add_subcommand("psi", "moduli plane Psi(p) of a pair");
    psi_cmd->add_option("-i,--input", cfg.input_path, "pair JSON file")->required();
    psi_cmd->add_option("-o,--output", cfg.output_path, "subspace JSON file to write");

    CLI::App* preimage = app.add_subcommand("preimage", "construct a pair mapping to a given plane");
    preimage->add_option("-i,--input", cfg.input_path, "plane (subspace) JSON file")->required();
    preimage->add_option("--h1", cfg.h1, "first target dimension")->required();
    preimage->add_option("--h2", cfg.h2, "second target dimension")->required();
    preimage->add_option("--seed", cfg.seed, "PRNG seed (default: GT_SEED or built-in)");
    preimage->add_option("--bound", cfg.bound, "integer entry bound");
    preimage->add_option("-o,--output", cfg.output_path, "pair JSON file to write");

    CLI::App* verify = app.add_subcommand("verify", "run the module invariant suites");
    verify->add_option("--suite", cfg.suite,
                       "all, rank-theorem, oracle-equivalence, canonical-form, decomposition, "
                       "hodge-equivariance, psi-equivariance, stabilizer-dichotomy, "
                       "scaling-orbit, psi-preimage or jacobian-dimension");
    verify->add_option("--trials", cfg.trials, "trials per suite");
    verify->add_option("--seed", cfg.seed, "PRNG seed (default: GT_SEED or built-in)");

    CLI::App* example = app.add_subcommand("example-paper", "bit-exact worked-example regression");
    example->add_option("-o,--output", cfg.output_path, "report JSON file to write");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

    for (const CLI::App* sub : app.get_subcommands()) cfg.command = sub->get_name();

    try {
        return dispatch(cfg, out);
    } catch (const error& e) {
        err << "error (" << e.kind() << "): " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace bgt::cli
