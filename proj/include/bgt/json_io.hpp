/**
 * @file json_io.hpp
 * @brief JSON (de)serialization for every on-disk artifact: pairs, tensors,
 *        reduction witnesses, decompositions, τ points, subspaces, and
 *        Plücker vectors.
 *
 * Exact values only: every rational is serialized as the string "p/q" (or
 * "p" when the denominator is 1) and matrices as row-major arrays of arrays
 * of such strings, so files diff cleanly and round-trip bit-exactly.  All
 * writers use ordered JSON with a fixed field order, making output files
 * byte-identical across runs and platforms for identical inputs.
 *
 * Readers are strict: structural problems (missing fields, wrong JSON
 * types, ragged or mis-shaped matrices, malformed rational literals,
 * inconsistent headers) throw parse_error; filesystem problems throw
 * io_error; semantic validation is delegated to the owning constructors
 * (e.g. a pair file is re-validated through make_pair), whose errors
 * propagate unchanged.
 */
#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bgt/camera.hpp"
#include "bgt/canon.hpp"
#include "bgt/errors.hpp"
#include "bgt/exterior.hpp"
#include "bgt/gtensor.hpp"
#include "bgt/moduli.hpp"
#include "bgt/rat.hpp"
#include "bgt/ratmat.hpp"

namespace bgt {

using Json = nlohmann::ordered_json;

// ===========================================================================
// Field access helpers (strict)
// ===========================================================================

namespace detail {

inline const Json& json_field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw parse_error(std::string("missing field '") + name + "'");
    return j.at(name);
}

inline int json_int(const Json& j, const char* name) {
    const Json& f = json_field(j, name);
    if (!f.is_number_integer()) throw parse_error(std::string("field '") + name + "' must be an integer");
    return f.get<int>();
}

inline Rat json_rat(const Json& j) {
    if (!j.is_string()) throw parse_error("rational entries must be \"p/q\" strings");
    return rat_from_string(j.get<std::string>());
}

}  // namespace detail

// ===========================================================================
// Core values
// ===========================================================================

[[nodiscard]] inline Json to_json(const Rat& x) { return rat_to_string(x); }

[[nodiscard]] inline Json to_json(const RatMat& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols; ++c) row.push_back(rat_to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

[[nodiscard]] inline RatMat mat_from_json(const Json& j) {
    if (!j.is_array()) throw parse_error("matrix must be an array of rows");
    const std::size_t rows = j.size();
    std::size_t cols = 0;
    if (rows > 0) {
        if (!j[0].is_array()) throw parse_error("matrix rows must be arrays");
        cols = j[0].size();
    }
    RatMat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) throw parse_error("matrix rows are ragged");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = detail::json_rat(j[r][c]);
    }
    return m;
}

[[nodiscard]] inline Json to_json(const std::vector<Rat>& v) {
    Json out = Json::array();
    for (const Rat& x : v) out.push_back(rat_to_string(x));
    return out;
}

[[nodiscard]] inline std::vector<Rat> rat_vector_from_json(const Json& j) {
    if (!j.is_array()) throw parse_error("rational vector must be an array");
    std::vector<Rat> v;
    v.reserve(j.size());
    for (const Json& e : j) v.push_back(detail::json_rat(e));
    return v;
}

// ===========================================================================
// Subspaces and Plücker vectors
// ===========================================================================

/// {ambient_dim, basis} — the basis is written canonically and the reader
/// re-canonicalizes, so the file carries a span, not a preferred basis.
[[nodiscard]] inline Json subspace_to_json(const Subspace& s) {
    Json j;
    j["ambient_dim"] = s.ambient_dim;
    j["basis"] = to_json(s.basis);
    return j;
}

[[nodiscard]] inline Subspace subspace_from_json(const Json& j) {
    const int ambient = detail::json_int(j, "ambient_dim");
    if (ambient < 0) throw parse_error("ambient_dim must be nonnegative");
    RatMat basis = mat_from_json(detail::json_field(j, "basis"));
    if (basis.rows == 0 && basis.cols == 0) basis = RatMat(static_cast<std::size_t>(ambient), 0);
    if (basis.rows != static_cast<std::size_t>(ambient))
        throw parse_error("basis row count must equal ambient_dim");
    return subspace_from_generators(basis);
}

/// {r, n, coords} with coordinates in lex order.
[[nodiscard]] inline Json plucker_to_json(const PluckerVector& p) {
    Json j;
    j["r"] = p.r;
    j["n"] = p.n;
    j["coords"] = to_json(p.coords);
    return j;
}

[[nodiscard]] inline PluckerVector plucker_from_json(const Json& j) {
    const int r = detail::json_int(j, "r");
    const int n = detail::json_int(j, "n");
    if (r < 0 || n < 0) throw parse_error("r and n must be nonnegative");
    std::vector<Rat> coords = rat_vector_from_json(detail::json_field(j, "coords"));
    if (coords.size() != binom(static_cast<std::size_t>(n), static_cast<std::size_t>(r)))
        throw parse_error("coords length must be binom(n, r)");
    return PluckerVector{static_cast<std::size_t>(r), static_cast<std::size_t>(n),
                         std::move(coords)};
}

// ===========================================================================
// Pairs
// ===========================================================================

/// {k, h1, h2, A, B}
[[nodiscard]] inline Json pair_to_json(const ProjectionPair& p) {
    Json j;
    j["k"] = p.k;
    j["h1"] = p.h1;
    j["h2"] = p.h2;
    j["A"] = to_json(p.A);
    j["B"] = to_json(p.B);
    return j;
}

[[nodiscard]] inline ProjectionPair pair_from_json(const Json& j) {
    const int k = detail::json_int(j, "k");
    const int h1 = detail::json_int(j, "h1");
    const int h2 = detail::json_int(j, "h2");
    RatMat a = mat_from_json(detail::json_field(j, "A"));
    RatMat b = mat_from_json(detail::json_field(j, "B"));
    ProjectionPair p = make_pair(std::move(a), std::move(b));
    if (p.k != k || p.h1 != h1 || p.h2 != h2)
        throw parse_error("pair header (k, h1, h2) disagrees with the matrix shapes");
    return p;
}

// ===========================================================================
// Tensors
// ===========================================================================

namespace detail {

[[nodiscard]] inline Json labels_to_json(const std::vector<MultiIndex>& labels) {
    Json out = Json::array();
    for (const MultiIndex& mi : labels) out.push_back(mi.indices);
    return out;
}

inline void check_labels(const Json& j, const std::vector<MultiIndex>& expected,
                         const char* which) {
    if (!j.is_array() || j.size() != expected.size())
        throw parse_error(std::string(which) + " has the wrong length");
    for (std::size_t t = 0; t < expected.size(); ++t)
        if (!j[t].is_array() || j[t].get<std::vector<int>>() != expected[t].indices)
            throw parse_error(std::string(which) + " is not the lex label sequence");
}

}  // namespace detail

/// {k, h1, h2, alpha1, alpha2, row_labels, col_labels, F}
[[nodiscard]] inline Json tensor_to_json(const GrassmannTensor& t) {
    Json j;
    j["k"] = t.k;
    j["h1"] = t.h1;
    j["h2"] = t.h2;
    j["alpha1"] = t.profile.alpha1;
    j["alpha2"] = t.profile.alpha2;
    j["row_labels"] = detail::labels_to_json(t.row_labels);
    j["col_labels"] = detail::labels_to_json(t.col_labels);
    j["F"] = to_json(t.F);
    return j;
}

[[nodiscard]] inline GrassmannTensor tensor_from_json(const Json& j) {
    const int k = detail::json_int(j, "k");
    const int h1 = detail::json_int(j, "h1");
    const int h2 = detail::json_int(j, "h2");
    const int a1 = detail::json_int(j, "alpha1");
    const int a2 = detail::json_int(j, "alpha2");
    const Profile pr = make_profile(k, h1, h2, a1, a2);
    GrassmannTensor t;
    t.k = k;
    t.h1 = h1;
    t.h2 = h2;
    t.profile = pr;
    t.row_labels = multiindices(h2 + 1, pr.s2 + 1);
    t.col_labels = multiindices(h1 + 1, pr.s1 + 1);
    detail::check_labels(detail::json_field(j, "row_labels"), t.row_labels, "row_labels");
    detail::check_labels(detail::json_field(j, "col_labels"), t.col_labels, "col_labels");
    t.F = mat_from_json(detail::json_field(j, "F"));
    if (t.F.rows != t.row_labels.size() || t.F.cols != t.col_labels.size())
        throw parse_error("F has the wrong shape for this profile");
    return t;
}

// ===========================================================================
// Reductions and decompositions
// ===========================================================================

/// {G, K1, K2, detG, canonical}
[[nodiscard]] inline Json reduction_to_json(const CanonicalReduction& r) {
    Json j;
    j["G"] = to_json(r.G);
    j["K1"] = to_json(r.K1);
    j["K2"] = to_json(r.K2);
    j["detG"] = to_json(r.detG);
    j["canonical"] = to_json(r.canonical);
    return j;
}

[[nodiscard]] inline CanonicalReduction reduction_from_json(const Json& j) {
    CanonicalReduction r{mat_from_json(detail::json_field(j, "G")),
                         mat_from_json(detail::json_field(j, "K1")),
                         mat_from_json(detail::json_field(j, "K2")),
                         detail::json_rat(detail::json_field(j, "detG")),
                         mat_from_json(detail::json_field(j, "canonical"))};
    if (r.G.rows != r.G.cols || r.K1.rows != r.K1.cols || r.K2.rows != r.K2.cols)
        throw parse_error("reduction witnesses must be square");
    if (r.canonical.rows != r.G.rows || r.canonical.cols != r.K1.rows + r.K2.rows)
        throw parse_error("canonical block has the wrong shape");
    return r;
}

/// {scalar, terms: [{P, Q}, …]}
[[nodiscard]] inline Json decomposition_to_json(const Decomposition& d) {
    Json j;
    j["scalar"] = to_json(d.scalar);
    Json terms = Json::array();
    for (const DecompositionTerm& t : d.terms) {
        Json term;
        term["P"] = to_json(t.P);
        term["Q"] = to_json(t.Q);
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

[[nodiscard]] inline Decomposition decomposition_from_json(const Json& j) {
    Decomposition d;
    d.scalar = detail::json_rat(detail::json_field(j, "scalar"));
    const Json& terms = detail::json_field(j, "terms");
    if (!terms.is_array()) throw parse_error("terms must be an array");
    for (const Json& term : terms)
        d.terms.push_back(DecompositionTerm{
            rat_vector_from_json(detail::json_field(term, "P")),
            rat_vector_from_json(detail::json_field(term, "Q"))});
    for (const DecompositionTerm& t : d.terms)
        if (t.P.size() != d.terms.front().P.size() || t.Q.size() != d.terms.front().Q.size())
            throw parse_error("decomposition terms have inconsistent lengths");
    return d;
}

// ===========================================================================
// τ points
// ===========================================================================

/// {i, tau1, tau2}
[[nodiscard]] inline Json tau_to_json(const TauPoint& t) {
    Json j;
    j["i"] = t.i;
    j["tau1"] = to_json(t.tau1);
    j["tau2"] = to_json(t.tau2);
    return j;
}

[[nodiscard]] inline TauPoint tau_from_json(const Json& j) {
    TauPoint t{detail::json_int(j, "i"), mat_from_json(detail::json_field(j, "tau1")),
               mat_from_json(detail::json_field(j, "tau2"))};
    if (t.i < 0 || t.tau1.cols != static_cast<std::size_t>(t.i) ||
        t.tau2.cols != static_cast<std::size_t>(t.i))
        throw parse_error("tau blocks must each have i columns");
    return t;
}

// ===========================================================================
// Files
// ===========================================================================

/// Parse a JSON document from a file; io_error if unreadable, parse_error if
/// not valid JSON.
[[nodiscard]] inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw io_error("read failure on '" + path + "'");
    try {
        return Json::parse(buf.str());
    } catch (const nlohmann::json::exception& e) {
        throw parse_error("invalid JSON in '" + path + "': " + e.what());
    }
}

/// Write a JSON document with 2-space indentation and a trailing newline;
/// byte-stable for identical documents.
inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    out << j.dump(2) << '\n';
    if (!out) throw io_error("write failure on '" + path + "'");
}

}  // namespace bgt
