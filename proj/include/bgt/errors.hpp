/**
 * @file errors.hpp
 * @brief Exception taxonomy for the exact-arithmetic Grassmann tensor library.
 *
 * Every failure the library can diagnose is thrown as a subclass of
 * bgt::error, so callers can catch the whole family or a specific kind.
 * The `kind()` string doubles as a stable machine-readable tag used by the
 * command-line tool when mapping failures to exit codes.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace bgt {

/// Root of the library's exception hierarchy.
class error : public std::runtime_error {
public:
    error(std::string kind, const std::string& what_arg)
        : std::runtime_error(what_arg), kind_(std::move(kind)) {}

    /// Stable tag naming the failure class (e.g. "shape", "rank").
    [[nodiscard]] const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define BGT_DEFINE_ERROR(NAME, TAG)                                          \
    class NAME : public error {                                              \
    public:                                                                  \
        explicit NAME(const std::string& what_arg) : error(TAG, what_arg) {} \
    }

/// Matrix/vector dimensions do not match the operation's requirements.
BGT_DEFINE_ERROR(shape_error, "shape");
/// A matrix fails a required full-rank condition.
BGT_DEFINE_ERROR(rank_error, "rank");
/// An argument is outside the operation's domain (bad index, zero vector, ...).
BGT_DEFINE_ERROR(domain_error, "domain");
/// A requested (alpha1, alpha2) profile is not admissible for the dimensions.
BGT_DEFINE_ERROR(profile_error, "profile");
/// The two projection centers intersect (rank [A^T | B^T] < k+1).
BGT_DEFINE_ERROR(centers_error, "centers");
/// Global dimension constraints on (k, h1, h2) are violated.
BGT_DEFINE_ERROR(dimension_error, "dimension");
/// A geometric degeneracy: e.g. a ray through the center of its projection.
BGT_DEFINE_ERROR(degenerate_error, "degenerate");
/// Randomized generation failed to produce a valid object within its budget.
BGT_DEFINE_ERROR(generation_error, "generation");
/// A matrix that must be invertible is singular.
BGT_DEFINE_ERROR(invertibility_error, "invertibility");
/// The configuration lies on the exceptional locus of a rational map.
BGT_DEFINE_ERROR(exceptional_locus_error, "exceptional-locus");
/// Cannot parse an input document (malformed JSON, bad rational literal, ...).
BGT_DEFINE_ERROR(parse_error, "parse");
/// Filesystem-level input/output failure.
BGT_DEFINE_ERROR(io_error, "io");
/// A proven internal invariant failed; indicates a library bug.
BGT_DEFINE_ERROR(internal_error, "internal");

#undef BGT_DEFINE_ERROR

}  // namespace bgt
