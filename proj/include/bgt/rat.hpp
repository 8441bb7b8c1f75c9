/**
 * @file rat.hpp
 * @brief Exact rational scalars: type aliases, parsing, and formatting.
 *
 * All arithmetic in the library is exact.  Scalars are arbitrary-precision
 * rationals (boost::multiprecision::cpp_rational), which keep themselves in
 * lowest terms with a positive denominator.  The canonical text form is
 * "p/q" with gcd(p,q) = 1 and q > 0, abbreviated to "p" when q = 1; that is
 * the only form the (de)serializers emit and accept.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "bgt/errors.hpp"

namespace bgt {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Numerator in lowest terms (sign lives here).
[[nodiscard]] inline Int rat_num(const Rat& x) { return numerator(x); }

/// Denominator in lowest terms; always positive.
[[nodiscard]] inline Int rat_den(const Rat& x) { return denominator(x); }

/// Build p/q, reducing to lowest terms.  Throws domain_error if q = 0.
[[nodiscard]] inline Rat rat_from_parts(const Int& p, const Int& q) {
    if (q == 0) throw domain_error("rational with zero denominator");
    return Rat(p) / Rat(q);
}

/// Canonical text form: "p/q" in lowest terms, or "p" when the value is integral.
[[nodiscard]] inline std::string rat_to_string(const Rat& x) {
    Int den = rat_den(x);
    if (den == 1) return rat_num(x).str();
    return rat_num(x).str() + "/" + den.str();
}

namespace detail {

/// Parse a decimal integer literal with optional leading '-'.
inline Int parse_int(std::string_view text, std::string_view original) {
    if (text.empty()) throw parse_error("empty integer in rational literal '" + std::string(original) + "'");
    std::size_t pos = 0;
    if (text[pos] == '-') ++pos;
    if (pos == text.size()) throw parse_error("bare sign in rational literal '" + std::string(original) + "'");
    for (std::size_t j = pos; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9')
            throw parse_error("invalid character in rational literal '" + std::string(original) + "'");
    }
    return Int(std::string(text));
}

}  // namespace detail

/// Parse "p" or "p/q" (optional '-' on p only; q must be a positive integer).
[[nodiscard]] inline Rat rat_from_string(std::string_view text) {
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(detail::parse_int(text, text));
    Int p = detail::parse_int(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text[0] == '-')
        throw parse_error("negative denominator in rational literal '" + std::string(text) + "'");
    Int q = detail::parse_int(den_text, text);
    if (q == 0) throw parse_error("zero denominator in rational literal '" + std::string(text) + "'");
    return rat_from_parts(p, q);
}

}  // namespace bgt
