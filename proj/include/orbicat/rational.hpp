#ifndef ORBICAT_RATIONAL_HPP
#define ORBICAT_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

namespace orbicat {

// Exact rational scalar.  All arithmetic in the engine bottoms out here; no
// floating point is allowed anywhere on a verification path.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Renders "p" or "p/q" (q > 0, gcd-reduced); the inverse of parse_rational.
std::string to_string(const Rational& q);

// Strict parser for the wire format: optional '-', digits, optional '/digits'.
// Returns nullopt on malformed input (including zero denominators).
std::optional<Rational> parse_rational(const std::string& s);

}  // namespace orbicat

#endif
