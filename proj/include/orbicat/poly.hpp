#ifndef ORBICAT_POLY_HPP
#define ORBICAT_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "orbicat/cyclotomic.hpp"
#include "orbicat/matrix.hpp"

namespace orbicat {

// Univariate polynomial over cyclotomic scalars, coefficients low to high.
// The zero polynomial is the empty vector; all routines trim trailing zeros.
// Rational polynomials are the conductor-1 special case of the same type.
using KPoly = std::vector<CycScalar>;

namespace poly {

KPoly trim(KPoly p);
long deg(const KPoly& p);  // deg(0) == -1
bool is_zero(const KPoly& p);
bool is_monic(const KPoly& p);

KPoly from_rationals(const std::vector<Rational>& coeffs);

KPoly add(const KPoly& a, const KPoly& b);
KPoly sub(const KPoly& a, const KPoly& b);
KPoly mul(const KPoly& a, const KPoly& b);
KPoly scale(const KPoly& a, const CycScalar& s);

// Euclidean division over the coefficient field: a = q b + r, deg r < deg b.
std::pair<KPoly, KPoly> divmod(const KPoly& a, const KPoly& b);
KPoly mod(const KPoly& a, const KPoly& b);
KPoly divide_exact(const KPoly& a, const KPoly& b);  // throws if remainder != 0

// Monic greatest common divisor (Euclid over the field).
KPoly gcd(const KPoly& a, const KPoly& b);

KPoly derivative(const KPoly& p);
KPoly monic(const KPoly& p);

CycScalar eval(const KPoly& p, const CycScalar& x);

// p(a t + b).
KPoly compose_linear(const KPoly& p, const CycScalar& a, const CycScalar& b);

// Bivariate view helper for resultants: treats q as a polynomial in z whose
// coefficients are polynomials in t, and evaluates z := v, leaving a KPoly in t.
// Resultant of two univariate polynomials over the field (Euclidean chain).
CycScalar resultant(const KPoly& a, const KPoly& b);

// Lagrange interpolation through (points[i], values[i]); exact, and the points
// must be pairwise distinct.
KPoly interpolate(const std::vector<CycScalar>& points, const std::vector<CycScalar>& values);

std::string str(const KPoly& p);

}  // namespace poly

// Minimal polynomial of a square matrix, monic, by deterministic Krylov
// reduction of the flattened power sequence I, A, A^2, ...
KPoly min_poly(const Mat& a);

// Evaluate p(A) for a square matrix A.
Mat eval_poly(const KPoly& p, const Mat& a);

}  // namespace orbicat

#endif
