#ifndef ORBICAT_CYCLOTOMIC_HPP
#define ORBICAT_CYCLOTOMIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "orbicat/rational.hpp"

namespace orbicat {

// The cyclotomic field Q(zeta_n), with zeta_n a fixed primitive n-th root of
// unity.  Scalars are stored on the power basis 1, zeta, ..., zeta^{phi(n)-1},
// reduced modulo the n-th cyclotomic polynomial.  Fields are interned: one
// immutable instance per conductor, so scalars can share a plain pointer.
class CycField {
  public:
    static const CycField* of(long conductor);

    long conductor() const { return n_; }
    long degree() const { return phi_; }

    // Integer coefficients of the n-th cyclotomic polynomial, low to high
    // (monic, length degree()+1).
    const std::vector<mpz_class>& cyclotomic_poly() const { return phi_poly_; }

    // zeta^t on the power basis (t arbitrary; reduced mod n internally).
    const std::vector<Rational>& power(long t) const;

  private:
    explicit CycField(long n);
    long n_;
    long phi_;
    std::vector<mpz_class> phi_poly_;
    std::vector<std::vector<Rational>> powers_;  // zeta^t for t in [0, n)
};

long euler_phi(long n);
std::vector<mpz_class> cyclotomic_polynomial(long n);

// One exact element of a cyclotomic field.
class CycScalar {
  public:
    CycScalar() : field_(CycField::of(1)), c_(1, Rational(0)) {}
    explicit CycScalar(const Rational& q)
        : field_(CycField::of(1)), c_(1, q) {}
    CycScalar(const CycField* f, std::vector<Rational> coeffs);

    static CycScalar zero(const CycField* f);
    static CycScalar one(const CycField* f);
    static CycScalar from_rational(const CycField* f, const Rational& q);
    // zeta_n^t inside Q(zeta_n).
    static CycScalar root_of_unity(long n, long t = 1);

    const CycField* field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // Requires is_rational().
    Rational rational_value() const;

    CycScalar lift_to(const CycField* f) const;  // conductor must divide f's
    std::optional<CycScalar> restrict_to(long conductor) const;

    // Galois twist zeta -> zeta^j (requires gcd(j, conductor) == 1).
    CycScalar galois(long j) const;
    CycScalar conj() const { return galois(field_->conductor() - 1); }

    CycScalar operator-() const;
    CycScalar inverse() const;  // requires nonzero

    friend CycScalar operator+(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator-(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator*(const CycScalar& a, const CycScalar& b);
    friend CycScalar operator/(const CycScalar& a, const CycScalar& b);
    CycScalar& operator+=(const CycScalar& b) { return *this = *this + b; }
    CycScalar& operator-=(const CycScalar& b) { return *this = *this - b; }
    CycScalar& operator*=(const CycScalar& b) { return *this = *this * b; }

    friend bool operator==(const CycScalar& a, const CycScalar& b);
    friend bool operator!=(const CycScalar& a, const CycScalar& b) { return !(a == b); }

    // Total order used only as a deterministic tie-break (conductor, then
    // coefficient-lexicographic); it has no arithmetic meaning.
    static int compare(const CycScalar& a, const CycScalar& b);

    // "p/q" when the value is rational, otherwise "[c0,c1,...]".
    std::string str() const;

  private:
    const CycField* field_;
    std::vector<Rational> c_;  // length field_->degree()
};

// Common field of two scalars (lcm of conductors), with both lifted.
const CycField* unify(CycScalar& a, CycScalar& b);

inline CycScalar cyc(long num, long den = 1) { return CycScalar(rat(num, den)); }

}  // namespace orbicat

#endif
