#include "orbicat/cyclotomic.hpp"

#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace orbicat {

long euler_phi(long n) {
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Exact division of integer polynomials (low-to-high coefficients), used only
// where divisibility is guaranteed.
std::vector<mpz_class> exact_div(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    std::vector<mpz_class> q(num.size() - den.size() + 1, mpz_class(0));
    for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
        mpz_class lead = num[i + den.size() - 1];
        if (lead == 0) continue;
        assert(lead % den.back() == 0);
        mpz_class f = lead / den.back();
        q[i] = f;
        for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= f * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("exact_div: inexact division");
    return q;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(long n) {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d.
    std::vector<mpz_class> num(n + 1, mpz_class(0));
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = exact_div(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

CycField::CycField(long n) : n_(n), phi_(euler_phi(n)), phi_poly_(cyclotomic_polynomial(n)) {
    // zeta^t on the basis for every t in [0, n): first the basis vectors, then
    // each higher power via zeta^phi = -(c_0 + c_1 zeta + ... ).
    powers_.resize(n_);
    for (long t = 0; t < phi_ && t < n_; ++t) {
        powers_[t].assign(phi_, Rational(0));
        powers_[t][t] = 1;
    }
    for (long t = phi_; t < n_; ++t) {
        const std::vector<Rational>& prev = powers_[t - 1];
        std::vector<Rational> cur(phi_, Rational(0));
        // Multiply prev by zeta: shift up, then reduce the overflow into the basis.
        Rational overflow = prev[phi_ - 1];
        for (long i = phi_ - 1; i >= 1; --i) cur[i] = prev[i - 1];
        cur[0] = 0;
        if (sgn(overflow) != 0) {
            for (long i = 0; i < phi_; ++i) {
                Rational c(phi_poly_[i]);
                cur[i] -= overflow * c;
            }
        }
        powers_[t] = std::move(cur);
    }
}

const CycField* CycField::of(long conductor) {
    if (conductor < 1) throw std::invalid_argument("conductor must be positive");
    static std::mutex mu;
    static std::map<long, std::unique_ptr<CycField>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto it = registry.find(conductor);
    if (it == registry.end())
        it = registry.emplace(conductor, std::unique_ptr<CycField>(new CycField(conductor))).first;
    return it->second.get();
}

const std::vector<Rational>& CycField::power(long t) const {
    long r = t % n_;
    if (r < 0) r += n_;
    return powers_[r];
}

CycScalar::CycScalar(const CycField* f, std::vector<Rational> coeffs) : field_(f), c_(std::move(coeffs)) {
    if (static_cast<long>(c_.size()) != f->degree())
        throw std::invalid_argument("coefficient vector has wrong length for field");
}

CycScalar CycScalar::zero(const CycField* f) {
    return CycScalar(f, std::vector<Rational>(f->degree(), Rational(0)));
}

CycScalar CycScalar::one(const CycField* f) { return from_rational(f, Rational(1)); }

CycScalar CycScalar::from_rational(const CycField* f, const Rational& q) {
    std::vector<Rational> c(f->degree(), Rational(0));
    c[0] = q;
    return CycScalar(f, std::move(c));
}

CycScalar CycScalar::root_of_unity(long n, long t) {
    const CycField* f = CycField::of(n);
    return CycScalar(f, f->power(t));
}

bool CycScalar::is_zero() const {
    for (const auto& q : c_)
        if (sgn(q) != 0) return false;
    return true;
}

bool CycScalar::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

Rational CycScalar::rational_value() const {
    if (!is_rational()) throw std::logic_error("scalar is not rational");
    return c_[0];
}

CycScalar CycScalar::lift_to(const CycField* f) const {
    if (f == field_) return *this;
    long n = field_->conductor(), m = f->conductor();
    if (m % n != 0) throw std::invalid_argument("lift target conductor not a multiple");
    long stride = m / n;  // zeta_n = zeta_m^stride
    CycScalar out = zero(f);
    for (long t = 0; t < field_->degree(); ++t) {
        if (sgn(c_[t]) == 0) continue;
        const auto& pw = f->power(stride * t);
        for (long i = 0; i < f->degree(); ++i) out.c_[i] += c_[t] * pw[i];
    }
    return out;
}

std::optional<CycScalar> CycScalar::restrict_to(long conductor) const {
    long n = field_->conductor();
    if (n % conductor != 0) return std::nullopt;
    const CycField* g = CycField::of(conductor);
    // Express this scalar on the lifted basis of Q(zeta_conductor): solve a
    // small linear system B x = c where column t of B is the lift of zeta^t.
    long rows = field_->degree(), cols = g->degree();
    std::vector<std::vector<Rational>> B(rows, std::vector<Rational>(cols + 1, Rational(0)));
    long stride = n / conductor;
    for (long t = 0; t < cols; ++t) {
        const auto& pw = field_->power(stride * t);
        for (long i = 0; i < rows; ++i) B[i][t] = pw[i];
    }
    for (long i = 0; i < rows; ++i) B[i][cols] = c_[i];
    // Gaussian elimination, first-nonzero pivoting.
    long rank = 0;
    std::vector<long> pivot_col(rows, -1);
    for (long col = 0; col < cols && rank < rows; ++col) {
        long pr = -1;
        for (long i = rank; i < rows; ++i)
            if (sgn(B[i][col]) != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(B[rank], B[pr]);
        Rational inv = 1 / B[rank][col];
        for (long j = col; j <= cols; ++j) B[rank][j] *= inv;
        for (long i = 0; i < rows; ++i) {
            if (i == rank || sgn(B[i][col]) == 0) continue;
            Rational f = B[i][col];
            for (long j = col; j <= cols; ++j) B[i][j] -= f * B[rank][j];
        }
        pivot_col[rank] = col;
        ++rank;
    }
    for (long i = rank; i < rows; ++i)
        if (sgn(B[i][cols]) != 0) return std::nullopt;  // not in the subfield
    std::vector<Rational> x(cols, Rational(0));
    for (long i = 0; i < rank; ++i) x[pivot_col[i]] = B[i][cols];
    return CycScalar(g, std::move(x));
}

CycScalar CycScalar::galois(long j) const {
    long n = field_->conductor();
    long g = std::gcd(((j % n) + n) % n, n);
    if (g != 1) throw std::invalid_argument("galois exponent not coprime to conductor");
    CycScalar out = zero(field_);
    for (long t = 0; t < field_->degree(); ++t) {
        if (sgn(c_[t]) == 0) continue;
        const auto& pw = field_->power(j * t);
        for (long i = 0; i < field_->degree(); ++i) out.c_[i] += c_[t] * pw[i];
    }
    return out;
}

CycScalar CycScalar::operator-() const {
    CycScalar out = *this;
    for (auto& q : out.c_) q = -q;
    return out;
}

const CycField* unify(CycScalar& a, CycScalar& b) {
    if (a.field() == b.field()) return a.field();
    long n = std::lcm(a.field()->conductor(), b.field()->conductor());
    const CycField* f = CycField::of(n);
    a = a.lift_to(f);
    b = b.lift_to(f);
    return f;
}

CycScalar operator+(const CycScalar& a, const CycScalar& b) {
    CycScalar x = a, y = b;
    unify(x, y);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

CycScalar operator-(const CycScalar& a, const CycScalar& b) {
    CycScalar x = a, y = b;
    unify(x, y);
    for (std::size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
}

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
    CycScalar x = a, y = b;
    const CycField* f = unify(x, y);
    long d = f->degree();
    // Convolve, then push powers >= d back onto the basis.
    std::vector<Rational> conv(2 * d - 1, Rational(0));
    for (long i = 0; i < d; ++i) {
        if (sgn(x.c_[i]) == 0) continue;
        for (long j = 0; j < d; ++j) {
            if (sgn(y.c_[j]) == 0) continue;
            conv[i + j] += x.c_[i] * y.c_[j];
        }
    }
    std::vector<Rational> out(d, Rational(0));
    for (long i = 0; i < d; ++i) out[i] = conv[i];
    for (long t = d; t < 2 * d - 1; ++t) {
        if (sgn(conv[t]) == 0) continue;
        const auto& pw = f->power(t);
        for (long i = 0; i < d; ++i) out[i] += conv[t] * pw[i];
    }
    return CycScalar(f, std::move(out));
}

CycScalar CycScalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero scalar");
    long d = field_->degree();
    if (d == 1) return CycScalar(field_, {1 / c_[0]});
    // Solve M x = e_0 where M is multiplication by *this on the power basis.
    std::vector<std::vector<Rational>> M(d, std::vector<Rational>(d + 1, Rational(0)));
    for (long t = 0; t < d; ++t) {
        // column t: this * zeta^t
        CycScalar col = *this * CycScalar(field_, field_->power(t));
        for (long i = 0; i < d; ++i) M[i][t] = col.c_[i];
    }
    M[0][d] = 1;
    for (long col = 0, row = 0; col < d && row < d; ++col) {
        long pr = -1;
        for (long i = row; i < d; ++i)
            if (sgn(M[i][col]) != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(M[row], M[pr]);
        Rational inv = 1 / M[row][col];
        for (long j = 0; j <= d; ++j) M[row][j] *= inv;
        for (long i = 0; i < d; ++i) {
            if (i == row || sgn(M[i][col]) == 0) continue;
            Rational f = M[i][col];
            for (long j = 0; j <= d; ++j) M[i][j] -= f * M[row][j];
        }
        ++row;
    }
    std::vector<Rational> x(d, Rational(0));
    for (long i = 0; i < d; ++i) {
        long piv = -1;
        for (long j = 0; j < d; ++j)
            if (sgn(M[i][j]) != 0) { piv = j; break; }
        if (piv >= 0) x[piv] = M[i][d];
    }
    CycScalar inv(field_, std::move(x));
    assert((*this * inv == one(field_)));
    return inv;
}

CycScalar operator/(const CycScalar& a, const CycScalar& b) { return a * b.inverse(); }

bool operator==(const CycScalar& a, const CycScalar& b) {
    CycScalar x = a, y = b;
    unify(x, y);
    return x.c_ == y.c_;
}

int CycScalar::compare(const CycScalar& a, const CycScalar& b) {
    CycScalar x = a, y = b;
    unify(x, y);
    for (std::size_t i = 0; i < x.c_.size(); ++i) {
        int c = cmp(x.c_[i], y.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::string CycScalar::str() const {
    if (is_rational()) return to_string(c_[0]);
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << to_string(c_[i]);
    }
    os << "]@z" << field_->conductor();
    return os.str();
}

}  // namespace orbicat
