#include "orbicat/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace orbicat {
namespace poly {

KPoly trim(KPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

long deg(const KPoly& p) {
    long d = static_cast<long>(p.size()) - 1;
    while (d >= 0 && p[d].is_zero()) --d;
    return d;
}

bool is_zero(const KPoly& p) { return deg(p) < 0; }

bool is_monic(const KPoly& p) {
    long d = deg(p);
    return d >= 0 && p[d] == cyc(1);
}

KPoly from_rationals(const std::vector<Rational>& coeffs) {
    KPoly p;
    p.reserve(coeffs.size());
    for (const auto& q : coeffs) p.emplace_back(q);
    return trim(std::move(p));
}

KPoly add(const KPoly& a, const KPoly& b) {
    KPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] += b[i];
    }
    return trim(std::move(out));
}

KPoly sub(const KPoly& a, const KPoly& b) {
    KPoly out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] -= b[i];
    }
    return trim(std::move(out));
}

KPoly mul(const KPoly& a, const KPoly& b) {
    if (is_zero(a) || is_zero(b)) return {};
    KPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return trim(std::move(out));
}

KPoly scale(const KPoly& a, const CycScalar& s) {
    if (s.is_zero()) return {};
    KPoly out = a;
    for (auto& c : out) c *= s;
    return trim(std::move(out));
}

std::pair<KPoly, KPoly> divmod(const KPoly& a, const KPoly& b) {
    long db = deg(b);
    if (db < 0) throw std::invalid_argument("poly division by zero");
    KPoly r = trim(a);
    long dr = deg(r);
    if (dr < db) return {{}, r};
    KPoly q(dr - db + 1);
    CycScalar lead_inv = b[db].inverse();
    while ((dr = deg(r)) >= db) {
        CycScalar f = r[dr] * lead_inv;
        q[dr - db] = f;
        for (long i = 0; i <= db; ++i) r[dr - db + i] -= f * b[i];
        r[dr] = CycScalar();  // force exact cancellation of the lead term
    }
    return {trim(std::move(q)), trim(std::move(r))};
}

KPoly mod(const KPoly& a, const KPoly& b) { return divmod(a, b).second; }

KPoly divide_exact(const KPoly& a, const KPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!is_zero(r)) throw std::logic_error("divide_exact: nonzero remainder");
    return q;
}

KPoly gcd(const KPoly& a, const KPoly& b) {
    KPoly x = trim(a), y = trim(b);
    while (!is_zero(y)) {
        KPoly r = mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return is_zero(x) ? x : monic(x);
}

KPoly derivative(const KPoly& p) {
    if (p.size() <= 1) return {};
    KPoly out(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = p[i] * cyc(static_cast<long>(i));
    return trim(std::move(out));
}

KPoly monic(const KPoly& p) {
    long d = deg(p);
    if (d < 0) throw std::invalid_argument("monic of zero polynomial");
    return scale(p, p[d].inverse());
}

CycScalar eval(const KPoly& p, const CycScalar& x) {
    CycScalar acc;
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i) acc = acc * x + p[i];
    return acc;
}

KPoly compose_linear(const KPoly& p, const CycScalar& a, const CycScalar& b) {
    // Horner in (a t + b).
    KPoly lin = {b, a};
    KPoly acc;
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i) {
        acc = mul(acc, lin);
        if (!p[i].is_zero()) acc = add(acc, {p[i]});
    }
    return acc;
}

CycScalar resultant(const KPoly& a0, const KPoly& b0) {
    KPoly a = trim(a0), b = trim(b0);
    long da = deg(a), db = deg(b);
    if (da < 0 || db < 0) return CycScalar();
    CycScalar sign = cyc(1);
    CycScalar acc = cyc(1);
    while (true) {
        da = deg(a);
        db = deg(b);
        if (db == 0) {
            CycScalar f = cyc(1);
            for (long i = 0; i < da; ++i) f *= b[0];
            return sign * acc * f;
        }
        if (da < db) {
            std::swap(a, b);
            if (da % 2 == 1 && db % 2 == 1) sign = -sign;
            continue;
        }
        KPoly r = mod(a, b);
        long dr = deg(r);
        if (dr < 0) return CycScalar();  // common factor: resultant vanishes
        CycScalar f = cyc(1);
        for (long i = 0; i < da - dr; ++i) f *= b[db];
        acc *= f;
        if (da % 2 == 1 && db % 2 == 1) sign = -sign;
        a = std::move(b);
        b = std::move(r);
    }
}

KPoly interpolate(const std::vector<CycScalar>& points, const std::vector<CycScalar>& values) {
    if (points.size() != values.size()) throw std::invalid_argument("interpolate: size mismatch");
    // Newton's divided differences: deterministic and O(n^2).
    std::size_t n = points.size();
    std::vector<CycScalar> coef = values;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            coef[i] = (coef[i] - coef[i - 1]) / (points[i] - points[i - level]);
    KPoly acc;
    for (std::size_t i = n; i-- > 0;) {
        // acc = acc * (t - points[i]) + coef[i]
        acc = mul(acc, {-points[i], cyc(1)});
        acc = add(acc, {coef[i]});
    }
    return acc;
}

std::string str(const KPoly& p) {
    long d = deg(p);
    if (d < 0) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = d; i >= 0; --i) {
        if (p[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << p[i].str() << ")";
        if (i == 1) os << "*t";
        if (i > 1) os << "*t^" << i;
    }
    return os.str();
}

}  // namespace poly

KPoly min_poly(const Mat& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("min_poly: square matrix required");
    long n = a.rows();
    long len = n * n;
    // Echelonized Krylov rows (flattened powers of a), each stored with the
    // combination that produced it from the original powers.
    struct Row {
        std::vector<CycScalar> vec;
        std::vector<CycScalar> comb;
        long pivot;
    };
    std::vector<Row> rows;
    Mat pw = Mat::identity(n);
    for (long m = 0;; ++m) {
        std::vector<CycScalar> v(len);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) v[i * n + j] = pw.at(i, j);
        std::vector<CycScalar> comb(m + 1);
        comb[m] = cyc(1);
        for (const Row& r : rows) {
            CycScalar c = v[r.pivot];  // copy: the loop below zeroes this slot
            if (c.is_zero()) continue;
            for (long t = 0; t < len; ++t)
                if (!r.vec[t].is_zero()) v[t] -= c * r.vec[t];
            for (std::size_t t = 0; t < r.comb.size(); ++t)
                if (!r.comb[t].is_zero()) comb[t] -= c * r.comb[t];
        }
        long piv = -1;
        for (long t = 0; t < len; ++t)
            if (!v[t].is_zero()) {
                piv = t;
                break;
            }
        if (piv < 0) {
            // a^m is a combination of lower powers: comb encodes the monic
            // minimal polynomial directly.
            return poly::trim(std::move(comb));
        }
        CycScalar inv = v[piv].inverse();
        for (long t = 0; t < len; ++t)
            if (!v[t].is_zero()) v[t] *= inv;
        for (auto& c : comb) c *= inv;
        rows.push_back(Row{std::move(v), std::move(comb), piv});
        pw = mat_mul(pw, a);
    }
}

Mat eval_poly(const KPoly& p, const Mat& a) {
    long n = a.rows();
    Mat acc = Mat::zero(n, n);
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i) {
        acc = mat_mul(acc, a);
        if (!p[i].is_zero()) acc += Mat::identity(n).scaled(p[i]);
    }
    return acc;
}

}  // namespace orbicat
