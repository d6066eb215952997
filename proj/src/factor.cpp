#include "orbicat/factor.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace orbicat {
namespace {

// ---------------------------------------------------------------------------
// Polynomials over F_p (p a small prime), coefficients in [0, p), low to high.
// ---------------------------------------------------------------------------

using ZpPoly = std::vector<long>;

ZpPoly zp_trim(ZpPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

long zp_deg(const ZpPoly& a) { return static_cast<long>(a.size()) - 1; }

long inv_mod(long a, long p) {
    long t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        long q = r / nr;
        t -= q * nt;
        std::swap(t, nt);
        r -= q * nr;
        std::swap(r, nr);
    }
    if (r != 1) throw std::logic_error("inv_mod: not invertible");
    return ((t % p) + p) % p;
}

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    return zp_trim(std::move(out));
}

ZpPoly zp_sub(const ZpPoly& a, const ZpPoly& b, long p) {
    ZpPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        long v = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        out[i] = ((v % p) + p) % p;
    }
    return zp_trim(std::move(out));
}

// a mod b; b nonzero.
ZpPoly zp_mod(ZpPoly a, const ZpPoly& b, long p) {
    a = zp_trim(std::move(a));
    long db = zp_deg(b);
    long linv = inv_mod(b[db], p);
    while (zp_deg(a) >= db) {
        long da = zp_deg(a);
        long f = (a[da] * linv) % p;
        for (long i = 0; i <= db; ++i)
            a[da - db + i] = ((a[da - db + i] - f * b[i]) % p + p) % p;
        a = zp_trim(std::move(a));
    }
    return a;
}

ZpPoly zp_divexact(ZpPoly a, const ZpPoly& b, long p) {
    a = zp_trim(std::move(a));
    long db = zp_deg(b);
    long da = zp_deg(a);
    if (da < db) throw std::logic_error("zp_divexact: degree");
    ZpPoly q(da - db + 1, 0);
    long linv = inv_mod(b[db], p);
    while ((da = zp_deg(a)) >= db) {
        long f = (a[da] * linv) % p;
        q[da - db] = f;
        for (long i = 0; i <= db; ++i)
            a[da - db + i] = ((a[da - db + i] - f * b[i]) % p + p) % p;
        a = zp_trim(std::move(a));
    }
    if (!a.empty()) throw std::logic_error("zp_divexact: remainder");
    return q;
}

ZpPoly zp_monic(ZpPoly a, long p) {
    a = zp_trim(std::move(a));
    if (a.empty()) return a;
    long linv = inv_mod(a.back(), p);
    for (auto& c : a) c = (c * linv) % p;
    return a;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, long p) {
    a = zp_trim(std::move(a));
    b = zp_trim(std::move(b));
    while (!b.empty()) {
        ZpPoly r = zp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return zp_monic(std::move(a), p);
}

ZpPoly zp_derivative(const ZpPoly& a, long p) {
    if (a.size() <= 1) return {};
    ZpPoly out(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        out[i - 1] = (a[i] * (static_cast<long>(i) % p)) % p;
    return zp_trim(std::move(out));
}

// x^p mod f by repeated squaring.
ZpPoly zp_xpow_p(const ZpPoly& f, long p) {
    ZpPoly result = {1};
    ZpPoly base = zp_mod({0, 1}, f, p);
    long e = p;
    while (e > 0) {
        if (e & 1) result = zp_mod(zp_mul(result, base, p), f, p);
        base = zp_mod(zp_mul(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

// Extended Euclid: returns (g, s, t) with s a + t b = g (g monic).
struct ZpExt {
    ZpPoly g, s, t;
};
ZpExt zp_ext_gcd(ZpPoly a, ZpPoly b, long p) {
    ZpPoly s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    a = zp_trim(std::move(a));
    b = zp_trim(std::move(b));
    while (!b.empty()) {
        // a = q b + r
        ZpPoly r = a;
        long db = zp_deg(b);
        long linv = inv_mod(b[db], p);
        ZpPoly q(std::max<long>(zp_deg(r) - db + 1, 1), 0);
        while (zp_deg(r) >= db) {
            long dr = zp_deg(r);
            long f = (r[dr] * linv) % p;
            q[dr - db] = f;
            for (long i = 0; i <= db; ++i)
                r[dr - db + i] = ((r[dr - db + i] - f * b[i]) % p + p) % p;
            r = zp_trim(std::move(r));
        }
        ZpPoly s2 = zp_sub(s0, zp_mul(q, s1, p), p);
        ZpPoly t2 = zp_sub(t0, zp_mul(q, t1, p), p);
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    long linv = inv_mod(a.back(), p);
    for (auto& c : a) c = (c * linv) % p;
    for (auto& c : s0) c = (c * linv) % p;
    for (auto& c : t0) c = (c * linv) % p;
    return {zp_trim(std::move(a)), zp_trim(std::move(s0)), zp_trim(std::move(t0))};
}

// Berlekamp factorization of a monic squarefree f over F_p.
std::vector<ZpPoly> berlekamp(const ZpPoly& f, long p) {
    long d = zp_deg(f);
    if (d <= 1) return {f};
    // Q[i] = coefficient row of x^{i p} mod f.
    std::vector<ZpPoly> rows(d);
    ZpPoly xp = zp_xpow_p(f, p);
    ZpPoly cur = {1};
    for (long i = 0; i < d; ++i) {
        rows[i] = cur;
        cur = zp_mod(zp_mul(cur, xp, p), f, p);
    }
    // Kernel of (Q^T - I): vectors v with v(x)^p = v(x) mod f.
    std::vector<std::vector<long>> m(d, std::vector<long>(d, 0));
    for (long i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) m[j][i] = rows[i][j];
        m[i][i] = ((m[i][i] - 1) % p + p) % p;
    }
    // Gaussian elimination, first-pivot.
    std::vector<long> pivot_col;
    long prow = 0;
    for (long col = 0; col < d && prow < d; ++col) {
        long sel = -1;
        for (long i = prow; i < d; ++i)
            if (m[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(m[sel], m[prow]);
        long linv = inv_mod(m[prow][col], p);
        for (long j = 0; j < d; ++j) m[prow][j] = (m[prow][j] * linv) % p;
        for (long i = 0; i < d; ++i) {
            if (i == prow || m[i][col] == 0) continue;
            long f2 = m[i][col];
            for (long j = 0; j < d; ++j)
                m[i][j] = ((m[i][j] - f2 * m[prow][j]) % p + p) % p;
        }
        pivot_col.push_back(col);
        ++prow;
    }
    std::vector<ZpPoly> basis;
    std::vector<bool> is_pivot(d, false);
    for (long c : pivot_col) is_pivot[c] = true;
    for (long col = 0; col < d; ++col) {
        if (is_pivot[col]) continue;
        std::vector<long> v(d, 0);
        v[col] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            v[pivot_col[r]] = ((-m[r][col]) % p + p) % p;
        basis.push_back(zp_trim(std::move(v)));
    }
    std::size_t r = basis.size();
    if (r == 1) return {f};
    std::vector<ZpPoly> factors = {f};
    for (const ZpPoly& v : basis) {
        if (factors.size() == r) break;
        if (zp_deg(v) < 1) continue;  // the constants split nothing
        for (long c = 0; c < p && factors.size() < r; ++c) {
            ZpPoly vc = v;
            if (vc.empty()) vc.push_back(0);
            vc[0] = ((vc[0] - c) % p + p) % p;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (zp_deg(factors[i]) <= 1) continue;
                ZpPoly g = zp_gcd(factors[i], vc, p);
                long dg = zp_deg(g);
                if (dg > 0 && dg < zp_deg(factors[i])) {
                    ZpPoly rest = zp_divexact(factors[i], g, p);
                    factors[i] = std::move(g);
                    factors.insert(factors.begin() + i + 1, std::move(rest));
                }
            }
        }
    }
    return factors;
}

// ---------------------------------------------------------------------------
// Integer polynomials (mpz coefficients) and Hensel lifting.
// ---------------------------------------------------------------------------

using ZX = std::vector<mpz_class>;

ZX zx_trim(ZX a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

long zx_deg(const ZX& a) { return static_cast<long>(a.size()) - 1; }

mpz_class sym_mod(const mpz_class& x, const mpz_class& m) {
    mpz_class r = x % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

ZX zx_reduce(ZX a, const mpz_class& m) {
    for (auto& c : a) c = sym_mod(c, m);
    return zx_trim(std::move(a));
}

ZX zx_mul(const ZX& a, const ZX& b) {
    if (a.empty() || b.empty()) return {};
    ZX out(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return zx_trim(std::move(out));
}

ZX zx_mulm(const ZX& a, const ZX& b, const mpz_class& m) { return zx_reduce(zx_mul(a, b), m); }

ZX zx_sub(const ZX& a, const ZX& b) {
    ZX out(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] -= b[i];
    }
    return zx_trim(std::move(out));
}

ZX zx_add(const ZX& a, const ZX& b) {
    ZX out(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < a.size()) out[i] += a[i];
        if (i < b.size()) out[i] += b[i];
    }
    return zx_trim(std::move(out));
}

// Division by a monic b over Z/mZ; returns (q, r).
std::pair<ZX, ZX> zx_divmod_monic(ZX a, const ZX& b, const mpz_class& m) {
    a = zx_reduce(std::move(a), m);
    long db = zx_deg(b);
    long da = zx_deg(a);
    if (da < db) return {{}, a};
    ZX q(da - db + 1, mpz_class(0));
    while ((da = zx_deg(a)) >= db) {
        mpz_class f = a[da];
        q[da - db] = f;
        for (long i = 0; i <= db; ++i) a[da - db + i] = sym_mod(a[da - db + i] - f * b[i], m);
        a = zx_trim(std::move(a));
    }
    return {zx_reduce(std::move(q), m), std::move(a)};
}

// Exact division in Z[x] by a monic divisor; nullopt if not divisible.
std::optional<ZX> zx_divexact_monic(ZX a, const ZX& b) {
    long db = zx_deg(b);
    long da = zx_deg(a);
    if (da < db) return zx_trim(std::move(a)).empty() ? std::optional<ZX>(ZX{}) : std::nullopt;
    ZX q(da - db + 1, mpz_class(0));
    while ((da = zx_deg(a)) >= db) {
        mpz_class f = a[da];
        q[da - db] = f;
        for (long i = 0; i <= db; ++i) a[da - db + i] -= f * b[i];
        a = zx_trim(std::move(a));
    }
    if (!a.empty()) return std::nullopt;
    return q;
}

ZX zp_to_zx(const ZpPoly& a) {
    ZX out;
    out.reserve(a.size());
    for (long c : a) out.emplace_back(c);
    return out;
}

ZpPoly zx_to_zp(const ZX& a, long p) {
    ZpPoly out;
    out.reserve(a.size());
    for (const auto& c : a) {
        mpz_class r = c % p;
        if (r < 0) r += p;
        out.push_back(r.get_si());
    }
    return zp_trim(std::move(out));
}

// One quadratic Hensel step: from f = g h (mod m), s g + t h = 1 (mod m),
// to the same relations mod m^2.  All of f, g, h monic.
void hensel_step(const ZX& f, ZX& g, ZX& h, ZX& s, ZX& t, const mpz_class& m) {
    mpz_class m2 = m * m;
    ZX e = zx_reduce(zx_sub(f, zx_mul(g, h)), m2);
    ZX se = zx_mulm(s, e, m2);
    auto [q, r] = zx_divmod_monic(se, h, m2);
    // g' = g + (t e + q g), h' = h + r.
    ZX u = zx_reduce(zx_add(zx_mul(t, e), zx_mul(q, g)), m2);
    ZX g1 = zx_reduce(zx_add(g, u), m2);
    ZX h1 = zx_reduce(zx_add(h, r), m2);
    // Lift the Bezout pair: b = s g1 + t h1 - 1 (mod m^2).
    ZX b = zx_reduce(zx_sub(zx_add(zx_mul(s, g1), zx_mul(t, h1)), ZX{mpz_class(1)}), m2);
    ZX sb = zx_mulm(s, b, m2);
    auto [c, d] = zx_divmod_monic(sb, h1, m2);
    ZX s1 = zx_reduce(zx_sub(s, d), m2);
    ZX t1 = zx_reduce(zx_sub(zx_sub(t, zx_mulm(t, b, m2)), zx_mulm(c, g1, m2)), m2);
    g = std::move(g1);
    h = std::move(h1);
    s = std::move(s1);
    t = std::move(t1);
}

// Lift the factorization f = prod(parts) (mod p) to mod p^target (f monic,
// squarefree mod p).  Returns the lifted factors, symmetric representatives.
std::vector<ZX> hensel_lift_list(const ZX& f, const std::vector<ZpPoly>& parts, long p,
                                 const mpz_class& target_modulus) {
    if (parts.size() == 1) return {zx_reduce(f, target_modulus)};
    std::size_t half = parts.size() / 2;
    ZpPoly gp = {1}, hp = {1};
    for (std::size_t i = 0; i < half; ++i) gp = zp_mul(gp, parts[i], p);
    for (std::size_t i = half; i < parts.size(); ++i) hp = zp_mul(hp, parts[i], p);
    ZpExt ext = zp_ext_gcd(gp, hp, p);
    if (zp_deg(ext.g) != 0) throw std::logic_error("hensel: factors not coprime");
    ZX g = zp_to_zx(gp), h = zp_to_zx(hp);
    ZX s = zp_to_zx(ext.s), t = zp_to_zx(ext.t);
    mpz_class m(p);
    while (m < target_modulus) {
        hensel_step(f, g, h, s, t, m);
        m = m * m;
    }
    g = zx_reduce(std::move(g), target_modulus);
    h = zx_reduce(std::move(h), target_modulus);
    std::vector<ZpPoly> left(parts.begin(), parts.begin() + half);
    std::vector<ZpPoly> right(parts.begin() + half, parts.end());
    std::vector<ZX> out = hensel_lift_list(g, left, p, target_modulus);
    std::vector<ZX> more = hensel_lift_list(h, right, p, target_modulus);
    out.insert(out.end(), more.begin(), more.end());
    return out;
}

// ---------------------------------------------------------------------------
// Zassenhaus: monic squarefree integer polynomials.
// ---------------------------------------------------------------------------

std::vector<long> small_primes() {
    static std::vector<long> primes = [] {
        std::vector<long> out;
        std::vector<bool> sieve(2000, true);
        for (long i = 2; i < 2000; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (long j = 2 * i; j < 2000; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

// Coefficient bound for monic factors (Landau-Mignotte style, deliberately
// generous): 2^deg * (1 + sum |c_i|).
mpz_class factor_bound(const ZX& f) {
    mpz_class s(1);
    for (const auto& c : f) s += abs(c);
    mpz_class b = s;
    for (long i = 0; i < zx_deg(f); ++i) b *= 2;
    return b;
}

std::vector<ZX> factor_monic_squarefree_zx(ZX f) {
    long d = zx_deg(f);
    if (d <= 0) return {};
    if (d == 1) return {f};
    // Pick a prime keeping f squarefree mod p; among the first few usable
    // primes take the one with the fewest modular factors.
    std::vector<ZpPoly> best_parts;
    long best_p = 0;
    int tried = 0;
    for (long p : small_primes()) {
        if (p == 2) continue;  // odd primes keep the symmetric range simple
        ZpPoly fp = zx_to_zp(f, p);
        if (zp_deg(fp) != d) continue;
        ZpPoly g = zp_gcd(fp, zp_derivative(fp, p), p);
        if (zp_deg(g) != 0) continue;
        std::vector<ZpPoly> parts = berlekamp(zp_monic(fp, p), p);
        if (parts.size() == 1) return {f};  // irreducible already mod p
        if (best_p == 0 || parts.size() < best_parts.size()) {
            best_p = p;
            best_parts = std::move(parts);
        }
        if (++tried >= 3) break;
    }
    if (best_p == 0) throw std::logic_error("factor: no usable prime found");
    long p = best_p;
    std::sort(best_parts.begin(), best_parts.end(), [](const ZpPoly& a, const ZpPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });

    mpz_class bound = 2 * factor_bound(f) + 1;
    mpz_class modulus(p);
    while (modulus < bound) modulus *= p;
    std::vector<ZX> lifted = hensel_lift_list(zx_reduce(f, modulus), best_parts, p, modulus);

    std::vector<ZX> out;
    std::vector<int> alive(lifted.size(), 1);
    long alive_count = static_cast<long>(lifted.size());
    // Combine modular factors in subsets of increasing size.
    for (long take = 1; 2 * take <= alive_count;) {
        // Enumerate index subsets of size `take` over the alive factors.
        std::vector<long> idx;
        for (std::size_t i = 0; i < lifted.size(); ++i)
            if (alive[i]) idx.push_back(static_cast<long>(i));
        std::vector<long> comb(take);
        std::iota(comb.begin(), comb.end(), 0);
        bool found = false;
        while (true) {
            ZX cand = {mpz_class(1)};
            for (long c : comb) cand = zx_mulm(cand, lifted[idx[c]], modulus);
            cand = zx_reduce(std::move(cand), modulus);
            if (auto q = zx_divexact_monic(f, cand)) {
                out.push_back(cand);
                f = std::move(*q);
                for (long c : comb) alive[idx[c]] = 0;
                alive_count -= take;
                found = true;
                break;
            }
            // next combination
            long i = take - 1;
            while (i >= 0 && comb[i] == static_cast<long>(idx.size()) - take + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (long j = i + 1; j < take; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (!found) ++take;
    }
    if (zx_deg(f) > 0) out.push_back(f);
    return out;
}

// ---------------------------------------------------------------------------
// Rational (conductor-1) layer.
// ---------------------------------------------------------------------------

Rational coeff_rational(const CycScalar& c) {
    if (!c.is_rational()) throw std::logic_error("expected rational coefficient");
    return c.rational_value();
}

// Factor a monic squarefree polynomial with rational coefficients.
std::vector<KPoly> factor_monic_squarefree_q(const KPoly& f) {
    long d = poly::deg(f);
    if (d <= 0) return {};
    if (d == 1) return {f};
    // Clear denominators monically: F(x) = L^d f(x/L) has integer coefficients.
    mpz_class L(1);
    for (const auto& c : f) {
        Rational q = coeff_rational(c);
        mpz_class den = q.get_den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), L.get_mpz_t(), den.get_mpz_t());
        L = L / g * den;
    }
    ZX F(d + 1, mpz_class(0));
    mpz_class scale(1);
    for (long i = d; i >= 0; --i) {
        Rational q = coeff_rational(f[i]);
        mpz_class v = q.get_num() * (scale / q.get_den());
        F[i] = v;
        scale *= L;
    }
    std::vector<ZX> zfactors = factor_monic_squarefree_zx(std::move(F));
    std::vector<KPoly> out;
    for (const ZX& g : zfactors) {
        // Map back: ghat(x) = g(L x) / L^deg g.
        long dg = zx_deg(g);
        mpz_class lpow_dg(1);
        for (long j = 0; j < dg; ++j) lpow_dg *= L;
        KPoly gh(dg + 1);
        mpz_class lpow(1);  // L^i at index i
        for (long i = 0; i <= dg; ++i) {
            Rational q(g[i] * lpow, lpow_dg);
            q.canonicalize();
            gh[i] = CycScalar(q);
            lpow *= L;
        }
        out.push_back(poly::monic(gh));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Trager's method over a cyclotomic field.
// ---------------------------------------------------------------------------

std::vector<KPoly> factor_monic_squarefree_k(const KPoly& f, const CycField* field) {
    long d = poly::deg(f);
    if (d <= 0) return {};
    if (d == 1) return {f};
    long n = field->conductor();
    long m = field->degree();
    KPoly phi;  // the conductor's cyclotomic polynomial, over Q
    for (const auto& c : field->cyclotomic_poly()) phi.emplace_back(Rational(c));
    CycScalar z = CycScalar::root_of_unity(n);

    for (long s = 0;; ++s) {
        if (s > 100) throw std::logic_error("factor: no squarefree norm shift found");
        // g(t) = f(t - s zeta); N = product of the Galois conjugates of g.
        KPoly g = poly::compose_linear(f, cyc(1), cyc(-s) * z);
        // Evaluate the norm at d*m + 1 rational points and interpolate.
        long npts = d * m + 1;
        std::vector<CycScalar> pts(npts), vals(npts);
        for (long j = 0; j < npts; ++j) {
            pts[j] = cyc(j);
            // g(j) is one field scalar; its power-basis coordinates are the
            // coefficients of a polynomial in z, and the norm value at t = j
            // is the resultant of that polynomial with the conductor poly.
            CycScalar gval = poly::eval(g, cyc(j)).lift_to(field);
            KPoly bz;
            for (const auto& q : gval.coeffs()) bz.emplace_back(q);
            vals[j] = poly::resultant(phi, poly::trim(bz));
        }
        KPoly norm = poly::interpolate(pts, vals);
        if (poly::deg(norm) != d * m) continue;  // leading conjugate collision
        norm = poly::monic(norm);
        if (poly::deg(poly::gcd(norm, poly::derivative(norm))) != 0) continue;
        std::vector<KPoly> nfactors = factor_monic_squarefree_q(norm);
        if (nfactors.size() == 1) return {f};
        std::vector<KPoly> out;
        KPoly check = {cyc(1)};
        for (const KPoly& ni : nfactors) {
            KPoly shifted = poly::compose_linear(ni, cyc(1), cyc(s) * z);
            KPoly fi = poly::gcd(f, shifted);
            if (poly::deg(fi) > 0) {
                check = poly::mul(check, fi);
                out.push_back(std::move(fi));
            }
        }
        if (!poly::is_zero(poly::sub(check, f)))
            throw std::logic_error("factor: norm factors do not recombine");
        return out;
    }
}

const CycField* common_field(const KPoly& f) {
    long n = 1;
    for (const auto& c : f) n = std::lcm(n, c.field()->conductor());
    return CycField::of(n);
}

}  // namespace

std::vector<KPoly> factor_poly(const KPoly& f0) { return factor_poly(f0, common_field(f0)); }

std::vector<KPoly> factor_poly(const KPoly& f0, const CycField* ambient) {
    KPoly f = poly::trim(f0);
    if (poly::deg(f) <= 0) return {};
    f = poly::monic(f);
    const CycField* field = CycField::of(std::lcm(ambient->conductor(), common_field(f)->conductor()));
    for (auto& c : f) c = c.lift_to(field);
    // Squarefree part first; multiplicities recovered at the end.
    KPoly sf = f;
    KPoly g = poly::gcd(f, poly::derivative(f));
    if (poly::deg(g) > 0) sf = poly::divide_exact(f, g);
    std::vector<KPoly> irr = field->conductor() == 1 ? factor_monic_squarefree_q(sf)
                                                     : factor_monic_squarefree_k(sf, field);
    std::sort(irr.begin(), irr.end(), [](const KPoly& a, const KPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        for (std::size_t i = a.size(); i-- > 0;) {
            int c = CycScalar::compare(a[i], b[i]);
            if (c != 0) return c < 0;
        }
        return false;
    });
    std::vector<KPoly> out;
    for (const KPoly& q : irr) {
        KPoly rest = f;
        while (true) {
            auto [quo, rem] = poly::divmod(rest, q);
            if (!poly::is_zero(rem)) break;
            out.push_back(q);
            rest = quo;
            f = rest;
        }
    }
    return out;
}

std::vector<CycScalar> roots_in_field(const KPoly& f) {
    return roots_in_field(f, common_field(f));
}

std::vector<CycScalar> roots_in_field(const KPoly& f, const CycField* ambient) {
    std::vector<CycScalar> roots;
    for (const KPoly& q : factor_poly(f, ambient)) {
        if (poly::deg(q) != 1) continue;
        CycScalar r = -q[0];
        bool seen = false;
        for (const auto& x : roots)
            if (x == r) {
                seen = true;
                break;
            }
        if (!seen) roots.push_back(r);
    }
    return roots;
}

}  // namespace orbicat
