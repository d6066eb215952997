#include "orbicat/hopf.hpp"

#include <sstream>
#include <stdexcept>

#include "orbicat/split.hpp"

namespace orbicat {

Mat HopfAlgebra::left_mult(long i) const {
    Mat l(dim, dim);
    for (long k = 0; k < dim; ++k)
        for (long j = 0; j < dim; ++j) l.at(k, j) = m.at(k, i * dim + j);
    return l;
}

Mat HopfAlgebra::basis_product(long i, long j) const {
    Mat v(dim, 1);
    for (long k = 0; k < dim; ++k) v.at(k, 0) = m.at(k, i * dim + j);
    return v;
}

Mat HopfAlgebra::multiply(const Mat& a, const Mat& b) const {
    Mat out(dim, 1);
    for (long i = 0; i < dim; ++i) {
        if (a.at(i, 0).is_zero()) continue;
        for (long j = 0; j < dim; ++j) {
            if (b.at(j, 0).is_zero()) continue;
            CycScalar c = a.at(i, 0) * b.at(j, 0);
            for (long k = 0; k < dim; ++k) {
                const CycScalar& mk = m.at(k, i * dim + j);
                if (!mk.is_zero()) out.at(k, 0) += c * mk;
            }
        }
    }
    return out;
}

namespace {

// Product in A (x) A of two coordinate vectors (dim^2 x 1 each).
Mat tensor_sq_multiply(const HopfAlgebra& h, const Mat& p, const Mat& q) {
    long n = h.dim;
    Mat out(n * n, 1);
    for (long ab = 0; ab < n * n; ++ab) {
        if (p.at(ab, 0).is_zero()) continue;
        long a = ab / n, b = ab % n;
        for (long cd = 0; cd < n * n; ++cd) {
            if (q.at(cd, 0).is_zero()) continue;
            long c = cd / n, d = cd % n;
            CycScalar coeff = p.at(ab, 0) * q.at(cd, 0);
            // (b_a (x) b_b)(b_c (x) b_d) = (b_a b_c) (x) (b_b b_d)
            for (long x = 0; x < n; ++x) {
                const CycScalar& mx = h.m.at(x, a * n + c);
                if (mx.is_zero()) continue;
                for (long y = 0; y < n; ++y) {
                    const CycScalar& my = h.m.at(y, b * n + d);
                    if (my.is_zero()) continue;
                    out.at(x * n + y, 0) += coeff * mx * my;
                }
            }
        }
    }
    return out;
}

Mat coproduct_column(const HopfAlgebra& h, long i) {
    Mat v(h.dim * h.dim, 1);
    for (long t = 0; t < h.dim * h.dim; ++t) v.at(t, 0) = h.cm.at(t, i);
    return v;
}

// Coproduct of a coordinate vector.
Mat coproduct_vec(const HopfAlgebra& h, const Mat& v) { return mat_mul(h.cm, v); }

std::string witness_pair(long i, long j) {
    std::ostringstream os;
    os << "basis (" << i << ", " << j << ")";
    return os.str();
}

std::string witness_one(long i) {
    std::ostringstream os;
    os << "basis " << i;
    return os.str();
}

}  // namespace

std::vector<AxiomCheck> hopf_axioms(const HopfAlgebra& h) {
    long n = h.dim;
    std::vector<AxiomCheck> out;
    auto record = [&](const std::string& name, bool ok, const std::string& wit) {
        out.push_back(AxiomCheck{name, ok, ok ? "" : wit});
    };

    // m(m (x) id) = m(id (x) m)
    {
        bool ok = true;
        std::string wit;
        for (long i = 0; i < n && ok; ++i)
            for (long j = 0; j < n && ok; ++j)
                for (long k = 0; k < n && ok; ++k) {
                    Mat left = h.multiply(h.basis_product(i, j), Mat::unit(n, 1, k, 0));
                    Mat right = h.multiply(Mat::unit(n, 1, i, 0), h.basis_product(j, k));
                    if (left != right) {
                        ok = false;
                        std::ostringstream os;
                        os << "basis (" << i << ", " << j << ", " << k << ")";
                        wit = os.str();
                    }
                }
        record("associativity", ok, wit);
    }
    // 1 a = a = a 1
    {
        bool ok = true;
        std::string wit;
        for (long i = 0; i < n && ok; ++i) {
            Mat e = Mat::unit(n, 1, i, 0);
            if (h.multiply(h.u, e) != e || h.multiply(e, h.u) != e) {
                ok = false;
                wit = witness_one(i);
            }
        }
        record("unit", ok, wit);
    }
    // (cm (x) id) cm = (id (x) cm) cm
    {
        bool ok = true;
        std::string wit;
        for (long i = 0; i < n && ok; ++i) {
            std::vector<CycScalar> lhs(n * n * n), rhs(n * n * n);
            Mat d = coproduct_column(h, i);
            for (long ab = 0; ab < n * n; ++ab) {
                if (d.at(ab, 0).is_zero()) continue;
                long a = ab / n, b = ab % n;
                Mat da = coproduct_column(h, a);
                for (long cd = 0; cd < n * n; ++cd)
                    if (!da.at(cd, 0).is_zero())
                        lhs[cd * n + b] += d.at(ab, 0) * da.at(cd, 0);
                Mat db = coproduct_column(h, b);
                for (long cd = 0; cd < n * n; ++cd)
                    if (!db.at(cd, 0).is_zero())
                        rhs[a * n * n + cd] += d.at(ab, 0) * db.at(cd, 0);
            }
            for (long t = 0; t < n * n * n && ok; ++t)
                if (!(lhs[t] - rhs[t]).is_zero()) {
                    ok = false;
                    wit = witness_one(i);
                }
        }
        record("coassociativity", ok, wit);
    }
    // (cu (x) id) cm = id = (id (x) cu) cm
    {
        bool ok = true;
        std::string wit;
        for (long i = 0; i < n && ok; ++i) {
            Mat d = coproduct_column(h, i);
            Mat left(n, 1), right(n, 1);
            for (long ab = 0; ab < n * n; ++ab) {
                if (d.at(ab, 0).is_zero()) continue;
                long a = ab / n, b = ab % n;
                left.at(b, 0) += d.at(ab, 0) * h.cu.at(0, a);
                right.at(a, 0) += d.at(ab, 0) * h.cu.at(0, b);
            }
            if (left != Mat::unit(n, 1, i, 0) || right != Mat::unit(n, 1, i, 0)) {
                ok = false;
                wit = witness_one(i);
            }
        }
        record("counit", ok, wit);
    }
    // cm(a b) = cm(a) cm(b)
    {
        bool ok = true;
        std::string wit;
        for (long i = 0; i < n && ok; ++i)
            for (long j = 0; j < n && ok; ++j) {
                Mat lhs = coproduct_vec(h, h.basis_product(i, j));
                Mat rhs = tensor_sq_multiply(h, coproduct_column(h, i), coproduct_column(h, j));
                if (lhs != rhs) {
                    ok = false;
                    wit = witness_pair(i, j);
                }
            }
        record("coproduct-multiplicative", ok, wit);
    }
    // cu(a b) = cu(a) cu(b); cu(1) = 1; cm(1) = 1 (x) 1
    {
        bool ok = true;
        std::string wit;
        for (long i = 0; i < n && ok; ++i)
            for (long j = 0; j < n && ok; ++j) {
                Mat p = h.basis_product(i, j);
                CycScalar lhs;
                for (long k = 0; k < n; ++k) lhs += h.cu.at(0, k) * p.at(k, 0);
                if (!(lhs - h.cu.at(0, i) * h.cu.at(0, j)).is_zero()) {
                    ok = false;
                    wit = witness_pair(i, j);
                }
            }
        record("counit-multiplicative", ok, wit);
        CycScalar eu;
        for (long k = 0; k < n; ++k) eu += h.cu.at(0, k) * h.u.at(k, 0);
        record("counit-unit", (eu - cyc(1)).is_zero(), "counit of the unit");
        Mat cmu = coproduct_vec(h, h.u);
        Mat uu(n * n, 1);
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b) uu.at(a * n + b, 0) = h.u.at(a, 0) * h.u.at(b, 0);
        record("coproduct-unit", cmu == uu, "coproduct of the unit");
    }
    // sum S(a_(1)) a_(2) = cu(a) 1 = sum a_(1) S(a_(2))
    {
        bool ok_l = true, ok_r = true;
        std::string wit_l, wit_r;
        for (long i = 0; i < n; ++i) {
            Mat d = coproduct_column(h, i);
            Mat lhs(n, 1), rhs(n, 1);
            for (long ab = 0; ab < n * n; ++ab) {
                if (d.at(ab, 0).is_zero()) continue;
                long a = ab / n, b = ab % n;
                Mat sa(n, 1), sb(n, 1);
                for (long k = 0; k < n; ++k) {
                    sa.at(k, 0) = h.s.at(k, a);
                    sb.at(k, 0) = h.s.at(k, b);
                }
                lhs += h.multiply(sa, Mat::unit(n, 1, b, 0)).scaled(d.at(ab, 0));
                rhs += h.multiply(Mat::unit(n, 1, a, 0), sb).scaled(d.at(ab, 0));
            }
            Mat target = h.u.scaled(h.cu.at(0, i));
            if (ok_l && lhs != target) {
                ok_l = false;
                wit_l = witness_one(i);
            }
            if (ok_r && rhs != target) {
                ok_r = false;
                wit_r = witness_one(i);
            }
        }
        record("antipode-left", ok_l, wit_l);
        record("antipode-right", ok_r, wit_r);
    }
    return out;
}

bool hopf_ok(const HopfAlgebra& h) {
    for (const auto& a : hopf_axioms(h))
        if (!a.ok) return false;
    return true;
}

std::optional<Mat> integral_element(const HopfAlgebra& h) {
    long n = h.dim;
    // Left-integral space: a t = cu(a) t for every basis a.
    Mat sys(n * n, n);
    for (long i = 0; i < n; ++i) {
        Mat li = h.left_mult(i);
        for (long r = 0; r < n; ++r)
            for (long c = 0; c < n; ++c) {
                CycScalar v = li.at(r, c);
                if (r == c) v -= h.cu.at(0, i);
                sys.at(i * n + r, c) = v;
            }
    }
    Mat k = kernel_basis(sys);
    if (k.cols() != 1) return std::nullopt;
    Mat t(n, 1);
    for (long i = 0; i < n; ++i) t.at(i, 0) = k.at(i, 0);
    CycScalar eps_t;
    for (long i = 0; i < n; ++i) eps_t += h.cu.at(0, i) * t.at(i, 0);
    if (eps_t.is_zero()) return std::nullopt;  // not semisimple
    t = t.scaled(eps_t.inverse());
    // Two-sidedness check: t a = cu(a) t as well.
    for (long i = 0; i < n; ++i) {
        Mat e = Mat::unit(n, 1, i, 0);
        if (h.multiply(t, e) != t.scaled(h.cu.at(0, i))) return std::nullopt;
    }
    return t;
}

std::optional<Mat> solve_antipode(const HopfAlgebra& h) {
    long n = h.dim;
    // Unknown S as n^2 entries (column a holds S(b_a)); equations from the
    // left antipode identity on every basis element.
    Mat sys(n * n, n * n);
    Mat rhs(n * n, 1);
    for (long i = 0; i < n; ++i) {
        Mat d(n * n, 1);
        for (long t = 0; t < n * n; ++t) d.at(t, 0) = h.cm.at(t, i);
        // sum_{(a,b)} d_ab * R_{b_b} S(b_a) = cu(b_i) 1
        for (long ab = 0; ab < n * n; ++ab) {
            if (d.at(ab, 0).is_zero()) continue;
            long a = ab / n, b = ab % n;
            for (long x = 0; x < n; ++x)
                for (long k = 0; k < n; ++k) {
                    const CycScalar& mk = h.m.at(k, x * n + b);
                    if (!mk.is_zero()) sys.at(i * n + k, x * n + a) += d.at(ab, 0) * mk;
                }
        }
        for (long k = 0; k < n; ++k) rhs.at(i * n + k, 0) = h.u.at(k, 0) * h.cu.at(0, i);
    }
    Mat x;
    if (!solve(sys, rhs, x)) return std::nullopt;
    if (kernel_basis(sys).cols() != 0) return std::nullopt;  // not unique
    Mat s(n, n);
    for (long r = 0; r < n; ++r)
        for (long a = 0; a < n; ++a) s.at(r, a) = x.at(r * n + a, 0);
    // Verify the right identity too before accepting.
    HopfAlgebra trial = h;
    trial.s = s;
    for (const auto& ax : hopf_axioms(trial))
        if ((ax.name == "antipode-left" || ax.name == "antipode-right") && !ax.ok)
            return std::nullopt;
    return s;
}

// ---------------------------------------------------------------------------
// Presets
// ---------------------------------------------------------------------------

namespace {

const CycField* field_for_exponent(long e) { return CycField::of(e <= 2 ? 1 : e); }

}  // namespace

HopfAlgebra group_hopf(const FiniteGroup& g) {
    long n = g.order();
    HopfAlgebra h;
    h.name = "group:" + g.name;
    h.dim = n;
    h.field = field_for_exponent(g.exponent());
    h.labels = g.element_names;
    h.m = Mat(n, n * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) h.m.at(g.table[i][j], i * n + j) = cyc(1);
    h.u = Mat::unit(n, 1, 0, 0);
    h.cm = Mat(n * n, n);
    for (long i = 0; i < n; ++i) h.cm.at(i * n + i, i) = cyc(1);
    h.cu = Mat(1, n);
    for (long i = 0; i < n; ++i) h.cu.at(0, i) = cyc(1);
    h.s = Mat(n, n);
    for (long i = 0; i < n; ++i) h.s.at(g.inverse(i), i) = cyc(1);
    return h;
}

HopfAlgebra function_hopf(const FiniteGroup& g) {
    long n = g.order();
    HopfAlgebra h;
    h.name = "function:" + g.name;
    h.dim = n;
    h.field = field_for_exponent(g.exponent());
    for (const auto& s : g.element_names) h.labels.push_back("d_" + s);
    h.m = Mat(n, n * n);
    for (long i = 0; i < n; ++i) h.m.at(i, i * n + i) = cyc(1);
    h.u = Mat(n, 1);
    for (long i = 0; i < n; ++i) h.u.at(i, 0) = cyc(1);
    h.cm = Mat(n * n, n);
    for (long a = 0; a < n; ++a)
        for (long b = 0; b < n; ++b) h.cm.at(a * n + b, g.table[a][b]) = cyc(1);
    h.cu = Mat(1, n);
    h.cu.at(0, 0) = cyc(1);
    h.s = Mat(n, n);
    for (long i = 0; i < n; ++i) h.s.at(g.inverse(i), i) = cyc(1);
    return h;
}

HopfAlgebra dual_hopf(const HopfAlgebra& h) {
    HopfAlgebra d;
    d.name = h.name + "^";
    d.dim = h.dim;
    d.field = h.field;
    for (const auto& s : h.labels) d.labels.push_back(s + "*");
    d.m = h.cm.transpose();
    d.u = h.cu.transpose();
    d.cm = h.m.transpose();
    d.cu = h.u.transpose();
    d.s = h.s.transpose();
    return d;
}

HopfAlgebra kac_paljutkin8() {
    // Basis x^a y^b z^c at index a + 2b + 4c, with x^2 = y^2 = 1, x y = y x,
    // z x = y z, z y = x z, and z^2 = (1 + x + y - x y) / 2.
    HopfAlgebra h;
    h.name = "kp8";
    h.dim = 8;
    h.field = CycField::of(8);
    h.labels = {"1", "x", "y", "xy", "z", "xz", "yz", "xyz"};
    auto idx = [](long a, long b, long c) { return a + 2 * b + 4 * c; };
    h.m = Mat(8, 64);
    for (long a1 = 0; a1 < 2; ++a1)
        for (long b1 = 0; b1 < 2; ++b1)
            for (long c1 = 0; c1 < 2; ++c1)
                for (long a2 = 0; a2 < 2; ++a2)
                    for (long b2 = 0; b2 < 2; ++b2)
                        for (long c2 = 0; c2 < 2; ++c2) {
                            long col = idx(a1, b1, c1) * 8 + idx(a2, b2, c2);
                            // commuting x^{a2} y^{b2} past z^{c1} swaps the two
                            long a2p = c1 ? b2 : a2;
                            long b2p = c1 ? a2 : b2;
                            long a = (a1 + a2p) % 2;
                            long b = (b1 + b2p) % 2;
                            long c = c1 + c2;
                            if (c < 2) {
                                h.m.at(idx(a, b, c), col) = cyc(1);
                            } else {
                                // x^a y^b z^2 = x^a y^b (1 + x + y - x y)/2
                                h.m.at(idx(a, b, 0), col) += cyc(1, 2);
                                h.m.at(idx((a + 1) % 2, b, 0), col) += cyc(1, 2);
                                h.m.at(idx(a, (b + 1) % 2, 0), col) += cyc(1, 2);
                                h.m.at(idx((a + 1) % 2, (b + 1) % 2, 0), col) -= cyc(1, 2);
                            }
                        }
    h.u = Mat::unit(8, 1, 0, 0);
    // Coproduct: x and y are group-like; Delta(z) is the twisted square
    // (1 (x) 1 + 1 (x) x + y (x) 1 - y (x) x) (z (x) z) / 2.
    Mat dz(64, 1);
    {
        auto put = [&](long u1, long u2, const CycScalar& coeff) {
            dz.at(u1 * 8 + u2, 0) += coeff;
        };
        long z = idx(0, 0, 1), xz = idx(1, 0, 1), yz = idx(0, 1, 1);
        put(z, z, cyc(1, 2));
        put(z, xz, cyc(1, 2));
        put(yz, z, cyc(1, 2));
        put(yz, xz, cyc(-1, 2));
    }
    h.cm = Mat(64, 8);
    for (long a = 0; a < 2; ++a)
        for (long b = 0; b < 2; ++b)
            for (long c = 0; c < 2; ++c) {
                // Delta(x^a y^b z^c) = (x^a y^b (x) x^a y^b) Delta(z)^c
                Mat base(64, 1);
                base.at(idx(a, b, 0) * 8 + idx(a, b, 0), 0) = cyc(1);
                Mat d = c ? tensor_sq_multiply(h, base, dz) : base;
                for (long t = 0; t < 64; ++t) h.cm.at(t, idx(a, b, c)) = d.at(t, 0);
            }
    h.cu = Mat(1, 8);
    for (long i = 0; i < 8; ++i) h.cu.at(0, i) = cyc(1);
    auto s = solve_antipode(h);
    if (!s) throw std::logic_error("kac_paljutkin8: antipode solve failed");
    h.s = *s;
    return h;
}

std::optional<HopfAlgebra> hopf_preset(const std::string& name) {
    auto group_by_name = [](const std::string& g) -> std::optional<FiniteGroup> {
        if (g == "trivial" || g == "Z1") return trivial_group();
        if (g == "Z2xZ2") return klein_four_group();
        if (g == "S3") return symmetric_group_3();
        if (g == "D4") return dihedral_group_4();
        if (g == "Q8") return quaternion_group_8();
        if (g.size() >= 2 && g[0] == 'Z') {
            long n = 0;
            for (std::size_t i = 1; i < g.size(); ++i) {
                if (g[i] < '0' || g[i] > '9') return std::nullopt;
                n = n * 10 + (g[i] - '0');
            }
            if (n >= 1 && n <= 12) return cyclic_group(n);
        }
        return std::nullopt;
    };
    if (name == "kp8") return kac_paljutkin8();
    if (name == "trivial") return group_hopf(trivial_group());
    auto colon = name.find(':');
    if (colon == std::string::npos) return std::nullopt;
    std::string kind = name.substr(0, colon);
    auto g = group_by_name(name.substr(colon + 1));
    if (!g) return std::nullopt;
    if (kind == "group") return group_hopf(*g);
    if (kind == "function") return function_hopf(*g);
    return std::nullopt;
}

std::vector<std::string> hopf_preset_names() {
    std::vector<std::string> out = {"trivial"};
    std::vector<std::string> groups = {"trivial", "Z2", "Z3", "Z4", "Z5", "Z6", "Z7",
                                       "Z8", "Z9", "Z10", "Z11", "Z12", "Z2xZ2", "S3",
                                       "D4", "Q8"};
    for (const auto& g : groups) out.push_back("group:" + g);
    for (const auto& g : groups) out.push_back("function:" + g);
    out.push_back("kp8");
    return out;
}

}  // namespace orbicat
