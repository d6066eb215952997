#include "orbicat/irreps.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbicat {

Mat rho_of_vec(const Irrep& v, const Mat& coords) {
    Mat out = Mat::zero(v.dim, v.dim);
    for (long t = 0; t < coords.rows(); ++t)
        if (!coords.at(t, 0).is_zero()) out += v.action[t].scaled(coords.at(t, 0));
    return out;
}

namespace {

bool is_trivial_irrep(const HopfAlgebra& h, const Irrep& v) {
    if (v.dim != 1) return false;
    for (long t = 0; t < h.dim; ++t)
        if (v.action[t].at(0, 0) != h.cu.at(0, t)) return false;
    return true;
}

// Character-lexicographic order after dimension; the trivial module first.
bool irrep_less(const HopfAlgebra& h, const Irrep& a, const Irrep& b) {
    bool ta = is_trivial_irrep(h, a), tb = is_trivial_irrep(h, b);
    if (ta != tb) return ta;
    if (a.dim != b.dim) return a.dim < b.dim;
    for (std::size_t t = 0; t < a.character.size(); ++t) {
        int c = CycScalar::compare(a.character[t], b.character[t]);
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace

RepTheory rep_theory(const HopfAlgebra& h) {
    long n = h.dim;
    RepTheory rt;
    rt.hopf = h;

    ActionModule regular;
    for (long i = 0; i < n; ++i) regular.action.push_back(h.left_mult(i));
    std::vector<SubmodulePiece> pieces = decompose_module(regular, h.field);

    // One representative per isomorphism class, in first-seen order.
    std::vector<ActionModule> reps;
    for (const auto& p : pieces) {
        bool seen = false;
        for (const auto& r : reps)
            if (modules_isomorphic(r, p.mod)) {
                seen = true;
                break;
            }
        if (!seen) reps.push_back(p.mod);
    }

    for (const auto& r : reps) {
        Irrep v;
        v.dim = r.dim();
        v.action = r.action;
        for (const Mat& a : r.action) v.character.push_back(trace(a));
        rt.irreps.push_back(std::move(v));
    }
    std::sort(rt.irreps.begin(), rt.irreps.end(),
              [&](const Irrep& a, const Irrep& b) { return irrep_less(h, a, b); });
    for (std::size_t i = 0; i < rt.irreps.size(); ++i)
        rt.irreps[i].label = "V" + std::to_string(i);
    if (rt.irreps.empty() || !is_trivial_irrep(h, rt.irreps[0]))
        throw std::runtime_error("rep_theory: trivial module not found");

    long total = 0;
    for (const auto& v : rt.irreps) total += v.dim * v.dim;
    if (total != n)
        throw std::runtime_error("rep_theory: squared dimensions do not sum to the algebra size");

    // Fourier map: coordinates -> blocks of all rho_V, one invertible n x n.
    Mat fourier(n, n);
    {
        long row = 0;
        for (const auto& v : rt.irreps)
            for (long k = 0; k < v.dim; ++k)
                for (long l = 0; l < v.dim; ++l) {
                    for (long t = 0; t < n; ++t) fourier.at(row, t) = v.action[t].at(k, l);
                    ++row;
                }
    }
    Mat fourier_inv = inverse(fourier);

    long row_base = 0;
    for (const auto& v : rt.irreps) {
        std::vector<Mat> units;
        std::vector<Mat> functionals;
        for (long i = 0; i < v.dim; ++i)
            for (long j = 0; j < v.dim; ++j) {
                Mat coords(n, 1);
                for (long t = 0; t < n; ++t)
                    coords.at(t, 0) = fourier_inv.at(t, row_base + i * v.dim + j);
                units.push_back(std::move(coords));
                Mat f(1, n);
                for (long t = 0; t < n; ++t)
                    f.at(0, t) = cyc(v.dim) * v.action[t].at(j, i);
                functionals.push_back(std::move(f));
            }
        rt.matrix_units.push_back(std::move(units));
        rt.dual_functionals.push_back(std::move(functionals));
        row_base += v.dim * v.dim;
    }

    auto integral = integral_element(h);
    if (!integral) throw std::runtime_error("rep_theory: no idempotent integral (not semisimple)");
    rt.integral = *integral;

    rt.dual_integral = Mat(1, n);
    for (long t = 0; t < n; ++t) {
        CycScalar acc;
        for (const auto& v : rt.irreps) acc += cyc(v.dim, n) * v.character[t];
        rt.dual_integral.at(0, t) = acc;
    }
    return rt;
}

std::vector<ActionPart> decompose_action(const RepTheory& rt, const std::vector<Mat>& action) {
    long n = rt.hopf.dim;
    if (static_cast<long>(action.size()) != n)
        throw std::invalid_argument("decompose_action: one action matrix per basis element");
    long vdim = action.empty() ? 0 : action[0].rows();
    for (const Mat& a : action)
        if (a.rows() != vdim || a.cols() != vdim)
            throw std::invalid_argument("decompose_action: square equal-size actions");

    auto act_by = [&](const Mat& coords) {
        Mat out(vdim, vdim);
        for (long t = 0; t < n; ++t)
            if (!coords.at(t, 0).is_zero()) out += action[t].scaled(coords.at(t, 0));
        return out;
    };

    std::vector<ActionPart> parts;
    Mat phi(vdim, 0);
    for (long v = 0; v < rt.simple_count(); ++v) {
        long d = rt.dim_of(v);
        Mat w = image_basis(act_by(rt.matrix_units[v][0]));
        std::vector<Mat> transports;
        for (long j = 0; j < d; ++j) transports.push_back(act_by(rt.matrix_units[v][j * d + 0]));
        for (long c = 0; c < w.cols(); ++c) {
            Mat wc(vdim, 1);
            for (long i = 0; i < vdim; ++i) wc.at(i, 0) = w.at(i, c);
            Mat inj(vdim, d);
            for (long j = 0; j < d; ++j) {
                Mat col = mat_mul(transports[j], wc);
                for (long i = 0; i < vdim; ++i) inj.at(i, j) = col.at(i, 0);
            }
            parts.push_back(ActionPart{v, std::move(inj), Mat()});
            phi = hstack(phi, parts.back().inj);
        }
    }
    if (phi.cols() != vdim)
        throw std::invalid_argument("decompose_action: matrices do not present a module");

    Mat phi_inv = vdim > 0 ? inverse(phi) : Mat(0, 0);
    long row = 0;
    for (ActionPart& p : parts) {
        long d = rt.dim_of(p.simple);
        Mat proj(d, vdim);
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < vdim; ++j) proj.at(i, j) = phi_inv.at(row + i, j);
        p.proj = std::move(proj);
        row += d;
    }
    return parts;
}

}  // namespace orbicat
