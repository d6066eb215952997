#include "orbicat/split.hpp"

#include <algorithm>

#include "orbicat/poly.hpp"

namespace orbicat {
namespace {

Mat unvec(const std::vector<CycScalar>& v, long rows, long cols) {
    Mat m(rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) m.at(i, j) = v[i * cols + j];
    return m;
}

bool is_scalar_matrix(const Mat& m) {
    const CycScalar& d = m.at(0, 0);
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) {
            if (i == j ? !(m.at(i, j) == d) : !m.at(i, j).is_zero()) return false;
        }
    return true;
}

}  // namespace

std::vector<Mat> module_homs(const ActionModule& a, const ActionModule& b) {
    long da = a.dim(), db = b.dim();
    if (a.action.size() != b.action.size())
        throw std::invalid_argument("module_homs: algebra basis size mismatch");
    long unknowns = da * db;  // entries of T (db x da), row-major
    long nb = static_cast<long>(a.action.size());
    Mat sys(nb * db * da, unknowns);
    long row = 0;
    for (long t = 0; t < nb; ++t) {
        const Mat& at = a.action[t];
        const Mat& bt = b.action[t];
        // (T a_t - b_t T)[r][s] = 0
        for (long r = 0; r < db; ++r)
            for (long s = 0; s < da; ++s) {
                for (long j = 0; j < da; ++j)
                    if (!at.at(j, s).is_zero()) sys.at(row, r * da + j) += at.at(j, s);
                for (long i = 0; i < db; ++i)
                    if (!bt.at(r, i).is_zero()) sys.at(row, i * da + s) -= bt.at(r, i);
                ++row;
            }
    }
    Mat k = kernel_basis(sys);
    std::vector<Mat> out;
    for (long c = 0; c < k.cols(); ++c) {
        std::vector<CycScalar> v(unknowns);
        for (long i = 0; i < unknowns; ++i) v[i] = k.at(i, c);
        out.push_back(unvec(v, db, da));
    }
    return out;
}

long hom_dim(const ActionModule& a, const ActionModule& b) {
    return static_cast<long>(module_homs(a, b).size());
}

bool modules_isomorphic(const ActionModule& a, const ActionModule& b) {
    if (a.dim() != b.dim()) return false;
    return hom_dim(a, b) > 0;
}

namespace {

// Distinct irreducible factors with multiplicities, in the deterministic
// order produced by factor_poly.
std::vector<std::pair<KPoly, long>> grouped_factors(const KPoly& f, const CycField* field) {
    std::vector<std::pair<KPoly, long>> out;
    for (const KPoly& p : factor_poly(f, field)) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

// Try to split m along the primary decomposition of a commutant element x.
// Returns true (and fills `pieces`) when x has at least two coprime primary
// components.
bool try_split_along(const ActionModule& m, const Mat& x, const CycField* field,
                     std::vector<SubmodulePiece>& pieces) {
    KPoly mp = min_poly(x);
    auto factors = grouped_factors(mp, field);
    if (factors.size() < 2) return false;
    long n = m.dim();
    std::vector<Mat> kernels;
    Mat stacked;
    for (const auto& [p, e] : factors) {
        KPoly pe = {cyc(1)};
        for (long i = 0; i < e; ++i) pe = poly::mul(pe, p);
        Mat ker = kernel_basis(eval_poly(pe, x));
        stacked = stacked.cols() == 0 ? ker : hstack(stacked, ker);
        kernels.push_back(std::move(ker));
    }
    if (stacked.rows() != n || stacked.cols() != n)
        throw SplitStall("primary components do not fill the module");
    Mat inv = inverse(stacked);
    long offset = 0;
    pieces.clear();
    for (const Mat& ker : kernels) {
        long d = ker.cols();
        Mat proj(d, n);
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < n; ++j) proj.at(i, j) = inv.at(offset + i, j);
        ActionModule sub;
        for (const Mat& act : m.action) sub.action.push_back(mat_mul(proj, mat_mul(act, ker)));
        pieces.push_back(SubmodulePiece{ker, std::move(proj), std::move(sub)});
        offset += d;
    }
    return true;
}

}  // namespace

std::vector<SubmodulePiece> decompose_module(const ActionModule& m, const CycField* field) {
    long n = m.dim();
    if (n == 0) return {};
    std::vector<Mat> homs = module_homs(m, m);
    if (homs.size() == 1)
        return {SubmodulePiece{Mat::identity(n), Mat::identity(n), m}};

    // Candidate sweep, in a fixed order: commutant basis elements, their
    // pairwise products, small pencil combinations, and a weighted sum.
    std::vector<SubmodulePiece> split;
    auto recurse = [&](const std::vector<SubmodulePiece>& parts) {
        std::vector<SubmodulePiece> out;
        for (const SubmodulePiece& part : parts) {
            for (SubmodulePiece& inner : decompose_module(part.mod, field)) {
                out.push_back(SubmodulePiece{mat_mul(part.inj, inner.inj),
                                             mat_mul(inner.proj, part.proj),
                                             std::move(inner.mod)});
            }
        }
        return out;
    };

    for (const Mat& h : homs) {
        if (is_scalar_matrix(h)) continue;
        if (try_split_along(m, h, field, split)) return recurse(split);
    }
    for (const Mat& h1 : homs)
        for (const Mat& h2 : homs) {
            Mat prod = mat_mul(h1, h2);
            if (is_scalar_matrix(prod)) continue;
            if (try_split_along(m, prod, field, split)) return recurse(split);
        }
    for (std::size_t i = 0; i < homs.size(); ++i)
        for (std::size_t j = i + 1; j < homs.size(); ++j)
            for (long c = 1; c <= 3; ++c) {
                Mat comb = homs[i] + homs[j].scaled(cyc(c));
                if (is_scalar_matrix(comb)) continue;
                if (try_split_along(m, comb, field, split)) return recurse(split);
            }
    Mat weighted = Mat::zero(n, n);
    for (std::size_t i = 0; i < homs.size(); ++i)
        weighted += homs[i].scaled(cyc(static_cast<long>(i) + 1));
    if (!is_scalar_matrix(weighted) && try_split_along(m, weighted, field, split))
        return recurse(split);

    // No splitter found.  If the commutant is a (commutative) field, the
    // module is irreducible over this ambient field and we can certify that.
    bool commutative = true;
    for (const Mat& h1 : homs)
        for (const Mat& h2 : homs)
            if (mat_mul(h1, h2) != mat_mul(h2, h1)) commutative = false;
    if (commutative) {
        KPoly mp = min_poly(weighted);
        if (poly::deg(mp) == static_cast<long>(homs.size()) &&
            factor_poly(mp, field).size() == 1)
            return {SubmodulePiece{Mat::identity(n), Mat::identity(n), m}};
    }
    throw SplitStall("no separating commutant element found");
}

}  // namespace orbicat
