#include "orbicat/repcat.hpp"

#include <stdexcept>
#include <utility>

namespace orbicat {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

// Action of the algebra element with the given coordinates (dim x 1) on a
// module presented by per-basis-element action matrices.
Mat act_by(const std::vector<Mat>& action, const Mat& coords, long vdim) {
    Mat out(vdim, vdim);
    for (long t = 0; t < static_cast<long>(action.size()); ++t) {
        const CycScalar& c = coords.at(t, 0);
        if (!c.is_zero()) out += action[t].scaled(c);
    }
    return out;
}

std::size_t hash_mix(std::size_t h, std::size_t v) {
    return (h ^ (v + 0x9e3779b97f4a7c15ULL)) * 1099511628211ULL;
}

std::size_t hash_rational(const Rational& q) {
    constexpr unsigned long kMod = 0x1fffffffffffffffUL;  // 2^61 - 1
    std::size_t hn = mpz_fdiv_ui(mpq_numref(q.get_mpq_t()), kMod);
    std::size_t hd = mpz_fdiv_ui(mpq_denref(q.get_mpq_t()), kMod);
    return hash_mix(hn, hd);
}

std::size_t hash_action(const std::vector<Mat>& action) {
    std::size_t h = action.size();
    for (const Mat& a : action) {
        h = hash_mix(h, static_cast<std::size_t>(a.rows()));
        h = hash_mix(h, static_cast<std::size_t>(a.cols()));
        for (long i = 0; i < a.rows(); ++i)
            for (long j = 0; j < a.cols(); ++j)
                for (const Rational& q : a.at(i, j).coeffs()) h = hash_mix(h, hash_rational(q));
    }
    return h;
}

}  // namespace

// --- category-independent object/morphism layer ----------------------------

bool TCObject::is_zero() const {
    for (long m : mult)
        if (m != 0) return false;
    return true;
}

long TCObject::total_mult() const {
    long n = 0;
    for (long m : mult) n += m;
    return n;
}

CycScalar TensorCategory::dim_of(const TCObject& x) const {
    CycScalar d = cyc(0);
    for (long s = 0; s < simple_count(); ++s)
        if (x.mult[s] != 0) d += simple_dim(s) * cyc(x.mult[s]);
    return d;
}

static void require_same(const TCObject& x, const TCObject& y, const char* what) {
    if (x.cat == nullptr || x.cat != y.cat || !x.cat->same_object(x, y))
        throw std::invalid_argument(what);
}

TCMorphism tc_identity(const TCObject& x) {
    TCMorphism f{x, x, {}};
    for (long m : x.mult) f.blocks.push_back(Mat::identity(m));
    return f;
}

TCMorphism tc_zero(const TCObject& x, const TCObject& y) {
    TCMorphism f{x, y, {}};
    for (size_t s = 0; s < x.mult.size(); ++s)
        f.blocks.push_back(Mat::zero(y.mult[s], x.mult[s]));
    return f;
}

TCMorphism compose(const TCMorphism& f, const TCMorphism& g) {
    require_same(f.src, g.dst, "compose: endpoint mismatch");
    TCMorphism h{g.src, f.dst, {}};
    for (size_t s = 0; s < f.blocks.size(); ++s)
        h.blocks.push_back(mat_mul(f.blocks[s], g.blocks[s]));
    return h;
}

TCMorphism operator+(const TCMorphism& f, const TCMorphism& g) {
    require_same(f.src, g.src, "sum: source mismatch");
    require_same(f.dst, g.dst, "sum: target mismatch");
    TCMorphism h{f.src, f.dst, {}};
    for (size_t s = 0; s < f.blocks.size(); ++s) h.blocks.push_back(f.blocks[s] + g.blocks[s]);
    return h;
}

TCMorphism operator-(const TCMorphism& f, const TCMorphism& g) {
    return f + mor_scaled(g, cyc(-1));
}

TCMorphism mor_scaled(const TCMorphism& f, const CycScalar& c) {
    TCMorphism h{f.src, f.dst, {}};
    for (const Mat& b : f.blocks) h.blocks.push_back(b.scaled(c));
    return h;
}

bool operator==(const TCMorphism& f, const TCMorphism& g) {
    if (f.src.cat != g.src.cat || f.src.mult != g.src.mult || f.dst.mult != g.dst.mult)
        return false;
    for (size_t s = 0; s < f.blocks.size(); ++s)
        if (f.blocks[s] != g.blocks[s]) return false;
    return true;
}

std::vector<TCMorphism> hom_space(const TCObject& x, const TCObject& y) {
    require(x.cat != nullptr && x.cat == y.cat, "hom_space: category mismatch");
    std::vector<TCMorphism> basis;
    for (size_t s = 0; s < x.mult.size(); ++s)
        for (long r = 0; r < y.mult[s]; ++r)
            for (long c = 0; c < x.mult[s]; ++c) {
                TCMorphism f = tc_zero(x, y);
                f.blocks[s].at(r, c) = cyc(1);
                basis.push_back(std::move(f));
            }
    return basis;
}

long hom_space_dim(const TCObject& x, const TCObject& y) {
    require(x.cat != nullptr && x.cat == y.cat, "hom_space: category mismatch");
    long d = 0;
    for (size_t s = 0; s < x.mult.size(); ++s) d += x.mult[s] * y.mult[s];
    return d;
}

CycScalar scalar_of(const TCMorphism& f) {
    require(f.src.total_mult() == 1 && f.src.mult == f.dst.mult,
            "scalar_of: need an endomorphism of a single simple copy");
    for (size_t s = 0; s < f.blocks.size(); ++s)
        if (f.src.mult[s] == 1) return f.blocks[s].at(0, 0);
    throw std::logic_error("scalar_of: unreachable");
}

// --- the module category of a split semisimple Hopf algebra ----------------

struct RepCat::Data : TCObjectData {
    std::vector<Mat> action;
    RepResolution res;
    long vdim = 0;
};

RepCat::RepCat(RepTheory rt) : rt_(std::move(rt)) {
    require(mat_mul(rt_.hopf.s, rt_.hopf.s).is_identity(),
            "RepCat: the antipode must be involutive");
}

const RepCat::Data& RepCat::data_of(const TCObject& x) const {
    require(x.cat == this, "object belongs to a different category");
    auto* d = dynamic_cast<const Data*>(x.data.get());
    require(d != nullptr, "object carries no module realization");
    return *d;
}

const std::vector<Mat>& RepCat::action_of(const TCObject& x) const { return data_of(x).action; }
const RepResolution& RepCat::resolution_of(const TCObject& x) const { return data_of(x).res; }
long RepCat::vec_dim(const TCObject& x) const { return data_of(x).vdim; }

long RepCat::simple_count() const { return rt_.simple_count(); }
const std::string& RepCat::simple_label(long s) const { return rt_.irreps[s].label; }
CycScalar RepCat::simple_dim(long s) const { return cyc(rt_.dim_of(s)); }

// Decompose explicit action matrices with the matrix-unit toolkit: the image
// of the (0,0) unit of each simple carries one vector per copy, and the
// (j,0) units transport it across the coordinate lines of that simple.  The
// stacked injections form a square change of basis whose inverse supplies
// all projections at once.
TCObject RepCat::make_object(std::vector<Mat> action) const {
    long n = rt_.hopf.dim;
    require(static_cast<long>(action.size()) == n, "module_object: one action matrix per basis element");
    long vdim = action.empty() ? 0 : action[0].rows();
    for (const Mat& a : action)
        require(a.rows() == vdim && a.cols() == vdim, "module_object: square equal-size actions");

    std::size_t key = hash_action(action);
    if (const TCObject* hit = intern_find(key, action)) return *hit;

    auto data = std::make_shared<Data>();
    data->action = std::move(action);
    data->vdim = vdim;

    std::vector<long> mult(rt_.simple_count(), 0);
    Mat phi(vdim, 0);
    std::vector<std::pair<long, long>> layout;  // (simple, copy) in column order
    for (long v = 0; v < rt_.simple_count(); ++v) {
        long d = rt_.dim_of(v);
        Mat e00 = act_by(data->action, rt_.matrix_units[v][0], vdim);
        Mat w = image_basis(e00);
        mult[v] = w.cols();
        std::vector<Mat> transports;  // E_{j0} as operators on X
        for (long j = 0; j < d; ++j)
            transports.push_back(act_by(data->action, rt_.matrix_units[v][j * d + 0], vdim));
        data->res.inj.emplace_back();
        data->res.pi.emplace_back();
        for (long c = 0; c < mult[v]; ++c) {
            Mat wc(vdim, 1);
            for (long i = 0; i < vdim; ++i) wc.at(i, 0) = w.at(i, c);
            Mat inj(vdim, d);
            for (long j = 0; j < d; ++j) {
                Mat col = mat_mul(transports[j], wc);
                for (long i = 0; i < vdim; ++i) inj.at(i, j) = col.at(i, 0);
            }
            data->res.inj[v].push_back(inj);
            phi = hstack(phi, inj);
            layout.emplace_back(v, c);
        }
    }
    require(phi.cols() == vdim, "module_object: actions do not present a module of the algebra");

    Mat phi_inv = inverse(phi);
    long row = 0;
    for (auto [v, c] : layout) {
        long d = rt_.dim_of(v);
        Mat pi(d, vdim);
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < vdim; ++j) pi.at(i, j) = phi_inv.at(row + i, j);
        data->res.pi[v].push_back(pi);
        row += d;
    }

    TCObject x;
    x.cat = this;
    x.mult = std::move(mult);
    x.data = std::move(data);
    intern_store(key, x);
    return x;
}

const TCObject* RepCat::intern_find(std::size_t key, const std::vector<Mat>& action) const {
    auto it = intern_.find(key);
    if (it == intern_.end()) return nullptr;
    for (const InternEntry& e : it->second) {
        auto* d = static_cast<const Data*>(e.obj.data.get());
        if (d->action == action) return &e.obj;
    }
    return nullptr;
}

void RepCat::intern_store(std::size_t key, const TCObject& x) const {
    auto* d = static_cast<const Data*>(x.data.get());
    long n = static_cast<long>(d->action.size());
    long weight = (n + 2) * d->vdim * d->vdim;
    constexpr long kInternBudget = 4'000'000;
    if (weight > kInternBudget / 4) return;
    if (intern_weight_ + weight > kInternBudget) {
        intern_.clear();
        intern_weight_ = 0;
    }
    intern_[key].push_back(InternEntry{x, weight});
    intern_weight_ += weight;
}

TCObject RepCat::module_object(std::vector<Mat> action) const { return make_object(std::move(action)); }

TCObject RepCat::regular_object() const {
    std::vector<Mat> action;
    for (long t = 0; t < rt_.hopf.dim; ++t) action.push_back(rt_.hopf.left_mult(t));
    return make_object(std::move(action));
}

TCObject RepCat::simple_object(long s) const {
    require(s >= 0 && s < rt_.simple_count(), "simple_object: no such label");
    return make_object(rt_.irreps[s].action);
}

TCObject RepCat::zero_object() const {
    std::vector<Mat> action(rt_.hopf.dim, Mat(0, 0));
    return make_object(std::move(action));
}

TCObject RepCat::direct_sum(const TCObject& x, const TCObject& y) const {
    const Data& dx = data_of(x);
    const Data& dy = data_of(y);
    std::vector<Mat> action;
    for (long t = 0; t < rt_.hopf.dim; ++t)
        action.push_back(orbicat::direct_sum(dx.action[t], dy.action[t]));

    std::size_t key = hash_action(action);
    if (const TCObject* hit = intern_find(key, action)) return *hit;

    // The summands' certificates embed block by block, and that embedding is
    // exactly what a fresh decomposition of the block-diagonal action would
    // recompute, so assemble it directly instead of re-deriving it.
    auto data = std::make_shared<Data>();
    data->vdim = dx.vdim + dy.vdim;
    data->action = std::move(action);
    long ns = rt_.simple_count();
    data->res.inj.resize(ns);
    data->res.pi.resize(ns);
    std::vector<long> mult(ns, 0);
    for (long s = 0; s < ns; ++s) {
        long d = rt_.dim_of(s);
        mult[s] = x.mult[s] + y.mult[s];
        for (long half = 0; half < 2; ++half) {
            const Data& part = half == 0 ? dx : dy;
            long shift = half == 0 ? 0 : dx.vdim;
            long copies = half == 0 ? x.mult[s] : y.mult[s];
            for (long c = 0; c < copies; ++c) {
                Mat inj(data->vdim, d);
                Mat pi(d, data->vdim);
                const Mat& src_inj = part.res.inj[s][c];
                const Mat& src_pi = part.res.pi[s][c];
                for (long i = 0; i < part.vdim; ++i)
                    for (long j = 0; j < d; ++j) {
                        inj.at(shift + i, j) = src_inj.at(i, j);
                        pi.at(j, shift + i) = src_pi.at(j, i);
                    }
                data->res.inj[s].push_back(std::move(inj));
                data->res.pi[s].push_back(std::move(pi));
            }
        }
    }

    TCObject out;
    out.cat = this;
    out.mult = std::move(mult);
    out.data = std::move(data);
    intern_store(key, out);
    return out;
}

TCObject RepCat::tensor(const TCObject& x, const TCObject& y) const {
    auto key = std::make_pair(static_cast<const void*>(x.data.get()),
                              static_cast<const void*>(y.data.get()));
    auto it = tensor_cache_.find(key);
    if (it != tensor_cache_.end()) return it->second.result;

    const Data& dx = data_of(x);
    const Data& dy = data_of(y);
    long n = rt_.hopf.dim;
    std::vector<Mat> action;
    for (long t = 0; t < n; ++t) {
        Mat a(dx.vdim * dy.vdim, dx.vdim * dy.vdim);
        for (long j = 0; j < n; ++j)
            for (long k = 0; k < n; ++k) {
                const CycScalar& c = rt_.hopf.cm.at(j * n + k, t);
                if (!c.is_zero()) a += kron(dx.action[j], dy.action[k]).scaled(c);
            }
        action.push_back(std::move(a));
    }
    TCObject result = make_object(std::move(action));
    // Approximate retained exact-scalar count: action matrices plus the
    // decomposition certificate stored alongside them.
    long d = dx.vdim * dy.vdim;
    long weight = (n + 2) * d * d;
    constexpr long kCacheBudget = 1'500'000;
    if (weight <= kCacheBudget / 4) {
        if (tensor_cache_weight_ + weight > kCacheBudget) {
            tensor_cache_.clear();
            tensor_cache_weight_ = 0;
        }
        tensor_cache_.emplace(key, TensorEntry{x.data, y.data, result, weight});
        tensor_cache_weight_ += weight;
    }
    return result;
}

TCObject RepCat::dual(const TCObject& x) const {
    const Data& dx = data_of(x);
    long n = rt_.hopf.dim;
    std::vector<Mat> action;
    for (long t = 0; t < n; ++t) {
        Mat coords(n, 1);
        for (long j = 0; j < n; ++j) coords.at(j, 0) = rt_.hopf.s.at(j, t);
        action.push_back(act_by(dx.action, coords, dx.vdim).transpose());
    }
    return make_object(std::move(action));
}

Mat RepCat::concrete(const TCMorphism& f) const {
    const Data& dx = data_of(f.src);
    const Data& dy = data_of(f.dst);
    Mat out(dy.vdim, dx.vdim);
    for (long s = 0; s < rt_.simple_count(); ++s)
        for (long r = 0; r < f.dst.mult[s]; ++r)
            for (long c = 0; c < f.src.mult[s]; ++c) {
                const CycScalar& coeff = f.blocks[s].at(r, c);
                if (coeff.is_zero()) continue;
                out += mat_mul(dy.res.inj[s][r], dx.res.pi[s][c]).scaled(coeff);
            }
    return out;
}

TCMorphism RepCat::from_concrete(const TCObject& x, const TCObject& y, const Mat& f) const {
    const Data& dx = data_of(x);
    const Data& dy = data_of(y);
    require(f.rows() == dy.vdim && f.cols() == dx.vdim, "from_concrete: size mismatch");
    TCMorphism out = tc_zero(x, y);
    for (long s = 0; s < rt_.simple_count(); ++s)
        for (long r = 0; r < y.mult[s]; ++r) {
            Mat pf = mat_mul(dy.res.pi[s][r], f);
            for (long c = 0; c < x.mult[s]; ++c)
                out.blocks[s].at(r, c) = mat_mul(pf, dx.res.inj[s][c]).at(0, 0);
        }
    return out;
}

bool RepCat::intertwines(const TCObject& x, const TCObject& y, const Mat& f) const {
    const Data& dx = data_of(x);
    const Data& dy = data_of(y);
    if (f.rows() != dy.vdim || f.cols() != dx.vdim) return false;
    for (long t = 0; t < rt_.hopf.dim; ++t)
        if (mat_mul(f, dx.action[t]) != mat_mul(dy.action[t], f)) return false;
    return true;
}

TCMorphism RepCat::tensor_mor(const TCMorphism& f, const TCMorphism& g) const {
    Mat ff = concrete(f);
    Mat gg = concrete(g);
    TCObject src = tensor(f.src, g.src);
    TCObject dst = tensor(f.dst, g.dst);
    return from_concrete(src, dst, kron(ff, gg));
}

TCMorphism RepCat::ev(const TCObject& x) const {
    long d = vec_dim(x);
    Mat e(1, d * d);
    for (long i = 0; i < d; ++i) e.at(0, i * d + i) = cyc(1);
    return from_concrete(tensor(dual(x), x), unit_object(), e);
}

TCMorphism RepCat::coev(const TCObject& x) const {
    long d = vec_dim(x);
    Mat c(d * d, 1);
    for (long i = 0; i < d; ++i) c.at(i * d + i, 0) = cyc(1);
    return from_concrete(unit_object(), tensor(x, dual(x)), c);
}

TCMorphism RepCat::ev_r(const TCObject& x) const {
    long d = vec_dim(x);
    Mat e(1, d * d);
    for (long i = 0; i < d; ++i) e.at(0, i * d + i) = cyc(1);
    return from_concrete(tensor(x, dual(x)), unit_object(), e);
}

TCMorphism RepCat::coev_r(const TCObject& x) const {
    long d = vec_dim(x);
    Mat c(d * d, 1);
    for (long i = 0; i < d; ++i) c.at(i * d + i, 0) = cyc(1);
    return from_concrete(unit_object(), tensor(dual(x), x), c);
}

bool RepCat::same_object(const TCObject& x, const TCObject& y) const {
    if (x.cat != this || y.cat != this || x.mult != y.mult) return false;
    if (x.data.get() == y.data.get()) return true;
    const Data& dx = data_of(x);
    const Data& dy = data_of(y);
    if (dx.vdim != dy.vdim) return false;
    for (long t = 0; t < rt_.hopf.dim; ++t)
        if (dx.action[t] != dy.action[t]) return false;
    return true;
}

RepCat rep_category(const HopfAlgebra& h) { return RepCat(rep_theory(h)); }

}  // namespace orbicat
