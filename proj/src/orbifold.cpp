#include "orbicat/orbifold.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <utility>

namespace orbicat {
namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

std::string fmt_rational(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

}  // namespace

// --- exact square roots -----------------------------------------------------

ExactSqrt exact_sqrt(const Rational& q) {
    require(q >= 0, "exact_sqrt: negative input");
    ExactSqrt out;
    if (q == 0) {
        out.root = Rational(0);
        out.squarefree = 1;
        return out;
    }
    // sqrt(n/d) = sqrt(n d) / d; peel square factors off n d by trial division.
    mpz_class nd = q.get_num() * q.get_den();
    mpz_class side = 1, core = 1;
    for (mpz_class p = 2; p * p <= nd; ++p) {
        long e = 0;
        while (nd % p == 0) {
            nd /= p;
            ++e;
        }
        for (long i = 0; i + 1 < e; i += 2) side *= p;
        if (e % 2 == 1) core *= p;
    }
    core *= nd;  // the remaining factor appears once
    out.root = Rational(side) / Rational(q.get_den());
    out.root.canonicalize();
    require(core.fits_slong_p(), "exact_sqrt: squarefree class overflows");
    out.squarefree = core.get_si();
    return out;
}

// --- fusion rings -----------------------------------------------------------

bool FusionRing::is_pointed() const {
    for (long i = 0; i < rank(); ++i)
        for (long j = 0; j < rank(); ++j) {
            long total = 0;
            for (long k = 0; k < rank(); ++k) {
                if (n[i][j][k] < 0 || n[i][j][k] > 1) return false;
                total += n[i][j][k];
            }
            if (total != 1) return false;
        }
    return true;
}

long FusionRing::pointed_product(long i, long j) const {
    long found = -1;
    for (long k = 0; k < rank(); ++k) {
        if (n[i][j][k] == 0) continue;
        require(n[i][j][k] == 1 && found < 0, "fusion ring: product of " + labels[i] +
                                                  " and " + labels[j] + " is not a single label");
        found = k;
    }
    require(found >= 0, "fusion ring: product of " + labels[i] + " and " + labels[j] +
                            " vanishes");
    return found;
}

long FusionRing::dual_of(long i) const {
    long found = -1;
    for (long k = 0; k < rank(); ++k) {
        if (n[i][k][unit] == 0) continue;
        require(n[i][k][unit] == 1 && found < 0,
                "fusion ring: no unique dual for " + labels[i]);
        found = k;
    }
    require(found >= 0, "fusion ring: no dual for " + labels[i]);
    return found;
}

void FusionRing::validate() const {
    long r = rank();
    require(r > 0, "fusion ring: empty");
    require(unit >= 0 && unit < r, "fusion ring: unit label out of range");
    require(static_cast<long>(n.size()) == r && static_cast<long>(dim_sq.size()) == r,
            "fusion ring: table shape mismatch");
    for (long i = 0; i < r; ++i) {
        require(static_cast<long>(n[i].size()) == r, "fusion ring: table shape mismatch");
        for (long j = 0; j < r; ++j) {
            require(static_cast<long>(n[i][j].size()) == r, "fusion ring: table shape mismatch");
            for (long k = 0; k < r; ++k)
                require(n[i][j][k] >= 0, "fusion ring: negative structure constant");
        }
    }
    for (long j = 0; j < r; ++j)
        for (long k = 0; k < r; ++k) {
            require(n[unit][j][k] == (j == k ? 1 : 0), "fusion ring: left unit row broken");
            require(n[j][unit][k] == (j == k ? 1 : 0), "fusion ring: right unit row broken");
        }
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j)
            for (long k = 0; k < r; ++k)
                for (long l = 0; l < r; ++l) {
                    long lhs = 0, rhs = 0;
                    for (long m = 0; m < r; ++m) {
                        lhs += n[i][j][m] * n[m][k][l];
                        rhs += n[j][k][m] * n[i][m][l];
                    }
                    require(lhs == rhs, "fusion ring: associativity fails at (" + labels[i] +
                                            ", " + labels[j] + ", " + labels[k] + ")");
                }
    for (long i = 0; i < r; ++i) {
        long d = dual_of(i);  // throws when absent
        require(n[d][i][unit] == 1, "fusion ring: dual of " + labels[i] + " is one-sided");
    }
    require(dim_sq[unit] == 1, "fusion ring: unit dimension is not one");
    std::vector<ExactSqrt> roots(r);
    for (long i = 0; i < r; ++i) {
        require(dim_sq[i] > 0, "fusion ring: non-positive squared dimension");
        roots[i] = exact_sqrt(dim_sq[i]);
    }
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j) {
            // sum_k n[i][j][k] d_k must equal d_i d_j; compare the square-root
            // classes and the rational prefactors separately, never the roots.
            ExactSqrt target = exact_sqrt(dim_sq[i] * dim_sq[j]);
            Rational total(0);
            for (long k = 0; k < r; ++k) {
                if (n[i][j][k] == 0) continue;
                require(roots[k].squarefree == target.squarefree,
                        "fusion ring: square-root class clash in the product of " + labels[i] +
                            " and " + labels[j]);
                total += Rational(n[i][j][k]) * roots[k].root;
            }
            require(total == target.root, "fusion ring: dimensions fail in the product of " +
                                              labels[i] + " and " + labels[j]);
        }
}

FusionRing group_fusion_ring(const FiniteGroup& g) {
    require(g.is_valid(), "group_fusion_ring: invalid multiplication table");
    FusionRing ring;
    long r = g.order();
    ring.labels.reserve(r);
    for (long i = 0; i < r; ++i)
        ring.labels.push_back(g.element_names.empty() ? "g" + std::to_string(i)
                                                      : g.element_names[i]);
    ring.unit = 0;
    ring.n.assign(r, std::vector<std::vector<long>>(r, std::vector<long>(r, 0)));
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j) ring.n[i][j][g.table[i][j]] = 1;
    ring.dim_sq.assign(r, Rational(1));
    ring.validate();
    return ring;
}

FusionRing fusion_ring_of(const TensorCategory& cat) {
    FusionRing ring;
    long r = cat.simple_count();
    ring.unit = cat.unit_simple();
    ring.n.assign(r, std::vector<std::vector<long>>(r, std::vector<long>(r, 0)));
    for (long i = 0; i < r; ++i) ring.labels.push_back(cat.simple_label(i));
    for (long i = 0; i < r; ++i) {
        TCObject xi = cat.simple_object(i);
        for (long j = 0; j < r; ++j) {
            TCObject t = cat.tensor(xi, cat.simple_object(j));
            for (long k = 0; k < r; ++k) ring.n[i][j][k] = t.mult[k];
        }
    }
    for (long i = 0; i < r; ++i) {
        CycScalar d = cat.simple_dim(i);
        CycScalar sq = d * d;
        require(sq.is_rational(), "fusion_ring_of: irrational squared dimension");
        ring.dim_sq.push_back(sq.rational_value());
    }
    ring.validate();
    return ring;
}

// --- fusion-ring matching ---------------------------------------------------

namespace {

struct MatchState {
    const FusionRing* a = nullptr;
    const FusionRing* b = nullptr;
    std::vector<long> sigma;        // a-label -> b-label, -1 while unassigned
    std::vector<bool> used;         // b-labels taken
    std::string* divergence = nullptr;

    bool consistent(long i) const {
        long r = a->rank();
        for (long x = 0; x < r; ++x) {
            if (sigma[x] < 0) continue;
            for (long y = 0; y < r; ++y) {
                if (sigma[y] < 0) continue;
                for (long z = 0; z < r; ++z) {
                    if (sigma[z] < 0) continue;
                    if (x != i && y != i && z != i) continue;
                    long va = a->n[x][y][z];
                    long vb = b->n[sigma[x]][sigma[y]][sigma[z]];
                    if (va == vb) continue;
                    if (divergence->empty()) {
                        std::ostringstream os;
                        os << "N[" << a->labels[x] << "][" << a->labels[y] << "]["
                           << a->labels[z] << "] = " << va << " but N[" << b->labels[sigma[x]]
                           << "][" << b->labels[sigma[y]] << "][" << b->labels[sigma[z]]
                           << "] = " << vb;
                        *divergence = os.str();
                    }
                    return false;
                }
            }
        }
        return true;
    }

    bool search(long pos, const std::vector<std::vector<long>>& order) {
        long r = a->rank();
        if (pos == r) return true;
        for (long cand : order[pos]) {
            if (used[cand]) continue;
            sigma[pos] = cand;
            used[cand] = true;
            if (consistent(pos) && search(pos + 1, order)) return true;
            used[cand] = false;
            sigma[pos] = -1;
        }
        return false;
    }
};

}  // namespace

FusionMatch match_fusion_rings(const FusionRing& a, const FusionRing& b,
                               const std::vector<std::vector<long>>& preference) {
    FusionMatch out;
    if (a.rank() != b.rank()) {
        out.first_divergence = "rank " + std::to_string(a.rank()) + " vs " +
                               std::to_string(b.rank());
        return out;
    }
    long r = a.rank();
    std::vector<std::vector<long>> order(r);
    for (long i = 0; i < r; ++i) {
        std::vector<long> cands;
        if (i < static_cast<long>(preference.size()))
            for (long c : preference[i])
                if (c >= 0 && c < r && b.dim_sq[c] == a.dim_sq[i] &&
                    (i == a.unit) == (c == b.unit))
                    cands.push_back(c);
        for (long c = 0; c < r; ++c) {
            if (b.dim_sq[c] != a.dim_sq[i]) continue;
            if ((i == a.unit) != (c == b.unit)) continue;
            if (std::find(cands.begin(), cands.end(), c) == cands.end()) cands.push_back(c);
        }
        if (cands.empty()) {
            out.first_divergence =
                "no label of matching squared dimension for " + a.labels[i] + " (" +
                fmt_rational(a.dim_sq[i]) + ")";
            return out;
        }
        order[i] = std::move(cands);
    }
    MatchState st;
    st.a = &a;
    st.b = &b;
    st.sigma.assign(r, -1);
    st.used.assign(r, false);
    st.divergence = &out.first_divergence;
    if (st.search(0, order)) {
        out.iso = st.sigma;
        out.first_divergence.clear();
    } else if (out.first_divergence.empty()) {
        out.first_divergence = "no dimension-compatible bijection survives";
    }
    return out;
}

// --- strict word categories -------------------------------------------------

struct WordCategory::WordData final : TCObjectData {
    std::vector<long> letters;
    std::vector<std::vector<long>> slots_of;  // [label] -> slot positions, in order
    std::vector<long> copy_index;             // slot -> rank within its label
};

WordCategory::WordCategory(FusionRing ring) : ring_(std::move(ring)) {
    ring_.validate();
    require(ring_.is_pointed(), "word category: the fusion ring must be pointed");
    long r = ring_.rank();
    for (long s = 0; s < r; ++s)
        require(ring_.dim_sq[s] == 1, "word category: label " + ring_.labels[s] +
                                          " does not have squared dimension one");
    dual_letter_.resize(r);
    for (long s = 0; s < r; ++s) dual_letter_[s] = ring_.dual_of(s);
    for (long s = 0; s < r; ++s)
        require(dual_letter_[dual_letter_[s]] == s,
                "word category: duals are not involutive");
}

TCObject WordCategory::word_object(std::vector<long> letters) const {
    long r = ring_.rank();
    auto data = std::make_shared<WordData>();
    data->slots_of.assign(r, {});
    data->copy_index.resize(letters.size());
    for (std::size_t i = 0; i < letters.size(); ++i) {
        long s = letters[i];
        require(s >= 0 && s < r, "word category: letter out of range");
        data->copy_index[i] = static_cast<long>(data->slots_of[s].size());
        data->slots_of[s].push_back(static_cast<long>(i));
    }
    data->letters = std::move(letters);
    TCObject obj;
    obj.cat = this;
    obj.mult.resize(r);
    for (long s = 0; s < r; ++s) obj.mult[s] = static_cast<long>(data->slots_of[s].size());
    obj.data = std::move(data);
    return obj;
}

const std::vector<long>& WordCategory::letters_of(const TCObject& x) const {
    require(x.cat == this, "word category: foreign object");
    auto* data = dynamic_cast<const WordData*>(x.data.get());
    require(data != nullptr, "word category: object carries no word");
    return data->letters;
}

long WordCategory::simple_count() const { return ring_.rank(); }
const std::string& WordCategory::simple_label(long s) const { return ring_.labels[s]; }
long WordCategory::unit_simple() const { return ring_.unit; }
CycScalar WordCategory::simple_dim(long) const { return cyc(1); }

TCObject WordCategory::simple_object(long s) const { return word_object({s}); }
TCObject WordCategory::zero_object() const { return word_object({}); }

TCObject WordCategory::direct_sum(const TCObject& x, const TCObject& y) const {
    std::vector<long> letters = letters_of(x);
    const std::vector<long>& more = letters_of(y);
    letters.insert(letters.end(), more.begin(), more.end());
    return word_object(std::move(letters));
}

TCObject WordCategory::tensor(const TCObject& x, const TCObject& y) const {
    const std::vector<long>& a = letters_of(x);
    const std::vector<long>& b = letters_of(y);
    std::vector<long> letters;
    letters.reserve(a.size() * b.size());
    for (long i : a)
        for (long j : b) letters.push_back(ring_.pointed_product(i, j));
    return word_object(std::move(letters));
}

TCObject WordCategory::dual(const TCObject& x) const {
    const std::vector<long>& a = letters_of(x);
    std::vector<long> letters(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        letters[i] = dual_letter_[a[a.size() - 1 - i]];
    return word_object(std::move(letters));
}

TCMorphism WordCategory::tensor_mor(const TCMorphism& f, const TCMorphism& g) const {
    const auto* fsrc = dynamic_cast<const WordData*>(f.src.data.get());
    const auto* fdst = dynamic_cast<const WordData*>(f.dst.data.get());
    const auto* gsrc = dynamic_cast<const WordData*>(g.src.data.get());
    const auto* gdst = dynamic_cast<const WordData*>(g.dst.data.get());
    require(fsrc && fdst && gsrc && gdst, "word category: tensor_mor on foreign morphisms");
    TCObject src = tensor(f.src, g.src);
    TCObject dst = tensor(f.dst, g.dst);
    const auto* sdata = static_cast<const WordData*>(src.data.get());
    const auto* ddata = static_cast<const WordData*>(dst.data.get());
    TCMorphism out = tc_zero(src, dst);
    long gs = static_cast<long>(gsrc->letters.size());
    long gd = static_cast<long>(gdst->letters.size());
    for (std::size_t ad = 0; ad < fdst->letters.size(); ++ad) {
        long la = fdst->letters[ad];
        for (std::size_t as = 0; as < fsrc->letters.size(); ++as) {
            if (fsrc->letters[as] != la) continue;
            const CycScalar& fval =
                f.blocks[la].at(fdst->copy_index[ad], fsrc->copy_index[as]);
            if (fval.is_zero()) continue;
            for (std::size_t bd = 0; bd < gdst->letters.size(); ++bd) {
                long lb = gdst->letters[bd];
                for (std::size_t bs = 0; bs < gsrc->letters.size(); ++bs) {
                    if (gsrc->letters[bs] != lb) continue;
                    const CycScalar& gval =
                        g.blocks[lb].at(gdst->copy_index[bd], gsrc->copy_index[bs]);
                    if (gval.is_zero()) continue;
                    long dslot = static_cast<long>(ad) * gd + static_cast<long>(bd);
                    long sslot = static_cast<long>(as) * gs + static_cast<long>(bs);
                    long label = ddata->letters[dslot];
                    out.blocks[label].at(ddata->copy_index[dslot],
                                         sdata->copy_index[sslot]) = fval * gval;
                }
            }
        }
    }
    return out;
}

// The four unit pairings share one picture: strand i on the undualized side
// meets strand (n-1-i) on the dualized side, every meeting point carries
// coefficient one, and only the unit label survives.
TCMorphism WordCategory::pairing(const TCObject& x, bool left_dual, bool to_unit) const {
    TCObject xd = dual(x);
    const TCObject& first = left_dual ? xd : x;
    const TCObject& second = left_dual ? x : xd;
    TCObject pair = tensor(first, second);
    const auto* pdata = static_cast<const WordData*>(pair.data.get());
    long n = static_cast<long>(letters_of(x).size());
    TCMorphism out = to_unit ? tc_zero(pair, unit_object()) : tc_zero(unit_object(), pair);
    for (long i = 0; i < n; ++i) {
        // slot (a, b) of the pair: the dualized factor reverses positions.
        long a = left_dual ? n - 1 - i : i;
        long b = left_dual ? i : n - 1 - i;
        long slot = a * n + b;
        require(pdata->letters[slot] == ring_.unit, "word category: pairing misses the unit");
        long copy = pdata->copy_index[slot];
        if (to_unit)
            out.blocks[ring_.unit].at(0, copy) = cyc(1);
        else
            out.blocks[ring_.unit].at(copy, 0) = cyc(1);
    }
    return out;
}

TCMorphism WordCategory::ev(const TCObject& x) const { return pairing(x, true, true); }
TCMorphism WordCategory::coev(const TCObject& x) const { return pairing(x, false, false); }
TCMorphism WordCategory::ev_r(const TCObject& x) const { return pairing(x, false, true); }
TCMorphism WordCategory::coev_r(const TCObject& x) const { return pairing(x, true, false); }

bool WordCategory::same_object(const TCObject& x, const TCObject& y) const {
    if (x.cat != this || y.cat != this) return false;
    return letters_of(x) == letters_of(y);
}

// --- commutant-driven splitting ---------------------------------------------

namespace {

long mor_entry_count(const TCMorphism& f) {
    long n = 0;
    for (const Mat& b : f.blocks) n += b.rows() * b.cols();
    return n;
}

// Stack every block entry of each basis morphism into one column (fixed order).
Mat mor_matrix(const std::vector<TCMorphism>& basis) {
    require(!basis.empty(), "mor_matrix: empty basis");
    Mat m(mor_entry_count(basis[0]), static_cast<long>(basis.size()));
    for (std::size_t c = 0; c < basis.size(); ++c) {
        long r = 0;
        for (const Mat& b : basis[c].blocks)
            for (long i = 0; i < b.rows(); ++i)
                for (long j = 0; j < b.cols(); ++j) m.at(r++, static_cast<long>(c)) = b.at(i, j);
    }
    return m;
}

std::vector<CycScalar> mor_coords(const Mat& basis_mat, const TCMorphism& f) {
    Mat rhs(basis_mat.rows(), 1);
    long r = 0;
    for (const Mat& b : f.blocks)
        for (long i = 0; i < b.rows(); ++i)
            for (long j = 0; j < b.cols(); ++j) rhs.at(r++, 0) = b.at(i, j);
    Mat x;
    require(solve(basis_mat, rhs, x), "mor_coords: morphism outside the spanned space");
    std::vector<CycScalar> out(basis_mat.cols());
    for (long i = 0; i < basis_mat.cols(); ++i) out[i] = x.at(i, 0);
    return out;
}

TCMorphism mor_combine(const std::vector<TCMorphism>& basis, const std::vector<CycScalar>& co) {
    TCMorphism acc = tc_zero(basis[0].src, basis[0].dst);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!co[i].is_zero()) acc = acc + mor_scaled(basis[i], co[i]);
    return acc;
}

// The scalar c with f = c id; throws when f is not scalar.
CycScalar scalar_unit_coeff(const TCMorphism& f) {
    require(f.src.mult == f.dst.mult, "scalar_unit_coeff: need an endomorphism");
    CycScalar s;
    for (std::size_t k = 0; k < f.blocks.size(); ++k)
        if (f.src.mult[k] > 0) {
            s = f.blocks[k].at(0, 0);
            break;
        }
    require(f == mor_scaled(tc_identity(f.src), s),
            "scalar_unit_coeff: endomorphism of a simple is not scalar");
    return s;
}

// Restrict a bimodule structure along a split idempotent.
Bimodule restrict_bimodule(const Bimodule& x, const SplitPart& sp) {
    const TensorCategory& cat = x.cat();
    std::vector<TCMorphism> phi, psi;
    for (long v = 0; v < x.left->simples(); ++v) {
        long d = x.left->dim(v);
        DsumData ax = make_amp(cat, x.x, d);
        TCObject amp_sub = make_amp(cat, sp.obj, d).obj;
        TCMorphism widen = cat.tensor_mor(tc_identity(x.left->image[v]), sp.incl);
        phi.push_back(compose(amp_of(ax, amp_sub, sp.proj), compose(x.phi[v], widen)));
    }
    for (long w = 0; w < x.right->simples(); ++w) {
        long d = x.right->dim(w);
        DsumData ax = make_amp(cat, x.x, d);
        TCObject amp_sub = make_amp(cat, sp.obj, d).obj;
        TCMorphism widen = cat.tensor_mor(sp.incl, tc_identity(x.right->image[w]));
        psi.push_back(compose(amp_of(ax, amp_sub, sp.proj), compose(x.psi[w], widen)));
    }
    return make_bimodule(x.left, x.right, sp.obj, std::move(phi), std::move(psi));
}

// Split a bimodule into simple summands: decompose the regular representation
// of its commutant into primitive left ideals, turn the ideal projectors into
// orthogonal idempotent endomorphisms, and restrict along each.
std::vector<Bimodule> split_simple_pieces(const Bimodule& x, const CycField* field) {
    if (x.is_zero()) return {};
    std::vector<TCMorphism> comm = bimodule_hom(x, x);
    long k = static_cast<long>(comm.size());
    require(k > 0, "split: a nonzero bimodule has an empty commutant");
    if (k == 1) return {x};

    Mat basis_mat = mor_matrix(comm);
    ActionModule reg;
    for (long i = 0; i < k; ++i) {
        Mat a(k, k);
        for (long j = 0; j < k; ++j) {
            std::vector<CycScalar> co = mor_coords(basis_mat, compose(comm[i], comm[j]));
            for (long t = 0; t < k; ++t) a.at(t, j) = co[t];
        }
        reg.action.push_back(std::move(a));
    }
    std::vector<CycScalar> id_co = mor_coords(basis_mat, tc_identity(x.x));
    Mat id_vec(k, 1);
    for (long t = 0; t < k; ++t) id_vec.at(t, 0) = id_co[t];

    std::vector<SubmodulePiece> ideals = decompose_module(reg, field);
    std::vector<TCMorphism> idems;
    TCMorphism total = tc_zero(x.x, x.x);
    for (const SubmodulePiece& ideal : ideals) {
        Mat r = mat_mul(ideal.inj, mat_mul(ideal.proj, id_vec));
        std::vector<CycScalar> co(k);
        for (long t = 0; t < k; ++t) co[t] = r.at(t, 0);
        TCMorphism e = mor_combine(comm, co);
        require(compose(e, e) == e, "split: ideal projector is not idempotent");
        idems.push_back(std::move(e));
        total = total + idems.back();
    }
    require(total == tc_identity(x.x), "split: idempotents do not sum to the identity");
    for (std::size_t i = 0; i < idems.size(); ++i)
        for (std::size_t j = i + 1; j < idems.size(); ++j)
            require(compose(idems[i], idems[j]) == tc_zero(x.x, x.x),
                    "split: idempotents are not orthogonal");

    std::vector<Bimodule> out;
    for (const TCMorphism& e : idems)
        out.push_back(restrict_bimodule(x, split_idem_morphism(x.cat(), e)));
    return out;
}

std::string fmt_dim(const CycScalar& d) {
    if (d.is_rational()) return fmt_rational(d.rational_value());
    return "(irrational)";
}

// --- enumeration ------------------------------------------------------------

struct EnumBuilder {
    const TensorCategory& base;
    CrossedProduct& c;
    const CycField* field;
    const EnumOptions& opt;

    std::vector<Bimodule> listed;
    std::vector<std::vector<long>> rows;                      // induced multiplicities
    std::vector<std::vector<std::optional<ProductCell>>> cell;
    std::vector<long> dual_match;
    bool grew = false;

    EnumBuilder(const TensorCategory& b, CrossedProduct& cp, const EnumOptions& o)
        : base(b), c(cp), field(cp.alg->alg->hopf.field), opt(o) {}

    long count(const Bimodule& a, const Bimodule& b) {
        return static_cast<long>(bimodule_hom(a, b).size());
    }

    InductionCertificate snapshot(bool complete, long rounds) const {
        InductionCertificate cert;
        cert.mult = rows;
        for (std::vector<long>& row : cert.mult)
            if (!row.empty()) row.resize(listed.size(), 0);
        cert.rounds = rounds;
        cert.complete = complete;
        CycScalar ha = base.dim_of(c.h.x);
        for (long s = 0; s < base.simple_count(); ++s)
            cert.induced_dim.push_back(ha * base.simple_dim(s) * ha);
        std::ostringstream os;
        os << listed.size() << " simple(s)";
        for (std::size_t s = 0; s < rows.size(); ++s) {
            os << "; induced[" << s << "] ->";
            if (rows[s].empty())
                os << " (pending)";
            else
                for (long m : rows[s]) os << " " << m;
        }
        cert.detail = os.str();
        return cert;
    }

    [[noreturn]] void stall(const std::string& why, long rounds) {
        throw EnumerationStall("enumeration stalled: " + why, snapshot(false, rounds));
    }

    // Index of the listed simple isomorphic to b, or a fresh index after
    // appending b.  Scans in listing order, so labels are deterministic.
    long match_or_add(Bimodule b) {
        for (std::size_t l = 0; l < listed.size(); ++l)
            if (count(b, listed[l]) > 0) return static_cast<long>(l);
        listed.push_back(std::move(b));
        grew = true;
        return static_cast<long>(listed.size()) - 1;
    }

    // Fully decompose the object induced from an ambient simple.  Splitting
    // happens in two stages: first the one-sided module (whose commutant is
    // the based algebra itself, so the solves stay small), then each piece
    // after inducting the other leg.
    std::vector<Bimodule> split_induced(long s, long rounds) {
        std::vector<Bimodule> out;
        try {
            TCObject obj = base.simple_object(s);
            Bimodule mid = make_bimodule(c.triv, c.triv, obj, {tc_identity(obj)},
                                         {tc_identity(obj)});
            Bimodule m = tensor_bimodule(c.h_op, mid);
            for (const Bimodule& q : split_simple_pieces(m, field)) {
                Bimodule r = tensor_bimodule(q, c.h);
                for (Bimodule& p : split_simple_pieces(r, field)) out.push_back(std::move(p));
            }
        } catch (const SplitStall& st) {
            stall("splitting the object induced from ambient simple " + std::to_string(s) +
                      " failed: " + st.what(),
                  rounds);
        }
        return out;
    }

    // Certificate row for one ambient simple: match every piece of the
    // complete decomposition against the list, then re-check the exact
    // dimension accounting.
    std::vector<long> induced_row(long s, long rounds) {
        std::vector<Bimodule> pieces = split_induced(s, rounds);
        std::vector<long> row;
        for (Bimodule& p : pieces) {
            long idx = match_or_add(std::move(p));
            if (idx >= static_cast<long>(row.size())) row.resize(idx + 1, 0);
            ++row[idx];
        }
        row.resize(listed.size(), 0);
        CycScalar total = cyc(0);
        for (std::size_t k = 0; k < row.size(); ++k)
            total = total + base.dim_of(listed[k].x) * cyc(row[k]);
        CycScalar ha = base.dim_of(c.h.x);
        if (!(total == ha * base.simple_dim(s) * ha))
            stall("dimension accounting fails for ambient simple " + std::to_string(s), rounds);
        return row;
    }

    // Multiplicities of every listed simple inside a big bimodule, with the
    // exact dimension accounting; splits the big one when counting leaves a
    // remainder, so nothing is ever silently dropped.
    std::vector<long> full_row(const Bimodule& big, long rounds, const std::string& what,
                               std::vector<std::vector<TCMorphism>>* into = nullptr) {
        std::vector<long> row;
        std::vector<std::vector<TCMorphism>> maps;
        auto top_up = [&] {
            while (row.size() < listed.size()) {
                maps.push_back(bimodule_hom(listed[row.size()], big));
                row.push_back(static_cast<long>(maps.back().size()));
            }
        };
        auto accounted = [&] {
            CycScalar total = cyc(0);
            for (std::size_t k = 0; k < row.size(); ++k)
                total = total + base.dim_of(listed[k].x) * cyc(row[k]);
            return total == base.dim_of(big.x);
        };
        top_up();
        if (!accounted()) {
            std::vector<Bimodule> pieces;
            try {
                pieces = split_simple_pieces(big, field);
            } catch (const SplitStall& st) {
                stall("splitting " + what + " failed: " + st.what(), rounds);
            }
            for (Bimodule& p : pieces) match_or_add(std::move(p));
            top_up();
            if (!accounted()) stall("dimension accounting fails for " + what, rounds);
        }
        if (into != nullptr) *into = std::move(maps);
        return row;
    }

    void build() {
        long r = base.simple_count();
        long unit_s = base.unit_simple();
        rows.assign(r, {});
        listed.push_back(c.unit->bim);  // canonical representative of the unit class

        std::vector<long> order{unit_s};
        for (long s = 0; s < r; ++s)
            if (s != unit_s) order.push_back(s);

        long rounds = 0;
        for (;;) {
            if (rounds >= opt.max_rounds) stall("closure exceeded the round limit", rounds);
            ++rounds;
            grew = false;

            for (long s : order)
                if (rows[s].empty()) {
                    rows[s] = induced_row(s, rounds);
                    if (s == unit_s && rows[s][0] != 1)
                        stall("the induced unit does not contain the unit class exactly once",
                              rounds);
                }

            const bool trace = std::getenv("ORBI_TRACE") != nullptr;
            if (trace)
                std::fprintf(stderr, "[enum] round %ld: %zu listed after rows\n", rounds,
                             listed.size());
            long known = static_cast<long>(listed.size());
            cell.resize(known);
            for (long i = 0; i < known; ++i) {
                cell[i].resize(known);
                for (long j = 0; j < known; ++j) {
                    if (cell[i][j] && cell[i][j]->mult.size() == listed.size()) continue;
                    if (!cell[i][j]) {
                        ProductCell pc;
                        pc.prod = rel_tensor(listed[i], listed[j]);
                        cell[i][j] = std::move(pc);
                    }
                    ProductCell& pc = *cell[i][j];
                    pc.mult = full_row(pc.prod.prod, rounds,
                                       "the product of simples " + std::to_string(i) + " and " +
                                           std::to_string(j),
                                       &pc.into);
                    if (trace) std::fprintf(stderr, "[enum] cell %ld %ld done\n", i, j);
                }
            }

            dual_match.resize(listed.size(), -1);
            for (std::size_t k = 0; k < dual_match.size(); ++k)
                if (dual_match[k] < 0) {
                    if (trace) std::fprintf(stderr, "[enum] dual of %zu\n", k);
                    dual_match[k] = match_or_add(dual_bimodule(listed[k]));
                }

            bool rows_full = true;
            for (long s = 0; s < r; ++s)
                if (rows[s].empty()) rows_full = false;
            if (!grew && rows_full) break;
        }

        // Distinctness and simplicity of the listed representatives.
        for (std::size_t k = 0; k < listed.size(); ++k)
            for (std::size_t l = 0; l < listed.size(); ++l) {
                long d = count(listed[k], listed[l]);
                if (d != (k == l ? 1 : 0))
                    stall("listed simples are not pairwise disjoint with scalar endomorphisms" +
                              std::string(" (hom ") + std::to_string(k) + " -> " +
                              std::to_string(l) + " has dimension " + std::to_string(d) + ")",
                          rounds);
            }

        for (std::size_t k = 0; k < listed.size(); ++k) {
            CrossedSimple cs;
            cs.label = "Z" + std::to_string(k);
            cs.rep = listed[k];
            cs.dim_sq = rel_dim_sq(listed[k]);
            c.simples.push_back(std::move(cs));
        }
        c.cells.assign(listed.size(), {});
        for (std::size_t i = 0; i < listed.size(); ++i)
            for (std::size_t j = 0; j < listed.size(); ++j)
                c.cells[i].push_back(std::move(*cell[i][j]));
        c.cert = snapshot(true, rounds);
    }
};

}  // namespace

CrossedProduct enumerate_simples(const TensorCategory& base,
                                 std::shared_ptr<const Embedding> alg,
                                 const EnumOptions& opt) {
    require(alg != nullptr && alg->cat == &base,
            "enumerate_simples: the symmetry is not realized in this category");
    CrossedProduct c;
    c.base = &base;
    c.alg = std::move(alg);
    c.triv = trivial_embedding(base);
    c.unit = std::make_shared<UnitObject>(unit_bimodule(c.alg));
    const Bimodule& a = c.unit->bim;
    c.h = make_bimodule(c.triv, c.alg, a.x, {tc_identity(a.x)}, a.psi);
    c.h_op = make_bimodule(c.alg, c.triv, a.x, a.phi, {tc_identity(a.x)});
    EnumBuilder(base, c, opt).build();
    return c;
}

const FusionRing& fusion_ring(CrossedProduct& c) {
    if (c.fusion_ready) return c.fusion;
    require(!c.simples.empty() && !c.cells.empty(), "fusion_ring: enumeration data missing");
    FusionRing ring;
    long r = static_cast<long>(c.simples.size());
    ring.unit = 0;
    for (const CrossedSimple& s : c.simples) {
        ring.labels.push_back(s.label);
        ring.dim_sq.push_back(s.dim_sq);
    }
    ring.n.assign(r, std::vector<std::vector<long>>(r, std::vector<long>(r, 0)));
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j)
            for (long k = 0; k < r; ++k) ring.n[i][j][k] = c.cells[i][j].mult[k];
    ring.validate();
    c.fusion = std::move(ring);
    c.fusion_ready = true;
    return c.fusion;
}

long absorbing_check(CrossedProduct& c) {
    const TensorCategory& cat = *c.base;
    Bimodule hdual = dual_bimodule(c.h);
    RelTensor hh = rel_tensor(c.h, hdual);
    RelTensor triple = rel_tensor(hh.prod, c.h);
    const Bimodule& p = triple.prod;
    long e = static_cast<long>(bimodule_hom(c.h, c.h).size());
    std::vector<TCMorphism> into = bimodule_hom(c.h, p);
    long h = static_cast<long>(into.size());
    require(e > 0, "absorbing: the algebra corner has no endomorphisms");
    if (e == 1) {
        if (!(cat.dim_of(p.x) == cat.dim_of(c.h.x) * cyc(h)))
            throw std::runtime_error(
                "absorbing: triple product is not a multiple of the corner (dim " +
                fmt_dim(cat.dim_of(p.x)) + " vs " + std::to_string(h) + " x " +
                fmt_dim(cat.dim_of(c.h.x)) + ")");
        DsumData amp = make_amp(cat, c.h.x, h);
        TCMorphism u = tc_zero(amp.obj, p.x);
        for (long i = 0; i < h; ++i) u = u + compose(into[i], amp.proj[i]);
        try {
            mor_inverse(u);
        } catch (const std::domain_error&) {
            throw std::runtime_error(
                "absorbing: the combined inclusion of " + std::to_string(h) +
                " corner copies is not invertible");
        }
        return h;
    }
    long q = static_cast<long>(bimodule_hom(p, p).size());
    if (h % e != 0)
        throw std::runtime_error("absorbing: hom count " + std::to_string(h) +
                                 " is not a multiple of End = " + std::to_string(e));
    long m = h / e;
    if (q != m * m * e)
        throw std::runtime_error("absorbing: End of the triple product has dimension " +
                                 std::to_string(q) + ", expected " + std::to_string(m * m * e));
    return m;
}

// --- the dual symmetry ------------------------------------------------------

namespace {

// Biorthogonal (into, from) pairs for one simple inside a decomposed object:
// from rows are recombined so that from[t] o into[t'] = delta id.
std::vector<std::pair<TCMorphism, TCMorphism>> biorthogonal_pairs(
    const std::vector<TCMorphism>& into, const std::vector<TCMorphism>& from_raw,
    const std::string& what) {
    require(into.size() == from_raw.size(),
            what + ": hom spaces into and out of a simple have different dimensions");
    long n = static_cast<long>(into.size());
    std::vector<std::pair<TCMorphism, TCMorphism>> out;
    if (n == 0) return out;
    Mat g(n, n);
    for (long s = 0; s < n; ++s)
        for (long t = 0; t < n; ++t)
            g.at(s, t) = scalar_unit_coeff(compose(from_raw[s], into[t]));
    Mat ginv;
    try {
        ginv = inverse(g);
    } catch (const std::domain_error&) {
        throw std::runtime_error(what + ": degenerate pairing between into and from maps");
    }
    for (long t = 0; t < n; ++t) {
        TCMorphism f = tc_zero(from_raw[0].src, from_raw[0].dst);
        for (long s = 0; s < n; ++s)
            if (!ginv.at(t, s).is_zero()) f = f + mor_scaled(from_raw[s], ginv.at(t, s));
        out.emplace_back(into[t], std::move(f));
    }
    return out;
}

}  // namespace

EFunctor e_functor(CrossedProduct& c) {
    require(!c.simples.empty() && !c.cells.empty(), "e_functor: enumeration data missing");
    long r = static_cast<long>(c.simples.size());
    EFunctor e;
    for (long i = 0; i < r; ++i) {
        e.hz.push_back(rel_tensor(c.h, c.simples[i].rep));
        e.basis.push_back(bimodule_hom(c.h, e.hz.back().prod));
        e.dims.push_back(static_cast<long>(e.basis.back().size()));
    }
    require(e.dims[0] == 1, "e_functor: the unit must induce a one-dimensional block, got " +
                                std::to_string(e.dims[0]));

    std::vector<Mat> basis_mat(r);
    for (long i = 0; i < r; ++i)
        if (e.dims[i] > 0) basis_mat[i] = mor_matrix(e.basis[i]);

    // Biorthogonal decomposition of every product into listed simples.
    e.parts.assign(r, std::vector<std::vector<EFunctor::Part>>(r));
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j) {
            const ProductCell& cell = c.cells[i][j];
            const Bimodule& prod = cell.prod.prod;
            TCMorphism total = tc_zero(prod.x, prod.x);
            for (long k = 0; k < r; ++k) {
                if (cell.mult[k] == 0) continue;
                std::vector<TCMorphism> from_raw = bimodule_hom(prod, c.simples[k].rep);
                auto pairs = biorthogonal_pairs(cell.into[k], from_raw,
                                                "e_functor: product " + std::to_string(i) +
                                                    " x " + std::to_string(j) + " at simple " +
                                                    std::to_string(k));
                for (auto& pr : pairs) {
                    EFunctor::Part part;
                    part.simple = k;
                    part.into = std::move(pr.first);
                    part.from = std::move(pr.second);
                    total = total + compose(part.into, part.from);
                    e.parts[i][j].push_back(std::move(part));
                }
            }
            require(total == tc_identity(prod.x),
                    "e_functor: the decomposition of product " + std::to_string(i) + " x " +
                        std::to_string(j) + " is not complete");
        }

    // Multiplication maps (x, y) -> (x tensor 1) after y, expressed in the
    // chosen bases; they must be square and invertible.
    const TensorCategory& cat = *c.base;
    e.mult.assign(r, std::vector<Mat>(r));
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < r; ++j) {
            const ProductCell& cell = c.cells[i][j];
            RelTensor hzp = rel_tensor(c.h, cell.prod.prod);
            RelTensor tij = rel_tensor(e.hz[i].prod, c.simples[j].rep);
            TCMorphism widen = cat.tensor_mor(e.hz[i].incl, tc_identity(c.simples[j].rep.x));
            TCMorphism gather = cat.tensor_mor(tc_identity(c.h.x), cell.prod.proj);
            TCMorphism cmp = compose(hzp.proj, compose(gather, compose(widen, tij.incl)));
            long cols = e.dims[i] * e.dims[j];
            long rows = 0;
            for (const EFunctor::Part& part : e.parts[i][j]) rows += e.dims[part.simple];
            require(rows == cols, "e_functor: multiplication " + std::to_string(i) + " x " +
                                      std::to_string(j) + " maps dimension " +
                                      std::to_string(cols) + " to " + std::to_string(rows));
            Mat jm(rows, cols);
            for (long a = 0; a < e.dims[i]; ++a)
                for (long b = 0; b < e.dims[j]; ++b) {
                    TCMorphism lift = rel_tensor_morphism(e.hz[j], tij, e.basis[i][a],
                                                          tc_identity(c.simples[j].rep.x));
                    TCMorphism total = compose(cmp, compose(lift, e.basis[j][b]));
                    long row0 = 0;
                    for (const EFunctor::Part& part : e.parts[i][j]) {
                        TCMorphism down = rel_tensor_morphism(hzp, e.hz[part.simple],
                                                              tc_identity(c.h.x), part.from);
                        std::vector<CycScalar> co =
                            mor_coords(basis_mat[part.simple], compose(down, total));
                        for (std::size_t t = 0; t < co.size(); ++t)
                            jm.at(row0 + static_cast<long>(t), a * e.dims[j] + b) = co[t];
                        row0 += e.dims[part.simple];
                    }
                }
            try {
                inverse(jm);
            } catch (const std::domain_error&) {
                throw std::runtime_error("e_functor: multiplication " + std::to_string(i) +
                                         " x " + std::to_string(j) + " is not invertible");
            }
            e.mult[i][j] = std::move(jm);
        }
    return e;
}

DualData dual_embedding(CrossedProduct& c, const EFunctor& e) {
    const FusionRing& ring = fusion_ring(c);
    long n = ring.rank();
    for (long k = 0; k < n; ++k)
        require(e.dims[k] == 1,
                "dual_embedding: block " + std::to_string(k) + " has dimension " +
                    std::to_string(e.dims[k]) +
                    "; only one-dimensional blocks are supported");
    require(ring.is_pointed(), "dual_embedding: the crossed fusion ring is not pointed");

    DualData d;

    // The dual algebra carried by the blocks: pointwise product, coproduct
    // from the (conjugation-free, since blocks are lines) multiplication
    // decomposition, counit at the unit block.
    HopfAlgebra b;
    b.name = "dual(" + c.alg->alg->hopf.name + ")";
    b.dim = n;
    b.field = c.alg->alg->hopf.field;
    for (long k = 0; k < n; ++k) b.labels.push_back(ring.labels[k]);
    b.m = Mat(n, n * n);
    for (long i = 0; i < n; ++i) b.m.at(i, i * n + i) = cyc(1);
    b.u = Mat(n, 1);
    for (long i = 0; i < n; ++i) b.u.at(i, 0) = cyc(1);
    b.cm = Mat(n * n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) b.cm.at(i * n + j, ring.pointed_product(i, j)) = cyc(1);
    b.cu = Mat(1, n);
    b.cu.at(0, ring.unit) = cyc(1);
    b.s = Mat(n, n);
    std::optional<Mat> anti = solve_antipode(b);
    require(anti.has_value(), "dual_embedding: the reconstructed algebra has no antipode");
    b.s = *anti;
    d.axioms = hopf_axioms(b);
    for (const AxiomCheck& ax : d.axioms)
        require(ax.ok, "dual_embedding: reconstructed algebra fails " + ax.name + ": " +
                           ax.witness);
    d.b = b;

    // Hand-assembled module data: one line per block, acting by coordinate
    // projection; the Fourier toolkit is diagonal in this basis.
    RepTheory bt;
    bt.hopf = b;
    for (long k = 0; k < n; ++k) {
        Irrep w;
        w.label = ring.labels[k];
        w.dim = 1;
        for (long i = 0; i < n; ++i) {
            Mat a(1, 1);
            if (i == k) a.at(0, 0) = cyc(1);
            w.action.push_back(std::move(a));
            w.character.push_back(i == k ? cyc(1) : CycScalar());
        }
        bt.irreps.push_back(std::move(w));
        Mat eu(n, 1);
        eu.at(k, 0) = cyc(1);
        bt.matrix_units.push_back({std::move(eu)});
        Mat fu(1, n);
        fu.at(0, k) = cyc(1);
        bt.dual_functionals.push_back({std::move(fu)});
    }
    std::optional<Mat> integ = integral_element(b);
    require(integ.has_value(), "dual_embedding: the reconstructed algebra has no integral");
    bt.integral = *integ;
    bt.dual_integral = Mat(1, n);
    for (long k = 0; k < n; ++k) bt.dual_integral.at(0, k) = cyc(1, n);
    d.btheory = std::make_shared<RepTheory>(std::move(bt));

    // The strict word skeleton of the crossed product, and the realization of
    // the dual symmetry on single letters.
    d.skel = std::make_shared<WordCategory>(ring);
    Embedding emb;
    emb.cat = d.skel.get();
    emb.alg = d.btheory;
    for (long k = 0; k < n; ++k) emb.image.push_back(d.skel->word_object({k}));
    emb.fuse.assign(n, std::vector<Realized>(n));
    emb.mu.assign(n, std::vector<TCMorphism>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            long k = ring.pointed_product(i, j);
            Realized rz;
            ActionPart part;
            part.simple = k;
            part.inj = Mat::identity(1);
            part.proj = Mat::identity(1);
            rz.parts.push_back(std::move(part));
            rz.sum = make_dsum(*d.skel, {emb.image[k]});
            emb.fuse[i][j] = std::move(rz);
            emb.mu[i][j] = tc_identity(emb.image[k]);
        }
    finish_embedding(emb);
    d.emb = std::make_shared<const Embedding>(std::move(emb));
    d.bunit = std::make_shared<UnitObject>(unit_bimodule(d.emb));
    return d;
}

ImprimitivityObject imprimitivity(const CrossedProduct& c, const EFunctor& e,
                                  const DualData& d) {
    const TensorCategory& cat = *c.base;
    long r = static_cast<long>(c.simples.size());
    for (long k = 0; k < r; ++k)
        require(e.dims[k] == 1, "imprimitivity: needs one-dimensional blocks");

    ImprimitivityObject im;
    im.m = c.h;
    for (long g = 0; g < r; ++g) im.transport.push_back(e.basis[g][0]);

    // The joint commutant: ambient endomorphisms of the connector commuting
    // with every transport.
    std::vector<TCMorphism> cand = hom_space(im.m.x, im.m.x);
    long nc = static_cast<long>(cand.size());
    long rows_total = 0;
    std::vector<std::vector<Mat>> defects(nc);
    for (long g = 0; g < r; ++g) {
        for (long t = 0; t < nc; ++t) {
            TCMorphism push = compose(e.hz[g].proj,
                                      compose(cat.tensor_mor(cand[t], tc_identity(
                                                                 c.simples[g].rep.x)),
                                              e.hz[g].incl));
            TCMorphism dmor = compose(im.transport[g], cand[t]) -
                              compose(push, im.transport[g]);
            Mat col(mor_entry_count(dmor), 1);
            long rr = 0;
            for (const Mat& blk : dmor.blocks)
                for (long i = 0; i < blk.rows(); ++i)
                    for (long j = 0; j < blk.cols(); ++j) col.at(rr++, 0) = blk.at(i, j);
            defects[t].push_back(std::move(col));
        }
        rows_total += defects[0].back().rows();
    }
    Mat sys(rows_total, nc);
    for (long t = 0; t < nc; ++t) {
        long rr = 0;
        for (const Mat& col : defects[t])
            for (long i = 0; i < col.rows(); ++i) sys.at(rr++, t) = col.at(i, 0);
    }
    im.end_m = sys.cols() - rank(sys);

    // The unit transport is the canonical right-unit coinduction, up to a
    // nonzero scalar.
    RightUnit ru = right_unit_maps(*c.unit, c.h);
    TCMorphism lifted = compose(e.hz[0].incl, im.transport[0]);
    {
        Mat bm = mor_matrix({ru.nu});
        Mat rhs(bm.rows(), 1);
        long rr = 0;
        for (const Mat& blk : lifted.blocks)
            for (long i = 0; i < blk.rows(); ++i)
                for (long j = 0; j < blk.cols(); ++j) rhs.at(rr++, 0) = blk.at(i, j);
        Mat x;
        im.unit_transport_ok = solve(bm, rhs, x) && !x.at(0, 0).is_zero();
    }

    // The coinduced object dual(m) (x) m decomposes against the blocks of the
    // dual unit: one biorthogonal pair per block dimension.
    im.x0 = tensor_bimodule(dual_bimodule(c.h), c.h);
    TCMorphism total = tc_zero(im.x0.x, im.x0.x);
    bool complete = true;
    for (long g = 0; g < r; ++g) {
        std::vector<TCMorphism> into = bimodule_hom(c.simples[g].rep, im.x0);
        std::vector<TCMorphism> from_raw = bimodule_hom(im.x0, c.simples[g].rep);
        if (static_cast<long>(into.size()) != d.btheory->dim_of(g)) complete = false;
        ImprimitivityObject::Row row;
        row.simple = g;
        row.pairs = biorthogonal_pairs(into, from_raw,
                                       "imprimitivity: coinduced block " + std::to_string(g));
        for (const auto& pr : row.pairs) total = total + compose(pr.first, pr.second);
        im.coinduced.push_back(std::move(row));
    }
    if (!(total == tc_identity(im.x0.x))) complete = false;
    im.coinduced_complete = complete;

    im.counit_witness = cat.ev_r(c.h.x);
    require(!(im.counit_witness == tc_zero(im.counit_witness.src, im.counit_witness.dst)),
            "imprimitivity: the evaluation witness vanishes");

    if (im.end_m != 1 || !im.unit_transport_ok || !im.coinduced_complete)
        throw std::runtime_error(
            "imprimitivity: the joint commutant has dimension " + std::to_string(im.end_m) +
            std::string(im.unit_transport_ok ? "" : "; the unit transport is not canonical") +
            std::string(im.coinduced_complete ? ""
                                              : "; the coinduced object misses dual blocks") +
            "; expected a one-dimensional commutant with matching blocks");
    im.end_product = im.end_m;
    return im;
}

// --- the double crossing ----------------------------------------------------

DualityReport duality_verify(const TensorCategory& base,
                             std::shared_ptr<const Embedding> alg, const EnumOptions& opt) {
    DualityReport rep;
    rep.stage = "first crossing";
    CrossedProduct c1 = enumerate_simples(base, std::move(alg), opt);
    rep.first_cert = c1.cert;
    fusion_ring(c1);

    rep.stage = "block functor";
    EFunctor e = e_functor(c1);

    rep.stage = "dual symmetry";
    DualData d = dual_embedding(c1, e);

    rep.stage = "second crossing";
    CrossedProduct c2 = enumerate_simples(*d.skel, d.emb, opt);
    rep.second_cert = c2.cert;
    rep.second_ring = fusion_ring(c2);

    rep.stage = "comparison";
    rep.base_ring = fusion_ring_of(base);
    rep.base_count = base.simple_count();
    rep.second_count = static_cast<long>(c2.simples.size());
    rep.counts_match = rep.base_count == rep.second_count;
    if (!rep.counts_match) {
        rep.first_divergence = "simple counts differ: " + std::to_string(rep.second_count) +
                               " vs " + std::to_string(rep.base_count);
        return rep;
    }

    std::vector<Rational> lhs = rep.second_ring.dim_sq, rhs = rep.base_ring.dim_sq;
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    rep.dims_match = lhs == rhs;
    if (!rep.dims_match) {
        for (std::size_t i = 0; i < lhs.size(); ++i)
            if (lhs[i] != rhs[i]) {
                rep.first_divergence = "squared dimensions differ at sorted slot " +
                                       std::to_string(i) + ": " + fmt_rational(lhs[i]) +
                                       " vs " + fmt_rational(rhs[i]);
                break;
            }
        return rep;
    }

    // Seed the fusion matching with conjugation multiplicities: a second-level
    // simple prefers the base simples whose induction rows overlap its own.
    std::vector<std::vector<long>> preference(rep.second_ring.rank());
    long r1 = static_cast<long>(c1.simples.size());
    for (long w = 0; w < rep.second_ring.rank(); ++w) {
        std::vector<std::pair<long, long>> scored;
        for (long s = 0; s < rep.base_ring.rank(); ++s) {
            long score = 0;
            for (long g = 0; g < r1; ++g)
                if (g < static_cast<long>(c1.cert.mult[s].size()) &&
                    w < static_cast<long>(c2.cert.mult[g].size()))
                    score += c1.cert.mult[s][g] * c2.cert.mult[g][w];
            scored.emplace_back(-score, s);
        }
        std::stable_sort(scored.begin(), scored.end());
        for (const auto& sc : scored) preference[w].push_back(sc.second);
    }
    FusionMatch fm = match_fusion_rings(rep.second_ring, rep.base_ring, preference);
    rep.iso = fm.iso;
    if (!fm.iso) {
        rep.first_divergence = fm.first_divergence;
        return rep;
    }
    rep.stage = "complete";
    return rep;
}

}  // namespace orbicat
