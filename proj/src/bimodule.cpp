#include "orbicat/bimodule.hpp"

#include <stdexcept>
#include <utility>

#include "orbicat/hopf.hpp"

namespace orbicat {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

void check(bool ok, const char* what) {
    if (!ok) throw std::runtime_error(what);
}

TCMorphism msum(const TCObject& src, const TCObject& dst, const std::vector<TCMorphism>& terms) {
    TCMorphism acc = tc_zero(src, dst);
    for (const TCMorphism& t : terms) acc = acc + t;
    return acc;
}

// Permutation matrix sending source copy (b, a) [b-major over dB x dA] to
// target copy (a, b) [a-major over dA x dB].
Mat flip_mat(long da, long db) {
    Mat f(da * db, db * da);
    for (long a = 0; a < da; ++a)
        for (long b = 0; b < db; ++b) f.at(a * db + b, b * da + a) = cyc(1);
    return f;
}

CycScalar scalar_multiple(const TCMorphism& f) {
    require(f.src.mult == f.dst.mult, "scalar_multiple: need an endomorphism");
    CycScalar s;
    for (std::size_t k = 0; k < f.blocks.size(); ++k)
        if (f.src.mult[k] > 0) {
            s = f.blocks[k].at(0, 0);
            break;
        }
    check(f == mor_scaled(tc_identity(f.src), s), "morphism is not a scalar multiple of the identity");
    return s;
}

}  // namespace

// --- direct sums, amplifications, distributors ------------------------------

DsumData make_dsum(const TensorCategory& cat, std::vector<TCObject> parts) {
    DsumData d;
    d.parts = std::move(parts);
    if (d.parts.empty()) {
        d.obj = cat.zero_object();
        return d;
    }
    d.obj = d.parts[0];
    for (std::size_t i = 1; i < d.parts.size(); ++i) d.obj = cat.direct_sum(d.obj, d.parts[i]);

    long ns = cat.simple_count();
    std::vector<long> offset(ns, 0);
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        TCMorphism inj = tc_zero(d.parts[i], d.obj);
        TCMorphism proj = tc_zero(d.obj, d.parts[i]);
        for (long s = 0; s < ns; ++s)
            for (long c = 0; c < d.parts[i].mult[s]; ++c) {
                inj.blocks[s].at(offset[s] + c, c) = cyc(1);
                proj.blocks[s].at(c, offset[s] + c) = cyc(1);
            }
        for (long s = 0; s < ns; ++s) offset[s] += d.parts[i].mult[s];
        d.inj.push_back(std::move(inj));
        d.proj.push_back(std::move(proj));
    }
    return d;
}

DsumData make_amp(const TensorCategory& cat, const TCObject& x, long copies) {
    require(copies >= 0, "make_amp: negative copy count");
    return make_dsum(cat, std::vector<TCObject>(copies, x));
}

TCObject object_with_mults(const TensorCategory& cat, const std::vector<long>& mult) {
    require(static_cast<long>(mult.size()) == cat.simple_count(), "object_with_mults: bad length");
    std::vector<TCObject> parts;
    for (long s = 0; s < cat.simple_count(); ++s) {
        require(mult[s] >= 0, "object_with_mults: negative multiplicity");
        TCObject sim = cat.simple_object(s);
        for (long c = 0; c < mult[s]; ++c) parts.push_back(sim);
    }
    return make_dsum(cat, std::move(parts)).obj;
}

TCMorphism amp_of(const DsumData& src, const TCObject& dst_obj, const TCMorphism& f) {
    long copies = static_cast<long>(src.parts.size());
    TCMorphism out{src.obj, dst_obj, {}};
    for (std::size_t s = 0; s < src.obj.mult.size(); ++s) {
        require(dst_obj.mult[s] == copies * f.dst.mult[s] &&
                    src.obj.mult[s] == copies * f.src.mult[s],
                "amp_of: amplification shape mismatch");
        out.blocks.push_back(kron(Mat::identity(copies), f.blocks[s]));
    }
    return out;
}

TCMorphism copy_mix(const DsumData& src, const DsumData& dst, const Mat& m) {
    require(m.cols() == static_cast<long>(src.parts.size()) &&
                m.rows() == static_cast<long>(dst.parts.size()),
            "copy_mix: copy count mismatch");
    const TCObject& base = src.parts.empty() ? (dst.parts.empty() ? src.obj : dst.parts[0])
                                             : src.parts[0];
    TCMorphism out{src.obj, dst.obj, {}};
    for (std::size_t s = 0; s < src.obj.mult.size(); ++s)
        out.blocks.push_back(kron(m, Mat::identity(base.mult[s])));
    return out;
}

TCMorphism dist_left(const TensorCategory& cat, const DsumData& ax, const TCObject& z,
                     const DsumData& axz) {
    TCObject src = cat.tensor(ax.obj, z);
    TCMorphism idz = tc_identity(z);
    std::vector<TCMorphism> terms;
    for (std::size_t i = 0; i < ax.parts.size(); ++i)
        terms.push_back(compose(axz.inj[i], cat.tensor_mor(ax.proj[i], idz)));
    return msum(src, axz.obj, terms);
}

TCMorphism dist_left_inv(const TensorCategory& cat, const DsumData& ax, const TCObject& z,
                         const DsumData& axz) {
    TCObject dst = cat.tensor(ax.obj, z);
    TCMorphism idz = tc_identity(z);
    std::vector<TCMorphism> terms;
    for (std::size_t i = 0; i < ax.parts.size(); ++i)
        terms.push_back(compose(cat.tensor_mor(ax.inj[i], idz), axz.proj[i]));
    return msum(axz.obj, dst, terms);
}

TCMorphism dist_right(const TensorCategory& cat, const TCObject& z, const DsumData& ax,
                      const DsumData& azx) {
    TCObject src = cat.tensor(z, ax.obj);
    TCMorphism idz = tc_identity(z);
    std::vector<TCMorphism> terms;
    for (std::size_t i = 0; i < ax.parts.size(); ++i)
        terms.push_back(compose(azx.inj[i], cat.tensor_mor(idz, ax.proj[i])));
    return msum(src, azx.obj, terms);
}

TCMorphism dist_right_inv(const TensorCategory& cat, const TCObject& z, const DsumData& ax,
                          const DsumData& azx) {
    TCObject dst = cat.tensor(z, ax.obj);
    TCMorphism idz = tc_identity(z);
    std::vector<TCMorphism> terms;
    for (std::size_t i = 0; i < ax.parts.size(); ++i)
        terms.push_back(compose(cat.tensor_mor(idz, ax.inj[i]), azx.proj[i]));
    return msum(azx.obj, dst, terms);
}

TCMorphism mor_inverse(const TCMorphism& f) {
    TCMorphism out{f.dst, f.src, {}};
    for (std::size_t s = 0; s < f.blocks.size(); ++s) {
        if (f.src.mult[s] != f.dst.mult[s]) throw std::domain_error("mor_inverse: non-square block");
        out.blocks.push_back(f.src.mult[s] > 0 ? inverse(f.blocks[s]) : Mat(0, 0));
    }
    return out;
}

SplitPart split_idem_morphism(const TensorCategory& cat, const TCMorphism& e) {
    require(e.src.mult == e.dst.mult, "split_idem_morphism: need an endomorphism");
    std::vector<long> mult;
    std::vector<IdempotentSplit> pieces;
    for (const Mat& b : e.blocks) {
        pieces.push_back(split_idempotent(b));
        mult.push_back(pieces.back().inj.cols());
    }
    SplitPart sp;
    sp.obj = object_with_mults(cat, mult);
    sp.incl = TCMorphism{sp.obj, e.src, {}};
    sp.proj = TCMorphism{e.src, sp.obj, {}};
    for (const IdempotentSplit& p : pieces) {
        sp.incl.blocks.push_back(p.inj);
        sp.proj.blocks.push_back(p.proj);
    }
    return sp;
}

// --- symmetry embeddings ----------------------------------------------------

Realized realize(const Embedding& emb, const std::vector<Mat>& action) {
    Realized r;
    r.parts = decompose_action(*emb.alg, action);
    std::vector<TCObject> objs;
    for (const ActionPart& p : r.parts) objs.push_back(emb.image[p.simple]);
    r.sum = make_dsum(*emb.cat, std::move(objs));
    return r;
}

void finish_embedding(Embedding& emb) {
    require(emb.cat != nullptr && emb.alg != nullptr, "finish_embedding: missing category or algebra");
    const TensorCategory& cat = *emb.cat;
    const RepTheory& rt = *emb.alg;
    long r = rt.simple_count();
    require(static_cast<long>(emb.image.size()) == r, "finish_embedding: one image per simple");
    require(static_cast<long>(emb.fuse.size()) == r && static_cast<long>(emb.mu.size()) == r,
            "finish_embedding: fusion tables incomplete");
    check(cat.same_object(emb.image[0], cat.unit_object()),
          "embedding: the trivial simple must land on the unit");
    for (long s = 0; s < r; ++s)
        for (long t = 0; t < r; ++t) {
            mor_inverse(emb.mu[s][t]);  // throws when not invertible
        }
    for (long t = 0; t < r; ++t) {
        check(emb.mu[0][t] == tc_identity(emb.image[t]) && emb.mu[t][0] == tc_identity(emb.image[t]),
              "embedding: fusion against the unit must be trivial");
    }

    long n = rt.hopf.dim;
    emb.dual_label.assign(r, -1);
    for (long s = 0; s < r; ++s) {
        std::vector<CycScalar> want;
        for (long t = 0; t < n; ++t) {
            CycScalar acc;
            for (long j = 0; j < n; ++j) {
                const CycScalar& c = rt.hopf.s.at(j, t);
                if (!c.is_zero()) acc += c * rt.irreps[s].character[j];
            }
            want.push_back(acc);
        }
        for (long w = 0; w < r; ++w)
            if (rt.irreps[w].character == want) {
                emb.dual_label[s] = w;
                break;
            }
        check(emb.dual_label[s] >= 0, "embedding: no simple carries the dual character");
    }

    emb.dualw.clear();
    emb.chi.clear();
    emb.dual_basis_inj.clear();
    for (long s = 0; s < r; ++s) {
        long sbar = emb.dual_label[s];
        long d = rt.dim_of(s);
        const TCObject& fv = emb.image[s];
        const TCObject& fbar = emb.image[sbar];

        // Coordinates of the dual module, decomposed to locate the canonical
        // copy of the dual simple.
        std::vector<Mat> dual_action;
        for (long t = 0; t < n; ++t) {
            Mat coords(n, 1);
            for (long j = 0; j < n; ++j) coords.at(j, 0) = rt.hopf.s.at(j, t);
            dual_action.push_back(rho_of_vec(rt.irreps[s], coords).transpose());
        }
        std::vector<ActionPart> dparts = decompose_action(rt, dual_action);
        check(dparts.size() == 1 && dparts[0].simple == sbar,
              "embedding: dual coordinates do not form the dual simple");
        emb.dual_basis_inj.push_back(dparts[0].inj);

        const Realized& fus = emb.fuse[sbar][s];
        check(!fus.parts.empty() && fus.parts[0].simple == 0,
              "embedding: fusion with the dual lacks a leading unit part");
        TCMorphism pair_down = compose(fus.sum.proj[0], emb.mu[sbar][s]);
        TCMorphism winv = compose(cat.tensor_mor(pair_down, tc_identity(cat.dual(fv))),
                                  cat.tensor_mor(tc_identity(fbar), cat.coev(fv)));
        TCMorphism dualw_raw = mor_inverse(winv);
        TCMorphism chi_raw =
            compose(cat.tensor_mor(dualw_raw, tc_identity(fv)), cat.coev_r(fv));

        CycScalar t_cat = scalar_of(compose(fus.sum.proj[0], compose(emb.mu[sbar][s], chi_raw)));
        CycScalar t_rep;
        for (long a = 0; a < d; ++a)
            for (long i = 0; i < d; ++i)
                t_rep += fus.parts[0].proj.at(0, a * d + i) * dparts[0].proj.at(a, i);
        check(!t_cat.is_zero() && !t_rep.is_zero(),
              "embedding: degenerate pairing while normalizing the copairing");
        CycScalar fac = t_rep / t_cat;
        emb.dualw.push_back(mor_scaled(dualw_raw, fac));
        emb.chi.push_back(mor_scaled(chi_raw, fac));
    }
}

std::shared_ptr<const Embedding> identity_embedding(const RepCat& cat) {
    auto emb = std::make_shared<Embedding>();
    emb->cat = &cat;
    emb->alg = std::make_shared<RepTheory>(cat.theory());
    const RepTheory& rt = *emb->alg;
    long r = rt.simple_count();
    long n = rt.hopf.dim;
    for (long s = 0; s < r; ++s) emb->image.push_back(cat.simple_object(s));
    emb->fuse.resize(r);
    emb->mu.resize(r);
    for (long s = 0; s < r; ++s)
        for (long t = 0; t < r; ++t) {
            std::vector<Mat> action;
            long vd = rt.dim_of(s) * rt.dim_of(t);
            for (long e = 0; e < n; ++e) {
                Mat a(vd, vd);
                for (long j = 0; j < n; ++j)
                    for (long k = 0; k < n; ++k) {
                        const CycScalar& c = rt.hopf.cm.at(j * n + k, e);
                        if (!c.is_zero())
                            a += kron(rt.irreps[s].action[j], rt.irreps[t].action[k]).scaled(c);
                    }
                action.push_back(std::move(a));
            }
            Realized dec = realize(*emb, action);
            Mat stacked(0, vd);
            for (const ActionPart& p : dec.parts) stacked = vstack(stacked, p.proj);
            TCMorphism mu = cat.from_concrete(cat.tensor(emb->image[s], emb->image[t]),
                                              dec.sum.obj, stacked);
            emb->fuse[s].push_back(std::move(dec));
            emb->mu[s].push_back(std::move(mu));
        }
    finish_embedding(*emb);
    return emb;
}

std::shared_ptr<const Embedding> trivial_embedding(const TensorCategory& cat) {
    auto emb = std::make_shared<Embedding>();
    emb->cat = &cat;
    auto preset = hopf_preset("trivial");
    emb->alg = std::make_shared<RepTheory>(rep_theory(*preset));
    emb->image.push_back(cat.unit_object());
    Realized dec;
    dec.parts = decompose_action(*emb->alg, {Mat::identity(1)});
    dec.sum = make_dsum(cat, {emb->image[0]});
    emb->fuse.push_back({std::move(dec)});
    emb->mu.push_back({tc_identity(emb->image[0])});
    finish_embedding(*emb);
    return emb;
}

// --- bimodules --------------------------------------------------------------

TCMorphism extend_phi(const Bimodule& b, const Realized& r) {
    const TensorCategory& cat = b.cat();
    long total = 0;
    for (const ActionPart& p : r.parts) total += b.left->dim(p.simple);
    DsumData flat = make_amp(cat, b.x, total);
    TCObject src = cat.tensor(r.sum.obj, b.x);
    TCMorphism idx = tc_identity(b.x);
    std::vector<TCMorphism> terms;
    for (std::size_t p = 0; p < r.parts.size(); ++p) {
        long s = r.parts[p].simple;
        DsumData part_amp = make_amp(cat, b.x, b.left->dim(s));
        terms.push_back(compose(copy_mix(part_amp, flat, r.parts[p].inj),
                                compose(b.phi[s], cat.tensor_mor(r.sum.proj[p], idx))));
    }
    return msum(src, flat.obj, terms);
}

TCMorphism extend_psi(const Bimodule& b, const Realized& r) {
    const TensorCategory& cat = b.cat();
    long total = 0;
    for (const ActionPart& p : r.parts) total += b.right->dim(p.simple);
    DsumData flat = make_amp(cat, b.x, total);
    TCObject src = cat.tensor(b.x, r.sum.obj);
    TCMorphism idx = tc_identity(b.x);
    std::vector<TCMorphism> terms;
    for (std::size_t p = 0; p < r.parts.size(); ++p) {
        long s = r.parts[p].simple;
        DsumData part_amp = make_amp(cat, b.x, b.right->dim(s));
        terms.push_back(compose(copy_mix(part_amp, flat, r.parts[p].inj),
                                compose(b.psi[s], cat.tensor_mor(idx, r.sum.proj[p]))));
    }
    return msum(src, flat.obj, terms);
}

Bimodule make_bimodule(std::shared_ptr<const Embedding> left,
                       std::shared_ptr<const Embedding> right, TCObject x,
                       std::vector<TCMorphism> phi, std::vector<TCMorphism> psi,
                       bool validate) {
    require(left != nullptr && right != nullptr, "make_bimodule: missing embeddings");
    require(x.cat == left->cat && x.cat == right->cat, "make_bimodule: category mismatch");
    require(static_cast<long>(phi.size()) == left->simples() &&
                static_cast<long>(psi.size()) == right->simples(),
            "make_bimodule: one trivialization per simple");

    Bimodule b;
    b.left = std::move(left);
    b.right = std::move(right);
    b.x = std::move(x);
    b.phi = std::move(phi);
    b.psi = std::move(psi);

    const TensorCategory& cat = b.cat();
    for (const TCMorphism& f : b.phi) b.phi_inv.push_back(mor_inverse(f));
    for (const TCMorphism& f : b.psi) b.psi_inv.push_back(mor_inverse(f));
    if (b.x.is_zero()) return b;

    check(b.phi[0] == tc_identity(b.x) && b.psi[0] == tc_identity(b.x),
          "bimodule: unit trivializations must be the identity");
    if (!validate) return b;

    long rl = b.left->simples();
    long rr = b.right->simples();
    TCMorphism idx = tc_identity(b.x);
    std::vector<DsumData> ampl, ampr;
    for (long v = 0; v < rl; ++v) ampl.push_back(make_amp(cat, b.x, b.left->dim(v)));
    for (long w = 0; w < rr; ++w) ampr.push_back(make_amp(cat, b.x, b.right->dim(w)));

    // Left associativity: iterating two left actions agrees with acting by
    // the fused module, up to the copy reordering of the two index orders.
    for (long v = 0; v < rl; ++v)
        for (long w = 0; w < rl; ++w) {
            long dv = b.left->dim(v), dw = b.left->dim(w);
            const TCObject& fv = b.left->image[v];
            DsumData aTvx = make_amp(cat, cat.tensor(fv, b.x), dw);
            DsumData flat = make_amp(cat, b.x, dw * dv);
            TCMorphism iter = compose(
                amp_of(aTvx, flat.obj, b.phi[v]),
                compose(dist_right(cat, fv, ampl[w], aTvx),
                        cat.tensor_mor(tc_identity(fv), b.phi[w])));
            const Realized& fus = b.left->fuse[v][w];
            DsumData flat_vw = make_amp(cat, b.x, dv * dw);
            TCMorphism fused = compose(extend_phi(b, fus),
                                       cat.tensor_mor(b.left->mu[v][w], idx));
            check(fused == compose(copy_mix(flat, flat_vw, flip_mat(dv, dw)), iter),
                  "bimodule: left associativity square fails");
        }

    // Right associativity: here the iterated copy order already matches the
    // fused coordinates.
    for (long v = 0; v < rr; ++v)
        for (long w = 0; w < rr; ++w) {
            long dv = b.right->dim(v), dw = b.right->dim(w);
            const TCObject& gw = b.right->image[w];
            DsumData aTxw = make_amp(cat, cat.tensor(b.x, gw), dv);
            DsumData flat = make_amp(cat, b.x, dv * dw);
            TCMorphism iter = compose(
                amp_of(aTxw, flat.obj, b.psi[w]),
                compose(dist_left(cat, ampr[v], gw, aTxw),
                        cat.tensor_mor(b.psi[v], tc_identity(gw))));
            const Realized& fus = b.right->fuse[v][w];
            TCMorphism fused = compose(extend_psi(b, fus),
                                       cat.tensor_mor(idx, b.right->mu[v][w]));
            check(fused == iter, "bimodule: right associativity square fails");
        }

    // Hexagon: the left and right actions commute up to the copy swap.
    for (long v = 0; v < rl; ++v)
        for (long w = 0; w < rr; ++w) {
            long dv = b.left->dim(v), dw = b.right->dim(w);
            const TCObject& fv = b.left->image[v];
            const TCObject& gw = b.right->image[w];
            DsumData aTvx = make_amp(cat, cat.tensor(fv, b.x), dw);
            DsumData aTxw = make_amp(cat, cat.tensor(b.x, gw), dv);
            DsumData flat_wv = make_amp(cat, b.x, dw * dv);
            DsumData flat_vw = make_amp(cat, b.x, dv * dw);
            TCMorphism route_l = compose(
                amp_of(aTvx, flat_wv.obj, b.phi[v]),
                compose(dist_right(cat, fv, ampr[w], aTvx),
                        cat.tensor_mor(tc_identity(fv), b.psi[w])));
            TCMorphism route_r = compose(
                amp_of(aTxw, flat_vw.obj, b.psi[w]),
                compose(dist_left(cat, ampl[v], gw, aTxw),
                        cat.tensor_mor(b.phi[v], tc_identity(gw))));
            check(route_r == compose(copy_mix(flat_wv, flat_vw, flip_mat(dv, dw)), route_l),
                  "bimodule: left/right compatibility hexagon fails");
        }

    return b;
}

Bimodule zero_bimodule(std::shared_ptr<const Embedding> left,
                       std::shared_ptr<const Embedding> right) {
    require(left != nullptr && right != nullptr && left->cat == right->cat,
            "zero_bimodule: category mismatch");
    const TensorCategory& cat = *left->cat;
    TCObject z = cat.zero_object();
    std::vector<TCMorphism> phi, psi;
    for (long v = 0; v < left->simples(); ++v)
        phi.push_back(tc_zero(cat.tensor(left->image[v], z),
                              make_amp(cat, z, left->dim(v)).obj));
    for (long w = 0; w < right->simples(); ++w)
        psi.push_back(tc_zero(cat.tensor(z, right->image[w]),
                              make_amp(cat, z, right->dim(w)).obj));
    return make_bimodule(std::move(left), std::move(right), std::move(z), std::move(phi),
                         std::move(psi));
}

// --- intertwiner spaces -----------------------------------------------------

namespace {

std::vector<TCMorphism> defects_of(const Bimodule& x, const Bimodule& y, const TCMorphism& f,
                                   bool left_side, bool right_side) {
    const TensorCategory& cat = x.cat();
    std::vector<TCMorphism> out;
    if (left_side) {
        require(x.left == y.left, "intertwiner: left symmetry mismatch");
        for (long v = 0; v < x.left->simples(); ++v) {
            DsumData ax = make_amp(cat, x.x, x.left->dim(v));
            DsumData ay = make_amp(cat, y.x, y.left->dim(v));
            TCMorphism lhs = compose(y.phi[v], cat.tensor_mor(tc_identity(x.left->image[v]), f));
            TCMorphism rhs = compose(amp_of(ax, ay.obj, f), x.phi[v]);
            out.push_back(lhs - rhs);
        }
    }
    if (right_side) {
        require(x.right == y.right, "intertwiner: right symmetry mismatch");
        for (long w = 0; w < x.right->simples(); ++w) {
            DsumData ax = make_amp(cat, x.x, x.right->dim(w));
            DsumData ay = make_amp(cat, y.x, y.right->dim(w));
            TCMorphism lhs = compose(y.psi[w], cat.tensor_mor(f, tc_identity(x.right->image[w])));
            TCMorphism rhs = compose(amp_of(ax, ay.obj, f), x.psi[w]);
            out.push_back(lhs - rhs);
        }
    }
    return out;
}

std::vector<TCMorphism> solve_intertwiners(const Bimodule& x, const Bimodule& y, bool left_side,
                                           bool right_side) {
    std::vector<TCMorphism> basis = hom_space(x.x, y.x);
    if (basis.empty()) return {};
    const TensorCategory& cat = x.cat();
    std::vector<std::vector<CycScalar>> col(basis.size());

    auto run_side = [&](bool left) {
        const std::shared_ptr<const Embedding>& e = left ? x.left : x.right;
        require(left ? x.left == y.left : x.right == y.right,
                "intertwiner: symmetry mismatch");
        for (long v = 0; v < e->simples(); ++v) {
            DsumData ax = make_amp(cat, x.x, e->dim(v));
            DsumData ay = make_amp(cat, y.x, e->dim(v));
            TCMorphism idf = tc_identity(e->image[v]);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                TCMorphism lhs = left ? compose(y.phi[v], cat.tensor_mor(idf, basis[k]))
                                      : compose(y.psi[v], cat.tensor_mor(basis[k], idf));
                TCMorphism rhs =
                    compose(amp_of(ax, ay.obj, basis[k]), left ? x.phi[v] : x.psi[v]);
                TCMorphism d = lhs - rhs;
                for (const Mat& b : d.blocks)
                    for (long i = 0; i < b.rows(); ++i)
                        for (long j = 0; j < b.cols(); ++j) col[k].push_back(b.at(i, j));
            }
        }
    };
    if (left_side) run_side(true);
    if (right_side) run_side(false);

    Mat sys(static_cast<long>(col[0].size()), static_cast<long>(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t r = 0; r < col[k].size(); ++r)
            sys.at(static_cast<long>(r), static_cast<long>(k)) = col[k][r];
    Mat ker = kernel_basis(sys);
    std::vector<TCMorphism> out;
    for (long c = 0; c < ker.cols(); ++c) {
        TCMorphism f = tc_zero(x.x, y.x);
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const CycScalar& w = ker.at(static_cast<long>(k), c);
            if (!w.is_zero()) f = f + mor_scaled(basis[k], w);
        }
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

bool is_bimodule_map(const Bimodule& x, const Bimodule& y, const TCMorphism& f) {
    for (const TCMorphism& d : defects_of(x, y, f, true, true)) {
        for (const Mat& b : d.blocks)
            if (!b.is_zero()) return false;
    }
    return true;
}

std::vector<TCMorphism> bimodule_hom(const Bimodule& x, const Bimodule& y) {
    return solve_intertwiners(x, y, true, true);
}

std::vector<TCMorphism> left_module_hom(const Bimodule& x, const Bimodule& y) {
    return solve_intertwiners(x, y, true, false);
}

std::vector<TCMorphism> right_module_hom(const Bimodule& x, const Bimodule& y) {
    return solve_intertwiners(x, y, false, true);
}

// --- the action map pi ------------------------------------------------------

PiOp::PiOp(const Bimodule& x, const Bimodule& y) {
    require(x.right == y.left, "pi: the two modules live over different symmetries");
    cat_ = &x.cat();
    emb_ = x.right;
    const TensorCategory& cat = *cat_;
    const RepTheory& rt = *emb_->alg;
    long n = rt.hopf.dim;
    txy_ = cat.tensor(x.x, y.x);

    Mat table(n, n);
    long row = 0;
    for (long v = 0; v < rt.simple_count(); ++v)
        for (long k = 0; k < rt.dim_of(v) * rt.dim_of(v); ++k) {
            for (long t = 0; t < n; ++t) table.at(row, t) = rt.dual_functionals[v][k].at(0, t);
            ++row;
        }
    require(row == n, "pi: dual functionals do not span");
    expand_ = inverse(table);

    TCMorphism idx = tc_identity(x.x);
    TCMorphism idy = tc_identity(y.x);
    for (long v = 0; v < rt.simple_count(); ++v) {
        long sbar = emb_->dual_label[v];
        long d = rt.dim_of(v);
        const TCObject& fv = emb_->image[v];

        TCMorphism m1 = cat.tensor_mor(idx, cat.tensor_mor(emb_->chi[v], idy));
        TCMorphism m2 = cat.tensor_mor(x.psi[sbar], cat.tensor_mor(tc_identity(fv), idy));
        TCObject tvy = cat.tensor(fv, y.x);
        DsumData ax = make_amp(cat, x.x, d);
        DsumData axz = make_amp(cat, cat.tensor(x.x, tvy), d);
        TCMorphism m3 = dist_left(cat, ax, tvy, axz);
        TCMorphism m3b = copy_mix(axz, axz, emb_->dual_basis_inj[v]);
        DsumData ay = make_amp(cat, y.x, d);
        DsumData atxy = make_amp(cat, txy_, d);
        TCMorphism percopy = compose(dist_right(cat, x.x, ay, atxy),
                                     cat.tensor_mor(idx, y.phi[v]));
        DsumData flat = make_amp(cat, txy_, d * d);
        TCMorphism full = compose(amp_of(axz, flat.obj, percopy),
                                  compose(m3b, compose(m3, compose(m2, m1))));
        std::vector<TCMorphism> comp;
        for (long k = 0; k < d * d; ++k)
            comp.push_back(mor_scaled(compose(flat.proj[k], full), cyc(d)));
        component_.push_back(std::move(comp));
    }
}

TCMorphism PiOp::apply(const Mat& functional) const {
    const RepTheory& rt = *emb_->alg;
    require(functional.rows() == 1 && functional.cols() == rt.hopf.dim,
            "pi: functional must be a coordinate row");
    Mat coeff = mat_mul(functional, expand_);
    TCMorphism acc = tc_zero(txy_, txy_);
    long col = 0;
    for (std::size_t v = 0; v < component_.size(); ++v)
        for (const TCMorphism& term : component_[v]) {
            const CycScalar& c = coeff.at(0, col++);
            if (!c.is_zero()) acc = acc + mor_scaled(term, c);
        }
    return acc;
}

TCMorphism PiOp::average() const { return apply(emb_->alg->dual_integral); }

TCMorphism PiOp::average_termwise() const {
    const RepTheory& rt = *emb_->alg;
    TCMorphism acc = tc_zero(txy_, txy_);
    for (long v = 0; v < rt.simple_count(); ++v) {
        long d = rt.dim_of(v);
        for (long i = 0; i < d; ++i) acc = acc + apply(rt.dual_functionals[v][i * d + i]);
    }
    return mor_scaled(acc, cyc(1, rt.hopf.dim));
}

TCMorphism pi(const Bimodule& x, const Bimodule& y, const Mat& functional) {
    return PiOp(x, y).apply(functional);
}

TCMorphism idempotent_e(const Bimodule& x, const Bimodule& y) { return PiOp(x, y).average(); }

Mat convolve_functionals(const HopfAlgebra& h, const Mat& a, const Mat& b) {
    long n = h.dim;
    require(a.rows() == 1 && a.cols() == n && b.rows() == 1 && b.cols() == n,
            "convolve_functionals: coordinate rows expected");
    Mat out(1, n);
    for (long t = 0; t < n; ++t) {
        CycScalar acc;
        for (long j = 0; j < n; ++j)
            for (long k = 0; k < n; ++k) {
                const CycScalar& c = h.cm.at(j * n + k, t);
                if (!c.is_zero()) acc += c * a.at(0, j) * b.at(0, k);
            }
        out.at(0, t) = acc;
    }
    return out;
}

// --- tensor and relative tensor products ------------------------------------

Bimodule tensor_bimodule(const Bimodule& x, const Bimodule& y) {
    const TensorCategory& cat = x.cat();
    TCObject txy = cat.tensor(x.x, y.x);
    TCMorphism idx = tc_identity(x.x);
    TCMorphism idy = tc_identity(y.x);
    std::vector<TCMorphism> phi, psi;
    for (long v = 0; v < x.left->simples(); ++v) {
        long d = x.left->dim(v);
        DsumData ax = make_amp(cat, x.x, d);
        DsumData at = make_amp(cat, txy, d);
        phi.push_back(compose(dist_left(cat, ax, y.x, at), cat.tensor_mor(x.phi[v], idy)));
    }
    for (long w = 0; w < y.right->simples(); ++w) {
        long d = y.right->dim(w);
        DsumData ay = make_amp(cat, y.x, d);
        DsumData at = make_amp(cat, txy, d);
        psi.push_back(compose(dist_right(cat, x.x, ay, at), cat.tensor_mor(idx, y.psi[w])));
    }
    return make_bimodule(x.left, y.right, txy, std::move(phi), std::move(psi), false);
}

RelTensor rel_tensor(const Bimodule& x, const Bimodule& y) {
    require(x.right == y.left, "rel_tensor: middle symmetry mismatch");
    const TensorCategory& cat = x.cat();
    Bimodule outer = tensor_bimodule(x, y);
    TCMorphism e = idempotent_e(x, y);
    SplitPart sp = split_idem_morphism(cat, e);

    std::vector<TCMorphism> phi, psi;
    for (long v = 0; v < outer.left->simples(); ++v) {
        long d = outer.left->dim(v);
        DsumData at = make_amp(cat, outer.x, d);
        DsumData ap = make_amp(cat, sp.obj, d);
        phi.push_back(compose(amp_of(at, ap.obj, sp.proj),
                              compose(outer.phi[v],
                                      cat.tensor_mor(tc_identity(outer.left->image[v]), sp.incl))));
    }
    for (long w = 0; w < outer.right->simples(); ++w) {
        long d = outer.right->dim(w);
        DsumData at = make_amp(cat, outer.x, d);
        DsumData ap = make_amp(cat, sp.obj, d);
        psi.push_back(compose(amp_of(at, ap.obj, sp.proj),
                              compose(outer.psi[w],
                                      cat.tensor_mor(sp.incl, tc_identity(outer.right->image[w])))));
    }
    RelTensor rt;
    rt.prod =
        make_bimodule(outer.left, outer.right, sp.obj, std::move(phi), std::move(psi), false);
    rt.incl = sp.incl;
    rt.proj = sp.proj;
    rt.e = std::move(e);
    return rt;
}

TCMorphism rel_tensor_morphism(const RelTensor& src, const RelTensor& dst, const TCMorphism& f,
                               const TCMorphism& g) {
    const TensorCategory& cat = *src.prod.x.cat;
    return compose(dst.proj, compose(cat.tensor_mor(f, g), src.incl));
}

// --- unit objects ------------------------------------------------------------

namespace {

// The Frobenius reindexing of a fusion injection: the copy transform feeding
// block X of the unit object, with target copies (u, b) from source copy a.
Mat unit_transform(const Mat& inj, long du, long dv, long dx, bool left_side) {
    Mat m(du * dx, dv);
    for (long u = 0; u < du; ++u)
        for (long b = 0; b < dx; ++b)
            for (long a = 0; a < dv; ++a)
                m.at(u * dx + b, a) = left_side ? inj.at(u * dv + a, b) : inj.at(a * du + u, b);
    return m;
}

}  // namespace

UnitObject unit_bimodule(std::shared_ptr<const Embedding> emb) {
    require(emb != nullptr, "unit_bimodule: missing embedding");
    const TensorCategory& cat = *emb->cat;
    long r = emb->simples();

    UnitObject uo;
    std::vector<TCObject> block_objs;
    for (long v = 0; v < r; ++v) {
        uo.block.push_back(make_amp(cat, emb->image[v], emb->dim(v)));
        block_objs.push_back(uo.block[v].obj);
    }
    uo.blocks = make_dsum(cat, block_objs);
    const TCObject& a = uo.blocks.obj;

    // colmap[x][b]: F(X) -> A, into copy b of block X.
    std::vector<std::vector<TCMorphism>> colmap(r);
    for (long xb = 0; xb < r; ++xb)
        for (long bcopy = 0; bcopy < emb->dim(xb); ++bcopy)
            colmap[xb].push_back(compose(uo.blocks.inj[xb], uo.block[xb].inj[bcopy]));

    auto build = [&](bool left_side) {
        std::vector<TCMorphism> out;
        for (long u = 0; u < r; ++u) {
            long du = emb->dim(u);
            const TCObject& fu = emb->image[u];
            DsumData amp_a = make_amp(cat, a, du);
            TCObject src = left_side ? cat.tensor(fu, a) : cat.tensor(a, fu);
            std::vector<TCMorphism> terms;
            for (long v = 0; v < r; ++v) {
                long dv = emb->dim(v);
                const TCObject& fv = emb->image[v];
                TCMorphism strip =
                    left_side ? cat.tensor_mor(tc_identity(fu), uo.blocks.proj[v])
                              : cat.tensor_mor(uo.blocks.proj[v], tc_identity(fu));
                TCObject pair = left_side ? cat.tensor(fu, fv) : cat.tensor(fv, fu);
                DsumData apair = make_amp(cat, pair, dv);
                TCMorphism spread = left_side ? dist_right(cat, fu, uo.block[v], apair)
                                              : dist_left(cat, uo.block[v], fu, apair);
                const Realized& fus = left_side ? emb->fuse[u][v] : emb->fuse[v][u];
                const TCMorphism& mu = left_side ? emb->mu[u][v] : emb->mu[v][u];
                for (std::size_t p = 0; p < fus.parts.size(); ++p) {
                    long xb = fus.parts[p].simple;
                    long dx = emb->dim(xb);
                    TCMorphism pext = compose(fus.sum.proj[p], mu);
                    DsumData ax_dv = make_amp(cat, emb->image[xb], dv);
                    DsumData ax_ub = make_amp(cat, emb->image[xb], du * dx);
                    Mat m = unit_transform(fus.parts[p].inj, du, dv, dx, left_side);
                    TCMorphism route = compose(
                        copy_mix(ax_dv, ax_ub, m),
                        compose(amp_of(apair, ax_dv.obj, pext), compose(spread, strip)));
                    std::vector<TCMorphism> embed;
                    for (long ucp = 0; ucp < du; ++ucp)
                        for (long b = 0; b < dx; ++b)
                            embed.push_back(compose(amp_a.inj[ucp],
                                                    compose(colmap[xb][b],
                                                            ax_ub.proj[ucp * dx + b])));
                    terms.push_back(compose(msum(ax_ub.obj, amp_a.obj, embed), route));
                }
            }
            out.push_back(msum(src, amp_a.obj, terms));
        }
        return out;
    };

    uo.bim = make_bimodule(emb, emb, a, build(true), build(false));
    uo.theta = tc_identity(a);
    uo.theta_inv = tc_identity(a);
    return uo;
}

UnitObject apply_gauge(const UnitObject& a, const std::vector<Mat>& g) {
    const Bimodule& b = a.bim;
    const TensorCategory& cat = b.cat();
    const Embedding& emb = *b.left;
    long r = emb.simples();
    require(static_cast<long>(g.size()) == r, "apply_gauge: one block per simple");

    std::vector<TCMorphism> tw, twi;
    for (long v = 0; v < r; ++v) {
        require(g[v].rows() == emb.dim(v) && g[v].cols() == emb.dim(v), "apply_gauge: block size");
        tw.push_back(compose(a.blocks.inj[v],
                             compose(copy_mix(a.block[v], a.block[v], g[v]), a.blocks.proj[v])));
        twi.push_back(compose(a.blocks.inj[v],
                              compose(copy_mix(a.block[v], a.block[v], inverse(g[v])),
                                      a.blocks.proj[v])));
    }
    TCMorphism theta = msum(b.x, b.x, tw);
    TCMorphism theta_inv = msum(b.x, b.x, twi);

    std::vector<TCMorphism> phi, psi;
    for (long u = 0; u < r; ++u) {
        long du = emb.dim(u);
        DsumData amp_a = make_amp(cat, b.x, du);
        TCMorphism unamp = amp_of(amp_a, amp_a.obj, theta_inv);
        phi.push_back(compose(unamp, compose(b.phi[u],
                                             cat.tensor_mor(tc_identity(emb.image[u]), theta))));
        psi.push_back(compose(unamp, compose(b.psi[u],
                                             cat.tensor_mor(theta, tc_identity(emb.image[u])))));
    }

    UnitObject out;
    out.bim = make_bimodule(b.left, b.right, b.x, std::move(phi), std::move(psi));
    out.block = a.block;
    out.blocks = a.blocks;
    out.theta = compose(a.theta, theta);
    out.theta_inv = compose(theta_inv, a.theta_inv);
    return out;
}

LeftUnit left_unit_maps(const UnitObject& a, const Bimodule& y) {
    require(y.left == a.bim.left, "left_unit_maps: symmetry mismatch");
    const TensorCategory& cat = y.cat();
    const Embedding& emb = *y.left;
    long r = emb.simples();
    TCObject src = cat.tensor(a.bim.x, y.x);
    TCMorphism idy = tc_identity(y.x);

    std::vector<TCMorphism> lam_terms, mu_terms;
    for (long v = 0; v < r; ++v) {
        long d = emb.dim(v);
        TCObject tvy = cat.tensor(emb.image[v], y.x);
        DsumData atvy = make_amp(cat, tvy, d);
        DsumData flat = make_amp(cat, y.x, d * d);
        DsumData ay = make_amp(cat, y.x, d);

        TCMorphism into = compose(amp_of(atvy, flat.obj, y.phi[v]),
                                  compose(dist_left(cat, a.block[v], y.x, atvy),
                                          cat.tensor_mor(a.blocks.proj[v], idy)));
        std::vector<TCMorphism> diag;
        for (long k = 0; k < d; ++k) diag.push_back(compose(flat.proj[k * d + k], into));
        lam_terms.push_back(msum(src, y.x, diag));

        std::vector<TCMorphism> lift;
        for (long k = 0; k < d; ++k)
            lift.push_back(compose(atvy.inj[k], compose(y.phi_inv[v], ay.inj[k])));
        TCMorphism up = compose(cat.tensor_mor(a.blocks.inj[v], idy),
                                compose(dist_left_inv(cat, a.block[v], y.x, atvy),
                                        msum(y.x, atvy.obj, lift)));
        mu_terms.push_back(mor_scaled(up, cyc(d)));
    }
    LeftUnit out;
    out.lam = compose(msum(src, y.x, lam_terms), cat.tensor_mor(a.theta, idy));
    out.mu = compose(cat.tensor_mor(a.theta_inv, idy), msum(y.x, src, mu_terms));
    return out;
}

RightUnit right_unit_maps(const UnitObject& a, const Bimodule& x) {
    require(x.right == a.bim.right, "right_unit_maps: symmetry mismatch");
    const TensorCategory& cat = x.cat();
    const Embedding& emb = *x.right;
    long r = emb.simples();
    TCObject src = cat.tensor(x.x, a.bim.x);
    TCMorphism idx = tc_identity(x.x);

    std::vector<TCMorphism> rho_terms, nu_terms;
    for (long v = 0; v < r; ++v) {
        long d = emb.dim(v);
        TCObject txv = cat.tensor(x.x, emb.image[v]);
        DsumData atxv = make_amp(cat, txv, d);
        DsumData flat = make_amp(cat, x.x, d * d);
        DsumData ax = make_amp(cat, x.x, d);

        TCMorphism into = compose(amp_of(atxv, flat.obj, x.psi[v]),
                                  compose(dist_right(cat, x.x, a.block[v], atxv),
                                          cat.tensor_mor(idx, a.blocks.proj[v])));
        std::vector<TCMorphism> diag;
        for (long k = 0; k < d; ++k) diag.push_back(compose(flat.proj[k * d + k], into));
        rho_terms.push_back(msum(src, x.x, diag));

        std::vector<TCMorphism> lift;
        for (long k = 0; k < d; ++k)
            lift.push_back(compose(atxv.inj[k], compose(x.psi_inv[v], ax.inj[k])));
        TCMorphism up = compose(cat.tensor_mor(idx, a.blocks.inj[v]),
                                compose(dist_right_inv(cat, x.x, a.block[v], atxv),
                                        msum(x.x, atxv.obj, lift)));
        nu_terms.push_back(mor_scaled(up, cyc(d)));
    }
    RightUnit out;
    out.rho = compose(msum(src, x.x, rho_terms), cat.tensor_mor(idx, a.theta));
    out.nu = compose(cat.tensor_mor(idx, a.theta_inv), msum(x.x, src, nu_terms));
    return out;
}

bool triangle_check(const UnitObject& a, const Bimodule& x, const Bimodule& y) {
    const TensorCategory& cat = x.cat();
    TCMorphism e = idempotent_e(x, y);
    RightUnit ru = right_unit_maps(a, x);
    LeftUnit lu = left_unit_maps(a, y);
    TCMorphism lhs = compose(e, cat.tensor_mor(ru.rho, tc_identity(y.x)));
    TCMorphism rhs = compose(e, cat.tensor_mor(tc_identity(x.x), lu.lam));
    return lhs == rhs;
}

// --- duals and rigidity -----------------------------------------------------

Bimodule dual_bimodule(const Bimodule& x) {
    const TensorCategory& cat = x.cat();
    const TCObject& xo = x.x;
    TCObject xs = cat.dual(xo);
    TCObject txx = cat.tensor(xo, xs);
    TCMorphism ids = tc_identity(xs);

    std::vector<TCMorphism> phi, psi;
    for (long w = 0; w < x.right->simples(); ++w) {
        long d = x.right->dim(w);
        DsumData axo = make_amp(cat, xo, d);
        DsumData atp = make_amp(cat, txx, d);
        DsumData awrap = make_amp(cat, cat.tensor(xs, txx), d);
        DsumData axs = make_amp(cat, xs, d);
        TCMorphism c1 =
            cat.tensor_mor(cat.coev_r(xo), cat.tensor_mor(tc_identity(x.right->image[w]), ids));
        TCMorphism c2 = cat.tensor_mor(ids, cat.tensor_mor(x.psi[w], ids));
        TCMorphism c3 = cat.tensor_mor(ids, dist_left(cat, axo, xs, atp));
        TCMorphism c4 = dist_right(cat, xs, atp, awrap);
        TCMorphism c5 = amp_of(awrap, axs.obj, cat.tensor_mor(ids, cat.ev_r(xo)));
        phi.push_back(compose(c5, compose(c4, compose(c3, compose(c2, c1)))));
    }
    for (long v = 0; v < x.left->simples(); ++v) {
        long d = x.left->dim(v);
        DsumData axo = make_amp(cat, xo, d);
        DsumData atp = make_amp(cat, txx, d);
        DsumData awrap = make_amp(cat, cat.tensor(xs, txx), d);
        DsumData axs = make_amp(cat, xs, d);
        TCMorphism c1 =
            cat.tensor_mor(cat.tensor_mor(ids, tc_identity(x.left->image[v])), cat.coev(xo));
        TCMorphism c2 = cat.tensor_mor(ids, cat.tensor_mor(x.phi[v], ids));
        TCMorphism c3 = cat.tensor_mor(ids, dist_left(cat, axo, xs, atp));
        TCMorphism c4 = dist_right(cat, xs, atp, awrap);
        TCMorphism c5 = amp_of(awrap, axs.obj, cat.tensor_mor(cat.ev(xo), ids));
        psi.push_back(compose(c5, compose(c4, compose(c3, compose(c2, c1)))));
    }
    return make_bimodule(x.right, x.left, std::move(xs), std::move(phi), std::move(psi), false);
}

RigidityPair rigidity(const UnitObject& a, const UnitObject& b, const Bimodule& x,
                      const BicatConfig& cfg) {
    require(x.left == a.bim.left && x.right == b.bim.left, "rigidity: symmetry mismatch");
    const TensorCategory& cat = x.cat();
    const TCObject& xo = x.x;

    RigidityPair out;
    out.dual = dual_bimodule(x);
    const TCObject& xs = out.dual.x;
    TCMorphism ids = tc_identity(xs);

    TCObject exy = cat.tensor(xo, xs);
    std::vector<TCMorphism> eps_terms;
    for (long v = 0; v < x.left->simples(); ++v) {
        long d = x.left->dim(v);
        const TCObject& fv = x.left->image[v];
        DsumData axo = make_amp(cat, xo, d);
        for (long k = 0; k < d; ++k) {
            TCMorphism lift = cat.tensor_mor(compose(x.phi_inv[v], axo.inj[k]), ids);
            TCMorphism pairoff = cat.tensor_mor(tc_identity(fv), cat.ev_r(xo));
            TCMorphism into_a = compose(a.blocks.inj[v], a.block[v].inj[k]);
            eps_terms.push_back(mor_scaled(compose(into_a, compose(pairoff, lift)), cyc(d)));
        }
    }
    out.eps = compose(a.theta_inv, msum(exy, a.bim.x, eps_terms));

    TCObject dxy = cat.tensor(xs, xo);
    std::vector<TCMorphism> delta_terms;
    for (long w = 0; w < x.right->simples(); ++w) {
        long d = x.right->dim(w);
        const TCObject& gw = x.right->image[w];
        DsumData axo = make_amp(cat, xo, d);
        for (long k = 0; k < d; ++k) {
            TCMorphism open_up = cat.tensor_mor(cat.coev_r(xo), tc_identity(gw));
            TCMorphism act = cat.tensor_mor(ids, x.psi[w]);
            TCMorphism pick = cat.tensor_mor(ids, axo.proj[k]);
            TCMorphism from_b = compose(b.block[w].proj[k], b.blocks.proj[w]);
            delta_terms.push_back(compose(pick, compose(act, compose(open_up, from_b))));
        }
    }
    out.delta = compose(msum(b.bim.x, dxy, delta_terms), b.theta);

    out.c = Rational(x.left->alg->hopf.dim) * cfg.omega_a / cfg.omega_b;
    return out;
}

std::pair<CycScalar, CycScalar> zig_zag_scalars(const UnitObject& a, const UnitObject& b,
                                                const Bimodule& x, const RigidityPair& r,
                                                const BicatConfig& cfg) {
    const TensorCategory& cat = x.cat();
    long dim_b = x.right->alg->hopf.dim;
    CycScalar norm = CycScalar(cfg.omega_a / (cfg.omega_b * Rational(dim_b)));

    RightUnit rx = right_unit_maps(b, x);
    LeftUnit lx = left_unit_maps(a, x);
    TCMorphism z1 = compose(lx.lam,
                            compose(cat.tensor_mor(r.eps, tc_identity(x.x)),
                                    compose(cat.tensor_mor(tc_identity(x.x), r.delta), rx.nu)));

    LeftUnit ls = left_unit_maps(b, r.dual);
    RightUnit rs = right_unit_maps(a, r.dual);
    TCMorphism z2 = compose(rs.rho,
                            compose(cat.tensor_mor(tc_identity(r.dual.x), r.eps),
                                    compose(cat.tensor_mor(r.delta, tc_identity(r.dual.x)), ls.mu)));

    return {scalar_multiple(mor_scaled(z1, norm)), scalar_multiple(mor_scaled(z2, norm))};
}

Rational rel_dim_sq(const Bimodule& x) {
    CycScalar d = x.cat().dim_of(x.x);
    require(d.is_rational(), "rel_dim_sq: irrational underlying dimension");
    Rational q = d.rational_value();
    return q * q / (Rational(x.left->alg->hopf.dim) * Rational(x.right->alg->hopf.dim));
}

// --- group-algebra bimodules ------------------------------------------------

FiniteGroup algebra_group(const HopfAlgebra& h) {
    long n = h.dim;
    FiniteGroup g;
    g.name = h.name;
    g.element_names = h.labels;
    g.table.assign(n, std::vector<long>(n, -1));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            Mat p = h.basis_product(i, j);
            long hit = -1;
            for (long t = 0; t < n; ++t) {
                const CycScalar& c = p.at(t, 0);
                if (c.is_zero()) continue;
                if (hit >= 0 || c != cyc(1))
                    throw std::invalid_argument("algebra_group: not a based group algebra");
                hit = t;
            }
            if (hit < 0) throw std::invalid_argument("algebra_group: zero basis product");
            g.table[i][j] = hit;
        }
    long unit = -1;
    for (long t = 0; t < n; ++t)
        if (!h.u.at(t, 0).is_zero()) {
            if (unit >= 0) throw std::invalid_argument("algebra_group: unit is not a basis element");
            unit = t;
        }
    if (unit != 0) throw std::invalid_argument("algebra_group: identity must be basis element 0");
    if (!g.is_valid()) throw std::invalid_argument("algebra_group: table is not a group");
    return g;
}

Bimodule regular_bimodule(std::shared_ptr<const Embedding> emb, long a, long b) {
    const RepCat* rc = dynamic_cast<const RepCat*>(emb->cat);
    require(rc != nullptr, "regular_bimodule: needs a module-category ambient");
    return regular_bimodule(std::move(emb), a, b, rc->regular_object());
}

Bimodule regular_bimodule(std::shared_ptr<const Embedding> emb, long a, long b,
                          const TCObject& regular) {
    const RepCat* rc = dynamic_cast<const RepCat*>(emb->cat);
    require(rc != nullptr, "regular_bimodule: needs a module-category ambient");
    const RepTheory& rt = *emb->alg;
    FiniteGroup grp = algebra_group(rt.hopf);
    long n = grp.order();
    require(a >= 0 && a < n && b >= 0 && b < n, "regular_bimodule: labels outside the group");

    std::vector<TCMorphism> phi, psi;
    for (long v = 0; v < rt.simple_count(); ++v) {
        long d = rt.dim_of(v);
        DsumData ar = make_amp(*rc, regular, d);
        Mat p(d * n, d * n);
        for (long g = 0; g < n; ++g) {
            long h = grp.table[a][grp.inverse(g)];
            const Mat& rho = rt.irreps[v].action[h];
            for (long i = 0; i < d; ++i)
                for (long j = 0; j < d; ++j) p.at(j * n + g, i * n + g) = rho.at(j, i);
        }
        phi.push_back(rc->from_concrete(rc->tensor(emb->image[v], regular), ar.obj, p));
    }
    for (long w = 0; w < rt.simple_count(); ++w) {
        long d = rt.dim_of(w);
        DsumData ar = make_amp(*rc, regular, d);
        Mat p(d * n, n * d);
        for (long g = 0; g < n; ++g) {
            long h = grp.table[b][grp.inverse(g)];
            const Mat& rho = rt.irreps[w].action[h];
            for (long i = 0; i < d; ++i)
                for (long j = 0; j < d; ++j) p.at(j * n + g, g * d + i) = rho.at(j, i);
        }
        psi.push_back(rc->from_concrete(rc->tensor(regular, emb->image[w]), ar.obj, p));
    }
    return make_bimodule(emb, emb, regular, std::move(phi), std::move(psi));
}

}  // namespace orbicat
