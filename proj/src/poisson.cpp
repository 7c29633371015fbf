#include "forge/poisson.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace forge {

namespace {

void require_poisson_shape(const PoissonAlgebra& p) {
    if (!p.bracket.cubic() || !p.prod.cubic() || p.bracket.size() != p.prod.size())
        throw ShapeError("bracket and product must be cubic of equal dimension");
}

void set_product(StructTensor& c, std::size_t i, std::size_t j, const Vec& v) {
    for (std::size_t k = 0; k < v.size(); ++k) c(i, j, k) = v[k];
}

DerivationPairs default_pairs(std::size_t count) {
    if (count % 2 != 0) throw ShapeError("derivations must come in pairs");
    DerivationPairs out;
    for (std::size_t k = 0; k + 1 < count; k += 2) out.emplace_back(k, k + 1);
    return out;
}

StructTensor induced_bracket(const DiffAlgebra& da, const DerivationPairs& pairs) {
    std::size_t n = da.dim();
    const auto& c = da.base.mult;
    StructTensor out(n);
    for (auto [p, q] : pairs) {
        if (p >= da.phi.size() || q >= da.phi.size()) throw ShapeError("derivation pair index out of range");
        const auto& d1 = da.phi[p];
        const auto& d2 = da.phi[q];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vec v = bilinear(c, d1.column(i), d2.column(j)) - bilinear(c, d2.column(i), d1.column(j));
                for (std::size_t k = 0; k < n; ++k) out(i, j, k) += v[k];
            }
    }
    return out;
}

/// Cube whose slice k is f(k).
Cube slices(std::size_t n, const std::function<Element2(std::size_t)>& f) {
    Cube out(n);
    for (std::size_t k = 0; k < n; ++k) out.set_slice3(k, f(k));
    return out;
}

void add_pybe(CheckReport& rep, const PoissonAlgebra& p, const RElement& r) {
    auto [br, pr] = pybe_residual(p, r);
    rep.add("pybe_bracket", {}, br);
    rep.add("pybe_product", {}, pr);
}

}  // namespace

Matrix ad(const PoissonAlgebra& p, std::size_t i) { return left_mult(p.bracket, i); }
Matrix ad(const PoissonAlgebra& p, const Vec& a) { return left_mult(p.bracket, a); }

CheckReport check_poisson(const PoissonAlgebra& p) {
    require_poisson_shape(p);
    std::size_t n = p.dim();
    const auto& b = p.bracket;
    const auto& c = p.prod;
    CheckReport rep;
    rep.law("antisymmetry");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) rep.add("antisymmetry", {i, j}, basis_product(b, i, j) + basis_product(b, j, i));
    SparseTable bt(b), ct(c);
    rep.law("jacobi");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec v = zero_vec(n);
                add_right_nested(v, bt, bt, i, j, k, 1);
                add_right_nested(v, bt, bt, j, k, i, 1);
                add_right_nested(v, bt, bt, k, i, j, 1);
                rep.add("jacobi", {i, j, k}, v);
            }
    add_commutativity(rep, c, "commutativity");
    add_associativity(rep, c, "associativity");
    rep.law("leibniz");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec v = zero_vec(n);
                add_right_nested(v, ct, bt, i, j, k, 1);
                add_left_nested(v, bt, ct, i, j, k, -1);
                add_right_nested(v, bt, ct, j, i, k, -1);
                rep.add("leibniz", {i, j, k}, v);
            }
    return rep;
}

PoissonAlgebra induce_poisson(const DiffAlgebra& da, const DerivationPairs& pairs) {
    CheckReport rep = check_diff_algebra(da, true);
    if (!rep.pass()) throw Refused("induced Poisson algebra needs a commutative differential algebra", rep);
    DerivationPairs use = pairs.empty() ? default_pairs(da.phi.size()) : pairs;
    if (use.empty()) throw ShapeError("at least one derivation pair is required");
    return PoissonAlgebra{induced_bracket(da, use), da.base.mult};
}

CheckReport check_poisson_module(const PoissonAlgebra& p, const PoissonModule& pm) {
    require_poisson_shape(p);
    std::size_t n = p.dim();
    if (pm.alg_dim != n || pm.rho.size() != n || pm.mu.size() != n) throw ShapeError("module action count mismatch");
    for (std::size_t i = 0; i < n; ++i)
        if (pm.rho[i].rows() != pm.v_dim || pm.rho[i].cols() != pm.v_dim || pm.mu[i].rows() != pm.v_dim ||
            pm.mu[i].cols() != pm.v_dim)
            throw ShapeError("module action shape mismatch");
    Bimodule rho{n, pm.v_dim, pm.rho, pm.rho};
    Bimodule mu{n, pm.v_dim, pm.mu, pm.mu};
    CheckReport rep;
    for (const char* name : {"lie_module", "commutative_module", "rho_product", "mu_bracket"}) rep.law(name);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec br = basis_product(p.bracket, i, j);
            Vec pr = basis_product(p.prod, i, j);
            rep.add("lie_module", {i, j}, pm.rho[i] * pm.rho[j] - pm.rho[j] * pm.rho[i] - rho.left(br));
            rep.add("commutative_module", {i, j}, pm.mu[i] * pm.mu[j] - mu.left(pr));
            rep.add("rho_product", {i, j}, rho.left(pr) - pm.mu[j] * pm.rho[i] - pm.mu[i] * pm.rho[j]);
            rep.add("mu_bracket", {i, j}, mu.left(br) - pm.rho[i] * pm.mu[j] + pm.mu[j] * pm.rho[i]);
        }
    return rep;
}

PoissonModule regular_module(const PoissonAlgebra& p) {
    require_poisson_shape(p);
    PoissonModule pm{p.dim(), p.dim(), {}, {}};
    for (std::size_t i = 0; i < p.dim(); ++i) {
        pm.rho.push_back(ad(p, i));
        pm.mu.push_back(left_mult(p.prod, i));
    }
    return pm;
}

PoissonModule induce_module(const DiffAlgebra& da, const DiffBimodule& dbm) {
    const Bimodule& bm = dbm.base;
    if (da.phi.size() != 2 || dbm.omega.size() != 2) throw ShapeError("induced module needs exactly two maps");
    if (bm.l.size() != da.dim() || bm.r.size() != da.dim()) throw ShapeError("module action count mismatch");
    CheckReport same;
    same.law("left_equals_right");
    for (std::size_t i = 0; i < bm.alg_dim; ++i) same.add("left_equals_right", {i}, bm.l[i] - bm.r[i]);
    if (!same.pass()) throw Refused("induced module needs equal left and right actions", same);
    PoissonModule pm{bm.alg_dim, bm.v_dim, {}, bm.l};
    for (std::size_t i = 0; i < bm.alg_dim; ++i)
        pm.rho.push_back(bm.left(da.phi[0].column(i)) * dbm.omega[1] - bm.left(da.phi[1].column(i)) * dbm.omega[0]);
    return pm;
}

PoissonModule dual_poisson_module(const PoissonModule& pm) {
    PoissonModule out{pm.alg_dim, pm.v_dim, {}, {}};
    for (std::size_t i = 0; i < pm.alg_dim; ++i) {
        out.rho.push_back(-transpose(pm.rho.at(i)));
        out.mu.push_back(transpose(pm.mu.at(i)));
    }
    return out;
}

PoissonAlgebra poisson_semidirect(const PoissonAlgebra& p, const PoissonModule& pm) {
    require_poisson_shape(p);
    std::size_t n = p.dim(), m = pm.v_dim;
    if (pm.rho.size() != n || pm.mu.size() != n) throw ShapeError("module action count mismatch");
    PoissonAlgebra out{StructTensor(n + m), StructTensor(n + m)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                out.bracket(i, j, k) = p.bracket(i, j, k);
                out.prod(i, j, k) = p.prod(i, j, k);
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t w = 0; w < m; ++w) {
                out.bracket(i, n + v, n + w) = pm.rho[i](w, v);
                out.bracket(n + v, i, n + w) = -pm.rho[i](w, v);
                out.prod(i, n + v, n + w) = pm.mu[i](w, v);
                out.prod(n + v, i, n + w) = pm.mu[i](w, v);
            }
    return out;
}

CompatConditions check_compat_conditions(const DiffAlgebra& da, const std::vector<LinearOp>& psi, const Coalgebra& dc) {
    if (da.phi.size() != 2 || psi.size() != 2) throw ShapeError("compatibility conditions need exactly two maps");
    std::size_t n = da.dim();
    if (dc.dim() != n) throw ShapeError("coalgebra dimension mismatch");
    const auto& c = da.base.mult;
    const auto& d1 = da.phi[0];
    const auto& d2 = da.phi[1];
    const auto& e1 = psi[0];
    const auto& e2 = psi[1];
    Matrix id = Matrix::identity(n);

    CompatConditions out;
    out.s = e2 * d1 - e1 * d2;
    const Matrix& s = out.s;
    PoissonAlgebra p{induced_bracket(da, {{0, 1}}), c};

    std::vector<Matrix> L, AD, LS;
    std::vector<Element2> D, SD, DL;
    for (std::size_t i = 0; i < n; ++i) {
        L.push_back(left_mult(c, i));
        AD.push_back(ad(p, i));
        LS.push_back(left_mult(c, s.column(i)));
        D.push_back(coproduct(dc.comult, i));
        SD.push_back(apply2(s, id, D.back()));
        DL.push_back(apply2(e1, e2, D.back()) - apply2(e2, e1, D.back()));
    }

    CheckReport& rep = out.report;
    for (const char* name : {"vip1", "vip2", "dpb1", "dpb2"}) rep.law(name);
    for (std::size_t i = 0; i < n; ++i) {
        rep.add("vip2", {i}, SD[i]);
        for (std::size_t j = 0; j < n; ++j) {
            rep.add("vip1", {i, j}, bilinear(c, s.column(i), unit_vec(n, j)));
            Element2 dpb1 = apply2(id, L[j], SD[i]) - apply2(L[j], id, SD[i]) + apply2(LS[i], id, D[j]);
            rep.add("dpb1", {i, j}, dpb1);
            Element2 dpb2 = apply2(AD[i], s, D[j]) - apply2(s, AD[i], D[j]) - apply2(AD[j], s, D[i]) +
                            apply2(s, AD[j], D[i]) - apply2(LS[i], s, D[j]) + apply2(s, LS[i], D[j]) +
                            apply2(LS[j], s, D[i]) - apply2(s, LS[j], D[i]) + apply2(LS[i], id, DL[j]) +
                            apply2(id, LS[i], DL[j]) - apply2(LS[j], id, DL[i]) - apply2(id, LS[j], DL[i]);
            rep.add("dpb2", {i, j}, dpb2);
        }
    }
    rep.law("vip_implies_dpb");
    bool vip = rep.passes("vip1") && rep.passes("vip2");
    bool dpb = rep.passes("dpb1") && rep.passes("dpb2");
    if (vip && !dpb) rep.fail("vip_implies_dpb", "vip1 and vip2 hold but dpb1 or dpb2 fails");
    return out;
}

PoissonMatchedResult matched_pair_poisson(const PoissonAlgebra& a, const PoissonAlgebra& b,
                                          const PoissonMatchedActions& act) {
    require_poisson_shape(a);
    require_poisson_shape(b);
    std::size_t n = a.dim(), m = b.dim();
    if (act.rho_a.size() != n || act.mu_a.size() != n || act.rho_b.size() != m || act.mu_b.size() != m)
        throw ShapeError("matched pair action count mismatch");
    PoissonMatchedResult out;
    PoissonAlgebra& s = out.sum;
    s.bracket = StructTensor(n + m);
    s.prod = StructTensor(n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                s.bracket(i, j, k) = a.bracket(i, j, k);
                s.prod(i, j, k) = a.prod(i, j, k);
            }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) {
                s.bracket(n + i, n + j, n + k) = b.bracket(i, j, k);
                s.prod(n + i, n + j, n + k) = b.prod(i, j, k);
            }
    // [a, b'] = -rho_b(b') a + rho_a(a) b';  a . b' = mu_b(b') a + mu_a(a) b'.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                s.bracket(i, n + j, k) = -act.rho_b[j](k, i);
                s.bracket(n + j, i, k) = act.rho_b[j](k, i);
                s.prod(i, n + j, k) = act.mu_b[j](k, i);
                s.prod(n + j, i, k) = act.mu_b[j](k, i);
            }
            for (std::size_t k = 0; k < m; ++k) {
                s.bracket(i, n + j, n + k) = act.rho_a[i](k, j);
                s.bracket(n + j, i, n + k) = -act.rho_a[i](k, j);
                s.prod(i, n + j, n + k) = act.mu_a[i](k, j);
                s.prod(n + j, i, n + k) = act.mu_a[i](k, j);
            }
        }
    out.report.merge(check_poisson_module(a, PoissonModule{n, m, act.rho_a, act.mu_a}), "a_on_b");
    out.report.merge(check_poisson_module(b, PoissonModule{m, n, act.rho_b, act.mu_b}), "b_on_a");
    out.report.merge(check_poisson(s), "sum");
    return out;
}

CheckReport manin_triple(const PoissonAlgebra& p, const BilForm& form, const std::vector<std::size_t>& plus,
                         const std::vector<std::size_t>& minus) {
    require_poisson_shape(p);
    std::size_t n = p.dim();
    if (form.dim() != n || form.b.cols() != n) throw ShapeError("form dimension mismatch");
    CheckReport rep;
    rep.merge(check_poisson(p), "poisson");
    rep.merge(check_frobenius(Algebra(p.prod), form), "frobenius");

    rep.law("bracket_invariance");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Scalar lhs = 0, rhs = 0;
                for (std::size_t t = 0; t < n; ++t) {
                    lhs += p.bracket(i, j, t) * form.b(t, k);
                    rhs += form.b(i, t) * p.bracket(j, k, t);
                }
                rep.add("bracket_invariance", {i, j, k}, Scalar(lhs - rhs));
            }

    rep.law("direct_sum");
    std::set<std::size_t> seen;
    bool ok = true;
    for (auto idx : plus) ok = ok && idx < n && seen.insert(idx).second;
    for (auto idx : minus) ok = ok && idx < n && seen.insert(idx).second;
    if (!ok || seen.size() != n) rep.fail("direct_sum", "the two parts must partition the basis");

    auto part = [&](const std::vector<std::size_t>& idx, const std::string& tag) {
        std::vector<bool> inside(n, false);
        for (auto i : idx)
            if (i < n) inside[i] = true;
        rep.law("isotropic_" + tag);
        rep.law("subalgebra_" + tag);
        for (auto i : idx)
            for (auto j : idx) {
                if (i >= n || j >= n) continue;
                rep.add("isotropic_" + tag, {i, j}, form.b(i, j));
                Vec outside(2 * n);
                for (std::size_t k = 0; k < n; ++k)
                    if (!inside[k]) {
                        outside[k] = p.bracket(i, j, k);
                        outside[n + k] = p.prod(i, j, k);
                    }
                rep.add("subalgebra_" + tag, {i, j}, outside);
            }
    };
    part(plus, "plus");
    part(minus, "minus");
    return rep;
}

PoissonMatchedResult poisson_double(const PoissonBialgebra& pb) {
    std::size_t n = pb.dim();
    if (pb.cobracket.size() != n || pb.coproduct.size() != n) throw ShapeError("coproduct dimension mismatch");
    PoissonAlgebra dual{pb.cobracket, pb.coproduct};
    PoissonMatchedActions act;
    for (std::size_t i = 0; i < n; ++i) {
        act.rho_a.push_back(-transpose(ad(pb.alg, i)));
        act.mu_a.push_back(transpose(left_mult(pb.alg.prod, i)));
        act.rho_b.push_back(-transpose(ad(dual, i)));
        act.mu_b.push_back(transpose(left_mult(dual.prod, i)));
    }
    return matched_pair_poisson(pb.alg, dual, act);
}

CheckReport check_poisson_bialgebra(const PoissonBialgebra& pb) {
    std::size_t n = pb.dim();
    if (!pb.cobracket.cubic() || !pb.coproduct.cubic() || pb.cobracket.size() != n || pb.coproduct.size() != n)
        throw ShapeError("coproduct dimension mismatch");
    const auto& dl = pb.cobracket;
    const auto& dd = pb.coproduct;
    const auto& c = pb.alg.prod;
    const auto& b = pb.alg.bracket;
    CheckReport rep;
    rep.merge(check_poisson(pb.alg), "algebra");

    rep.law("cobracket_antisymmetry");
    rep.law("co_jacobi");
    rep.law("poisson_coalgebra");
    for (std::size_t k = 0; k < n; ++k) {
        Element2 dk = coproduct(dl, k);
        Element2 Dk = coproduct(dd, k);
        rep.add("cobracket_antisymmetry", {k}, dk + flip_sigma(dk));
        Element3 t = coproduct_right(dl, dk);
        rep.add("co_jacobi", {k}, t + cyclic_tau(t) + cyclic_tau(cyclic_tau(t)));
        rep.add("poisson_coalgebra", {k},
                coproduct_right(dd, dk) - coproduct_left(dl, Dk) - flip12(coproduct_right(dl, Dk)));
    }
    add_cocommutativity(rep, dd, "cocommutativity");
    add_coassociativity(rep, dd, "coassociativity");
    rep.merge(check_asi(ASIBialgebra{Algebra(c), Coalgebra(dd)}), "asi");

    Matrix id = Matrix::identity(n);
    std::vector<Matrix> L, AD;
    std::vector<Element2> DL, DD;
    for (std::size_t i = 0; i < n; ++i) {
        L.push_back(left_mult(c, i));
        AD.push_back(left_mult(b, i));
        DL.push_back(coproduct(dl, i));
        DD.push_back(coproduct(dd, i));
    }
    rep.law("lie_bialgebra");
    rep.law("poibi1");
    rep.law("poibi2");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec br = basis_product(b, i, j);
            Vec pr = basis_product(c, i, j);
            rep.add("lie_bialgebra", {i, j},
                    coproduct(dl, br) - apply2(AD[i], id, DL[j]) - apply2(id, AD[i], DL[j]) + apply2(AD[j], id, DL[i]) +
                        apply2(id, AD[j], DL[i]));
            rep.add("poibi1", {i, j},
                    coproduct(dl, pr) - apply2(L[i], id, DL[j]) - apply2(L[j], id, DL[i]) - apply2(id, AD[i], DD[j]) -
                        apply2(id, AD[j], DD[i]));
            rep.add("poibi2", {i, j},
                    coproduct(dd, br) - apply2(AD[i], id, DD[j]) - apply2(id, AD[i], DD[j]) - apply2(L[j], id, DL[i]) +
                        apply2(id, L[j], DL[i]));
        }
    return rep;
}

Cube induce_poisson_coalgebra(const Coalgebra& dc, const std::vector<LinearOp>& psi) {
    if (psi.size() != 2) throw ShapeError("induced cobracket needs exactly two maps");
    std::size_t n = dc.dim();
    return slices(n, [&](std::size_t k) {
        Element2 dk = coproduct(dc.comult, k);
        return apply2(psi[0], psi[1], dk) - apply2(psi[1], psi[0], dk);
    });
}

InducedPoissonBialgebra build_induced_poisson_bialgebra(const DiffASIBialgebra& db) {
    if (db.phi.size() != 2 || db.psi.size() != 2) throw ShapeError("induced Poisson bialgebra needs exactly two maps");
    CheckReport pre = check_diff_asi(db);
    add_commutativity(pre, db.bialg.alg.mult, "commutativity");
    add_cocommutativity(pre, db.bialg.coalg.comult, "cocommutativity");
    if (!pre.pass()) throw Refused("input must be a commutative cocommutative differential ASI bialgebra", pre);

    InducedPoissonBialgebra out;
    DiffAlgebra da = db.diff_algebra();
    out.bialgebra.alg = induce_poisson(da, {{0, 1}});
    out.bialgebra.coproduct = db.bialg.coalg.comult;
    out.bialgebra.cobracket = induce_poisson_coalgebra(db.bialg.coalg, db.psi);
    out.compat = check_compat_conditions(da, db.psi, db.bialg.coalg);

    out.report.merge(out.compat.report, "compat");
    CheckReport bi = check_poisson_bialgebra(out.bialgebra);
    out.report.merge(bi, "bialgebra");
    out.report.law("dpb_biconditional");
    bool dpb = out.compat.report.passes("dpb1") && out.compat.report.passes("dpb2");
    if (dpb != bi.pass()) out.report.fail("dpb_biconditional", "dpb verdict and bialgebra verdict differ");
    return out;
}

std::pair<Element3, Element3> pybe_residual(const PoissonAlgebra& p, const RElement& r) {
    require_poisson_shape(p);
    std::size_t n = p.dim();
    if (r.rows() != n || r.cols() != n) throw ShapeError("r must be n x n");
    const auto& b = p.bracket;
    Element3 out(n);
    std::vector<std::pair<std::size_t, std::size_t>> support;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (sgn(r(i, j)) != 0) support.emplace_back(i, j);
    // a_i = e_p, b_i = e_q; a_j = e_s, b_j = e_t.
    for (auto [pp, q] : support)
        for (auto [s, t] : support) {
            Scalar w = r(pp, q) * r(s, t);
            for (std::size_t k = 0; k < n; ++k) {
                if (sgn(b(pp, s, k)) != 0) out(k, q, t) += w * b(pp, s, k);   // [a_i, a_j] (x) b_i (x) b_j
                if (sgn(b(q, t, k)) != 0) out(pp, s, k) += w * b(q, t, k);    // a_i (x) a_j (x) [b_i, b_j]
                if (sgn(b(q, s, k)) != 0) out(pp, k, t) += w * b(q, s, k);    // a_i (x) [b_i, a_j] (x) b_j
            }
        }
    return {out, aybe_residual(Algebra(p.prod), r)};
}

std::pair<Cube, Cube> coboundary_poisson(const PoissonAlgebra& p, const RElement& r) {
    require_poisson_shape(p);
    std::size_t n = p.dim();
    if (r.rows() != n || r.cols() != n) throw ShapeError("r must be n x n");
    Cube delta = slices(n, [&](std::size_t k) {
        Matrix a = ad(p, k);
        return r * transpose(a) + a * r;
    });
    Cube cop = slices(n, [&](std::size_t k) {
        Matrix l = left_mult(p.prod, k);
        return r * transpose(l) - l * r;
    });
    return {delta, cop};
}

CheckReport check_poisson_o_operator(const PoissonAlgebra& p, const PoissonModule& pm, const OOperator& t) {
    require_poisson_shape(p);
    if (t.rows() != p.dim() || t.cols() != pm.v_dim || pm.alg_dim != p.dim()) throw ShapeError("T must map V to A");
    Bimodule rho{pm.alg_dim, pm.v_dim, pm.rho, pm.rho};
    Bimodule mu{pm.alg_dim, pm.v_dim, pm.mu, pm.mu};
    CheckReport rep;
    rep.law("bracket");
    rep.law("product");
    for (std::size_t u = 0; u < pm.v_dim; ++u)
        for (std::size_t v = 0; v < pm.v_dim; ++v) {
            Vec tu = t.column(u), tv = t.column(v);
            rep.add("bracket", {u, v},
                    bilinear(p.bracket, tu, tv) - t * (rho.left(tu).column(v) - rho.left(tv).column(u)));
            rep.add("product", {u, v}, bilinear(p.prod, tu, tv) - t * (mu.left(tu).column(v) + mu.left(tv).column(u)));
        }
    return rep;
}

CheckReport check_poisson_rota_baxter(const PoissonAlgebra& p, const LinearOp& r) {
    return check_poisson_o_operator(p, regular_module(p), r);
}

PoissonEmbeddedR oopsemi_embed(const PoissonAlgebra& p, const PoissonModule& pm, const OOperator& t) {
    PoissonEmbeddedR out;
    out.ambient = poisson_semidirect(p, dual_poisson_module(pm));
    RElement x = embed_T(t);
    out.r = x - transpose(x);
    add_pybe(out.equivalence.lhs, out.ambient, out.r);
    out.equivalence.lhs.add("antisymmetry", {}, out.r + transpose(out.r));
    out.equivalence.rhs = check_poisson_o_operator(p, pm, t);
    return out;
}

CheckReport check_prelie(const StructTensor& d) {
    if (!d.cubic()) throw ShapeError("pre-Lie product must be cubic");
    std::size_t n = d.size();
    CheckReport rep;
    rep.law("pre_lie");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec a = unit_vec(n, i), b = unit_vec(n, j), c = unit_vec(n, k);
                Vec v = bilinear(d, a, basis_product(d, j, k)) - bilinear(d, basis_product(d, i, j), c) -
                        bilinear(d, b, basis_product(d, i, k)) + bilinear(d, basis_product(d, j, i), c);
                rep.add("pre_lie", {i, j, k}, v);
            }
    return rep;
}

CheckReport check_prepoisson(const PrePoisson& pp) {
    if (!pp.diamond.cubic() || !pp.star.cubic() || pp.diamond.size() != pp.star.size())
        throw ShapeError("pre-Poisson products must be cubic of equal dimension");
    std::size_t n = pp.dim();
    const auto& d = pp.diamond;
    const auto& s = pp.star;
    CheckReport rep = check_prelie(d);
    rep.merge(check_zinbiel(Zinbiel{s, {}}));
    rep.law("bracket_star");
    rep.law("product_diamond");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec a = unit_vec(n, i), b = unit_vec(n, j), c = unit_vec(n, k);
                Vec comm = basis_product(d, i, j) - basis_product(d, j, i);
                Vec sym = basis_product(s, i, j) + basis_product(s, j, i);
                rep.add("bracket_star", {i, j, k},
                        bilinear(s, comm, c) - bilinear(d, a, basis_product(s, j, k)) + bilinear(s, b, basis_product(d, i, k)));
                rep.add("product_diamond", {i, j, k},
                        bilinear(d, sym, c) - bilinear(s, a, basis_product(d, j, k)) - bilinear(s, b, basis_product(d, i, k)));
            }
    return rep;
}

PoissonAlgebra prepoisson_to_poisson(const PrePoisson& pp) {
    CheckReport rep = check_prepoisson(pp);
    if (!rep.pass()) throw Refused("input is not a pre-Poisson algebra", rep);
    return PoissonAlgebra{pp.diamond - opposite(pp.diamond), pp.star + opposite(pp.star)};
}

PrePoisson zinbiel_to_prepoisson(const Zinbiel& z) {
    if (z.phi.size() != 2) throw ShapeError("induced pre-Poisson algebra needs exactly two maps");
    CheckReport rep = check_zinbiel(z);
    if (!rep.pass()) throw Refused("input is not a differential Zinbiel algebra", rep);
    std::size_t n = z.dim();
    const auto& d1 = z.phi[0];
    const auto& d2 = z.phi[1];
    PrePoisson out{StructTensor(n), z.star};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            set_product(out.diamond, i, j,
                        bilinear(z.star, d1.column(i), d2.column(j)) - bilinear(z.star, d2.column(i), d1.column(j)));
    return out;
}

CheckReport check_perm(const PermAlgebra& p) {
    if (!p.prod.cubic()) throw ShapeError("perm product must be cubic");
    std::size_t n = p.dim();
    CheckReport rep;
    add_associativity(rep, p.prod, "associativity");
    rep.law("left_commutative");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                rep.add("left_commutative", {i, j, k},
                        bilinear(p.prod, basis_product(p.prod, i, j) - basis_product(p.prod, j, i), unit_vec(n, k)));
    return rep;
}

PermTensorResult perm_tensor_poisson(const PermAlgebra& perm, const PrePoisson& pp) {
    if (!perm.prod.cubic() || !pp.diamond.cubic() || !pp.star.cubic() || pp.diamond.size() != pp.star.size())
        throw ShapeError("perm and pre-Poisson products must be cubic");
    std::size_t m = perm.dim(), n = pp.dim();
    const auto& P = perm.prod;
    PermTensorResult out;
    out.algebra = PoissonAlgebra{StructTensor(m * n), StructTensor(m * n)};
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t)
            for (std::size_t u = 0; u < m; ++u)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        for (std::size_t k = 0; k < n; ++k) {
                            out.algebra.bracket(s * n + i, t * n + j, u * n + k) =
                                P(s, t, u) * pp.diamond(i, j, k) - P(t, s, u) * pp.diamond(j, i, k);
                            out.algebra.prod(s * n + i, t * n + j, u * n + k) =
                                P(s, t, u) * pp.star(i, j, k) + P(t, s, u) * pp.star(j, i, k);
                        }
    out.report.merge(check_perm(perm), "perm");
    out.report.merge(check_poisson(out.algebra), "tensor");
    return out;
}

PipelineBundle pipeline_zinbiel_to_poisson_bialgebra(const Zinbiel& z) {
    PipelineBundle out;
    auto stage = [&](const std::string& name, const std::function<CheckReport()>& run) {
        PipelineStage st{name, {}, {}};
        try {
            st.report = run();
        } catch (const Refused& e) {
            st.report = e.report;
            st.note = e.what();
            if (st.report.pass()) st.report.fail("refused", e.what());
        } catch (const ShapeError& e) {
            st.note = e.what();
            st.report.fail("shape", e.what());
        }
        out.stages.push_back(st);
        if (!st.report.pass()) out.halted_at = name;
        return st.report.pass();
    };

    std::size_t n = z.dim();
    if (!stage("zinbiel", [&] {
            CheckReport rep = check_zinbiel(z);
            rep.law("two_maps");
            if (z.phi.size() != 2) rep.fail("two_maps", "the pipeline needs exactly two derivations");
            return rep;
        }))
        return out;

    if (!stage("associated_algebra", [&] {
            out.associated = associated_diff_algebra(as_dendriform(z));
            return check_diff_algebra(out.associated, true);
        }))
        return out;

    if (!stage("induced_poisson", [&] {
            out.induced = induce_poisson(out.associated, {{0, 1}});
            return check_poisson(out.induced);
        }))
        return out;

    if (!stage("pre_poisson", [&] {
            out.pre_poisson = zinbiel_to_prepoisson(z);
            CheckReport rep = check_prepoisson(out.pre_poisson);
            if (!rep.pass()) return rep;
            PoissonAlgebra assoc = prepoisson_to_poisson(out.pre_poisson);
            rep.add("diagram_bracket", {}, assoc.bracket - out.induced.bracket);
            rep.add("diagram_product", {}, assoc.prod - out.induced.prod);
            std::vector<Matrix> lstar;
            for (std::size_t i = 0; i < n; ++i) lstar.push_back(left_mult(z.star, i));
            PoissonModule rho = induce_module(out.associated, DiffBimodule{Bimodule{n, n, lstar, lstar}, z.phi});
            rep.law("diamond_action");
            for (std::size_t i = 0; i < n; ++i)
                rep.add("diamond_action", {i}, left_mult(out.pre_poisson.diamond, i) - rho.rho[i]);
            return rep;
        }))
        return out;

    out.r = canonical_r(n);
    if (!stage("diff_asi_bialgebra", [&] {
            out.diff_asi = dendriform_to_diff_asi(as_dendriform(z));
            CheckReport rep = check_diff_asi(out.diff_asi);
            add_commutativity(rep, out.diff_asi.bialg.alg.mult, "commutativity");
            add_cocommutativity(rep, out.diff_asi.bialg.coalg.comult, "cocommutativity");
            rep.merge(check_psi_admissible_aybe(out.diff_asi.diff_algebra(), out.diff_asi.psi, out.r), "aybe");
            return rep;
        }))
        return out;

    stage("poisson_bialgebra", [&] {
        InducedPoissonBialgebra ipb = build_induced_poisson_bialgebra(out.diff_asi);
        out.poisson_bialgebra = ipb.bialgebra;
        for (const char* g : {"vip1", "vip2", "dpb1", "dpb2"}) out.gates[g] = ipb.compat.report.passes(g);
        CheckReport rep = ipb.report;
        auto [delta, cop] = coboundary_poisson(ipb.bialgebra.alg, out.r);
        rep.add("cobracket_agreement", {}, ipb.bialgebra.cobracket - delta);
        rep.add("coproduct_agreement", {}, ipb.bialgebra.coproduct - cop);
        add_pybe(rep, ipb.bialgebra.alg, out.r);
        std::vector<Matrix> ldiamond, lstar;
        for (std::size_t i = 0; i < n; ++i) {
            ldiamond.push_back(left_mult(out.pre_poisson.diamond, i));
            lstar.push_back(left_mult(z.star, i));
        }
        PoissonAlgebra semi =
            poisson_semidirect(out.induced, dual_poisson_module(PoissonModule{n, n, ldiamond, lstar}));
        rep.add("semidirect_bracket", {}, semi.bracket - ipb.bialgebra.alg.bracket);
        rep.add("semidirect_product", {}, semi.prod - ipb.bialgebra.alg.prod);
        return rep;
    });
    return out;
}

}  // namespace forge
