#include "forge/yangbaxter.hpp"

namespace forge {

namespace {

void require_square(const RElement& r, std::size_t n) {
    if (r.rows() != n || r.cols() != n) throw ShapeError("r must be n x n for an n-dimensional algebra");
}

void require_families(const DiffAlgebra& da, const std::vector<LinearOp>& psi) {
    if (psi.size() != da.phi.size()) throw ShapeError("psi and phi differ in size");
    for (const auto& f : psi)
        if (f.rows() != da.dim() || f.cols() != da.dim()) throw ShapeError("psi maps must be square of algebra dimension");
}

}  // namespace

Coalgebra coboundary_delta(const Algebra& alg, const RElement& r) {
    std::size_t n = alg.dim();
    require_square(r, n);
    Cube d(n);
    for (std::size_t k = 0; k < n; ++k)
        d.set_slice3(k, r * transpose(left_mult(alg.mult, k)) - right_mult(alg.mult, k) * r);
    return Coalgebra(std::move(d));
}

Element3 aybe_residual(const Algebra& alg, const RElement& r) {
    std::size_t n = alg.dim();
    require_square(r, n);
    const auto& c = alg.mult;
    Element3 out(n);
    std::vector<std::pair<std::size_t, std::size_t>> support;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            if (sgn(r(p, q)) != 0) support.emplace_back(p, q);
    // r = sum_i a_i (x) b_i with a_i = e_p, b_i = e_q; second copy a_j = e_s, b_j = e_t.
    for (auto [p, q] : support)
        for (auto [s, t] : support) {
            Scalar w = r(p, q) * r(s, t);
            for (std::size_t k = 0; k < n; ++k) {
                if (sgn(c(p, s, k)) != 0) out(k, q, t) += w * c(p, s, k);   // a_i a_j (x) b_i (x) b_j
                if (sgn(c(q, t, k)) != 0) out(p, s, k) += w * c(q, t, k);   // a_i (x) a_j (x) b_i b_j
                if (sgn(c(p, t, k)) != 0) out(s, k, q) -= w * c(p, t, k);   // a_j (x) a_i b_j (x) b_i
            }
        }
    return out;
}

bool is_antisymmetric(const RElement& r) { return r.square() && (r + transpose(r)).is_zero(); }

CheckReport check_psi_admissible_aybe(const DiffAlgebra& da, const std::vector<LinearOp>& psi, const RElement& r) {
    std::size_t n = da.dim();
    require_square(r, n);
    require_families(da, psi);
    CheckReport rep;
    rep.add("aybe", {}, aybe_residual(da.base, r));
    rep.law("pqadm1");
    rep.law("pqadm2");
    Matrix id = Matrix::identity(n);
    for (std::size_t k = 0; k < psi.size(); ++k) {
        rep.add("pqadm1", {k}, apply2(da.phi[k], id, r) - apply2(id, psi[k], r));
        rep.add("pqadm2", {k}, apply2(psi[k], id, r) - apply2(id, da.phi[k], r));
    }
    if (is_antisymmetric(r)) {
        rep.law("pqadm_agreement");
        if (rep.passes("pqadm1") != rep.passes("pqadm2"))
            rep.fail("pqadm_agreement", "side conditions disagree on an antisymmetric r");
    }
    return rep;
}

CheckReport check_coboundary_conditions(const DiffAlgebra& da, const std::vector<LinearOp>& psi, const RElement& r,
                                        CoboundaryOptions opts) {
    std::size_t n = da.dim();
    require_square(r, n);
    require_families(da, psi);
    const auto& c = da.base.mult;
    Matrix id = Matrix::identity(n);
    std::vector<Matrix> L, R;
    for (std::size_t i = 0; i < n; ++i) {
        L.push_back(left_mult(c, i));
        R.push_back(right_mult(c, i));
    }
    CheckReport rep;
    for (const char* name : {"cobanti", "cobcoa", "cobdcod", "cobpsadm1", "cobpsadm2"}) rep.law(name);

    RElement sym = r + transpose(r);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element2 inner = apply2(id, L[j], sym) - apply2(R[j], id, sym);
            rep.add("cobanti", {i, j}, apply2(L[i], id, inner) - apply2(id, R[i], inner));
        }
    Element3 y = aybe_residual(da.base, r);
    for (std::size_t i = 0; i < n; ++i) rep.add("cobcoa", {i}, apply3(id, id, L[i], y) - apply3(R[i], id, id, y));

    for (std::size_t k = 0; k < psi.size(); ++k) {
        const auto& d = da.phi[k];
        const auto& e = psi[k];
        Element2 m1 = apply2(id, d, r) - apply2(e, id, r);
        Element2 m2 = apply2(id, e, r) - apply2(d, id, r);
        Element2 p1 = apply2(d, id, r) - apply2(id, e, r);
        Element2 p2 = apply2(id, d, r) - apply2(e, id, r);
        for (std::size_t i = 0; i < n; ++i) {
            rep.add("cobdcod", {k, i}, apply2(id, L[i], m1) + apply2(R[i], id, m2));
            rep.add("cobpsadm1", {k, i}, apply2(id, L[i], p1) - apply2(R[i], id, p1));
            rep.add("cobpsadm2", {k, i}, apply2(id, L[i], p2) - apply2(R[i], id, p2));
        }
    }
    if (opts.require_admissible) {
        DiffASIBialgebra structure{ASIBialgebra{da.base, coboundary_delta(da.base, r)}, da.phi, psi};
        rep.merge(check_diff_asi(structure), "structure");
    }
    return rep;
}

Matrix r_sharp(const RElement& r) { return transpose(r); }

CheckReport check_r_sharp_operator(const DiffAlgebra& da, const std::vector<LinearOp>& psi, const RElement& r) {
    std::size_t n = da.dim();
    require_square(r, n);
    require_families(da, psi);
    const auto& c = da.base.mult;
    Matrix m = r_sharp(r);
    CheckReport rep;
    rep.law("o_operator");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec x = m.column(i), y = m.column(j);
            Vec inner = transpose(right_mult(c, x)) * unit_vec(n, j) + transpose(left_mult(c, y)) * unit_vec(n, i);
            rep.add("o_operator", {i, j}, bilinear(c, x, y) - m * inner);
        }
    rep.law("intertwine");
    for (std::size_t k = 0; k < psi.size(); ++k) rep.add("intertwine", {k}, da.phi[k] * m - m * transpose(psi[k]));
    return rep;
}

Equivalence check_r_sharp_equivalence(const DiffAlgebra& da, const std::vector<LinearOp>& psi, const RElement& r) {
    if (!is_antisymmetric(r)) {
        CheckReport why;
        why.add("antisymmetry", {}, r + transpose(r));
        throw Refused("the r# equivalence is stated for antisymmetric r", why);
    }
    return Equivalence{check_psi_admissible_aybe(da, psi, r), check_r_sharp_operator(da, psi, r)};
}

CheckReport check_o_operator_identity(const Algebra& alg, const Bimodule& bm, const OOperator& t) {
    if (t.rows() != alg.dim() || t.cols() != bm.v_dim || bm.alg_dim != alg.dim()) throw ShapeError("T must map V to A");
    CheckReport rep;
    rep.law("o_operator");
    for (std::size_t u = 0; u < bm.v_dim; ++u)
        for (std::size_t v = 0; v < bm.v_dim; ++v) {
            Vec tu = t.column(u), tv = t.column(v);
            Vec inner = bm.left(tu).column(v) + bm.right(tv).column(u);
            rep.add("o_operator", {u, v}, bilinear(alg.mult, tu, tv) - t * inner);
        }
    return rep;
}

CheckReport check_o_operator(const DiffAlgebra& da, const DiffBimodule& dbm, const OOperator& t) {
    CheckReport rep = check_o_operator_identity(da.base, dbm.base, t);
    if (dbm.omega.size() != da.phi.size()) throw ShapeError("omega and phi differ in size");
    rep.law("intertwine");
    for (std::size_t k = 0; k < da.phi.size(); ++k) rep.add("intertwine", {k}, da.phi[k] * t - t * dbm.omega[k]);
    return rep;
}

CheckReport check_rota_baxter(const Algebra& alg, const LinearOp& r) {
    if (r.rows() != alg.dim() || r.cols() != alg.dim()) throw ShapeError("Rota-Baxter operator must be square");
    std::size_t n = alg.dim();
    CheckReport rep;
    rep.law("rota_baxter");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec ra = r.column(i), rb = r.column(j);
            Vec inner = bilinear(alg.mult, ra, unit_vec(n, j)) + bilinear(alg.mult, unit_vec(n, i), rb);
            rep.add("rota_baxter", {i, j}, bilinear(alg.mult, ra, rb) - r * inner);
        }
    return rep;
}

LinearOp lift_hat(const OOperator& t) {
    std::size_t n = t.rows(), m = t.cols();
    LinearOp out(n + m, n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t v = 0; v < m; ++v) out(i, n + v) = t(i, v);
    return out;
}

RElement embed_T(const OOperator& t) {
    std::size_t n = t.rows(), m = t.cols();
    RElement x(n + m, n + m);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t v = 0; v < m; ++v) x(p, n + v) = t(p, v);
    return x;
}

EmbeddedR embed_T_as_r(const DiffAlgebra& da, const AdmissibleQuadruple& aq, const std::vector<LinearOp>& omega,
                       const std::vector<LinearOp>& psi, const OOperator& t) {
    CheckReport adm = check_admissible(da, aq);
    if (!adm.pass()) throw Refused("the family pi is not admissible", adm);
    if (omega.size() != da.phi.size() || psi.size() != da.phi.size()) throw ShapeError("family sizes differ");
    EmbeddedR out;
    out.ambient = semidirect_product(da, dual_bimodule(aq.base, aq.pi));
    for (std::size_t k = 0; k < psi.size(); ++k) out.psi.push_back(direct_sum(psi[k], transpose(omega[k])));
    RElement x = embed_T(t);
    out.r = x - transpose(x);

    out.equivalence.lhs = check_psi_admissible_aybe(out.ambient, out.psi, out.r);
    CheckReport& rhs = out.equivalence.rhs;
    rhs = check_o_operator_identity(da.base, aq.base, t);
    rhs.law("intertwine_omega");
    rhs.law("intertwine_pi");
    for (std::size_t k = 0; k < psi.size(); ++k) {
        rhs.add("intertwine_omega", {k}, da.phi[k] * t - t * omega[k]);
        rhs.add("intertwine_pi", {k}, t * aq.pi[k] - psi[k] * t);
    }
    return out;
}

RElement canonical_r(std::size_t n) {
    if (n == 0) throw ShapeError("canonical r needs n >= 1");
    RElement r(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        r(i, n + i) = 1;
        r(n + i, i) = -1;
    }
    return r;
}

PrResult p_r_from_form(const DiffAlgebra& da, const BilForm& form, const RElement& r) {
    require_square(r, da.dim());
    CheckReport frob = check_frobenius(da.base, form);
    if (!frob.pass()) throw Refused("P_r needs a nondegenerate symmetric invariant form", frob);
    if (!is_antisymmetric(r)) {
        CheckReport why;
        why.add("antisymmetry", {}, r + transpose(r));
        throw Refused("P_r equivalence is stated for antisymmetric r", why);
    }
    PrResult out;
    out.p = r_sharp(r) * transpose(form.b);
    out.equivalence.lhs = check_psi_admissible_aybe(da, adjoint_family(form, da.phi), r);
    out.equivalence.rhs = check_rota_baxter(da.base, out.p);
    out.equivalence.rhs.law("commutes");
    for (std::size_t k = 0; k < da.phi.size(); ++k)
        out.equivalence.rhs.add("commutes", {k}, da.phi[k] * out.p - out.p * da.phi[k]);
    return out;
}

}  // namespace forge
