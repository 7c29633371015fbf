#include "forge/dendriform.hpp"

namespace forge {

namespace {

void require_pair(const Dendriform& d) {
    if (!d.succ.cubic() || !d.prec.cubic() || d.succ.size() != d.prec.size())
        throw ShapeError("dendriform products must be cubic of equal dimension");
}

void set_product(StructTensor& c, std::size_t i, std::size_t j, const Vec& v) {
    for (std::size_t k = 0; k < v.size(); ++k) c(i, j, k) = v[k];
}

}  // namespace

CheckReport check_dendriform(const Dendriform& d) {
    require_pair(d);
    std::size_t n = d.dim();
    const auto& s = d.succ;
    const auto& p = d.prec;
    CheckReport rep;
    rep.law("prec_prec");
    rep.law("succ_prec");
    rep.law("sum_succ");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec a = unit_vec(n, i);
            Vec ps = basis_product(p, i, j), ss = basis_product(s, i, j);
            for (std::size_t k = 0; k < n; ++k) {
                Vec c = unit_vec(n, k);
                Vec bp = basis_product(p, j, k), bs = basis_product(s, j, k);
                rep.add("prec_prec", {i, j, k}, bilinear(p, ps, c) - bilinear(p, a, bp + bs));
                rep.add("succ_prec", {i, j, k}, bilinear(p, ss, c) - bilinear(s, a, bp));
                rep.add("sum_succ", {i, j, k}, bilinear(s, ps + ss, c) - bilinear(s, a, bs));
            }
        }
    return rep;
}

CheckReport check_diff_dendriform(const DiffDendriform& dd) {
    CheckReport rep = check_dendriform(dd.base);
    rep.law("derivation_succ");
    rep.law("derivation_prec");
    for (std::size_t k = 0; k < dd.phi.size(); ++k) {
        if (dd.phi[k].rows() != dd.dim() || dd.phi[k].cols() != dd.dim()) throw ShapeError("derivation shape mismatch");
        add_leibniz(rep, dd.base.succ, dd.phi[k], "derivation_succ", {k});
        add_leibniz(rep, dd.base.prec, dd.phi[k], "derivation_prec", {k});
    }
    add_family_commutes(rep, dd.phi, "derivations_commute");
    return rep;
}

CheckReport check_zinbiel(const Zinbiel& z) {
    if (!z.star.cubic()) throw ShapeError("Zinbiel product must be cubic");
    std::size_t n = z.dim();
    const auto& s = z.star;
    CheckReport rep;
    rep.law("zinbiel");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec ij = basis_product(s, i, j), ji = basis_product(s, j, i);
            for (std::size_t k = 0; k < n; ++k) {
                Vec c = unit_vec(n, k);
                rep.add("zinbiel", {i, j, k},
                        bilinear(s, unit_vec(n, i), basis_product(s, j, k)) - bilinear(s, ij, c) - bilinear(s, ji, c));
            }
        }
    if (!z.phi.empty()) {
        // Leibniz for * gives both dendriform rules, since < is the opposite of *.
        rep.law("leibniz");
        for (std::size_t k = 0; k < z.phi.size(); ++k) {
            if (z.phi[k].rows() != n || z.phi[k].cols() != n) throw ShapeError("derivation shape mismatch");
            add_leibniz(rep, s, z.phi[k], "leibniz", {k});
        }
        add_family_commutes(rep, z.phi, "derivations_commute");
    }
    return rep;
}

DiffDendriform as_dendriform(const Zinbiel& z) {
    if (!z.star.cubic()) throw ShapeError("Zinbiel product must be cubic");
    return DiffDendriform{Dendriform{z.star, opposite(z.star)}, z.phi};
}

Algebra associated_algebra(const Dendriform& d) {
    require_pair(d);
    return Algebra(d.succ + d.prec);
}

DiffAlgebra associated_diff_algebra(const DiffDendriform& dd) { return DiffAlgebra{associated_algebra(dd.base), dd.phi}; }

DiffDendriform from_rota_baxter(const DiffAlgebra& da, const LinearOp& r) {
    CheckReport rep = check_rota_baxter(da.base, r);
    rep.law("commutes");
    for (std::size_t k = 0; k < da.phi.size(); ++k) rep.add("commutes", {k}, r * da.phi[k] - da.phi[k] * r);
    if (!rep.pass()) throw Refused("R must be a Rota-Baxter operator commuting with every derivation", rep);
    std::size_t n = da.dim();
    const auto& c = da.base.mult;
    DiffDendriform out{Dendriform{StructTensor(n), StructTensor(n)}, da.phi};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            set_product(out.base.succ, i, j, bilinear(c, r.column(i), unit_vec(n, j)));
            set_product(out.base.prec, i, j, bilinear(c, unit_vec(n, i), r.column(j)));
        }
    return out;
}

DiffDendriform from_o_operator(const DiffAlgebra& da, const DiffBimodule& dbm, const OOperator& t) {
    CheckReport rep = check_o_operator(da, dbm, t);
    if (!rep.pass()) throw Refused("T is not an O-operator", rep);
    std::size_t m = dbm.base.v_dim;
    DiffDendriform out{Dendriform{StructTensor(m), StructTensor(m)}, dbm.omega};
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = 0; v < m; ++v) {
            set_product(out.base.succ, u, v, dbm.base.left(t.column(u)).column(v));
            set_product(out.base.prec, u, v, dbm.base.right(t.column(v)).column(u));
        }
    return out;
}

DiffBimodule dendriform_bimodule(const DiffDendriform& dd) {
    require_pair(dd.base);
    std::size_t n = dd.dim();
    DiffBimodule out{Bimodule{n, n, {}, {}}, dd.phi};
    for (std::size_t i = 0; i < n; ++i) {
        out.base.l.push_back(left_mult(dd.base.succ, i));
        out.base.r.push_back(right_mult(dd.base.prec, i));
    }
    return out;
}

DiffASIBialgebra dendriform_to_diff_asi(const DiffDendriform& dd, const std::vector<Scalar>& theta) {
    CheckReport rep = check_diff_dendriform(dd);
    if (!rep.pass()) throw Refused("input is not a differential dendriform algebra", rep);
    std::vector<Scalar> th = theta.empty() ? std::vector<Scalar>(dd.phi.size(), Scalar(0)) : theta;
    std::vector<LinearOp> shifted = theta_family(dd.phi, th);
    DiffBimodule bm = dendriform_bimodule(dd);
    // id is an O-operator of the associated algebra for (A, L_>, R_<, Phi).
    EmbeddedR e = embed_T_as_r(associated_diff_algebra(dd), AdmissibleQuadruple{bm.base, shifted}, dd.phi, shifted,
                               Matrix::identity(dd.dim()));
    return DiffASIBialgebra{ASIBialgebra{e.ambient.base, coboundary_delta(e.ambient.base, e.r)}, e.ambient.phi, e.psi};
}

}  // namespace forge
