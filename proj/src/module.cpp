#include "forge/module.hpp"

namespace forge {

namespace {

void require_actions(const Bimodule& bm) {
    if (bm.l.size() != bm.alg_dim || bm.r.size() != bm.alg_dim) throw ShapeError("one action matrix per algebra basis vector");
    for (std::size_t i = 0; i < bm.alg_dim; ++i)
        if (bm.l[i].rows() != bm.v_dim || bm.l[i].cols() != bm.v_dim || bm.r[i].rows() != bm.v_dim ||
            bm.r[i].cols() != bm.v_dim)
            throw ShapeError("action matrices must be v_dim x v_dim");
}

void require_family(const std::vector<LinearOp>& fam, std::size_t n, std::size_t count, const char* what) {
    if (fam.size() != count) throw ShapeError(std::string(what) + ": family size mismatch");
    for (const auto& f : fam)
        if (f.rows() != n || f.cols() != n) throw ShapeError(std::string(what) + ": map shape mismatch");
}

}  // namespace

Bimodule Bimodule::regular(const Algebra& alg) {
    Bimodule bm{alg.dim(), alg.dim(), {}, {}};
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        bm.l.push_back(left_mult(alg.mult, i));
        bm.r.push_back(right_mult(alg.mult, i));
    }
    return bm;
}

Bimodule Bimodule::zero(std::size_t alg_dim, std::size_t v_dim) {
    return Bimodule{alg_dim, v_dim, std::vector<Matrix>(alg_dim, Matrix(v_dim, v_dim)),
                    std::vector<Matrix>(alg_dim, Matrix(v_dim, v_dim))};
}

Matrix Bimodule::left(const Vec& a) const {
    Matrix m(v_dim, v_dim);
    for (std::size_t i = 0; i < alg_dim; ++i)
        if (sgn(a[i]) != 0) m += a[i] * l[i];
    return m;
}

Matrix Bimodule::right(const Vec& a) const {
    Matrix m(v_dim, v_dim);
    for (std::size_t i = 0; i < alg_dim; ++i)
        if (sgn(a[i]) != 0) m += a[i] * r[i];
    return m;
}

CheckReport check_bimodule(const Algebra& alg, const Bimodule& bm) {
    if (alg.dim() != bm.alg_dim) throw ShapeError("bimodule algebra dimension mismatch");
    require_actions(bm);
    CheckReport rep;
    rep.law("left_action");
    rep.law("right_action");
    rep.law("actions_commute");
    std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec ij = basis_product(alg.mult, i, j);
            Matrix left = bm.l[i] * bm.l[j] - bm.left(ij);
            Matrix right = bm.r[j] * bm.r[i] - bm.right(ij);
            Matrix mixed = bm.r[j] * bm.l[i] - bm.l[i] * bm.r[j];
            for (std::size_t v = 0; v < bm.v_dim; ++v) {
                rep.add("left_action", {i, j, v}, left.column(v));
                rep.add("right_action", {i, j, v}, right.column(v));
                rep.add("actions_commute", {i, j, v}, mixed.column(v));
            }
        }
    return rep;
}

CheckReport check_diff_bimodule(const DiffAlgebra& da, const DiffBimodule& dbm) {
    CheckReport rep = check_bimodule(da.base, dbm.base);
    const Bimodule& bm = dbm.base;
    require_family(dbm.omega, bm.v_dim, da.phi.size(), "omega");
    add_family_commutes(rep, dbm.omega, "omega_commute");
    rep.law("intertwine_left");
    rep.law("intertwine_right");
    for (std::size_t k = 0; k < da.phi.size(); ++k) {
        const auto& alpha = dbm.omega[k];
        for (std::size_t i = 0; i < bm.alg_dim; ++i) {
            Vec da_i = da.phi[k].column(i);
            Matrix left = alpha * bm.l[i] - bm.left(da_i) - bm.l[i] * alpha;
            Matrix right = alpha * bm.r[i] - bm.right(da_i) - bm.r[i] * alpha;
            for (std::size_t v = 0; v < bm.v_dim; ++v) {
                rep.add("intertwine_left", {k, i, v}, left.column(v));
                rep.add("intertwine_right", {k, i, v}, right.column(v));
            }
        }
    }
    return rep;
}

DiffBimodule dual_bimodule(const Bimodule& bm, const std::vector<LinearOp>& pi) {
    require_actions(bm);
    DiffBimodule out;
    out.base.alg_dim = bm.alg_dim;
    out.base.v_dim = bm.v_dim;
    for (std::size_t i = 0; i < bm.alg_dim; ++i) {
        out.base.l.push_back(transpose(bm.r[i]));
        out.base.r.push_back(transpose(bm.l[i]));
    }
    out.omega = transpose_family(pi);
    return out;
}

CheckReport check_admissible(const DiffAlgebra& da, const AdmissibleQuadruple& aq) {
    const Bimodule& bm = aq.base;
    require_actions(bm);
    require_family(aq.pi, bm.v_dim, da.phi.size(), "pi");
    CheckReport rep;
    add_family_commutes(rep, aq.pi, "pi_commute");
    rep.law("admissible_right");
    rep.law("admissible_left");
    for (std::size_t k = 0; k < aq.pi.size(); ++k) {
        const auto& beta = aq.pi[k];
        for (std::size_t i = 0; i < bm.alg_dim; ++i) {
            Vec da_i = da.phi[k].column(i);
            Matrix right = bm.r[i] * beta - bm.right(da_i) - beta * bm.r[i];
            Matrix left = bm.l[i] * beta - bm.left(da_i) - beta * bm.l[i];
            for (std::size_t v = 0; v < bm.v_dim; ++v) {
                rep.add("admissible_right", {k, i, v}, right.column(v));
                rep.add("admissible_left", {k, i, v}, left.column(v));
            }
        }
    }
    // The dual side only repeats the intertwining laws; the bimodule laws of V* hold iff those of V do.
    CheckReport dual = check_diff_bimodule(da, dual_bimodule(bm, aq.pi));
    bool dual_ok = dual.passes("intertwine_left") && dual.passes("intertwine_right") && dual.passes("omega_commute");
    rep.law("dual_agreement");
    if (dual_ok != rep.pass()) rep.fail("dual_agreement", "direct and dual admissibility verdicts differ");
    return rep;
}

std::vector<LinearOp> theta_family(const std::vector<LinearOp>& omega, const std::vector<Scalar>& theta) {
    if (omega.size() != theta.size()) throw ShapeError("theta length must match family size");
    std::vector<LinearOp> out;
    for (std::size_t k = 0; k < omega.size(); ++k) {
        if (!omega[k].square()) throw ShapeError("family maps must be square");
        out.push_back(theta[k] * Matrix::identity(omega[k].rows()) - omega[k]);
    }
    return out;
}

DiffAlgebra semidirect_unchecked(const DiffAlgebra& da, const DiffBimodule& dbm) {
    const Bimodule& bm = dbm.base;
    require_actions(bm);
    std::size_t n = da.dim(), m = bm.v_dim;
    StructTensor c(n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c(i, j, k) = da.base.mult(i, j, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t w = 0; w < m; ++w) {
                c(i, n + v, n + w) = bm.l[i](w, v);
                c(n + v, i, n + w) = bm.r[i](w, v);
            }
    DiffAlgebra out{Algebra(std::move(c)), {}};
    for (std::size_t k = 0; k < da.phi.size(); ++k) out.phi.push_back(direct_sum(da.phi[k], dbm.omega.at(k)));
    return out;
}

DiffAlgebra semidirect_product(const DiffAlgebra& da, const DiffBimodule& dbm) {
    CheckReport rep = check_diff_bimodule(da, dbm);
    if (!rep.pass()) throw Refused("semidirect product needs a bimodule of the differential algebra", rep);
    return semidirect_unchecked(da, dbm);
}

StructTensor matched_product(const StructTensor& a, const StructTensor& b, const MatchedActions& act) {
    std::size_t n = a.size(), m = b.size();
    if (act.l_a.size() != n || act.r_a.size() != n || act.l_b.size() != m || act.r_b.size() != m)
        throw ShapeError("matched pair action count mismatch");
    StructTensor c(n + m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) c(i, j, k) = a(i, j, k);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k) c(n + i, n + j, n + k) = b(i, j, k);
    // a * b' = r_b(b') a + l_a(a) b';  b * a' = l_b(b) a' + r_a(a') b.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                c(i, n + j, k) = act.r_b[j](k, i);
                c(n + j, i, k) = act.l_b[j](k, i);
            }
            for (std::size_t k = 0; k < m; ++k) {
                c(i, n + j, n + k) = act.l_a[i](k, j);
                c(n + j, i, n + k) = act.r_a[i](k, j);
            }
        }
    return c;
}

MatchedPairResult matched_pair_assemble(const DiffAlgebra& a, const DiffAlgebra& b, const MatchedActions& act) {
    if (a.phi.size() != b.phi.size()) throw ShapeError("families must have equal length");
    MatchedPairResult out;
    out.sum.base = Algebra(matched_product(a.base.mult, b.base.mult, act));
    for (std::size_t k = 0; k < a.phi.size(); ++k) out.sum.phi.push_back(direct_sum(a.phi[k], b.phi[k]));

    CheckReport& rep = out.report;
    add_associativity(rep, out.sum.base.mult, "associativity");
    rep.merge(check_diff_algebra(a), "a");
    rep.merge(check_diff_algebra(b), "b");
    Bimodule on_b{a.dim(), b.dim(), act.l_a, act.r_a};
    Bimodule on_a{b.dim(), a.dim(), act.l_b, act.r_b};
    rep.merge(check_diff_bimodule(a, DiffBimodule{on_b, b.phi}), "a_on_b");
    rep.merge(check_diff_bimodule(b, DiffBimodule{on_a, a.phi}), "b_on_a");
    rep.merge(check_diff_algebra(out.sum), "sum");
    return out;
}

}  // namespace forge
