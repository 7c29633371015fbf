#include "forge/bialgebra.hpp"

#include <functional>

namespace forge {

namespace {

using Emit = std::function<void(const std::vector<std::size_t>&, const Vec&, std::vector<std::size_t>)>;

std::vector<std::size_t> with(std::vector<std::size_t> prefix, std::initializer_list<std::size_t> tail) {
    prefix.insert(prefix.end(), tail);
    return prefix;
}

Emit into(CheckReport& rep, const std::string& name) {
    rep.law(name);
    return [&rep, name](const std::vector<std::size_t>& at, const Vec& v, std::vector<std::size_t> shape) {
        if (is_zero(v)) return;
        rep.law(name).witnesses.push_back(Witness{at, std::move(shape), v});
    };
}

Emit append_to(Vec& out) {
    return [&out](const std::vector<std::size_t>&, const Vec& v, std::vector<std::size_t>) {
        out.insert(out.end(), v.begin(), v.end());
    };
}

void emit_matrix(const Emit& emit, const std::vector<std::size_t>& at, const Matrix& m) {
    emit(at, m.data(), {m.rows(), m.cols()});
}

void emit_vec(const Emit& emit, const std::vector<std::size_t>& at, const Vec& v) { emit(at, v, {v.size()}); }

void emit_coderivation(const Cube& d, const LinearOp& e, const std::vector<std::size_t>& prefix, const Emit& emit) {
    std::size_t n = d.size();
    if (e.rows() != n || e.cols() != n) throw ShapeError("coderivation must be square of coalgebra dimension");
    Matrix id = Matrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        Element2 dk = coproduct(d, k);
        emit_matrix(emit, with(prefix, {k}), coproduct(d, e.column(k)) - apply2(e, id, dk) - apply2(id, e, dk));
    }
}

void emit_qadm1(const StructTensor& c, const LinearOp& d, const LinearOp& cd, const std::vector<std::size_t>& prefix,
                const Emit& emit) {
    std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            emit_vec(emit, with(prefix, {i, j}),
                     bilinear(c, cd.column(i), unit_vec(n, j)) - bilinear(c, unit_vec(n, i), d.column(j)) -
                         cd * basis_product(c, i, j));
}

void emit_qadm2(const StructTensor& c, const LinearOp& d, const LinearOp& cd, const std::vector<std::size_t>& prefix,
                const Emit& emit) {
    std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            emit_vec(emit, with(prefix, {i, j}),
                     bilinear(c, unit_vec(n, i), cd.column(j)) - bilinear(c, d.column(i), unit_vec(n, j)) -
                         cd * basis_product(c, i, j));
}

void emit_psadm1(const Cube& dd, const LinearOp& d, const LinearOp& cd, const std::vector<std::size_t>& prefix,
                 const Emit& emit) {
    std::size_t n = dd.size();
    Matrix id = Matrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        Element2 dk = coproduct(dd, k);
        emit_matrix(emit, with(prefix, {k}), apply2(d, id, dk) - apply2(id, cd, dk) - coproduct(dd, d.column(k)));
    }
}

void emit_psadm2(const Cube& dd, const LinearOp& d, const LinearOp& cd, const std::vector<std::size_t>& prefix,
                 const Emit& emit) {
    std::size_t n = dd.size();
    Matrix id = Matrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        Element2 dk = coproduct(dd, k);
        emit_matrix(emit, with(prefix, {k}), apply2(id, d, dk) - apply2(cd, id, dk) - coproduct(dd, d.column(k)));
    }
}

void emit_leibniz(const StructTensor& c, const LinearOp& d, const std::vector<std::size_t>& prefix, const Emit& emit) {
    std::size_t n = c.size();
    Vec all = leibniz_residual(c, d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            emit_vec(emit, with(prefix, {i, j}),
                     Vec(all.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n),
                         all.begin() + static_cast<std::ptrdiff_t>((i * n + j + 1) * n)));
}

void require_same_dim(const ASIBialgebra& b) {
    if (b.alg.dim() != b.coalg.dim()) throw ShapeError("algebra and coalgebra dimensions differ");
}

/// Product of the double, assembled without validation.
StructTensor double_product(const ASIBialgebra& b) {
    return matched_product(b.alg.mult, b.coalg.comult, double_actions(b));
}

bool is_endomorphism(const StructTensor& c, const LinearOp& f) {
    std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (f * basis_product(c, i, j) != bilinear(c, f.column(i), f.column(j))) return false;
    return true;
}

}  // namespace

Coalgebra::Coalgebra(Cube d) : comult(std::move(d)) {
    if (!comult.cubic()) throw ShapeError("coproduct tensor must be n x n x n");
}

Coalgebra Coalgebra::zero(std::size_t n) { return Coalgebra(Cube(n)); }

Element2 coproduct(const Cube& d, const Vec& a) {
    std::size_t n = d.size();
    if (a.size() != n) throw ShapeError("vector length does not match coalgebra dimension");
    Element2 out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(a[k]) == 0) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (sgn(d(i, j, k)) != 0) out(i, j) += a[k] * d(i, j, k);
    }
    return out;
}

Element2 coproduct(const Cube& d, std::size_t k) { return d.slice3(k); }

Element3 coproduct_left(const Cube& d, const Element2& x) {
    std::size_t n = d.size();
    Element3 out(n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (sgn(x(p, q)) == 0) continue;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (sgn(d(i, j, p)) != 0) out(i, j, q) += x(p, q) * d(i, j, p);
        }
    return out;
}

Element3 coproduct_right(const Cube& d, const Element2& x) {
    std::size_t n = d.size();
    Element3 out(n);
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (sgn(x(p, q)) == 0) continue;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (sgn(d(i, j, q)) != 0) out(p, i, j) += x(p, q) * d(i, j, q);
        }
    return out;
}

BilForm pairing_form(std::size_t n) {
    Matrix b(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        b(i, n + i) = 1;
        b(n + i, i) = 1;
    }
    return BilForm{b};
}

void add_coassociativity(CheckReport& rep, const Cube& d, const std::string& name) {
    rep.law(name);
    for (std::size_t k = 0; k < d.size(); ++k) {
        Element2 dk = coproduct(d, k);
        rep.add(name, {k}, coproduct_left(d, dk) - coproduct_right(d, dk));
    }
}

void add_cocommutativity(CheckReport& rep, const Cube& d, const std::string& name) {
    rep.law(name);
    for (std::size_t k = 0; k < d.size(); ++k) {
        Element2 dk = coproduct(d, k);
        rep.add(name, {k}, dk - flip_sigma(dk));
    }
}

void add_coderivation(CheckReport& rep, const Cube& d, const LinearOp& e, const std::string& name,
                      std::vector<std::size_t> prefix) {
    emit_coderivation(d, e, prefix, into(rep, name));
}

CheckReport check_coalgebra(const Coalgebra& c, bool cocommutative) {
    CheckReport rep;
    add_coassociativity(rep, c.comult, "coassociativity");
    if (cocommutative) add_cocommutativity(rep, c.comult, "cocommutativity");
    return rep;
}

CheckReport check_coderivation(const Coalgebra& c, const LinearOp& e) {
    CheckReport rep;
    add_coderivation(rep, c.comult, e, "coderivation");
    return rep;
}

CheckReport check_asi(const ASIBialgebra& b) {
    require_same_dim(b);
    CheckReport rep;
    add_associativity(rep, b.alg.mult, "associativity");
    add_coassociativity(rep, b.coalg.comult, "coassociativity");
    rep.law("asi_compat");
    rep.law("asi_symmetry");
    std::size_t n = b.dim();
    const auto& c = b.alg.mult;
    const auto& d = b.coalg.comult;
    Matrix id = Matrix::identity(n);
    std::vector<Matrix> L, R;
    std::vector<Element2> D;
    for (std::size_t i = 0; i < n; ++i) {
        L.push_back(left_mult(c, i));
        R.push_back(right_mult(c, i));
        D.push_back(coproduct(d, i));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element2 compat = coproduct(d, basis_product(c, i, j)) - apply2(R[j], id, D[i]) - apply2(id, L[i], D[j]);
            rep.add("asi_compat", {i, j}, compat);
            Element2 lhs = apply2(L[i], id, D[j]) - apply2(id, R[i], D[j]);
            Element2 rhs = apply2(id, R[j], D[i]) - apply2(L[j], id, D[i]);
            rep.add("asi_symmetry", {i, j}, lhs - flip_sigma(rhs));
        }
    return rep;
}

void add_admissibility(CheckReport& rep, const ASIBialgebra& b, const LinearOp& d, const LinearOp& cd,
                       std::vector<std::size_t> prefix) {
    emit_qadm1(b.alg.mult, d, cd, prefix, into(rep, "qadm1"));
    emit_qadm2(b.alg.mult, d, cd, prefix, into(rep, "qadm2"));
    emit_psadm1(b.coalg.comult, d, cd, prefix, into(rep, "psadm1"));
    emit_psadm2(b.coalg.comult, d, cd, prefix, into(rep, "psadm2"));
}

CheckReport check_diff_asi(const DiffASIBialgebra& db) {
    if (db.phi.size() != db.psi.size()) throw ShapeError("derivation and coderivation families differ in size");
    CheckReport rep = check_asi(db.bialg);
    rep.law("leibniz");
    rep.law("coderivation");
    for (std::size_t k = 0; k < db.phi.size(); ++k) {
        add_leibniz(rep, db.bialg.alg.mult, db.phi[k], "leibniz", {k});
        add_coderivation(rep, db.bialg.coalg.comult, db.psi[k], "coderivation", {k});
    }
    add_family_commutes(rep, db.phi, "derivations_commute");
    add_family_commutes(rep, db.psi, "coderivations_commute");
    rep.law("qadm1");
    rep.law("qadm2");
    rep.law("psadm1");
    rep.law("psadm2");
    for (std::size_t k = 0; k < db.phi.size(); ++k) add_admissibility(rep, db.bialg, db.phi[k], db.psi[k], {k});
    return rep;
}

DiffASIBialgebra dualize(const DiffASIBialgebra& db) {
    DiffASIBialgebra out;
    out.bialg.alg = Algebra(db.bialg.coalg.comult);
    out.bialg.coalg = Coalgebra(Scalar(-1) * db.bialg.alg.mult);
    out.phi = transpose_family(db.psi);
    out.psi = transpose_family(db.phi);
    return out;
}

CheckReport check_frobenius(const Algebra& alg, const BilForm& form) {
    std::size_t n = alg.dim();
    if (form.b.rows() != n || form.b.cols() != n) throw ShapeError("form must be square of algebra dimension");
    CheckReport rep;
    rep.law("symmetry");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) rep.add("symmetry", {i, j}, form.b(i, j) - form.b(j, i));
    rep.law("nondegeneracy");
    for (const auto& v : nullspace(form.b)) rep.add("nondegeneracy", {}, v);
    rep.law("invariance");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec ij = basis_product(alg.mult, i, j);
            for (std::size_t k = 0; k < n; ++k) {
                Vec jk = basis_product(alg.mult, j, k);
                Scalar lhs = 0, rhs = 0;
                for (std::size_t p = 0; p < n; ++p) {
                    lhs += ij[p] * form.b(p, k);
                    rhs += form.b(i, p) * jk[p];
                }
                rep.add("invariance", {i, j, k}, lhs - rhs);
            }
        }
    return rep;
}

std::vector<LinearOp> adjoint_family(const BilForm& form, const std::vector<LinearOp>& phi) {
    auto inv = inverse(form.b);
    if (!inv) {
        CheckReport rep;
        for (const auto& v : nullspace(form.b)) rep.add("nondegeneracy", {}, v);
        throw Refused("adjoint requires a nondegenerate form", rep);
    }
    std::vector<LinearOp> out;
    for (const auto& d : phi) out.push_back(*inv * transpose(d) * form.b);
    return out;
}

MatchedActions double_actions(const ASIBialgebra& b) {
    require_same_dim(b);
    MatchedActions act;
    const auto& c = b.alg.mult;
    const auto& d = b.coalg.comult;
    for (std::size_t i = 0; i < b.dim(); ++i) {
        act.l_a.push_back(transpose(right_mult(c, i)));
        act.r_a.push_back(transpose(left_mult(c, i)));
        act.l_b.push_back(transpose(right_mult(d, i)));
        act.r_b.push_back(transpose(left_mult(d, i)));
    }
    return act;
}

MatchedPairResult double_matched_pair(const DiffASIBialgebra& db) {
    DiffAlgebra a{db.bialg.alg, db.phi};
    DiffAlgebra b{Algebra(db.bialg.coalg.comult), transpose_family(db.psi)};
    return matched_pair_assemble(a, b, double_actions(db.bialg));
}

DoubleResult double_construction(const DiffASIBialgebra& db) {
    if (db.phi.size() != db.psi.size()) throw ShapeError("derivation and coderivation families differ in size");
    DoubleResult out;
    out.algebra.base = Algebra(double_product(db.bialg));
    for (std::size_t k = 0; k < db.phi.size(); ++k) out.algebra.phi.push_back(direct_sum(db.phi[k], transpose(db.psi[k])));
    out.form = pairing_form(db.dim());
    out.report.merge(check_diff_algebra(out.algebra), "double");
    out.report.merge(check_frobenius(out.algebra.base, out.form), "frobenius");
    return out;
}

CheckReport check_coherent_derivation(const ASIBialgebra& b, const CoherentPair& p) {
    require_same_dim(b);
    CheckReport rep;
    emit_leibniz(b.alg.mult, p.d, {}, into(rep, "leibniz"));
    emit_coderivation(b.coalg.comult, p.cd, {}, into(rep, "coderivation"));
    add_admissibility(rep, b, p.d, p.cd);
    bool direct = rep.pass();
    bool doubled = is_zero(leibniz_residual(double_product(b), direct_sum(p.d, transpose(p.cd))));
    rep.law("double_agreement");
    if (direct != doubled) rep.fail("double_agreement", "d + cd* as a derivation of the double disagrees with the direct laws");
    return rep;
}

std::vector<CoherentPair> coherent_derivation_space(const ASIBialgebra& b) {
    require_same_dim(b);
    std::size_t n = b.dim();
    auto residual = [&](const Vec& v) {
        LinearOp d = unflatten(v, n, n, 0);
        LinearOp cd = unflatten(v, n, n, n * n);
        Vec out;
        Emit sink = append_to(out);
        emit_leibniz(b.alg.mult, d, {}, sink);
        emit_coderivation(b.coalg.comult, cd, {}, sink);
        emit_qadm1(b.alg.mult, d, cd, {}, sink);
        emit_qadm2(b.alg.mult, d, cd, {}, sink);
        emit_psadm1(b.coalg.comult, d, cd, {}, sink);
        emit_psadm2(b.coalg.comult, d, cd, {}, sink);
        return out;
    };
    std::vector<CoherentPair> out;
    for (const auto& v : linear_solution_space(2 * n * n, residual))
        out.push_back(CoherentPair{unflatten(v, n, n, 0), unflatten(v, n, n, n * n)});
    return out;
}

CoherentPair coherent_bracket(const CoherentPair& p1, const CoherentPair& p2) {
    if (p1.d.rows() != p2.d.rows() || p1.cd.rows() != p2.cd.rows()) throw ShapeError("coherent pairs differ in dimension");
    return CoherentPair{p2.d * p1.d - p1.d * p2.d, p1.cd * p2.cd - p2.cd * p1.cd};
}

Vec flatten_pair(const CoherentPair& p) {
    Vec out = p.d.data();
    out.insert(out.end(), p.cd.data().begin(), p.cd.data().end());
    return out;
}

CheckReport check_coherent_endomorphism(const ASIBialgebra& b, const LinearOp& phi, const LinearOp& psi,
                                        bool automorphism) {
    require_same_dim(b);
    std::size_t n = b.dim();
    if (phi.rows() != n || phi.cols() != n || psi.rows() != n || psi.cols() != n) throw ShapeError("maps must be square of bialgebra dimension");
    const auto& c = b.alg.mult;
    const auto& d = b.coalg.comult;
    Matrix id = Matrix::identity(n);
    CheckReport rep;
    for (const char* name : {"algebra_endomorphism", "coalgebra_endomorphism", "coendo1", "coendo2", "coendo3", "coendo4"})
        rep.law(name);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec ei = unit_vec(n, i), ej = unit_vec(n, j);
            rep.add("algebra_endomorphism", {i, j}, phi * basis_product(c, i, j) - bilinear(c, phi.column(i), phi.column(j)));
            rep.add("coendo1", {i, j}, psi * bilinear(c, phi.column(i), ej) - bilinear(c, ei, psi.column(j)));
            rep.add("coendo2", {i, j}, psi * bilinear(c, ei, phi.column(j)) - bilinear(c, psi.column(i), ej));
        }
    for (std::size_t k = 0; k < n; ++k) {
        Element2 dk = coproduct(d, k);
        Element2 dphi = coproduct(d, phi.column(k));
        rep.add("coalgebra_endomorphism", {k}, apply2(psi, psi, dk) - coproduct(d, psi.column(k)));
        rep.add("coendo3", {k}, apply2(id, phi, dk) - apply2(psi, id, dphi));
        rep.add("coendo4", {k}, apply2(phi, id, dk) - apply2(id, psi, dphi));
    }
    if (automorphism) {
        rep.law("invertible");
        for (const auto& v : nullspace(phi)) rep.add("invertible", {0}, v);
        for (const auto& v : nullspace(psi)) rep.add("invertible", {1}, v);
    }
    bool direct = true;
    for (const auto& l : rep.laws())
        if (l.name != "invertible" && !l.pass()) direct = false;
    bool doubled = is_endomorphism(double_product(b), direct_sum(phi, transpose(psi)));
    rep.law("double_agreement");
    if (direct != doubled) rep.fail("double_agreement", "phi + psi* as an endomorphism of the double disagrees with the direct laws");
    return rep;
}

LinearOp canonical_derivation(const ASIBialgebra& b) {
    require_same_dim(b);
    std::size_t n = b.dim();
    LinearOp out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        Vec img = zero_vec(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (sgn(b.coalg.comult(i, j, k)) != 0)
                    img += b.coalg.comult(i, j, k) * basis_product(b.alg.mult, j, i);
        for (std::size_t p = 0; p < n; ++p) out(p, k) = img[p];
    }
    return out;
}

}  // namespace forge
