#include "forge/algebra.hpp"

namespace forge {

Algebra::Algebra(StructTensor m) : mult(std::move(m)) {
    if (!mult.cubic()) throw ShapeError("structure tensor must be n x n x n");
}

Algebra Algebra::zero(std::size_t n) { return Algebra(StructTensor(n)); }

Vec bilinear(const StructTensor& c, const Vec& a, const Vec& b) {
    std::size_t n = c.size();
    if (a.size() != n || b.size() != n) throw ShapeError("vector length does not match algebra dimension");
    Vec out(n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(b[j]) == 0) continue;
            Scalar w = a[i] * b[j];
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(c(i, j, k)) != 0) out[k] += w * c(i, j, k);
        }
    }
    return out;
}

Vec basis_product(const StructTensor& c, std::size_t i, std::size_t j) {
    Vec out(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) out[k] = c(i, j, k);
    return out;
}

Matrix left_mult(const StructTensor& c, const Vec& a) {
    std::size_t n = c.size();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(k, j) += a[i] * c(i, j, k);
    }
    return m;
}

Matrix right_mult(const StructTensor& c, const Vec& a) {
    std::size_t n = c.size();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(k, j) += a[i] * c(j, i, k);
    }
    return m;
}

Matrix left_mult(const StructTensor& c, std::size_t i) { return left_mult(c, unit_vec(c.size(), i)); }
Matrix right_mult(const StructTensor& c, std::size_t i) { return right_mult(c, unit_vec(c.size(), i)); }

StructTensor opposite(const StructTensor& c) {
    StructTensor out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
            for (std::size_t k = 0; k < c.size(); ++k) out(i, j, k) = c(j, i, k);
    return out;
}

Vec multiply(const Algebra& alg, const Vec& a, const Vec& b) { return bilinear(alg.mult, a, b); }

SparseTable::SparseTable(const StructTensor& c) : n(c.size()), rows(c.size() * c.size()) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(c(i, j, k)) != 0) rows[i * n + j].emplace_back(k, c(i, j, k));
}

void add_left_nested(Vec& out, const SparseTable& a, const SparseTable& b, std::size_t i, std::size_t j, std::size_t k,
                     int sign) {
    for (const auto& [s, x] : a.at(i, j))
        for (const auto& [m, y] : b.at(s, k)) out[m] += sign * x * y;
}

void add_right_nested(Vec& out, const SparseTable& a, const SparseTable& b, std::size_t i, std::size_t j, std::size_t k,
                      int sign) {
    for (const auto& [s, x] : a.at(j, k))
        for (const auto& [m, y] : b.at(i, s)) out[m] += sign * x * y;
}

void add_associativity(CheckReport& rep, const StructTensor& c, const std::string& name) {
    std::size_t n = c.size();
    rep.law(name);
    SparseTable t(c);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec res = zero_vec(n);
                add_left_nested(res, t, t, i, j, k, 1);
                add_right_nested(res, t, t, i, j, k, -1);
                rep.add(name, {i, j, k}, res);
            }
}

void add_commutativity(CheckReport& rep, const StructTensor& c, const std::string& name) {
    std::size_t n = c.size();
    rep.law(name);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) rep.add(name, {i, j}, basis_product(c, i, j) - basis_product(c, j, i));
}

CheckReport check_law(const Algebra& alg, Law law) {
    CheckReport rep;
    if (law == Law::associative)
        add_associativity(rep, alg.mult, "associativity");
    else
        add_commutativity(rep, alg.mult, "commutativity");
    return rep;
}

Vec leibniz_residual(const StructTensor& c, const LinearOp& d) {
    std::size_t n = c.size();
    if (d.rows() != n || d.cols() != n) throw ShapeError("derivation must be square of algebra dimension");
    Vec out;
    out.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec r = d * basis_product(c, i, j) - bilinear(c, d.column(i), unit_vec(n, j)) -
                    bilinear(c, unit_vec(n, i), d.column(j));
            out.insert(out.end(), r.begin(), r.end());
        }
    return out;
}

void add_leibniz(CheckReport& rep, const StructTensor& c, const LinearOp& d, const std::string& name,
                 std::vector<std::size_t> prefix) {
    std::size_t n = c.size();
    Vec all = leibniz_residual(c, d);
    rep.law(name);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec r(all.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n),
                  all.begin() + static_cast<std::ptrdiff_t>((i * n + j + 1) * n));
            auto at = prefix;
            at.push_back(i);
            at.push_back(j);
            rep.add(name, at, r);
        }
}

void add_family_commutes(CheckReport& rep, const std::vector<LinearOp>& family, const std::string& name) {
    rep.law(name);
    for (std::size_t k = 0; k < family.size(); ++k)
        for (std::size_t l = k + 1; l < family.size(); ++l) rep.add(name, {k, l}, commutator(family[k], family[l]));
}

CheckReport check_derivation(const Algebra& alg, const LinearOp& d) {
    CheckReport rep;
    add_leibniz(rep, alg.mult, d, "leibniz");
    return rep;
}

std::vector<LinearOp> derivation_space(const Algebra& alg) {
    std::size_t n = alg.dim();
    auto basis = linear_solution_space(n * n, [&](const Vec& v) { return leibniz_residual(alg.mult, unflatten(v, n, n)); });
    std::vector<LinearOp> out;
    for (const auto& v : basis) out.push_back(unflatten(v, n, n));
    return out;
}

CheckReport check_diff_algebra(const DiffAlgebra& da, bool commutative) {
    CheckReport rep;
    add_associativity(rep, da.base.mult, "associativity");
    if (commutative) add_commutativity(rep, da.base.mult, "commutativity");
    rep.law("leibniz");
    for (std::size_t k = 0; k < da.phi.size(); ++k) add_leibniz(rep, da.base.mult, da.phi[k], "leibniz", {k});
    add_family_commutes(rep, da.phi, "derivations_commute");
    return rep;
}

std::vector<LinearOp> transpose_family(const std::vector<LinearOp>& family) {
    std::vector<LinearOp> out;
    for (const auto& f : family) out.push_back(transpose(f));
    return out;
}

std::vector<LinearOp> negate_family(const std::vector<LinearOp>& family) {
    std::vector<LinearOp> out;
    for (const auto& f : family) out.push_back(-f);
    return out;
}

}  // namespace forge
