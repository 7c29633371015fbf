#pragma once

/**
 * @file algebra.hpp
 * @brief Algebras and differential algebras given by structure constants.
 *
 * Laws are verified on basis tuples; bilinearity extends them to the whole
 * space. Every checker reports all violating tuples.
 */

#include "forge/report.hpp"

namespace forge {

struct Algebra {
    Algebra() = default;
    explicit Algebra(StructTensor m);
    static Algebra zero(std::size_t n);

    std::size_t dim() const { return mult.size(); }

    StructTensor mult;
};

/// An algebra with an ordered family of (declared) derivations.
struct DiffAlgebra {
    Algebra base;
    std::vector<LinearOp> phi;

    std::size_t dim() const { return base.dim(); }
};

/// Bilinear product of arbitrary vectors under structure constants c.
Vec bilinear(const StructTensor& c, const Vec& a, const Vec& b);
/// e_i o e_j as a vector.
Vec basis_product(const StructTensor& c, std::size_t i, std::size_t j);
/// Matrix of x |-> a o x.
Matrix left_mult(const StructTensor& c, const Vec& a);
/// Matrix of x |-> x o a.
Matrix right_mult(const StructTensor& c, const Vec& a);
Matrix left_mult(const StructTensor& c, std::size_t i);
Matrix right_mult(const StructTensor& c, std::size_t i);

/// Nonzero coefficients of every basis product, indexed by i * n + j.
struct SparseTable {
    std::size_t n = 0;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;

    explicit SparseTable(const StructTensor& c);
    const std::vector<std::pair<std::size_t, Scalar>>& at(std::size_t i, std::size_t j) const { return rows[i * n + j]; }
};

/// out += sign * (e_i A e_j) B e_k.
void add_left_nested(Vec& out, const SparseTable& a, const SparseTable& b, std::size_t i, std::size_t j, std::size_t k,
                     int sign);
/// out += sign * e_i B (e_j A e_k).
void add_right_nested(Vec& out, const SparseTable& a, const SparseTable& b, std::size_t i, std::size_t j, std::size_t k,
                      int sign);

/// Opposite product: a o' b = b o a.
StructTensor opposite(const StructTensor& c);

Vec multiply(const Algebra& alg, const Vec& a, const Vec& b);

enum class Law { associative, commutative };

CheckReport check_law(const Algebra& alg, Law law);
/// Associativity residual law on a raw product tensor, recorded under `name`.
void add_associativity(CheckReport& rep, const StructTensor& c, const std::string& name);
void add_commutativity(CheckReport& rep, const StructTensor& c, const std::string& name);

/// Leibniz law D(ab) = D(a)b + aD(b) on every basis pair.
CheckReport check_derivation(const Algebra& alg, const LinearOp& d);
/// Leibniz residual for a raw product tensor, recorded under `name` with the family index prefix.
void add_leibniz(CheckReport& rep, const StructTensor& c, const LinearOp& d, const std::string& name,
                 std::vector<std::size_t> prefix = {});
/// Pairwise commutation of a family.
void add_family_commutes(CheckReport& rep, const std::vector<LinearOp>& family, const std::string& name);

/// Leibniz residual of D, flattened over basis pairs (i, j).
Vec leibniz_residual(const StructTensor& c, const LinearOp& d);

/// Basis of all derivations, ordered by the nullspace convention on row-major entries.
std::vector<LinearOp> derivation_space(const Algebra& alg);

CheckReport check_diff_algebra(const DiffAlgebra& da, bool commutative = false);

/// {s * id} family helpers.
std::vector<LinearOp> transpose_family(const std::vector<LinearOp>& family);
std::vector<LinearOp> negate_family(const std::vector<LinearOp>& family);

}  // namespace forge
