#pragma once

/**
 * @file linalg.hpp
 * @brief Dense exact matrices and linear solvers over Q.
 *
 * A Matrix doubles as a linear map: column j holds the image of e_j.
 */

#include "forge/scalar.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace forge {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Scalar(0)) {}

    static Matrix identity(std::size_t n);
    /// Row-major construction from nested lists, mainly for fixtures.
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
    /// Matrix whose j-th column is cols[j].
    static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec column(std::size_t j) const;
    Vec row(std::size_t i) const;
    /// Row-major flattening.
    const Vec& data() const { return data_; }

    bool is_zero() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);

private:
    std::size_t rows_ = 0, cols_ = 0;
    Vec data_;
};

using LinearOp = Matrix;

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Scalar& s, const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Vec operator*(const Matrix& a, const Vec& v);

Matrix transpose(const Matrix& f);
/// f after g.
Matrix compose(const Matrix& f, const Matrix& g);
/// fg - gf.
Matrix commutator(const Matrix& f, const Matrix& g);
/// Block diagonal sum f (+) g.
Matrix direct_sum(const Matrix& f, const Matrix& g);

struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form.
Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/**
 * Basis of {v : Mv = 0}.
 *
 * The basis is in reduced column-echelon form: vectors are ordered by their
 * leading index, each leading entry is 1 and every other basis vector is 0
 * there.
 */
std::vector<Vec> nullspace(const Matrix& m);

/// Canonical reduced basis of span(vs), same ordering as nullspace.
std::vector<Vec> span_basis(const std::vector<Vec>& vs);
bool in_span(const std::vector<Vec>& basis, const Vec& v);

std::optional<Matrix> inverse(const Matrix& m);

/**
 * Solution space of a homogeneous linear law in `unknowns` variables.
 *
 * `residual` must be linear in its argument. The coefficient matrix is
 * assembled column by column from unit inputs.
 */
std::vector<Vec> linear_solution_space(std::size_t unknowns, const std::function<Vec(const Vec&)>& residual);

/// Unflatten a row-major n x m block of v starting at offset.
Matrix unflatten(const Vec& v, std::size_t rows, std::size_t cols, std::size_t offset = 0);

}  // namespace forge
