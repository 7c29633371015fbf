#pragma once

/**
 * @file tensor.hpp
 * @brief Order-2 and order-3 coefficient tensors and tensor-product maps.
 *
 * Element2 x stands for sum x(i,j) e_i (x) f_j and is stored as a Matrix.
 * Element3 t stands for sum t(i,j,k) e_i (x) e_j (x) e_k.
 * A StructTensor c encodes e_i o e_j = sum_k c(i,j,k) e_k.
 * A coproduct tensor d encodes D(e_k) = sum d(i,j,k) e_i (x) e_j.
 */

#include "forge/linalg.hpp"

namespace forge {

class Cube {
public:
    Cube() = default;
    explicit Cube(std::size_t n) : Cube(n, n, n) {}
    Cube(std::size_t n0, std::size_t n1, std::size_t n2) : n0_(n0), n1_(n1), n2_(n2), data_(n0 * n1 * n2, Scalar(0)) {}

    std::size_t dim(int axis) const { return axis == 0 ? n0_ : axis == 1 ? n1_ : n2_; }
    /// Edge length of a cubic tensor.
    std::size_t size() const { return n0_; }
    bool cubic() const { return n0_ == n1_ && n1_ == n2_; }

    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * n1_ + j) * n2_ + k]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const { return data_[(i * n1_ + j) * n2_ + k]; }

    const Vec& data() const { return data_; }
    bool is_zero() const { return forge::is_zero(data_); }
    bool operator==(const Cube& o) const;
    bool operator!=(const Cube& o) const { return !(*this == o); }

    Cube& operator+=(const Cube& o);
    Cube& operator-=(const Cube& o);

    /// Slice t(.,.,k) as an n0 x n1 matrix.
    Matrix slice3(std::size_t k) const;
    void set_slice3(std::size_t k, const Matrix& m);

private:
    std::size_t n0_ = 0, n1_ = 0, n2_ = 0;
    Vec data_;
};

using Element2 = Matrix;
using Element3 = Cube;
using StructTensor = Cube;

Cube operator+(const Cube& a, const Cube& b);
Cube operator-(const Cube& a, const Cube& b);
Cube operator*(const Scalar& s, const Cube& a);

/// sigma(a (x) b) = b (x) a.
Element2 flip_sigma(const Element2& x);
/// tau(a (x) b (x) c) = c (x) a (x) b.
Element3 cyclic_tau(const Element3& x);
/// sigma (x) id on the first two legs.
Element3 flip12(const Element3& x);

/// (f (x) g)(x).
Element2 apply2(const Matrix& f, const Matrix& g, const Element2& x);
/// (f (x) g (x) h)(x).
Element3 apply3(const Matrix& f, const Matrix& g, const Matrix& h, const Element3& x);

/// a (x) b for vectors.
Element2 outer(const Vec& a, const Vec& b);

}  // namespace forge
