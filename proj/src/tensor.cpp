#include "forge/tensor.hpp"

namespace forge {

bool Cube::operator==(const Cube& o) const {
    return n0_ == o.n0_ && n1_ == o.n1_ && n2_ == o.n2_ && data_ == o.data_;
}

Cube& Cube::operator+=(const Cube& o) {
    if (n0_ != o.n0_ || n1_ != o.n1_ || n2_ != o.n2_) throw ShapeError("tensor shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Cube& Cube::operator-=(const Cube& o) {
    if (n0_ != o.n0_ || n1_ != o.n1_ || n2_ != o.n2_) throw ShapeError("tensor shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix Cube::slice3(std::size_t k) const {
    Matrix m(n0_, n1_);
    for (std::size_t i = 0; i < n0_; ++i)
        for (std::size_t j = 0; j < n1_; ++j) m(i, j) = (*this)(i, j, k);
    return m;
}

void Cube::set_slice3(std::size_t k, const Matrix& m) {
    if (m.rows() != n0_ || m.cols() != n1_) throw ShapeError("slice shape mismatch");
    for (std::size_t i = 0; i < n0_; ++i)
        for (std::size_t j = 0; j < n1_; ++j) (*this)(i, j, k) = m(i, j);
}

Cube operator+(const Cube& a, const Cube& b) {
    Cube out = a;
    out += b;
    return out;
}

Cube operator-(const Cube& a, const Cube& b) {
    Cube out = a;
    out -= b;
    return out;
}

Cube operator*(const Scalar& s, const Cube& a) {
    Cube out(a.dim(0), a.dim(1), a.dim(2));
    for (std::size_t i = 0; i < a.dim(0); ++i)
        for (std::size_t j = 0; j < a.dim(1); ++j)
            for (std::size_t k = 0; k < a.dim(2); ++k) out(i, j, k) = s * a(i, j, k);
    return out;
}

Element2 flip_sigma(const Element2& x) {
    if (!x.square()) throw ShapeError("flip of a non-square element");
    return transpose(x);
}

Element3 cyclic_tau(const Element3& x) {
    Element3 out(x.dim(2), x.dim(0), x.dim(1));
    for (std::size_t i = 0; i < x.dim(0); ++i)
        for (std::size_t j = 0; j < x.dim(1); ++j)
            for (std::size_t k = 0; k < x.dim(2); ++k) out(k, i, j) = x(i, j, k);
    return out;
}

Element3 flip12(const Element3& x) {
    Element3 out(x.dim(1), x.dim(0), x.dim(2));
    for (std::size_t i = 0; i < x.dim(0); ++i)
        for (std::size_t j = 0; j < x.dim(1); ++j)
            for (std::size_t k = 0; k < x.dim(2); ++k) out(j, i, k) = x(i, j, k);
    return out;
}

Element2 apply2(const Matrix& f, const Matrix& g, const Element2& x) {
    return f * x * transpose(g);
}

Element3 apply3(const Matrix& f, const Matrix& g, const Matrix& h, const Element3& x) {
    if (f.cols() != x.dim(0) || g.cols() != x.dim(1) || h.cols() != x.dim(2))
        throw ShapeError("tensor map shape mismatch");
    // Contract one leg at a time.
    Element3 a(f.rows(), x.dim(1), x.dim(2));
    for (std::size_t p = 0; p < x.dim(0); ++p)
        for (std::size_t j = 0; j < x.dim(1); ++j)
            for (std::size_t k = 0; k < x.dim(2); ++k) {
                const Scalar& v = x(p, j, k);
                if (sgn(v) == 0) continue;
                for (std::size_t i = 0; i < f.rows(); ++i)
                    if (sgn(f(i, p)) != 0) a(i, j, k) += f(i, p) * v;
            }
    Element3 b(f.rows(), g.rows(), x.dim(2));
    for (std::size_t i = 0; i < a.dim(0); ++i)
        for (std::size_t q = 0; q < a.dim(1); ++q)
            for (std::size_t k = 0; k < a.dim(2); ++k) {
                const Scalar& v = a(i, q, k);
                if (sgn(v) == 0) continue;
                for (std::size_t j = 0; j < g.rows(); ++j)
                    if (sgn(g(j, q)) != 0) b(i, j, k) += g(j, q) * v;
            }
    Element3 c(f.rows(), g.rows(), h.rows());
    for (std::size_t i = 0; i < b.dim(0); ++i)
        for (std::size_t j = 0; j < b.dim(1); ++j)
            for (std::size_t s = 0; s < b.dim(2); ++s) {
                const Scalar& v = b(i, j, s);
                if (sgn(v) == 0) continue;
                for (std::size_t k = 0; k < h.rows(); ++k)
                    if (sgn(h(k, s)) != 0) c(i, j, k) += h(k, s) * v;
            }
    return c;
}

Element2 outer(const Vec& a, const Vec& b) {
    Element2 m(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * b[j];
    return m;
}

}  // namespace forge
