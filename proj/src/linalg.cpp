#include "forge/linalg.hpp"

#include <algorithm>

namespace forge {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows.front().size() : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ShapeError("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw ShapeError("column length mismatch");
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::column(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Matrix::row(std::size_t i) const {
    return Vec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

bool Matrix::is_zero() const { return forge::is_zero(data_); }

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    out += b;
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    out -= b;
    return out;
}

Matrix operator-(const Matrix& a) { return Scalar(-1) * a; }

Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = s * a(i, j);
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ShapeError("matrix product shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Scalar& x = a(i, l);
            if (sgn(x) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (sgn(b(l, j)) != 0) out(i, j) += x * b(l, j);
        }
    return out;
}

Vec operator*(const Matrix& a, const Vec& v) {
    if (a.cols() != v.size()) throw ShapeError("matrix-vector shape mismatch");
    Vec out(a.rows(), Scalar(0));
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (sgn(v[j]) == 0) continue;
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (sgn(a(i, j)) != 0) out[i] += a(i, j) * v[j];
    }
    return out;
}

Matrix transpose(const Matrix& f) {
    Matrix out(f.cols(), f.rows());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) out(j, i) = f(i, j);
    return out;
}

Matrix compose(const Matrix& f, const Matrix& g) { return f * g; }

Matrix commutator(const Matrix& f, const Matrix& g) {
    if (!f.square() || !g.square() || f.rows() != g.rows()) throw ShapeError("commutator needs equal square maps");
    return f * g - g * f;
}

Matrix direct_sum(const Matrix& f, const Matrix& g) {
    Matrix out(f.rows() + g.rows(), f.cols() + g.cols());
    for (std::size_t i = 0; i < f.rows(); ++i)
        for (std::size_t j = 0; j < f.cols(); ++j) out(i, j) = f(i, j);
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) out(f.rows() + i, f.cols() + j) = g(i, j);
    return out;
}

Echelon rref(Matrix m) {
    Echelon e;
    std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && sgn(m(p, c)) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = 1 / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            Scalar f = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
        }
        e.pivots.push_back(c);
        ++r;
    }
    e.reduced = std::move(m);
    return e;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vec> span_basis(const std::vector<Vec>& vs) {
    if (vs.empty()) return {};
    std::size_t n = vs.front().size();
    Matrix stacked(vs.size(), n);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i].size() != n) throw ShapeError("vector length mismatch");
        for (std::size_t j = 0; j < n; ++j) stacked(i, j) = vs[i][j];
    }
    Echelon e = rref(stacked);
    std::vector<Vec> out;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) out.push_back(e.reduced.row(i));
    return out;
}

std::vector<Vec> nullspace(const Matrix& m) {
    Echelon e = rref(m);
    std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vec> raw;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols, Scalar(0));
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
        raw.push_back(std::move(v));
    }
    return span_basis(raw);
}

bool in_span(const std::vector<Vec>& basis, const Vec& v) {
    if (is_zero(v)) return true;
    std::vector<Vec> all = basis;
    all.push_back(v);
    return span_basis(all).size() == span_basis(basis).size();
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.square()) throw ShapeError("inverse of non-square matrix");
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    Echelon e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

std::vector<Vec> linear_solution_space(std::size_t unknowns, const std::function<Vec(const Vec&)>& residual) {
    std::vector<Vec> cols;
    cols.reserve(unknowns);
    for (std::size_t u = 0; u < unknowns; ++u) cols.push_back(residual(unit_vec(unknowns, u)));
    std::size_t eqs = cols.empty() ? 0 : cols.front().size();
    Matrix system = Matrix::from_columns(eqs, cols);
    if (eqs == 0) {
        std::vector<Vec> all;
        for (std::size_t u = 0; u < unknowns; ++u) all.push_back(unit_vec(unknowns, u));
        return all;
    }
    return nullspace(system);
}

Matrix unflatten(const Vec& v, std::size_t rows, std::size_t cols, std::size_t offset) {
    if (offset + rows * cols > v.size()) throw ShapeError("unflatten out of range");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[offset + i * cols + j];
    return m;
}

}  // namespace forge
