#pragma once

// Literal fixtures shared by the test suites. Basis order in dimension six is
// e1, e2, e3, e1*, e2*, e3*.

#include "forge/document.hpp"

#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace fx {

using namespace forge;

using Entries3 = std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>>;
using Entries2 = std::vector<std::tuple<std::size_t, std::size_t, Scalar>>;

inline Cube cube(std::size_t n, const Entries3& es) {
    Cube c(n);
    for (const auto& [i, j, k, v] : es) c(i, j, k) = v;
    return c;
}

inline Matrix mat(std::size_t rows, std::size_t cols, const Entries2& es) {
    Matrix m(rows, cols);
    for (const auto& [i, j, v] : es) m(i, j) = v;
    return m;
}

inline Matrix mat(std::size_t n, const Entries2& es) { return mat(n, n, es); }

/// Zinbiel product of the Z3 fixture: e1*e1 = e3, e2*e1 = e3, e2*e2 = e3.
inline StructTensor z3_star() { return cube(3, {{0, 0, 2, 1}, {1, 0, 2, 1}, {1, 1, 2, 1}}); }

/// d1: e1 -> e1, e2 -> e2, e3 -> 2e3.
inline LinearOp d1() { return mat(3, {{0, 0, 1}, {1, 1, 1}, {2, 2, 2}}); }
/// d2: e1 -> e2, e2 -> -e1 + e2, e3 -> e3.
inline LinearOp d2() { return mat(3, {{1, 0, 1}, {0, 1, -1}, {1, 1, 1}, {2, 2, 1}}); }

inline Zinbiel z3() { return Zinbiel{z3_star(), {d1(), d2()}}; }

/// e1e1 = e2e2 = 2e3, e1e2 = e2e1 = e3.
inline Algebra a3() { return Algebra(cube(3, {{0, 0, 2, 2}, {0, 1, 2, 1}, {1, 0, 2, 1}, {1, 1, 2, 2}})); }
inline DiffAlgebra a3_diff() { return DiffAlgebra{a3(), {d1(), d2()}}; }

/// Commutative product on A (+) A*: A3 plus e1 e3* = e1*, e2 e3* = e1* + e2*.
inline Algebra d6_algebra() {
    return Algebra(cube(6, {{0, 0, 2, 2}, {0, 1, 2, 1}, {1, 0, 2, 1}, {1, 1, 2, 2},
                            {0, 5, 3, 1}, {5, 0, 3, 1}, {1, 5, 3, 1}, {1, 5, 4, 1}, {5, 1, 3, 1}, {5, 1, 4, 1}}));
}

/// The printed coproduct, slice k = Delta(e_k).
inline Cube d6_comult() {
    return cube(6, {// Delta(e1) = -e3(x)e1* - e1*(x)e3 - e2*(x)e3 - e3(x)e2*
                    {2, 3, 0, -1}, {3, 2, 0, -1}, {4, 2, 0, -1}, {2, 4, 0, -1},
                    // Delta(e2) = -e3(x)e2* - e2*(x)e3
                    {2, 4, 1, -1}, {4, 2, 1, -1},
                    // Delta(e3*) = -2e1*e1* - 2e2*e2* - e2*e1* - e1*e2*
                    {3, 3, 5, -2}, {4, 4, 5, -2}, {4, 3, 5, -1}, {3, 4, 5, -1}});
}

/// d (+) (-d^T) and its negative.
inline LinearOp d6_phi(const LinearOp& d) { return direct_sum(d, -transpose(d)); }
inline LinearOp d6_psi(const LinearOp& d) { return direct_sum(-d, transpose(d)); }

inline DiffASIBialgebra d6() {
    return DiffASIBialgebra{ASIBialgebra{d6_algebra(), Coalgebra(d6_comult())},
                            {d6_phi(d1()), d6_phi(d2())},
                            {d6_psi(d1()), d6_psi(d2())}};
}

inline PoissonAlgebra p6_algebra() {
    StructTensor br = cube(6, {{0, 1, 2, -3}, {1, 0, 2, 3}, {0, 5, 3, 1}, {0, 5, 4, 2}, {5, 0, 3, -1}, {5, 0, 4, -2},
                               {1, 5, 3, -1}, {1, 5, 4, 1}, {5, 1, 3, 1}, {5, 1, 4, -1}});
    return PoissonAlgebra{br, d6_algebra().mult};
}

/// Cobracket of the 6-dim pipeline output; the e1*(x)e3 term of delta(e2) lies in A* (x) A.
inline Cube p6_cobracket() {
    return cube(6, {// delta(e1) = e3(x)e1* - e1*(x)e3 - e3(x)e2* + e2*(x)e3
                    {2, 3, 0, 1}, {3, 2, 0, -1}, {2, 4, 0, -1}, {4, 2, 0, 1},
                    // delta(e2) = 2e3(x)e1* - 2e1*(x)e3 + e3(x)e2* - e2*(x)e3
                    {2, 3, 1, 2}, {3, 2, 1, -2}, {2, 4, 1, 1}, {4, 2, 1, -1},
                    // delta(e3*) = 3e1*(x)e2* - 3e2*(x)e1*
                    {3, 4, 5, 3}, {4, 3, 5, -3}});
}

inline PoissonBialgebra p6() { return PoissonBialgebra{p6_algebra(), p6_cobracket(), d6_comult()}; }

inline std::string fixture(const std::string& name) { return std::string(FORGE_FIXTURES) + "/" + name; }

/// Small random integer matrix with entries in [-k, k].
inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int k = 2) {
    std::uniform_int_distribution<int> dist(-k, k);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
    return m;
}

/// Adds a nonzero integer to one random entry of a cube.
inline Cube mutate(std::mt19937& rng, Cube c) {
    std::uniform_int_distribution<std::size_t> pos(0, c.size() - 1);
    std::uniform_int_distribution<int> delta(1, 3);
    std::bernoulli_distribution sign;
    std::size_t i = pos(rng), j = pos(rng), k = pos(rng);
    c(i, j, k) += sign(rng) ? delta(rng) : -delta(rng);
    return c;
}

inline Matrix mutate(std::mt19937& rng, Matrix m) {
    std::uniform_int_distribution<std::size_t> r(0, m.rows() - 1), c(0, m.cols() - 1);
    std::uniform_int_distribution<int> delta(1, 3);
    std::bernoulli_distribution sign;
    m(r(rng), c(rng)) += sign(rng) ? delta(rng) : -delta(rng);
    return m;
}

}  // namespace fx
