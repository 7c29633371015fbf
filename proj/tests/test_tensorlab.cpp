#include "oracle.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace forge;
using fx::mat;

namespace {

std::vector<std::string> sorted_coefficients(const Vec& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(format_scalar(x));
    std::sort(out.begin(), out.end());
    return out;
}

Cube monomial3(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
    Cube c(n);
    c(i, j, k) = 1;
    return c;
}

}  // namespace

TEST_CASE("scalars are exact and canonical", "[tensorlab]") {
    Scalar third = parse_scalar("1/3");
    CHECK(third * 3 == 1);
    CHECK(format_scalar(parse_scalar("4/6")) == "2/3");
    CHECK(format_scalar(parse_scalar("-6/3")) == "-2");
    CHECK(format_scalar(parse_scalar("+5")) == "5");
    CHECK(parse_scalar("10/4").get_den() == 2);
    CHECK_THROWS_AS(parse_scalar("0.5"), ParseError);
    CHECK_THROWS_AS(parse_scalar(""), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_scalar("1e3"), ParseError);
}

TEST_CASE("exact residuals vanish identically", "[tensorlab]") {
    // A long chain of rational operations whose exact value is zero.
    Scalar acc = 0;
    for (int k = 1; k <= 40; ++k) acc += Scalar(1, k * (k + 1));
    acc -= Scalar(40, 41);
    CHECK(acc == 0);
}

TEST_CASE("flip_sigma", "[tensorlab]") {
    Element2 r = mat(3, {{0, 2, 1}, {2, 0, -1}});
    CHECK(flip_sigma(r) == mat(3, {{2, 0, 1}, {0, 2, -1}}));

    std::mt19937 rng(11);
    for (int t = 0; t < 10; ++t) {
        Element2 x = fx::random_matrix(rng, 4, 4);
        CHECK(flip_sigma(flip_sigma(x)) == x);
        CHECK(sorted_coefficients(flip_sigma(x).data()) == sorted_coefficients(x.data()));
    }

    Element2 s(6, 6), expect(6, 6);
    for (std::size_t i = 0; i < 3; ++i) {
        s(i, i + 3) = 1;
        expect(i + 3, i) = 1;
    }
    CHECK(flip_sigma(s) == expect);
    CHECK_THROWS_AS(flip_sigma(Matrix(2, 3)), ShapeError);
}

TEST_CASE("cyclic_tau", "[tensorlab]") {
    CHECK(cyclic_tau(monomial3(3, 0, 1, 2)) == monomial3(3, 2, 0, 1));

    std::mt19937 rng(12);
    std::uniform_int_distribution<int> dist(-3, 3);
    Cube x(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            for (std::size_t k = 0; k < 3; ++k) x(i, j, k) = dist(rng);
    CHECK(cyclic_tau(cyclic_tau(cyclic_tau(x))) == x);
    CHECK(cyclic_tau(x) != x);
    CHECK(sorted_coefficients(cyclic_tau(x).data()) == sorted_coefficients(x.data()));

    Cube m = monomial3(3, 0, 1, 2);
    Cube orbit = m + cyclic_tau(m) + cyclic_tau(cyclic_tau(m));
    CHECK(orbit == monomial3(3, 0, 1, 2) + monomial3(3, 2, 0, 1) + monomial3(3, 1, 2, 0));
}

TEST_CASE("flip12 and tensor maps", "[tensorlab]") {
    CHECK(flip12(monomial3(3, 0, 1, 2)) == monomial3(3, 1, 0, 2));
    Matrix f = mat(2, 3, {{0, 0, 1}, {1, 2, 1}});
    Matrix g = mat(2, 2, {{0, 1, 1}, {1, 0, 1}});
    // (f (x) g)(a (x) b) = f(a) (x) g(b).
    Vec a = {1, 0, 1}, b = {1, 2};
    CHECK(apply2(f, g, outer(a, b)) == outer(f * a, g * b));
}

TEST_CASE("nullspace", "[tensorlab]") {
    CHECK(nullspace(Matrix::identity(2)).empty());
    CHECK(nullspace(Matrix(1, 3)).size() == 3);

    std::mt19937 rng(13);
    for (int t = 0; t < 20; ++t) {
        Matrix m = fx::random_matrix(rng, 3, 5, 1);
        auto basis = nullspace(m);
        CHECK(basis.size() == m.cols() - rank(m));
        for (const auto& v : basis) CHECK(is_zero(m * v));
        if (!basis.empty()) CHECK(rank(Matrix::from_columns(m.cols(), basis)) == basis.size());
        CHECK(rank(m) == oracle::rank(oracle::from_matrix(m)));
    }
}

TEST_CASE("nullspace basis is in reduced column-echelon form", "[tensorlab]") {
    Matrix m = mat(1, 3, {{0, 0, 1}, {0, 1, 1}, {0, 2, 1}});
    auto basis = nullspace(m);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0] == Vec{1, 0, -1});
    CHECK(basis[1] == Vec{0, 1, -1});
}

TEST_CASE("Leibniz system of A3 against the row-reduction oracle", "[tensorlab]") {
    oracle::Mat sys = oracle::leibniz_system(oracle::from_cube(fx::a3().mult));
    REQUIRE(sys.size() == 27);
    REQUIRE(sys[0].size() == 9);
    std::size_t expected = 9 - oracle::rank(sys);
    CHECK(expected == 4);
    Matrix m(27, 9);
    for (std::size_t i = 0; i < 27; ++i)
        for (std::size_t j = 0; j < 9; ++j) {
            m(i, j) = Scalar(static_cast<long>(sys[i][j].numerator()), static_cast<long>(sys[i][j].denominator()));
            m(i, j).canonicalize();
        }
    CHECK(nullspace(m).size() == expected);
}

TEST_CASE("compose, commutator and transpose", "[tensorlab]") {
    CHECK(commutator(fx::d1(), fx::d2()).is_zero());
    std::mt19937 rng(14);
    for (int t = 0; t < 10; ++t) {
        Matrix f = fx::random_matrix(rng, 3, 4), g = fx::random_matrix(rng, 4, 2);
        CHECK(transpose(transpose(f)) == f);
        CHECK(compose(f, Matrix::identity(4)) == f);
        CHECK(transpose(compose(f, g)) == compose(transpose(g), transpose(f)));
    }
    CHECK_THROWS_AS(compose(Matrix(2, 3), Matrix(2, 3)), ShapeError);
    CHECK(direct_sum(fx::d1(), fx::d2()).rows() == 6);
}

TEST_CASE("inverse and rank", "[tensorlab]") {
    auto inv = inverse(fx::d2());
    REQUIRE(inv.has_value());
    CHECK(*inv * fx::d2() == Matrix::identity(3));
    CHECK_FALSE(inverse(Matrix(2, 2)).has_value());
    CHECK(rank(fx::d1()) == 3);
}
