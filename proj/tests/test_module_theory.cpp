#include "oracle.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace forge;

namespace {

Bimodule left_only(const Algebra& a) {
    Bimodule bm = Bimodule::regular(a);
    for (auto& r : bm.r) r = Matrix(a.dim(), a.dim());
    return bm;
}

std::vector<LinearOp> phi() { return {fx::d1(), fx::d2()}; }

oracle::Mat mul(const oracle::Mat& x, const oracle::Mat& y) {
    oracle::Mat out(x.size(), oracle::Row(y[0].size(), oracle::Q(0)));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t k = 0; k < y.size(); ++k)
            for (std::size_t j = 0; j < y[0].size(); ++j) out[i][j] += x[i][k] * y[k][j];
    return out;
}

/// Column v of l_i l_j - sum_k c(i,j,k) l_k, computed on plain rationals.
oracle::Row left_action_residual(const Algebra& a, const Bimodule& bm, std::size_t i, std::size_t j, std::size_t v) {
    oracle::Mat li = oracle::from_matrix(bm.l[i]), lj = oracle::from_matrix(bm.l[j]);
    oracle::Mat prod = mul(li, lj);
    oracle::Row out;
    for (std::size_t w = 0; w < bm.v_dim; ++w) {
        oracle::Q x = prod[w][v];
        for (std::size_t k = 0; k < a.dim(); ++k) x -= oracle::q(a.mult(i, j, k)) * oracle::q(bm.l[k](w, v));
        out.push_back(x);
    }
    return out;
}

Vec to_vec(const oracle::Row& r) {
    Vec out;
    for (const auto& x : r) out.push_back(Scalar(static_cast<long>(x.numerator()), static_cast<long>(x.denominator())));
    return out;
}

/// Product on A (+) A* of the double: A acts on A* by (R*, L*) and A* on A by (R*_{A*}, L*_{A*}).
MatchedPairResult d6_matched_pair() {
    DiffASIBialgebra db = fx::d6();
    DiffAlgebra a{db.bialg.alg, db.phi};
    DiffAlgebra b{Algebra(db.bialg.coalg.comult), transpose_family(db.psi)};
    return matched_pair_assemble(a, b, double_actions(db.bialg));
}

}  // namespace

TEST_CASE("check_bimodule", "[module_theory]") {
    Algebra a = fx::a3();
    CHECK(check_bimodule(a, Bimodule::regular(a)).pass());
    CHECK(check_bimodule(a, left_only(a)).pass());

    Bimodule bad = Bimodule::regular(a);
    bad.l[0](2, 2) += 1;
    CheckReport rep = check_bimodule(a, bad);
    REQUIRE_FALSE(rep.pass());
    const LawResult* law = rep.find("left_action");
    REQUIRE_FALSE(law->witnesses.empty());
    for (const auto& w : law->witnesses)
        CHECK(w.residual == to_vec(left_action_residual(a, bad, w.at[0], w.at[1], w.at[2])));
    CHECK_THROWS_AS(check_bimodule(fx::a3(), Bimodule::regular(Algebra::zero(2))), ShapeError);
}

TEST_CASE("check_diff_bimodule", "[module_theory]") {
    DiffAlgebra da = fx::a3_diff();
    Algebra a = fx::a3();
    CHECK(check_diff_bimodule(da, DiffBimodule{Bimodule::regular(a), phi()}).pass());

    Matrix zero(3, 3);
    CheckReport rep = check_diff_bimodule(da, DiffBimodule{Bimodule::regular(a), {zero, zero}});
    CHECK_FALSE(rep.passes("intertwine_left"));
    // With Phi = 0 the zero family intertwines.
    CHECK(check_diff_bimodule(DiffAlgebra{a, {zero, zero}}, DiffBimodule{Bimodule::regular(a), {zero, zero}}).pass());

    Algebra z = Algebra::zero(2);
    Matrix w1 = fx::mat(2, {{0, 0, 1}, {1, 1, 2}}), w2 = fx::mat(2, {{0, 0, 3}});
    CHECK(check_diff_bimodule(DiffAlgebra{z, {fx::mat(2, {{0, 1, 1}}), Matrix(2, 2)}},
                              DiffBimodule{Bimodule::zero(2, 2), {w1, w2}})
              .pass());
    CHECK_THROWS_AS(check_diff_bimodule(da, DiffBimodule{Bimodule::regular(a), {zero}}), ShapeError);
}

TEST_CASE("dual_bimodule", "[module_theory]") {
    DiffAlgebra da = fx::a3_diff();
    Bimodule reg = Bimodule::regular(da.base);
    auto pi = theta_family(phi(), {0, 0});
    DiffBimodule dual = dual_bimodule(reg, pi);
    CHECK(dual.base.l[0] == transpose(reg.r[0]));
    CHECK(dual.base.r[1] == transpose(reg.l[1]));
    CHECK(dual.omega[0] == -transpose(fx::d1()));
    CHECK(check_diff_bimodule(da, dual).pass());

    // Pi = Phi: the dual fails, and the direct admissibility residual agrees.
    CHECK_FALSE(check_diff_bimodule(da, dual_bimodule(reg, phi())).pass());
    CHECK_FALSE(check_admissible(da, AdmissibleQuadruple{reg, phi()}).pass());

    DiffAlgebra z{Algebra::zero(2), {Matrix(2, 2)}};
    std::mt19937 rng(31);
    CHECK(check_diff_bimodule(z, dual_bimodule(Bimodule::zero(2, 2), {fx::random_matrix(rng, 2, 2)})).pass());
}

TEST_CASE("check_admissible", "[module_theory]") {
    DiffAlgebra da = fx::a3_diff();
    Bimodule reg = Bimodule::regular(da.base);
    CHECK(check_admissible(da, AdmissibleQuadruple{reg, theta_family(phi(), {0, 0})}).pass());
    CHECK(check_admissible(da, AdmissibleQuadruple{reg, theta_family(phi(), {1, 1})}).pass());

    CheckReport rep = check_admissible(da, AdmissibleQuadruple{reg, phi()});
    REQUIRE_FALSE(rep.pass());
    // admissible_left at (k=0, a=e1, v=e1): l(e1) d1(e1) - l(d1 e1) e1 - d1(l(e1) e1) = 2e3 - 2e3 - 4e3.
    const LawResult* law = rep.find("admissible_left");
    bool seen = false;
    for (const auto& w : law->witnesses)
        if (w.at == std::vector<std::size_t>{0, 0, 0}) {
            seen = true;
            CHECK(w.residual == Vec{0, 0, -4});
        }
    CHECK(seen);
    CHECK(rep.passes("dual_agreement"));
}

TEST_CASE("admissibility agrees with the dual bimodule check", "[module_theory]") {
    DiffAlgebra da = fx::a3_diff();
    Bimodule reg = Bimodule::regular(da.base);
    std::mt19937 rng(32);
    int admissible = 0;
    for (int t = 0; t < 20; ++t) {
        std::vector<LinearOp> pi = theta_family(phi(), {Scalar(t % 3), Scalar(t % 2)});
        if (t % 2) pi[t % 4 / 2] = fx::mutate(rng, pi[t % 4 / 2]);
        bool direct = check_admissible(da, AdmissibleQuadruple{reg, pi}).pass();
        CHECK(direct == check_diff_bimodule(da, dual_bimodule(reg, pi)).pass());
        admissible += direct;
    }
    CHECK(admissible >= 10);
}

TEST_CASE("theta_family", "[module_theory]") {
    auto f = theta_family(phi(), {0, 0});
    CHECK(f[0] == -fx::d1());
    CHECK(f[1] == -fx::d2());
    auto g = theta_family({Matrix(2, 2)}, {5});
    CHECK(g[0] == Scalar(5) * Matrix::identity(2));
    auto h = theta_family(phi(), {1, 2});
    CHECK(h[0] == Matrix::identity(3) - fx::d1());
    CHECK(h[1] == Scalar(2) * Matrix::identity(3) - fx::d2());
    CHECK_THROWS_AS(theta_family(phi(), {1}), ShapeError);

    // Any theta keeps a bimodule family admissible.
    DiffAlgebra da = fx::a3_diff();
    Bimodule reg = Bimodule::regular(da.base);
    std::uniform_int_distribution<int> dist(-4, 4);
    std::mt19937 rng(33);
    for (int t = 0; t < 10; ++t) {
        std::vector<Scalar> theta{Scalar(dist(rng), 1 + t), Scalar(dist(rng))};
        CHECK(check_admissible(da, AdmissibleQuadruple{reg, theta_family(phi(), theta)}).pass());
        CHECK(check_admissible(da, AdmissibleQuadruple{left_only(da.base), theta_family(phi(), theta)}).pass());
    }
}

TEST_CASE("semidirect_product", "[module_theory]") {
    DiffAlgebra da = fx::a3_diff();
    Bimodule reg = Bimodule::regular(da.base);
    DiffBimodule dual = dual_bimodule(reg, theta_family(phi(), {0, 0}));
    DiffAlgebra sum = semidirect_product(da, dual);
    CHECK(sum.dim() == 6);
    CHECK(check_diff_algebra(sum).pass());

    DiffAlgebra z = semidirect_product(DiffAlgebra{Algebra::zero(2), {}}, DiffBimodule{Bimodule::zero(2, 3), {}});
    CHECK(z.dim() == 5);
    CHECK(z.base.mult.is_zero());

    DiffAlgebra left = semidirect_product(da, DiffBimodule{left_only(da.base), phi()});
    CHECK(check_law(left.base, Law::associative).pass());
    auto assoc = oracle::associator(oracle::from_cube(left.base.mult));
    for (const auto& slice : assoc)
        for (const auto& plane : slice)
            for (const auto& row : plane) CHECK(oracle::zero(row));

    DiffBimodule broken{reg, {Matrix(3, 3), Matrix(3, 3)}};
    CHECK_THROWS_AS(semidirect_product(da, broken), Refused);
}

TEST_CASE("semidirect product passes exactly when the bimodule does", "[module_theory]") {
    DiffAlgebra da = fx::a3_diff();
    std::mt19937 rng(34);
    int good = 0;
    for (int t = 0; t < 20; ++t) {
        DiffBimodule dbm{t % 2 ? Bimodule::regular(da.base) : left_only(da.base), phi()};
        if (t % 3 == 1) dbm.base.l[t % 3] = fx::mutate(rng, dbm.base.l[t % 3]);
        if (t % 3 == 2) dbm.omega[1] = fx::mutate(rng, dbm.omega[1]);
        bool input = check_diff_bimodule(da, dbm).pass();
        CHECK(input == check_diff_algebra(semidirect_unchecked(da, dbm)).pass());
        good += input;
    }
    CHECK(good > 0);
    CHECK(good < 20);
}

TEST_CASE("matched_pair_assemble", "[module_theory]") {
    // B = A3* with zero product and actions (R*, L*): the semidirect product.
    DiffAlgebra da = fx::a3_diff();
    Bimodule reg = Bimodule::regular(da.base);
    auto pi = theta_family(phi(), {0, 0});
    DiffBimodule dual = dual_bimodule(reg, pi);
    MatchedActions act{dual.base.l, dual.base.r, {}, {}};
    for (int j = 0; j < 3; ++j) {
        act.l_b.push_back(Matrix(3, 3));
        act.r_b.push_back(Matrix(3, 3));
    }
    MatchedPairResult mp = matched_pair_assemble(da, DiffAlgebra{Algebra::zero(3), dual.omega}, act);
    CHECK(mp.report.pass());
    CHECK(mp.sum.base.mult == semidirect_product(da, dual).base.mult);

    MatchedPairResult d6 = d6_matched_pair();
    CHECK(d6.report.pass());
    CHECK(d6.sum.dim() == 12);

    // Embedded blocks are differential subalgebras.
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            for (std::size_t k = 0; k < 6; ++k) {
                CHECK(d6.sum.base.mult(i, j, k) == fx::d6().bialg.alg.mult(i, j, k));
                CHECK(d6.sum.base.mult(6 + i, 6 + j, 6 + k) == fx::d6().bialg.coalg.comult(i, j, k));
            }
    CHECK_THROWS_AS(matched_pair_assemble(da, DiffAlgebra{Algebra::zero(3), {}}, act), ShapeError);
}

TEST_CASE("perturbed matched-pair actions fail", "[module_theory]") {
    DiffASIBialgebra db = fx::d6();
    DiffAlgebra a{db.bialg.alg, db.phi};
    DiffAlgebra b{Algebra(db.bialg.coalg.comult), transpose_family(db.psi)};
    MatchedActions base = double_actions(db.bialg);
    std::mt19937 rng(35);
    for (int t = 0; t < 5; ++t) {
        MatchedActions act = base;
        std::size_t i = static_cast<std::size_t>(t) % 6;
        switch (t % 4) {
            case 0: act.l_a[i] = fx::mutate(rng, act.l_a[i]); break;
            case 1: act.r_a[i] = fx::mutate(rng, act.r_a[i]); break;
            case 2: act.l_b[i] = fx::mutate(rng, act.l_b[i]); break;
            default: act.r_b[i] = fx::mutate(rng, act.r_b[i]); break;
        }
        MatchedPairResult mp = matched_pair_assemble(a, b, act);
        CHECK_FALSE(mp.report.pass());
        // Oracle: the assembled product has a nonzero associator.
        auto assoc = oracle::associator(oracle::from_cube(mp.sum.base.mult));
        bool nonzero = false;
        for (const auto& slice : assoc)
            for (const auto& plane : slice)
                for (const auto& row : plane) nonzero = nonzero || !oracle::zero(row);
        CHECK(nonzero == !mp.report.passes("associativity"));
    }
}
