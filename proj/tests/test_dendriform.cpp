#include "oracle.hpp"
#include "support.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace forge;

namespace {

using oracle::Q;
using oracle::T3;

/// x . y on coefficient vectors.
oracle::Row prod(const T3& c, const oracle::Row& x, const oracle::Row& y) {
    std::size_t n = c.size();
    oracle::Row out(n, Q(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * c[i][j][k];
    return out;
}

oracle::Row unit(std::size_t n, std::size_t i) {
    oracle::Row out(n, Q(0));
    out[i] = Q(1);
    return out;
}

oracle::Row add(oracle::Row x, const oracle::Row& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return x;
}

/// The three dendriform identities on all basis triples.
bool dendriform_oracle(const T3& s, const T3& p) {
    std::size_t n = s.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                auto a = unit(n, i), b = unit(n, j), c = unit(n, k);
                if (prod(p, prod(p, a, b), c) != prod(p, a, add(prod(p, b, c), prod(s, b, c)))) return false;
                if (prod(p, prod(s, a, b), c) != prod(s, a, prod(p, b, c))) return false;
                if (prod(s, add(prod(p, a, b), prod(s, a, b)), c) != prod(s, a, prod(s, b, c))) return false;
            }
    return true;
}

bool dendriform_oracle(const Dendriform& d) { return dendriform_oracle(oracle::from_cube(d.succ), oracle::from_cube(d.prec)); }

Bimodule left_only(const Algebra& a) {
    Bimodule bm = Bimodule::regular(a);
    for (auto& r : bm.r) r = Matrix(a.dim(), a.dim());
    return bm;
}

std::vector<LinearOp> phi() { return {fx::d1(), fx::d2()}; }

}  // namespace

TEST_CASE("check_dendriform", "[dendriform]") {
    DiffDendriform z = as_dendriform(fx::z3());
    CHECK(dendriform_oracle(z.base));
    CHECK(check_dendriform(z.base).pass());
    CHECK(check_diff_dendriform(z).pass());

    Dendriform split{fx::a3().mult, StructTensor(3)};
    CHECK(check_dendriform(split).pass());
    CHECK(check_dendriform(Dendriform{StructTensor(3), fx::a3().mult}).pass());
    CHECK(check_dendriform(Dendriform{StructTensor(4), StructTensor(4)}).pass());
    CHECK_THROWS_AS(check_dendriform(Dendriform{StructTensor(3), StructTensor(2)}), ShapeError);
}

TEST_CASE("dendriform checker agrees with the oracle on mutations", "[dendriform]") {
    std::mt19937 rng(61);
    int failing = 0;
    for (int t = 0; t < 20; ++t) {
        Dendriform d = as_dendriform(fx::z3()).base;
        if (t % 2) d.succ = fx::mutate(rng, d.succ);
        else d.prec = fx::mutate(rng, d.prec);
        bool pass = check_dendriform(d).pass();
        CHECK(pass == dendriform_oracle(d));
        failing += !pass;
    }
    CHECK(failing >= 15);
}

TEST_CASE("check_diff_dendriform", "[dendriform]") {
    DiffDendriform z = as_dendriform(fx::z3());
    z.phi[1](0, 0) = 1;
    CheckReport rep = check_diff_dendriform(z);
    CHECK_FALSE(rep.passes("derivation_succ"));
    CHECK_FALSE(rep.passes("derivation_prec"));

    DiffDendriform trivial{Dendriform{fx::a3().mult, StructTensor(3)}, phi()};
    CHECK(check_diff_dendriform(trivial).pass());
    DiffDendriform noncommuting{Dendriform{StructTensor(2), StructTensor(2)},
                                {fx::mat(2, {{0, 1, 1}}), fx::mat(2, {{1, 0, 1}})}};
    CHECK_FALSE(check_diff_dendriform(noncommuting).passes("derivations_commute"));
}

TEST_CASE("check_zinbiel", "[dendriform]") {
    CHECK(check_zinbiel(fx::z3()).pass());
    CHECK(check_zinbiel(Zinbiel{StructTensor(2), {}}).pass());

    std::mt19937 rng(62);
    int failing = 0;
    for (int t = 0; t < 20; ++t) {
        Zinbiel z = fx::z3();
        z.star = fx::mutate(rng, z.star);
        CheckReport rep = check_zinbiel(z);
        // A Zinbiel product is exactly a dendriform pair (*, *^op).
        CHECK(rep.passes("zinbiel") == dendriform_oracle(as_dendriform(z).base));
        if (rep.passes("zinbiel")) continue;
        ++failing;
        CHECK_FALSE(rep.find("zinbiel")->witnesses.empty());
    }
    CHECK(failing >= 15);
}

TEST_CASE("associated_algebra", "[dendriform]") {
    CHECK(associated_algebra(as_dendriform(fx::z3()).base).mult == fx::a3().mult);
    CHECK(associated_algebra(Dendriform{StructTensor(3), StructTensor(3)}).mult.is_zero());
    CHECK(associated_algebra(Dendriform{fx::a3().mult, StructTensor(3)}).mult == fx::a3().mult);
    DiffAlgebra da = associated_diff_algebra(as_dendriform(fx::z3()));
    CHECK(check_diff_algebra(da, true).pass());
}

TEST_CASE("dendriform structures have associative associated algebras", "[dendriform]") {
    std::mt19937 rng(63);
    for (int t = 0; t < 20; ++t) {
        Zinbiel z = fx::z3();
        if (t % 2) z.star = fx::mutate(rng, z.star);
        Dendriform d = as_dendriform(z).base;
        if (!check_dendriform(d).pass()) continue;
        Algebra a = associated_algebra(d);
        CHECK(check_law(a, Law::associative).pass());
        CHECK(check_law(a, Law::commutative).pass());
    }
}

TEST_CASE("from_rota_baxter", "[dendriform]") {
    DiffAlgebra da = fx::a3_diff();
    DiffDendriform zero = from_rota_baxter(da, Matrix(3, 3));
    CHECK(zero.base.succ.is_zero());
    CHECK(zero.base.prec.is_zero());

    Algebra a = fx::a3();
    DiffBimodule dbm{left_only(a), phi()};
    DiffAlgebra sum = semidirect_product(da, dbm);
    LinearOp hat = lift_hat(Matrix::identity(3));
    DiffDendriform dd = from_rota_baxter(sum, hat);
    CHECK(dendriform_oracle(dd.base));
    CHECK(check_diff_dendriform(dd).pass());

    // a . b under the new product is R(a) b + a R(b), and R maps it onto the old product.
    Algebra assoc = associated_algebra(dd.base);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) {
            Vec lhs = hat * basis_product(assoc.mult, i, j);
            CHECK(lhs == bilinear(sum.base.mult, hat.column(i), hat.column(j)));
        }

    CHECK_THROWS_AS(from_rota_baxter(da, Matrix::identity(3)), Refused);
    // On a zero product every map is Rota-Baxter; this one does not commute with the derivation.
    DiffAlgebra flat{Algebra::zero(2), {fx::mat(2, {{1, 0, 1}})}};
    LinearOp proj = fx::mat(2, {{0, 0, 1}});
    REQUIRE(check_rota_baxter(flat.base, proj).pass());
    CHECK_THROWS_AS(from_rota_baxter(flat, proj), Refused);
}

TEST_CASE("from_o_operator", "[dendriform]") {
    DiffAlgebra da = fx::a3_diff();
    DiffDendriform dd = from_o_operator(da, DiffBimodule{left_only(da.base), phi()}, Matrix::identity(3));
    CHECK(dd.base.succ == fx::a3().mult);
    CHECK(dd.base.prec.is_zero());
    CHECK(dd.phi == phi());

    DiffDendriform zero = from_o_operator(da, DiffBimodule{left_only(da.base), phi()}, Matrix(3, 3));
    CHECK(zero.base.succ.is_zero());
    CHECK(zero.base.prec.is_zero());

    DiffDendriform z = as_dendriform(fx::z3());
    DiffDendriform back = from_o_operator(associated_diff_algebra(z), dendriform_bimodule(z), Matrix::identity(3));
    CHECK(back.base.succ == fx::z3_star());
    CHECK(back.base.prec == opposite(fx::z3_star()));
    CHECK(check_diff_dendriform(back).pass());

    CHECK_THROWS_AS(from_o_operator(da, DiffBimodule{Bimodule::regular(da.base), phi()}, Matrix::identity(3)), Refused);
}

TEST_CASE("O-operators give differential dendriform algebras", "[dendriform]") {
    DiffAlgebra da = fx::a3_diff();
    std::mt19937 rng(64);
    int built = 0;
    for (int t = 0; t < 10; ++t) {
        DiffBimodule dbm{left_only(da.base), phi()};
        Matrix tm = Scalar(1 + t % 3) * Matrix::identity(3);
        if (t % 2) tm = fx::mutate(rng, tm);
        if (!check_o_operator(da, dbm, tm).pass()) {
            CHECK_THROWS_AS(from_o_operator(da, dbm, tm), Refused);
            continue;
        }
        ++built;
        DiffDendriform dd = from_o_operator(da, dbm, tm);
        CHECK(check_diff_dendriform(dd).pass());
        CHECK(dendriform_oracle(dd.base));
    }
    CHECK(built >= 5);
}

TEST_CASE("dendriform_bimodule", "[dendriform]") {
    DiffDendriform z = as_dendriform(fx::z3());
    DiffAlgebra da = associated_diff_algebra(z);
    DiffBimodule bm = dendriform_bimodule(z);
    CHECK(check_diff_bimodule(da, bm).pass());
    CHECK(check_o_operator(da, bm, Matrix::identity(3)).pass());
}

TEST_CASE("dendriform_to_diff_asi", "[dendriform]") {
    DiffASIBialgebra db = dendriform_to_diff_asi(as_dendriform(fx::z3()), {0, 0});
    DiffASIBialgebra expect = fx::d6();
    CHECK(db.bialg.alg.mult == expect.bialg.alg.mult);
    CHECK(db.bialg.coalg.comult == expect.bialg.coalg.comult);
    CHECK(db.phi == expect.phi);
    CHECK(db.psi == expect.psi);
    CHECK(check_diff_asi(db).pass());
    CHECK(dendriform_to_diff_asi(as_dendriform(fx::z3())).bialg.coalg.comult == expect.bialg.coalg.comult);

    DiffASIBialgebra zero = dendriform_to_diff_asi(DiffDendriform{Dendriform{StructTensor(2), StructTensor(2)}, {}});
    CHECK(zero.dim() == 4);
    CHECK(zero.bialg.alg.mult.is_zero());
    CHECK(zero.bialg.coalg.comult.is_zero());

    DiffASIBialgebra shifted = dendriform_to_diff_asi(as_dendriform(fx::z3()), {1, 1});
    CHECK(check_diff_asi(shifted).pass());
    CHECK(shifted.psi[0] == direct_sum(Matrix::identity(3) - fx::d1(), transpose(fx::d1())));

    DiffDendriform bad = as_dendriform(fx::z3());
    bad.base.succ(0, 0, 0) = 1;
    CHECK_THROWS_AS(dendriform_to_diff_asi(bad), Refused);
}

TEST_CASE("dendriform_to_diff_asi passes for every theta", "[dendriform]") {
    std::mt19937 rng(65);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int t = 0; t < 5; ++t) {
        std::vector<Scalar> theta{Scalar(dist(rng), 1 + t), Scalar(dist(rng))};
        CHECK(check_diff_asi(dendriform_to_diff_asi(as_dendriform(fx::z3()), theta)).pass());
        CHECK(check_diff_asi(dendriform_to_diff_asi(DiffDendriform{Dendriform{fx::a3().mult, StructTensor(3)}, phi()}, theta)).pass());
    }
}
