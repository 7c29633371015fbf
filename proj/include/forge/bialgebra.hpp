#pragma once

/**
 * @file bialgebra.hpp
 * @brief Coalgebras, antisymmetric infinitesimal (ASI) bialgebras and their
 * differential versions, Frobenius forms, double constructions, coherent
 * derivations and coherent endomorphisms.
 *
 * The dual space always carries the dual basis. A coproduct tensor d on A is
 * read as the product e_i* o e_j* = sum_k d(i,j,k) e_k* on A*.
 */

#include "forge/module.hpp"

namespace forge {

struct Coalgebra {
    Coalgebra() = default;
    explicit Coalgebra(Cube d);
    static Coalgebra zero(std::size_t n);

    std::size_t dim() const { return comult.size(); }

    Cube comult;
};

/// D(a) for an arbitrary vector.
Element2 coproduct(const Cube& d, const Vec& a);
Element2 coproduct(const Cube& d, std::size_t k);
/// (D (x) id)(x).
Element3 coproduct_left(const Cube& d, const Element2& x);
/// (id (x) D)(x).
Element3 coproduct_right(const Cube& d, const Element2& x);

struct ASIBialgebra {
    Algebra alg;
    Coalgebra coalg;
    std::size_t dim() const { return alg.dim(); }
};

struct DiffASIBialgebra {
    ASIBialgebra bialg;
    std::vector<LinearOp> phi;
    std::vector<LinearOp> psi;
    std::size_t dim() const { return bialg.dim(); }
    DiffAlgebra diff_algebra() const { return DiffAlgebra{bialg.alg, phi}; }
};

struct BilForm {
    Matrix b;  ///< b(i,j) = B(e_i, e_j)
    std::size_t dim() const { return b.rows(); }
};

/// (e_i, e_j*) pairing on A (+) A*.
BilForm pairing_form(std::size_t n);

struct CoherentPair {
    LinearOp d;   ///< acts as a derivation
    LinearOp cd;  ///< acts as a coderivation
};

CheckReport check_coalgebra(const Coalgebra& c, bool cocommutative = false);
CheckReport check_coderivation(const Coalgebra& c, const LinearOp& e);
void add_coderivation(CheckReport& rep, const Cube& d, const LinearOp& e, const std::string& name,
                      std::vector<std::size_t> prefix = {});
void add_coassociativity(CheckReport& rep, const Cube& d, const std::string& name);
void add_cocommutativity(CheckReport& rep, const Cube& d, const std::string& name);

CheckReport check_asi(const ASIBialgebra& b);

/// The four compatibility laws between a derivation-like map and a
/// coderivation-like map (named qadm1, qadm2, psadm1, psadm2).
void add_admissibility(CheckReport& rep, const ASIBialgebra& b, const LinearOp& d, const LinearOp& cd,
                       std::vector<std::size_t> prefix = {});

CheckReport check_diff_asi(const DiffASIBialgebra& db);

/// (A*, o, -delta, Psi*, Phi*) where o is the transposed coproduct and
/// delta the transposed product.
DiffASIBialgebra dualize(const DiffASIBialgebra& db);

CheckReport check_frobenius(const Algebra& alg, const BilForm& form);
/// Adjoint maps B^{-1} D^T B; throws Refused for a degenerate form.
std::vector<LinearOp> adjoint_family(const BilForm& form, const std::vector<LinearOp>& phi);

/// The actions (R*_A, L*_A, R*_{A*}, L*_{A*}) of the double.
MatchedActions double_actions(const ASIBialgebra& b);
/// Matched-pair route: (A, Phi) and (A*, Psi*) with the double actions.
MatchedPairResult double_matched_pair(const DiffASIBialgebra& db);

struct DoubleResult {
    DiffAlgebra algebra;
    BilForm form;
    CheckReport report;
};

/// Algebra on A (+) A* with family Phi + Psi* and the pairing form.
DoubleResult double_construction(const DiffASIBialgebra& db);

CheckReport check_coherent_derivation(const ASIBialgebra& b, const CoherentPair& p);
std::vector<CoherentPair> coherent_derivation_space(const ASIBialgebra& b);
/// ((d2 d1 - d1 d2), (cd1 cd2 - cd2 cd1)).
CoherentPair coherent_bracket(const CoherentPair& p1, const CoherentPair& p2);
/// Flattened (d, cd) for rank tests against the space.
Vec flatten_pair(const CoherentPair& p);

CheckReport check_coherent_endomorphism(const ASIBialgebra& b, const LinearOp& phi, const LinearOp& psi,
                                        bool automorphism = false);

/// a |-> sum a_(2) a_(1).
LinearOp canonical_derivation(const ASIBialgebra& b);

}  // namespace forge
