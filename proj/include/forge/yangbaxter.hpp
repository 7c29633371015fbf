#pragma once

/**
 * @file yangbaxter.hpp
 * @brief Coboundary coproducts, associative Yang-Baxter residuals,
 * O-operators and Rota-Baxter operators.
 *
 * An r-element r = sum r(p,q) e_p (x) e_q is stored as its coefficient matrix.
 */

#include "forge/bialgebra.hpp"

namespace forge {

using RElement = Element2;

/// D(a) = (id (x) L(a) - R(a) (x) id)(r).
Coalgebra coboundary_delta(const Algebra& alg, const RElement& r);

/// r12 r13 + r13 r23 - r23 r12.
Element3 aybe_residual(const Algebra& alg, const RElement& r);

bool is_antisymmetric(const RElement& r);

/**
 * AYBE plus (d_k (x) id - id (x) cd_k)(r) = 0 and
 * (cd_k (x) id - id (x) d_k)(r) = 0 for every k.
 *
 * For antisymmetric r the two side conditions must agree; a disagreement is
 * recorded as a failed law.
 */
CheckReport check_psi_admissible_aybe(const DiffAlgebra& da, const std::vector<LinearOp>& psi, const RElement& r);

struct CoboundaryOptions {
    /// Also require the admissibility of psi (qadm1/qadm2) on the algebra.
    bool require_admissible = false;
};

/// The five conditions on r making the coboundary structure a differential ASI bialgebra.
CheckReport check_coboundary_conditions(const DiffAlgebra& da, const std::vector<LinearOp>& psi, const RElement& r,
                                        CoboundaryOptions opts = {});

/// a* |-> sum <a*, a_i> b_i.
Matrix r_sharp(const RElement& r);

/// O-operator identity of r# with respect to (A*, R*, L*) and d_k r# = r# cd_k*.
CheckReport check_r_sharp_operator(const DiffAlgebra& da, const std::vector<LinearOp>& psi, const RElement& r);

/// Admissible AYBE on one side, the r# operator identities on the other.
Equivalence check_r_sharp_equivalence(const DiffAlgebra& da, const std::vector<LinearOp>& psi, const RElement& r);

using OOperator = Matrix;  ///< T : V -> A, shape alg_dim x v_dim

/// T(u)T(v) = T(l(Tu)v + r(Tv)u) only.
CheckReport check_o_operator_identity(const Algebra& alg, const Bimodule& bm, const OOperator& t);
/// Identity plus d_k T = T alpha_k.
CheckReport check_o_operator(const DiffAlgebra& da, const DiffBimodule& dbm, const OOperator& t);

CheckReport check_rota_baxter(const Algebra& alg, const LinearOp& r);

/// T^(a + u) = T(u) on A (+) V.
LinearOp lift_hat(const OOperator& t);

struct EmbeddedR {
    DiffAlgebra ambient;             ///< A semidirect V* with Phi + Pi*
    std::vector<LinearOp> psi;       ///< Psi + Omega*
    RElement r;                      ///< T - sigma(T)
    Equivalence equivalence;
};

/// T as an element of A (x) V* inside (A (+) V*) (x) (A (+) V*).
RElement embed_T(const OOperator& t);

/**
 * Builds A semidirect V* from an admissible quadruple and returns
 * r = T - sigma(T), together with both sides of the equivalence between
 * the admissible AYBE for r and the operator conditions on T.
 */
EmbeddedR embed_T_as_r(const DiffAlgebra& da, const AdmissibleQuadruple& aq, const std::vector<LinearOp>& omega,
                       const std::vector<LinearOp>& psi, const OOperator& t);

/// sum (e_i (x) e_i* - e_i* (x) e_i) in dimension 2n.
RElement canonical_r(std::size_t n);

struct PrResult {
    LinearOp p;
    Equivalence equivalence;
};

/// P_r = r# . phi with <phi(a), b> = B(a, b).
PrResult p_r_from_form(const DiffAlgebra& da, const BilForm& form, const RElement& r);

}  // namespace forge
