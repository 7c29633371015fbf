#pragma once

/**
 * @file module.hpp
 * @brief Bimodules, their differential and dual versions, admissible
 * families, semi-direct products and matched pairs.
 *
 * Actions are stored per algebra basis vector: l[i] and r[i] are the
 * matrices of v |-> e_i . v and v |-> v . e_i on V.
 */

#include "forge/algebra.hpp"

namespace forge {

struct Bimodule {
    std::size_t alg_dim = 0;
    std::size_t v_dim = 0;
    std::vector<Matrix> l;
    std::vector<Matrix> r;

    /// (A, L_A, R_A).
    static Bimodule regular(const Algebra& alg);
    /// All actions zero.
    static Bimodule zero(std::size_t alg_dim, std::size_t v_dim);

    /// Action matrix of an arbitrary element a.
    Matrix left(const Vec& a) const;
    Matrix right(const Vec& a) const;
};

struct DiffBimodule {
    Bimodule base;
    std::vector<LinearOp> omega;
};

struct AdmissibleQuadruple {
    Bimodule base;
    std::vector<LinearOp> pi;
};

CheckReport check_bimodule(const Algebra& alg, const Bimodule& bm);
CheckReport check_diff_bimodule(const DiffAlgebra& da, const DiffBimodule& dbm);

/// (V*, r*, l*, Pi*): actions and family transposed, left and right swapped.
DiffBimodule dual_bimodule(const Bimodule& bm, const std::vector<LinearOp>& pi);

/**
 * Admissibility of Pi on (V, l, r).
 *
 * Also evaluates the dual route (the dual being a bimodule of the
 * differential algebra) and records a disagreement as a failed law.
 */
CheckReport check_admissible(const DiffAlgebra& da, const AdmissibleQuadruple& aq);

/// {-alpha_k + theta_k id}.
std::vector<LinearOp> theta_family(const std::vector<LinearOp>& omega, const std::vector<Scalar>& theta);

/// A (+) V with (a+u)(b+v) = ab + l(a)v + r(b)u and family Phi (+) Omega.
/// Throws Refused when the bimodule check fails.
DiffAlgebra semidirect_product(const DiffAlgebra& da, const DiffBimodule& dbm);
/// Same assembly without validation.
DiffAlgebra semidirect_unchecked(const DiffAlgebra& da, const DiffBimodule& dbm);

/// Cross actions of a matched pair: A acts on B by (l_a, r_a), B acts on A by (l_b, r_b).
struct MatchedActions {
    std::vector<Matrix> l_a, r_a;  ///< indexed by A-basis, act on B
    std::vector<Matrix> l_b, r_b;  ///< indexed by B-basis, act on A
};

struct MatchedPairResult {
    DiffAlgebra sum;
    CheckReport report;
};

/// Product on A (+) B built from both products and the four actions.
StructTensor matched_product(const StructTensor& a, const StructTensor& b, const MatchedActions& act);

MatchedPairResult matched_pair_assemble(const DiffAlgebra& a, const DiffAlgebra& b, const MatchedActions& act);

}  // namespace forge
