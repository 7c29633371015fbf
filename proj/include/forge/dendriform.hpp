#pragma once

/**
 * @file dendriform.hpp
 * @brief Dendriform and Zinbiel algebras, their differential versions, and
 * the constructions from Rota-Baxter operators and O-operators.
 */

#include "forge/yangbaxter.hpp"

namespace forge {

struct Dendriform {
    StructTensor succ;
    StructTensor prec;
    std::size_t dim() const { return succ.size(); }
};

struct DiffDendriform {
    Dendriform base;
    std::vector<LinearOp> phi;
    std::size_t dim() const { return base.dim(); }
};

/// Zinbiel product a * b; the dendriform view is (*, *^op).
struct Zinbiel {
    StructTensor star;
    std::vector<LinearOp> phi;
    std::size_t dim() const { return star.size(); }
};

CheckReport check_dendriform(const Dendriform& d);
/// Dendriform axioms, both Leibniz rules per map, and pairwise commuting.
CheckReport check_diff_dendriform(const DiffDendriform& dd);
/// Zinbiel axiom plus, when phi is present, the differential dendriform laws of the view.
CheckReport check_zinbiel(const Zinbiel& z);

DiffDendriform as_dendriform(const Zinbiel& z);

/// a . b = a > b + a < b.
Algebra associated_algebra(const Dendriform& d);
DiffAlgebra associated_diff_algebra(const DiffDendriform& dd);

/// a > b = R(a) b, a < b = a R(b); refuses unless R is Rota-Baxter and commutes with every map.
DiffDendriform from_rota_baxter(const DiffAlgebra& da, const LinearOp& r);

/// u > v = l(Tu) v, u < v = r(Tv) u on V with family Omega; refuses an invalid T.
DiffDendriform from_o_operator(const DiffAlgebra& da, const DiffBimodule& dbm, const OOperator& t);

/// (A, L_>, R_<, Phi) as a bimodule of the associated differential algebra.
DiffBimodule dendriform_bimodule(const DiffDendriform& dd);

/**
 * A semidirect A* with actions (R_<*, L_>*), families Phi + {-d_k* + theta_k id}
 * and {-d_k + theta_k id} + Phi*, and the coproduct of the canonical r.
 */
DiffASIBialgebra dendriform_to_diff_asi(const DiffDendriform& dd, const std::vector<Scalar>& theta = {});

}  // namespace forge
