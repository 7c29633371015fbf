#pragma once

/**
 * @file poisson.hpp
 * @brief Poisson algebras, modules, coalgebras and bialgebras; structures
 * induced by a pair of commuting derivations; Poisson Yang-Baxter residuals;
 * pre-Lie, pre-Poisson and perm algebras; the Zinbiel-to-Poisson pipeline.
 */

#include "forge/dendriform.hpp"

#include <map>
#include <optional>
#include <utility>

namespace forge {

struct PoissonAlgebra {
    StructTensor bracket;
    StructTensor prod;
    std::size_t dim() const { return prod.size(); }
};

/// rho[i], mu[i] act on V for the basis vector e_i.
struct PoissonModule {
    std::size_t alg_dim = 0;
    std::size_t v_dim = 0;
    std::vector<Matrix> rho;
    std::vector<Matrix> mu;
};

struct PoissonBialgebra {
    PoissonAlgebra alg;
    Cube cobracket;  ///< delta
    Cube coproduct;  ///< Delta
    std::size_t dim() const { return alg.dim(); }
};

struct PrePoisson {
    StructTensor diamond;
    StructTensor star;
    std::size_t dim() const { return star.size(); }
};

struct PermAlgebra {
    StructTensor prod;
    std::size_t dim() const { return prod.size(); }
};

using DerivationPairs = std::vector<std::pair<std::size_t, std::size_t>>;

CheckReport check_poisson(const PoissonAlgebra& p);

/// Matrix of b |-> [e_i, b].
Matrix ad(const PoissonAlgebra& p, std::size_t i);
Matrix ad(const PoissonAlgebra& p, const Vec& a);

/// [a, b] = sum over pairs (p, q) of d_p(a) d_q(b) - d_q(a) d_p(b); default pairs (0,1), (2,3), ...
PoissonAlgebra induce_poisson(const DiffAlgebra& da, const DerivationPairs& pairs = {});

CheckReport check_poisson_module(const PoissonAlgebra& p, const PoissonModule& pm);
/// (A, ad, L).
PoissonModule regular_module(const PoissonAlgebra& p);
/// rho(a) = mu(d_1 a) alpha_2 - mu(d_2 a) alpha_1; needs l = r and two maps.
PoissonModule induce_module(const DiffAlgebra& da, const DiffBimodule& dbm);
/// (V*, -rho*, mu*).
PoissonModule dual_poisson_module(const PoissonModule& pm);
/// A (+) V with [a, v] = rho(a) v and a . v = mu(a) v.
PoissonAlgebra poisson_semidirect(const PoissonAlgebra& p, const PoissonModule& pm);

struct CompatConditions {
    LinearOp s;  ///< cd_2 d_1 - cd_1 d_2
    CheckReport report;
};

/// vip1, vip2, dpb1, dpb2 for families of size two, plus the implication vip => dpb.
CompatConditions check_compat_conditions(const DiffAlgebra& da, const std::vector<LinearOp>& psi, const Coalgebra& dc);

struct PoissonMatchedActions {
    std::vector<Matrix> rho_a, mu_a;  ///< indexed by A-basis, act on B
    std::vector<Matrix> rho_b, mu_b;  ///< indexed by B-basis, act on A
};

struct PoissonMatchedResult {
    PoissonAlgebra sum;
    CheckReport report;
};

PoissonMatchedResult matched_pair_poisson(const PoissonAlgebra& a, const PoissonAlgebra& b,
                                          const PoissonMatchedActions& act);

/// Poisson algebra, Frobenius and bracket invariance, partition, isotropy and closure of both parts.
CheckReport manin_triple(const PoissonAlgebra& p, const BilForm& form, const std::vector<std::size_t>& plus,
                         const std::vector<std::size_t>& minus);

/// A (+) A* with the coadjoint actions of A and of (A*, delta*, Delta*).
PoissonMatchedResult poisson_double(const PoissonBialgebra& pb);

CheckReport check_poisson_bialgebra(const PoissonBialgebra& pb);

/// delta = (cd_1 (x) cd_2 - cd_2 (x) cd_1) Delta.
Cube induce_poisson_coalgebra(const Coalgebra& dc, const std::vector<LinearOp>& psi);

struct InducedPoissonBialgebra {
    PoissonBialgebra bialgebra;
    CompatConditions compat;
    CheckReport report;
};

/// Refuses unless the input is a commutative cocommutative differential ASI bialgebra with two maps.
InducedPoissonBialgebra build_induced_poisson_bialgebra(const DiffASIBialgebra& db);

/// (bracket part, product part).
std::pair<Element3, Element3> pybe_residual(const PoissonAlgebra& p, const RElement& r);

/// (delta, Delta) with delta(a) = (id (x) ad a + ad a (x) id)(r), Delta(a) = (id (x) L a - L a (x) id)(r).
std::pair<Cube, Cube> coboundary_poisson(const PoissonAlgebra& p, const RElement& r);

CheckReport check_poisson_o_operator(const PoissonAlgebra& p, const PoissonModule& pm, const OOperator& t);
CheckReport check_poisson_rota_baxter(const PoissonAlgebra& p, const LinearOp& r);

struct PoissonEmbeddedR {
    PoissonAlgebra ambient;  ///< A semidirect V* with (-rho*, mu*)
    RElement r;
    Equivalence equivalence;  ///< PYBE and antisymmetry of r against the O-operator laws of T
};

PoissonEmbeddedR oopsemi_embed(const PoissonAlgebra& p, const PoissonModule& pm, const OOperator& t);

CheckReport check_prelie(const StructTensor& diamond);
CheckReport check_prepoisson(const PrePoisson& pp);
/// [a, b] = a <> b - b <> a, a . b = a * b + b * a; refuses an invalid input.
PoissonAlgebra prepoisson_to_poisson(const PrePoisson& pp);
/// a <> b = d_1 a * d_2 b - d_2 a * d_1 b; refuses an invalid differential Zinbiel algebra.
PrePoisson zinbiel_to_prepoisson(const Zinbiel& z);

CheckReport check_perm(const PermAlgebra& p);

struct PermTensorResult {
    PoissonAlgebra algebra;  ///< basis p_s (x) a_i at index s * dim(A) + i
    CheckReport report;
};

PermTensorResult perm_tensor_poisson(const PermAlgebra& perm, const PrePoisson& pp);

struct PipelineStage {
    std::string name;
    CheckReport report;
    std::string note;
};

struct PipelineBundle {
    DiffAlgebra associated;
    PoissonAlgebra induced;
    PrePoisson pre_poisson;
    DiffASIBialgebra diff_asi;
    RElement r;
    PoissonBialgebra poisson_bialgebra;
    std::vector<PipelineStage> stages;
    std::optional<std::string> halted_at;
    std::map<std::string, bool> gates;  ///< vip1, vip2, dpb1, dpb2

    bool pass() const { return !halted_at.has_value(); }
};

/// Differential Zinbiel algebra with two maps to its Poisson bialgebra, every stage cross-checked.
PipelineBundle pipeline_zinbiel_to_poisson_bialgebra(const Zinbiel& z);

}  // namespace forge
