#pragma once

/**
 * @file document.hpp
 * @brief JSON documents for structures and reports.
 *
 * Scalars are strings "n" or "p/q" (bare integers are accepted on input).
 * Coefficient lists are sparse arrays [i, j, k, "c"] with 0-based indices.
 * Canonical output sorts entries by index tuple and omits zeros.
 */

#include "forge/poisson.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace forge::doc {

using Json = nlohmann::ordered_json;

inline constexpr const char* kTool = "forge";
inline constexpr const char* kVersion = "0.1.0";

struct Document {
    std::string kind;
    Json body;
    std::string digest;  ///< "sha256:<hex>" of the source bytes
};

std::string sha256_hex(std::string_view bytes);

/// Parses and validates a document; errors carry a byte offset or a JSON pointer.
Document parse(std::string_view text);
Document load(const std::string& path);
/// Validates an already parsed value.
Document from_json(const Json& j);

/// Dimension of the underlying space.
std::size_t dim(const Document& d);
std::optional<std::vector<std::string>> labels(const Document& d);

// Decoders. Each throws ParseError when the kind carries no such structure.
Algebra algebra(const Document& d);
DiffAlgebra diff_algebra(const Document& d);
/// The "psi" family where present, empty otherwise.
std::vector<LinearOp> psi(const Document& d);
bool declared_commutative(const Document& d);
DiffBimodule diff_bimodule(const Document& d);
/// The "pi" family where present.
std::optional<std::vector<LinearOp>> pi(const Document& d);
ASIBialgebra asi_bialgebra(const Document& d);
DiffASIBialgebra diff_asi_bialgebra(const Document& d);
Zinbiel zinbiel(const Document& d);
DiffDendriform dendriform(const Document& d);
PoissonAlgebra poisson(const Document& d);
PoissonBialgebra poisson_bialgebra(const Document& d);
PrePoisson pre_poisson(const Document& d);
RElement r_element(const Document& d);
LinearOp linear_map(const Document& d);
BilForm bilinear_form(const Document& d);

using Labels = std::optional<std::vector<std::string>>;

// Encoders producing canonical documents.
Json encode_algebra(const Algebra& a, bool commutative = false, const Labels& l = {});
Json encode_diff_algebra(const DiffAlgebra& da, const std::vector<LinearOp>& psi = {}, bool commutative = false,
                         const Labels& l = {});
Json encode_bimodule(const DiffAlgebra& da, const DiffBimodule& dbm, const std::optional<std::vector<LinearOp>>& pi = {},
                     const Labels& l = {});
Json encode_asi_bialgebra(const ASIBialgebra& b, const Labels& l = {});
Json encode_diff_asi_bialgebra(const DiffASIBialgebra& db, const Labels& l = {});
Json encode_zinbiel(const Zinbiel& z, const Labels& l = {});
Json encode_dendriform(const DiffDendriform& dd, const Labels& l = {});
Json encode_poisson(const PoissonAlgebra& p, const Labels& l = {});
Json encode_poisson_bialgebra(const PoissonBialgebra& pb, const Labels& l = {});
Json encode_pre_poisson(const PrePoisson& pp, const Labels& l = {});
Json encode_r_element(const RElement& r, const Labels& l = {});
Json encode_linear_map(const LinearOp& m, const Labels& l = {});
Json encode_bilinear_form(const BilForm& f, const Labels& l = {});
Json encode_list(const std::vector<Json>& items);

/// Laws as JSON; witness residuals are sparse over the witness shape.
Json encode_laws(const CheckReport& rep);
Json encode_report(const CheckReport& rep, const std::string& digest, const std::string& kind);

/// Sparse entries of a tensor with the given row-major shape.
Json sparse(const Vec& data, const std::vector<std::size_t>& shape);

/// Two-space indentation, index tuples on one line, trailing newline.
std::string dump(const Json& j);

}  // namespace forge::doc
