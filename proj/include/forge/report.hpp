#pragma once

/**
 * @file report.hpp
 * @brief Law-by-law verification results with residual witnesses.
 */

#include "forge/tensor.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace forge {

/// A basis index tuple at which a law fails, with its nonzero residual.
struct Witness {
    std::vector<std::size_t> at;
    std::vector<std::size_t> shape;  ///< shape of the flattened residual
    Vec residual;
};

struct LawResult {
    std::string name;
    std::vector<Witness> witnesses;
    std::string note;  ///< set when a failure has no residual (e.g. a disagreement)
    bool failed_without_witness = false;

    bool pass() const { return witnesses.empty() && !failed_without_witness; }
};

class CheckReport {
public:
    /// Registers a law so that it appears in the report even when it passes.
    LawResult& law(const std::string& name);

    void add(const std::string& name, std::vector<std::size_t> at, const Vec& residual);
    void add(const std::string& name, std::vector<std::size_t> at, const Matrix& residual);
    void add(const std::string& name, std::vector<std::size_t> at, const Cube& residual);
    void add(const std::string& name, std::vector<std::size_t> at, const Scalar& residual);
    /// Marks a law failed with an explanation only.
    void fail(const std::string& name, const std::string& note);

    /// Appends all laws of `other`, prefixing their names as "prefix.name".
    void merge(const CheckReport& other, const std::string& prefix = {});

    bool pass() const;
    const std::vector<LawResult>& laws() const { return laws_; }
    const LawResult* find(const std::string& name) const;
    /// True when the named law is present and passes.
    bool passes(const std::string& name) const;
    std::size_t witness_count() const;

private:
    std::vector<LawResult> laws_;
};

/// Thrown when a construction refuses invalid input; carries the evidence.
struct Refused : std::runtime_error {
    Refused(const std::string& what, CheckReport why) : std::runtime_error(what), report(std::move(why)) {}
    CheckReport report;
};

/**
 * Both sides of a stated equivalence, evaluated independently.
 *
 * `agree()` holds when both sides pass or both fail.
 */
struct Equivalence {
    CheckReport lhs;
    CheckReport rhs;
    bool agree() const { return lhs.pass() == rhs.pass(); }
};

}  // namespace forge
