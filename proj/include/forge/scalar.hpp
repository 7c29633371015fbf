#pragma once

/**
 * @file scalar.hpp
 * @brief Exact rational scalars.
 *
 * Every coefficient in the library is an element of Q backed by GMP.
 * Values are kept in canonical form (lowest terms, positive denominator).
 */

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace forge {

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

/// Thrown when operands have incompatible dimensions.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when textual input cannot be read.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what, std::string where = {})
        : std::runtime_error(where.empty() ? what : where + ": " + what), position(std::move(where)) {}
    std::string position;
};

/// Parses "n", "-n" or "p/q". Floats and empty strings are rejected.
Scalar parse_scalar(std::string_view text);

/// Canonical text form: "n" for integers, "p/q" otherwise.
std::string format_scalar(const Scalar& x);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Scalar& s, const Vec& a);
Vec& operator+=(Vec& a, const Vec& b);
Vec& operator-=(Vec& a, const Vec& b);

}  // namespace forge
