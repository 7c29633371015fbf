#include "forge/scalar.hpp"

#include <cctype>

namespace forge {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return all_digits(s);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!valid_integer(num) || (slash != std::string_view::npos && !all_digits(den)))
        throw ParseError("not an exact rational: \"" + std::string(text) + "\"");
    std::string n(num);
    if (!n.empty() && n.front() == '+') n.erase(0, 1);
    Scalar q;
    if (slash == std::string_view::npos) {
        q = Scalar(mpz_class(n));
    } else {
        mpz_class d{std::string(den)};
        if (d == 0) throw ParseError("zero denominator: \"" + std::string(text) + "\"");
        q = Scalar(mpz_class(n), d);
        q.canonicalize();
    }
    return q;
}

std::string format_scalar(const Scalar& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Vec zero_vec(std::size_t n) { return Vec(n, Scalar(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n, Scalar(0));
    v.at(i) = 1;
    return v;
}

bool is_zero(const Vec& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec out = a;
    out += b;
    return out;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec out = a;
    out -= b;
    return out;
}

Vec operator-(const Vec& a) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
    return out;
}

Vec operator*(const Scalar& s, const Vec& a) {
    Vec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
    return out;
}

Vec& operator+=(Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeError("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

Vec& operator-=(Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw ShapeError("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

}  // namespace forge
