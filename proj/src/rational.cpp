#include "planar/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "planar/errors.hpp"

namespace planar {

Rational make_rational(long p, long q) {
    if (q == 0) throw std::domain_error("zero denominator");
    Rational out(p, q);
    out.canonicalize();
    return out;
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

std::string strip_plus(std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return std::string(s);
}

} // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_literal(num)) throw ParseError("malformed rational numerator", 0);
    Rational out;
    out.get_num() = mpz_class(strip_plus(num));
    if (slash == std::string_view::npos) {
        out.get_den() = 1;
        return out;
    }
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw ParseError("malformed rational denominator", slash + 1);
    out.get_den() = mpz_class(std::string(den));
    if (out.get_den() == 0) throw ParseError("zero denominator", slash + 1);
    out.canonicalize();
    return out;
}

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("zero raised to a negative power");
        return pow(Rational(1) / base, -exponent);
    }
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    out.canonicalize();
    return out;
}

} // namespace planar
