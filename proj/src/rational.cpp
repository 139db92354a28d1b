#include "degen/rational.hpp"

#include "degen/errors.hpp"

#include <cctype>

namespace degen {

double to_double(const Rational& q) { return q.convert_to<double>(); }

double to_double(const Value& v) {
    return is_exact(v) ? to_double(exact(v)) : std::get<double>(v);
}

std::string to_string(const Rational& q) {
    const Integer num = numerator(q);
    const Integer den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

bool parse_integer(const std::string& s, Integer& out) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (std::size_t j = i; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
    out = Integer(s);
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    Integer num, den = 1;
    if (slash == std::string::npos) {
        if (!parse_integer(text, num)) throw DomainError("not a rational literal: '" + text + "'");
    } else {
        if (!parse_integer(text.substr(0, slash), num) ||
            !parse_integer(text.substr(slash + 1), den))
            throw DomainError("not a rational literal: '" + text + "'");
        if (den == 0) throw DomainError("zero denominator in '" + text + "'");
    }
    return Rational(num, den);
}

Rational pow_int(const Rational& base, long long exponent) {
    if (exponent == 0) return Rational(1);
    if (exponent < 0) {
        if (base == 0) throw DomainError("0 raised to a negative power");
        return pow_int(Rational(1) / base, -exponent);
    }
    Rational acc(1), b = base;
    unsigned long long e = static_cast<unsigned long long>(exponent);
    while (e > 0) {
        if (e & 1ULL) acc *= b;
        b *= b;
        e >>= 1ULL;
    }
    return acc;
}

Integer factorial(Index n) {
    Integer f(1);
    for (Index i = 2; i <= n; ++i) f *= i;
    return f;
}

Rational binomial(Index n, Index k) {
    if (k > n) return Rational(0);
    if (k > n - k) k = n - k;
    Integer num(1), den(1);
    for (Index i = 0; i < k; ++i) {
        num *= (n - i);
        den *= (i + 1);
    }
    return Rational(num, den);
}

Rational binomial_checked(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return Rational(0);
    return binomial(static_cast<Index>(n), static_cast<Index>(k));
}

bool terminating_horizon(const Rational& n, const Rational& lambda, Index& horizon_out) {
    if (n == 0) {
        horizon_out = 0;
        return true;
    }
    if (lambda == 0) return false;
    const Rational ratio = n / lambda;
    if (ratio < 0 || denominator(ratio) != 1) return false;
    horizon_out = numerator(ratio).convert_to<Index>();
    return true;
}

} // namespace degen
