#ifndef DEGEN_RATIONAL_HPP
#define DEGEN_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <variant>

namespace degen {

// Exact arbitrary-precision rational scalar. cpp_rational keeps values
// canonical (lowest terms, positive denominator), which is exactly the
// contract the rest of the library relies on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using Index = unsigned int;

// A computed number: exact rational or floating point, depending on the
// evaluation mode that produced it.
using Value = std::variant<Rational, double>;

inline bool is_exact(const Value& v) { return std::holds_alternative<Rational>(v); }

inline const Rational& exact(const Value& v) { return std::get<Rational>(v); }

double to_double(const Rational& q);
double to_double(const Value& v);

// "p/q" with the "/q" omitted when q == 1.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q"; rejects zero denominators and anything else.
Rational parse_rational(const std::string& text);

// Exact integer power; negative exponents invert (base must be nonzero),
// 0^0 == 1.
Rational pow_int(const Rational& base, long long exponent);

Integer factorial(Index n);

// C(n, k) with k > n giving 0.
Rational binomial(Index n, Index k);

// C(n, k) that tolerates out-of-range k (k < 0 or k > n -> 0), as needed by
// sums indexed from -n to n.
Rational binomial_checked(long long n, long long k);

// n/lambda when it is a non-negative integer, i.e. the index past which
// (n)_{k,lambda} vanishes; nullopt otherwise (lambda == 0 qualifies only
// for n == 0).
bool terminating_horizon(const Rational& n, const Rational& lambda, Index& horizon_out);

} // namespace degen

#endif
