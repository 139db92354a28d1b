#ifndef DEGEN_SEQUENCES_HPP
#define DEGEN_SEQUENCES_HPP

#include "degen/rational.hpp"

namespace degen {

// (x)_{n,lambda} = x(x-lambda)...(x-(n-1)lambda), empty product for n == 0.
// lambda == 0 gives x^n; lambda == 1 the classical falling factorial.
Rational falling_lambda(const Rational& x, Index n, const Rational& lambda);

// <a>_{n,lambda} = a(a+lambda)...(a+(n-1)lambda).
Rational rising_lambda(const Rational& a, Index n, const Rational& lambda);

// (x)_{n,lambda} / n!; the classical binomial coefficient at lambda == 1,
// integer x >= 0.
Rational lambda_binomial(const Rational& x, Index n, const Rational& lambda);

} // namespace degen

#endif
