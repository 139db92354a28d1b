#ifndef DEGEN_BELL_HPP
#define DEGEN_BELL_HPP

#include "degen/rational.hpp"

namespace degen {

// Degenerate Bell polynomial Bel_{n,lambda}(x) = sum_k (x)_{k,lambda} S_{2,lambda}(n,k).
Rational bell_deg(Index n, const Rational& x, const Rational& lambda);

// Bivariate form sum_k (x)_{k,lambda} y^k S_{2,lambda}(n,k); y == 1 recovers
// bell_deg.
Rational bell_deg_bivariate(Index n, const Rational& x, const Rational& y, const Rational& lambda);

} // namespace degen

#endif
