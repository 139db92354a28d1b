#ifndef DEGEN_STIRLING_HPP
#define DEGEN_STIRLING_HPP

#include "degen/rational.hpp"

namespace degen {

// Classical Stirling numbers: S2 partitions x^n into falling factorials,
// S1 (signed) expands (x)_n into powers of x.
Rational s2_classical(Index n, Index k);
Rational s1_classical(Index n, Index k);

// Degenerate Stirling number of the second kind, computed by the explicit
// alternating sum (1/k!) sum_j (-1)^{k-j} C(k,j) (j)_{n,lambda}; the
// generating-function route in gf_oracle is kept as an independent check.
Rational s2_deg(Index n, Index k, const Rational& lambda);

// Degenerate Stirling number of the first kind: n-th EGF coefficient of
// (((1+t)^lambda - 1)/lambda)^k / k!. lambda == 0 evaluates the log(1+t)
// kernel and recovers the classical numbers.
Rational s1_deg(Index n, Index k, const Rational& lambda);

// Apostol-Stirling number S(m, n | lambda1) of (lambda1 e^t - 1)^n / n!,
// by the explicit sum ((-1)^n / n!) sum_j C(n,j) lambda1^j (-1)^j j^m.
// Unlike the classical kind these do not vanish for m < n.
Rational apostol_s2(Index m, Index n, const Rational& lambda1);

} // namespace degen

#endif
