#ifndef DEGEN_HYPER_NUMBERS_HPP
#define DEGEN_HYPER_NUMBERS_HPP

#include "degen/hypergeometric.hpp"
#include "degen/rational.hpp"

#include <utility>

namespace degen {

// sum_k binom(n,k)_lambda^p (k)_{m,lambda}. Exact mode needs a terminating
// row (n/lambda a non-negative integer); Numeric mode needs 0 < lambda < 1
// unless the row terminates anyway. p == 1 is the plain family, p == 2 the
// squared-coefficient one.
Value h_p_series(Index n, Index m, Index p, const Rational& lambda, const EvalMode& mode);

// Finite Stirling representation: for p == 1 the closed form
// (1+lambda)^{n/lambda} sum_k (n)_{k,lambda} (1+lambda)^{-k} S_{2,lambda}(m,k);
// for p >= 2 the double sum over binom^p (k)_l S_{2,lambda}(m,l).
// Throws NonRationalPower when n/lambda is not a non-negative integer.
Rational h_stirling_form(Index n, Index m, Index p, const Rational& lambda);

// The double-sum representation for any p >= 1 (the p == 1 instance of the
// same expansion h_stirling_form uses for p >= 2).
Rational h_stirling_double_sum(Index n, Index m, Index p, const Rational& lambda);

// (1+lambda)^{n/lambda} Bel_{m,lambda}(n, 1/(1+lambda)).
Rational h_bell_form(Index n, Index m, const Rational& lambda);

// Closed forms for m = 1, 2, 3 (m = 2 carries the corrected coefficient
// n + 1 - lambda - lambda^2). UnsupportedM otherwise.
Rational h_low_closed(Index n, Index m, const Rational& lambda);

// sum_k (-1)^k binom(n,k)_lambda^p, same mode contract as h_p_series.
Value alt_power_sum(Index n, Index p, const Rational& lambda, const EvalMode& mode);

// Finite classical-binomial families, exact for any lambda:
// sum_{k<=n} C(n,k)^p (k)_{m,lambda} and its alternating companion.
Rational lambda_hyper_H(Index n, Index m, Index p, const Rational& lambda);
Rational lambda_hyper_T(Index n, Index m, Index p, const Rational& lambda);

// (-1)^n n! S_{2,lambda}(m,n) for m >= n, 0 below the diagonal; equals
// lambda_hyper_T(n, m, 1, lambda).
Rational t1_closed(Index n, Index m, const Rational& lambda);

// Apostol-weighted alternating family, returned in both of its
// representations (they must agree): the direct sum
// sum_j C(n,j) (-1)^j lambda1^j (j)_{m,lambda} and the Stirling expansion.
struct ApostolPair {
    Rational direct;
    Rational stirling_form;
};
ApostolPair apostol_T(Index n, Index m, const Rational& lambda, const Rational& lambda1);

// sum_k C(n,k)^p lambda1^k (k)_{m,lambda}.
Rational apostol_H(Index n, Index m, Index p, const Rational& lambda, const Rational& lambda1);

// sum_{j=1}^{k} C(k,j) (j)_{n,lambda}, the degenerate Golombek sum; n-th EGF
// coefficient of (e_lambda(t)+1)^k. Requires n >= 1 and k >= 1.
Rational golombek_B_deg(Index n, Index k, const Rational& lambda);

} // namespace degen

#endif
