#ifndef DEGEN_GF_ORACLE_HPP
#define DEGEN_GF_ORACLE_HPP

#include "degen/rational.hpp"
#include "degen/series.hpp"

namespace degen {

// The generating functions the library's number families are defined by.
// Each descriptor names one definition; building it in the truncated ring and
// reading off EGF coefficients is the oracle the closed forms are checked
// against. The builders deliberately follow the defining expressions
// (hypergeometric term ratios, integer powers of kernels) rather than the
// simplified coefficient formulas, so the two routes stay independent.
enum class GfFamily {
    S2Deg,         // (e_lambda(t)-1)^k / k!
    S1Deg,         // (((1+t)^lambda - 1)/lambda)^k / k!
    QLambda,       // F_lambda(-n,-n; lambda; lambda e_lambda(t)), order-2 sum
    HLambda,       // (1 + lambda e_lambda(t))^{n/lambda}
    BellPoly,      // e_lambda^x(e_lambda(t) - 1)
    BellBivariate, // e_lambda^x(y (e_lambda(t) - 1))
    HOrderP,       // degenerate order-p sum: sum_k binom(n,k)_lambda^p e_lambda^k(t)
    HLamOrderP,    // sum_k C(n,k)^p e_lambda^k(t)
    TLamOrderP,    // sum_k (-1)^k C(n,k)^p e_lambda^k(t)
    TApostol,      // sum_k (-1)^k lambda1^k C(n,k)^p e_lambda^k(t)
    ApostolS2,     // (lambda1 e^t - 1)^k / k!
};

struct GfDescriptor {
    GfFamily family;
    Index n = 0;       // the (sometimes notationally suppressed) row index
    Index k = 0;       // kernel power for the Stirling-type kernels
    Index p = 1;       // order
    Rational lambda = 0;
    Rational lambda1 = 1;
    Rational x = 0; // Bell argument
    Rational y = 1; // Bell second argument
};

// Exact prefix of the described generating function. Throws NonTerminating
// for the lambda-binomial families when n/lambda is not a non-negative
// integer (the k-sum would not be a finite series object).
TruncatedSeries gf_build(const GfDescriptor& d, Index order);

// n-th EGF coefficient of the described generating function. Orders default
// to max(n, 16).
Rational gf_extract(const GfDescriptor& d, Index n);

} // namespace degen

#endif
