#include "degen/gf_oracle.hpp"

#include "degen/errors.hpp"
#include "degen/sequences.hpp"

#include <algorithm>

namespace degen {

namespace {

// Kernel of the degenerate Stirling numbers of the first kind,
// ((1+t)^lambda - 1)/lambda. Coefficient j >= 1 is
// (lambda-1)(lambda-2)...(lambda-(j-1)) / j!, a polynomial in lambda, so the
// lambda -> 0 limit (the log(1+t) kernel) is an ordinary evaluation.
TruncatedSeries s1_kernel(const Rational& lambda, Index order) {
    TruncatedSeries s(order);
    Rational c(1);
    for (Index j = 1; j <= order; ++j) {
        c /= Rational(j);
        s.set_coeff(j, c);
        c *= (lambda - Rational(j));
    }
    return s;
}

// sum_k w_k e_lambda^k(t) for weights w_k, accumulated with a running power
// of e_lambda.
TruncatedSeries weighted_exp_sum(const std::vector<Rational>& weights, const Rational& lambda,
                                 Index order) {
    const TruncatedSeries e = deg_exp_series(Rational(1), lambda, order);
    TruncatedSeries acc(order);
    TruncatedSeries power = TruncatedSeries::constant(Rational(1), order);
    for (Index k = 0; k < weights.size(); ++k) {
        if (k > 0) power = power * e;
        if (weights[k] != 0) acc += weights[k] * power;
    }
    return acc;
}

// Weights of the degenerate hypergeometric sum of order p at argument
// z0 * e_lambda(t), z0 = (-1)^p lambda^{p-1}:
//   w_k = <-n>_{k,lambda}^p z0^k / (<lambda>_{k,lambda}^{p-1} k!),
// taken verbatim from the defining series. Requires a terminating row.
std::vector<Rational> deg_hyper_weights(Index n, Index p, const Rational& lambda) {
    Index horizon = 0;
    if (!terminating_horizon(Rational(n), lambda, horizon))
        throw NonTerminating("n/lambda is not a non-negative integer (n=" + std::to_string(n) +
                             ", lambda=" + to_string(lambda) + ")");
    Rational z0 = pow_int(lambda, static_cast<long long>(p) - 1);
    if (p % 2 == 1) z0 = -z0;
    std::vector<Rational> w(horizon + 1);
    for (Index k = 0; k <= horizon; ++k) {
        const Rational num = pow_int(rising_lambda(Rational(-static_cast<long long>(n)), k, lambda),
                                     static_cast<long long>(p));
        const Rational den = pow_int(rising_lambda(lambda, k, lambda), static_cast<long long>(p) - 1) *
                             Rational(factorial(k));
        w[k] = num / den * pow_int(z0, k);
    }
    return w;
}

// Classical F^{(p,p-1)}(-n,...,-n; 1,...,1; z0 e_lambda(t)) weights,
//   w_k = <-n>_k^p z0^k / (<1>_k^{p-1} k!).
std::vector<Rational> classical_hyper_weights(Index n, Index p, const Rational& z0) {
    std::vector<Rational> w(n + 1);
    for (Index k = 0; k <= n; ++k) {
        const Rational num = pow_int(rising_lambda(Rational(-static_cast<long long>(n)), k, Rational(1)),
                                     static_cast<long long>(p));
        const Rational den = pow_int(Rational(factorial(k)), static_cast<long long>(p) - 1) *
                             Rational(factorial(k));
        w[k] = num / den * pow_int(z0, k);
    }
    return w;
}

// (-1)^p for the H-type arguments, (-1)^{p-1} for the alternating T-type.
Rational sign_pow(Index p) { return (p % 2 == 0) ? Rational(1) : Rational(-1); }

} // namespace

TruncatedSeries gf_build(const GfDescriptor& d, Index order) {
    switch (d.family) {
    case GfFamily::S2Deg: {
        TruncatedSeries kernel = deg_exp_series(Rational(1), d.lambda, order);
        kernel.set_coeff(0, Rational(0)); // e_lambda(t) - 1
        return kernel.pow(d.k) * (Rational(1) / Rational(factorial(d.k)));
    }
    case GfFamily::S1Deg:
        return s1_kernel(d.lambda, order).pow(d.k) * (Rational(1) / Rational(factorial(d.k)));
    case GfFamily::QLambda:
        return weighted_exp_sum(deg_hyper_weights(d.n, 2, d.lambda), d.lambda, order);
    case GfFamily::HLambda: {
        Index horizon = 0;
        if (!terminating_horizon(Rational(d.n), d.lambda, horizon))
            throw NonTerminating("n/lambda not a non-negative integer");
        const TruncatedSeries base =
            TruncatedSeries::constant(Rational(1), order) +
            d.lambda * deg_exp_series(Rational(1), d.lambda, order);
        return base.pow(horizon);
    }
    case GfFamily::BellPoly: {
        TruncatedSeries inner = deg_exp_series(Rational(1), d.lambda, order);
        inner.set_coeff(0, Rational(0));
        return deg_exp_series(d.x, d.lambda, order).compose(inner);
    }
    case GfFamily::BellBivariate: {
        TruncatedSeries inner = deg_exp_series(Rational(1), d.lambda, order);
        inner.set_coeff(0, Rational(0));
        inner *= d.y;
        return deg_exp_series(d.x, d.lambda, order).compose(inner);
    }
    case GfFamily::HOrderP:
        return weighted_exp_sum(deg_hyper_weights(d.n, d.p, d.lambda), d.lambda, order);
    case GfFamily::HLamOrderP:
        return weighted_exp_sum(classical_hyper_weights(d.n, d.p, sign_pow(d.p)), d.lambda, order);
    case GfFamily::TLamOrderP:
        return weighted_exp_sum(classical_hyper_weights(d.n, d.p, -sign_pow(d.p)), d.lambda, order);
    case GfFamily::TApostol:
        return weighted_exp_sum(classical_hyper_weights(d.n, d.p, -sign_pow(d.p) * d.lambda1),
                                d.lambda, order);
    case GfFamily::ApostolS2: {
        TruncatedSeries base = d.lambda1 * deg_exp_series(Rational(1), Rational(0), order);
        base.set_coeff(0, d.lambda1 - 1); // lambda1 e^t - 1
        return base.pow(d.k) * (Rational(1) / Rational(factorial(d.k)));
    }
    }
    throw DomainError("unknown generating-function family");
}

Rational gf_extract(const GfDescriptor& d, Index n) {
    return gf_build(d, std::max<Index>(n, 16)).egf_coefficient(n);
}

} // namespace degen
