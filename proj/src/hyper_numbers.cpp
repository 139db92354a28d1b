#include "degen/hyper_numbers.hpp"

#include "degen/errors.hpp"
#include "degen/sequences.hpp"
#include "degen/stirling.hpp"
#include "degen/bell.hpp"

#include <cmath>
#include <string>

namespace degen {

namespace {

Index require_horizon(Index n, const Rational& lambda, const char* who) {
    Index horizon = 0;
    if (!terminating_horizon(Rational(n), lambda, horizon))
        throw NonRationalPower(std::string(who) + ": n/lambda is not a non-negative integer (n=" +
                               std::to_string(n) + ", lambda=" + to_string(lambda) + ")");
    return horizon;
}

// Exact finite sum over the terminating row.
Rational series_exact(Index n, Index m, Index p, const Rational& lambda, bool alternating,
                      bool weight_falling) {
    Index horizon = 0;
    if (!terminating_horizon(Rational(n), lambda, horizon))
        throw NonTerminatingExact("n/lambda is not a non-negative integer (n=" +
                                  std::to_string(n) + ", lambda=" + to_string(lambda) + ")");
    Rational sum(0);
    Rational binom(1); // binom(n,k)_lambda, updated incrementally
    for (Index k = 0; k <= horizon; ++k) {
        if (k > 0) binom *= (Rational(n) - Rational(k - 1) * lambda) / Rational(k);
        Rational term = pow_int(binom, p);
        if (weight_falling) term *= falling_lambda(Rational(k), m, lambda);
        if (alternating && k % 2 == 1) term = -term;
        sum += term;
    }
    return sum;
}

// Numeric sum in doubles; terms decay like lambda^{pk} k^m for
// 0 < lambda < 1.
double series_numeric(Index n, Index m, Index p, const Rational& lambda_rat, bool alternating,
                      bool weight_falling, const EvalMode& mode) {
    Index horizon = 0;
    const bool terminating = terminating_horizon(Rational(n), lambda_rat, horizon);
    if (!terminating && !(lambda_rat > 0 && lambda_rat < 1))
        throw DomainError("numeric mode needs 0 < lambda < 1 for a non-terminating row");

    const double lambda = to_double(lambda_rat);
    double sum = 0.0, binom = 1.0;
    Index small_streak = 0;
    for (Index k = 0; k <= mode.max_terms; ++k) {
        if (terminating && k > horizon) return sum;
        if (k > 0) binom *= (n - (k - 1) * lambda) / k;
        double term = std::pow(binom, static_cast<int>(p));
        if (weight_falling)
            for (Index i = 0; i < m; ++i) term *= (k - i * lambda);
        if (alternating && k % 2 == 1) term = -term;
        sum += term;
        if (std::abs(term) < mode.tol * std::max(std::abs(sum), 1e-300)) {
            if (++small_streak >= (mode.two_term_stop ? 2u : 1u)) return sum;
        } else {
            small_streak = 0;
        }
    }
    throw NoConvergence("series did not settle within " + std::to_string(mode.max_terms) +
                        " terms");
}

Value series_value(Index n, Index m, Index p, const Rational& lambda, bool alternating,
                   bool weight_falling, const EvalMode& mode) {
    if (mode.is_exact())
        return Value(series_exact(n, m, p, lambda, alternating, weight_falling));
    return Value(series_numeric(n, m, p, lambda, alternating, weight_falling, mode));
}

} // namespace

Value h_p_series(Index n, Index m, Index p, const Rational& lambda, const EvalMode& mode) {
    return series_value(n, m, p, lambda, false, true, mode);
}

Value alt_power_sum(Index n, Index p, const Rational& lambda, const EvalMode& mode) {
    return series_value(n, 0, p, lambda, true, false, mode);
}

Rational h_stirling_double_sum(Index n, Index m, Index p, const Rational& lambda) {
    const Index horizon = require_horizon(n, lambda, "h_stirling_double_sum");
    Rational sum(0);
    Rational binom(1);
    for (Index k = 0; k <= horizon; ++k) {
        if (k > 0) binom *= (Rational(n) - Rational(k - 1) * lambda) / Rational(k);
        const Rational bp = pow_int(binom, p);
        if (bp == 0) continue;
        const Index l_max = std::min<Index>(k, m);
        Rational inner(0);
        for (Index l = 0; l <= l_max; ++l)
            inner += falling_lambda(Rational(k), l, Rational(1)) * s2_deg(m, l, lambda);
        sum += bp * inner;
    }
    return sum;
}

Rational h_stirling_form(Index n, Index m, Index p, const Rational& lambda) {
    if (p >= 2) return h_stirling_double_sum(n, m, p, lambda);
    const Index horizon = require_horizon(n, lambda, "h_stirling_form");
    if (lambda == -1) throw DomainError("h_stirling_form requires lambda != -1");
    const Rational base = Rational(1) + lambda;
    const Rational inv = Rational(1) / base;
    Rational sum(0);
    for (Index k = 0; k <= m; ++k)
        sum += falling_lambda(Rational(n), k, lambda) * pow_int(inv, k) * s2_deg(m, k, lambda);
    return pow_int(base, horizon) * sum;
}

Rational h_bell_form(Index n, Index m, const Rational& lambda) {
    const Index horizon = require_horizon(n, lambda, "h_bell_form");
    if (lambda == -1) throw DomainError("h_bell_form requires lambda != -1");
    const Rational base = Rational(1) + lambda;
    return pow_int(base, horizon) *
           bell_deg_bivariate(m, Rational(n), Rational(1) / base, lambda);
}

Rational h_low_closed(Index n, Index m, const Rational& lambda) {
    const Index horizon = require_horizon(n, lambda, "h_low_closed");
    if (lambda == -1) throw DomainError("h_low_closed requires lambda != -1");
    const Rational base = Rational(1) + lambda;
    const long long h = static_cast<long long>(horizon);
    const Rational nn(n);
    switch (m) {
    case 1:
        return nn * pow_int(base, h - 1);
    case 2:
        // derivation-chain coefficient, not the misprinted (n + 1 - 2 lambda)
        return nn * (nn + 1 - lambda - lambda * lambda) * pow_int(base, h - 2);
    case 3:
        return falling_lambda(nn, 3, lambda) * pow_int(base, h - 3) +
               Rational(3) * (Rational(1) - lambda) * falling_lambda(nn, 2, lambda) *
                   pow_int(base, h - 2) +
               (Rational(1) - lambda) * (Rational(1) - 2 * lambda) * nn * pow_int(base, h - 1);
    default:
        throw UnsupportedM("closed forms exist for m in {1,2,3}, got m = " + std::to_string(m));
    }
}

Rational lambda_hyper_H(Index n, Index m, Index p, const Rational& lambda) {
    Rational sum(0);
    for (Index k = 0; k <= n; ++k)
        sum += pow_int(binomial(n, k), p) * falling_lambda(Rational(k), m, lambda);
    return sum;
}

Rational lambda_hyper_T(Index n, Index m, Index p, const Rational& lambda) {
    Rational sum(0);
    for (Index k = 0; k <= n; ++k) {
        Rational term = pow_int(binomial(n, k), p) * falling_lambda(Rational(k), m, lambda);
        if (k % 2 == 1) term = -term;
        sum += term;
    }
    return sum;
}

Rational t1_closed(Index n, Index m, const Rational& lambda) {
    if (m < n) return Rational(0);
    Rational v = Rational(factorial(n)) * s2_deg(m, n, lambda);
    if (n % 2 == 1) v = -v;
    return v;
}

ApostolPair apostol_T(Index n, Index m, const Rational& lambda, const Rational& lambda1) {
    Rational direct(0), stirling(0);
    for (Index j = 0; j <= n; ++j) {
        const Rational weight = binomial(n, j) * pow_int(lambda1, j) *
                                ((j % 2 == 1) ? Rational(-1) : Rational(1));
        direct += weight * falling_lambda(Rational(j), m, lambda);
        const Index l_max = std::min<Index>(j, m);
        Rational inner(0);
        for (Index l = 0; l <= l_max; ++l)
            inner += falling_lambda(Rational(j), l, Rational(1)) * s2_deg(m, l, lambda);
        stirling += weight * inner;
    }
    return {direct, stirling};
}

Rational apostol_H(Index n, Index m, Index p, const Rational& lambda, const Rational& lambda1) {
    Rational sum(0);
    Rational l1pow(1);
    for (Index k = 0; k <= n; ++k) {
        sum += pow_int(binomial(n, k), p) * l1pow * falling_lambda(Rational(k), m, lambda);
        l1pow *= lambda1;
    }
    return sum;
}

Rational golombek_B_deg(Index n, Index k, const Rational& lambda) {
    if (n == 0 || k == 0)
        throw DomainError("golombek_B_deg requires n >= 1 and k >= 1");
    Rational sum(0);
    for (Index j = 1; j <= k; ++j)
        sum += binomial(k, j) * falling_lambda(Rational(j), n, lambda);
    return sum;
}

} // namespace degen
