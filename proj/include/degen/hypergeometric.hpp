#ifndef DEGEN_HYPERGEOMETRIC_HPP
#define DEGEN_HYPERGEOMETRIC_HPP

#include "degen/rational.hpp"

#include <utility>
#include <vector>

namespace degen {

// Evaluation contract for infinite series: Exact demands termination and
// returns a Rational; Numeric sums doubles until two consecutive terms drop
// below tol relative to the partial sum (a single small term is unsafe for
// alternating series), capped at max_terms.
struct EvalMode {
    enum class Kind { Exact, Numeric };
    Kind kind = Kind::Exact;
    double tol = 1e-12;
    Index max_terms = 10000;
    bool two_term_stop = true;

    static EvalMode exact() { return {}; }
    static EvalMode numeric(double tol = 1e-12, Index max_terms = 10000) {
        return {Kind::Numeric, tol, max_terms, true};
    }
    bool is_exact() const { return kind == Kind::Exact; }
};

// Parameters of the degenerate generalized hypergeometric series
// sum_k (prod <a_i>_{k,lambda} / prod <b_j>_{k,lambda}) z^k / k!.
// lambda == 1 is the classical function.
struct HyperParams {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
    Rational z;
    Rational lambda;
};

// Series evaluation. Upper parameters equal to a lower parameter cancel
// exactly before summation; a pure (1,0) remainder is evaluated through the
// closed form (1 - lambda z)^{-a/lambda}, which extends the series beyond
// |z| < 1 (and is what makes boundary arguments like z = -1 meaningful).
// Zero numerator factors terminate the series before a zero denominator
// factor can raise LowerParamPole.
Value hyper_deg_general(const HyperParams& params, const EvalMode& mode);

// Right-hand side of the z = 1/lambda summation:
// Gamma(c/l) Gamma((c-a-b)/l) / (Gamma((c-b)/l) Gamma((c-a)/l)).
// All four Gamma arguments must be strictly positive.
double gauss_value_deg(const Rational& a, const Rational& b, const Rational& c,
                       const Rational& lambda);

// Integral representation of F_lambda(a,b;c;z): Beta-normalized integral of
// t^{b/l-1} (1-t)^{(c-b)/l-1} (1-lambda t z)^{-a/l} over [0,1] by
// Gauss-Legendre quadrature. Requires b/l >= 1 and (c-b)/l >= 1 (regular
// endpoints) and no pole of the last factor on the path.
double euler_integral_deg(const Rational& a, const Rational& b, const Rational& c, double z,
                          const Rational& lambda);

// Both sides of the central summation: first the series
// sum_k lambda^{-2k} binom(n,k)_lambda^2 (exact when n/lambda is a
// non-negative integer), second the Gamma expression (2 lambda / n)
// Gamma(2n/lambda) / Gamma(n/lambda)^2.
std::pair<Value, double> central_sum_deg(Index n, const Rational& lambda, const EvalMode& mode);

} // namespace degen

#endif
