#include "degen/hypergeometric.hpp"

#include "degen/errors.hpp"
#include "degen/gamma.hpp"
#include "degen/quadrature.hpp"
#include "degen/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace degen {

namespace {

// Smallest k at which <a>_{k,lambda} picks up a zero factor, if any:
// a == -j lambda with integer j >= 0 kills terms k > j.
bool vanishing_index(const Rational& a, const Rational& lambda, Index& out) {
    if (a == 0) {
        out = 0;
        return true;
    }
    if (lambda == 0) return false;
    const Rational j = -a / lambda;
    if (j < 0 || denominator(j) != 1) return false;
    out = numerator(j).convert_to<Index>();
    return true;
}

// Remove upper/lower pairs that are exactly equal; their term ratios cancel
// identically at every k.
void cancel_params(std::vector<Rational>& upper, std::vector<Rational>& lower) {
    for (auto u = upper.begin(); u != upper.end();) {
        auto l = std::find(lower.begin(), lower.end(), *u);
        if (l != lower.end()) {
            lower.erase(l);
            u = upper.erase(u);
        } else {
            ++u;
        }
    }
}

Value one_f_zero(const Rational& a, const Rational& z, const Rational& lambda,
                 const EvalMode& mode) {
    if (lambda == 0) {
        // sum a^k z^k / k! = e^{az}
        if (mode.is_exact()) {
            if (a == 0 || z == 0) return Value(Rational(1));
            throw NonTerminatingExact("1F0 with lambda = 0 does not terminate");
        }
        return Value(std::exp(to_double(a) * to_double(z)));
    }
    const Rational base = Rational(1) - lambda * z;
    const Rational exponent = -a / lambda;
    if (mode.is_exact()) {
        if (denominator(exponent) != 1)
            throw NonTerminatingExact("1F0 exponent -a/lambda = " + to_string(exponent) +
                                      " is not an integer");
        if (base == 0) {
            if (exponent > 0) return Value(Rational(0));
            if (exponent == 0) return Value(Rational(1));
            throw DomainError("1F0 pole: 1 - lambda z = 0 with negative exponent");
        }
        return Value(pow_int(base, numerator(exponent).convert_to<long long>()));
    }
    const double b = to_double(base);
    const double e = to_double(exponent);
    if (b > 0.0) return Value(std::pow(b, e));
    if (b == 0.0) {
        if (e > 0.0) return Value(0.0);
        throw DomainError("1F0 pole: 1 - lambda z = 0");
    }
    if (denominator(exponent) == 1)
        return Value(std::pow(std::abs(b), e) *
                     ((numerator(exponent) % 2 == 0) ? 1.0 : -1.0));
    throw DomainError("1F0 with negative base and non-integer exponent");
}

Rational sum_exact(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                   const Rational& z, const Rational& lambda) {
    Rational sum(1), term(1);
    for (Index k = 1;; ++k) {
        Rational num(1), den(1);
        const Rational offset = Rational(k - 1) * lambda;
        for (const auto& a : upper) num *= a + offset;
        if (num == 0) break; // terminated before any pole can matter
        for (const auto& b : lower) den *= b + offset;
        if (den == 0)
            throw LowerParamPole("lower parameter hits zero at k = " + std::to_string(k));
        term *= num / den * z / Rational(k);
        sum += term;
    }
    return sum;
}

double sum_numeric(const std::vector<Rational>& upper, const std::vector<Rational>& lower,
                   const Rational& z_rat, const Rational& lambda_rat, const EvalMode& mode) {
    std::vector<double> up(upper.size()), lo(lower.size());
    for (std::size_t i = 0; i < upper.size(); ++i) up[i] = to_double(upper[i]);
    for (std::size_t i = 0; i < lower.size(); ++i) lo[i] = to_double(lower[i]);
    const double z = to_double(z_rat);
    const double lambda = to_double(lambda_rat);

    double sum = 1.0, term = 1.0;
    Index small_streak = 0, growth_streak = 0;
    double prev_abs = 1.0;
    for (Index k = 1; k <= mode.max_terms; ++k) {
        // Zero numerator factors are decided exactly, not in floating point.
        {
            Rational num(1);
            const Rational offset = Rational(k - 1) * lambda_rat;
            for (const auto& a : upper) num *= a + offset;
            if (num == 0) return sum;
        }
        double num = 1.0, den = 1.0;
        const double offset = (k - 1) * lambda;
        for (double a : up) num *= a + offset;
        for (double b : lo) den *= b + offset;
        if (den == 0.0)
            throw LowerParamPole("lower parameter hits zero at k = " + std::to_string(k));
        term *= num / den * z / k;
        sum += term;

        const double abs_term = std::abs(term);
        if (abs_term < mode.tol * std::max(std::abs(sum), 1e-300)) {
            if (++small_streak >= (mode.two_term_stop ? 2u : 1u)) return sum;
        } else {
            small_streak = 0;
        }
        growth_streak = (abs_term >= prev_abs && abs_term > std::abs(sum)) ? growth_streak + 1 : 0;
        if (growth_streak >= 50)
            throw NoConvergence("term magnitudes keep growing (ratio >= 1)");
        prev_abs = abs_term;
    }
    throw NoConvergence("series did not settle within " + std::to_string(mode.max_terms) +
                        " terms");
}

} // namespace

Value hyper_deg_general(const HyperParams& params, const EvalMode& mode) {
    std::vector<Rational> upper = params.upper;
    std::vector<Rational> lower = params.lower;
    cancel_params(upper, lower);

    if (upper.size() == 1 && lower.empty())
        return one_f_zero(upper[0], params.z, params.lambda, mode);

    if (mode.is_exact()) {
        bool terminates = false;
        for (const auto& a : upper) {
            Index unused = 0;
            if (vanishing_index(a, params.lambda, unused)) {
                terminates = true;
                break;
            }
        }
        if (params.z == 0) terminates = true;
        if (!terminates)
            throw NonTerminatingExact("no upper parameter in {0, -lambda, -2 lambda, ...}");
        if (params.z == 0) return Value(Rational(1));
        return Value(sum_exact(upper, lower, params.z, params.lambda));
    }
    return Value(sum_numeric(upper, lower, params.z, params.lambda, mode));
}

double gauss_value_deg(const Rational& a, const Rational& b, const Rational& c,
                       const Rational& lambda) {
    if (lambda <= 0) throw DomainError("gauss_value_deg requires lambda > 0");
    const Rational args[4] = {c / lambda, (c - a - b) / lambda, (c - b) / lambda,
                              (c - a) / lambda};
    for (const auto& arg : args)
        if (arg <= 0)
            throw DomainError("Gamma argument " + to_string(arg) + " is not positive");
    return gamma_real(to_double(args[0])) * gamma_real(to_double(args[1])) /
           (gamma_real(to_double(args[2])) * gamma_real(to_double(args[3])));
}

double euler_integral_deg(const Rational& a, const Rational& b, const Rational& c, double z,
                          const Rational& lambda) {
    if (lambda == 0) throw DomainError("euler_integral_deg requires lambda != 0");
    const double bl = to_double(b / lambda);
    const double cbl = to_double((c - b) / lambda);
    if (bl < 1.0 || cbl < 1.0)
        throw EndpointSingularity("need b/lambda >= 1 and (c-b)/lambda >= 1");
    const double lz = to_double(lambda) * z;
    if (lz >= 1.0) throw PoleOnPath("1 - lambda t z vanishes on [0,1]");
    const double al = to_double(a / lambda);
    const double cl = to_double(c / lambda);
    const double prefactor = gamma_real(cl) / (gamma_real(bl) * gamma_real(cbl));
    const double integral = integrate(
        [&](double t) {
            return std::pow(t, bl - 1.0) * std::pow(1.0 - t, cbl - 1.0) *
                   std::pow(1.0 - lz * t, -al);
        },
        0.0, 1.0);
    return prefactor * integral;
}

std::pair<Value, double> central_sum_deg(Index n, const Rational& lambda, const EvalMode& mode) {
    if (lambda <= 0) throw DomainError("central_sum_deg requires lambda > 0");
    if (n == 0) throw DomainError("central_sum_deg requires n >= 1");
    const Rational neg_n = Rational(-static_cast<long long>(n));
    const HyperParams params{{neg_n, neg_n}, {lambda}, Rational(1) / lambda, lambda};
    const Value lhs = hyper_deg_general(params, mode);
    const double nl = to_double(Rational(n) / lambda);
    const double rhs =
        2.0 * to_double(lambda) / n * gamma_real(2.0 * nl) / std::pow(gamma_real(nl), 2);
    return {lhs, rhs};
}

} // namespace degen
