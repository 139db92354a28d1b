#include "degen/gamma.hpp"

#include "degen/errors.hpp"

#include <cmath>
#include <string>

namespace degen {

namespace {

// Godfrey's coefficients for g = 7.
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kFactorial[21] = {1.0,
                                   1.0,
                                   2.0,
                                   6.0,
                                   24.0,
                                   120.0,
                                   720.0,
                                   5040.0,
                                   40320.0,
                                   362880.0,
                                   3628800.0,
                                   39916800.0,
                                   479001600.0,
                                   6227020800.0,
                                   87178291200.0,
                                   1307674368000.0,
                                   20922789888000.0,
                                   355687428096000.0,
                                   6402373705728000.0,
                                   121645100408832000.0,
                                   2432902008176640000.0};

double lanczos(double x) {
    if (x < 0.5) return lanczos(x + 1.0) / x; // upward recurrence
    x -= 1.0;
    double a = kLanczos[0];
    const double t = x + 7.5;
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x + i);
    return std::sqrt(2.0 * M_PI) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

} // namespace

double gamma_real(double x) {
    if (!(x > 0.0)) throw DomainError("gamma_real requires x > 0, got " + std::to_string(x));
    if (x == std::floor(x) && x <= 21.0) return kFactorial[static_cast<int>(x) - 1];
    return lanczos(x);
}

} // namespace degen
