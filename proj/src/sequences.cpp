#include "degen/sequences.hpp"

namespace degen {

Rational falling_lambda(const Rational& x, Index n, const Rational& lambda) {
    Rational prod(1);
    Rational factor = x;
    for (Index i = 0; i < n; ++i) {
        prod *= factor;
        if (prod == 0) return prod;
        factor -= lambda;
    }
    return prod;
}

Rational rising_lambda(const Rational& a, Index n, const Rational& lambda) {
    Rational prod(1);
    Rational factor = a;
    for (Index i = 0; i < n; ++i) {
        prod *= factor;
        if (prod == 0) return prod;
        factor += lambda;
    }
    return prod;
}

Rational lambda_binomial(const Rational& x, Index n, const Rational& lambda) {
    return falling_lambda(x, n, lambda) / Rational(factorial(n));
}

} // namespace degen
