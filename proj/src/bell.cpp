#include "degen/bell.hpp"

#include "degen/sequences.hpp"
#include "degen/stirling.hpp"

namespace degen {

Rational bell_deg(Index n, const Rational& x, const Rational& lambda) {
    return bell_deg_bivariate(n, x, Rational(1), lambda);
}

Rational bell_deg_bivariate(Index n, const Rational& x, const Rational& y,
                            const Rational& lambda) {
    Rational sum(0);
    Rational ypow(1);
    for (Index k = 0; k <= n; ++k) {
        sum += falling_lambda(x, k, lambda) * ypow * s2_deg(n, k, lambda);
        ypow *= y;
    }
    return sum;
}

} // namespace degen
