#include "degen/series.hpp"

#include "degen/errors.hpp"
#include "degen/sequences.hpp"

#include <algorithm>
#include <utility>

namespace degen {

TruncatedSeries::TruncatedSeries(Index order, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, Rational(0));
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, Index order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::identity(Index order) {
    TruncatedSeries s(order);
    s.coeffs_[1] = 1;
    return s;
}

Rational TruncatedSeries::egf_coefficient(Index n) const {
    if (n > order())
        throw OrderExceeded("coefficient " + std::to_string(n) + " of a series of order " +
                            std::to_string(order()));
    return coeffs_[n] * Rational(factorial(n));
}

void TruncatedSeries::truncate_to(Index order) {
    if (order < this->order()) coeffs_.resize(order + 1);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    truncate_to(rhs.order());
    for (Index i = 0; i <= order(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    truncate_to(rhs.order());
    for (Index i = 0; i <= order(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }

TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const Index n = std::min(a.order(), b.order());
    TruncatedSeries out(n);
    for (Index i = 0; i <= n; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (Index j = 0; i + j <= n; ++j) {
            if (b.coeffs_[j] == 0) continue;
            out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return out;
}

TruncatedSeries TruncatedSeries::pow(Index exponent) const {
    TruncatedSeries acc = constant(Rational(1), order());
    TruncatedSeries base = *this;
    Index e = exponent;
    while (e > 0) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return acc;
}

TruncatedSeries TruncatedSeries::compose(const TruncatedSeries& inner) const {
    if (inner.coeff(0) != 0)
        throw NonzeroInnerConstant("inner series has constant term " + to_string(inner.coeff(0)));
    const Index n = std::min(order(), inner.order());
    // Horner in the truncated ring.
    TruncatedSeries result = constant(coeffs_[order()], n);
    for (Index i = order(); i-- > 0;) {
        result = result * inner;
        result.coeffs_[0] += coeffs_[i];
    }
    return result;
}

TruncatedSeries deg_exp_series(const Rational& x, const Rational& lambda, Index order) {
    TruncatedSeries s(order);
    Rational coeff(1);
    s.set_coeff(0, coeff);
    Rational factor = x;
    for (Index i = 1; i <= order; ++i) {
        coeff *= factor / Rational(i);
        s.set_coeff(i, coeff);
        if (coeff == 0) break;
        factor -= lambda;
    }
    return s;
}

} // namespace degen
