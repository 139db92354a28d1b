#ifndef DEGEN_SERIES_HPP
#define DEGEN_SERIES_HPP

#include "degen/rational.hpp"

#include <vector>

namespace degen {

// Exact prefix of a formal power series: coefficients c_0..c_N of t^0..t^N,
// representing sum c_i t^i + O(t^{N+1}). Arithmetic truncates to the smaller
// operand order, so a result's order always states what is actually known.
class TruncatedSeries {
public:
    explicit TruncatedSeries(Index order) : coeffs_(order + 1, Rational(0)) {}
    TruncatedSeries(Index order, std::vector<Rational> coeffs);

    static TruncatedSeries constant(const Rational& c, Index order);
    // t itself, as a series of the given order (order >= 1).
    static TruncatedSeries identity(Index order);

    Index order() const { return static_cast<Index>(coeffs_.size() - 1); }
    const Rational& coeff(Index i) const { return coeffs_[i]; }
    void set_coeff(Index i, const Rational& v) { coeffs_[i] = v; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    // n! * c_n, i.e. a_n of sum a_n t^n / n!. Throws OrderExceeded past the
    // truncation order.
    Rational egf_coefficient(Index n) const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const Rational& scalar);

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) { return a *= s; }
    friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) { return a *= s; }

    bool operator==(const TruncatedSeries& rhs) const = default;

    // Non-negative integer power; keeps the operand's order.
    TruncatedSeries pow(Index exponent) const;

    // this(inner(t)); inner must have zero constant term
    // (throws NonzeroInnerConstant otherwise).
    TruncatedSeries compose(const TruncatedSeries& inner) const;

private:
    void truncate_to(Index order);
    std::vector<Rational> coeffs_;
};

// e_lambda^x(t) = (1 + lambda t)^{x/lambda} as an exact prefix: coefficient i
// is (x)_{i,lambda} / i!. lambda == 0 gives the plain exponential e^{xt}.
TruncatedSeries deg_exp_series(const Rational& x, const Rational& lambda, Index order);

} // namespace degen

#endif
