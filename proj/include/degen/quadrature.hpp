#ifndef DEGEN_QUADRATURE_HPP
#define DEGEN_QUADRATURE_HPP

#include <functional>

namespace degen {

// Integral of f over [a, b] by 64-point Gauss-Legendre composite over
// 8 equal panels. The node table is computed once and immutable.
double integrate(const std::function<double(double)>& f, double a, double b);

} // namespace degen

#endif
