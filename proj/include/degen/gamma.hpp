#ifndef DEGEN_GAMMA_HPP
#define DEGEN_GAMMA_HPP

namespace degen {

// Gamma function on the positive reals, Lanczos approximation (g = 7, 9
// coefficients) good to well past 12 significant digits on (0, 30]. Integer
// arguments up to 21 return the factorial exactly as a double. Throws
// DomainError for x <= 0 or non-finite x.
double gamma_real(double x);

} // namespace degen

#endif
