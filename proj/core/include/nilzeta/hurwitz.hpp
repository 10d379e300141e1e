#pragma once

#include <complex>

namespace nilzeta {

/// zeta(s, a) = sum_{k>=0} (k + a)^{-s} for complex s != 1 and real a > 0,
/// by Euler-Maclaurin summation (direct terms, integral, Bernoulli tail).
std::complex<double> hurwitz_zeta(std::complex<double> s, double a);

}  // namespace nilzeta
