#include "nilzeta/hurwitz.hpp"

#include <cmath>

#include "nilzeta/error.hpp"

namespace nilzeta {

namespace {

// B_{2j} / (2j)! for j = 1..12.
constexpr double kBernoulliOverFactorial[] = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -5.284190138687493e-10,
    1.3382536530684679e-11,
    -3.3896802963225827e-13,
    8.586062056277845e-15,
    -2.174868698558062e-16,
    5.5090028283602295e-18,
    -1.3954464685812522e-19,
};

}  // namespace

std::complex<double> hurwitz_zeta(std::complex<double> s, double a) {
  if (!(a > 0)) throw DomainError("hurwitz_zeta needs a > 0");
  if (std::abs(s - 1.0) == 0) throw DomainError("hurwitz_zeta has a pole at s = 1");
  // The Bernoulli remainder shrinks like |s + 2J|^{2J} / (2 pi (M+a))^{2J}. M stays small on
  // purpose: for Re s < 0 the direct sum and the tail cancel, and a long sum costs digits.
  const int direct = 12 + static_cast<int>(std::abs(s));
  std::complex<double> sum = 0;
  for (int k = 0; k < direct; ++k) sum += std::pow(std::complex<double>(k + a), -s);
  const double m = direct + a;
  const std::complex<double> ms = std::pow(std::complex<double>(m), -s);
  sum += m * ms / (s - 1.0) + 0.5 * ms;
  std::complex<double> rising = s;  // s (s+1) ... (s+2j-2)
  std::complex<double> mpow = ms / m;  // m^{-s-2j+1}
  for (int j = 0; j < 12; ++j) {
    const std::complex<double> term = kBernoulliOverFactorial[j] * rising * mpow;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    rising *= (s + double(2 * j + 1)) * (s + double(2 * j + 2));
    mpow /= m * m;
  }
  return sum;
}

}  // namespace nilzeta
