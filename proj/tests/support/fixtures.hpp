#pragma once

#include <random>
#include <string>
#include <vector>

#include "nilzeta/algebra.hpp"
#include "nilzeta/uea.hpp"

namespace fixture {

struct NamedSpec {
  std::string name;
  nilzeta::AlgebraPtr alg;
};

inline nilzeta::AlgebraPtr make(unsigned n, std::vector<unsigned> alpha, std::vector<std::vector<unsigned>> partition) {
  return nilzeta::Algebra::make({n, std::move(alpha), std::move(partition)});
}

inline nilzeta::AlgebraPtr heisenberg() { return make(1, {1}, {{1}}); }
inline nilzeta::AlgebraPtr quartic() { return make(1, {2}, {{1}}); }
inline nilzeta::AlgebraPtr cubic() { return make(1, {3}, {{1}}); }

/// The six algebras every exact property is checked on.
inline std::vector<NamedSpec> all_specs() {
  return {{"heisenberg", heisenberg()},
          {"quartic", quartic()},
          {"cubic", cubic()},
          {"split_11", make(2, {1, 1}, {{1}, {2}})},
          {"joint_11", make(2, {1, 1}, {{1, 2}})},
          {"split_12", make(2, {1, 2}, {{1}, {2}})}};
}

/// Random element with up to `terms` monomials of degree <= max_degree and
/// small Gaussian-integer coefficients.
inline nilzeta::UEAElement random_element(const nilzeta::AlgebraPtr& alg, unsigned max_degree, std::mt19937& rng,
                                          unsigned terms = 4) {
  const auto monos = nilzeta::monomials_up_to(*alg, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<long> coef(-3, 3);
  nilzeta::UEAElement u(alg);
  for (unsigned t = 0; t < terms; ++t) {
    nilzeta::GaussianRational c{nilzeta::Rational(coef(rng)), nilzeta::Rational(coef(rng))};
    u.add_term(monos[pick(rng)], c);
  }
  return u;
}

}  // namespace fixture
