#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nilzeta/algebra.hpp"
#include "nilzeta/gaussian_rational.hpp"
#include "nilzeta/ideal.hpp"

namespace nilzeta::cli {

// Exit codes: 0 success, 1 a reported check failed, 2 bad input.
inline constexpr int kExitFailedCheck = 1;
inline constexpr int kExitBadInput = 2;

AlgebraPtr load_spec(const std::string& path);

int algebra_check(const AlgebraPtr& alg, std::ostream& out);
int reduce(const AlgebraPtr& alg, const std::string& expr, unsigned cap, std::ostream& out);
int verify(const AlgebraPtr& alg, unsigned max_degree, unsigned cap, std::ostream& out);

enum class PoleFormat { Json, Csv };
int poles(const AlgebraPtr& alg, unsigned q, const Rational& s0, long l_max, PoleFormat format, std::ostream& out);

struct SpectrumOptions {
  std::size_t basis_size = 200;
  std::vector<std::complex<double>> zeta_at;
  std::optional<std::string> report_path;
};
/// Eigenvalue CSV on `out`; the JSON report goes to the report path when
/// given, otherwise after the CSV.
int spectrum(const AlgebraPtr& alg, const SpectrumOptions& opts, std::ostream& out);

/// "-2, -3.5, -2+1i, -2-0.5i" -> complex values.
std::vector<std::complex<double>> parse_complex_list(const std::string& text);

}  // namespace nilzeta::cli
