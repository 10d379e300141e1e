#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "nilzeta/algebra.hpp"
#include "nilzeta/weyl.hpp"

namespace nilzeta {

/// Matrix of W in the Hermite functions. For n = 1 the basis is
/// h_0..h_{N-1}; for n = 2 it is the tensor basis h_j (x) h_k with
/// j, k < N (dimension N^2, row index j*N + k). The ladder matrices are
/// built with N + deg W levels per axis so the truncation is exact.
/// Throws DomainError for n >= 3.
Eigen::MatrixXcd hermite_matrix(const WeylOperator& w, std::size_t n_basis);

struct SpectralEstimate {
  std::size_t basis_size = 0;
  /// Converged prefix of the spectrum of Delta_1, ascending.
  std::vector<double> eigenvalues;
  /// Largest relative drift between the N and 2N solves within the prefix.
  double max_drift = 0;
  /// lambda_k ~ C (k + kappa)^theta fitted on the top half of the prefix.
  double theta = 0;
  double log_c = 0;
  double kappa = 0;
  double fit_residual = 0;  // rms of log residuals
  std::size_t fit_begin = 0;
  double abscissa = 0;  // -1/theta
  double schatten = 0;  // 2/theta
  /// At least kMinConverged eigenvalues survived the drift test.
  bool converged = false;

  static constexpr std::size_t kMinConverged = 50;
  static constexpr double kDriftTolerance = 1e-8;
};

/// Eigenvalues of hermite_matrix(Delta_1, N), keeping the prefix that
/// agrees with the 2N solve. Results are cached per (spec, N).
SpectralEstimate eigenvalues(const AlgebraPtr& alg, std::size_t n_basis);

struct ZetaValue {
  std::complex<double> partial;  // sum over the converged eigenpairs
  std::complex<double> tail;     // heuristic continuation of the fitted law
  std::complex<double> value;    // partial + tail
  double tail_bound = 0;         // |tail|; the tail is never certified
  std::size_t terms = 0;
};

/// Trace(X Delta_1^z) on the converged eigenpairs, X = identity when
/// absent. Re z must lie left of the abscissa shifted by q/2, q the
/// filtration degree of X; otherwise DomainError.
ZetaValue zeta_value(const AlgebraPtr& alg, const std::optional<WeylOperator>& x, std::complex<double> z,
                     std::size_t n_basis);

struct AbscissaResidue {
  double abscissa = 0;
  /// (z - z*) zeta(z) of the fitted law, averaged at z* +- eps.
  double residue = 0;
};

/// Requires estimate.converged; throws LimitError otherwise.
AbscissaResidue abscissa_and_residue(const SpectralEstimate& estimate);

}  // namespace nilzeta
