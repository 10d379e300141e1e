#include "nilzeta/spectral.hpp"

#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>

#include "nilzeta/error.hpp"
#include "nilzeta/hurwitz.hpp"
#include "nilzeta/ideal.hpp"

namespace nilzeta {

namespace {

using Sparse = Eigen::SparseMatrix<double>;

Sparse kron(const Sparse& a, const Sparse& b) {
  std::vector<Eigen::Triplet<double>> t;
  for (int i = 0; i < a.outerSize(); ++i)
    for (Sparse::InnerIterator ia(a, i); ia; ++ia)
      for (int j = 0; j < b.outerSize(); ++j)
        for (Sparse::InnerIterator ib(b, j); ib; ++ib)
          t.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(), ia.value() * ib.value());
  Sparse out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setFromTriplets(t.begin(), t.end());
  return out;
}

Sparse identity(Eigen::Index size) {
  Sparse id(size, size);
  id.setIdentity();
  return id;
}

// Powers of the position and derivative matrices on one axis, embedded in
// the full tensor space.
class LadderPowers {
 public:
  LadderPowers(std::size_t n, std::size_t levels) : n_(n) {
    const auto l = static_cast<Eigen::Index>(levels);
    Sparse a(l, l);
    std::vector<Eigen::Triplet<double>> t;
    for (Eigen::Index k = 1; k < l; ++k) t.emplace_back(k - 1, k, std::sqrt(double(k)));
    a.setFromTriplets(t.begin(), t.end());
    const Sparse at = a.transpose();
    const Sparse x = (a + at) * (1.0 / std::numbers::sqrt2);
    const Sparse d = (a - at) * (1.0 / std::numbers::sqrt2);
    const Sparse id = identity(l);
    for (std::size_t k = 0; k < n; ++k) {
      Sparse xe = x, de = d;
      for (std::size_t j = 0; j < n; ++j) {
        if (j < k) {
          xe = kron(id, xe);
          de = kron(id, de);
        } else if (j > k) {
          xe = kron(xe, id);
          de = kron(de, id);
        }
      }
      x_.push_back({identity(xe.rows()), xe});
      d_.push_back({identity(de.rows()), de});
    }
  }

  const Sparse& x(std::size_t k, unsigned p) { return get(x_[k], p); }
  const Sparse& d(std::size_t k, unsigned p) { return get(d_[k], p); }

 private:
  static const Sparse& get(std::vector<Sparse>& pw, unsigned p) {
    while (pw.size() <= p) {
      Sparse next = (pw.back() * pw[1]).pruned();
      pw.push_back(std::move(next));
    }
    return pw[p];
  }
  std::size_t n_;
  std::vector<std::vector<Sparse>> x_, d_;
};

std::complex<double> to_complex(const GaussianRational& c) { return {c.re().get_d(), c.im().get_d()}; }

// Least squares fit of log y ~ log amp + expo log(k + shift) on the given
// indices, with the shift chosen to minimize the residual.
struct PowerFit {
  double log_amp = 0;
  double expo = 0;
  double shift = 0;
  double residual = 0;
};

PowerFit fit_fixed_shift(const std::vector<double>& ks, const std::vector<double>& ys, double shift) {
  const double m = static_cast<double>(ks.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const double lx = std::log(ks[i] + shift), ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  PowerFit f;
  f.shift = shift;
  f.expo = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  f.log_amp = (sy - f.expo * sx) / m;
  double rss = 0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const double e = std::log(ys[i]) - f.log_amp - f.expo * std::log(ks[i] + shift);
    rss += e * e;
  }
  f.residual = std::sqrt(rss / m);
  return f;
}

PowerFit fit_power(const std::vector<double>& ks, const std::vector<double>& ys) {
  const double lo = std::max(-0.5, 0.5 - ks.front()), hi = 20.0;
  const double step = 0.25;
  double best = lo;
  double best_r = std::numeric_limits<double>::infinity();
  for (double s = lo; s <= hi; s += step) {
    const double r = fit_fixed_shift(ks, ys, s).residual;
    if (r < best_r) {
      best_r = r;
      best = s;
    }
  }
  double a = std::max(lo, best - step), b = std::min(hi, best + step);
  const double g = (std::sqrt(5.0) - 1) / 2;
  for (int it = 0; it < 80; ++it) {
    const double c = b - g * (b - a), d = a + g * (b - a);
    if (fit_fixed_shift(ks, ys, c).residual < fit_fixed_shift(ks, ys, d).residual)
      b = d;
    else
      a = c;
  }
  PowerFit f = fit_fixed_shift(ks, ys, (a + b) / 2);
  const PowerFit grid = fit_fixed_shift(ks, ys, best);
  return grid.residual < f.residual ? grid : f;
}

struct Solved {
  SpectralEstimate estimate;
  Eigen::MatrixXd vectors;  // eigenvectors at N, columns ascending
};

std::mutex cache_mutex;
std::map<std::pair<std::string, std::size_t>, std::shared_ptr<const Solved>> cache;

Eigen::MatrixXd real_symmetric(const Eigen::MatrixXcd& m) {
  if (m.imag().cwiseAbs().maxCoeff() > 0) throw DomainError("operator matrix is not real");
  return m.real();
}

std::shared_ptr<const Solved> solve(const AlgebraPtr& alg, std::size_t n_basis) {
  const auto key = std::make_pair(alg->spec().to_string(), n_basis);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const WeylOperator delta = delta1(alg);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(real_symmetric(hermite_matrix(delta, n_basis)));
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> big(real_symmetric(hermite_matrix(delta, 2 * n_basis)),
                                                           Eigen::EigenvaluesOnly);
  if (small.info() != Eigen::Success || big.info() != Eigen::Success)
    throw LimitError("eigen-solve did not converge");

  auto out = std::make_shared<Solved>();
  SpectralEstimate& est = out->estimate;
  est.basis_size = n_basis;
  const auto& lam = small.eigenvalues();
  const auto& ref = big.eigenvalues();
  for (Eigen::Index k = 0; k < lam.size(); ++k) {
    const double drift = std::abs(lam[k] - ref[k]) / std::abs(ref[k]);
    if (drift >= SpectralEstimate::kDriftTolerance) break;
    est.max_drift = std::max(est.max_drift, drift);
    est.eigenvalues.push_back(lam[k]);
  }
  out->vectors = small.eigenvectors().leftCols(static_cast<Eigen::Index>(est.eigenvalues.size()));

  const std::size_t count = est.eigenvalues.size();
  est.converged = count >= SpectralEstimate::kMinConverged;
  if (count >= 4) {
    est.fit_begin = count / 2;
    std::vector<double> ks, ys;
    for (std::size_t k = est.fit_begin; k < count; ++k) {
      ks.push_back(double(k));
      ys.push_back(est.eigenvalues[k]);
    }
    const PowerFit f = fit_power(ks, ys);
    est.theta = f.expo;
    est.log_c = f.log_amp;
    est.kappa = f.shift;
    est.fit_residual = f.residual;
    est.abscissa = -1.0 / est.theta;
    est.schatten = 2.0 / est.theta;
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(key, std::move(out)).first->second;
}

}  // namespace

Eigen::MatrixXcd hermite_matrix(const WeylOperator& w, std::size_t n_basis) {
  const std::size_t n = w.n();
  if (n == 0 || n > 2) throw DomainError("Hermite truncation supports n = 1 or n = 2 only");
  if (n_basis == 0) throw DomainError("basis size must be positive");
  const std::size_t levels = n_basis + w.total_degree();
  LadderPowers lp(n, levels);
  const Eigen::Index full = lp.x(0, 0).rows();
  Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(full, full);
  for (const auto& [key, c] : w.terms()) {
    Sparse op = identity(full);
    for (std::size_t k = 0; k < n; ++k) op = op * lp.x(k, key[k]);
    for (std::size_t k = 0; k < n; ++k) op = op * lp.d(k, key[n + k]);
    const std::complex<double> cc = to_complex(c);
    for (int o = 0; o < op.outerSize(); ++o)
      for (Sparse::InnerIterator it(op, o); it; ++it) big(it.row(), it.col()) += cc * it.value();
  }
  if (n == 1) return big.topLeftCorner(static_cast<Eigen::Index>(n_basis), static_cast<Eigen::Index>(n_basis));
  const auto nb = static_cast<Eigen::Index>(n_basis), l = static_cast<Eigen::Index>(levels);
  Eigen::MatrixXcd out(nb * nb, nb * nb);
  for (Eigen::Index r = 0; r < nb * nb; ++r)
    for (Eigen::Index c = 0; c < nb * nb; ++c) out(r, c) = big((r / nb) * l + r % nb, (c / nb) * l + c % nb);
  return out;
}

SpectralEstimate eigenvalues(const AlgebraPtr& alg, std::size_t n_basis) {
  if (alg->n() > 2) throw DomainError("Hermite truncation supports n = 1 or n = 2 only");
  return solve(alg, n_basis)->estimate;
}

ZetaValue zeta_value(const AlgebraPtr& alg, const std::optional<WeylOperator>& x, std::complex<double> z,
                     std::size_t n_basis) {
  if (alg->n() > 2) throw DomainError("Hermite truncation supports n = 1 or n = 2 only");
  const auto solved = solve(alg, n_basis);
  const SpectralEstimate& est = solved->estimate;
  if (!est.converged) throw LimitError("too few converged eigenvalues for a zeta evaluation");

  double q = 0;
  if (x) {
    if (x->n() != alg->n()) throw DomainError("operator dimension does not match the algebra");
    const auto deg = filtration_min_degree(*x, alg);
    q = deg ? std::max(0, *deg) : double(x->total_degree());
  }
  const double bound = est.abscissa - q / 2;
  if (!(z.real() < bound))
    throw DomainError("Re z = " + std::to_string(z.real()) + " is outside the convergent half-plane Re z < " +
                      std::to_string(bound) + "; use the pole lattice (poles subcommand) for the continuation");

  const std::size_t count = est.eigenvalues.size();
  std::vector<double> diag(count, 1.0);
  if (x) {
    const Eigen::MatrixXcd m = hermite_matrix(*x, n_basis);
    const Eigen::MatrixXcd mv = m * solved->vectors.cast<std::complex<double>>();
    for (std::size_t k = 0; k < count; ++k) {
      const auto kk = static_cast<Eigen::Index>(k);
      const std::complex<double> d = solved->vectors.col(kk).cast<std::complex<double>>().dot(mv.col(kk));
      if (std::abs(d.imag()) > 1e-9 * (1 + std::abs(d.real())))
        throw DomainError("zeta trace needs an operator with real diagonal in the eigenbasis");
      diag[k] = d.real();
    }
  }

  ZetaValue out;
  out.terms = count;
  for (std::size_t k = 0; k < count; ++k) out.partial += diag[k] * std::pow(est.eigenvalues[k], z);

  // Tail: lambda_k ~ C (k+kappa)^theta and diag_k ~ sign D (k+kx)^mu, the
  // latter rewritten to first order around k + kappa.
  const double a = double(count) + est.kappa;
  const std::complex<double> cz = std::exp(z * est.log_c);
  std::vector<double> ks, ys;
  double sign = 0;
  bool fittable = true;
  for (std::size_t k = est.fit_begin; k < count; ++k) {
    const double s = diag[k] > 0 ? 1.0 : (diag[k] < 0 ? -1.0 : 0.0);
    if (s == 0 || (sign != 0 && s != sign)) fittable = false;
    sign = s;
    ks.push_back(double(k));
    ys.push_back(std::abs(diag[k]));
  }
  bool all_zero = std::all_of(diag.begin() + static_cast<long>(est.fit_begin), diag.end(),
                              [](double v) { return v == 0; });
  if (all_zero) {
    out.tail = 0;
  } else if (!fittable) {
    out.tail = std::numeric_limits<double>::quiet_NaN();
  } else if (!x) {
    out.tail = cz * hurwitz_zeta(-est.theta * z, a);
  } else {
    const PowerFit f = fit_power(ks, ys);
    const double amp = sign * std::exp(f.log_amp);
    out.tail = amp * cz *
               (hurwitz_zeta(-f.expo - est.theta * z, a) +
                f.expo * (f.shift - est.kappa) * hurwitz_zeta(1.0 - f.expo - est.theta * z, a));
  }
  out.value = out.partial + out.tail;
  out.tail_bound = std::abs(out.tail);
  if (std::isnan(out.tail.real())) out.tail_bound = std::numeric_limits<double>::infinity();
  return out;
}

AbscissaResidue abscissa_and_residue(const SpectralEstimate& estimate) {
  if (!estimate.converged)
    throw LimitError("need at least " + std::to_string(SpectralEstimate::kMinConverged) +
                     " converged eigenvalues, got " + std::to_string(estimate.eigenvalues.size()));
  AbscissaResidue out;
  out.abscissa = estimate.abscissa;
  // Only the fitted tail carries the pole; the finite partial sum is entire.
  const double a = double(estimate.fit_begin) + estimate.kappa;
  const double eps = 1e-5;
  double acc = 0;
  for (const double e : {eps, -eps}) {
    const std::complex<double> z = out.abscissa + e;
    const std::complex<double> val = std::exp(z * estimate.log_c) * hurwitz_zeta(-estimate.theta * z, a);
    acc += (e * val).real();
  }
  out.residue = acc / 2;
  return out;
}

}  // namespace nilzeta
