// Copyright 2026 the smoothq authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only reference implementations, kept independent of the library's
// evaluation paths: quadrature instead of continued fractions, long-double
// term summation instead of cached prefix tables, and an explicit
// sum-over-indices covariance instead of the production assembly.

#ifndef SMOOTHQ_TESTS_ORACLES_HPP
#define SMOOTHQ_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "smoothq/matrix.hpp"
#include "smoothq/special.hpp"
#include "smoothq/truncation.hpp"

namespace oracles {

// ---------------------------------------------------------------------------
// adaptive Simpson quadrature

inline double simpson_slice(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

// `force` levels are always split before the error estimate may terminate
// the recursion; sharply peaked integrands otherwise look converged on the
// first coarse samples. The local tolerance is applied per panel, so the
// total error is of order (#panels * tol).
inline double adaptive_simpson_rec(const std::function<double(double)>& f, double a, double b,
                                   double fa, double fm, double fb, double whole, double tol,
                                   int depth, int force) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson_slice(a, m, fa, flm, fm);
  const double right = simpson_slice(m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (force <= 0 && (depth <= 0 || std::fabs(delta) <= 15.0 * tol)) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, tol, depth - 1, force - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, tol, depth - 1, force - 1);
}

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 3e-15, int depth = 48) {
  if (b <= a) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = simpson_slice(a, b, fa, fm, fb);
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, depth, 10);
}

// Integrates a nonnegative kernel after dividing out its sampled maximum,
// so the absolute tolerance acts as a relative one; unnormalized beta
// densities reach 1e-36 at moderate shapes and would otherwise pass the
// convergence check while still unresolved.
inline double integrate_scaled(const std::function<double(double)>& kernel, double lo,
                               double hi, double tol) {
  if (hi <= lo) return 0.0;
  double peak = 0.0;
  constexpr int kProbe = 1024;
  for (int i = 0; i <= kProbe; ++i) {
    peak = std::max(peak, kernel(lo + (hi - lo) * i / kProbe));
  }
  if (peak <= 0.0) return 0.0;
  const auto scaled = [&kernel, peak](double t) { return kernel(t) / peak; };
  return peak * adaptive_simpson(scaled, lo, hi, tol);
}

// Unnormalized beta mass over [0, hi] for hi <= 0.5: the endpoint
// singularity t^(alpha-1) with alpha < 1 is removed by the substitution
// t = s^(1/alpha), under which t^(alpha-1) dt = (1/alpha) ds.
inline double beta_left_mass(double alpha, double beta, double hi, double tol) {
  if (hi <= 0.0) return 0.0;
  if (alpha < 1.0) {
    const auto kernel = [alpha, beta](double s) {
      if (s <= 0.0) return 1.0 / alpha;
      const double t = std::pow(s, 1.0 / alpha);
      return std::exp((beta - 1.0) * std::log1p(-t)) / alpha;
    };
    return integrate_scaled(kernel, 0.0, std::pow(hi, alpha), tol);
  }
  const auto kernel = [alpha, beta](double t) {
    if (t <= 0.0) return alpha == 1.0 ? 1.0 : 0.0;
    return std::exp((alpha - 1.0) * std::log(t) + (beta - 1.0) * std::log1p(-t));
  };
  return integrate_scaled(kernel, 0.0, hi, tol);
}

// Regularized incomplete beta by quadrature of the density, splitting at
// 1/2 and reflecting the upper half so each piece is integrated away from
// its singular endpoint; the normalizer is integrated too, so no gamma
// function enters anywhere.
inline double quad_beta_cdf(double x, double alpha, double beta, double tol = 5e-16) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double lower_half = beta_left_mass(alpha, beta, 0.5, tol);
  const double upper_half = beta_left_mass(beta, alpha, 0.5, tol);
  const double total = lower_half + upper_half;
  const double below = x <= 0.5 ? beta_left_mass(alpha, beta, x, tol)
                                : total - beta_left_mass(beta, alpha, 1.0 - x, tol);
  return below / total;
}

// Panel mass of the beta kernel over [lo, hi], same quadrature route.
inline double quad_beta_panel(double lo, double hi, double alpha, double beta,
                              double tol = 5e-16) {
  return quad_beta_cdf(hi, alpha, beta, tol) - quad_beta_cdf(lo, alpha, beta, tol);
}

// ---------------------------------------------------------------------------
// high-precision discrete CDFs (term-by-term long double summation)

inline double poisson_cdf_oracle(double lambda, double t) {
  if (t < 0.0) return 0.0;
  const long long top = static_cast<long long>(std::floor(t));
  long double sum = 0.0L;
  for (long long y = 0; y <= top; ++y) {
    const long double ld = static_cast<long double>(y);
    sum += expl(ld * logl(static_cast<long double>(lambda)) -
                static_cast<long double>(lambda) - lgammal(ld + 1.0L));
  }
  return static_cast<double>(sum);
}

inline double nb_cdf_oracle(double r, double beta, double t) {
  if (t < 0.0) return 0.0;
  const long long top = static_cast<long long>(std::floor(t));
  long double sum = 0.0L;
  const long double lr = static_cast<long double>(r);
  const long double lb = static_cast<long double>(beta);
  for (long long y = 0; y <= top; ++y) {
    const long double ld = static_cast<long double>(y);
    sum += expl(lgammal(lr + ld) - lgammal(lr) - lgammal(ld + 1.0L) - lr * log1pl(lb) +
                ld * (logl(lb) - log1pl(lb)));
  }
  return static_cast<double>(sum);
}

// ---------------------------------------------------------------------------
// explicit sum-over-indices form of the plug-in covariance

inline smoothq::Matrix brute_force_ncov(const smoothq::TruncationDesign& design,
                                        const std::vector<double>& levels) {
  const std::size_t l = levels.size();
  const std::size_t dm1 = design.support.size() - 1;
  const double d = static_cast<double>(design.d());
  smoothq::Matrix out(l, l);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t i2 = 0; i2 < l; ++i2) {
      const smoothq::BetaParams ki{(d + 1.0) * levels[i], (d + 1.0) * (1.0 - levels[i])};
      const smoothq::BetaParams ki2{(d + 1.0) * levels[i2], (d + 1.0) * (1.0 - levels[i2])};
      long double acc = 0.0L;
      for (std::size_t j = 0; j < dm1; ++j) {
        for (std::size_t m = 0; m < dm1; ++m) {
          const double fj = design.f_star[j];
          const double fm = design.f_star[m];
          if (fj <= 0.0 || fj >= 1.0 || fm <= 0.0 || fm >= 1.0) continue;
          const double hj = (design.support[j] - design.support[j + 1]) *
                            smoothq::beta_pdf(fj, ki);
          const double hm = (design.support[m] - design.support[m + 1]) *
                            smoothq::beta_pdf(fm, ki2);
          const double djm = std::min(fj, fm) * (1.0 - std::max(fj, fm));
          acc += static_cast<long double>(hj) * djm * hm;
        }
      }
      out(i, i2) = static_cast<double>(acc);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// symmetric eigenvalues (cyclic Jacobi), for PSD checks

inline std::vector<double> symmetric_eigenvalues(smoothq::Matrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::logic_error("symmetric_eigenvalues: not square");
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::fabs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  return eig;
}

// ---------------------------------------------------------------------------
// chi-square goodness-of-fit helpers

struct ChiSquare {
  double statistic;
  int df;
};

// Bins with expected count below 5 are pooled into their right neighbour.
inline ChiSquare chi_square_gof(const std::vector<double>& observed,
                                const std::vector<double>& expected) {
  double stat = 0.0;
  int bins = 0;
  double obs_pool = 0.0;
  double exp_pool = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    obs_pool += observed[i];
    exp_pool += expected[i];
    const bool last = i + 1 == observed.size();
    if (exp_pool >= 5.0 || last) {
      if (exp_pool > 0.0) {
        const double diff = obs_pool - exp_pool;
        stat += diff * diff / exp_pool;
        ++bins;
      }
      obs_pool = 0.0;
      exp_pool = 0.0;
    }
  }
  return ChiSquare{stat, bins - 1};
}

// Wilson-Hilferty approximation of the 0.999 chi-square quantile; within a
// fraction of a percent for the dfs used here, which is ample for a GOF gate.
inline double chi2_crit_999(int df) {
  const double z = 3.090232306167813;  // standard normal 0.999 quantile
  const double d = static_cast<double>(df);
  const double term = 1.0 - 2.0 / (9.0 * d) + z * std::sqrt(2.0 / (9.0 * d));
  return d * term * term * term;
}

}  // namespace oracles

#endif  // SMOOTHQ_TESTS_ORACLES_HPP
