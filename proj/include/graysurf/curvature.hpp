#pragma once

// Closed-form Ricci eigenvalues of dt^2 + F(t)^2 theta^2 + G(t)^2 g_K, and the
// checks that characterize the Gray (AC-perp) condition for this ansatz:
//   lambda0 = lambda1 =: lambda,  mu := lambda2,
//   lambda - 2 mu constant,  mu = c1 G^2 + c0,  mu' = 2 (lambda - mu) G'/G.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "graysurf/errors.hpp"
#include "graysurf/profile.hpp"

namespace graysurf {

struct RicciSpectrum {
  double lambda0 = 0.0;  ///< along d/dt
  double lambda1 = 0.0;  ///< along the fiber
  double lambda2 = 0.0;  ///< double, on the horizontal plane
  double tau = 0.0;
};

inline RicciSpectrum ricci_closed_form(double F, double dF, double ddF, double G, double dG,
                                       double ddG, double s, double K) {
  if (!(F > 0.0) || !(G > 0.0))
    throw DomainError("ricci_closed_form: F and G must be positive");
  const double fiber_twist = 2.0 * s * s * F * F / (G * G * G * G);
  const double mixed = dF * dG / (F * G);
  RicciSpectrum r;
  r.lambda0 = -2.0 * ddG / G - ddF / F;
  r.lambda1 = -ddF / F - 2.0 * mixed + fiber_twist;
  r.lambda2 = -ddG / G - mixed - (dG / G) * (dG / G) - fiber_twist + K / (G * G);
  r.tau = r.lambda0 + r.lambda1 + 2.0 * r.lambda2;
  return r;
}

inline RicciSpectrum ricci_closed_form(const ProfileSample& p, double s, double K) {
  return ricci_closed_form(p.F, p.dF, p.ddF, p.G, p.dG, p.ddG, s, K);
}

/// Closed-form spectrum at every grid node; the two end nodes (where F or G
/// vanish) get cubic extrapolation from the four nearest interior nodes.
inline std::vector<RicciSpectrum> spectrum_along(const ProfileGrid& grid) {
  const std::size_t n = grid.size();
  std::vector<RicciSpectrum> out(n);
  for (std::size_t i = 1; i + 1 < n; ++i)
    out[i] = ricci_closed_form(grid.F[i], grid.dF[i], grid.ddF[i], grid.G[i], grid.dG[i],
                               grid.ddG[i], grid.spec.s, grid.spec.K);
  auto extrapolate = [&](std::size_t at, int dir) {
    auto k = [&](int m) -> const RicciSpectrum& {
      return out[static_cast<std::size_t>(static_cast<int>(at) + dir * m)];
    };
    auto f = [&](double RicciSpectrum::*field) {
      return 4.0 * (k(1).*field) - 6.0 * (k(2).*field) + 4.0 * (k(3).*field) - (k(4).*field);
    };
    out[at].lambda0 = f(&RicciSpectrum::lambda0);
    out[at].lambda1 = f(&RicciSpectrum::lambda1);
    out[at].lambda2 = f(&RicciSpectrum::lambda2);
    out[at].tau = f(&RicciSpectrum::tau);
  };
  extrapolate(0, 1);
  extrapolate(n - 1, -1);
  return out;
}

/// mu ~ c1 G^2 + c0 by least squares, and the (C, D) it implies in the
/// normalized convention of FamilySpec.
struct MuFit {
  double c1 = 0.0;
  double c0 = 0.0;
  double max_residual = 0.0;
  double C = 0.0;
  double D = 0.0;
};

/// F^2 (1 - u^2), u = H/s, fitted as kappa (1+u^2) + D(-u^6/5+u^4-3u^2-1)
///   + C(-u^4/3+2u^2+1) + E u.
struct ProfilePolynomialFit {
  double kappa = 0.0;
  double C = 0.0;
  double D = 0.0;
  double E = 0.0;
  double max_residual = 0.0;
};

struct ACReport {
  double max_lambda01_gap = 0.0;
  /// (max - min) of lambda - 2 mu, divided by max(1, |mean|).
  double lambda_minus_2mu_spread = 0.0;
  double lambda_minus_2mu_mean = 0.0;
  MuFit mu_fit;
  ProfilePolynomialFit profile_fit;
  /// max |mu' - 2 (lambda - mu) G'/G| / max(1, max |mu'|), mu' by a
  /// five-point stencil on the grid.
  double mean_curvature_residual = 0.0;
  double tau_spread = 0.0;
  bool tau_nonconstant = false;
  std::size_t nodes = 0;
  double tolerance = 1e-6;
  bool passed = false;
};

namespace detail {

inline std::vector<std::size_t> interior_nodes(const ProfileGrid& grid, std::size_t margin) {
  std::vector<std::size_t> idx;
  for (std::size_t i = margin; i + margin < grid.size(); ++i) idx.push_back(i);
  return idx;
}

inline MuFit fit_mu(const ProfileGrid& grid, const std::vector<std::size_t>& nodes,
                    const std::vector<RicciSpectrum>& spec) {
  // Normal equations of the 2-parameter affine fit.
  double sxx = 0, sx = 0, sy = 0, sxy = 0;
  const double m = static_cast<double>(nodes.size());
  for (std::size_t i : nodes) {
    const double g2 = grid.G[i] * grid.G[i];
    sxx += g2 * g2;
    sx += g2;
    sy += spec[i].lambda2;
    sxy += g2 * spec[i].lambda2;
  }
  MuFit fit;
  const double det = m * sxx - sx * sx;
  fit.c1 = (m * sxy - sx * sy) / det;
  fit.c0 = (sy - fit.c1 * sx) / m;
  for (std::size_t i : nodes) {
    const double g2 = grid.G[i] * grid.G[i];
    fit.max_residual = std::max(fit.max_residual, std::abs(spec[i].lambda2 - fit.c1 * g2 - fit.c0));
  }
  const double s = grid.spec.s;
  fit.C = -fit.c0 * s * s;
  fit.D = grid.spec.base_branch() * fit.c1 * s * s * s * s;
  return fit;
}

inline ProfilePolynomialFit fit_profile_polynomial(const ProfileGrid& grid,
                                                   const std::vector<std::size_t>& nodes) {
  const double s = grid.spec.s;
  Eigen::MatrixXd A(static_cast<Eigen::Index>(nodes.size()), 4);
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(nodes.size()));
  for (std::size_t r = 0; r < nodes.size(); ++r) {
    const std::size_t i = nodes[r];
    const double u = grid.H[i] / s;
    const double u2 = u * u;
    const auto row = static_cast<Eigen::Index>(r);
    A(row, 0) = 1.0 + u2;
    A(row, 1) = -u2 * u2 * u2 / 5.0 + u2 * u2 - 3.0 * u2 - 1.0;
    A(row, 2) = -u2 * u2 / 3.0 + 2.0 * u2 + 1.0;
    A(row, 3) = u;
    rhs(row) = grid.F[i] * grid.F[i] * (1.0 - u2);
  }
  const Eigen::Vector4d c = A.colPivHouseholderQr().solve(rhs);
  ProfilePolynomialFit fit;
  fit.kappa = c(0);
  fit.D = c(1);
  fit.C = c(2);
  fit.E = c(3);
  fit.max_residual = (A * c - rhs).cwiseAbs().maxCoeff();
  return fit;
}

}  // namespace detail

/// Gray-condition report on the nodes at least four steps from either end.
inline ACReport ac_report(const ProfileGrid& grid, double tol = 1e-6) {
  if (!(tol > 0.0)) throw DomainError("ac_report: tol must be positive");
  if (grid.size() < 17) throw DomainError("ac_report: grid too small");
  ACReport rep;
  rep.tolerance = tol;
  const auto spec = spectrum_along(grid);
  const auto nodes = detail::interior_nodes(grid, 4);
  rep.nodes = nodes.size();

  double lo2 = std::numeric_limits<double>::infinity(), hi2 = -lo2, sum2 = 0.0;
  double tau_lo = lo2, tau_hi = -lo2;
  for (std::size_t i : nodes) {
    const auto& r = spec[i];
    rep.max_lambda01_gap = std::max(rep.max_lambda01_gap, std::abs(r.lambda0 - r.lambda1));
    const double d = r.lambda0 - 2.0 * r.lambda2;
    lo2 = std::min(lo2, d);
    hi2 = std::max(hi2, d);
    sum2 += d;
    tau_lo = std::min(tau_lo, r.tau);
    tau_hi = std::max(tau_hi, r.tau);
  }
  rep.lambda_minus_2mu_mean = sum2 / static_cast<double>(nodes.size());
  rep.lambda_minus_2mu_spread = (hi2 - lo2) / std::max(1.0, std::abs(rep.lambda_minus_2mu_mean));
  rep.tau_spread = tau_hi - tau_lo;
  rep.tau_nonconstant = rep.tau_spread > 10.0 * tol;

  rep.mu_fit = detail::fit_mu(grid, nodes, spec);
  rep.profile_fit = detail::fit_profile_polynomial(grid, nodes);

  const double h = grid.step();
  double worst = 0.0, scale = 1.0;
  for (std::size_t i : nodes) {
    const double dmu = (spec[i - 2].lambda2 - 8.0 * spec[i - 1].lambda2 +
                        8.0 * spec[i + 1].lambda2 - spec[i + 2].lambda2) /
                       (12.0 * h);
    const double lambda = spec[i].lambda0;
    const double mu = spec[i].lambda2;
    const double predicted = 2.0 * (lambda - mu) * grid.dG[i] / grid.G[i];
    worst = std::max(worst, std::abs(dmu - predicted));
    scale = std::max(scale, std::abs(dmu));
  }
  rep.mean_curvature_residual = worst / scale;

  rep.passed = rep.max_lambda01_gap < tol && rep.lambda_minus_2mu_spread < tol &&
               rep.mu_fit.max_residual < tol && rep.mean_curvature_residual < tol &&
               rep.tau_nonconstant;
  return rep;
}

/// Spread (max - min) of (lambda - mu) / G^2 over the interior nodes.
inline double eigen_difference_law(const ProfileGrid& grid) {
  const auto spec = spectrum_along(grid);
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (std::size_t i : detail::interior_nodes(grid, 4)) {
    const double v = (spec[i].lambda0 - spec[i].lambda2) / (grid.G[i] * grid.G[i]);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return hi - lo;
}

}  // namespace graysurf
