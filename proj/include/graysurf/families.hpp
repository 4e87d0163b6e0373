#pragma once

// Polynomial solution families of the cohomogeneity-one Gray ansatz.
//
// Every family is described by a degree-6 polynomial P in the normalized
// variable t = h/s, with z0(t) = P(t)/(1 - t^2) and z(h) = z0(h/s). The
// profile h solves h' = sqrt(z(h)); boundary roots x, y of z0 are the values
// of h/s at the two ends of the interval.
//
// Coefficients C, D, E are stored normalized (C s^2 -> C, D s^4 -> D,
// E / s -> E), which is the form every closed-form expression below uses.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "graysurf/errors.hpp"
#include "graysurf/polynomial.hpp"

namespace graysurf {

enum class FamilyKind { genus_family, cp2_family, custom };

inline const char* to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::genus_family: return "genus_family";
    case FamilyKind::cp2_family: return "cp2_family";
    case FamilyKind::custom: return "custom";
  }
  return "unknown";
}

struct FamilySpec {
  int genus = 0;
  int k = 0;
  int chi = 2;
  double s = 1.0;
  /// Sectional curvature of the base surface, one of -4, 0, 4.
  double K = 0.0;
  /// Sign in h^2 = s^2 + A g^2; A = -1 keeps h inside (-s, s).
  int A = -1;
  /// Genus families: sgn(K A). CP^2 families: orientation sign of the
  /// profile, +1 for x in (eta, 1) and -1 for x in (1, inf).
  int eps = 0;
  /// Boundary roots of z0 (t-values of the two ends).
  double x = 0.0;
  double y = 0.0;
  double C = 0.0;
  double D = 0.0;
  double E = 0.0;
  Polynomial P;
  FamilyKind kind = FamilyKind::custom;

  double lower_root() const noexcept { return std::min(x, y); }
  double upper_root() const noexcept { return std::max(x, y); }
  /// +1 when G^2 = s^2 - H^2, -1 when G^2 = H^2 - s^2.
  int base_branch() const noexcept { return A == 1 ? -1 : 1; }
};

/// Sign entering the right-hand side of the z-equation: sgn(K A).
inline int ode_sign(const FamilySpec& spec) noexcept {
  const double ka = spec.K * spec.A;
  return (ka > 0.0) - (ka < 0.0);
}

struct CoefficientPair {
  double C = 0.0;
  double D = 0.0;
};

/// Solves z0(x) = 0, z0'(x) = -2s for (C, D) with the linear coefficient E fixed.
inline CoefficientPair coeffs_CD(double x, double E, double s, int eps) {
  const double x2 = x * x;
  const double x4 = x2 * x2;
  const double quartic = 15.0 + 10.0 * x2 - x4;
  const double base = 2.0 * (x - 1.0) * x * (x + 1.0);
  if (std::abs(base) < 1e-14 || std::abs(quartic) < 1e-14 * (15.0 + 10.0 * x2 + x4))
    throw SingularError("coeffs_CD: x must avoid {-1, 0, 1} and the zeros of 15+10x^2-x^4");
  const double e = eps;
  const double D = 5.0 *
                   (-3.0 * E - 6.0 * s - 24.0 * e * x + 3.0 * E * x2 - 12.0 * s * x2 -
                    8.0 * e * x2 * x + 2.0 * s * x4) /
                   (base * quartic);
  const double C = 3.0 *
                   (5.0 * E + 10.0 * s + 80.0 * e * x + 30.0 * s * x2 - 10.0 * E * x2 +
                    5.0 * E * x4 - 10.0 * s * x4 - 16.0 * e * x4 * x + 2.0 * s * x4 * x2) /
                   (base * (-quartic));
  return {C, D};
}

/// P(t) = -4e t^2 - D/5 t^6 + (D - C/3) t^4 + (2C - 3D) t^2 + E t - 4e + C - D
inline Polynomial build_P(double C, double D, double E, int eps) {
  const double e = eps;
  return Polynomial{-4.0 * e + C - D, E, -4.0 * e + 2.0 * C - 3.0 * D, 0.0, D - C / 3.0, 0.0,
                    -D / 5.0};
}

/// Factored even solution through t = +-x, expanded.
inline Polynomial build_P_symmetric(double x, double s, int eps) {
  const double x2 = x * x;
  const double x4 = x2 * x2;
  const double denom = x * (15.0 - 5.0 * x2 - 11.0 * x4 + x4 * x2);
  if (!(x > 0.0 && x < 1.0)) throw DomainError("build_P_symmetric: x must lie in (0, 1)");
  if (std::abs(denom) < 1e-14) throw SingularError("build_P_symmetric: singular denominator");
  const double ex = 4.0 * eps * x;
  const double a0 = s * (-15.0 + 10.0 * x2 - 3.0 * x4) + ex * x2 * (x2 - 5.0);
  const double a2 = s * (10.0 + 12.0 * x2 - 6.0 * x4) + ex * (5.0 + 2.0 * x2 + x4);
  const double a4 = s * (-3.0 - 6.0 * x2 + x4) - ex * (3.0 + x2);
  const Polynomial inner{a0, 0.0, a2, 0.0, a4};
  return (1.0 / denom) * (Polynomial{-x2, 0.0, 1.0} * inner);
}

namespace detail {

// z0 = P / (1 - t^2), with a simple zero of P at t = +-1 cancelled.
struct ReducedZ {
  Polynomial num;
  Polynomial den;
};

inline ReducedZ reduce_z0(const Polynomial& P, double t) {
  ReducedZ r{P, Polynomial{1.0, 0.0, -1.0}};
  for (double pole : {1.0, -1.0}) {
    if (std::abs(t - pole) > 1e-6) continue;
    const double scale = std::max(1.0, eval_error_bound(r.num, pole) * 1e8);
    if (std::abs(r.num(pole)) > 1e-10 * scale)
      throw DomainError("z0 has a pole at t = " + std::to_string(pole));
    r.num = deflate(r.num, pole);
    r.den = deflate(r.den, pole);
  }
  return r;
}

}  // namespace detail

/// z0(t) = P(t) / (1 - t^2) with value and two derivatives; removable
/// singularities at t = +-1 are evaluated as limits.
inline Jet2 z0_jet(const Polynomial& P, double t) {
  const auto r = detail::reduce_z0(P, t);
  return eval_rational_jet(r.num, r.den, t);
}

/// z(h) = z0(h / s).
inline double z_eval(const Polynomial& P, double s, double h) {
  if (s == 0.0) throw DomainError("z_eval: s must be nonzero");
  return z0_jet(P, h / s).value;
}

/// Left minus right side of the z-equation
///   z' - z (s^2+h^2)/(h (s^2-h^2)) = 4e/h + D (s^2-h^2)^2/h - C (s^2-h^2)/h
/// in un-normalized coefficients, with e = sgn(K A).
inline double ode35_residual(const FamilySpec& spec, double h) {
  const double s = spec.s;
  const double w = s * s - h * h;
  if (h == 0.0 || std::abs(w) < 1e-14 * s * s)
    throw DomainError("ode35_residual: require h != 0 and |h| != s");
  const Jet2 z0 = z0_jet(spec.P, h / s);
  const double z = z0.value;
  const double dz = z0.d1 / s;
  const double C_raw = spec.C / (s * s);
  const double D_raw = spec.D / (s * s * s * s);
  const double lhs = dz - z * (s * s + h * h) / (h * w);
  const double rhs = 4.0 * ode_sign(spec) / h + D_raw * w * w / h - C_raw * w / h;
  return lhs - rhs;
}

/// Necessary condition for z0 to satisfy both boundary systems at x and y.
inline double compatibility_residual(double x, double y, double s, int eps) {
  const double e = eps;
  const double x2 = x * x;
  const double y2 = y * y;
  const double curv = -4.0 * e * (-5.0 * x + x2 * x + 5.0 * y + 2.0 * x2 * y - 2.0 * x * y2 - y2 * y);
  const double lin = s * (5.0 + 2.0 * x2 * x * y + 2.0 * x * y2 * y + 3.0 * y2 + 3.0 * x2 +
                          x2 * y2 - 16.0 * x * y);
  return (x + y) * (curv + lin);
}

/// s = 2k/|chi| for genus != 1, s = k for genus 1.
inline double bundle_scale(int genus, int k) {
  if (genus == 1) return static_cast<double>(k);
  const int chi = 2 - 2 * genus;
  return 2.0 * k / std::abs(chi);
}

/// One-parameter family on the ruled surface of the given genus (>= 1).
inline FamilySpec genus_family(int genus, int k, double x) {
  if (genus < 1)
    throw DomainError(
        "genus_family: genus must be >= 1; for genus 0 use cp2_family (Hirzebruch "
        "families are not constructed)");
  if (k < 1) throw DomainError("genus_family: bundle degree k must be >= 1");
  if (!(x > 0.0 && x < 1.0)) throw DomainError("genus_family: x must lie in (0, 1)");

  FamilySpec spec;
  spec.kind = FamilyKind::genus_family;
  spec.genus = genus;
  spec.k = k;
  spec.chi = 2 - 2 * genus;
  spec.s = bundle_scale(genus, k);
  spec.K = genus == 1 ? 0.0 : -4.0;
  spec.A = -1;
  spec.eps = ode_sign(spec);
  spec.x = x;
  spec.y = -x;
  spec.E = 0.0;
  const auto cd = coeffs_CD(x, 0.0, spec.s, spec.eps);
  spec.C = cd.C;
  spec.D = cd.D;
  spec.P = build_P_symmetric(x, spec.s, spec.eps);

  const auto cert = certify_positive(spec.P, -x, x);
  if (!cert.positive)
    throw PositivityError("genus_family: P is not positive on (-x, x); contradicts the construction",
                          cert.witness);
  return spec;
}

/// S(x) = x^3 + 5x^2 + 75x + 59
inline Polynomial s_polynomial() { return Polynomial{59.0, 75.0, 5.0, 1.0}; }

/// The unique real root of S, lower edge of the admissible CP^2 range.
inline double eta() {
  static const double value = [] {
    const auto roots = real_roots(s_polynomial(), -2.0, 0.0, 1e-15);
    return roots.front();
  }();
  return value;
}

/// Q_x(t) = t^3 + t^2 (2+x) + t (5+6x) + 8 + 13x + 4x^2
inline Polynomial q_polynomial(double x) {
  return Polynomial{8.0 + 13.0 * x + 4.0 * x * x, 5.0 + 6.0 * x, 2.0 + x, 1.0};
}

struct Cp2Coefficients {
  double C = 0.0;
  double D = 0.0;
  double E = 0.0;
};

/// Closed-form C, D, E of the CP^2 family with boundary roots x and 1.
inline Cp2Coefficients cp2_coefficients(double x, int eps) {
  const double e = eps;
  const double cubic = 4.0 + x - 4.0 * x * x - x * x * x;
  if (std::abs(cubic) < 1e-14) throw SingularError("cp2_coefficients: x in {-4, -1, 1}");
  Cp2Coefficients c;
  c.D = -5.0 * e / cubic;
  c.C = 3.0 * e * (7.0 + 4.0 * x - x * x) / ((x - 1.0) * (x + 1.0) * (4.0 + x));
  c.E = -8.0 / 15.0 * (5.0 * c.C - 6.0 * c.D + 15.0 * e);
  return c;
}

/// One-parameter family on CP^2: eps = 1 needs x in (eta, 1), eps = -1 needs
/// x in (1, inf). The polynomial uses the curvature term +4 eps (1 + t^2),
/// i.e. build_P with sign sgn(K A) = -eps.
inline FamilySpec cp2_family(double x, int eps) {
  if (eps == 1) {
    if (!(x > -1.0 && x < 1.0))
      throw DomainError("cp2_family: eps = 1 requires x in (eta, 1), eta = " +
                        std::to_string(eta()));
  } else if (eps == -1) {
    if (!(x > 1.0)) throw DomainError("cp2_family: eps = -1 requires x in (1, inf)");
  } else {
    throw DomainError("cp2_family: eps must be +1 or -1");
  }

  const Polynomial Q = q_polynomial(x);
  const auto cert = eps == 1 ? certify_positive(Q, x, 1.0) : certify_positive(Q, 1.0, x);
  if (!cert.positive)
    throw PositivityError("cp2_family: Q_x is not positive between x and 1; x must exceed eta = " +
                              std::to_string(eta()),
                          cert.witness);

  FamilySpec spec;
  spec.kind = FamilyKind::cp2_family;
  spec.genus = 0;
  spec.k = 1;
  spec.chi = 2;
  spec.s = 1.0;
  spec.K = 4.0;
  spec.A = eps == 1 ? -1 : 1;
  spec.eps = eps;
  spec.x = x;
  spec.y = 1.0;
  const auto c = cp2_coefficients(x, eps);
  spec.C = c.C;
  spec.D = c.D;
  spec.E = c.E;
  spec.P = build_P(c.C, c.D, c.E, ode_sign(spec));
  return spec;
}

enum class TrivialRuledCase { genus_gt1, torus };

inline const char* to_string(TrivialRuledCase c) {
  return c == TrivialRuledCase::genus_gt1 ? "genus_gt1_product" : "torus_product";
}

struct NonexistenceSample {
  double alpha = 0.0;
  /// Displayed closed form x(alpha); for the torus case, the factor polynomial value.
  double value = 0.0;
  /// Value re-derived from the boundary system (genus case only).
  double rederived = 0.0;
};

struct NonexistenceReport {
  TrivialRuledCase kind = TrivialRuledCase::genus_gt1;
  std::string grid;
  std::size_t scanned = 0;
  /// genus_gt1: max over the grid of x(alpha), admissible only if > 0.
  /// torus: min over the grid of |factor(alpha)|.
  double worst_residual = 0.0;
  double worst_rederived = 0.0;
  bool found_solution = false;
  std::string verdict;
  Polynomial factor;
  std::vector<double> factor_roots;
  std::vector<NonexistenceSample> evidence;
};

/// x(alpha) = -4 (a-1)(a^2+3a+1) / (a (a^2+a+2)), as displayed for y = a x.
inline double trivial_x_of_alpha(double a) {
  return -4.0 * (a - 1.0) * (a * a + 3.0 * a + 1.0) / (a * (a * a + a + 2.0));
}

/// Same quantity obtained by eliminating D, C, E from z(x) = z(y) = 0,
/// z'(x) = 2, z'(y) = -2 with z(h) = -4 + D h^4 + C h^2 + E/h; its
/// denominator is a (2a^2 + a + 2).
inline double trivial_x_of_alpha_rederived(double a) {
  return -4.0 * (a - 1.0) * (a * a + 3.0 * a + 1.0) / (a * (2.0 * a * a + a + 2.0));
}

/// (a+1)(a-1)^3(2a^2+a+2)
inline Polynomial torus_factor() {
  const std::array<double, 4> roots{-1.0, 1.0, 1.0, 1.0};
  return Polynomial::from_roots(roots) * Polynomial{2.0, 1.0, 2.0};
}

inline NonexistenceReport trivial_ruled_nonexistence(TrivialRuledCase which,
                                                     std::size_t grid_points = 100000,
                                                     double alpha_max = 100.0) {
  NonexistenceReport rep;
  rep.kind = which;
  rep.scanned = grid_points;
  rep.grid = "alpha = y/x on (1, " + std::to_string(alpha_max) + "], " +
             std::to_string(grid_points) + " uniform points";
  const std::size_t evidence_stride = std::max<std::size_t>(1, grid_points / 10);
  auto alpha_at = [&](std::size_t i) {
    return 1.0 + (alpha_max - 1.0) * static_cast<double>(i + 1) / static_cast<double>(grid_points);
  };

  if (which == TrivialRuledCase::genus_gt1) {
    rep.worst_residual = -std::numeric_limits<double>::infinity();
    rep.worst_rederived = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid_points; ++i) {
      const double a = alpha_at(i);
      const double xa = trivial_x_of_alpha(a);
      const double xr = trivial_x_of_alpha_rederived(a);
      rep.worst_residual = std::max(rep.worst_residual, xa);
      rep.worst_rederived = std::max(rep.worst_rederived, xr);
      if (i % evidence_stride == 0 || i + 1 == grid_points) rep.evidence.push_back({a, xa, xr});
    }
    rep.found_solution = rep.worst_residual > 0.0 || rep.worst_rederived > 0.0;
    rep.verdict = rep.found_solution
                      ? "x(alpha) > 0 at some alpha > 1: admissible product solution found"
                      : "x(alpha) < 0 for every alpha > 1, contradicting 0 < x < y";
  } else {
    rep.factor = torus_factor();
    rep.factor_roots = real_roots(rep.factor, 1.0 + 1e-9, alpha_max);
    rep.worst_residual = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid_points; ++i) {
      const double a = alpha_at(i);
      const double v = rep.factor(a);
      rep.worst_residual = std::min(rep.worst_residual, std::abs(v));
      if (i % evidence_stride == 0 || i + 1 == grid_points) rep.evidence.push_back({a, v, 0.0});
    }
    rep.worst_rederived = rep.worst_residual;
    rep.found_solution = !rep.factor_roots.empty();
    rep.verdict = rep.found_solution
                      ? "factor polynomial has a root alpha > 1"
                      : "(a+1)(a-1)^3(2a^2+a+2) has no root with a > 1; 2a^2+a+2 has "
                        "discriminant -15";
  }
  return rep;
}

}  // namespace graysurf
