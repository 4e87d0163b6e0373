#pragma once

// Metric profile synthesis: from a family's z-polynomial to sampled
// (t, H, F, G) with H' = F = sqrt(z(H)).
//
// The boundary roots lo < hi of z0 are simple, so z0(u) = (u-lo)(hi-u) q(u)
// with q > 0 on [lo, hi]. Writing u = c + r sin(phi) turns the improper
// integral t(H) = int dH / sqrt(z(H)) into
//   t(phi) = s * int dphi / sqrt(q(c + r sin phi)),
// whose integrand is smooth up to phi = +-pi/2. Profiles are obtained by
// integrating this in phi and inverting the monotone map phi(t).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "graysurf/errors.hpp"
#include "graysurf/families.hpp"
#include "graysurf/polynomial.hpp"

namespace graysurf {

namespace detail {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre nodes on [-1, 1] by Newton iteration on P_n.
inline GaussRule make_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

inline const GaussRule& gauss16() {
  static const GaussRule rule = make_gauss_legendre(16);
  return rule;
}

inline const GaussRule& gauss8() {
  static const GaussRule rule = make_gauss_legendre(8);
  return rule;
}

template <class Fn>
double gauss_integrate(const GaussRule& rule, Fn&& f, double lo, double hi) {
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return acc * half;
}

}  // namespace detail

/// One evaluation of the profile and its derivatives at parameter t.
struct ProfileSample {
  double t = 0.0;
  double H = 0.0;
  double F = 0.0;
  double dF = 0.0;
  double ddF = 0.0;
  double G = 0.0;
  double dG = 0.0;
  /// NaN where G = 0 (the limit is filled in by synthesize_profile).
  double ddG = 0.0;
};

/// Exact (quadrature-accurate) evaluator of the profile of a family spec on
/// t in [a, b] = [-L/2, L/2]. Immutable after construction.
class ProfileSolver {
 public:
  explicit ProfileSolver(const FamilySpec& spec) : spec_(spec) {
    s_ = spec.s;
    if (!(s_ > 0.0)) throw DomainError("profile: s must be positive");
    lo_ = spec.lower_root();
    hi_ = spec.upper_root();
    if (!(lo_ < hi_)) throw DomainError("profile: boundary roots must be distinct");
    center_ = 0.5 * (lo_ + hi_);
    radius_ = 0.5 * (hi_ - lo_);
    sigma_ = spec.base_branch();
    factor_z0();
    build_table();
  }

  const FamilySpec& spec() const noexcept { return spec_; }
  double length() const noexcept { return length_; }
  double a() const noexcept { return -0.5 * length_; }
  double b() const noexcept { return 0.5 * length_; }
  double lower_root() const noexcept { return lo_; }
  double upper_root() const noexcept { return hi_; }

  /// q(u) = z0(u) / ((u - lo)(hi - u)) with two derivatives.
  Jet2 regular_factor(double u) const { return eval_rational_jet(q_num_, q_den_, u); }

  /// t(phi) measured from the lower end.
  double elapsed(double phi) const {
    const std::size_t j = panel_of_phi(phi);
    return cumulative_[j] + detail::gauss_integrate(
                                detail::gauss16(), [&](double p) { return rate(p); },
                                breaks_[j], phi);
  }

  /// The sweep angle reached at parameter t (clamped to [a, b]).
  double phi_at(double t) const {
    const double tau = std::clamp(t - a(), 0.0, length_);
    if (tau <= 0.0) return -half_pi;
    if (tau >= length_) return half_pi;
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), tau);
    std::size_t j = static_cast<std::size_t>(std::distance(cumulative_.begin(), it));
    j = std::min(j == 0 ? 0 : j - 1, breaks_.size() - 2);
    double l = breaks_[j];
    double r = breaks_[j + 1];
    double phi = hermite_inverse(j, tau);
    for (int iter = 0; iter < 60; ++iter) {
      const double err = cumulative_[j] +
                         detail::gauss_integrate(
                             detail::gauss16(), [&](double p) { return rate(p); }, l0(j), phi) -
                         tau;
      if (err > 0.0) r = std::min(r, phi); else l = std::max(l, phi);
      if (std::abs(err) <= 4e-16 * length_) break;
      double next = phi - err / rate(phi);
      if (!(next > l && next < r)) next = 0.5 * (l + r);
      if (next == phi) break;
      phi = next;
    }
    return phi;
  }

  ProfileSample at(double t) const { return sample_phi(phi_at(t), t); }

  /// Profile values at sweep angle phi in [-pi/2, pi/2].
  ProfileSample sample_phi(double phi, double t) const {
    ProfileSample out;
    out.t = t;
    const double sn = std::sin(phi);
    const double cs = std::max(0.0, std::cos(phi));
    const double cs2 = cs * cs;
    // Distances to the ends, without cancellation near phi = +-pi/2.
    const double above_lo = sn < 0.0 ? radius_ * cs2 / (1.0 - sn) : radius_ * (1.0 + sn);
    const double below_hi = sn > 0.0 ? radius_ * cs2 / (1.0 + sn) : radius_ * (1.0 - sn);
    const double u = sn < 0.0 ? lo_ + above_lo : hi_ - below_hi;
    const Jet2 q = regular_factor(u);
    if (!(q.value > 0.0)) throw PositivityError("profile: z is not positive inside", u);

    const double w = above_lo * below_hi;
    const double dw = below_hi - above_lo;
    const double dz0 = dw * q.value + w * q.d1;
    const double ddz0 = -2.0 * q.value + 2.0 * dw * q.d1 + w * q.d2;

    out.H = s_ * u;
    out.F = radius_ * cs * std::sqrt(q.value);
    out.dF = dz0 / (2.0 * s_);
    out.ddF = ddz0 / (2.0 * s_ * s_) * out.F;

    // 1 - u and 1 + u measured from the nearer end.
    const double one_minus = sn < 0.0 ? (1.0 - lo_) - above_lo : (1.0 - hi_) + below_hi;
    const double one_plus = sn < 0.0 ? (1.0 + lo_) + above_lo : (1.0 + hi_) - below_hi;
    const double g2 = sigma_ * s_ * s_ * one_minus * one_plus;
    out.G = std::sqrt(std::max(0.0, g2));
    if (out.G > 0.0) {
      out.dG = -sigma_ * out.H * out.F / out.G;
      out.ddG = (-sigma_ * (out.F * out.F + out.H * out.dF) - out.dG * out.dG) / out.G;
    } else {
      // G -> 0 only at an end where H -> +-s: dG^2 -> -H z'(H) / (2 sigma).
      const double limit = std::sqrt(std::max(0.0, -out.H * (dz0 / s_) / (2.0 * sigma_)));
      out.dG = sn < 0.0 ? limit : -limit;
      out.ddG = std::numeric_limits<double>::quiet_NaN();
    }
    return out;
  }

 private:
  static constexpr double half_pi = std::numbers::pi / 2.0;

  double l0(std::size_t j) const { return breaks_[j]; }

  double rate(double phi) const {
    const double u = center_ + radius_ * std::sin(phi);
    const double q = regular_factor(u).value;
    return s_ / std::sqrt(q);
  }

  void factor_z0() {
    Polynomial num = spec_.P;
    Polynomial den{1.0, 0.0, -1.0};
    for (double root : {lo_, hi_}) {
      const double resid = std::abs(num(root));
      if (resid > 1e-9 * std::max(1.0, eval_error_bound(num, root) * 1e12))
        throw DomainError("profile: boundary value " + std::to_string(root) +
                          " is not a root of z0");
      num = deflate(num, root);
    }
    for (double root : {lo_, hi_}) {
      if (std::abs(den(root)) < 1e-12) {
        num = deflate(num, root);
        den = deflate(den, root);
      }
    }
    if (num.is_zero()) throw DomainError("profile: z0 vanishes identically");
    q_num_ = -num;
    q_den_ = den;

    if (!real_roots(q_den_, lo_, hi_).empty())
      throw DomainError("profile: z0 has a pole between its boundary roots");
    const double q_scale = std::max({std::abs(regular_factor(lo_).value),
                                     std::abs(regular_factor(hi_).value),
                                     std::abs(regular_factor(center_).value)});
    for (double root : {lo_, hi_}) {
      if (std::abs(regular_factor(root).value) <= 1e-9 * q_scale)
        throw DivergenceError("profile: boundary root " + std::to_string(root) +
                              " of z0 is not simple; the length integral diverges");
    }
    const auto cert = certify_positive(q_num_ * q_den_, lo_, hi_);
    if (!cert.positive || regular_factor(lo_).value <= 0.0 || regular_factor(hi_).value <= 0.0)
      throw PositivityError("profile: z0 is not positive between its boundary roots",
                            std::isnan(cert.witness) ? lo_ : cert.witness);
  }

  void build_table() {
    std::vector<std::pair<double, double>> work;
    const int initial = 32;
    for (int i = initial - 1; i >= 0; --i) {
      const double l = -half_pi + std::numbers::pi * i / initial;
      const double r = -half_pi + std::numbers::pi * (i + 1) / initial;
      work.emplace_back(l, r);
    }
    auto f = [&](double p) { return rate(p); };
    const double scale = detail::gauss_integrate(detail::gauss16(), f, -half_pi, half_pi);
    breaks_.assign(1, -half_pi);
    std::vector<double> pieces;
    // Depth-first refinement keeps panels ordered left to right.
    while (!work.empty()) {
      auto [l, r] = work.back();
      work.pop_back();
      const double fine = detail::gauss_integrate(detail::gauss16(), f, l, r);
      const double coarse = detail::gauss_integrate(detail::gauss8(), f, l, r);
      if (std::abs(fine - coarse) > 1e-15 * scale && (r - l) > 1e-6) {
        const double m = 0.5 * (l + r);
        work.emplace_back(m, r);
        work.emplace_back(l, m);
        continue;
      }
      breaks_.push_back(r);
      pieces.push_back(fine);
    }
    cumulative_.assign(1, 0.0);
    for (double p : pieces) cumulative_.push_back(cumulative_.back() + p);
    length_ = cumulative_.back();
    rates_.resize(breaks_.size());
    for (std::size_t i = 0; i < breaks_.size(); ++i) rates_[i] = rate(breaks_[i]);
  }

  std::size_t panel_of_phi(double phi) const {
    const auto it = std::upper_bound(breaks_.begin(), breaks_.end(), phi);
    std::size_t j = static_cast<std::size_t>(std::distance(breaks_.begin(), it));
    return std::min(j == 0 ? 0 : j - 1, breaks_.size() - 2);
  }

  // Cubic Hermite interpolant of the inverse map phi(tau) on panel j, using
  // exact slopes dphi/dtau = 1 / rate; slopes are limited so the
  // interpolant stays monotone.
  double hermite_inverse(std::size_t j, double tau) const {
    const double t0 = cumulative_[j];
    const double t1 = cumulative_[j + 1];
    const double p0 = breaks_[j];
    const double p1 = breaks_[j + 1];
    const double dt = t1 - t0;
    if (dt <= 0.0) return p0;
    const double secant = (p1 - p0) / dt;
    double m0 = 1.0 / rates_[j];
    double m1 = 1.0 / rates_[j + 1];
    const double a0 = m0 / secant;
    const double a1 = m1 / secant;
    const double norm = a0 * a0 + a1 * a1;
    if (norm > 9.0) {
      const double k = 3.0 / std::sqrt(norm);
      m0 = k * a0 * secant;
      m1 = k * a1 * secant;
    }
    const double x = (tau - t0) / dt;
    const double h00 = (1.0 + 2.0 * x) * (1.0 - x) * (1.0 - x);
    const double h10 = x * (1.0 - x) * (1.0 - x);
    const double h01 = x * x * (3.0 - 2.0 * x);
    const double h11 = x * x * (x - 1.0);
    return std::clamp(h00 * p0 + h10 * dt * m0 + h01 * p1 + h11 * dt * m1, p0, p1);
  }

  FamilySpec spec_;
  double s_ = 1.0;
  double lo_ = 0.0;
  double hi_ = 0.0;
  double center_ = 0.0;
  double radius_ = 0.0;
  int sigma_ = 1;
  Polynomial q_num_;
  Polynomial q_den_;
  std::vector<double> breaks_;
  std::vector<double> cumulative_;
  std::vector<double> rates_;
  double length_ = 0.0;
};

/// Half the parameter length of the profile interval. For the symmetric
/// genus families this is the integral of dh / sqrt(z) from 0 to s x.
inline double half_length(const FamilySpec& spec) { return 0.5 * ProfileSolver(spec).length(); }

enum class BoundaryKind { two_sphere_ends, cp2_ends };

inline const char* to_string(BoundaryKind k) {
  return k == BoundaryKind::two_sphere_ends ? "two_sphere_ends" : "cp2_ends";
}

/// Sampled profile on a uniform t-grid with n + 1 nodes.
struct ProfileGrid {
  std::vector<double> t, H, F, G, dF, ddF, dG, ddG;
  FamilySpec spec;
  double a = 0.0;
  double b = 0.0;

  std::size_t size() const noexcept { return t.size(); }
  double step() const noexcept { return (b - a) / static_cast<double>(t.size() - 1); }
};

inline ProfileGrid synthesize_profile(const FamilySpec& spec, int n = 2048) {
  if (n < 16) throw DomainError("synthesize_profile: n must be at least 16");
  const ProfileSolver solver(spec);
  ProfileGrid grid;
  grid.spec = spec;
  grid.a = solver.a();
  grid.b = solver.b();
  const auto count = static_cast<std::size_t>(n) + 1;
  for (auto* v : {&grid.t, &grid.H, &grid.F, &grid.G, &grid.dF, &grid.ddF, &grid.dG, &grid.ddG})
    v->resize(count);

  double previous_H = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < count; ++i) {
    const double t = i + 1 == count ? grid.b
                                    : grid.a + (grid.b - grid.a) * static_cast<double>(i) / n;
    const double phi = i == 0 ? -std::numbers::pi / 2
                              : (i + 1 == count ? std::numbers::pi / 2 : solver.phi_at(t));
    const ProfileSample p = solver.sample_phi(phi, t);
    if (!(p.H > previous_H)) throw DomainError("synthesize_profile: t(H) is not strictly monotone");
    previous_H = p.H;
    grid.t[i] = p.t;
    grid.H[i] = p.H;
    grid.F[i] = p.F;
    grid.G[i] = p.G;
    grid.dF[i] = p.dF;
    grid.ddF[i] = p.ddF;
    grid.dG[i] = p.dG;
    grid.ddG[i] = p.ddG;
  }
  // ddG at an end where G closes: cubic extrapolation from the interior.
  auto extrapolate = [&](std::size_t at, int dir) {
    const auto k = [&](int m) { return grid.ddG[static_cast<std::size_t>(static_cast<int>(at) + dir * m)]; };
    grid.ddG[at] = 4.0 * k(1) - 6.0 * k(2) + 4.0 * k(3) - k(4);
  };
  if (std::isnan(grid.ddG.front())) extrapolate(0, 1);
  if (std::isnan(grid.ddG.back())) extrapolate(count - 1, -1);
  return grid;
}

struct BoundaryResidual {
  std::string name;
  double value = 0.0;
};

struct BoundaryReport {
  BoundaryKind kind = BoundaryKind::two_sphere_ends;
  std::vector<BoundaryResidual> residuals;
  /// G stays away from zero at every end that must not close.
  bool open_ends_nondegenerate = true;
  bool passed = false;
  double tolerance = 1e-6;

  double max_residual() const {
    double m = 0.0;
    for (const auto& r : residuals) m = std::max(m, r.value);
    return m;
  }
};

/// Smooth-closure conditions at both ends, from the endpoint samples (whose
/// derivatives are exact limits: F' = z'(root)/2).
inline BoundaryReport boundary_report(const ProfileGrid& grid, double tol = 1e-6) {
  BoundaryReport rep;
  rep.tolerance = tol;
  const std::size_t last = grid.size() - 1;
  const double Ga = grid.G[0];
  const double Gb = grid.G[last];
  const double closing = 1e-10;

  rep.residuals.push_back({"|F(a)|", std::abs(grid.F[0])});
  rep.residuals.push_back({"|F(b)|", std::abs(grid.F[last])});
  rep.residuals.push_back({"|F'(a)-1|", std::abs(grid.dF[0] - 1.0)});
  rep.residuals.push_back({"|F'(b)+1|", std::abs(grid.dF[last] + 1.0)});

  if (Ga > closing && Gb > closing) {
    rep.kind = BoundaryKind::two_sphere_ends;
    rep.residuals.push_back({"|G'(a)|", std::abs(grid.dG[0])});
    rep.residuals.push_back({"|G'(b)|", std::abs(grid.dG[last])});
    if (grid.spec.kind == FamilyKind::genus_family) {
      const double x = grid.spec.x;
      const double expected = grid.spec.s * std::sqrt(1.0 - x * x);
      rep.residuals.push_back({"|G(a)-s*sqrt(1-x^2)|", std::abs(Ga - expected)});
      rep.residuals.push_back({"|G(b)-s*sqrt(1-x^2)|", std::abs(Gb - expected)});
    }
  } else {
    rep.kind = BoundaryKind::cp2_ends;
    const bool closes_at_b = Gb <= Ga;
    const std::size_t c = closes_at_b ? last : 0;
    const std::size_t o = closes_at_b ? 0 : last;
    const double expected_slope = closes_at_b ? -1.0 : 1.0;
    rep.residuals.push_back({closes_at_b ? "|G'(a)|" : "|G'(b)|", std::abs(grid.dG[o])});
    rep.residuals.push_back({closes_at_b ? "|G(b)|" : "|G(a)|", std::abs(grid.G[c])});
    rep.residuals.push_back({closes_at_b ? "|G'(b)+1|" : "|G'(a)-1|",
                             std::abs(grid.dG[c] - expected_slope)});
    rep.open_ends_nondegenerate = grid.G[o] > closing;
  }
  if (std::min(Ga, Gb) <= closing && std::max(Ga, Gb) <= closing) rep.open_ends_nondegenerate = false;
  rep.passed = rep.open_ends_nondegenerate && rep.max_residual() <= tol;
  return rep;
}

}  // namespace graysurf
