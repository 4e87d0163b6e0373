#pragma once

// Brute-force curvature of dt^2 + F^2 theta^2 + G^2 g_K written out in local
// coordinates (t, u, v, w).  Nothing here calls into curvature.hpp: the metric
// is assembled component by component and differentiated numerically.
//
// Charts, with d(theta) = 2 s (area form of the base):
//   flat        g_K = du^2 + dv^2,                 theta = dw - 2 s u dv
//   hyperbolic  g_K = (du^2 + dv^2) / (4 v^2),     theta = dw + s/(2v) du
//   spherical   g_K = (du^2 + dv^2) / (1 + r^2)^2, theta = dw + s (u dv - v du) / (1 + r^2)

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "graysurf/curvature.hpp"
#include "graysurf/errors.hpp"
#include "graysurf/families.hpp"
#include "graysurf/profile.hpp"

namespace graysurf {

enum class Chart { flat, hyperbolic, spherical };

inline const char* to_string(Chart c) {
  switch (c) {
    case Chart::flat: return "flat";
    case Chart::hyperbolic: return "hyperbolic";
    case Chart::spherical: return "spherical";
  }
  return "?";
}

inline Chart chart_for(double K) {
  if (K == 0.0) return Chart::flat;
  if (K == -4.0) return Chart::hyperbolic;
  if (K == 4.0) return Chart::spherical;
  throw DomainError("chart_for: K must be -4, 0 or 4");
}

struct ChartPoint {
  double t = 0.0;
  double u = 0.0;
  double v = 0.0;
  double w = 0.0;
  Chart chart = Chart::flat;

  Eigen::Vector4d coords() const { return {t, u, v, w}; }
};

/// Stereographic patches are only used inside this radius.
inline constexpr double spherical_patch_radius = 10.0;

struct ProfileJet {
  double F = 0.0, dF = 0.0, ddF = 0.0;
  double G = 0.0, dG = 0.0, ddG = 0.0;
};

template <class P>
concept SmoothProfile = requires(const P& p, double t) {
  { p.jet(t) } -> std::convertible_to<ProfileJet>;
};

/// Uniform double in [lo, hi) from the top 53 bits, so that sequences do not
/// depend on the standard library's distribution implementation.
inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

/// F and G as constant + three harmonics, amplitudes capped so that both stay
/// in [0.55, 1.95].
class TrigProfile {
 public:
  TrigProfile() = default;

  static TrigProfile constant(double F, double G) {
    TrigProfile p;
    p.f_.c0 = F;
    p.g_.c0 = G;
    return p;
  }

  static TrigProfile random(std::mt19937_64& rng) {
    TrigProfile p;
    for (Series* s : {&p.f_, &p.g_}) {
      s->c0 = uniform(rng, 1.0, 1.5);
      s->omega = uniform(rng, 0.5, 1.5);
      double budget = 0.45;
      for (std::size_t j = 0; j < s->a.size(); ++j) {
        const double share = budget / static_cast<double>(s->a.size() - j);
        s->a[j] = uniform(rng, -share, share) * std::sqrt(0.5);
        s->b[j] = uniform(rng, -share, share) * std::sqrt(0.5);
        budget -= std::abs(s->a[j]) + std::abs(s->b[j]);
      }
    }
    return p;
  }

  ProfileJet jet(double t) const {
    ProfileJet j;
    f_.eval(t, j.F, j.dF, j.ddF);
    g_.eval(t, j.G, j.dG, j.ddG);
    return j;
  }

 private:
  struct Series {
    double c0 = 1.0;
    double omega = 1.0;
    std::array<double, 3> a{};
    std::array<double, 3> b{};

    void eval(double t, double& v, double& d, double& dd) const {
      v = c0;
      d = dd = 0.0;
      for (std::size_t j = 0; j < a.size(); ++j) {
        const double k = omega * static_cast<double>(j + 1);
        const double c = std::cos(k * t), s = std::sin(k * t);
        v += a[j] * c + b[j] * s;
        d += k * (-a[j] * s + b[j] * c);
        dd -= k * k * (a[j] * c + b[j] * s);
      }
    }
  };
  Series f_;
  Series g_;
};

/// The synthesized family profile, evaluated directly through the solver.
class FamilyProfile {
 public:
  explicit FamilyProfile(const FamilySpec& spec) : solver_(spec) {}

  double a() const noexcept { return solver_.a(); }
  double b() const noexcept { return solver_.b(); }
  const FamilySpec& spec() const noexcept { return solver_.spec(); }

  ProfileJet jet(double t) const {
    if (!(t > a() && t < b())) throw DomainError("FamilyProfile: t outside (a, b)");
    const ProfileSample p = solver_.at(t);
    return {p.F, p.dF, p.ddF, p.G, p.dG, p.ddG};
  }

 private:
  ProfileSolver solver_;
};

/// G multiplied by 1 + amplitude sin(frequency t).
template <SmoothProfile Base>
class PerturbedProfile {
 public:
  PerturbedProfile(Base base, double amplitude, double frequency)
      : base_(std::move(base)), amp_(amplitude), freq_(frequency) {}

  ProfileJet jet(double t) const {
    ProfileJet j = base_.jet(t);
    const double sn = std::sin(freq_ * t), cs = std::cos(freq_ * t);
    const double m = 1.0 + amp_ * sn;
    const double dm = amp_ * freq_ * cs;
    const double ddm = -amp_ * freq_ * freq_ * sn;
    const double G = j.G, dG = j.dG, ddG = j.ddG;
    j.G = G * m;
    j.dG = dG * m + G * dm;
    j.ddG = ddG * m + 2.0 * dG * dm + G * ddm;
    return j;
  }

  const Base& base() const noexcept { return base_; }

 private:
  Base base_;
  double amp_;
  double freq_;
};

namespace detail {

inline void check_chart(const FamilySpec& spec, const ChartPoint& p) {
  if (chart_for(spec.K) != p.chart)
    throw DomainError(std::string("chart_metric: ") + to_string(p.chart) +
                      " chart does not match K of the spec");
  if (p.chart == Chart::hyperbolic && !(p.v > 0.0))
    throw DomainError("chart_metric: hyperbolic chart needs v > 0");
  if (p.chart == Chart::spherical &&
      !(p.u * p.u + p.v * p.v < spherical_patch_radius * spherical_patch_radius))
    throw DomainError("chart_metric: point outside the stereographic patch");
}

struct BaseGeometry {
  double omega;  // conformal factor of g_K
  double au;     // theta = dw + au du + av dv
  double av;
};

inline BaseGeometry base_geometry(Chart chart, double s, double u, double v) {
  switch (chart) {
    case Chart::flat: return {1.0, 0.0, -2.0 * s * u};
    case Chart::hyperbolic: return {1.0 / (4.0 * v * v), s / (2.0 * v), 0.0};
    case Chart::spherical: {
      const double q = 1.0 + u * u + v * v;
      return {1.0 / (q * q), -s * v / q, s * u / q};
    }
  }
  return {1.0, 0.0, 0.0};
}

}  // namespace detail

/// Coordinate components in the order (t, u, v, w).
template <SmoothProfile P>
Eigen::Matrix4d chart_metric(const FamilySpec& spec, const P& profile, const ChartPoint& p) {
  detail::check_chart(spec, p);
  const ProfileJet j = profile.jet(p.t);
  const auto b = detail::base_geometry(p.chart, spec.s, p.u, p.v);
  const double F2 = j.F * j.F, G2 = j.G * j.G;
  Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
  g(0, 0) = 1.0;
  g(1, 1) = F2 * b.au * b.au + G2 * b.omega;
  g(2, 2) = F2 * b.av * b.av + G2 * b.omega;
  g(3, 3) = F2;
  g(1, 2) = g(2, 1) = F2 * b.au * b.av;
  g(1, 3) = g(3, 1) = F2 * b.au;
  g(2, 3) = g(3, 2) = F2 * b.av;
  return g;
}

struct FdOptions {
  double step = 1e-4;
  bool richardson = true;
};

struct MetricDerivatives {
  Eigen::Matrix4d g;
  std::array<Eigen::Matrix4d, 4> dg;
  std::array<std::array<Eigen::Matrix4d, 4>, 4> ddg;
};

namespace detail {

template <SmoothProfile P>
MetricDerivatives central_level(const FamilySpec& spec, const P& profile, const ChartPoint& p,
                                double h) {
  auto at = [&](int a, double da, int b, double db) {
    ChartPoint q = p;
    double* c[4] = {&q.t, &q.u, &q.v, &q.w};
    if (a >= 0) *c[a] += da;
    if (b >= 0) *c[b] += db;
    return chart_metric(spec, profile, q);
  };
  MetricDerivatives d;
  d.g = at(-1, 0, -1, 0);
  for (int a = 0; a < 4; ++a) {
    const Eigen::Matrix4d plus = at(a, h, -1, 0), minus = at(a, -h, -1, 0);
    d.dg[a] = (plus - minus) / (2.0 * h);
    d.ddg[a][a] = (plus - 2.0 * d.g + minus) / (h * h);
    for (int b = 0; b < a; ++b) {
      d.ddg[a][b] = (at(a, h, b, h) - at(a, h, b, -h) - at(a, -h, b, h) + at(a, -h, b, -h)) /
                    (4.0 * h * h);
      d.ddg[b][a] = d.ddg[a][b];
    }
  }
  return d;
}

}  // namespace detail

template <SmoothProfile P>
MetricDerivatives metric_derivatives(const FamilySpec& spec, const P& profile,
                                     const ChartPoint& p, FdOptions opt = {}) {
  if (!(opt.step > 0.0)) throw DomainError("metric_derivatives: step must be positive");
  MetricDerivatives fine = detail::central_level(spec, profile, p, opt.step);
  if (!opt.richardson) return fine;
  const MetricDerivatives coarse = detail::central_level(spec, profile, p, 2.0 * opt.step);
  for (int a = 0; a < 4; ++a) {
    fine.dg[a] = (4.0 * fine.dg[a] - coarse.dg[a]) / 3.0;
    for (int b = 0; b < 4; ++b) fine.ddg[a][b] = (4.0 * fine.ddg[a][b] - coarse.ddg[a][b]) / 3.0;
  }
  return fine;
}

/// gamma[a](b, c) = Gamma^a_{bc}.
using Christoffel = std::array<Eigen::Matrix4d, 4>;

inline Christoffel christoffel(const MetricDerivatives& d) {
  const Eigen::Matrix4d ginv = d.g.inverse();
  Christoffel gamma;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        double sum = 0.0;
        for (int e = 0; e < 4; ++e)
          sum += ginv(a, e) * (d.dg[b](e, c) + d.dg[c](e, b) - d.dg[e](b, c));
        gamma[a](b, c) = 0.5 * sum;
      }
  return gamma;
}

/// R_bc = d_a Gamma^a_bc - d_c Gamma^a_ab + Gamma^a_ae Gamma^e_bc - Gamma^a_ce Gamma^e_ab.
inline Eigen::Matrix4d ricci_from_derivatives(const MetricDerivatives& d) {
  const Eigen::Matrix4d ginv = d.g.inverse();
  const Christoffel gamma = christoffel(d);
  std::array<Eigen::Matrix4d, 4> dginv;
  for (int e = 0; e < 4; ++e) dginv[e] = -ginv * d.dg[e] * ginv;

  // dgamma[e][a](b, c) = d_e Gamma^a_bc
  std::array<Christoffel, 4> dgamma;
  for (int e = 0; e < 4; ++e)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) {
          double sum = 0.0;
          for (int k = 0; k < 4; ++k) {
            sum += dginv[e](a, k) * (d.dg[b](k, c) + d.dg[c](k, b) - d.dg[k](b, c));
            sum += ginv(a, k) * (d.ddg[e][b](k, c) + d.ddg[e][c](k, b) - d.ddg[e][k](b, c));
          }
          dgamma[e][a](b, c) = 0.5 * sum;
        }

  Eigen::Matrix4d R = Eigen::Matrix4d::Zero();
  for (int b = 0; b < 4; ++b)
    for (int c = 0; c < 4; ++c) {
      double sum = 0.0;
      for (int a = 0; a < 4; ++a) {
        sum += dgamma[a][a](b, c) - dgamma[c][a](a, b);
        for (int e = 0; e < 4; ++e)
          sum += gamma[a](a, e) * gamma[e](b, c) - gamma[a](c, e) * gamma[e](a, b);
      }
      R(b, c) = sum;
    }
  return R;
}

struct RicciFd {
  Eigen::Matrix4d metric;
  Eigen::Matrix4d ricci;
  Eigen::Vector4d eigenvalues;  ///< of g^{-1} Ric, ascending
  double scalar = 0.0;
  double condition = 1.0;
  bool ill_conditioned = false;  ///< condition number above 1e8
};

template <SmoothProfile P>
RicciFd ricci_fd(const FamilySpec& spec, const P& profile, const ChartPoint& p,
                 FdOptions opt = {}) {
  const MetricDerivatives d = metric_derivatives(spec, profile, p, opt);
  RicciFd out;
  out.metric = d.g;
  out.ricci = ricci_from_derivatives(d);
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> metric_eig(d.g, Eigen::EigenvaluesOnly);
  const Eigen::Vector4d gv = metric_eig.eigenvalues();
  if (!(gv(0) > 0.0)) throw DomainError("ricci_fd: metric is not positive definite");
  out.condition = gv(3) / gv(0);
  out.ill_conditioned = out.condition > 1e8;
  const Eigen::Matrix4d sym = 0.5 * (out.ricci + out.ricci.transpose());
  const Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::Matrix4d> eig(sym, d.g,
                                                                      Eigen::EigenvaluesOnly);
  out.eigenvalues = eig.eigenvalues();
  out.scalar = (d.g.inverse() * out.ricci).trace();
  return out;
}

/// Closed-form eigenvalues as a sorted 4-vector {lambda0, lambda1, lambda2, lambda2}.
inline Eigen::Vector4d sorted_closed_form(const ProfileJet& j, double s, double K) {
  const RicciSpectrum r = ricci_closed_form(j.F, j.dF, j.ddF, j.G, j.dG, j.ddG, s, K);
  std::array<double, 4> v{r.lambda0, r.lambda1, r.lambda2, r.lambda2};
  std::sort(v.begin(), v.end());
  return {v[0], v[1], v[2], v[3]};
}

/// max |a - b| / max(1, max |b|)
inline double relative_gap(const Eigen::Vector4d& a, const Eigen::Vector4d& b) {
  return (a - b).cwiseAbs().maxCoeff() / std::max(1.0, b.cwiseAbs().maxCoeff());
}

struct KillingOptions {
  double outer_step = 5e-3;  ///< for derivatives of Ric
  FdOptions inner{2e-3, true};
};

/// X rescaled to unit length in the metric at p.
template <SmoothProfile P>
Eigen::Vector4d normalize(const FamilySpec& spec, const P& profile, const ChartPoint& p,
                          const Eigen::Vector4d& X) {
  const double n2 = X.dot(chart_metric(spec, profile, p) * X);
  if (!(n2 > 0.0)) throw DomainError("normalize: zero vector");
  return X / std::sqrt(n2);
}

/// |(nabla_X Ric)(X, X) - (1/3) X(tau) g(X, X)|.
template <SmoothProfile P>
double killing_defect(const FamilySpec& spec, const P& profile, const ChartPoint& p,
                      const Eigen::Vector4d& X, KillingOptions opt = {}) {
  const Eigen::Matrix4d g = chart_metric(spec, profile, p);
  const double gxx = X.dot(g * X);
  if (std::abs(gxx - 1.0) > 1e-8) throw DomainError("killing_defect: X must be a unit vector");
  const double h = opt.outer_step;

  auto shifted = [&](int c, double dc) {
    ChartPoint q = p;
    double* coord[4] = {&q.t, &q.u, &q.v, &q.w};
    *coord[c] += dc;
    return ricci_fd(spec, profile, q, opt.inner);
  };

  const RicciFd centre = ricci_fd(spec, profile, p, opt.inner);
  double dRic_xxx = 0.0, dtau_x = 0.0;
  for (int c = 0; c < 4; ++c) {
    if (X(c) == 0.0) continue;
    const RicciFd m2 = shifted(c, -2.0 * h), m1 = shifted(c, -h);
    const RicciFd p1 = shifted(c, h), p2 = shifted(c, 2.0 * h);
    const Eigen::Matrix4d dRic = (m2.ricci - 8.0 * m1.ricci + 8.0 * p1.ricci - p2.ricci) / (12.0 * h);
    const double dtau = (m2.scalar - 8.0 * m1.scalar + 8.0 * p1.scalar - p2.scalar) / (12.0 * h);
    dRic_xxx += X(c) * X.dot(dRic * X);
    dtau_x += X(c) * dtau;
  }

  const Christoffel gamma = christoffel(metric_derivatives(spec, profile, p, opt.inner));
  // Gamma^d_{ca} X^c X^a as a vector in d.
  Eigen::Vector4d gxx_vec;
  for (int d = 0; d < 4; ++d) gxx_vec(d) = X.dot(gamma[d] * X);
  const double connection = 2.0 * gxx_vec.dot(centre.ricci * X);

  return std::abs(dRic_xxx - connection - dtau_x * gxx / 3.0);
}

// ---------------------------------------------------------------- calibration

struct CalibrationCase {
  std::string name;
  Chart chart = Chart::flat;
  double s = 0.0;
  double K = 0.0;
  Eigen::Vector4d expected;
  Eigen::Vector4d measured;
  double error = 0.0;
  bool passed = false;
};

struct CalibrationReport {
  std::vector<CalibrationCase> cases;
  double tolerance = 1e-5;
  bool passed = false;
  std::string failed_chart;  ///< first offending chart, empty when passed
};

inline FamilySpec geometry_spec(double s, double K) {
  FamilySpec spec;
  spec.kind = FamilyKind::custom;
  spec.s = s;
  spec.K = K;
  return spec;
}

/// Unit-profile products whose Ricci tensor is known independently: the round
/// S^3 (Ric = 2 g) times a line, R^4, and a curvature -4 plane times R^2.
inline CalibrationReport calibrate(double tol = 1e-5) {
  struct Item {
    const char* name;
    double s, K;
    Eigen::Vector4d expected;
    ChartPoint at;
  };
  const Item items[] = {
      {"round S3 x line", 1.0, 4.0, {0.0, 2.0, 2.0, 2.0}, {0.3, 0.4, -0.2, 0.1, Chart::spherical}},
      {"flat R4", 0.0, 0.0, {0.0, 0.0, 0.0, 0.0}, {0.3, 0.4, -0.2, 0.1, Chart::flat}},
      {"hyperbolic plane x R2", 0.0, -4.0, {-4.0, -4.0, 0.0, 0.0},
       {0.3, 0.4, 0.7, 0.1, Chart::hyperbolic}},
  };
  const TrigProfile unit = TrigProfile::constant(1.0, 1.0);
  CalibrationReport rep;
  rep.tolerance = tol;
  rep.passed = true;
  for (const Item& it : items) {
    CalibrationCase c;
    c.name = it.name;
    c.chart = it.at.chart;
    c.s = it.s;
    c.K = it.K;
    c.expected = it.expected;
    c.measured = ricci_fd(geometry_spec(it.s, it.K), unit, it.at).eigenvalues;
    c.error = (c.measured - c.expected).cwiseAbs().maxCoeff();
    c.passed = c.error < tol;
    if (!c.passed && rep.passed) rep.failed_chart = to_string(c.chart);
    rep.passed = rep.passed && c.passed;
    rep.cases.push_back(c);
  }
  return rep;
}

inline void ensure_calibrated(double tol = 1e-5) {
  const CalibrationReport rep = calibrate(tol);
  if (!rep.passed)
    throw CalibrationError("calibration failed on the " + rep.failed_chart + " chart");
}

// ------------------------------------------------------------------ sampling

inline ChartPoint random_chart_point(std::mt19937_64& rng, Chart chart, double t) {
  ChartPoint p;
  p.chart = chart;
  p.t = t;
  p.w = uniform(rng, -1.0, 1.0);
  switch (chart) {
    case Chart::flat:
      p.u = uniform(rng, -1.0, 1.0);
      p.v = uniform(rng, -1.0, 1.0);
      break;
    case Chart::hyperbolic:
      p.u = uniform(rng, -1.0, 1.0);
      p.v = uniform(rng, 0.5, 2.0);
      break;
    case Chart::spherical:
      p.u = uniform(rng, -0.7, 0.7);
      p.v = uniform(rng, -0.7, 0.7);
      break;
  }
  return p;
}

inline Eigen::Vector4d random_direction(std::mt19937_64& rng) {
  Eigen::Vector4d X;
  do {
    for (int i = 0; i < 4; ++i) X(i) = uniform(rng, -1.0, 1.0);
  } while (X.norm() < 0.1);
  return X;
}

struct AgreementCase {
  std::size_t index = 0;
  double s = 0.0;
  double K = 0.0;
  ChartPoint point;
  Eigen::Vector4d finite_difference;
  Eigen::Vector4d closed_form;
  double relative_error = 0.0;
};

struct AgreementReport {
  std::vector<AgreementCase> cases;
  double max_relative_error = 0.0;
  double tolerance = 1e-5;
  bool passed = false;
};

/// Random trigonometric profiles with s in {0, 1, 2} and K in {-4, 0, 4}, all
/// nine combinations cycled.
inline AgreementReport agreement_suite(std::uint64_t seed, std::size_t count = 100,
                                       double tol = 1e-5, FdOptions opt = {}) {
  std::mt19937_64 rng(seed);
  const double s_values[] = {0.0, 1.0, 2.0};
  const double K_values[] = {-4.0, 0.0, 4.0};
  AgreementReport rep;
  rep.tolerance = tol;
  for (std::size_t i = 0; i < count; ++i) {
    AgreementCase c;
    c.index = i;
    c.s = s_values[i % 3];
    c.K = K_values[(i / 3) % 3];
    const FamilySpec spec = geometry_spec(c.s, c.K);
    const TrigProfile profile = TrigProfile::random(rng);
    c.point = random_chart_point(rng, chart_for(c.K), uniform(rng, -2.0, 2.0));
    c.finite_difference = ricci_fd(spec, profile, c.point, opt).eigenvalues;
    c.closed_form = sorted_closed_form(profile.jet(c.point.t), c.s, c.K);
    c.relative_error = relative_gap(c.finite_difference, c.closed_form);
    rep.max_relative_error = std::max(rep.max_relative_error, c.relative_error);
    rep.cases.push_back(c);
  }
  rep.passed = rep.max_relative_error < tol;
  return rep;
}

/// Same comparison on a synthesized family, at points kept a tenth of the
/// interval away from either end.
template <SmoothProfile P>
AgreementReport family_agreement(const FamilySpec& spec, const P& profile, double a, double b,
                                 std::uint64_t seed, std::size_t count = 10, double tol = 1e-5,
                                 FdOptions opt = {}) {
  std::mt19937_64 rng(seed);
  const double margin = 0.1 * (b - a);
  AgreementReport rep;
  rep.tolerance = tol;
  for (std::size_t i = 0; i < count; ++i) {
    AgreementCase c;
    c.index = i;
    c.s = spec.s;
    c.K = spec.K;
    c.point = random_chart_point(rng, chart_for(spec.K), uniform(rng, a + margin, b - margin));
    c.finite_difference = ricci_fd(spec, profile, c.point, opt).eigenvalues;
    c.closed_form = sorted_closed_form(profile.jet(c.point.t), spec.s, spec.K);
    c.relative_error = relative_gap(c.finite_difference, c.closed_form);
    rep.max_relative_error = std::max(rep.max_relative_error, c.relative_error);
    rep.cases.push_back(c);
  }
  rep.passed = rep.max_relative_error < tol;
  return rep;
}

struct KillingSample {
  ChartPoint point;
  Eigen::Vector4d direction;
  double defect = 0.0;
};

struct KillingReport {
  std::vector<KillingSample> samples;
  double max_defect = 0.0;
  double tolerance = 1e-4;
  bool passed = false;
};

template <SmoothProfile P>
KillingReport killing_survey(const FamilySpec& spec, const P& profile, double a, double b,
                             std::uint64_t seed, std::size_t count = 20, double tol = 1e-4,
                             KillingOptions opt = {}) {
  std::mt19937_64 rng(seed);
  const double margin = 0.1 * (b - a);
  KillingReport rep;
  rep.tolerance = tol;
  for (std::size_t i = 0; i < count; ++i) {
    KillingSample k;
    k.point = random_chart_point(rng, chart_for(spec.K), uniform(rng, a + margin, b - margin));
    k.direction = normalize(spec, profile, k.point, random_direction(rng));
    k.defect = killing_defect(spec, profile, k.point, k.direction, opt);
    rep.max_defect = std::max(rep.max_defect, k.defect);
    rep.samples.push_back(k);
  }
  rep.passed = rep.max_defect < tol;
  return rep;
}

}  // namespace graysurf
