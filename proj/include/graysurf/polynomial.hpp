#pragma once

// Real univariate polynomials: Horner evaluation, formal calculus,
// real-root isolation on an interval and positivity certificates.
//
// Root isolation recurses on the derivative: the critical points of p split
// [lo, hi] into pieces on which p is monotone, so every piece holds at most
// one simple root (bracketed and refined by safeguarded Newton) and every
// even-multiplicity root shows up as a critical point where p touches zero.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "graysurf/errors.hpp"

namespace graysurf {

class Polynomial {
 public:
  Polynomial() = default;

  /// Coefficients in ascending degree; trailing zeros are dropped.
  explicit Polynomial(std::vector<double> coefficients)
      : coefficients_(std::move(coefficients)) {
    trim();
  }

  Polynomial(std::initializer_list<double> coefficients)
      : coefficients_(coefficients) {
    trim();
  }

  /// lead * prod (t - r_i)
  static Polynomial from_roots(std::span<const double> roots, double lead = 1.0) {
    Polynomial p{lead};
    for (double r : roots) p = p * Polynomial{-r, 1.0};
    return p;
  }

  static Polynomial monomial(int degree, double coefficient = 1.0) {
    std::vector<double> c(static_cast<std::size_t>(degree) + 1, 0.0);
    c.back() = coefficient;
    return Polynomial(std::move(c));
  }

  const std::vector<double>& coefficients() const noexcept { return coefficients_; }

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const noexcept { return coefficients_.empty(); }

  double coefficient(int i) const noexcept {
    return (i >= 0 && i <= degree()) ? coefficients_[static_cast<std::size_t>(i)] : 0.0;
  }

  double operator()(double t) const noexcept {
    double acc = 0.0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<double> c(std::max(a.coefficients_.size(), b.coefficients_.size()), 0.0);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i) c[i] += a.coefficients_[i];
    for (std::size_t i = 0; i < b.coefficients_.size(); ++i) c[i] += b.coefficients_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a) { return -1.0 * a; }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<double> c(a.coefficients_.size() + b.coefficients_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
      for (std::size_t j = 0; j < b.coefficients_.size(); ++j)
        c[i + j] += a.coefficients_[i] * b.coefficients_[j];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(double k, const Polynomial& p) {
    std::vector<double> c = p.coefficients_;
    for (double& v : c) v *= k;
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coefficients_.empty() && coefficients_.back() == 0.0) coefficients_.pop_back();
  }

  std::vector<double> coefficients_;
};

inline double eval(const Polynomial& p, double t) noexcept { return p(t); }

inline Polynomial derivative(const Polynomial& p) {
  if (p.degree() < 1) return {};
  std::vector<double> c(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) c[static_cast<std::size_t>(i - 1)] = i * p.coefficient(i);
  return Polynomial(std::move(c));
}

/// Value and first two derivatives in one Horner pass.
struct Jet2 {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

inline Jet2 eval_jet(const Polynomial& p, double t) noexcept {
  Jet2 j;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    j.d2 = j.d2 * t + 2.0 * j.d1;
    j.d1 = j.d1 * t + j.value;
    j.value = j.value * t + *it;
  }
  return j;
}

/// Quotient and remainder of a / b.
inline std::pair<Polynomial, Polynomial> divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw SingularError("polynomial division by zero");
  std::vector<double> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial{}, a};
  std::vector<double> quot(static_cast<std::size_t>(a.degree() - db + 1), 0.0);
  const double lead = b.coefficient(db);
  for (int i = a.degree() - db; i >= 0; --i) {
    const double q = rem[static_cast<std::size_t>(i + db)] / lead;
    quot[static_cast<std::size_t>(i)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i + j)] -= q * b.coefficient(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

/// Synthetic division by (t - root); the (small) remainder is discarded.
inline Polynomial deflate(const Polynomial& p, double root) {
  if (p.degree() < 1) return {};
  std::vector<double> q(static_cast<std::size_t>(p.degree()), 0.0);
  double carry = 0.0;
  for (int i = p.degree(); i >= 1; --i) {
    carry = carry * root + p.coefficient(i);
    q[static_cast<std::size_t>(i - 1)] = carry;
  }
  return Polynomial(std::move(q));
}

/// Round-off scale of Horner evaluation at t.
inline double eval_error_bound(const Polynomial& p, double t) noexcept {
  double acc = 0.0;
  const double at = std::abs(t);
  for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it)
    acc = acc * at + std::abs(*it);
  return 32.0 * std::numeric_limits<double>::epsilon() * acc;
}

/// Horner evaluation with error-free transformations (compensated Horner):
/// the result is as accurate as plain Horner in twice the working precision.
struct CompensatedValue {
  double value = 0.0;
  /// Bound on |value - p(t)|.
  double error = 0.0;
};

inline CompensatedValue eval_compensated(const Polynomial& p, double t) noexcept {
  const auto& c = p.coefficients();
  if (c.empty()) return {};
  double r = c.back(), err = 0.0;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    const double prod = r * t;
    const double prod_err = std::fma(r, t, -prod);
    const double sum = prod + c[i];
    const double bb = sum - prod;
    const double sum_err = (prod - (sum - bb)) + (c[i] - bb);
    err = err * t + (prod_err + sum_err);
    r = sum;
  }
  const double value = r + err;
  const double u = 0.5 * std::numeric_limits<double>::epsilon();
  const double n = static_cast<double>(c.size());
  const double gamma = 2.0 * n * u / (1.0 - 2.0 * n * u);
  double magnitude = 0.0;
  const double at = std::abs(t);
  for (auto it = c.rbegin(); it != c.rend(); ++it) magnitude = magnitude * at + std::abs(*it);
  return {value, 2.0 * u * std::abs(value) + 4.0 * gamma * gamma * magnitude};
}

namespace detail {

inline int sign_of(double v) noexcept { return (v > 0.0) - (v < 0.0); }

// p has a strict sign change on [l, r] and is monotone there.
inline double refine_bracket(const Polynomial& p, const Polynomial& dp, double l, double r,
                             double tol) {
  // Signs must agree with the compensated knot values.
  auto val = [&](double t) { return eval_compensated(p, t).value; };
  double fl = val(l);
  double x = 0.5 * (l + r);
  for (int iter = 0; iter < 200 && (r - l) > tol; ++iter) {
    const double fx = val(x);
    if (fx == 0.0) return x;
    if (sign_of(fx) == sign_of(fl)) {
      l = x;
      fl = fx;
    } else {
      r = x;
    }
    const double dfx = dp(x);
    double next = (dfx != 0.0) ? x - fx / dfx : 0.5 * (l + r);
    if (!(next > l && next < r)) next = 0.5 * (l + r);
    if (std::abs(next - x) < 0.25 * tol) {
      // Newton has converged; pin the bracket around the estimate.
      const double lo_probe = std::max(l, next - 0.5 * tol);
      const double hi_probe = std::min(r, next + 0.5 * tol);
      const double flo = val(lo_probe);
      const double fhi = val(hi_probe);
      if (sign_of(flo) != sign_of(fhi) || flo == 0.0 || fhi == 0.0) {
        l = lo_probe;
        r = hi_probe;
        break;
      }
    }
    if (next == x) break;
    x = next;
  }
  return 0.5 * (l + r);
}

}  // namespace detail

/// All real roots of p in [lo, hi], ascending, each located to within tol.
/// Even-multiplicity roots are reported once, at the critical point where p
/// touches zero. Throws DomainError for the zero polynomial.
inline std::vector<double> real_roots(const Polynomial& p, double lo, double hi,
                                      double tol = 1e-12) {
  if (!(lo < hi)) throw DomainError("real_roots: require lo < hi");
  if (!(tol > 0.0)) throw DomainError("real_roots: require tol > 0");
  if (p.is_zero()) throw DomainError("real_roots: polynomial vanishes identically");
  std::vector<double> roots;
  if (p.degree() == 0) return roots;
  if (p.degree() == 1) {
    const double r = -p.coefficient(0) / p.coefficient(1);
    if (r >= lo && r <= hi) roots.push_back(r);
    return roots;
  }

  // Knots: the interval ends (exact) and the critical points (each known only
  // to within tol, so p may touch zero within |p'| tol of the knot).
  const Polynomial dp = derivative(p);
  std::vector<double> knots{lo};
  std::vector<bool> critical{false};
  for (double c : real_roots(dp, lo, hi, tol))
    if (c > knots.back()) {
      knots.push_back(c);
      critical.push_back(true);
    }
  if (hi > knots.back()) {
    knots.push_back(hi);
    critical.push_back(false);
  } else {
    critical.back() = false;
  }

  std::vector<double> values(knots.size());
  std::vector<bool> touches(knots.size());
  for (std::size_t i = 0; i < knots.size(); ++i) {
    const CompensatedValue v = eval_compensated(p, knots[i]);
    values[i] = v.value;
    double slack = v.error;
    if (critical[i]) slack += eval_error_bound(p, knots[i]) + std::abs(dp(knots[i])) * tol;
    touches[i] = std::abs(values[i]) <= slack;
    if (touches[i]) roots.push_back(knots[i]);
  }
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    if (touches[i] || touches[i + 1]) continue;
    if (detail::sign_of(values[i]) * detail::sign_of(values[i + 1]) < 0)
      roots.push_back(detail::refine_bracket(p, dp, knots[i], knots[i + 1], tol));
  }

  std::sort(roots.begin(), roots.end());
  std::vector<double> unique;
  for (double r : roots)
    if (unique.empty() || r - unique.back() > tol) unique.push_back(r);
  return unique;
}

struct IntervalMinimum {
  double argmin = 0.0;
  double value = 0.0;
};

/// Minimum of p over the closed interval [lo, hi].
inline IntervalMinimum min_on_interval(const Polynomial& p, double lo, double hi,
                                       double tol = 1e-12) {
  IntervalMinimum best{lo, p(lo)};
  auto consider = [&](double t) {
    const double v = p(t);
    if (v < best.value) best = {t, v};
  };
  consider(hi);
  const Polynomial dp = derivative(p);
  if (!dp.is_zero())
    for (double c : real_roots(dp, lo, hi, tol)) consider(c);
  return best;
}

struct PositivityCertificate {
  bool positive = false;
  /// A point of (lo, hi) where p <= 0 (up to round-off) when !positive.
  double witness = std::numeric_limits<double>::quiet_NaN();
  /// Minimum of p over the closed interval.
  double min_value = 0.0;
};

/// Decides whether p > 0 on the open interval (lo, hi).
inline PositivityCertificate certify_positive(const Polynomial& p, double lo, double hi,
                                              double tol = 1e-12) {
  if (!(lo < hi)) throw DomainError("certify_positive: require lo < hi");
  PositivityCertificate cert;
  if (p.is_zero()) {
    cert.witness = 0.5 * (lo + hi);
    return cert;
  }
  cert.min_value = min_on_interval(p, lo, hi, tol).value;

  const double edge = 2.0 * tol;
  for (double r : real_roots(p, lo, hi, tol)) {
    if (r <= lo + edge * std::max(1.0, std::abs(lo)) ||
        r >= hi - edge * std::max(1.0, std::abs(hi)))
      continue;
    double w = r;
    for (double c : {r - tol, r + tol})
      if (c > lo && c < hi && p(c) < p(w)) w = c;
    cert.witness = w;
    return cert;
  }
  // No interior root: the sign is constant on (lo, hi).
  const double mid = 0.5 * (lo + hi);
  if (p(mid) > 0.0) {
    cert.positive = true;
  } else {
    cert.witness = mid;
  }
  return cert;
}

/// num / den with value and first two derivatives.
inline Jet2 eval_rational_jet(const Polynomial& num, const Polynomial& den, double t) {
  const Jet2 n = eval_jet(num, t);
  const Jet2 d = eval_jet(den, t);
  if (d.value == 0.0) throw DomainError("rational function has a pole here");
  Jet2 r;
  r.value = n.value / d.value;
  r.d1 = (n.d1 - r.value * d.d1) / d.value;
  r.d2 = (n.d2 - 2.0 * r.d1 * d.d1 - r.value * d.d2) / d.value;
  return r;
}

}  // namespace graysurf
