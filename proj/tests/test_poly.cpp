#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "graysurf/families.hpp"
#include "graysurf/polynomial.hpp"

using namespace graysurf;

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Polynomial random_poly(std::mt19937_64& rng, int degree) {
  std::vector<double> c(static_cast<std::size_t>(degree) + 1);
  for (auto& v : c) v = uniform(rng, -1.0, 1.0);
  if (std::abs(c.back()) < 0.1) c.back() = 0.5;
  return Polynomial(c);
}

}  // namespace

TEST(Polynomial, TrimsTrailingZeros) {
  const Polynomial p{1.0, 2.0, 0.0, 0.0};
  EXPECT_EQ(p.degree(), 1);
  EXPECT_EQ(Polynomial{}.degree(), -1);
  EXPECT_TRUE(Polynomial({0.0, 0.0}).is_zero());
}

TEST(Polynomial, EvalNearEta) {
  const Polynomial S = s_polynomial();
  EXPECT_LT(std::abs(eval(S, -0.8245)), 2e-3);
}

TEST(Polynomial, EvalZeroAndSimple) {
  EXPECT_EQ(eval(Polynomial{}, 3.7), 0.0);
  EXPECT_EQ(eval(Polynomial{-1.0, 0.0, 1.0}, 2.0), 3.0);
}

TEST(Polynomial, Derivative) {
  EXPECT_TRUE(derivative(Polynomial{5.0}).is_zero());
  EXPECT_EQ(derivative(Polynomial{0.0, 0.0, 0.0, 1.0}), (Polynomial{0.0, 0.0, 3.0}));
  EXPECT_EQ(derivative(s_polynomial()), (Polynomial{75.0, 10.0, 3.0}));
}

TEST(Polynomial, ArithmeticAndRoots) {
  const std::vector<double> roots{-2.0, 0.5, 3.0};
  const Polynomial p = Polynomial::from_roots(roots, 2.0);
  for (double r : roots) EXPECT_NEAR(p(r), 0.0, 1e-12);
  EXPECT_EQ(p.coefficient(3), 2.0);
  const auto [q, r] = divide(p, Polynomial{-0.5, 1.0});
  EXPECT_NEAR(r.is_zero() ? 0.0 : r.coefficient(0), 0.0, 1e-12);
  const Polynomial d = deflate(p, 0.5);
  for (double t : {-1.0, 0.0, 1.7}) {
    EXPECT_NEAR(q(t), d(t), 1e-12);
    EXPECT_NEAR(d(t) * (t - 0.5), p(t), 1e-12);
  }
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ((p + Polynomial{1.0})(0.5), 1.0);
}

TEST(Polynomial, EvalJetMatchesDerivatives) {
  const Polynomial p{1.0, -2.0, 0.5, 3.0, -1.0};
  const Jet2 j = eval_jet(p, 0.7);
  EXPECT_NEAR(j.value, p(0.7), 1e-14);
  EXPECT_NEAR(j.d1, derivative(p)(0.7), 1e-13);
  EXPECT_NEAR(j.d2, derivative(derivative(p))(0.7), 1e-13);
}

TEST(RealRoots, EtaIsTheOnlyRoot) {
  const auto roots = real_roots(s_polynomial(), -2.0, 0.0, 1e-9);
  ASSERT_EQ(roots.size(), 1u);
  EXPECT_LT(std::abs(roots[0] - (-0.8245)), 5e-5);
}

TEST(RealRoots, SimpleCases) {
  const auto r = real_roots(Polynomial{-0.25, 0.0, 1.0}, 0.0, 1.0);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_NEAR(r[0], 0.5, 1e-12);
  EXPECT_TRUE(real_roots(Polynomial{1.0, 0.0, 1.0}, -10.0, 10.0).empty());
}

TEST(RealRoots, Errors) {
  EXPECT_THROW(real_roots(Polynomial{}, 0.0, 1.0), DomainError);
  EXPECT_THROW(real_roots(Polynomial{1.0, 1.0}, 1.0, 1.0), DomainError);
  EXPECT_THROW(real_roots(Polynomial{1.0, 1.0}, 0.0, 1.0, 0.0), DomainError);
}

TEST(RealRoots, EvenMultiplicity) {
  // (t - 0.3)^2 (t + 2): double root found through the derivative.
  const std::vector<double> planted{0.3, 0.3, -2.0};
  const auto r = real_roots(Polynomial::from_roots(planted), -1.0, 1.0);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_NEAR(r[0], 0.3, 1e-9);
  const auto sq = real_roots(Polynomial{0.0, 0.0, 1.0}, -1.0, 1.0);
  ASSERT_EQ(sq.size(), 1u);
  EXPECT_EQ(sq[0], 0.0);
}

TEST(RealRoots, TripleRootJustOutsideInterval) {
  const Polynomial f = torus_factor();
  EXPECT_TRUE(real_roots(f, 1.0 + 1e-9, 100.0).empty());
  const auto with_end = real_roots(f, 1.0, 100.0);
  ASSERT_EQ(with_end.size(), 1u);
  EXPECT_EQ(with_end[0], 1.0);
}

TEST(RealRoots, RecoversPlantedRoots) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int degree = 1 + static_cast<int>(rng() % 6);
    std::vector<double> planted;
    while (static_cast<int>(planted.size()) < degree) {
      const double r = uniform(rng, -5.0, 5.0);
      bool separated = true;
      for (double q : planted) separated = separated && std::abs(q - r) > 0.05;
      if (separated) planted.push_back(r);
    }
    const double lead = uniform(rng, 0.5, 2.0) * (rng() % 2 ? 1.0 : -1.0);
    const Polynomial p = Polynomial::from_roots(planted, lead);
    const double lo = uniform(rng, -6.0, 0.0), hi = uniform(rng, 0.1, 6.0);
    std::vector<double> expected;
    for (double r : planted)
      if (r > lo + 1e-6 && r < hi - 1e-6) expected.push_back(r);
    std::sort(expected.begin(), expected.end());
    const auto found = real_roots(p, lo, hi);
    ASSERT_EQ(found.size(), expected.size()) << "trial " << trial;
    EXPECT_TRUE(std::is_sorted(found.begin(), found.end()));
    for (std::size_t i = 0; i < found.size(); ++i) EXPECT_NEAR(found[i], expected[i], 1e-9);
  }
}

TEST(CertifyPositive, QxExamples) {
  EXPECT_TRUE(certify_positive(q_polynomial(0.5), 0.5, 1.0).positive);
  const auto c = certify_positive(q_polynomial(-0.9), -0.9, 1.0);
  EXPECT_FALSE(c.positive);
  ASSERT_TRUE(std::isfinite(c.witness));
  EXPECT_GT(c.witness, -0.9);
  EXPECT_LT(c.witness, 1.0);
  EXPECT_LE(q_polynomial(-0.9)(c.witness), 1e-12);
}

TEST(CertifyPositive, TouchingZero) {
  const auto c = certify_positive(Polynomial{0.0, 0.0, 1.0}, -1.0, 1.0);
  EXPECT_FALSE(c.positive);
  EXPECT_EQ(c.witness, 0.0);
}

TEST(CertifyPositive, OpenIntervalIgnoresEndRoots) {
  // (1 - t^2) is positive on (-1, 1) although it vanishes at both ends.
  EXPECT_TRUE(certify_positive(Polynomial{1.0, 0.0, -1.0}, -1.0, 1.0).positive);
}

TEST(CertifyPositive, AgreesWithRootsAndMinimum) {
  std::mt19937_64 rng(77);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Polynomial p = random_poly(rng, 1 + static_cast<int>(rng() % 6));
    p = p + Polynomial{uniform(rng, -0.5, 1.5)};
    const double lo = uniform(rng, -2.0, 0.5);
    const double hi = lo + uniform(rng, 0.1, 2.0);
    const double mn = min_on_interval(p, lo, hi).value;
    if (std::abs(mn) < 1e-9) continue;  // borderline: decided by round-off
    bool interior_change = false;
    for (double r : real_roots(p, lo, hi))
      if (r > lo + 1e-9 && r < hi - 1e-9) interior_change = true;
    const bool expected = !(interior_change || mn <= 0.0);
    EXPECT_EQ(certify_positive(p, lo, hi).positive, expected) << "trial " << trial;
    ++checked;
  }
  EXPECT_GT(checked, 950);
}

TEST(Polynomial, CentralDifferenceMatchesDerivative) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial p = random_poly(rng, 2 + static_cast<int>(rng() % 5));
    const Polynomial dp = derivative(p);
    const double t = uniform(rng, -1.5, 1.5);
    auto err = [&](double h) { return std::abs((p(t + h) - p(t - h)) / (2 * h) - dp(t)); };
    const double third = std::abs(derivative(derivative(dp))(t));
    // Truncation is h^2 p'''(xi) / 6; allow a generous bound on p''' near t.
    EXPECT_LE(err(1e-3), 1e-6 * (1.0 + third) * 10.0);
    if (err(2e-3) > 1e-9) {
      EXPECT_NEAR(err(2e-3) / err(1e-3), 4.0, 0.5);
    }
  }
}

TEST(Polynomial, CompensatedEvaluation) {
  const Polynomial f = torus_factor();
  const double t = 1.0 + 1e-9;
  const auto v = eval_compensated(f, t);
  // (t+1)(t-1)^3(2t^2+t+2) with t - 1 taken exactly from the double.
  const double d = t - 1.0;
  const double exact = (t + 1.0) * d * d * d * (2.0 * t * t + t + 2.0);
  EXPECT_GT(v.value, 0.0);
  EXPECT_NEAR(v.value, exact, 1e-3 * exact);
  EXPECT_LT(v.error, exact);
}
