#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "graysurf/families.hpp"
#include "graysurf/profile.hpp"

using namespace graysurf;

namespace {

// z0 = 1 - t^2 on (-1, 1): H = sin t, F = cos t.
FamilySpec unit_circle_spec() {
  FamilySpec spec;
  spec.kind = FamilyKind::custom;
  spec.s = 1.0;
  spec.K = 0.0;
  spec.A = -1;
  spec.x = 1.0;
  spec.y = -1.0;
  const Polynomial one_minus{1.0, 0.0, -1.0};
  spec.P = one_minus * one_minus;
  return spec;
}

// Midpoint rule for the half length after h = s x sin(theta), which removes
// the inverse square-root singularity at the end.
double brute_half_length(const FamilySpec& spec, int panels) {
  const double s = spec.s, x = spec.x;
  auto z0 = [&](double t) {
    double acc = 0.0;
    const auto& c = spec.P.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc / (1.0 - t * t);
  };
  const double width = std::numbers::pi / 2 / panels;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double th = (i + 0.5) * width;
    sum += s * x * std::cos(th) / std::sqrt(z0(x * std::sin(th)));
  }
  return sum * width;
}

}  // namespace

TEST(HalfLength, ArcsineIntegral) {
  EXPECT_NEAR(half_length(unit_circle_spec()), std::numbers::pi / 2, 1e-13);
}

TEST(HalfLength, DoubleRootDiverges) {
  FamilySpec spec = unit_circle_spec();
  const Polynomial one_minus{1.0, 0.0, -1.0};
  spec.P = 0.25 * (one_minus * one_minus * one_minus);
  EXPECT_THROW(half_length(spec), DivergenceError);
}

TEST(HalfLength, BruteForceQuadrature) {
  const FamilySpec spec = genus_family(2, 1, 0.5);
  EXPECT_NEAR(half_length(spec), brute_half_length(spec, 1000000), 1e-7);
}

TEST(HalfLength, BruteForceOtherFamilies) {
  for (auto spec : {genus_family(1, 1, 0.3), genus_family(2, 3, 0.8), genus_family(5, 2, 0.95)})
    EXPECT_NEAR(half_length(spec), brute_half_length(spec, 200000), 1e-7);
}

TEST(Synthesize, SineProfile) {
  const ProfileGrid g = synthesize_profile(unit_circle_spec(), 256);
  ASSERT_EQ(g.size(), 257u);
  EXPECT_NEAR(g.a, -std::numbers::pi / 2, 1e-13);
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_NEAR(g.H[i], std::sin(g.t[i]), 1e-9);
    EXPECT_NEAR(g.F[i], std::cos(g.t[i]), 1e-9);
    EXPECT_NEAR(g.dF[i], -std::sin(g.t[i]), 1e-9);
  }
}

TEST(Synthesize, GenusEndpoints) {
  const FamilySpec spec = genus_family(2, 1, 0.5);
  const ProfileGrid g = synthesize_profile(spec);
  ASSERT_EQ(g.size(), 2049u);
  const std::size_t last = g.size() - 1;
  EXPECT_NEAR(g.H[0], -spec.s * 0.5, 1e-12);
  EXPECT_NEAR(g.H[last], spec.s * 0.5, 1e-12);
  EXPECT_NEAR(g.F[0], 0.0, 1e-12);
  EXPECT_NEAR(g.F[last], 0.0, 1e-12);
  EXPECT_NEAR(g.dF[0], 1.0, 1e-12);  // H''(a)
  EXPECT_NEAR(g.dF[last], -1.0, 1e-12);
  EXPECT_NEAR(g.a, -half_length(spec), 1e-14);
}

TEST(Synthesize, Rejections) {
  EXPECT_THROW(synthesize_profile(genus_family(2, 1, 0.5), 15), DomainError);
}

TEST(Synthesize, BaseRelation) {
  for (auto spec : {genus_family(2, 1, 0.5), genus_family(1, 2, 0.3)}) {
    const ProfileGrid g = synthesize_profile(spec, 512);
    for (std::size_t i = 0; i < g.size(); ++i)
      EXPECT_NEAR(g.G[i] * g.G[i], std::abs(spec.s * spec.s - g.H[i] * g.H[i]), 1e-12);
  }
  for (auto spec : {cp2_family(0.5, 1), cp2_family(3.0, -1)}) {
    const ProfileGrid g = synthesize_profile(spec, 512);
    for (std::size_t i = 0; i < g.size(); ++i)
      EXPECT_NEAR(g.G[i] * g.G[i], std::abs(1.0 - g.H[i] * g.H[i]), 1e-12 * (1 + g.H[i] * g.H[i]));
  }
}

TEST(Synthesize, FiniteDifferenceSelfConsistency) {
  const ProfileGrid g = synthesize_profile(genus_family(2, 1, 0.5), 1024);
  const double h = g.step();
  double errF = 0.0, errdF = 0.0;
  for (std::size_t i = 1; i + 1 < g.size(); ++i) {
    errF = std::max(errF, std::abs((g.H[i + 1] - g.H[i - 1]) / (2 * h) - g.F[i]));
    errdF = std::max(errdF, std::abs((g.F[i + 1] - g.F[i - 1]) / (2 * h) - g.dF[i]));
  }
  // Central differences: O(h^2) with modest constants on this profile.
  EXPECT_LT(errF, 10 * h * h);
  EXPECT_LT(errdF, 10 * h * h);
}

TEST(Synthesize, GenusSymmetry) {
  for (auto spec : {genus_family(2, 1, 0.5), genus_family(3, 2, 0.7)}) {
    const ProfileGrid g = synthesize_profile(spec, 1000);
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(g.H[i], -g.H[n - 1 - i], 1e-9);
      EXPECT_NEAR(g.G[i], g.G[n - 1 - i], 1e-9);
      EXPECT_NEAR(g.F[i], g.F[n - 1 - i], 1e-9);
    }
  }
}

TEST(Synthesize, RefinementConvergence) {
  const FamilySpec spec = genus_family(2, 3, 0.8);
  const ProfileGrid coarse = synthesize_profile(spec, 1024);
  const ProfileGrid fine = synthesize_profile(spec, 2048);
  EXPECT_LT(std::abs(coarse.b - fine.b), 1e-10);
  for (std::size_t i = 0; i < coarse.size(); ++i) {
    EXPECT_NEAR(coarse.H[i], fine.H[2 * i], 1e-12);
    EXPECT_NEAR(coarse.F[i], fine.F[2 * i], 1e-12);
  }
}

TEST(Synthesize, PositivityOfRadii) {
  for (auto spec : {genus_family(2, 1, 0.5), cp2_family(0.5, 1), cp2_family(1.5, -1)}) {
    const ProfileGrid g = synthesize_profile(spec, 512);
    for (std::size_t i = 1; i + 1 < g.size(); ++i) {
      EXPECT_GT(g.F[i], 0.0);
      EXPECT_GT(g.G[i], 0.0);
    }
  }
  const ProfileGrid two = synthesize_profile(genus_family(2, 1, 0.5), 512);
  EXPECT_GT(two.G.front(), 0.0);
  EXPECT_GT(two.G.back(), 0.0);
  const ProfileGrid cp = synthesize_profile(cp2_family(0.5, 1), 512);
  EXPECT_GT(cp.G.front(), 0.0);
  EXPECT_NEAR(cp.G.back(), 0.0, 1e-15);
}

TEST(BoundaryReport, GenusFamily) {
  const ProfileGrid g = synthesize_profile(genus_family(2, 1, 0.5));
  const BoundaryReport rep = boundary_report(g);
  EXPECT_EQ(rep.kind, BoundaryKind::two_sphere_ends);
  EXPECT_TRUE(rep.passed);
  EXPECT_LT(rep.max_residual(), 1e-6);
  EXPECT_NEAR(g.G.front(), std::sqrt(0.75), 1e-12);
  EXPECT_NEAR(g.G.back(), std::sqrt(0.75), 1e-12);
  EXPECT_EQ(rep.residuals.size(), 8u);
}

TEST(BoundaryReport, Cp2Family) {
  const ProfileGrid g = synthesize_profile(cp2_family(0.5, 1));
  const BoundaryReport rep = boundary_report(g);
  EXPECT_EQ(rep.kind, BoundaryKind::cp2_ends);
  EXPECT_TRUE(rep.passed);
  EXPECT_NEAR(g.dF.back(), -1.0, 1e-9);
  EXPECT_NEAR(g.dG.back(), -1.0, 1e-9);
  EXPECT_NEAR(g.G.back(), 0.0, 1e-12);
  EXPECT_NEAR(g.dG.front(), 0.0, 1e-12);
}

TEST(BoundaryReport, Cp2OppositeOrientationClosesAtA) {
  const ProfileGrid g = synthesize_profile(cp2_family(1.5, -1));
  const BoundaryReport rep = boundary_report(g);
  EXPECT_EQ(rep.kind, BoundaryKind::cp2_ends);
  EXPECT_TRUE(rep.passed);
  EXPECT_NEAR(g.G.front(), 0.0, 1e-12);
  EXPECT_NEAR(g.dG.front(), 1.0, 1e-9);
  EXPECT_NEAR(g.dG.back(), 0.0, 1e-12);
}

TEST(BoundaryReport, WrongSlopeFails) {
  // Roots at +-x but z0'(+-x) = -+1.9 s instead of -+2 s.
  FamilySpec spec = genus_family(2, 1, 0.5);
  spec.kind = FamilyKind::custom;
  spec.P = build_P_symmetric(0.5, 0.95 * spec.s, spec.eps);
  const BoundaryReport rep = boundary_report(synthesize_profile(spec));
  EXPECT_FALSE(rep.passed);
  EXPECT_NEAR(rep.max_residual(), 0.05, 5e-3);
}
