#include <gtest/gtest.h>

#include <cmath>

#include "radon/special.hpp"

using namespace radon;

namespace {

// int_0^inf J0(t)^2 t^{-alpha} dt = Gamma(alpha) Gamma((1 - alpha)/2) / (2^alpha Gamma((1 + alpha)/2)^3)
double bessel_square_moment(double alpha) {
  return std::tgamma(alpha) * std::tgamma(0.5 * (1.0 - alpha)) /
         (std::pow(2.0, alpha) * std::pow(std::tgamma(0.5 * (1.0 + alpha)), 3));
}

}  // namespace

TEST(Bessel, MatchesLibraryValuesOnBothBranches) {
  double worst = 0.0;
  for (double x = 0.0; x <= 60.0; x += 0.173) worst = std::max(worst, std::abs(bessel_j0(x) - std::cyl_bessel_j(0.0, x)));
  EXPECT_LT(worst, 1e-8);
  EXPECT_NEAR(bessel_j0(-3.0), bessel_j0(3.0), 0.0);
}

TEST(Bessel, ContinuousAcrossTheSwitch) {
  const double lo = bessel_j0(std::nextafter(bessel_switch, 0.0)), hi = bessel_j0(bessel_switch);
  EXPECT_NEAR(lo, hi, 1e-10);
}

TEST(Quadrature, AdaptiveSimpson) {
  const auto r = adaptive_quad([](double x) { return std::sin(x); }, 0.0, pi, 1e-12);
  EXPECT_NEAR(r.value, 2.0, 1e-10);
}

TEST(Quadrature, NonFiniteIntegrandIsReported) {
  EXPECT_THROW(adaptive_quad([](double x) { return 1.0 / x; }, 0.0, 1.0, 1e-8), QuadratureError);
}

TEST(Calpha, MatchesTheWeberSchafheitlinClosedForm) {
  for (double alpha : {0.25, 0.5, 0.75}) {
    const double exact = std::pow(two_pi, alpha + 1.0) * bessel_square_moment(alpha);
    EXPECT_NEAR(c_alpha(alpha) / exact, 1.0, 1e-5) << alpha;
  }
}

TEST(Calpha, DualQuadratureAgreement) {
  const double a = c_alpha(0.5, CalphaScheme::adaptive_simpson), b = c_alpha(0.5, CalphaScheme::midpoint);
  EXPECT_LT(std::abs(a - b) / a, 1e-4);
  EXPECT_NEAR(k_alpha(0.5), 1.0 / std::sqrt(a), 1e-12);
}

TEST(Calpha, AlphaOutsideTheUnitIntervalRejected) {
  EXPECT_THROW(c_alpha(0.0), DomainError);
  EXPECT_THROW(c_alpha(1.0), DomainError);
}

TEST(BesselSquareTail, StartsAtTheFullMoment) {
  const BesselSquareTail tail(0.5);
  EXPECT_NEAR(tail(0.0) / bessel_square_moment(0.5), 1.0, 1e-4);
  EXPECT_NEAR(tail.total(), tail(0.0), 1e-12);
  EXPECT_LT(tail(50.0), tail(10.0));
  EXPECT_GT(tail(1e4), 0.0);
}
