#include <gtest/gtest.h>

#include "radon/phantom.hpp"
#include "radon/transforms.hpp"
#include "radon/unitarize.hpp"

using namespace radon;

TEST(Multiplier, ZeroAtTheOrigin) {
  const MultiplierSpec m{0.5, 2.0};
  EXPECT_EQ(m(0.0), 0.0);
  EXPECT_DOUBLE_EQ(m(4.0), 4.0);
}

TEST(Multiplier, SquareOfIIsTheRampFilter) {
  const Grid2 g = Grid2::centered(128, 1.0 / 16);
  const auto s = radon_polar(sample(dog_phantom(), g), default_angles(6), default_offsets(g, 256), default_step(g));
  const auto twice = apply_I_polar(apply_I_polar(s, 4), 4);
  const Array2 ramp = apply_row_multiplier(s.values, s.t, {1.0, 1.0}, 4);
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < ramp.data.size(); ++k) {
    num += std::norm(twice.values.data[k] - ramp.data[k]);
    den += std::norm(ramp.data[k]);
  }
  EXPECT_LT(std::sqrt(num / den), 1e-2);
}

TEST(Isometry, PolarUnitarizedNorm) {
  const Grid2 g = Grid2::centered(256, 1.0 / 16);
  const Image img = sample(dog_phantom(), g);
  const auto s = radon_polar(img, default_angles(180), default_offsets(g, 512), default_step(g));
  const double ratio = std::sqrt(unitarized_norm_sq(s) / l2_norm_sq(img));
  EXPECT_GE(ratio, 0.99);
  EXPECT_LE(ratio, 1.01);
}

TEST(Isometry, AffineUnitarizedNormOnTheConePhantom) {
  // the slope range [-1.25, 1.25] covers the frequency cone of the phantom
  const Grid2 g = Grid2::centered(512, 1.0 / 16);
  const Image img = sample(cone_dog_phantom(), g);
  const auto s = radon_affine(img, default_slopes(128, 1.25), default_offsets(g, 1024), default_step(g));
  const double ratio = std::sqrt(unitarized_norm_sq(s) / l2_norm_sq(img));
  EXPECT_NEAR(ratio, 1.0, 5e-3);
}

TEST(Isometry, CircularUnitarizedNorm) {
  const Grid2 fine = Grid2::centered(512, 1.0 / 16), lat = Grid2::centered(128, 0.25);
  const Image img = sample(dog_phantom(), fine);
  const BesselSquareTail tail(0.5);
  const auto s = radon_circular(img, lat, hybrid_radii(1e-3, 0.5, 0.05, 6.0), 0.5);
  const double ratio = std::sqrt(unitarized_norm_sq(s, tail) / l2_norm_sq(img));
  EXPECT_GE(ratio, 0.99);
  EXPECT_LE(ratio, 1.01);
}

TEST(RadialWeights, ExactForConstants) {
  const std::vector<double> r{0.1, 0.3, 0.35, 1.0, 2.5};
  for (double alpha : {0.25, 0.5, 0.75}) {
    const auto w = radial_weights(r, alpha);
    double sum = 0.0, lin = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      sum += w[i];
      lin += w[i] * r[i];
    }
    EXPECT_NEAR(sum, std::pow(2.5, 1.0 - alpha) / (1.0 - alpha), 1e-12);
    // g(r) = r on [r_0, r_max], constant r_0 below
    const double expect = std::pow(0.1, 2.0 - alpha) / (1.0 - alpha) +
                          (std::pow(2.5, 2.0 - alpha) - std::pow(0.1, 2.0 - alpha)) / (2.0 - alpha);
    EXPECT_NEAR(lin, expect, 1e-12);
  }
}

TEST(FractionalLaplacian, InverseOrdersCancel) {
  const Grid2 g = Grid2::centered(128, 0.25);
  const Image f = sample(dog_phantom(), g);
  for (double s : {0.5, 1.0, 1.5}) EXPECT_LT(rel_l2_error(apply_As(apply_As(f, s), -s), f), 1e-6);
}

TEST(FractionalLaplacian, OrderTwoIsMinusLaplacianOverFourPiSquared) {
  // F[-Delta f] = 4 pi^2 |xi|^2 F f; for the Gaussian -Delta f = (4 pi - 4 pi^2 |x|^2) f
  const Grid2 g = Grid2::centered(128, 1.0 / 16);
  const Image f = sample(gaussian_phantom(), g);
  const Image lap = apply_As(f, 2.0);
  double worst = 0.0;
  for (std::size_t i2 = 0; i2 < g.n2; ++i2)
    for (std::size_t i1 = 0; i1 < g.n1; ++i1) {
      const Vec2 x = g.point(i1, i2);
      const double expect = (4.0 * pi - 4.0 * pi * pi * dot(x, x)) * std::exp(-pi * dot(x, x)) / (4.0 * pi * pi);
      worst = std::max(worst, std::abs(lap(i1, i2).real() - expect));
    }
  EXPECT_LT(worst, 1e-9);
}

TEST(FractionalLaplacian, NegativeOrderNeedsZeroMean) {
  const Grid2 g = Grid2::centered(64, 0.25);
  EXPECT_THROW(apply_As(sample(gaussian_phantom(), g), -0.5), DomainError);
  EXPECT_NO_THROW(apply_As(sample(dog_phantom(), g), -0.5));
}

TEST(CircularMultiplier, DefaultConstantIsKAlpha) {
  const Grid2 g = Grid2::centered(32, 0.25);
  const auto s = radon_circular(sample(dog_phantom(), g), g, {0.5, 1.0}, 0.5);
  const auto a = apply_I_circular(s), b = apply_center_multiplier(s, {0.25, k_alpha(0.5)});
  for (std::size_t k = 0; k < a.values.size(); ++k) EXPECT_EQ(a.values[k], b.values[k]);
}
