#include <gtest/gtest.h>

#include "radon/phantom.hpp"
#include "radon/signal.hpp"

using namespace radon;

TEST(Axis, CenteredAndFrequencyAxes) {
  const Axis x = Axis::centered(8, 0.5);
  EXPECT_DOUBLE_EQ(x.at(0), -1.75);
  EXPECT_DOUBLE_EQ(x.last(), 1.75);
  const Axis f = frequency_axis(x);
  EXPECT_DOUBLE_EQ(f.at(0), -1.0);  // -Nyquist
  EXPECT_DOUBLE_EQ(f.step, 0.25);
  EXPECT_THROW(Axis::centered(1, 1.0), DomainError);
}

TEST(Fourier, GaussianSpectrumMatchesClosedForm) {
  // aliasing is e^{-pi (1/dx)^2 / ...}: negligible at dx = 1/8
  const Grid2 g = Grid2::centered(64, 0.125);
  const Image img = sample(gaussian_phantom(), g);
  const Spectrum s = dft2_unitary(img);
  double worst = 0.0;
  for (std::size_t i2 = 0; i2 < s.grid.n2; ++i2)
    for (std::size_t i1 = 0; i1 < s.grid.n1; ++i1) {
      const Vec2 xi = s.grid.point(i1, i2);
      worst = std::max(worst, std::abs(s(i1, i2) - std::exp(-pi * dot(xi, xi))));
    }
  EXPECT_LT(worst, 1e-10);
}

TEST(Fourier, RoundTripAndParseval) {
  const Grid2 g = Grid2::centered(48, 40, 0.2, 0.3);
  const Image img = sample(blobs_phantom(), g);
  const Spectrum s = dft2_unitary(img);
  EXPECT_NEAR(l2_norm_sq(s), l2_norm_sq(img), 1e-10 * l2_norm_sq(img));
  EXPECT_LT(rel_l2_error(idft2_unitary(s, g), img), 1e-13);
}

TEST(Fourier, SpectrumSamplingInvertsTheTransform) {
  const Grid2 g = Grid2::centered(256, 1.0 / 16);
  const Phantom b = blobs_phantom();
  const Image direct = sample_image(g, [&](Vec2 x) { return cplx(b(x), 0.0); });
  const Image via = sample_from_spectrum(b.spectrum, g);
  EXPECT_LT(rel_l2_error(via, direct), 1e-10);
}

TEST(Fourier, LineTransformOfGaussian) {
  const Axis t = Axis::centered(128, 1.0 / 8);
  std::vector<cplx> in(t.n), out(t.n), back(t.n);
  for (std::size_t i = 0; i < t.n; ++i) in[i] = std::exp(-pi * t.at(i) * t.at(i));
  dft_line(in.data(), out.data(), t);
  const Axis tau = frequency_axis(t);
  for (std::size_t k = 0; k < t.n; ++k) EXPECT_NEAR(std::abs(out[k] - std::exp(-pi * tau.at(k) * tau.at(k))), 0.0, 1e-12);
  idft_line(out.data(), back.data(), t);
  for (std::size_t i = 0; i < t.n; ++i) EXPECT_NEAR(std::abs(back[i] - in[i]), 0.0, 1e-13);
}

TEST(Interpolation, BilinearIsExactOnBilinearFunctions) {
  const Grid2 g = Grid2::centered(9, 0.5);
  auto f = [](Vec2 x) { return 1.0 + x.x - 2.0 * x.y + 0.5 * x.x * x.y; };
  const Image img = sample_image(g, [&](Vec2 x) { return cplx(f(x), 0.0); });
  for (Vec2 p : {Vec2{0.13, -0.77}, Vec2{1.9, 1.2}, Vec2{-2.0, 2.0}})
    EXPECT_NEAR(bilinear_sample(img, p).real(), f(p), 1e-12);
  EXPECT_EQ(bilinear_sample(img, {2.01, 0.0}), cplx(0.0));
}

TEST(Interpolation, LinearSampleVanishesOutside) {
  const Axis a = Axis::span(0.0, 1.0, 3);
  const std::vector<cplx> row{1.0, 3.0, 5.0};
  EXPECT_NEAR(linear_sample(row.data(), a, 0.25).real(), 2.0, 1e-15);
  EXPECT_EQ(linear_sample(row.data(), a, -0.01), cplx(0.0));
  EXPECT_EQ(linear_sample(row.data(), a, 1.01), cplx(0.0));
}

TEST(Integrals, LineIntegralOfGaussian) {
  // int e^{-pi (t^2 + s^2)} ds = e^{-pi t^2}
  const Grid2 g = Grid2::centered(256, 1.0 / 32);
  const Image img = sample(gaussian_phantom(), g);
  for (double t : {0.0, 0.3, 0.9})
    for (double th : {0.0, 0.4, 1.3}) {
      const cplx v = line_integral_arclength(img, direction(th), t, 1.0 / 64);
      EXPECT_NEAR(v.real(), std::exp(-pi * t * t), 2e-3);
    }
}

TEST(Integrals, CircleIntegralOfConstantIsTwoPi) {
  const Grid2 g = Grid2::centered(32, 0.25);
  const Image one = sample_image(g, [](Vec2) { return cplx(1.0, 0.0); });
  EXPECT_NEAR(circle_integral(one, {0.2, -0.1}, 1.0, 64).real(), two_pi, 1e-12);
  EXPECT_EQ(circle_integral(one, {40.0, 0.0}, 1.0, 64), cplx(0.0));
  EXPECT_THROW(circle_integral(one, {}, 1.0, 4), DomainError);
}
