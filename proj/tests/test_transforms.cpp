#include <gtest/gtest.h>

#include "radon/phantom.hpp"
#include "radon/sinogram.hpp"
#include "radon/transforms.hpp"

using namespace radon;

namespace {

const Grid2& fine_grid() {
  static const Grid2 g = Grid2::centered(256, 1.0 / 32);
  return g;
}

const Image& gaussian_image() {
  static const Image img = sample(gaussian_phantom(), fine_grid());
  return img;
}

}  // namespace

// Closed forms for f = e^{-pi |x|^2}:
// R_pol f(theta, t) = e^{-pi t^2}, R_aff f(v, t) = e^{-pi t^2/(1+v^2)} / sqrt(1+v^2),
// circle integral around the origin = 2 pi e^{-pi r^2}.
TEST(RadonPolar, GaussianMatchesClosedForm) {
  const Axis th = default_angles(12), ts = default_offsets(fine_grid(), 64);
  const auto s = radon_polar(gaussian_image(), th, ts, default_step(fine_grid()));
  for (std::size_t i = 0; i < th.n; ++i)
    for (std::size_t j = 0; j < ts.n; ++j)
      EXPECT_NEAR(s.values(i, j).real(), std::exp(-pi * ts.at(j) * ts.at(j)), 1e-3);
}

TEST(RadonAffine, GaussianMatchesClosedForm) {
  const Axis vs = default_slopes(9), ts = default_offsets(fine_grid(), 64);
  const auto s = radon_affine(gaussian_image(), vs, ts, default_step(fine_grid()));
  for (std::size_t i = 0; i < vs.n; ++i)
    for (std::size_t j = 0; j < ts.n; ++j) {
      const double q = 1.0 + vs.at(i) * vs.at(i), t = ts.at(j);
      EXPECT_NEAR(s.values(i, j).real(), std::exp(-pi * t * t / q) / std::sqrt(q), 1e-3);
    }
}

TEST(RadonCircular, GaussianMatchesClosedForm) {
  const Grid2 centers = Grid2::centered(3, 0.5);
  const std::vector<double> radii{0.1, 0.5, 1.0, 1.5};
  const auto s = radon_circular(gaussian_image(), centers, radii, 0.5);
  for (std::size_t ir = 0; ir < radii.size(); ++ir) {
    // bounded by the bilinear sampling bias, dx^2 |Delta f| / 8 per axis
    const double r2 = radii[ir] * radii[ir], dx = fine_grid().dx;
    const double expect = two_pi * std::exp(-pi * r2);
    const double laplacian = std::abs(4.0 * pi * pi * r2 - 4.0 * pi) * expect;
    EXPECT_NEAR(s.at(4, ir).real(), expect, 0.25 * dx * dx * laplacian);
  }
}

TEST(RadonPolar, IsLinear) {
  const Grid2 g = Grid2::centered(64, 0.125);
  const Image a = sample(blobs_phantom(), g), b = sample(dog_phantom(), g);
  Image c(g);
  for (std::size_t k = 0; k < c.data.size(); ++k) c.data[k] = 2.0 * a.data[k] - 0.5 * b.data[k];
  const Axis th = default_angles(8), ts = default_offsets(g, 32);
  const auto ra = radon_polar(a, th, ts, 0.0625), rb = radon_polar(b, th, ts, 0.0625), rc = radon_polar(c, th, ts, 0.0625);
  for (std::size_t k = 0; k < rc.values.data.size(); ++k)
    EXPECT_NEAR(std::abs(rc.values.data[k] - (2.0 * ra.values.data[k] - 0.5 * rb.values.data[k])), 0.0, 1e-12);
}

TEST(SliceTheorem, PolarAffineCircular) {
  const Grid2& g = fine_grid();
  const Image& img = gaussian_image();
  EXPECT_LE(slice_check_polar(img, radon_polar(img, default_angles(180), default_offsets(g, 512), default_step(g))),
            1e-3);
  EXPECT_LE(slice_check_affine(img, radon_affine(img, default_slopes(64), default_offsets(g, 512), default_step(g))),
            1e-2);
  const Grid2 coarse = Grid2::centered(64, 1.0 / 8);
  const Image small = sample(gaussian_phantom(), coarse);
  EXPECT_LE(slice_check_circular(small, radon_circular(small, coarse, {0.1, 0.5, 1.0}, 0.5)), 1e-2);
}

TEST(SliceTheorem, CircularNeedsCentersOnTheImageGrid) {
  const Grid2 g = Grid2::centered(16, 0.25);
  const Image img = sample(gaussian_phantom(), g);
  const auto s = radon_circular(img, Grid2::centered(8, 0.5), {0.5}, 0.5);
  EXPECT_THROW(slice_check_circular(img, s), DomainError);
}

TEST(Sampling, PolarLookupWrapsWithOffsetFlip) {
  PolarSinogram s(default_angles(4), Axis::centered(5, 1.0));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 5; ++j) s.values(i, j) = static_cast<double>(10 * i + j);
  // (theta + pi, t) is the same line as (theta, -t)
  EXPECT_NEAR(std::abs(sample_polar(s, s.theta.at(1) + pi, 1.0) - s.values(1, 1)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(sample_polar(s, s.theta.at(2), -1.0) - s.values(2, 1)), 0.0, 1e-12);
}

TEST(Representations, ImageActionIsNearlyUnitary) {
  const Grid2 g = Grid2::centered(256, 1.0 / 32);
  const Image f = sample(blobs_phantom(), g);
  const Image moved = apply_pi(Sim2::make({0.25, -0.5}, 0.7, 1.3), f);
  EXPECT_NEAR(l2_norm(moved) / l2_norm(f), 1.0, 2e-3);
  const Image sheared = apply_pi(Shear::make({0.1, 0.2}, 0.4, -1.5), f);
  EXPECT_NEAR(l2_norm(sheared) / l2_norm(f), 1.0, 2e-3);
  EXPECT_LT(rel_l2_error(apply_pi(Sim2::identity(), f), f), 1e-15);
}

TEST(Representations, PhantomTransformAgreesWithImageAction) {
  const Grid2 g = Grid2::centered(128, 1.0 / 16);
  const Phantom b = blobs_phantom();
  const Sim2 e = Sim2::make({0.3, 0.1}, 2.0, 0.8);
  EXPECT_LT(rel_l2_error(apply_pi(e, sample(b, g)), sample(transformed(b, e), g)), 1e-2);
  // the spectrum of the transformed phantom is consistent with its values
  const Phantom t = transformed(b, e);
  const Image via_spectrum = sample_from_spectrum(t.spectrum, g);
  EXPECT_LT(rel_l2_error(via_spectrum, sample(t, g)), 1e-9);
}

TEST(Radii, HybridAndGeometricRadii) {
  const auto h = hybrid_radii(1e-3, 0.5, 0.05, 6.0);
  EXPECT_DOUBLE_EQ(h.front(), 1e-3);
  EXPECT_NEAR(h.back(), 6.0, 1e-12);
  for (std::size_t i = 1; i < h.size(); ++i) EXPECT_GT(h[i], h[i - 1]);
  const auto q = geometric_radii(1.0 / 16.0, 1.0, 17);
  EXPECT_NEAR(q[4] / q[0], 2.0, 1e-12);
  EXPECT_NEAR(q.back(), 1.0, 1e-12);
}
