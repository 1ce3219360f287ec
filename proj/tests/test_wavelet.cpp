#include <gtest/gtest.h>

#include "radon/special.hpp"
#include "radon/wavelet.hpp"

using namespace radon;

namespace {

// int_0^inf |F psi(a R xi)|^2 da/a dphi by a plain midpoint rule in ln a and phi.
double band_midpoint(const WaveletSpec& psi, double a_cut, Vec2 xi) {
  const std::size_t nu = 3000, nphi = 24;
  const double lo = std::log(a_cut) - 40.0, h = 40.0 / static_cast<double>(nu), dphi = two_pi / nphi;
  double acc = 0.0;
  for (std::size_t i = 0; i < nu; ++i) {
    const double a = std::exp(lo + h * (static_cast<double>(i) + 0.5));
    for (std::size_t k = 0; k < nphi; ++k)
      acc += std::norm(psi.spectrum(a * rotate(dphi * (static_cast<double>(k) + 0.5), xi)));
  }
  return acc * h * dphi;
}

}  // namespace

TEST(Admissibility, Sim2ClosedFormAndNumeric) {
  const WaveletSpec psi = make_sim2_wavelet();
  EXPECT_NEAR(sim2_admissibility_closed_form(psi), 1.0, 1e-12);
  EXPECT_NEAR(admissibility_integral(psi), 1.0, 1e-3);
}

TEST(Admissibility, ShearletAfterNormalization) {
  const WaveletSpec psi = make_shearlet();
  EXPECT_NEAR(admissibility_integral(psi, 4.0, 2001), 1.0, 1e-3);
  const auto mass = adaptive_quad([&](double u) { return psi.window(u); }, -1.0, 1.0, 1e-12);
  EXPECT_NEAR(mass.value, 1.0, 1e-9);
}

TEST(Shearlet, SpectrumLivesInTheHorizontalCone) {
  const WaveletSpec psi = make_shearlet();
  EXPECT_EQ(psi.spectrum({0.5, 0.51}), cplx(0.0));
  EXPECT_EQ(psi.spectrum({0.0, 1.0}), cplx(0.0));
  EXPECT_GT(std::abs(psi.spectrum({0.5, 0.1})), 0.0);
}

TEST(Sim2Wavelet, IsotropicAndVanishesAtZero) {
  const WaveletSpec psi = make_sim2_wavelet();
  EXPECT_EQ(psi.spectrum({0.0, 0.0}), cplx(0.0));
  EXPECT_NEAR(std::abs(psi.spectrum({0.3, 0.4}) - psi.spectrum({0.5, 0.0})), 0.0, 1e-15);
}

TEST(LowPass, PartitionOfUnity) {
  const WaveletSpec psi = make_sim2_wavelet();
  for (double a_cut : {0.5, 1.0}) {
    const LowPass phi = make_phi_lowpass(psi, a_cut);
    for (Vec2 xi : {Vec2{0.0, 0.0}, Vec2{0.1, 0.05}, Vec2{0.4, -0.3}, Vec2{1.0, 0.2}, Vec2{2.0, 1.0}}) {
      const double low = phi.spectrum(xi);
      EXPECT_NEAR(low * low + band_midpoint(psi, a_cut, xi), 1.0, 1e-3);
      EXPECT_GE(phi.z(xi), -1e-6);
    }
    EXPECT_NEAR(phi.spectrum({0.0, 0.0}), 1.0, 1e-12);
  }
}

TEST(LowPass, LiesInTheMultiplierDomain) {
  const LowPass phi = make_phi_lowpass(make_sim2_wavelet(), 1.0);
  EXPECT_TRUE(lowpass_domain_check(phi).finite());
}

TEST(Windows, RampWeightedWindowOnTheSinogram) {
  const WaveletSpec psi = make_sim2_wavelet();
  const WindowSpectrum w = window_spectrum(psi, RadonFamily::polar());
  EXPECT_NEAR(std::abs(w.polar(0.3, -0.7) - 0.7 * psi.spectrum(-0.7 * direction(0.3))), 0.0, 1e-15);
  const WindowSpectrum a = window_spectrum(make_shearlet(), RadonFamily::affine());
  EXPECT_TRUE(a.separable());
  EXPECT_NEAR(std::abs(a.affine(0.2, 0.5) - 0.5 * a.psi.spectrum({0.5, 0.1})), 0.0, 1e-15);
}
