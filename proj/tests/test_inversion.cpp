#include <gtest/gtest.h>

#include "radon/experiment.hpp"

using namespace radon;

namespace {

ExperimentConfig small_polar() {
  ExperimentConfig c;
  c.image_size = 64;
  c.angles = 60;
  c.offsets = 128;
  c.group_angles = 12;
  c.a_min = 0.125;
  c.a_max = 4.0;
  c.scales = 12;
  return c;
}

}  // namespace

TEST(Inversion, PolarRoundTripWithinBudget) {
  const ExperimentResult r = run_experiment(small_polar());
  EXPECT_LE(r.report.rel_l2_error, 5e-2);
  EXPECT_LT(r.report.energy_residual(), 5e-2);
  EXPECT_EQ(r.report.planes, 12u * 12u);
}

TEST(Inversion, StoredSinogramMatchesRoundTrip) {
  const ExperimentConfig c = small_polar();
  const Image fine = sample(dog_phantom(), Grid2::centered(c.image_size * c.oversample, c.image_spacing / c.oversample));
  const Reconstruction a = invert_file(c, sinogram_of(c, fine));
  const Reconstruction b = run_experiment(c).rec;
  EXPECT_EQ(a.image.data, b.image.data);
}

TEST(Inversion, FamilyMismatchIsAUsageError) {
  ExperimentConfig c = small_polar();
  RfaFile f;
  f.kind = "sino_affine";
  EXPECT_THROW(invert_file(c, f), UsageError);
}

TEST(Inversion, FactorizedShearletCoefficientsMatchDirect) {
  const Grid2 lat = Grid2::centered(32, 0.25), fine = Grid2::centered(128, 1.0 / 16);
  const auto sino = radon_affine(sample(cone_dog_phantom(), fine), default_slopes(64, 1.25),
                                 default_offsets(lat, 256), default_step(fine));
  const WaveletSpec psi = make_shearlet();
  const WindowSpectrum win = window_spectrum(psi, RadonFamily::affine());
  for (const Shear g : {Shear{{0.5, -0.25}, 0.2, 0.7}, Shear{{-1.0, 0.5}, -0.4, -1.3}, Shear{{}, 0.0, 0.4}}) {
    const cplx direct = sinogram_coefficient(sino, win, g);
    EXPECT_LT(std::abs(direct - shearlet_coefficients_factorized(sino, psi, g)) / std::abs(direct), 2e-2);
  }
}

TEST(Inversion, LowPassCutBoundsTheWaveletBranch) {
  const Grid2 lat = Grid2::centered(16, 0.25);
  const auto sino = radon_polar(sample(dog_phantom(), lat), default_angles(8), default_offsets(lat, 32), 0.125);
  const WaveletSpec psi = make_sim2_wavelet();
  const LowPass phi = make_phi_lowpass(psi, 1.0);
  EXPECT_THROW(invert_with_lowpass(sino, psi, phi, Sim2Grid::make(lat, 2, 0.25, 2.0, 4)), DomainError);
}

TEST(Inversion, CircularCentersMustMatchTheLattice) {
  const Grid2 lat = Grid2::centered(16, 0.25);
  const auto sino = radon_circular(sample(dog_phantom(), lat), lat, {0.5, 1.0}, 0.5);
  const BesselSquareTail tail(0.5);
  EXPECT_THROW(invert(sino, tail, make_sim2_wavelet(), Sim2Grid::make(Grid2::centered(8, 0.25), 1, 0.5, 2.0, 2)),
               DomainError);
}

TEST(Metrics, IdenticalImagesHaveZeroError) {
  const Image f = sample(dog_phantom(), Grid2::centered(32, 0.25));
  const ReconstructionReport r = report_metrics(f, f);
  EXPECT_EQ(r.rel_l2_error, 0.0);
  EXPECT_EQ(r.peak_error, 0.0);
  EXPECT_DOUBLE_EQ(r.energy_total, l2_norm_sq(f));
  EXPECT_THROW(report_metrics(f, Image(Grid2::centered(16, 0.25))), DomainError);
}
