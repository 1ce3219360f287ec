#pragma once

#include <chrono>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "group.hpp"
#include "signal.hpp"
#include "sinogram.hpp"
#include "special.hpp"
#include "wavelet.hpp"

namespace radon {

struct ReconstructionReport {
  std::string family;
  double rel_l2_error = NAN;  // filled by report_metrics
  double peak_error = NAN;
  double energy_lhs = NAN;    // in-band part of ||f||^2, needs a reference image
  double energy_rhs = 0.0;    // sum over the group grid of weight |coefficient|^2
  double energy_total = NAN;  // ||f||^2 of the reference
  double energy_low = 0.0;    // low-pass branch of the compact-scale split
  std::size_t planes = 0;
  std::size_t lattice_n1 = 0, lattice_n2 = 0;
  double seconds = 0.0;       // wall time, not part of deterministic output

  double energy_residual() const { return std::abs(energy_rhs + energy_low - energy_lhs) / energy_lhs; }
};

struct Reconstruction {
  Image image;
  ReconstructionReport report;
};

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class GroupGrid, class Block>
Reconstruction run_pipeline(const std::string& family, const WaveletSpec& psi, const GroupGrid& grid, Block&& block) {
  const auto t0 = std::chrono::steady_clock::now();
  Synthesizer<GroupGrid> syn(psi, grid);
  const std::size_t per = grid.per_scale();
  for (std::size_t k = 0; k * per < grid.planes(); ++k) syn.add_block(k * per, block(k));
  Reconstruction r{syn.result(), {}};
  r.report.family = family;
  r.report.energy_rhs = syn.energy();
  r.report.planes = grid.planes();
  r.report.lattice_n1 = grid.lattice.n1;
  r.report.lattice_n2 = grid.lattice.n2;
  r.report.seconds = seconds_since(t0);
  return r;
}

}  // namespace detail

// f = int chi(g) <R f, pi^(g) Psi> pi(g) psi d mu(g), one scale at a time.
inline Reconstruction invert(const PolarSinogram& sino, const WaveletSpec& psi, const Sim2Grid& grid,
                             const SinogramAnalysisOptions& opt = {}) {
  grid.check(psi);
  const WindowSpectrum win = window_spectrum(psi, RadonFamily::polar());
  const RowSpectra rs(sino.values, sino.t, opt.pad);
  return detail::run_pipeline("polar", psi, grid,
                              [&](std::size_t k) { return polar_scale_block(rs, sino, win, grid, k, opt); });
}

inline Reconstruction invert(const AffineSinogram& sino, const WaveletSpec& psi, const ShearGrid& grid,
                             const SinogramAnalysisOptions& opt = {}) {
  grid.check(psi);
  const WindowSpectrum win = window_spectrum(psi, RadonFamily::affine());
  const RowSpectra rs(sino.values, sino.t, opt.pad);
  return detail::run_pipeline("affine", psi, grid,
                              [&](std::size_t k) { return affine_scale_block(rs, sino, win, grid, k, opt); });
}

inline Reconstruction invert(const CircularSinogram& sino, const BesselSquareTail& tail, const WaveletSpec& psi,
                             const Sim2Grid& grid) {
  grid.check(psi);
  if (!sino.centers.same_as(grid.lattice)) throw DomainError("circle centers must coincide with the b-lattice");
  const WindowSpectrum win = window_spectrum(psi, RadonFamily::circular(sino.alpha));
  const CircularAnalyzer an(sino, tail, win);
  return detail::run_pipeline("circular", psi, grid, [&](std::size_t k) { return an.block(grid, k); });
}

// <f, T_b Phi> from the sinogram: sum_theta d theta [F_t^{-1}(F_t Rf(theta, .) |.| F Phi(. w(theta)))](w(theta) . b).
inline Image lowpass_coefficients(const PolarSinogram& sino, const LowPass& phi, const Grid2& lattice,
                                  const SinogramAnalysisOptions& opt = {}) {
  const RowSpectra rs(sino.values, sino.t, opt.pad);
  const Axis fine = rs.refined_axis(opt.refine);
  std::vector<double> radial;
  if (phi.psi.isotropic()) {
    radial.resize(rs.tau.n);
    parallel_for(rs.tau.n, [&](std::size_t k) { radial[k] = phi.spectrum({std::abs(rs.tau.at(k)), 0.0}); });
  }
  std::vector<Image> parts(sino.theta.n);
  parallel_for(sino.theta.n, [&](std::size_t i) {
    const Vec2 w = direction(sino.theta.at(i));
    std::vector<double> mult(rs.tau.n);
    for (std::size_t k = 0; k < rs.tau.n; ++k) {
      const double tau = rs.tau.at(k);
      mult[k] = std::abs(tau) * (radial.empty() ? phi.spectrum(tau * w) : radial[k]);
    }
    const auto row = rs.filtered_by(i, mult, opt.refine);
    parts[i] = Image(lattice);
    backproject(parts[i], row, fine, w, sino.theta.step);
  });
  Image out(lattice);
  for (const auto& p : parts)
    for (std::size_t k = 0; k < out.data.size(); ++k) out.data[k] += p.data[k];
  return out;
}

// Low-pass branch plus the wavelet branch over the scales of `grid` (all below phi.a_cut).
inline Reconstruction invert_with_lowpass(const PolarSinogram& sino, const WaveletSpec& psi, const LowPass& phi,
                                          const Sim2Grid& grid, const SinogramAnalysisOptions& opt = {}) {
  grid.check(psi);
  if (grid.scales.a_max > phi.a_cut * (1.0 + 1e-12))
    throw DomainError("wavelet branch must stay below the low-pass cut");
  if (!lowpass_domain_check(phi).finite()) throw DomainError("low-pass window is outside the domain of the multiplier");
  const auto t0 = std::chrono::steady_clock::now();
  Reconstruction r = invert(sino, psi, grid, opt);
  const Image low = lowpass_coefficients(sino, phi, grid.lattice, opt);
  Spectrum fl = dft2_unitary(low);
  const Spectrum fphi = sample_lowpass(phi, fl.grid);
  for (std::size_t k = 0; k < fl.data.size(); ++k) fl.data[k] *= fphi.data[k];
  const Image low_part = idft2_unitary(fl, grid.lattice);
  for (std::size_t k = 0; k < r.image.data.size(); ++k) r.image.data[k] += low_part.data[k];
  r.report.energy_low = l2_norm_sq(low);
  r.report.family = "polar+lowpass";
  r.report.seconds = detail::seconds_since(t0);
  return r;
}

// Inner 1D wavelet transform along t per slope, then the slope quadrature:
// |a|^{-3/4} sum_v dv W(n(v) . b, a) conj Psi2((v - s) / |a|^{1/2}),
// W(t0, a) = |a|^{-1/2} sum_t dt R f(v, t) conj Psi1((t - t0) / a),
// Psi1(t) = c1 (1/(2 pi) - t^2) e^{-pi t^2} (inverse transform of |tau| F psi1(tau)), Psi2 = phi2.
inline cplx shearlet_coefficients_factorized(const AffineSinogram& sino, const WaveletSpec& psi, const Shear& g) {
  if (psi.kind != WaveletKind::shearlet_bump) throw DomainError("factorized coefficients need the shearlet");
  const double aa = std::abs(g.a), root = std::sqrt(aa);
  auto psi1 = [&](double t) { return psi.normalization * (1.0 / two_pi - t * t) * std::exp(-pi * t * t); };
  cplx acc = 0.0;
  for (std::size_t i = 0; i < sino.v.n; ++i) {
    const double v = sino.v.at(i);
    const double w2 = psi.window((v - g.s) / root);
    if (w2 == 0.0) continue;
    const double t0 = dot(affine_normal(v), g.b);
    cplx w = 0.0;
    for (std::size_t j = 0; j < sino.t.n; ++j) w += sino.values(i, j) * psi1((sino.t.at(j) - t0) / g.a);
    acc += sino.v.step * w2 * w * sino.t.step / root;
  }
  return std::pow(aa, -0.75) * acc;
}

// Direct evaluation of chi(g) <R f, pi^(g) Psi> at one group element with the unfactorized window.
inline cplx sinogram_coefficient(const AffineSinogram& sino, const WindowSpectrum& win, const Shear& g,
                                 std::size_t pad = 2) {
  const RowSpectra rs(sino.values, sino.t, pad);
  const double root = std::sqrt(std::abs(g.a));
  const double factor = character(RadonFamily::affine(), Character::chi, g) * std::pow(std::abs(g.a), 0.25);
  cplx acc = 0.0;
  for (std::size_t i = 0; i < sino.v.n; ++i) {
    const double v = sino.v.at(i);
    const double vp = (v - g.s) / root;
    const double t0 = dot(affine_normal(v), g.b);
    cplx row = 0.0;
    for (std::size_t k = 0; k < rs.tau.n; ++k) {
      const double tau = rs.tau.at(k);
      row += rs.rows(i, k) * std::conj(win.affine(vp, g.a * tau)) * std::polar(1.0, two_pi * tau * t0);
    }
    acc += sino.v.step * row * rs.tau.step;
  }
  return factor * acc;
}

// Relative L2 and peak errors against a reference image.
inline ReconstructionReport report_metrics(const Image& f_true, const Image& f_hat, ReconstructionReport rep = {}) {
  if (!f_true.grid.same_as(f_hat.grid)) throw DomainError("reference and reconstruction grids differ");
  rep.rel_l2_error = rel_l2_error(f_hat, f_true);
  double peak = 0.0, ref = 0.0;
  for (std::size_t k = 0; k < f_true.data.size(); ++k) {
    peak = std::max(peak, std::abs(f_hat.data[k] - f_true.data[k]));
    ref = std::max(ref, std::abs(f_true.data[k]));
  }
  rep.peak_error = ref > 0.0 ? peak / ref : peak;
  rep.energy_total = l2_norm_sq(f_true);
  return rep;
}

// int band(xi) |F f(xi)|^2: the part of ||f||^2 the scale range of `grid` can represent.
template <class GroupGrid>
double in_band_energy(const Image& f, const GroupGrid& grid) {
  const Spectrum s = dft2_unitary(f);
  double acc = 0.0;
  for (std::size_t i2 = 0; i2 < s.grid.n2; ++i2)
    for (std::size_t i1 = 0; i1 < s.grid.n1; ++i1)
      acc += grid.band(s.grid.point(i1, i2)) * std::norm(s(i1, i2));
  return acc * s.grid.cell();
}

template <class GroupGrid>
ReconstructionReport report_metrics(const Image& f_true, const Reconstruction& r, const GroupGrid& grid) {
  ReconstructionReport rep = report_metrics(f_true, r.image, r.report);
  rep.energy_lhs = in_band_energy(f_true, grid);
  return rep;
}

}  // namespace radon
