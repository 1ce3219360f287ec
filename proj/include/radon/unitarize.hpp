#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "group.hpp"
#include "signal.hpp"
#include "sinogram.hpp"
#include "special.hpp"
#include "transforms.hpp"

namespace radon {

// |frequency|^exponent scaled by `scale`; the value at zero frequency is 0.
struct MultiplierSpec {
  double exponent = 0.5;
  double scale = 1.0;

  double operator()(double modulus) const {
    if (modulus == 0.0) return 0.0;
    return scale * std::pow(modulus, exponent);
  }
};

// Applies the multiplier along each row; rows are zero-padded by `pad` so the
// filtering acts as a linear rather than periodic convolution.
inline Array2 apply_row_multiplier(const Array2& rows, const Axis& t, const MultiplierSpec& m, std::size_t pad = 2) {
  const std::size_t np = t.n * pad;
  const Axis tp{np, t.origin, t.step};
  const Axis tau = frequency_axis(tp);
  std::vector<double> mult(np);
  for (std::size_t k = 0; k < np; ++k) mult[k] = m(std::abs(tau.at(k)));
  Array2 out(rows.rows, rows.cols);
  parallel_for(rows.rows, [&](std::size_t r) {
    std::vector<cplx> buf(np, 0.0), spec(np), back(np);
    std::copy(rows.row(r), rows.row(r) + t.n, buf.begin());
    dft_line(buf.data(), spec.data(), tp);
    for (std::size_t k = 0; k < np; ++k) spec[k] *= mult[k];
    idft_line(spec.data(), back.data(), tp);
    std::copy(back.begin(), back.begin() + static_cast<long>(t.n), out.row(r));
  });
  return out;
}

inline PolarSinogram apply_I_polar(const PolarSinogram& s, std::size_t pad = 2) {
  PolarSinogram out(s.theta, s.t);
  out.values = apply_row_multiplier(s.values, s.t, {0.5, 1.0}, pad);
  return out;
}

inline AffineSinogram apply_I_affine(const AffineSinogram& s, std::size_t pad = 2) {
  AffineSinogram out(s.v, s.t);
  out.values = apply_row_multiplier(s.values, s.t, {0.5, 1.0}, pad);
  return out;
}

// Multiplier over the center frequencies of every radius slice.
inline CircularSinogram apply_center_multiplier(const CircularSinogram& s, const MultiplierSpec& m) {
  CircularSinogram out(s.centers, s.radii, s.alpha);
  const Grid2 fg = s.centers.frequencies();
  std::vector<double> mult(fg.size());
  for (std::size_t i2 = 0; i2 < fg.n2; ++i2)
    for (std::size_t i1 = 0; i1 < fg.n1; ++i1) mult[i2 * fg.n1 + i1] = m(norm(fg.point(i1, i2)));
  std::vector<Image> slices(s.nr());
  parallel_for(s.nr(), [&](std::size_t ir) {
    Spectrum spec = dft2_unitary(s.slice(ir));
    for (std::size_t k = 0; k < spec.data.size(); ++k) spec.data[k] *= mult[k];
    slices[ir] = idft2_unitary(spec, s.centers);
  });
  for (std::size_t ir = 0; ir < s.nr(); ++ir) out.set_slice(ir, slices[ir]);
  return out;
}

inline CircularSinogram apply_I_circular(const CircularSinogram& s, double k = 0.0) {
  check_alpha(s.alpha);
  if (k <= 0.0) k = k_alpha(s.alpha);
  return apply_center_multiplier(s, {0.5 * (1.0 - s.alpha), k});
}

// F A_s f = |xi|^s F f. Negative exponents need a zero-mean input.
inline Image apply_As(const Image& img, double s) {
  Spectrum spec = dft2_unitary(img);
  const Grid2& fg = spec.grid;
  if (s < 0.0) {
    const std::size_t dc = (fg.n2 / 2) * fg.n1 + fg.n1 / 2;
    if (std::abs(spec.data[dc]) > 1e-10 * l2_norm(img))
      throw DomainError("negative-order multiplier needs a zero-mean image");
  }
  const MultiplierSpec m{s, 1.0};
  for (std::size_t i2 = 0; i2 < fg.n2; ++i2)
    for (std::size_t i1 = 0; i1 < fg.n1; ++i1) {
      if (s != 0.0) spec(i1, i2) *= m(norm(fg.point(i1, i2)));
    }
  return idft2_unitary(spec, img.grid);
}

// ---------------------------------------------------- unitarized transforms

inline PolarSinogram unitarized_radon_polar(const Image& img, const Axis& thetas, const Axis& ts, double step) {
  return apply_I_polar(radon_polar(img, thetas, ts, step));
}

inline AffineSinogram unitarized_radon_affine(const Image& img, const Axis& vs, const Axis& ts, double step) {
  return apply_I_affine(radon_affine(img, vs, ts, step));
}

inline CircularSinogram unitarized_radon_circular(const Image& img, const Grid2& centers,
                                                  const std::vector<double>& radii, double alpha) {
  return apply_I_circular(radon_circular(img, centers, radii, alpha));
}

// || I F ||^2 over all of Xi for a line sinogram supported inside its offset range:
// sum over rows of int |tau| |F_t F(row, tau)|^2 d tau, times the row spacing.
inline double unitarized_norm_sq(const Array2& rows, const Axis& t, double row_step, std::size_t pad = 2) {
  const std::size_t np = t.n * pad;
  const Axis tp{np, t.origin, t.step};
  const Axis tau = frequency_axis(tp);
  std::vector<double> per_row(rows.rows, 0.0);
  parallel_for(rows.rows, [&](std::size_t r) {
    std::vector<cplx> buf(np, 0.0), spec(np);
    std::copy(rows.row(r), rows.row(r) + t.n, buf.begin());
    dft_line(buf.data(), spec.data(), tp);
    double acc = 0.0;
    for (std::size_t k = 0; k < np; ++k) acc += std::abs(tau.at(k)) * std::norm(spec[k]);
    per_row[r] = acc * tau.step;
  });
  double total = 0.0;
  for (double v : per_row) total += v;
  return total * row_step;
}

inline double unitarized_norm_sq(const PolarSinogram& s) { return unitarized_norm_sq(s.values, s.t, s.theta.step); }
inline double unitarized_norm_sq(const AffineSinogram& s) { return unitarized_norm_sq(s.values, s.t, s.v.step); }

// Radial integrals of circular sinograms in the center-frequency domain. For each
// center frequency tau, radius samples are integrated against r^{-alpha} with
// product-trapezoid weights; the part beyond the last radius is closed with the
// Bessel slice identity, using a least-squares estimate of F f(tau) from all radii.
class CircularSpectra {
 public:
  CircularSpectra(const CircularSinogram& s, const BesselSquareTail& tail)
      : grid_(s.centers.frequencies()), radii_(s.radii), alpha_(s.alpha), tail_(&tail) {
    if (tail.alpha() != s.alpha) throw DomainError("tail table built for a different alpha");
    weights_ = radial_weights(radii_, alpha_);
    slices_.resize(s.nr());
    parallel_for(s.nr(), [&](std::size_t ir) { slices_[ir] = dft2_unitary(s.slice(ir)).data; });
    const std::size_t n = grid_.size();
    estimate_.assign(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const double rho = modulus(k);
      cplx num = 0.0;
      double den = 0.0;
      for (std::size_t ir = 0; ir < radii_.size(); ++ir) {
        const double j = two_pi * bessel_j0(two_pi * rho * radii_[ir]);
        num += weights_[ir] * j * slices_[ir][k];
        den += weights_[ir] * j * j;
      }
      estimate_[k] = den > 0.0 ? num / den : 0.0;
    }
  }

  const Grid2& frequencies() const { return grid_; }
  double modulus(std::size_t k) const { return norm(grid_.point(k % grid_.n1, k / grid_.n1)); }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& radii() const { return radii_; }
  const cplx& slice(std::size_t ir, std::size_t k) const { return slices_[ir][k]; }
  cplx spectrum_estimate(std::size_t k) const { return estimate_[k]; }

  // int_{r_max}^inf r^{-alpha} |2 pi J0(2 pi rho r)|^2 dr
  double bessel_tail(double rho) const {
    if (rho == 0.0) return INFINITY;
    const double u = two_pi * rho * radii_.back();
    return two_pi * two_pi * std::pow(two_pi * rho, alpha_ - 1.0) * (*tail_)(u);
  }

  // int_0^inf r^{-alpha} |S(tau, r)|^2 dr at one center frequency
  double radial_energy(std::size_t k) const {
    const double rho = modulus(k);
    if (rho == 0.0) return 0.0;
    double acc = 0.0;
    for (std::size_t ir = 0; ir < radii_.size(); ++ir) acc += weights_[ir] * std::norm(slices_[ir][k]);
    return acc + std::norm(estimate_[k]) * bessel_tail(rho);
  }

  // int_0^inf r^{-alpha} S(tau, r) 2 pi J0(2 pi rho r) dr at one center frequency
  cplx bessel_projection(std::size_t k) const {
    const double rho = modulus(k);
    if (rho == 0.0) return 0.0;
    cplx acc = 0.0;
    for (std::size_t ir = 0; ir < radii_.size(); ++ir)
      acc += weights_[ir] * two_pi * bessel_j0(two_pi * rho * radii_[ir]) * slices_[ir][k];
    return acc + estimate_[k] * bessel_tail(rho);
  }

 private:
  Grid2 grid_;
  std::vector<double> radii_;
  double alpha_;
  const BesselSquareTail* tail_;
  std::vector<double> weights_;
  std::vector<std::vector<cplx>> slices_;
  std::vector<cplx> estimate_;
};

// || I R f ||^2 in L^2(dc dr / r^alpha) with I = k |tau|^{(1-alpha)/2}.
inline double unitarized_norm_sq(const CircularSinogram& s, const BesselSquareTail& tail, double k = 0.0) {
  if (k <= 0.0) k = k_alpha(s.alpha);
  const CircularSpectra cs(s, tail);
  double acc = 0.0;
  for (std::size_t i = 0; i < cs.frequencies().size(); ++i) {
    const double rho = cs.modulus(i);
    if (rho == 0.0) continue;
    acc += k * k * std::pow(rho, 1.0 - s.alpha) * cs.radial_energy(i);
  }
  return acc * cs.frequencies().cell();
}

}  // namespace radon
