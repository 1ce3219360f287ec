#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "group.hpp"
#include "signal.hpp"
#include "sinogram.hpp"
#include "special.hpp"
#include "transforms.hpp"
#include "unitarize.hpp"

namespace radon {

enum class WaveletKind { sim2_gaussian, shearlet_bump };

// Unit-mass smooth bump supported on [-1, 1]: C exp(-1/(1 - u^2)).
inline double bump_profile(double u) {
  if (!(std::abs(u) < 1.0)) return 0.0;
  return std::exp(-1.0 / (1.0 - u * u));
}

// Frequency-domain mother wavelet with a normalization fixed at construction.
struct WaveletSpec {
  WaveletKind kind = WaveletKind::sim2_gaussian;
  double normalization = std::sqrt(2.0);  // sqrt 2 for the SIM(2) wavelet, c1 for the shearlet
  double bump_mass = 1.0;                 // C^{-1}, so that C exp(...) has unit mass

  // F psi1(w) = c1 |w| e^{-pi w^2}
  double psi1_spectrum(double w) const { return normalization * std::abs(w) * std::exp(-pi * w * w); }
  // phi2(u), unit mass on [-1, 1]
  double window(double u) const { return bump_profile(u) / bump_mass; }

  bool isotropic() const { return kind == WaveletKind::sim2_gaussian; }

  cplx spectrum(Vec2 xi) const {
    if (kind == WaveletKind::sim2_gaussian) {
      const double r2 = dot(xi, xi);
      return normalization * std::sqrt(r2) * std::exp(-pi * r2);
    }
    if (xi.x == 0.0) return 0.0;
    return psi1_spectrum(xi.x) * window(xi.y / xi.x);
  }
};

inline WaveletSpec make_sim2_wavelet() { return {WaveletKind::sim2_gaussian, std::sqrt(2.0), 1.0}; }

// c1 is fixed by int |F psi|^2 / xi1^2 = c1^2 ||phi2||^2 int |w| e^{-2 pi w^2} dw = c1^2 ||phi2||^2 / (2 pi) = 1.
inline WaveletSpec make_shearlet() {
  WaveletSpec w{WaveletKind::shearlet_bump, 1.0, 1.0};
  w.bump_mass = adaptive_quad(bump_profile, -1.0, 1.0, 1e-13).value;
  const double l2 = adaptive_quad([&](double u) { return w.window(u) * w.window(u); }, -1.0, 1.0, 1e-13).value;
  w.normalization = std::sqrt(two_pi / l2);
  return w;
}

// Tensor-grid quadrature of the admissibility integral: int |F psi|^2 / |xi|^2 for the
// SIM(2) wavelet, int |F psi|^2 / xi1^2 for the shearlet.
inline double admissibility_integral(const WaveletSpec& psi, double extent = 4.0, std::size_t n = 1601) {
  const double h = 2.0 * extent / static_cast<double>(n - 1);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = -extent + h * static_cast<double>(i);
    for (std::size_t j = 0; j < n; ++j) {
      const double y = -extent + h * static_cast<double>(j);
      const double den = psi.kind == WaveletKind::sim2_gaussian ? x * x + y * y : x * x;
      if (den == 0.0) continue;
      acc += std::norm(psi.spectrum({x, y})) / den;
    }
  }
  return acc * h * h;
}

// Closed-form admissibility value for the SIM(2) wavelet: 2 int e^{-2 pi |xi|^2} d xi = 1.
inline double sim2_admissibility_closed_form(const WaveletSpec& psi) {
  return psi.normalization * psi.normalization * 0.5;
}

// Image-domain samples of a wavelet through its spectrum.
inline Image sample_wavelet(const WaveletSpec& psi, const Grid2& g) {
  return sample_from_spectrum([&](Vec2 xi) { return psi.spectrum(xi); }, g);
}

// ---------------------------------------------------------- windows Psi

// Row spectra of Psi = I^2 R psi, from the slice identities:
//   polar     F_t Psi(theta, tau) = |tau| F psi(tau w(theta))
//   affine    F_t Psi(v, tau)     = |tau| F psi(tau, tau v)
//   circular  F_c Psi(eta, r)     = k^2 |eta|^{1-alpha} 2 pi J0(2 pi |eta| r) F psi(eta)
struct WindowSpectrum {
  WaveletSpec psi;
  RadonFamily family;
  double k2 = 1.0;  // k_alpha^2 for the circular family

  cplx polar(double theta, double tau) const { return std::abs(tau) * psi.spectrum(tau * direction(theta)); }
  cplx affine(double v, double tau) const { return std::abs(tau) * psi.spectrum({tau, tau * v}); }
  cplx circular(Vec2 eta, double r) const {
    const double rho = norm(eta);
    if (rho == 0.0) return 0.0;
    return k2 * std::pow(rho, 1.0 - family.alpha) * two_pi * bessel_j0(two_pi * rho * r) * psi.spectrum(eta);
  }
  bool separable() const { return psi.kind == WaveletKind::shearlet_bump; }
};

// Psi sampled on a sinogram grid together with its closed-form row spectra.
struct SinogramWindow {
  WindowSpectrum spectrum;
  PolarSinogram polar;
  AffineSinogram affine;
  CircularSinogram circular;
};

inline WindowSpectrum window_spectrum(const WaveletSpec& psi, const RadonFamily& family) {
  WindowSpectrum w{psi, family, 1.0};
  if (family.kind == FamilyKind::circular) w.k2 = 1.0 / c_alpha(family.alpha);
  return w;
}

// Psi = I(I(R psi)) computed numerically from image samples of psi on `img_grid`.
inline SinogramWindow make_Psi_polar(const WaveletSpec& psi, const Grid2& img_grid, const Axis& thetas, const Axis& ts) {
  const Image p = sample_wavelet(psi, img_grid);
  SinogramWindow w{window_spectrum(psi, RadonFamily::polar()), {}, {}, {}};
  w.polar = apply_I_polar(apply_I_polar(radon_polar(p, thetas, ts, default_step(img_grid))));
  return w;
}

inline SinogramWindow make_Psi_affine(const WaveletSpec& psi, const Grid2& img_grid, const Axis& vs, const Axis& ts) {
  const Image p = sample_wavelet(psi, img_grid);
  SinogramWindow w{window_spectrum(psi, RadonFamily::affine()), {}, {}, {}};
  w.affine = apply_I_affine(apply_I_affine(radon_affine(p, vs, ts, default_step(img_grid))));
  return w;
}

inline SinogramWindow make_Psi_circular(const WaveletSpec& psi, const Grid2& img_grid, const std::vector<double>& radii,
                                        double alpha) {
  const Image p = sample_wavelet(psi, img_grid);
  const RadonFamily fam = RadonFamily::circular(alpha);
  SinogramWindow w{window_spectrum(psi, fam), {}, {}, {}};
  const double k = std::sqrt(w.spectrum.k2);
  w.circular = apply_I_circular(apply_I_circular(radon_circular(p, img_grid, radii, alpha), k), k);
  return w;
}

// int |tau|^2 |F_t R u(theta, tau)|^2 = int |xi| |F u(xi)|^2 d xi on the spectrum grid, together
// with the share coming from the outer frequency ring; a wavelet or low-pass is flagged
// as outside the domain of I when that share is not negligible.
struct DomainCheck {
  double integral = 0.0;
  double outer_share = 0.0;
  bool finite() const { return std::isfinite(integral) && outer_share < 1e-6; }
};

inline DomainCheck ramp_domain_integral(const std::function<cplx(Vec2)>& spectrum, double extent, std::size_t n) {
  const double h = 2.0 * extent / static_cast<double>(n - 1);
  double total = 0.0, outer = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec2 xi{-extent + h * static_cast<double>(i), -extent + h * static_cast<double>(j)};
      const double v = norm(xi) * std::norm(spectrum(xi));
      total += v;
      if (norm(xi) > 0.75 * extent) outer += v;
    }
  DomainCheck c;
  c.integral = total * h * h;
  c.outer_share = total > 0.0 ? outer / total : 0.0;
  return c;
}

// ---------------------------------------------------------- low-pass Phi

// |F Phi|^2 = 1 - int_{[0,2pi) x (0,a_cut)} |F psi(A_a R_phi^{-1} xi)|^2 d phi da/a.
struct LowPass {
  WaveletSpec psi;
  double a_cut = 1.0;
  std::size_t angle_nodes = 32;

  // the (phi, a) integral at one frequency, computed in u = ln a
  double band_integral(Vec2 xi, double tol = 1e-10) const {
    if (xi.x == 0.0 && xi.y == 0.0) return 0.0;
    const double dphi = two_pi / static_cast<double>(angle_nodes);
    auto inner = [&](double u) {
      const double a = std::exp(u);
      double s = 0.0;
      for (std::size_t k = 0; k < angle_nodes; ++k) {
        const Vec2 arg = a * rotate(-dphi * static_cast<double>(k), xi);
        s += std::norm(psi.spectrum(arg));
      }
      return s * dphi;
    };
    const double hi = std::log(a_cut);
    return adaptive_quad(inner, hi - 40.0, hi, tol).value;
  }

  double z(Vec2 xi) const { return 1.0 - band_integral(xi); }

  double spectrum(Vec2 xi) const {
    const double v = z(xi);
    if (v < -1e-3) throw std::runtime_error("low-pass partition is inconsistent: z = " + std::to_string(v));
    return std::sqrt(std::max(v, 0.0));
  }
};

inline LowPass make_phi_lowpass(const WaveletSpec& psi, double a_cut = 1.0) {
  if (!(a_cut > 0.0)) throw DomainError("a_cut must be positive");
  return {psi, a_cut, psi.kind == WaveletKind::sim2_gaussian ? 8u : 64u};
}

// F Phi sampled on every node of a spectrum grid; an isotropic wavelet needs one
// quadrature per distinct radius.
inline Spectrum sample_lowpass(const LowPass& phi, const Grid2& freq) {
  Spectrum s(freq);
  if (phi.psi.isotropic()) {
    std::map<double, double> radial;
    for (std::size_t k = 0; k < freq.size(); ++k) {
      const Vec2 xi = freq.point(k % freq.n1, k / freq.n1);
      radial.emplace(dot(xi, xi), 0.0);
    }
    std::vector<std::map<double, double>::iterator> nodes;
    for (auto it = radial.begin(); it != radial.end(); ++it) nodes.push_back(it);
    parallel_for(nodes.size(), [&](std::size_t i) { nodes[i]->second = phi.spectrum({std::sqrt(nodes[i]->first), 0.0}); });
    for (std::size_t k = 0; k < freq.size(); ++k) {
      const Vec2 xi = freq.point(k % freq.n1, k / freq.n1);
      s.data[k] = radial.at(dot(xi, xi));
    }
    return s;
  }
  parallel_for(freq.n2, [&](std::size_t i2) {
    for (std::size_t i1 = 0; i1 < freq.n1; ++i1) s(i1, i2) = phi.spectrum(freq.point(i1, i2));
  });
  return s;
}

// int |xi| |F Phi(xi)|^2 over a frequency square wide enough for the decay of Phi.
inline DomainCheck lowpass_domain_check(const LowPass& phi, std::size_t n = 129) {
  const double extent = 8.0 / phi.a_cut;
  const double h = 2.0 * extent / static_cast<double>(n - 1);
  const Spectrum s = sample_lowpass(phi, {n, n, {-extent, -extent}, h, h});
  double total = 0.0, outer = 0.0;
  for (std::size_t k = 0; k < s.data.size(); ++k) {
    const double r = norm(s.grid.point(k % n, k / n));
    const double v = r * std::norm(s.data[k]);
    total += v;
    if (r > 0.75 * extent) outer += v;
  }
  DomainCheck c;
  c.integral = total * h * h;
  c.outer_share = total > 0.0 ? outer / total : 0.0;
  return c;
}

}  // namespace radon
