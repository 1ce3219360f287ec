#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "experiment.hpp"
#include "inversion.hpp"
#include "phantom.hpp"
#include "special.hpp"
#include "transforms.hpp"
#include "unitarize.hpp"
#include "wavelet.hpp"

namespace radon {

struct CheckResult {
  std::string property;
  double measured = NAN;
  double budget = NAN;
  bool strict = false;       // measured < budget instead of <=
  double seconds = 0.0;
  double time_budget = 0.0;  // 0: no runtime limit

  bool value_ok() const { return std::isfinite(measured) && (strict ? measured < budget : measured <= budget); }
  bool time_ok() const { return time_budget <= 0.0 || seconds <= time_budget; }
  bool pass() const { return value_ok() && time_ok(); }
};

using Checks = std::vector<CheckResult>;

namespace detail {

using Clock = std::chrono::steady_clock;

inline CheckResult result(std::string name, double measured, double budget, Clock::time_point t0,
                          double time_budget = 0.0) {
  CheckResult r;
  r.property = std::move(name);
  r.measured = measured;
  r.budget = budget;
  r.seconds = seconds_since(t0);
  r.time_budget = time_budget;
  return r;
}

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

inline Sim2 random_sim2(std::mt19937_64& rng, double bmax) {
  std::uniform_real_distribution<double> u(-1.0, 1.0), ang(0.0, two_pi);
  const double a = log_uniform(rng, 0.5, 2.0);
  const double phi = ang(rng);
  return Sim2::make({bmax * u(rng), bmax * u(rng)}, phi, a);
}

inline Shear random_shear(std::mt19937_64& rng, double bmax) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double a = log_uniform(rng, 0.5, 2.0) * (u(rng) < 0.0 ? -1.0 : 1.0);
  const double s = 0.5 * u(rng);
  return Shear::make({bmax * u(rng), bmax * u(rng)}, s, a);
}

inline double rel_residual(const std::vector<cplx>& lhs, const std::vector<cplx>& rhs, const std::vector<cplx>& ref) {
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) num += std::norm(lhs[i] - rhs[i]);
  for (const auto& v : ref) den += std::norm(v);
  return std::sqrt(num / den);
}

template <class T>
std::vector<cplx> scaled(const std::vector<cplx>& v, T s) {
  std::vector<cplx> out(v);
  for (auto& x : out) x *= s;
  return out;
}

}  // namespace detail

// ------------------------------------------------------------ slice theorems

inline Checks check_slices() {
  Checks out;
  const Grid2 g = Grid2::centered(256, 1.0 / 32);
  const Image img = sample(gaussian_phantom(), g);
  auto t0 = detail::Clock::now();
  const auto sp = radon_polar(img, default_angles(180), default_offsets(g, 512), default_step(g));
  out.push_back(detail::result("slice_polar", slice_check_polar(img, sp), 1e-3, t0, 60.0));
  t0 = detail::Clock::now();
  const auto sa = radon_affine(img, default_slopes(128), default_offsets(g, 512), default_step(g));
  out.push_back(detail::result("slice_affine", slice_check_affine(img, sa), 1e-2, t0, 120.0));
  t0 = detail::Clock::now();
  const auto sc = radon_circular(img, g, {0.05, 0.1, 0.25, 0.5, 0.75, 1.0}, 0.5);
  out.push_back(detail::result("slice_circular", slice_check_circular(img, sc), 1e-2, t0, 120.0));
  return out;
}

// ----------------------------------------------------------- unitarization

inline Checks check_unitarity() {
  Checks out;
  auto t0 = detail::Clock::now();
  {
    const Grid2 g = Grid2::centered(256, 1.0 / 16);
    const Image img = sample(dog_phantom(), g);
    const auto s = radon_polar(img, default_angles(180), default_offsets(g, 512), default_step(g));
    const double ratio = std::sqrt(unitarized_norm_sq(s) / l2_norm_sq(img));
    out.push_back(detail::result("isometry_polar |ratio-1|", std::abs(ratio - 1.0), 1e-2, t0));
  }
  t0 = detail::Clock::now();
  {
    const Grid2 fine = Grid2::centered(512, 1.0 / 16), lat = Grid2::centered(128, 0.25);
    const Image img = sample(dog_phantom(), fine);
    const BesselSquareTail tail(0.5);
    const auto s = radon_circular(img, lat, hybrid_radii(1e-3, 0.5, 0.05, 6.0), 0.5);
    const double ratio = std::sqrt(unitarized_norm_sq(s, tail) / l2_norm_sq(img));
    out.push_back(detail::result("isometry_circular |ratio-1|", std::abs(ratio - 1.0), 1e-2, t0));
  }
  t0 = detail::Clock::now();
  const double ca = c_alpha(0.5, CalphaScheme::adaptive_simpson), cb = c_alpha(0.5, CalphaScheme::midpoint);
  out.push_back(detail::result("calpha_dual_quadrature", std::abs(ca - cb) / std::abs(ca), 1e-4, t0));
  return out;
}

// ------------------------------------------------------------ intertwining

// R pi(g) f = chi(g)^{-1} pi^(g) R f on ten random elements per family.
inline Checks check_intertwining(std::uint64_t seed) {
  Checks out;
  std::mt19937_64 rng(seed);
  const Phantom blobs = blobs_phantom();
  {
    const auto t0 = detail::Clock::now();
    const Grid2 g = Grid2::centered(256, 1.0 / 16);
    const Axis th = default_angles(180), ts = default_offsets(g, 384);
    const auto rf = radon_polar(sample(blobs, g), th, ts, default_step(g));
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const Sim2 e = detail::random_sim2(rng, 4.0 * g.dx);
      const auto lhs = radon_polar(sample(transformed(blobs, e), g), th, ts, default_step(g));
      const double chi = character(RadonFamily::polar(), Character::chi, e);
      const auto rhs = hat_pi(e, rf);
      worst = std::max(worst,
                       detail::rel_residual(lhs.values.data, detail::scaled(rhs.values.data, 1.0 / chi), rf.values.data));
    }
    out.push_back(detail::result("intertwining_polar", worst, 2e-2, t0));
  }
  {
    const auto t0 = detail::Clock::now();
    const Grid2 g = Grid2::centered(256, 1.0 / 16);
    const Axis vs = default_slopes(128), ts = default_offsets(g, 384);
    const auto rf = radon_affine(sample(blobs, g), vs, ts, default_step(g));
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
      const Shear e = detail::random_shear(rng, 4.0 * g.dx);
      const auto lhs = radon_affine(sample(transformed(blobs, e), g), vs, ts, default_step(g));
      const double chi = character(RadonFamily::affine(), Character::chi, e);
      const auto rhs = hat_pi(e, rf);
      // only slopes whose preimage lies inside the sampled slope range
      std::vector<cplx> l, r;
      for (std::size_t i = 0; i < vs.n; ++i) {
        const double pre = (vs.at(i) - e.s) / std::sqrt(std::abs(e.a));
        if (pre < vs.at(0) || pre > vs.last()) continue;
        for (std::size_t j = 0; j < ts.n; ++j) {
          l.push_back(lhs.values(i, j));
          r.push_back(rhs.values(i, j) / chi);
        }
      }
      worst = std::max(worst, detail::rel_residual(l, r, l));
    }
    out.push_back(detail::result("intertwining_affine", worst, 2e-2, t0));
  }
  {
    const auto t0 = detail::Clock::now();
    const double alpha = 0.5;
    const Grid2 g = Grid2::centered(256, 1.0 / 16), centers = Grid2::centered(128, 1.0 / 16);
    const auto radii = geometric_radii(0.05, 8.0, 96);
    const auto rf = radon_circular(sample(blobs, g), centers, radii, alpha);
    double worst = 0.0;
    const Vec2 lo = centers.origin, hi = centers.point(centers.n1 - 1, centers.n2 - 1);
    for (int k = 0; k < 10; ++k) {
      const Sim2 e = detail::random_sim2(rng, 4.0 * centers.dx);
      const auto lhs = radon_circular(sample(transformed(blobs, e), g), centers, radii, alpha);
      const double chi = character(RadonFamily::circular(alpha), Character::chi, e);
      const auto rhs = hat_pi(e, rf);
      // only circles whose preimage lies inside the sampled parameter range
      const Sim2 ei = inverse(e);
      std::vector<cplx> l, r;
      for (std::size_t ic = 0; ic < centers.size(); ++ic)
        for (std::size_t ir = 0; ir < radii.size(); ++ir) {
          const Circle pre = act(ei, Circle{centers.point(ic % centers.n1, ic / centers.n1), radii[ir]});
          if (pre.r < radii.front() || pre.r > radii.back() || pre.c.x < lo.x || pre.c.y < lo.y || pre.c.x > hi.x ||
              pre.c.y > hi.y)
            continue;
          l.push_back(lhs.at(ic, ir));
          r.push_back(rhs.at(ic, ir) / chi);
        }
      worst = std::max(worst, detail::rel_residual(l, r, l));
    }
    out.push_back(detail::result("intertwining_circular", worst, 2e-2, t0));
  }
  return out;
}

// ------------------------------------------------------- semi-invariance

namespace detail {

inline bool on_node(const Axis& ax, double x) {
  const double u = (x - ax.origin) / ax.step;
  const double k = std::round(u);
  return k >= 0.0 && k <= static_cast<double>(ax.n - 1) && std::abs(u - k) < 1e-9;
}

inline Axis scaled_axis(const Axis& ax, double a) { return {ax.n, a * ax.origin, a * ax.step}; }

}  // namespace detail

// pi^(g) I pi^(g)^{-1} = chi(g)^{-1} I and pi(g) A_s pi(g)^{-1} = a^s A_s on dilations.
// The inner pi^(g)^{-1} is evaluated exactly (transforms taken at the moved parameters);
// the outer one is compared only where it lands on sample nodes, so no interpolation enters.
inline Checks check_semi_invariance() {
  Checks out;
  const Grid2 g = Grid2::centered(511, 1.0 / 32);
  const Image dog = sample(dog_phantom(), g);
  {
    const auto t0 = detail::Clock::now();
    const Axis th = default_angles(16), ts = Axis::centered(1025, 1.0 / 64);
    const auto is = apply_I_polar(radon_polar(dog, th, ts, default_step(g)));
    double worst = 0.0;
    for (double a : {0.5, 2.0}) {
      const Sim2 e = Sim2::dilation(a);
      PolarSinogram inner(th, ts);
      inner.values = radon_polar(dog, th, detail::scaled_axis(ts, a), default_step(g)).values;
      for (auto& v : inner.values.data) v *= std::sqrt(a);
      const auto lhs = hat_pi(e, apply_I_polar(inner));
      const double chi = character(RadonFamily::polar(), Character::chi, e);
      std::vector<cplx> l, r;
      for (std::size_t i = 0; i < th.n; ++i)
        for (std::size_t j = 0; j < ts.n; ++j) {
          if (!detail::on_node(ts, ts.at(j) / a)) continue;
          l.push_back(lhs.values(i, j));
          r.push_back(is.values(i, j) / chi);
        }
      worst = std::max(worst, detail::rel_residual(l, r, r));
    }
    out.push_back(detail::result("semi_invariance_I_polar", worst, 2e-2, t0));
  }
  {
    const auto t0 = detail::Clock::now();
    const Axis vs = default_slopes(33, 2.0), ts = Axis::centered(2049, 1.0 / 64);
    const auto is = apply_I_affine(radon_affine(dog, vs, ts, default_step(g)));
    double worst = 0.0;
    for (double a : {0.25, 4.0, -1.0}) {
      const Shear e = Shear::make({}, 0.0, a);
      const double root = std::sqrt(std::abs(a));
      AffineSinogram inner(vs, ts);
      inner.values =
          radon_affine(dog, detail::scaled_axis(vs, root), detail::scaled_axis(ts, a), default_step(g)).values;
      for (auto& v : inner.values.data) v *= std::pow(std::abs(a), 0.75);
      const auto lhs = hat_pi(e, apply_I_affine(inner));
      const double chi = character(RadonFamily::affine(), Character::chi, e);
      std::vector<cplx> l, r;
      for (std::size_t i = 0; i < vs.n; ++i) {
        if (!detail::on_node(vs, vs.at(i) / root)) continue;
        for (std::size_t j = 0; j < ts.n; ++j) {
          if (!detail::on_node(ts, ts.at(j) / a)) continue;
          l.push_back(lhs.values(i, j));
          r.push_back(is.values(i, j) / chi);
        }
      }
      worst = std::max(worst, detail::rel_residual(l, r, r));
    }
    out.push_back(detail::result("semi_invariance_I_affine", worst, 2e-2, t0));
  }
  {
    const auto t0 = detail::Clock::now();
    const double alpha = 0.5;
    const Grid2 centers = Grid2::centered(255, 1.0 / 16);
    // ratio 2^{1/4}: dilation by 2 maps radii onto radii
    const auto radii = geometric_radii(1.0 / 16.0, 1.0, 17);
    const Axis c1{centers.n1, centers.origin.x, centers.dx}, c2{centers.n2, centers.origin.y, centers.dy};
    const auto is = apply_I_circular(radon_circular(dog, centers, radii, alpha));
    double worst = 0.0;
    for (double a : {0.5, 2.0}) {
      const Sim2 e = Sim2::dilation(a);
      std::vector<double> moved(radii);
      for (auto& r : moved) r *= a;
      const Grid2 moved_centers = Grid2::from_axes(detail::scaled_axis(c1, a), detail::scaled_axis(c2, a));
      CircularSinogram inner(centers, radii, alpha);
      inner.values = radon_circular(dog, moved_centers, moved, alpha).values;
      for (auto& v : inner.values) v *= std::pow(a, 0.5 * (3.0 - alpha));
      const auto lhs = hat_pi(e, apply_I_circular(inner));
      const double chi = character(RadonFamily::circular(alpha), Character::chi, e);
      std::vector<cplx> l, r;
      for (std::size_t ic = 0; ic < centers.size(); ++ic) {
        const Vec2 c = centers.point(ic % centers.n1, ic / centers.n1);
        if (!detail::on_node(c1, c.x / a) || !detail::on_node(c2, c.y / a)) continue;
        for (std::size_t ir = 0; ir < radii.size(); ++ir) {
          const double pre = radii[ir] / a;
          if (pre < radii.front() * (1 - 1e-12) || pre > radii.back() * (1 + 1e-12)) continue;
          l.push_back(lhs.at(ic, ir));
          r.push_back(is.at(ic, ir) / chi);
        }
      }
      worst = std::max(worst, detail::rel_residual(l, r, r));
    }
    out.push_back(detail::result("semi_invariance_I_circular", worst, 2e-2, t0));
  }
  {
    const auto t0 = detail::Clock::now();
    const Grid2 big = Grid2::centered(511, 1.0 / 16);
    const Axis x1{big.n1, big.origin.x, big.dx}, x2{big.n2, big.origin.y, big.dy};
    const Phantom dp = dog_phantom();
    const Image f = sample(dp, big);
    double worst = 0.0;
    for (double s : {-1.0, -0.5, 0.5, 1.0}) {
      const Image ref = apply_As(f, s);
      for (double a : {0.5, 2.0}) {
        const Sim2 e = Sim2::dilation(a);
        const Image lhs = apply_pi(e, apply_As(sample(transformed(dp, inverse(e)), big), s));
        std::vector<cplx> l, r;
        for (std::size_t k = 0; k < big.size(); ++k) {
          const Vec2 x = big.point(k % big.n1, k / big.n1);
          if (!detail::on_node(x1, x.x / a) || !detail::on_node(x2, x.y / a)) continue;
          l.push_back(lhs.data[k]);
          r.push_back(std::pow(a, s) * ref.data[k]);
        }
        worst = std::max(worst, detail::rel_residual(l, r, r));
      }
    }
    out.push_back(detail::result("semi_invariance_A_s", worst, 2e-2, t0));
  }
  return out;
}

// ------------------------------------------------------------ admissibility

inline Checks check_admissibility() {
  Checks out;
  auto t0 = detail::Clock::now();
  const WaveletSpec s = make_sim2_wavelet();
  const double closed = sim2_admissibility_closed_form(s), numeric = admissibility_integral(s);
  out.push_back(detail::result("admissibility_sim2_closed_form", std::abs(closed - 1.0), 1e-3, t0));
  out.push_back(detail::result("admissibility_sim2_numeric", std::abs(numeric - 1.0), 1e-3, t0));
  out.push_back(detail::result("admissibility_sim2_agreement", std::abs(numeric - closed), 1e-3, t0));
  t0 = detail::Clock::now();
  const WaveletSpec h = make_shearlet();
  out.push_back(detail::result("admissibility_shearlet", std::abs(admissibility_integral(h, 4.0, 2001) - 1.0), 1e-3, t0));
  return out;
}

// ------------------------------------------------- energy and round trips

inline ExperimentConfig family_config(const std::string& family) {
  ExperimentConfig c;
  c.family = family;
  return c;
}

inline Checks check_energy() {
  Checks out;
  for (const char* fam : {"polar", "affine", "circular"}) {
    const auto t0 = detail::Clock::now();
    const ExperimentResult r = run_experiment(family_config(fam));
    out.push_back(detail::result(std::string("energy_identity_") + fam, r.report.energy_residual(), 5e-2, t0, 300.0));
  }
  return out;
}

inline Checks check_roundtrip() {
  Checks out;
  for (const char* fam : {"polar", "affine", "circular"}) {
    const auto t0 = detail::Clock::now();
    const ExperimentConfig base = family_config(fam);
    const ExperimentResult r0 = run_experiment(base);
    out.push_back(detail::result(std::string("roundtrip_") + fam, r0.report.rel_l2_error, base.budget(), t0));
    const auto t1 = detail::Clock::now();
    const ExperimentResult r1 = run_experiment(refined(base));
    CheckResult c = detail::result(std::string("roundtrip_refinement_ratio_") + fam,
                                   r1.report.rel_l2_error / r0.report.rel_l2_error, 1.0, t1);
    c.strict = true;
    out.push_back(c);
  }
  return out;
}

// ------------------------------------------------------- compact-scale split

// Midpoint rule in ln a with its own angle nodes, independent of the adaptive rule in LowPass.
inline double band_integral_midpoint(const WaveletSpec& psi, double a_cut, Vec2 xi, std::size_t nu = 2000,
                                     std::size_t nphi = 16) {
  const double lo = std::log(a_cut) - 40.0, h = 40.0 / static_cast<double>(nu);
  const double dphi = two_pi / static_cast<double>(nphi);
  double acc = 0.0;
  for (std::size_t i = 0; i < nu; ++i) {
    const double a = std::exp(lo + h * (static_cast<double>(i) + 0.5));
    for (std::size_t k = 0; k < nphi; ++k)
      acc += std::norm(psi.spectrum(a * rotate(-dphi * (static_cast<double>(k) + 0.5), xi)));
  }
  return acc * h * dphi;
}

inline Checks check_lowpass() {
  Checks out;
  const WaveletSpec psi = make_sim2_wavelet();
  const LowPass phi = make_phi_lowpass(psi, 1.0);
  const ExperimentConfig c = family_config("polar");
  const Grid2 lat = lattice_of(c);
  {
    const auto t0 = detail::Clock::now();
    const Grid2 fg = lat.frequencies();
    const Spectrum fphi = sample_lowpass(phi, fg);
    // one node per distinct radius (the wavelet is isotropic)
    std::map<double, std::size_t> reps;
    for (std::size_t k = 0; k < fg.size(); ++k) {
      const Vec2 xi = fg.point(k % fg.n1, k / fg.n1);
      reps.emplace(dot(xi, xi), k);
    }
    std::vector<std::size_t> nodes;
    for (const auto& [r2, k] : reps) nodes.push_back(k);
    std::vector<double> err(nodes.size()), zmin(nodes.size());
    parallel_for(nodes.size(), [&](std::size_t i) {
      const std::size_t k = nodes[i];
      const Vec2 xi = fg.point(k % fg.n1, k / fg.n1);
      err[i] = std::abs(std::norm(fphi.data[k]) + band_integral_midpoint(psi, phi.a_cut, xi) - 1.0);
      zmin[i] = phi.z(xi);
    });
    double worst = 0.0, lowest = INFINITY;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      worst = std::max(worst, err[i]);
      lowest = std::min(lowest, zmin[i]);
    }
    out.push_back(detail::result("lowpass_partition_pointwise", worst, 1e-3, t0));
    out.push_back(detail::result("lowpass_negative_excursion", std::max(0.0, -lowest), 1e-6, t0));
  }
  const Phantom ph = make_phantom(c.phantom_name());
  const Image truth = sample(ph, lat);
  const Image fine = sample(ph, Grid2::centered(c.image_size * c.oversample, c.image_spacing / c.oversample));
  const RfaFile s = sinogram_of(c, fine);
  const double step = std::log(c.a_max / c.a_min) / static_cast<double>(c.scales);
  double totals[2] = {0.0, 0.0};
  const double cuts[2] = {1.0, 0.5};
  for (int i = 0; i < 2; ++i) {
    const auto t0 = detail::Clock::now();
    const double a_min = 1.0 / 16.0, a_cut = cuts[i];
    const auto n = static_cast<std::size_t>(std::ceil(std::log(a_cut / a_min) / step - 1e-9));
    const Sim2Grid grid = Sim2Grid::make(lat, c.group_angles, a_min, a_cut, n);
    const Reconstruction r = invert_with_lowpass(s.polar, psi, make_phi_lowpass(psi, a_cut), grid);
    totals[i] = r.report.energy_low + r.report.energy_rhs;
    if (i == 0)
      out.push_back(detail::result("lowpass_energy_split", std::abs(totals[0] / l2_norm_sq(truth) - 1.0), 2e-2, t0));
  }
  out.push_back(detail::result("lowpass_cut_independence", std::abs(totals[1] / totals[0] - 1.0), 1e-2,
                               detail::Clock::now()));
  return out;
}

// ----------------------------------------------------- factorized shearlets

inline Checks check_factorized(std::uint64_t seed) {
  const auto t0 = detail::Clock::now();
  const Grid2 lat = Grid2::centered(64, 0.25), fine = Grid2::centered(256, 1.0 / 16);
  const Image f = sample(cone_dog_phantom(), fine);
  const auto sino = radon_affine(f, default_slopes(128, 1.25), default_offsets(lat, 512), default_step(fine));
  const WaveletSpec psi = make_shearlet();
  const WindowSpectrum win = window_spectrum(psi, RadonFamily::affine());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double a = detail::log_uniform(rng, 0.25, 2.0) * (u(rng) < 0.0 ? -1.0 : 1.0);
    const double s = u(rng);
    const Shear g = Shear::make({3.0 * u(rng), 3.0 * u(rng)}, s, a);
    const cplx direct = sinogram_coefficient(sino, win, g);
    const cplx fact = shearlet_coefficients_factorized(sino, psi, g);
    worst = std::max(worst, std::abs(direct - fact) / std::abs(direct));
  }
  return {detail::result("factorized_shearlet", worst, 2e-2, t0)};
}

// ------------------------------------------------------------------ suites

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"slice",         "unitarity", "intertwining", "semi_invariance",
                                                 "admissibility", "energy",    "lowpass",      "roundtrip",
                                                 "factorized"};
  return names;
}

inline Checks run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "slice") return check_slices();
  if (name == "unitarity") return check_unitarity();
  if (name == "intertwining") return check_intertwining(seed);
  if (name == "semi_invariance") return check_semi_invariance();
  if (name == "admissibility") return check_admissibility();
  if (name == "energy") return check_energy();
  if (name == "lowpass") return check_lowpass();
  if (name == "roundtrip") return check_roundtrip();
  if (name == "factorized") return check_factorized(seed);
  if (name == "all") {
    Checks all;
    for (const auto& n : suite_names()) {
      Checks c = run_suite(n, seed);
      all.insert(all.end(), c.begin(), c.end());
    }
    return all;
  }
  throw UsageError("unknown verify suite: " + name);
}

// CSV table without timings, so repeated runs produce identical bytes.
inline std::string format_table(const Checks& checks) {
  std::string out = "property,measured,budget,status\n";
  char buf[256];
  for (const auto& c : checks) {
    std::snprintf(buf, sizeof buf, "%s,%.6e,%s%.6e,%s\n", c.property.c_str(), c.measured, c.strict ? "<" : "",
                  c.budget, c.value_ok() ? "pass" : "FAIL");
    out += buf;
  }
  return out;
}

}  // namespace radon
