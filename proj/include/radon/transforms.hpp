#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "group.hpp"
#include "signal.hpp"
#include "sinogram.hpp"
#include "special.hpp"

namespace radon {

inline double default_step(const Grid2& g) { return 0.5 * std::min(g.dx, g.dy); }

inline PolarSinogram radon_polar(const Image& img, const Axis& thetas, const Axis& ts, double step) {
  PolarSinogram s(thetas, ts);
  parallel_for(thetas.n, [&](std::size_t i) {
    const Vec2 w = direction(thetas.at(i));
    for (std::size_t j = 0; j < ts.n; ++j) s.values(i, j) = line_integral_arclength(img, w, ts.at(j), step);
  });
  return s;
}

inline AffineSinogram radon_affine(const Image& img, const Axis& vs, const Axis& ts, double step) {
  AffineSinogram s(vs, ts);
  parallel_for(vs.n, [&](std::size_t i) {
    for (std::size_t j = 0; j < ts.n; ++j) s.values(i, j) = line_integral_graph(img, vs.at(i), ts.at(j), step);
  });
  return s;
}

// Trapezoid node count: enough nodes to keep the arc spacing below `arc` (at least 16).
inline std::size_t circle_nodes(double r, double arc) {
  return std::max<std::size_t>(16, static_cast<std::size_t>(std::ceil(two_pi * r / arc)));
}

// Radius about the grid center outside which every sample is below `rel` times the peak.
inline double support_radius(const Image& img, double rel) {
  double peak = 0.0;
  for (const auto& v : img.data) peak = std::max(peak, std::abs(v));
  const Vec2 center = img.grid.point(0, 0) + 0.5 * (img.grid.point(img.grid.n1 - 1, img.grid.n2 - 1) -
                                                   img.grid.point(0, 0));
  double r = 0.0;
  for (std::size_t i2 = 0; i2 < img.grid.n2; ++i2)
    for (std::size_t i1 = 0; i1 < img.grid.n1; ++i1)
      if (std::abs(img(i1, i2)) > rel * peak) r = std::max(r, norm(img.grid.point(i1, i2) - center));
  return r + std::hypot(img.grid.dx, img.grid.dy);
}

struct CircularOptions {
  std::size_t nphi = 0;     // fixed node count; 0 derives it from `arc`
  double arc = 0.0;         // node spacing along the circle; 0 means twice the image spacing
  double negligible = 1e-14;  // circles meeting only samples below this fraction of the peak are skipped
};

inline CircularSinogram radon_circular(const Image& img, const Grid2& centers, const std::vector<double>& radii,
                                       double alpha, const CircularOptions& opt = {}) {
  CircularSinogram s(centers, radii, alpha);
  const double arc = opt.arc > 0.0 ? opt.arc : 2.0 * std::min(img.grid.dx, img.grid.dy);
  std::vector<std::size_t> nodes(radii.size());
  for (std::size_t ir = 0; ir < radii.size(); ++ir) nodes[ir] = opt.nphi > 0 ? opt.nphi : circle_nodes(radii[ir], arc);
  const double reach = opt.negligible > 0.0 ? support_radius(img, opt.negligible) : INFINITY;
  const Vec2 mid = img.grid.point(0, 0) + 0.5 * (img.grid.point(img.grid.n1 - 1, img.grid.n2 - 1) - img.grid.point(0, 0));
  parallel_for(centers.n2, [&](std::size_t i2) {
    for (std::size_t i1 = 0; i1 < centers.n1; ++i1) {
      const std::size_t ic = i2 * centers.n1 + i1;
      const Vec2 c = centers.point(i1, i2);
      const double d = norm(c - mid);
      for (std::size_t ir = 0; ir < radii.size(); ++ir) {
        const double r = radii[ir];
        if (d > r + reach || r > d + reach) continue;
        s.at(ic, ir) = circle_integral(img, c, r, nodes[ir]);
      }
    }
  });
  return s;
}

// -------------------------------------------------------- slice checks

struct SliceReport {
  double max_error = 0.0;   // sup |lhs - rhs| over the band
  double max_reference = 0.0;
  double relative() const { return max_reference > 0.0 ? max_error / max_reference : max_error; }
};

inline double nyquist(const Grid2& g) { return 0.5 / std::max(g.dx, g.dy); }
inline double nyquist(const Axis& a) { return 0.5 / a.step; }

// Row transforms of the sinogram against the image spectrum along the rays tau * w(theta).
inline double slice_check_polar(const Image& img, const PolarSinogram& sino, std::size_t pad = 8,
                                double band = 0.8) {
  const Spectrum spec = dft2_padded(img, pad);
  const Array2 rows = dft1_rows(sino.values, sino.t);
  const Axis tau = frequency_axis(sino.t);
  const double limit = band * std::min(nyquist(img.grid), nyquist(sino.t));
  SliceReport rep;
  for (std::size_t i = 0; i < sino.theta.n; ++i) {
    const Vec2 w = direction(sino.theta.at(i));
    for (std::size_t k = 0; k < tau.n; ++k) {
      const double t = tau.at(k);
      if (std::abs(t) > limit) continue;
      const cplx ref = bilinear_sample(spec, t * w);
      rep.max_error = std::max(rep.max_error, std::abs(rows(i, k) - ref));
      rep.max_reference = std::max(rep.max_reference, std::abs(ref));
    }
  }
  return rep.relative();
}

// Derived slice identity for the graph parametrization: F_t R f(v, tau) = F f(tau, tau v).
inline double slice_check_affine(const Image& img, const AffineSinogram& sino, std::size_t pad = 8,
                                 double band = 0.8) {
  const Spectrum spec = dft2_padded(img, pad);
  const Array2 rows = dft1_rows(sino.values, sino.t);
  const Axis tau = frequency_axis(sino.t);
  const double lim_img = band * nyquist(img.grid), lim_t = band * nyquist(sino.t);
  SliceReport rep;
  for (std::size_t i = 0; i < sino.v.n; ++i) {
    const double v = sino.v.at(i);
    for (std::size_t k = 0; k < tau.n; ++k) {
      const double t = tau.at(k);
      if (std::abs(t) > lim_t || std::abs(t) * std::hypot(1.0, v) > lim_img) continue;
      const cplx ref = bilinear_sample(spec, {t, t * v});
      rep.max_error = std::max(rep.max_error, std::abs(rows(i, k) - ref));
      rep.max_reference = std::max(rep.max_reference, std::abs(ref));
    }
  }
  return rep.relative();
}

// Center transforms of each radius slice against 2 pi J0(2 pi |tau| r) F f(tau).
inline double slice_check_circular(const Image& img, const CircularSinogram& sino, double band = 0.8) {
  if (!img.grid.same_as(sino.centers)) throw DomainError("circular slice check needs centers on the image grid");
  const Spectrum spec = dft2_unitary(img);
  const Grid2 fg = spec.grid;
  const double limit = band * nyquist(img.grid);
  SliceReport rep;
  for (std::size_t ir = 0; ir < sino.nr(); ++ir) {
    const Spectrum s = dft2_unitary(sino.slice(ir));
    const double r = sino.radii[ir];
    for (std::size_t i2 = 0; i2 < fg.n2; ++i2)
      for (std::size_t i1 = 0; i1 < fg.n1; ++i1) {
        const Vec2 xi = fg.point(i1, i2);
        if (norm(xi) > limit) continue;
        const cplx ref = two_pi * bessel_j0(two_pi * norm(xi) * r) * spec(i1, i2);
        rep.max_error = std::max(rep.max_error, std::abs(s(i1, i2) - ref));
        rep.max_reference = std::max(rep.max_reference, std::abs(ref));
      }
  }
  return rep.relative();
}

// ------------------------------------------------------ images under G

// (pi(g) f)(x) = a^{-1} f(g^{-1} x), resampled bilinearly on the same grid.
inline Image apply_pi(const Sim2& g, const Image& img) {
  const Sim2 gi = inverse(g);
  Image out(img.grid);
  for (std::size_t i2 = 0; i2 < img.grid.n2; ++i2)
    for (std::size_t i1 = 0; i1 < img.grid.n1; ++i1)
      out(i1, i2) = bilinear_sample(img, act(gi, img.grid.point(i1, i2))) / g.a;
  return out;
}

inline Image apply_pi(const Shear& g, const Image& img) {
  const Shear gi = inverse(g);
  const double amp = std::pow(std::abs(g.a), -0.75);
  Image out(img.grid);
  for (std::size_t i2 = 0; i2 < img.grid.n2; ++i2)
    for (std::size_t i1 = 0; i1 < img.grid.n1; ++i1)
      out(i1, i2) = amp * bilinear_sample(img, act(gi, img.grid.point(i1, i2)));
  return out;
}

}  // namespace radon
