#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "group.hpp"
#include "signal.hpp"
#include "special.hpp"

namespace radon {

// Rows are angles theta in [0, pi), columns are offsets t.
struct PolarSinogram {
  Axis theta;
  Axis t;
  Array2 values;

  PolarSinogram() = default;
  PolarSinogram(const Axis& th, const Axis& ts) : theta(th), t(ts), values(th.n, ts.n) {
    if (th.origin < 0.0 || th.last() >= pi) throw DomainError("polar angles must lie in [0, pi)");
  }
  // d theta d t
  double cell() const { return theta.step * t.step; }
};

// Rows are slopes v in [-V, V], columns are intercepts t.
struct AffineSinogram {
  Axis v;
  Axis t;
  Array2 values;

  AffineSinogram() = default;
  AffineSinogram(const Axis& vs, const Axis& ts) : v(vs), t(ts), values(vs.n, ts.n) {}
  double cell() const { return v.step * t.step; }
};

// Values are stored center-major: values[center_index * radii.size() + radius_index].
struct CircularSinogram {
  Grid2 centers;
  std::vector<double> radii;
  double alpha = 0.5;
  std::vector<cplx> values;

  CircularSinogram() = default;
  CircularSinogram(const Grid2& c, std::vector<double> r, double a)
      : centers(c), radii(std::move(r)), alpha(a), values(c.size() * radii.size()) {
    check_alpha(a);
    if (radii.empty()) throw DomainError("circular sinogram needs at least one radius");
    for (std::size_t i = 0; i < radii.size(); ++i) {
      if (!(radii[i] > 0.0)) throw DomainError("radii must be positive");
      if (i > 0 && !(radii[i] > radii[i - 1])) throw DomainError("radii must increase");
    }
  }
  std::size_t nr() const { return radii.size(); }
  cplx& at(std::size_t ic, std::size_t ir) { return values[ic * radii.size() + ir]; }
  const cplx& at(std::size_t ic, std::size_t ir) const { return values[ic * radii.size() + ir]; }

  Image slice(std::size_t ir) const {
    Image img(centers);
    for (std::size_t ic = 0; ic < centers.size(); ++ic) img.data[ic] = at(ic, ir);
    return img;
  }
  void set_slice(std::size_t ir, const Image& img) {
    for (std::size_t ic = 0; ic < centers.size(); ++ic) at(ic, ir) = img.data[ic];
  }
};

// Offsets covering every line that meets the image: sqrt(2) times the half-width.
inline Axis default_offsets(const Grid2& g, std::size_t n) {
  const double half = 0.5 * std::max(static_cast<double>(g.n1 - 1) * g.dx, static_cast<double>(g.n2 - 1) * g.dy);
  const double tmax = std::sqrt(2.0) * half;
  return Axis::centered(n, 2.0 * tmax / static_cast<double>(n - 1));
}

inline Axis default_angles(std::size_t n) { return Axis::periodic(0.0, pi, n); }

inline Axis default_slopes(std::size_t n, double V = 2.0) { return Axis::span(-V, V, n); }

// Geometric radii from r_min up to r_switch, then uniform steps dr up to r_max.
inline std::vector<double> hybrid_radii(double r_min, double r_switch, double dr, double r_max) {
  if (!(r_min > 0.0 && r_switch > r_min && dr > 0.0 && r_max > r_switch))
    throw DomainError("invalid radius grid parameters");
  std::vector<double> r;
  const double q = 1.0 + dr / r_switch;
  for (double x = r_min; x < r_switch * (1.0 - 1e-12); x *= q) r.push_back(x);
  const std::size_t n = static_cast<std::size_t>(std::llround((r_max - r_switch) / dr));
  for (std::size_t k = 0; k <= n; ++k) r.push_back(r_switch + dr * static_cast<double>(k));
  return r;
}

inline std::vector<double> geometric_radii(double r_min, double r_max, std::size_t n) {
  if (!(r_min > 0.0 && r_max > r_min) || n < 2) throw DomainError("invalid radius grid parameters");
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i)
    r[i] = r_min * std::pow(r_max / r_min, static_cast<double>(i) / static_cast<double>(n - 1));
  return r;
}

// Weights w_i with sum_i w_i g(r_i) ~ int_0^{r_max} g(r) r^{-alpha} dr: exact for g
// piecewise linear between radii and constant on (0, r_0].
inline std::vector<double> radial_weights(const std::vector<double>& r, double alpha) {
  const std::size_t n = r.size();
  std::vector<double> w(n, 0.0);
  const double e0 = 1.0 - alpha, e1 = 2.0 - alpha;
  w[0] = std::pow(r[0], e0) / e0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double a = r[i], b = r[i + 1], h = b - a;
    const double m0 = (std::pow(b, e0) - std::pow(a, e0)) / e0;
    const double m1 = (std::pow(b, e1) - std::pow(a, e1)) / e1;
    w[i] += (b * m0 - m1) / h;
    w[i + 1] += (m1 - a * m0) / h;
  }
  return w;
}

// ---------------------------------------------------------- interpolation

// Bilinear lookup on the (theta, t) grid. The angle axis is assumed to sample [0, pi)
// periodically; it wraps with the line identity (theta + pi, t) = (theta, -t).
inline cplx sample_polar(const PolarSinogram& s, double theta, double t) {
  const LinePolar xi = normalize(theta, t);
  const double u = (xi.theta - s.theta.origin) / s.theta.step;
  const double fl = std::floor(u);
  const double f = u - fl;
  const long i0 = static_cast<long>(fl);
  const long n = static_cast<long>(s.theta.n);
  auto row_value = [&](long i) -> cplx {
    double tt = xi.t;
    // every wrap by pi flips the offset
    long wraps = 0;
    while (i < 0) { i += n; ++wraps; }
    while (i >= n) { i -= n; ++wraps; }
    if (wraps % 2 != 0) tt = -tt;
    return linear_sample(s.values.row(static_cast<std::size_t>(i)), s.t, tt);
  };
  return (1.0 - f) * row_value(i0) + f * row_value(i0 + 1);
}

inline cplx sample_affine(const AffineSinogram& s, double v, double t) {
  const double u = (v - s.v.origin) / s.v.step;
  const double umax = static_cast<double>(s.v.n - 1);
  if (!(u >= 0.0 && u <= umax)) return 0.0;
  std::size_t i = static_cast<std::size_t>(u);
  if (i >= s.v.n - 1) i = s.v.n - 2;
  const double f = u - static_cast<double>(i);
  return (1.0 - f) * linear_sample(s.values.row(i), s.t, t) + f * linear_sample(s.values.row(i + 1), s.t, t);
}

// Bilinear in the center, linear in the radius; constant below the first radius, zero past the last.
inline cplx sample_circular(const CircularSinogram& s, Vec2 c, double r) {
  const Grid2& g = s.centers;
  const double u = (c.x - g.origin.x) / g.dx, v = (c.y - g.origin.y) / g.dy;
  if (!(u >= 0.0 && v >= 0.0 && u <= static_cast<double>(g.n1 - 1) && v <= static_cast<double>(g.n2 - 1)))
    return 0.0;
  if (r > s.radii.back()) return 0.0;
  std::size_t ir = 0;
  double fr = 0.0;
  if (r > s.radii.front()) {
    ir = static_cast<std::size_t>(std::upper_bound(s.radii.begin(), s.radii.end(), r) - s.radii.begin()) - 1;
    if (ir >= s.nr() - 1) ir = s.nr() - 2;
    fr = (r - s.radii[ir]) / (s.radii[ir + 1] - s.radii[ir]);
  }
  std::size_t i = static_cast<std::size_t>(u), j = static_cast<std::size_t>(v);
  if (i >= g.n1 - 1) i = g.n1 - 2;
  if (j >= g.n2 - 1) j = g.n2 - 2;
  const double fu = u - static_cast<double>(i), fv = v - static_cast<double>(j);
  auto at_r = [&](std::size_t ic) {
    if (s.nr() == 1) return s.at(ic, 0);
    return (1.0 - fr) * s.at(ic, ir) + fr * s.at(ic, ir + 1);
  };
  const std::size_t c00 = j * g.n1 + i;
  return (1.0 - fv) * ((1.0 - fu) * at_r(c00) + fu * at_r(c00 + 1)) +
         fv * ((1.0 - fu) * at_r(c00 + g.n1) + fu * at_r(c00 + g.n1 + 1));
}

// ------------------------------------------------- representations on Xi

// (pi_hat(g) F)(theta, t) = a^{-1/2} F(g^{-1}.(theta, t))
inline PolarSinogram hat_pi(const Sim2& g, const PolarSinogram& s) {
  PolarSinogram out(s.theta, s.t);
  const double amp = 1.0 / std::sqrt(g.a);
  const Sim2 gi = inverse(g);
  parallel_for(s.theta.n, [&](std::size_t i) {
    for (std::size_t j = 0; j < s.t.n; ++j) {
      const LinePolar xi = act(gi, LinePolar{s.theta.at(i), s.t.at(j)});
      out.values(i, j) = amp * sample_polar(s, xi.theta, xi.t);
    }
  });
  return out;
}

// (pi_hat(g) F)(v, t) = |a|^{-3/4} F(g^{-1}.(v, t))
inline AffineSinogram hat_pi(const Shear& g, const AffineSinogram& s) {
  AffineSinogram out(s.v, s.t);
  const double amp = std::pow(std::abs(g.a), -0.75);
  parallel_for(s.v.n, [&](std::size_t i) {
    for (std::size_t j = 0; j < s.t.n; ++j) {
      const LineAffine xi = act_inverse(g, LineAffine{s.v.at(i), s.t.at(j)});
      out.values(i, j) = amp * sample_affine(s, xi.v, xi.t);
    }
  });
  return out;
}

// (pi_hat(g) F)(c, r) = a^{(alpha-3)/2} F(a^{-1} R_{-phi}(c - b), r / a)
inline CircularSinogram hat_pi(const Sim2& g, const CircularSinogram& s) {
  CircularSinogram out(s.centers, s.radii, s.alpha);
  const double amp = std::pow(g.a, 0.5 * (s.alpha - 3.0));
  const Sim2 gi = inverse(g);
  parallel_for(s.centers.n2, [&](std::size_t i2) {
    for (std::size_t i1 = 0; i1 < s.centers.n1; ++i1) {
      const std::size_t ic = i2 * s.centers.n1 + i1;
      for (std::size_t ir = 0; ir < s.nr(); ++ir) {
        const Circle xi = act(gi, Circle{s.centers.point(i1, i2), s.radii[ir]});
        out.at(ic, ir) = amp * sample_circular(s, xi.c, xi.r);
      }
    }
  });
  return out;
}

// ------------------------------------------------------------ L2(d xi)

inline double l2_norm_sq(const PolarSinogram& s) {
  double acc = 0.0;
  for (const auto& v : s.values.data) acc += std::norm(v);
  return acc * s.cell();
}

inline double l2_norm_sq(const AffineSinogram& s) {
  double acc = 0.0;
  for (const auto& v : s.values.data) acc += std::norm(v);
  return acc * s.cell();
}

// Sampled part of int |F|^2 dc dr / r^alpha over the stored radii.
inline double l2_norm_sq(const CircularSinogram& s) {
  const auto w = radial_weights(s.radii, s.alpha);
  double acc = 0.0;
  for (std::size_t ic = 0; ic < s.centers.size(); ++ic)
    for (std::size_t ir = 0; ir < s.nr(); ++ir) acc += w[ir] * std::norm(s.at(ic, ir));
  return acc * s.centers.cell();
}

}  // namespace radon
