#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "fft.hpp"
#include "group.hpp"
#include "parallel.hpp"

namespace radon {

// Uniform sample positions origin + i*step, i = 0..n-1.
struct Axis {
  std::size_t n = 0;
  double origin = 0.0;
  double step = 1.0;

  double at(std::size_t i) const { return origin + static_cast<double>(i) * step; }
  double last() const { return at(n - 1); }

  static Axis centered(std::size_t n, double step) {
    if (n < 2 || !(step > 0.0)) throw DomainError("axis needs n >= 2 and positive step");
    return {n, -0.5 * static_cast<double>(n - 1) * step, step};
  }
  // n points from lo to hi inclusive
  static Axis span(double lo, double hi, std::size_t n) {
    if (n < 2 || !(hi > lo)) throw DomainError("axis span needs n >= 2 and hi > lo");
    return {n, lo, (hi - lo) / static_cast<double>(n - 1)};
  }
  // n points covering [lo, lo + period) without the endpoint
  static Axis periodic(double lo, double period, std::size_t n) {
    if (n < 2 || !(period > 0.0)) throw DomainError("periodic axis needs n >= 2");
    return {n, lo, period / static_cast<double>(n)};
  }
};

// Frequencies k/(n*step), k = -n/2 .. n/2-1, in increasing order.
inline Axis frequency_axis(const Axis& x) {
  const double dxi = 1.0 / (static_cast<double>(x.n) * x.step);
  return {x.n, -static_cast<double>(x.n / 2) * dxi, dxi};
}

struct Grid2 {
  std::size_t n1 = 0, n2 = 0;
  Vec2 origin;
  double dx = 1.0, dy = 1.0;

  static Grid2 centered(std::size_t n1, std::size_t n2, double dx, double dy) {
    const Axis a1 = Axis::centered(n1, dx), a2 = Axis::centered(n2, dy);
    return {n1, n2, {a1.origin, a2.origin}, dx, dy};
  }
  static Grid2 centered(std::size_t n, double d) { return centered(n, n, d, d); }
  static Grid2 from_axes(const Axis& a1, const Axis& a2) {
    return {a1.n, a2.n, {a1.origin, a2.origin}, a1.step, a2.step};
  }

  Axis axis1() const { return {n1, origin.x, dx}; }
  Axis axis2() const { return {n2, origin.y, dy}; }
  std::size_t size() const { return n1 * n2; }
  Vec2 point(std::size_t i1, std::size_t i2) const {
    return {origin.x + static_cast<double>(i1) * dx, origin.y + static_cast<double>(i2) * dy};
  }
  double cell() const { return dx * dy; }
  Grid2 frequencies() const { return from_axes(frequency_axis(axis1()), frequency_axis(axis2())); }
  bool same_as(const Grid2& o) const {
    return n1 == o.n1 && n2 == o.n2 && origin.x == o.origin.x && origin.y == o.origin.y &&
           dx == o.dx && dy == o.dy;
  }
};

// Samples stored row-major with the first coordinate fastest: data[i2 * n1 + i1].
struct Field2 {
  Grid2 grid;
  std::vector<cplx> data;

  Field2() = default;
  explicit Field2(const Grid2& g) : grid(g), data(g.size()) {}

  cplx& operator()(std::size_t i1, std::size_t i2) { return data[i2 * grid.n1 + i1]; }
  const cplx& operator()(std::size_t i1, std::size_t i2) const { return data[i2 * grid.n1 + i1]; }
};

struct Image : Field2 {
  using Field2::Field2;
};

struct Spectrum : Field2 {
  using Field2::Field2;
};

template <class F>
Image sample_image(const Grid2& g, F&& f) {
  Image img(g);
  for (std::size_t i2 = 0; i2 < g.n2; ++i2)
    for (std::size_t i1 = 0; i1 < g.n1; ++i1) img(i1, i2) = f(g.point(i1, i2));
  return img;
}

// Squared L2 norm with the cell measure of the grid.
inline double l2_norm_sq(const Field2& f) {
  double s = 0.0;
  for (const auto& v : f.data) s += std::norm(v);
  return s * f.grid.cell();
}
inline double l2_norm(const Field2& f) { return std::sqrt(l2_norm_sq(f)); }

inline cplx inner(const Field2& f, const Field2& g) {
  cplx s = 0.0;
  for (std::size_t i = 0; i < f.data.size(); ++i) s += f.data[i] * std::conj(g.data[i]);
  return s * f.grid.cell();
}

// Relative L2 distance ||f - ref|| / ||ref||.
inline double rel_l2_error(const Field2& f, const Field2& ref) {
  if (f.data.size() != ref.data.size()) throw std::invalid_argument("shape mismatch");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < f.data.size(); ++i) {
    num += std::norm(f.data[i] - ref.data[i]);
    den += std::norm(ref.data[i]);
  }
  if (den == 0.0) return num == 0.0 ? 0.0 : INFINITY;
  return std::sqrt(num / den);
}

// ------------------------------------------------------------------- DFTs

namespace detail {

inline void index_phase(const Axis& x, std::vector<cplx>& phase) {
  const Axis xi = frequency_axis(x);
  phase.resize(x.n);
  for (std::size_t m = 0; m < x.n; ++m) phase[m] = std::polar(1.0, -two_pi * xi.at(m) * x.origin);
}

inline std::size_t wrap_index(std::size_t m, std::size_t n) {
  // centered index m <-> FFT index (m - n/2) mod n
  return (m + n - n / 2) % n;
}

}  // namespace detail

// Continuous-normalized transform of samples on axis x: out[m] ~ int f(x) e^{-2 pi i xi_m x} dx.
inline void dft_line(const cplx* in, cplx* out, const Axis& x) {
  const std::size_t n = x.n;
  std::vector<cplx> raw(n), phase;
  fft_1d(in, raw.data(), n, FFTW_FORWARD);
  detail::index_phase(x, phase);
  for (std::size_t m = 0; m < n; ++m) out[m] = x.step * phase[m] * raw[detail::wrap_index(m, n)];
}

// Inverse of dft_line: spectrum on frequency_axis(x) back to samples on x.
inline void idft_line(const cplx* in, cplx* out, const Axis& x) {
  const std::size_t n = x.n;
  std::vector<cplx> raw(n), phase;
  detail::index_phase(x, phase);
  for (std::size_t m = 0; m < n; ++m) raw[detail::wrap_index(m, n)] = in[m] * std::conj(phase[m]);
  fft_1d(raw.data(), out, n, FFTW_BACKWARD);
  const double dxi = 1.0 / (static_cast<double>(n) * x.step);
  for (std::size_t j = 0; j < n; ++j) out[j] *= dxi;
}

// Trigonometric interpolation of the inverse transform on an axis refined by `factor`
// (same origin, step x.step / factor, n * factor points).
inline std::vector<cplx> idft_line_refined(const cplx* in, const Axis& x, std::size_t factor) {
  const std::size_t n = x.n, nf = n * factor;
  const Axis xi = frequency_axis(x);
  std::vector<cplx> raw(nf, 0.0), out(nf);
  for (std::size_t m = 0; m < n; ++m) {
    const long k = static_cast<long>(m) - static_cast<long>(n / 2);
    const std::size_t idx = static_cast<std::size_t>((k % static_cast<long>(nf) + static_cast<long>(nf)) %
                                                     static_cast<long>(nf));
    raw[idx] = in[m] * std::polar(1.0, two_pi * xi.at(m) * x.origin);
  }
  fft_1d(raw.data(), out.data(), nf, FFTW_BACKWARD);
  for (auto& v : out) v *= xi.step;
  return out;
}

inline Spectrum dft2_unitary(const Image& img) {
  const Grid2& g = img.grid;
  Spectrum out(g.frequencies());
  std::vector<cplx> raw(g.size());
  fft_2d(img.data.data(), raw.data(), g.n2, g.n1, FFTW_FORWARD);
  std::vector<cplx> p1, p2;
  detail::index_phase(g.axis1(), p1);
  detail::index_phase(g.axis2(), p2);
  for (std::size_t m2 = 0; m2 < g.n2; ++m2) {
    const std::size_t r2 = detail::wrap_index(m2, g.n2);
    for (std::size_t m1 = 0; m1 < g.n1; ++m1) {
      const std::size_t r1 = detail::wrap_index(m1, g.n1);
      out(m1, m2) = g.cell() * p1[m1] * p2[m2] * raw[r2 * g.n1 + r1];
    }
  }
  return out;
}

// Inverse transform; `space` is the image grid the spectrum came from.
inline Image idft2_unitary(const Spectrum& spec, const Grid2& space) {
  const Grid2& g = space;
  std::vector<cplx> raw(g.size());
  std::vector<cplx> p1, p2;
  detail::index_phase(g.axis1(), p1);
  detail::index_phase(g.axis2(), p2);
  for (std::size_t m2 = 0; m2 < g.n2; ++m2) {
    const std::size_t r2 = detail::wrap_index(m2, g.n2);
    for (std::size_t m1 = 0; m1 < g.n1; ++m1) {
      const std::size_t r1 = detail::wrap_index(m1, g.n1);
      raw[r2 * g.n1 + r1] = spec(m1, m2) * std::conj(p1[m1] * p2[m2]);
    }
  }
  Image out(g);
  fft_2d(raw.data(), out.data.data(), g.n2, g.n1, FFTW_BACKWARD);
  const double dxi = spec.grid.cell();
  for (auto& v : out.data) v *= dxi;
  return out;
}

// Embeds the image into a zero-padded grid `factor` times larger with the same sample
// positions, which samples the same trigonometric spectrum on a finer frequency lattice.
inline Spectrum dft2_padded(const Image& img, std::size_t factor) {
  const Grid2& g = img.grid;
  const std::size_t m1 = g.n1 * factor, m2 = g.n2 * factor;
  if ((m1 - g.n1) % 2 != 0 || (m2 - g.n2) % 2 != 0)
    throw DomainError("padding must keep the grid centered");
  const Grid2 big = Grid2::centered(m1, m2, g.dx, g.dy);
  Image padded(big);
  const std::size_t o1 = (m1 - g.n1) / 2, o2 = (m2 - g.n2) / 2;
  for (std::size_t i2 = 0; i2 < g.n2; ++i2)
    for (std::size_t i1 = 0; i1 < g.n1; ++i1) padded(i1 + o1, i2 + o2) = img(i1, i2);
  return dft2_unitary(padded);
}

// Image whose spectrum is given in closed form, sampled through the inverse DFT.
inline Image sample_from_spectrum(const std::function<cplx(Vec2)>& spectrum, const Grid2& g) {
  const Grid2 fg = g.frequencies();
  Spectrum spec(fg);
  for (std::size_t i2 = 0; i2 < fg.n2; ++i2)
    for (std::size_t i1 = 0; i1 < fg.n1; ++i1) spec(i1, i2) = spectrum(fg.point(i1, i2));
  return idft2_unitary(spec, g);
}

// 2D row-major array (rows x cols) used for sinogram-like data.
struct Array2 {
  std::size_t rows = 0, cols = 0;
  std::vector<cplx> data;

  Array2() = default;
  Array2(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  cplx& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  cplx* row(std::size_t r) { return data.data() + r * cols; }
  const cplx* row(std::size_t r) const { return data.data() + r * cols; }
};

// Per-row transform along the last axis (sampled on `axis`); output rows are on frequency_axis(axis).
inline Array2 dft1_rows(const Array2& arr, const Axis& axis) {
  if (axis.n != arr.cols) throw std::invalid_argument("axis length does not match row length");
  Array2 out(arr.rows, arr.cols);
  parallel_for(arr.rows, [&](std::size_t r) { dft_line(arr.row(r), out.row(r), axis); });
  return out;
}

inline Array2 idft1_rows(const Array2& arr, const Axis& axis) {
  if (axis.n != arr.cols) throw std::invalid_argument("axis length does not match row length");
  Array2 out(arr.rows, arr.cols);
  parallel_for(arr.rows, [&](std::size_t r) { idft_line(arr.row(r), out.row(r), axis); });
  return out;
}

// --------------------------------------------------------- interpolation

// Bilinear interpolation; exactly zero outside the convex hull of the sample points.
inline cplx bilinear_sample(const Field2& img, Vec2 p) {
  const Grid2& g = img.grid;
  const double u = (p.x - g.origin.x) / g.dx;
  const double v = (p.y - g.origin.y) / g.dy;
  const double umax = static_cast<double>(g.n1 - 1), vmax = static_cast<double>(g.n2 - 1);
  if (!(u >= 0.0 && v >= 0.0 && u <= umax && v <= vmax)) return 0.0;
  std::size_t i = static_cast<std::size_t>(u), j = static_cast<std::size_t>(v);
  if (i >= g.n1 - 1) i = g.n1 - 2;
  if (j >= g.n2 - 1) j = g.n2 - 2;
  const double fu = u - static_cast<double>(i), fv = v - static_cast<double>(j);
  const cplx* r0 = img.data.data() + j * g.n1 + i;
  const cplx* r1 = r0 + g.n1;
  return (1.0 - fv) * ((1.0 - fu) * r0[0] + fu * r0[1]) + fv * ((1.0 - fu) * r1[0] + fu * r1[1]);
}

// Linear interpolation of samples on a uniform axis; zero outside [first, last].
inline cplx linear_sample(const cplx* row, const Axis& axis, double x) {
  const double u = (x - axis.origin) / axis.step;
  const double umax = static_cast<double>(axis.n - 1);
  if (!(u >= 0.0 && u <= umax)) return 0.0;
  std::size_t i = static_cast<std::size_t>(u);
  if (i >= axis.n - 1) i = axis.n - 2;
  const double f = u - static_cast<double>(i);
  return (1.0 - f) * row[i] + f * row[i + 1];
}

// ------------------------------------------------------ line/circle sums

namespace detail {

// Clips the parameter range of p0 + y*d to the rectangle; false if the line misses it.
inline bool clip_line(Vec2 p0, Vec2 d, Vec2 lo, Vec2 hi, double& y0, double& y1) {
  y0 = -INFINITY;
  y1 = INFINITY;
  const double pc[2] = {p0.x, p0.y}, dc[2] = {d.x, d.y}, lc[2] = {lo.x, lo.y}, hc[2] = {hi.x, hi.y};
  for (int k = 0; k < 2; ++k) {
    if (dc[k] == 0.0) {
      if (pc[k] < lc[k] || pc[k] > hc[k]) return false;
      continue;
    }
    double a = (lc[k] - pc[k]) / dc[k], b = (hc[k] - pc[k]) / dc[k];
    if (a > b) std::swap(a, b);
    y0 = std::max(y0, a);
    y1 = std::min(y1, b);
  }
  return y1 > y0;
}

inline Vec2 hull_lo(const Grid2& g) { return g.origin; }
inline Vec2 hull_hi(const Grid2& g) {
  return {g.origin.x + static_cast<double>(g.n1 - 1) * g.dx,
          g.origin.y + static_cast<double>(g.n2 - 1) * g.dy};
}

// Midpoint rule for the integral over y of f(p0 + y*d), restricted to the grid hull.
inline cplx segment_integral(const Field2& img, Vec2 p0, Vec2 d, double step) {
  double y0, y1;
  if (!clip_line(p0, d, hull_lo(img.grid), hull_hi(img.grid), y0, y1)) return 0.0;
  const std::size_t n = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil((y1 - y0) / step)));
  const double h = (y1 - y0) / static_cast<double>(n);
  cplx s = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double y = y0 + (static_cast<double>(k) + 0.5) * h;
    s += bilinear_sample(img, p0 + y * d);
  }
  return s * h;
}

}  // namespace detail

// Integral along the line {t*omega + y*omega_perp}, with respect to arclength y.
inline cplx line_integral_arclength(const Field2& img, Vec2 omega, double t, double step) {
  if (!(step > 0.0)) throw DomainError("step must be positive");
  const Vec2 perp{-omega.y, omega.x};
  return detail::segment_integral(img, t * omega, perp, step);
}

// Integral of f(t - v*y, y) dy.
inline cplx line_integral_graph(const Field2& img, double v, double t, double step) {
  if (!(step > 0.0)) throw DomainError("step must be positive");
  return detail::segment_integral(img, {t, 0.0}, {-v, 1.0}, step);
}

// Trapezoid rule for int_0^{2pi} f(c - r w(phi)) dphi.
inline cplx circle_integral(const Field2& img, Vec2 c, double r, std::size_t nphi) {
  if (!(r > 0.0)) throw DomainError("circle radius must be positive");
  if (nphi < 8) throw DomainError("circle quadrature needs at least 8 nodes");
  const Vec2 lo = detail::hull_lo(img.grid), hi = detail::hull_hi(img.grid);
  if (c.x + r < lo.x || c.x - r > hi.x || c.y + r < lo.y || c.y - r > hi.y) return 0.0;
  const double h = two_pi / static_cast<double>(nphi);
  cplx s = 0.0;
  for (std::size_t k = 0; k < nphi; ++k) {
    const double phi = h * static_cast<double>(k);
    s += bilinear_sample(img, {c.x - r * std::cos(phi), c.y - r * std::sin(phi)});
  }
  return s * h;
}

}  // namespace radon
