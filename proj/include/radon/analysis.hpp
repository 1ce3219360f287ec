#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "group.hpp"
#include "parallel.hpp"
#include "signal.hpp"
#include "sinogram.hpp"
#include "unitarize.hpp"
#include "wavelet.hpp"

namespace radon {

// Log-midpoint scales a_k = a_min q^{k+1/2}, q = (a_max/a_min)^{1/n}.
struct ScaleGrid {
  std::vector<double> a;
  double a_min = 1.0, a_max = 1.0;
  double log_step = 0.0;  // ln q

  static ScaleGrid make(double a_min, double a_max, std::size_t n) {
    if (!(a_min > 0.0) || !(a_max > a_min) || n < 1) throw DomainError("scale range must satisfy 0 < a_min < a_max");
    ScaleGrid s;
    s.a_min = a_min;
    s.a_max = a_max;
    s.log_step = std::log(a_max / a_min) / static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) s.a.push_back(a_min * std::exp(s.log_step * (static_cast<double>(k) + 0.5)));
    return s;
  }
};

// e^{-2 pi a_min^2 rho^2} - e^{-2 pi a_max^2 rho^2}: share of |F f(xi)|^2 seen by the scale band.
inline double gaussian_band(const ScaleGrid& s, double rho) {
  return std::exp(-two_pi * s.a_min * s.a_min * rho * rho) - std::exp(-two_pi * s.a_max * s.a_max * rho * rho);
}

// (phi, a) cells of SIM(2) over a b-lattice. Plane p = scale_index * nphi + phi_index.
struct Sim2Grid {
  Grid2 lattice;
  Axis phis;
  ScaleGrid scales;

  static Sim2Grid make(const Grid2& lattice, std::size_t nphi, double a_min, double a_max, std::size_t nscales) {
    if (nphi < 1) throw DomainError("need at least one angle");
    return {lattice, {nphi, 0.0, two_pi / static_cast<double>(nphi)}, ScaleGrid::make(a_min, a_max, nscales)};
  }

  std::size_t planes() const { return phis.n * scales.a.size(); }
  std::size_t per_scale() const { return phis.n; }
  double scale(std::size_t p) const { return scales.a[p / phis.n]; }
  Sim2 element(std::size_t p, Vec2 b = {}) const { return {b, phis.at(p % phis.n), scale(p)}; }
  // a^{-3} d phi da with da = a ln q
  double weight(std::size_t p) const {
    const double a = scale(p);
    return phis.step * scales.log_step / (a * a);
  }
  // F[pi(0, phi, a) psi](xi) = a F psi(a R_phi^{-1} xi)
  cplx symbol(const WaveletSpec& psi, std::size_t p, Vec2 xi) const {
    const Sim2 g = element(p);
    return g.a * psi.spectrum(g.a * rotate(-g.phi, xi));
  }
  double band(Vec2 xi) const { return gaussian_band(scales, norm(xi)); }
  void check(const WaveletSpec& psi) const {
    if (psi.kind != WaveletKind::sim2_gaussian) throw DomainError("SIM(2) grid needs the SIM(2) wavelet");
  }
};

// (s, a) cells of the shearlet group, scales of both signs in increasing order.
struct ShearGrid {
  Grid2 lattice;
  Axis shears;
  ScaleGrid scales;  // positive magnitudes
  std::vector<double> signed_scales;

  static ShearGrid make(const Grid2& lattice, const Axis& shears, double a_min, double a_max, std::size_t nscales) {
    ShearGrid g{lattice, shears, ScaleGrid::make(a_min, a_max, nscales), {}};
    for (auto it = g.scales.a.rbegin(); it != g.scales.a.rend(); ++it) g.signed_scales.push_back(-*it);
    for (double a : g.scales.a) g.signed_scales.push_back(a);
    return g;
  }

  std::size_t planes() const { return shears.n * signed_scales.size(); }
  std::size_t per_scale() const { return shears.n; }
  double scale(std::size_t p) const { return signed_scales[p / shears.n]; }
  Shear element(std::size_t p, Vec2 b = {}) const { return {b, shears.at(p % shears.n), scale(p)}; }
  // |a|^{-3} ds da with da = |a| ln q
  double weight(std::size_t p) const {
    const double a = std::abs(scale(p));
    return shears.step * scales.log_step / (a * a);
  }
  // F[pi(0, s, a) psi](xi) = |a|^{3/4} F psi(A_a N_s^T xi)
  cplx symbol(const WaveletSpec& psi, std::size_t p, Vec2 xi) const {
    const Shear g = element(p);
    const double a = g.a;
    const Vec2 arg{a * xi.x, sgn(a) * std::sqrt(std::abs(a)) * (xi.y - g.s * xi.x)};
    return std::pow(std::abs(a), 0.75) * psi.spectrum(arg);
  }
  // band share along the first frequency axis, assuming the shear range covers the cone
  double band(Vec2 xi) const { return gaussian_band(scales, std::abs(xi.x)); }
  void check(const WaveletSpec& psi) const {
    if (psi.kind != WaveletKind::shearlet_bump) throw DomainError("shearlet grid needs the shearlet wavelet");
  }
};

// Discrete Calderon sum: sum_p weight_p |symbol_p(xi)|^2.
template <class GroupGrid>
double calderon_sum(const WaveletSpec& psi, const GroupGrid& grid, Vec2 xi) {
  double s = 0.0;
  for (std::size_t p = 0; p < grid.planes(); ++p) s += grid.weight(p) * std::norm(grid.symbol(psi, p, xi));
  return s;
}

struct CoefficientField {
  std::vector<Image> planes;
};

// ------------------------------------------------------------- streaming

// Accumulates sum_p weight_p F V_p(xi) symbol_p(xi) and sum_p weight_p ||V_p||^2.
template <class GroupGrid>
class Synthesizer {
 public:
  Synthesizer(const WaveletSpec& psi, const GroupGrid& grid)
      : psi_(psi), grid_(grid), acc_(grid.lattice.frequencies()) {}

  // Contribution of a whole scale block; the transforms run in parallel, the sum is ordered.
  void add_block(std::size_t first, const std::vector<Image>& coefs) {
    const Grid2 fg = acc_.grid;
    std::vector<std::vector<cplx>> parts(coefs.size());
    std::vector<double> energies(coefs.size());
    parallel_for(coefs.size(), [&](std::size_t j) {
      const std::size_t p = first + j;
      const Spectrum fv = dft2_unitary(coefs[j]);
      const double w = grid_.weight(p);
      parts[j].resize(fg.size());
      for (std::size_t i2 = 0; i2 < fg.n2; ++i2)
        for (std::size_t i1 = 0; i1 < fg.n1; ++i1) {
          const std::size_t k = i2 * fg.n1 + i1;
          parts[j][k] = w * fv.data[k] * grid_.symbol(psi_, p, fg.point(i1, i2));
        }
      energies[j] = w * l2_norm_sq(coefs[j]);
    });
    for (std::size_t j = 0; j < coefs.size(); ++j) {
      for (std::size_t k = 0; k < parts[j].size(); ++k) acc_.data[k] += parts[j][k];
      energy_ += energies[j];
    }
  }

  Image result() const { return idft2_unitary(acc_, grid_.lattice); }
  double energy() const { return energy_; }

 private:
  WaveletSpec psi_;
  GroupGrid grid_;
  Spectrum acc_;
  double energy_ = 0.0;
};

// ------------------------------------------------------ image-side analysis

// Plane of <f, pi(b, g_p) psi> over the b-lattice from the spectrum of f on the lattice.
template <class GroupGrid>
Image voice_plane(const Spectrum& ff, const WaveletSpec& psi, const GroupGrid& grid, std::size_t p) {
  Spectrum s(ff.grid);
  for (std::size_t i2 = 0; i2 < ff.grid.n2; ++i2)
    for (std::size_t i1 = 0; i1 < ff.grid.n1; ++i1)
      s(i1, i2) = ff(i1, i2) * std::conj(grid.symbol(psi, p, ff.grid.point(i1, i2)));
  return idft2_unitary(s, grid.lattice);
}

template <class GroupGrid>
CoefficientField voice_analyze(const Image& f, const WaveletSpec& psi, const GroupGrid& grid) {
  grid.check(psi);
  if (!f.grid.same_as(grid.lattice)) throw DomainError("image grid and b-lattice differ");
  const Spectrum ff = dft2_unitary(f);
  CoefficientField out;
  out.planes.resize(grid.planes());
  parallel_for(grid.planes(), [&](std::size_t p) { out.planes[p] = voice_plane(ff, psi, grid, p); });
  return out;
}

template <class GroupGrid>
Image synthesize(const CoefficientField& c, const WaveletSpec& psi, const GroupGrid& grid) {
  grid.check(psi);
  if (c.planes.size() != grid.planes()) throw DomainError("coefficient field does not match the group grid");
  Synthesizer<GroupGrid> syn(psi, grid);
  const std::size_t per = grid.per_scale();
  for (std::size_t first = 0; first < c.planes.size(); first += per) {
    std::vector<Image> block(c.planes.begin() + static_cast<long>(first),
                             c.planes.begin() + static_cast<long>(first + per));
    syn.add_block(first, block);
  }
  return syn.result();
}

// --------------------------------------------------- sinogram-side analysis

// Row spectra of a line sinogram, zero-padded by `pad` along t.
struct RowSpectra {
  Axis padded;  // padded t-axis
  Axis tau;
  Array2 rows;

  RowSpectra(const Array2& values, const Axis& t, std::size_t pad = 2)
      : padded{t.n * pad, t.origin, t.step}, tau(frequency_axis(padded)), rows(values.rows, t.n * pad) {
    parallel_for(values.rows, [&](std::size_t r) {
      std::vector<cplx> buf(padded.n, 0.0);
      std::copy(values.row(r), values.row(r) + t.n, buf.begin());
      dft_line(buf.data(), rows.row(r), padded);
    });
  }

  // inverse transform of row r times `filter(tau)`, sampled `refine` times finer
  template <class Filter>
  std::vector<cplx> filtered(std::size_t r, Filter&& filter, std::size_t refine) const {
    std::vector<cplx> spec(padded.n);
    for (std::size_t k = 0; k < padded.n; ++k) spec[k] = rows(r, k) * filter(tau.at(k));
    return idft_line_refined(spec.data(), padded, refine);
  }
  std::vector<cplx> filtered_by(std::size_t r, const std::vector<double>& multiplier, std::size_t refine) const {
    std::vector<cplx> spec(padded.n);
    for (std::size_t k = 0; k < padded.n; ++k) spec[k] = rows(r, k) * multiplier[k];
    return idft_line_refined(spec.data(), padded, refine);
  }
  Axis refined_axis(std::size_t refine) const {
    return {padded.n * refine, padded.origin, padded.step / static_cast<double>(refine)};
  }
};

struct SinogramAnalysisOptions {
  std::size_t pad = 2;
  std::size_t refine = 8;  // oversampling of filtered rows before linear interpolation
};

// Adds weight * row(t = dot(n, b)) at every lattice point.
inline void backproject(Image& plane, const std::vector<cplx>& row, const Axis& axis, Vec2 n, cplx weight) {
  const Grid2& g = plane.grid;
  for (std::size_t i2 = 0; i2 < g.n2; ++i2)
    for (std::size_t i1 = 0; i1 < g.n1; ++i1)
      plane(i1, i2) += weight * linear_sample(row.data(), axis, dot(n, g.point(i1, i2)));
}

// chi(g) <R f, pi^(g) Psi> on the lattice for the polar family:
// sum_theta d theta [F_t^{-1}( F_t Rf(theta, .) conj F_t Psi(theta - phi, a .) )](w(theta) . b).
inline Image polar_plane(const RowSpectra& rs, const PolarSinogram& sino, const WindowSpectrum& win,
                         const Sim2Grid& grid, std::size_t p, const SinogramAnalysisOptions& opt) {
  const Sim2 g = grid.element(p);
  // chi(g) a^{-1/2} (amplitude of pi^) times a (dilation of the row transform)
  const double factor = character(RadonFamily::polar(), Character::chi, g) / std::sqrt(g.a) * g.a;
  const Axis fine = rs.refined_axis(opt.refine);
  Image plane(grid.lattice);
  for (std::size_t i = 0; i < sino.theta.n; ++i) {
    const double theta = sino.theta.at(i);
    const auto row = rs.filtered(i, [&](double tau) { return std::conj(win.polar(theta - g.phi, g.a * tau)); },
                                 opt.refine);
    backproject(plane, row, fine, direction(theta), factor * sino.theta.step);
  }
  return plane;
}

// All angles of one scale; an isotropic wavelet gives the same plane for every angle.
inline std::vector<Image> polar_scale_block(const RowSpectra& rs, const PolarSinogram& sino, const WindowSpectrum& win,
                                            const Sim2Grid& grid, std::size_t k, const SinogramAnalysisOptions& opt) {
  const std::size_t per = grid.per_scale();
  std::vector<Image> block(per);
  if (win.psi.isotropic()) {
    const Image plane = polar_plane(rs, sino, win, grid, k * per, opt);
    for (auto& b : block) b = plane;
  } else {
    parallel_for(per, [&](std::size_t j) { block[j] = polar_plane(rs, sino, win, grid, k * per + j, opt); });
  }
  return block;
}

template <class Block>
CoefficientField collect_blocks(std::size_t planes, std::size_t per, Block&& block) {
  CoefficientField out;
  out.planes.reserve(planes);
  for (std::size_t k = 0; k * per < planes; ++k)
    for (auto& img : block(k)) out.planes.push_back(std::move(img));
  return out;
}

inline CoefficientField sinogram_analyze(const PolarSinogram& sino, const WindowSpectrum& win, const Sim2Grid& grid,
                                         const SinogramAnalysisOptions& opt = {}) {
  grid.check(win.psi);
  const RowSpectra rs(sino.values, sino.t, opt.pad);
  return collect_blocks(grid.planes(), grid.per_scale(),
                        [&](std::size_t k) { return polar_scale_block(rs, sino, win, grid, k, opt); });
}

// Affine family, general window: |a|^{-1/4} sum_v dv [F_t^{-1}(F_t Rf(v, .) conj F_t Psi(v', a .))](b1 + v b2)
// with v' = |a|^{-1/2} (v - s).
inline Image affine_plane_general(const RowSpectra& rs, const AffineSinogram& sino, const WindowSpectrum& win,
                                  const ShearGrid& grid, std::size_t p, const SinogramAnalysisOptions& opt) {
  const Shear g = grid.element(p);
  const double root = std::sqrt(std::abs(g.a));
  // chi(g) |a|^{-3/4} |a|
  const double factor = character(RadonFamily::affine(), Character::chi, g) * std::pow(std::abs(g.a), 0.25);
  const Axis fine = rs.refined_axis(opt.refine);
  Image plane(grid.lattice);
  for (std::size_t i = 0; i < sino.v.n; ++i) {
    const double v = sino.v.at(i);
    const double vp = (v - g.s) / root;
    const auto row = rs.filtered(i, [&](double tau) { return std::conj(win.affine(vp, g.a * tau)); }, opt.refine);
    backproject(plane, row, fine, affine_normal(v), factor * sino.v.step);
  }
  return plane;
}

// Separable window F_t Psi(v, tau) = phi2(v) |tau| F psi1(tau): the row filter depends on a
// only, so all shears of one scale share the filtered rows.
class AffineScaleRows {
 public:
  AffineScaleRows(const RowSpectra& rs, const AffineSinogram& sino, const WindowSpectrum& win, double a,
                  const Grid2& lattice, const SinogramAnalysisOptions& opt)
      : v_(sino.v), lattice_(lattice), values_(sino.v.n) {
    const Axis fine = rs.refined_axis(opt.refine);
    parallel_for(sino.v.n, [&](std::size_t i) {
      const auto row = rs.filtered(
          i, [&](double tau) { return std::abs(a * tau) * win.psi.psi1_spectrum(a * tau); }, opt.refine);
      Image plane(lattice);
      backproject(plane, row, fine, affine_normal(sino.v.at(i)), 1.0);
      values_[i] = std::move(plane.data);
    });
  }

  Image plane(const WindowSpectrum& win, const Shear& g) const {
    const double root = std::sqrt(std::abs(g.a));
    const double factor = character(RadonFamily::affine(), Character::chi, g) * std::pow(std::abs(g.a), 0.25);
    Image out(lattice_);
    for (std::size_t i = 0; i < v_.n; ++i) {
      const double w = win.psi.window((v_.at(i) - g.s) / root);
      if (w == 0.0) continue;
      const double c = factor * v_.step * w;
      for (std::size_t k = 0; k < out.data.size(); ++k) out.data[k] += c * values_[i][k];
    }
    return out;
  }

 private:
  Axis v_;
  Grid2 lattice_;
  std::vector<std::vector<cplx>> values_;
};

inline std::vector<Image> affine_scale_block(const RowSpectra& rs, const AffineSinogram& sino,
                                             const WindowSpectrum& win, const ShearGrid& grid, std::size_t k,
                                             const SinogramAnalysisOptions& opt) {
  const std::size_t per = grid.per_scale();
  std::vector<Image> block(per);
  if (win.separable()) {
    const AffineScaleRows rows(rs, sino, win, grid.signed_scales[k], grid.lattice, opt);
    parallel_for(per, [&](std::size_t j) { block[j] = rows.plane(win, grid.element(k * per + j)); });
  } else {
    parallel_for(per, [&](std::size_t j) { block[j] = affine_plane_general(rs, sino, win, grid, k * per + j, opt); });
  }
  return block;
}

inline CoefficientField sinogram_analyze(const AffineSinogram& sino, const WindowSpectrum& win, const ShearGrid& grid,
                                         const SinogramAnalysisOptions& opt = {}) {
  grid.check(win.psi);
  const RowSpectra rs(sino.values, sino.t, opt.pad);
  return collect_blocks(grid.planes(), grid.per_scale(),
                        [&](std::size_t k) { return affine_scale_block(rs, sino, win, grid, k, opt); });
}

// Circular family: chi(g) a^{(alpha+1)/2} k^2 (a|tau|)^{1-alpha} conj F psi(a R_phi^{-1} tau) P(tau), with
// P(tau) = int r^{-alpha} F_c R f(tau, r) 2 pi J0(2 pi |tau| r) dr independent of g.
class CircularAnalyzer {
 public:
  CircularAnalyzer(const CircularSinogram& sino, const BesselSquareTail& tail, const WindowSpectrum& win)
      : win_(win), centers_(sino.centers), alpha_(sino.alpha) {
    const CircularSpectra cs(sino, tail);
    freq_ = cs.frequencies();
    projection_.resize(freq_.size());
    parallel_for(freq_.size(), [&](std::size_t k) { projection_[k] = cs.bessel_projection(k); });
  }

  Image plane(const Sim2Grid& grid, std::size_t p) const {
    const Sim2 g = grid.element(p);
    const RadonFamily fam = RadonFamily::circular(alpha_);
    const double factor = character(fam, Character::chi, g) * std::pow(g.a, 0.5 * (alpha_ + 1.0)) * win_.k2;
    Spectrum s(freq_);
    for (std::size_t i2 = 0; i2 < freq_.n2; ++i2)
      for (std::size_t i1 = 0; i1 < freq_.n1; ++i1) {
        const Vec2 tau = freq_.point(i1, i2);
        const double rho = norm(tau);
        if (rho == 0.0) continue;
        const std::size_t k = i2 * freq_.n1 + i1;
        s.data[k] = factor * std::pow(g.a * rho, 1.0 - alpha_) *
                    std::conj(win_.psi.spectrum(g.a * rotate(-g.phi, tau))) * projection_[k];
      }
    return idft2_unitary(s, centers_);
  }

  std::vector<Image> block(const Sim2Grid& grid, std::size_t k) const {
    const std::size_t per = grid.per_scale();
    std::vector<Image> out(per);
    if (win_.psi.isotropic()) {
      const Image p = plane(grid, k * per);
      for (auto& b : out) b = p;
    } else {
      parallel_for(per, [&](std::size_t j) { out[j] = plane(grid, k * per + j); });
    }
    return out;
  }

  const Grid2& centers() const { return centers_; }

 private:
  WindowSpectrum win_;
  Grid2 centers_;
  Grid2 freq_;
  double alpha_;
  std::vector<cplx> projection_;
};

inline CoefficientField sinogram_analyze(const CircularSinogram& sino, const BesselSquareTail& tail,
                                         const WindowSpectrum& win, const Sim2Grid& grid) {
  grid.check(win.psi);
  if (!sino.centers.same_as(grid.lattice)) throw DomainError("circle centers must coincide with the b-lattice");
  const CircularAnalyzer an(sino, tail, win);
  return collect_blocks(grid.planes(), grid.per_scale(), [&](std::size_t k) { return an.block(grid, k); });
}

}  // namespace radon
