#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "group.hpp"
#include "signal.hpp"

namespace radon {

// A real test function known in closed form, with its Fourier transform when available.
struct Phantom {
  std::function<double(Vec2)> value;
  std::function<cplx(Vec2)> spectrum;

  double operator()(Vec2 x) const { return value(x); }
  bool has_spectrum() const { return static_cast<bool>(spectrum); }
};

// e^{-pi |x|^2 / s^2}
inline Phantom gaussian_phantom(double s = 1.0) {
  return {[s](Vec2 x) { return std::exp(-pi * dot(x, x) / (s * s)); },
          [s](Vec2 xi) { return cplx(s * s * std::exp(-pi * s * s * dot(xi, xi)), 0.0); }};
}

// Zero-mean difference of two unit-mass Gaussians of widths s1 < s2.
inline Phantom dog_phantom(double s1 = 1.25, double s2 = 2.0) {
  return {[s1, s2](Vec2 x) {
            const double r2 = dot(x, x);
            return std::exp(-pi * r2 / (s1 * s1)) / (s1 * s1) - std::exp(-pi * r2 / (s2 * s2)) / (s2 * s2);
          },
          [s1, s2](Vec2 xi) {
            const double r2 = dot(xi, xi);
            return cplx(std::exp(-pi * s1 * s1 * r2) - std::exp(-pi * s2 * s2 * r2), 0.0);
          }};
}

inline Phantom disk_phantom(double radius) {
  return {[radius](Vec2 x) { return dot(x, x) <= radius * radius ? 1.0 : 0.0; }, {}};
}

// Three parallel smooth bars along the second axis.
inline Phantom bars_phantom(double width = 0.5, double spacing = 1.5, double length = 3.0) {
  return {[=](Vec2 x) {
            double s = 0.0;
            for (int k = -1; k <= 1; ++k) {
              const double u = (x.x - k * spacing) / width;
              const double v = x.y / length;
              s += std::exp(-pi * (u * u + v * v * v * v));
            }
            return s;
          },
          {}};
}

// Two elliptical Gaussians off the origin; no rotational symmetry.
inline Phantom blobs_phantom() {
  struct Blob {
    Vec2 c;
    double s1, s2, w;
  };
  static constexpr Blob blobs[2] = {{{0.6, -0.3}, 0.5, 0.9, 1.0}, {{-0.7, 0.5}, 0.8, 0.4, -0.6}};
  return {[](Vec2 x) {
            double v = 0.0;
            for (const auto& b : blobs) {
              const double u1 = (x.x - b.c.x) / b.s1, u2 = (x.y - b.c.y) / b.s2;
              v += b.w * std::exp(-pi * (u1 * u1 + u2 * u2));
            }
            return v;
          },
          [](Vec2 xi) {
            cplx v = 0.0;
            for (const auto& b : blobs)
              v += b.w * b.s1 * b.s2 * std::polar(1.0, -two_pi * dot(b.c, xi)) *
                   std::exp(-pi * (b.s1 * b.s1 * xi.x * xi.x + b.s2 * b.s2 * xi.y * xi.y));
            return v;
          }};
}

// x -> a^{-1} f(g^{-1} x), the unitary SIM(2) action on L^2(R^2).
inline Phantom transformed(const Phantom& f, const Sim2& g) {
  const Sim2 gi = inverse(g);
  Phantom out;
  if (f.value) out.value = [f, gi, g](Vec2 x) { return f(act(gi, x)) / g.a; };
  if (f.has_spectrum())
    out.spectrum = [f, g](Vec2 xi) {
      const Vec2 arg = g.a * rotate(-g.phi, xi);
      return g.a * std::polar(1.0, -two_pi * dot(g.b, xi)) * f.spectrum(arg);
    };
  return out;
}

// x -> |a|^{-3/4} f(g^{-1} x) for the shearlet group.
inline Phantom transformed(const Phantom& f, const Shear& g) {
  const Shear gi = inverse(g);
  Phantom out;
  const double amp = std::pow(std::abs(g.a), -0.75);
  if (f.value) out.value = [f, gi, amp](Vec2 x) { return amp * f(act(gi, x)); };
  if (f.has_spectrum())
    out.spectrum = [f, g](Vec2 xi) {
      // |a|^{3/4} e^{-2 pi i b.xi} F f(A_a N_s^T xi)
      const Vec2 arg{g.a * xi.x, sgn(g.a) * std::sqrt(std::abs(g.a)) * (xi.y - g.s * xi.x)};
      return std::pow(std::abs(g.a), 0.75) * std::polar(1.0, -two_pi * dot(g.b, xi)) * f.spectrum(arg);
    };
  return out;
}

// Point samples when a closed form is known, otherwise samples through the spectrum.
inline Image sample(const Phantom& f, const Grid2& g) {
  if (!f.value) return sample_from_spectrum(f.spectrum, g);
  return sample_image(g, [&](Vec2 x) { return cplx(f(x), 0.0); });
}

// Smooth angular mask equal to 1 for |xi2/xi1| <= inner and 0 beyond outer.
inline double cone_mask(Vec2 xi, double inner = 0.5, double outer = 1.0) {
  if (xi.x == 0.0) return 0.0;
  const double q = std::abs(xi.y / xi.x);
  if (q <= inner) return 1.0;
  if (q >= outer) return 0.0;
  const double u = (q - inner) / (outer - inner);
  auto h = [](double s) { return s <= 0.0 ? 0.0 : std::exp(-1.0 / s); };
  return h(1.0 - u) / (h(1.0 - u) + h(u));
}

// The dog spectrum restricted to the horizontal frequency cone |xi2| <= |xi1|.
inline std::function<cplx(Vec2)> cone_dog_spectrum(double s1 = 1.25, double s2 = 2.0) {
  const Phantom d = dog_phantom(s1, s2);
  return [d](Vec2 xi) { return d.spectrum(xi) * cone_mask(xi); };
}

// Known only through its spectrum; its affine sinogram vanishes for slopes |v| >= 1.
inline Phantom cone_dog_phantom() { return {{}, cone_dog_spectrum()}; }

inline Phantom make_phantom(const std::string& kind, double radius = 1.0) {
  if (kind == "gaussian") return gaussian_phantom();
  if (kind == "dog") return dog_phantom();
  if (kind == "cone_dog") return cone_dog_phantom();
  if (kind == "blobs") return blobs_phantom();
  if (kind == "bars") return bars_phantom();
  if (kind == "disk") return disk_phantom(radius);
  throw DomainError("unknown phantom kind: " + kind);
}

}  // namespace radon
