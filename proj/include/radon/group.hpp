#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace radon {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 p, Vec2 q) { return {p.x + q.x, p.y + q.y}; }
inline Vec2 operator-(Vec2 p, Vec2 q) { return {p.x - q.x, p.y - q.y}; }
inline Vec2 operator-(Vec2 p) { return {-p.x, -p.y}; }
inline Vec2 operator*(double s, Vec2 p) { return {s * p.x, s * p.y}; }
inline double dot(Vec2 p, Vec2 q) { return p.x * q.x + p.y * q.y; }
inline double norm(Vec2 p) { return std::hypot(p.x, p.y); }

inline Vec2 rotate(double phi, Vec2 p) {
  const double c = std::cos(phi), s = std::sin(phi);
  return {c * p.x - s * p.y, s * p.x + c * p.y};
}

// Unit normal of the line with polar angle theta.
inline Vec2 direction(double theta) { return {std::cos(theta), std::sin(theta)}; }

inline double reduce_angle(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  if (r >= period) r = 0.0;
  return r;
}
inline double wrap_2pi(double x) { return reduce_angle(x, two_pi); }
inline double wrap_pi(double x) { return reduce_angle(x, pi); }

// ---------------------------------------------------------------- SIM(2)

struct Sim2 {
  Vec2 b;
  double phi = 0.0;
  double a = 1.0;

  static Sim2 identity() { return {}; }
  static Sim2 make(Vec2 b, double phi, double a) {
    if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("sim2 scale must be positive");
    return {b, wrap_2pi(phi), a};
  }
  static Sim2 dilation(double a) { return make({}, 0.0, a); }
};

inline Sim2 compose(const Sim2& g1, const Sim2& g2) {
  return {g1.b + g1.a * rotate(g1.phi, g2.b), wrap_2pi(g1.phi + g2.phi), g1.a * g2.a};
}

inline Sim2 inverse(const Sim2& g) {
  return {-(1.0 / g.a) * rotate(-g.phi, g.b), wrap_2pi(-g.phi), 1.0 / g.a};
}

inline double haar_weight(const Sim2& g) { return 1.0 / (g.a * g.a * g.a); }
inline double modular(const Sim2& g) { return 1.0 / (g.a * g.a); }

inline Vec2 act(const Sim2& g, Vec2 x) { return g.b + g.a * rotate(g.phi, x); }

// --------------------------------------------------------- shearlet group

struct Shear {
  Vec2 b;
  double s = 0.0;
  double a = 1.0;

  static Shear identity() { return {}; }
  static Shear make(Vec2 b, double s, double a) {
    if (a == 0.0 || !std::isfinite(a)) throw DomainError("shearlet scale must be nonzero");
    return {b, s, a};
  }
};

inline double sgn(double a) { return a < 0.0 ? -1.0 : 1.0; }

// N_s A_a x with N_s = [[1,-s],[0,1]] and A_a = diag(a, sgn(a)|a|^{1/2}).
inline Vec2 shear_dilate(double s, double a, Vec2 x) {
  const double y2 = sgn(a) * std::sqrt(std::abs(a)) * x.y;
  return {a * x.x - s * y2, y2};
}

inline Shear compose(const Shear& g1, const Shear& g2) {
  return {g1.b + shear_dilate(g1.s, g1.a, g2.b), g1.s + std::sqrt(std::abs(g1.a)) * g2.s,
          g1.a * g2.a};
}

inline Shear inverse(const Shear& g) {
  // A_a^{-1} N_s^{-1} b
  const Vec2 nb{g.b.x + g.s * g.b.y, g.b.y};
  const Vec2 ab{nb.x / g.a, nb.y / (sgn(g.a) * std::sqrt(std::abs(g.a)))};
  return {-ab, -g.s / std::sqrt(std::abs(g.a)), 1.0 / g.a};
}

inline double haar_weight(const Shear& g) { return 1.0 / std::abs(g.a * g.a * g.a); }

inline Vec2 act(const Shear& g, Vec2 x) { return g.b + shear_dilate(g.s, g.a, x); }

// ------------------------------------------------------ parameter spaces

struct LinePolar {
  double theta = 0.0;
  double t = 0.0;
};

struct LineAffine {
  double v = 0.0;
  double t = 0.0;
};

struct Circle {
  Vec2 c;
  double r = 1.0;
};

inline Vec2 affine_normal(double v) { return {1.0, v}; }

// The line {x : w(theta).x = t}; angles past pi are folded back by flipping the sign of t.
inline LinePolar normalize(double theta, double t) {
  double th = wrap_2pi(theta);
  if (th >= pi) {
    th -= pi;
    t = -t;
  }
  return {wrap_pi(th), t};
}

inline LinePolar act(const Sim2& g, LinePolar xi) {
  const double th = xi.theta + g.phi;
  return normalize(th, g.a * xi.t + dot(g.b, direction(th)));
}

inline LinePolar act_inverse(const Sim2& g, LinePolar xi) { return act(inverse(g), xi); }

inline LineAffine act(const Shear& g, LineAffine xi) {
  const double v = g.s + std::sqrt(std::abs(g.a)) * xi.v;
  return {v, g.a * xi.t + dot(affine_normal(v), g.b)};
}

inline LineAffine act_inverse(const Shear& g, LineAffine xi) {
  return {(xi.v - g.s) / std::sqrt(std::abs(g.a)), (xi.t - dot(affine_normal(xi.v), g.b)) / g.a};
}

inline Circle act(const Sim2& g, Circle xi) {
  if (!(xi.r > 0.0)) throw DomainError("circle radius must be positive");
  return {g.b + g.a * rotate(g.phi, xi.c), g.a * xi.r};
}

inline Circle act_inverse(const Sim2& g, Circle xi) { return act(inverse(g), xi); }

// ---------------------------------------------------------------- families

enum class FamilyKind { polar, affine, circular };

struct RadonFamily {
  FamilyKind kind = FamilyKind::polar;
  double alpha = 0.5;

  static RadonFamily polar() { return {FamilyKind::polar, 0.5}; }
  static RadonFamily affine() { return {FamilyKind::affine, 0.5}; }
  static RadonFamily circular(double alpha = 0.5) {
    if (!(alpha > 0.0 && alpha < 1.0))
      throw DomainError("circular family needs 0 < alpha < 1, got " + std::to_string(alpha));
    return {FamilyKind::circular, alpha};
  }
};

inline const char* family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::polar: return "polar";
    case FamilyKind::affine: return "affine";
    case FamilyKind::circular: return "circular";
  }
  return "?";
}

enum class Character { beta, gamma, chi };

inline double character(const RadonFamily& f, Character which, const Sim2& g) {
  switch (f.kind) {
    case FamilyKind::polar:
      return which == Character::chi ? 1.0 / std::sqrt(g.a) : g.a;
    case FamilyKind::circular:
      if (which == Character::beta) return std::pow(g.a, 3.0 - f.alpha);
      if (which == Character::gamma) return 1.0;
      return std::pow(g.a, 0.5 * (f.alpha - 1.0));
    case FamilyKind::affine:
      break;
  }
  throw DomainError("the affine family acts through the shearlet group");
}

inline double character(const RadonFamily& f, Character which, const Shear& g) {
  if (f.kind != FamilyKind::affine) throw DomainError("only the affine family uses the shearlet group");
  const double a = std::abs(g.a);
  switch (which) {
    case Character::beta: return a * std::sqrt(a);
    case Character::gamma: return std::sqrt(a);
    case Character::chi: return 1.0 / std::sqrt(a);
  }
  return 1.0;
}

// ------------------------------------------------------ sections, cocycles

inline Sim2 section_s(Vec2 x) { return {x, 0.0, 1.0}; }
inline Shear section_s_shear(Vec2 x) { return {x, 0.0, 1.0}; }

inline Sim2 section(LinePolar xi) { return {xi.t * direction(xi.theta), wrap_2pi(xi.theta), 1.0}; }
inline Shear section(LineAffine xi) { return {{xi.t, 0.0}, xi.v, 1.0}; }
inline Sim2 section(Circle xi) { return {xi.c - Vec2{xi.r, 0.0}, 0.0, xi.r}; }

inline LinePolar origin_line_polar() { return {0.0, 0.0}; }
inline LineAffine origin_line_affine() { return {0.0, 0.0}; }
inline Circle origin_circle() { return {{1.0, 0.0}, 1.0}; }

inline Sim2 cocycle(const Sim2& g, LinePolar xi) {
  return compose(inverse(section(xi)), compose(g, section(act_inverse(g, xi))));
}
inline Shear cocycle(const Shear& g, LineAffine xi) {
  return compose(inverse(section(xi)), compose(g, section(act_inverse(g, xi))));
}
inline Sim2 cocycle(const Sim2& g, Circle xi) {
  return compose(inverse(section(xi)), compose(g, section(act_inverse(g, xi))));
}

}  // namespace radon
