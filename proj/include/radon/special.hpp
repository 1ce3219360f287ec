#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "group.hpp"

namespace radon {

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

namespace detail {

inline long double j0_series(long double x) {
  const long double q = -0.25L * x * x;
  long double term = 1.0L, sum = 1.0L;
  for (int k = 1; k < 200; ++k) {
    term *= q / (static_cast<long double>(k) * k);
    sum += term;
    if (std::fabs(term) < 1e-19L * std::fabs(sum) && std::fabs(term) < 1e-21L) break;
  }
  return sum;
}

// Hankel expansion, J0(x) = sqrt(2/(pi x)) (P cos chi - Q sin chi), chi = x - pi/4.
inline double j0_asymptotic(double x) {
  // a_k = prod_{j=1..k} (2j-1)^2 / (k! 8^k)
  double p = 1.0, q = 0.0, a = 1.0, xp = 1.0;
  for (int k = 1; k <= 12; ++k) {
    a *= (2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * k);
    xp *= x;
    const double term = a / xp;
    switch (k % 4) {
      case 1: q -= term; break;
      case 2: p -= term; break;
      case 3: q += term; break;
      case 0: p += term; break;
    }
  }
  const double chi = x - 0.25 * pi;
  return std::sqrt(2.0 / (pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace detail

inline constexpr double bessel_switch = 20.0;

inline double bessel_j0(double x) {
  x = std::abs(x);
  if (x < bessel_switch) return static_cast<double>(detail::j0_series(x));
  return detail::j0_asymptotic(x);
}

namespace detail {

struct SimpsonState {
  const std::function<double(double)>& f;
  int max_depth;
  long evaluations = 0;
};

inline double checked(SimpsonState& st, double x) {
  const double v = st.f(x);
  ++st.evaluations;
  if (!std::isfinite(v)) throw QuadratureError("integrand not finite at x = " + std::to_string(x));
  return v;
}

inline QuadratureResult simpson_rec(SimpsonState& st, double a, double b, double fa, double fm,
                                    double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = checked(st, lm), frm = checked(st, rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double diff = left + right - whole;
  if (std::abs(diff) <= 15.0 * tol) return {left + right + diff / 15.0, std::abs(diff) / 15.0};
  if (depth >= st.max_depth)
    throw QuadratureError("adaptive quadrature did not converge on [" + std::to_string(a) + ", " +
                          std::to_string(b) + "]");
  const auto l = simpson_rec(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1);
  const auto r = simpson_rec(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  return {l.value + r.value, l.error_estimate + r.error_estimate};
}

}  // namespace detail

// Adaptive Simpson quadrature; throws QuadratureError on non-finite values or when
// the subdivision depth is exhausted.
inline QuadratureResult adaptive_quad(const std::function<double(double)>& f, double a, double b,
                                      double tol, int max_depth = 48) {
  if (!(a < b)) throw DomainError("adaptive_quad needs a < b");
  if (!(tol > 0.0)) throw DomainError("adaptive_quad needs a positive tolerance");
  detail::SimpsonState st{f, max_depth};
  const double fa = detail::checked(st, a), fb = detail::checked(st, b);
  const double m = 0.5 * (a + b);
  const double fm = detail::checked(st, m);
  // start from two halves so a symmetric integrand cannot pass the first test by accident
  const double fl = detail::checked(st, 0.5 * (a + m)), fr = detail::checked(st, 0.5 * (m + b));
  const double left = (m - a) / 6.0 * (fa + 4.0 * fl + fm), right = (b - m) / 6.0 * (fm + 4.0 * fr + fb);
  const auto l = detail::simpson_rec(st, a, m, fa, fl, fm, left, 0.5 * tol, 1);
  const auto r = detail::simpson_rec(st, m, b, fm, fr, fb, right, 0.5 * tol, 1);
  return {l.value + r.value, l.error_estimate + r.error_estimate};
}

// ----------------------------------------------------------------- c_alpha
//
// c_alpha = (2 pi)^{alpha+1} int_0^inf J0(r)^2 r^{-alpha} dr. The finite part uses the
// substitution u = r^{1-alpha}, which removes the endpoint singularity; beyond R the
// non-oscillatory part of J0^2 ~ (1 + sin 2r)/(pi r) is added in closed form.

enum class CalphaScheme { adaptive_simpson, midpoint };

inline void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw DomainError("alpha must lie in (0, 1); the circular transform is not square-integrable otherwise");
}

inline double bessel_square_head(double alpha, double R, CalphaScheme scheme) {
  const double e = 1.0 - alpha;
  auto g = [&](double u) {
    const double j = bessel_j0(std::pow(u, 1.0 / e));
    return j * j / e;
  };
  const double umax = std::pow(R, e);
  if (scheme == CalphaScheme::midpoint) {
    const std::size_t n = 1000000;
    const double h = umax / static_cast<double>(n);
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) s += g((static_cast<double>(k) + 0.5) * h);
    return s * h;
  }
  // one panel per half period of J0^2 in r keeps the adaptive recursion shallow
  double s = 0.0;
  const std::size_t panels = static_cast<std::size_t>(std::ceil(R / (0.5 * pi)));
  for (std::size_t k = 0; k < panels; ++k) {
    const double r0 = R * static_cast<double>(k) / static_cast<double>(panels);
    const double r1 = R * static_cast<double>(k + 1) / static_cast<double>(panels);
    s += adaptive_quad(g, std::pow(r0, e), std::pow(r1, e), 1e-9 / static_cast<double>(panels)).value;
  }
  return s;
}

inline double bessel_square_tail(double alpha, double R) { return 1.0 / (pi * alpha * std::pow(R, alpha)); }

// Smallest power-of-two R whose neglected oscillatory tail is below 1e-6 of the total.
inline double calpha_cutoff(double alpha) {
  check_alpha(alpha);
  const double rough = 1.0;  // the integral exceeds 1 for every alpha in (0,1)
  double R = 64.0;
  while (1.0 / (two_pi * std::pow(R, 1.0 + alpha)) > 1e-6 * rough) R *= 2.0;
  return R;
}

inline double c_alpha(double alpha, CalphaScheme scheme = CalphaScheme::adaptive_simpson, double R = 0.0) {
  check_alpha(alpha);
  if (R <= 0.0) R = calpha_cutoff(alpha);
  const double integral = bessel_square_head(alpha, R, scheme) + bessel_square_tail(alpha, R);
  return std::pow(two_pi, alpha + 1.0) * integral;
}

inline double k_alpha(double alpha, CalphaScheme scheme = CalphaScheme::adaptive_simpson) {
  return 1.0 / std::sqrt(c_alpha(alpha, scheme));
}

// Tabulated G(u) = int_u^inf J0(x)^2 x^{-alpha} dx, used to close radial integrals
// of circular sinograms beyond the last sampled radius.
class BesselSquareTail {
 public:
  explicit BesselSquareTail(double alpha, double umax = 400.0, double du = 0.01) : alpha_(alpha), du_(du) {
    check_alpha(alpha);
    total_ = c_alpha(alpha) / std::pow(two_pi, alpha + 1.0);
    const std::size_t n = static_cast<std::size_t>(std::ceil(umax / du));
    head_.assign(n + 1, 0.0);
    const double e = 1.0 - alpha;
    auto g = [&](double u) {
      const double j = bessel_j0(std::pow(u, 1.0 / e));
      return j * j / e;
    };
    for (std::size_t k = 0; k < n; ++k) {
      const double a = std::pow(du * static_cast<double>(k), e), b = std::pow(du * static_cast<double>(k + 1), e);
      head_[k + 1] = head_[k] + adaptive_quad(g, a, b, 1e-12).value;
    }
    umax_ = du * static_cast<double>(n);
  }

  double alpha() const { return alpha_; }
  double total() const { return total_; }

  double operator()(double u) const {
    if (u <= 0.0) return total_;
    if (u >= umax_) {
      // leading terms of (1 + sin 2x)/(pi x) integrated from u
      return (1.0 / (pi * alpha_ * std::pow(u, alpha_))) +
             std::cos(2.0 * u) / (two_pi * std::pow(u, 1.0 + alpha_));
    }
    const double s = u / du_;
    const std::size_t k = static_cast<std::size_t>(s);
    // integrate J0^2 x^{-alpha} across the partial cell with a short Simpson rule
    const double x0 = du_ * static_cast<double>(k);
    double part = 0.0;
    if (u > x0) {
      auto f = [&](double x) {
        const double j = bessel_j0(x);
        return x > 0.0 ? j * j * std::pow(x, -alpha_) : 0.0;
      };
      if (k == 0) {
        const double e = 1.0 - alpha_;
        auto g = [&](double w) {
          const double j = bessel_j0(std::pow(w, 1.0 / e));
          return j * j / e;
        };
        part = adaptive_quad(g, 0.0, std::pow(u, e), 1e-13).value;
      } else {
        const double m = 0.5 * (x0 + u);
        part = (u - x0) / 6.0 * (f(x0) + 4.0 * f(m) + f(u));
      }
    }
    return total_ - head_[k] - part;
  }

 private:
  double alpha_;
  double du_;
  double umax_ = 0.0;
  double total_ = 0.0;
  std::vector<double> head_;
};

}  // namespace radon
