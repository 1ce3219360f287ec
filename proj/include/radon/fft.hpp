#pragma once

#include <fftw3.h>

#include <complex>
#include <cstddef>
#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace radon {

using cplx = std::complex<double>;

namespace detail {

class PlanCache {
 public:
  static PlanCache& instance() {
    static PlanCache cache;
    return cache;
  }

  // rank-1 plan when n2 == 0, otherwise an n1 x n2 row-major plan
  fftw_plan get(std::size_t n1, std::size_t n2, int sign) {
    std::lock_guard lock(mutex_);
    auto key = std::make_tuple(n1, n2, sign);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    const std::size_t total = n2 == 0 ? n1 : n1 * n2;
    std::vector<cplx> scratch_in(total), scratch_out(total);
    auto* in = reinterpret_cast<fftw_complex*>(scratch_in.data());
    auto* out = reinterpret_cast<fftw_complex*>(scratch_out.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    fftw_plan p = n2 == 0 ? fftw_plan_dft_1d(static_cast<int>(n1), in, out, sign, flags)
                          : fftw_plan_dft_2d(static_cast<int>(n1), static_cast<int>(n2), in, out,
                                             sign, flags);
    plans_.emplace(key, p);
    return p;
  }

  ~PlanCache() {
    for (auto& kv : plans_) fftw_destroy_plan(kv.second);
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<std::size_t, std::size_t, int>, fftw_plan> plans_;
};

}  // namespace detail

// Raw unnormalized transforms; sign -1 is forward (e^{-2 pi i k j / n}).
// The cached plans are out-of-place, so aliasing calls go through a copy.
inline void fft_1d(const cplx* in, cplx* out, std::size_t n, int sign) {
  fftw_plan p = detail::PlanCache::instance().get(n, 0, sign);
  if (in == out) {
    std::vector<cplx> copy(in, in + n);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(copy.data()),
                     reinterpret_cast<fftw_complex*>(out));
    return;
  }
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

inline void fft_2d(const cplx* in, cplx* out, std::size_t rows, std::size_t cols, int sign) {
  fftw_plan p = detail::PlanCache::instance().get(rows, cols, sign);
  if (in == out) {
    std::vector<cplx> copy(in, in + rows * cols);
    fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(copy.data()),
                     reinterpret_cast<fftw_complex*>(out));
    return;
  }
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

}  // namespace radon
