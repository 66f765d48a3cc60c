// Compiled with -mavx2 -mfma on x86-64; only called when the CPU reports
// AVX2 support.

#include <cmath>
#include <experimental/simd>

#include "superzeta/kernels.hpp"

namespace superzeta::kernels::avx2 {

namespace stdx = std::experimental;
using vd = stdx::fixed_size_simd<double, 4>;
constexpr std::size_t kLanes = vd::size();

cplx power_sum_real(std::span<const double> bases, cplx s, int log_order) {
  const double sigma = s.real();
  const double t = s.imag();
  vd acc_re = 0.0;
  vd acc_im = 0.0;
  const std::size_t n = bases.size();
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    vd b(bases.data() + k, stdx::element_aligned);
    vd l = stdx::log(b);
    vd mag = stdx::exp(-sigma * l);
    for (int j = 0; j < log_order; ++j) mag *= -l;
    acc_re += mag * stdx::cos(t * l);
    acc_im -= mag * stdx::sin(t * l);
  }
  cplx total(stdx::reduce(acc_re), stdx::reduce(acc_im));
  if (k < n) total += scalar::power_sum_real(bases.subspan(k), s, log_order);
  return total;
}

cplx weighted_power_sum(std::span<const double> bases, std::span<const double> weights, cplx s,
                        int log_order) {
  const double sigma = s.real();
  const double t = s.imag();
  vd acc_re = 0.0;
  vd acc_im = 0.0;
  const std::size_t n = bases.size();
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    vd b(bases.data() + k, stdx::element_aligned);
    vd w(weights.data() + k, stdx::element_aligned);
    vd l = stdx::log(b);
    vd mag = w * stdx::exp(-sigma * l);
    for (int j = 0; j < log_order; ++j) mag *= -l;
    acc_re += mag * stdx::cos(t * l);
    acc_im -= mag * stdx::sin(t * l);
  }
  cplx total(stdx::reduce(acc_re), stdx::reduce(acc_im));
  if (k < n) total += scalar::weighted_power_sum(bases.subspan(k), weights.subspan(k), s, log_order);
  return total;
}

cplx power_sum_complex(std::span<const double> re, std::span<const double> im, cplx s) {
  const double sigma = s.real();
  const double t = s.imag();
  vd acc_re = 0.0;
  vd acc_im = 0.0;
  const std::size_t n = re.size();
  std::size_t k = 0;
  for (; k + kLanes <= n; k += kLanes) {
    vd x(re.data() + k, stdx::element_aligned);
    vd y(im.data() + k, stdx::element_aligned);
    vd l = 0.5 * stdx::log(x * x + y * y);
    vd th = stdx::atan2(y, x);
    vd mag = stdx::exp(-sigma * l + t * th);
    vd ph = t * l + sigma * th;
    acc_re += mag * stdx::cos(ph);
    acc_im -= mag * stdx::sin(ph);
  }
  cplx total(stdx::reduce(acc_re), stdx::reduce(acc_im));
  if (k < n) total += scalar::power_sum_complex(re.subspan(k), im.subspan(k), s);
  return total;
}

}  // namespace superzeta::kernels::avx2
