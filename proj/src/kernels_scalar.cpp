#include <cmath>

#include "superzeta/kernels.hpp"

namespace superzeta::kernels::scalar {

cplx power_sum_real(std::span<const double> bases, cplx s, int log_order) {
  const double sigma = s.real();
  const double t = s.imag();
  double acc_re = 0.0;
  double acc_im = 0.0;
  for (double b : bases) {
    const double l = std::log(b);
    double mag = std::exp(-sigma * l);
    for (int j = 0; j < log_order; ++j) mag *= -l;
    acc_re += mag * std::cos(t * l);
    acc_im -= mag * std::sin(t * l);
  }
  return {acc_re, acc_im};
}

cplx weighted_power_sum(std::span<const double> bases, std::span<const double> weights, cplx s,
                        int log_order) {
  const double sigma = s.real();
  const double t = s.imag();
  double acc_re = 0.0;
  double acc_im = 0.0;
  for (std::size_t k = 0; k < bases.size(); ++k) {
    const double l = std::log(bases[k]);
    double mag = weights[k] * std::exp(-sigma * l);
    for (int j = 0; j < log_order; ++j) mag *= -l;
    acc_re += mag * std::cos(t * l);
    acc_im -= mag * std::sin(t * l);
  }
  return {acc_re, acc_im};
}

cplx power_sum_complex(std::span<const double> re, std::span<const double> im, cplx s) {
  const double sigma = s.real();
  const double t = s.imag();
  double acc_re = 0.0;
  double acc_im = 0.0;
  for (std::size_t k = 0; k < re.size(); ++k) {
    const double l = 0.5 * std::log(re[k] * re[k] + im[k] * im[k]);
    const double th = std::atan2(im[k], re[k]);
    const double mag = std::exp(-sigma * l + t * th);
    const double ph = t * l + sigma * th;
    acc_re += mag * std::cos(ph);
    acc_im -= mag * std::sin(ph);
  }
  return {acc_re, acc_im};
}

}  // namespace superzeta::kernels::scalar
