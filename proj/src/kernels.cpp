#include "superzeta/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace superzeta::kernels {

#ifndef SUPERZETA_HAVE_AVX2_TU
namespace avx2 {
cplx power_sum_real(std::span<const double> bases, cplx s, int log_order) {
  return scalar::power_sum_real(bases, s, log_order);
}
cplx weighted_power_sum(std::span<const double> bases, std::span<const double> weights, cplx s,
                        int log_order) {
  return scalar::weighted_power_sum(bases, weights, s, log_order);
}
cplx power_sum_complex(std::span<const double> re, std::span<const double> im, cplx s) {
  return scalar::power_sum_complex(re, im, s);
}
}  // namespace avx2
#endif

namespace {

Isa detect() {
  if (const char* env = std::getenv("SUPERZETA_KERNEL")) {
    if (std::string(env) == "scalar") return Isa::scalar;
  }
  return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
  if (isa == Isa::scalar) return true;
#if defined(SUPERZETA_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(__i386__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa active_isa() { return selected().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_available(isa))
    throw DomainError("set_active_isa: " + std::string(isa_name(isa)) + " not available on this CPU");
  selected().store(isa, std::memory_order_relaxed);
}

cplx power_sum_real(std::span<const double> bases, cplx s, int log_order) {
  return active_isa() == Isa::avx2 ? avx2::power_sum_real(bases, s, log_order)
                                   : scalar::power_sum_real(bases, s, log_order);
}

cplx weighted_power_sum(std::span<const double> bases, std::span<const double> weights, cplx s,
                        int log_order) {
  if (bases.size() != weights.size()) throw DomainError("weighted_power_sum: size mismatch");
  return active_isa() == Isa::avx2 ? avx2::weighted_power_sum(bases, weights, s, log_order)
                                   : scalar::weighted_power_sum(bases, weights, s, log_order);
}

cplx power_sum_complex(std::span<const double> re, std::span<const double> im, cplx s) {
  return active_isa() == Isa::avx2 ? avx2::power_sum_complex(re, im, s)
                                   : scalar::power_sum_complex(re, im, s);
}

}  // namespace superzeta::kernels
