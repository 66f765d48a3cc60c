#pragma once

// Power-sum kernels: the data-parallel inner loops shared by the Hurwitz
// Euler-Maclaurin head and the sums over zeros. A scalar reference and an
// AVX2 variant are built; the active one is chosen at runtime.

#include <span>
#include <string_view>

#include "superzeta/errors.hpp"

namespace superzeta::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);

/// Currently selected kernel set. Defaults to the best available one; the
/// environment variable SUPERZETA_KERNEL=scalar forces the reference path.
Isa active_isa();
void set_active_isa(Isa isa);

/// sum_k (-log b_k)^m * b_k^(-s) for real positive bases b_k.
cplx power_sum_real(std::span<const double> bases, cplx s, int log_order = 0);

/// sum_k w_k * (-log b_k)^m * b_k^(-s); weights and bases have equal length.
cplx weighted_power_sum(std::span<const double> bases, std::span<const double> weights, cplx s,
                        int log_order = 0);

/// sum_k b_k^(-s) for complex bases b_k = re_k + i im_k (principal branch).
cplx power_sum_complex(std::span<const double> re, std::span<const double> im, cplx s);

namespace scalar {
cplx power_sum_real(std::span<const double> bases, cplx s, int log_order);
cplx weighted_power_sum(std::span<const double> bases, std::span<const double> weights, cplx s,
                        int log_order);
cplx power_sum_complex(std::span<const double> re, std::span<const double> im, cplx s);
}  // namespace scalar

namespace avx2 {
cplx power_sum_real(std::span<const double> bases, cplx s, int log_order);
cplx weighted_power_sum(std::span<const double> bases, std::span<const double> weights, cplx s,
                        int log_order);
cplx power_sum_complex(std::span<const double> re, std::span<const double> im, cplx s);
}  // namespace avx2

}  // namespace superzeta::kernels
