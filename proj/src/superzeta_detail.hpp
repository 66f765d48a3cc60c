#pragma once

#include <functional>
#include <numbers>

#include "superzeta/superzeta.hpp"

namespace superzeta::detail {

inline constexpr double kPi = std::numbers::pi;

/// b^{-s} on the principal branch.
inline cplx neg_pow(cplx b, cplx s) { return std::exp(-s * std::log(b)); }

bool is_integer(cplx s, long* n = nullptr);

/// cos(pi z / 2), exact at integers.
cplx cos_half_pi(cplx z);

struct TailSum {
  cplx value;
  double bound;
};

/// sum_j C(-a, j) w^j extra(j) * sum_{tau > T} tau^{-(s0 + step j)}: the tail of
/// sum_{tau > T} (tau^step + w)^{-a} style sums after binomial expansion.
TailSum binomial_tail(const PrimaryFunction& P, cplx a, cplx w, cplx s0, int step, double T,
                      const std::function<cplx(int)>& extra);

/// Zeros of the cache must belong to P.
void require_cache(const PrimaryFunction& P, const ZeroCache& cache, const char* op);

}  // namespace superzeta::detail
