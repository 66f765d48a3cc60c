#pragma once

// Zeta functions over the nontrivial zeros rho = 1/2 +- i tau_k of L:
//   Z1(s, x)     = sum_rho (x - rho)^{-s}
//   Z2(sigma, v) = sum_k (tau_k^2 + v)^{-sigma}
//   Z3(sigma, y) = sum_k (tau_k + y)^{-2 sigma}
// evaluated by truncated sums with a tail model, by the Mellin-type integral
// representation of Z1, by expansions about v = 0 / y = 0, and by closed
// special values. Shadow zeta over the trivial zeros is written Zs below.

#include <optional>
#include <string>
#include <vector>

#include "superzeta/primary.hpp"
#include "superzeta/zeros.hpp"

namespace superzeta {

enum class Method { direct_sum, integral_rep, closed_form, expansion, relation };
std::string method_name(Method m);
std::optional<Method> parse_method(const std::string& name);

struct EvalResult {
  cplx value;
  Method method = Method::closed_form;
  double err_est = 0.0;
  int zeros_used = 0;
};

struct PolarDatum {
  cplx location;
  int order = 1;
  cplx leading_coeff;  // coefficient of eps^{-order}
  cplx residue;        // coefficient of eps^{-1}
  std::optional<cplx> finite_part;
};

enum class Z1Marker { minus_n, zero, deriv0, fp1, plus_n };
enum class Z2Marker { minus_m, zero, deriv0, plus_m };

// ---- first family ----------------------------------------------------------

/// Paired partial sum over the cache plus the tail model. Needs Re s > 1,
/// or s = 1 with the pairwise convention.
EvalResult z1_direct(const PrimaryFunction& P, const ZeroCache& cache, cplx s, cplx x);

/// -Zs(s, x) + q (x-1)^{-s} + sin(pi s)/pi J(s, x) for Re s < 1 (x off
/// (-inf, 1] when q = 1), or the regularized real form for real x > 0 and
/// 0 < Re s < 1.
/// `split` is the quadrature/series split point Y (negative picks the default).
EvalResult z1_integral(const PrimaryFunction& P, cplx s, cplx x, double split = -1.0);
/// True when z1_integral accepts (s, x) without the pole guard.
bool z1_integral_available(const PrimaryFunction& P, cplx s, cplx x);

/// d/ds Z1 at s = 0 from the integral representation.
EvalResult z1_integral_deriv0(const PrimaryFunction& P, cplx x);
/// Finite part at s = 1 by polynomial extrapolation of the integral route
/// from the left.
EvalResult z1_fp1_extrapolated(const PrimaryFunction& P, cplx x);
/// Residue at s = 1 by extrapolating (s-1) Z1(s, x) from the left.
EvalResult z1_residue_extrapolated(const PrimaryFunction& P, cplx x);

/// J(s, x) = int_0^inf (L'/L)(x+y) y^{-s} dy, continued to Re s < 1 + order
/// by `order` integrations by parts. `regularized` adds q/(x+y-1) to L'/L.
EvalResult jay_integral(const PrimaryFunction& P, cplx s, cplx x, int order = 0, bool regularized = false,
                        double split = -1.0);

/// Closed special values: minus_n gives Z1(-n, x), plus_n gives Z1(n, x).
EvalResult z1_closed(const PrimaryFunction& P, Z1Marker marker, cplx x, int n = 0);

/// Automatic route: direct sum (Re s > 1 or s = 1), else the integral, else
/// closed values at integers.
EvalResult z1_eval(const PrimaryFunction& P, const ZeroCache* cache, cplx s, cplx x);

/// (log Xi)^(n)(x), n >= 0: analytic for n <= 2, Cauchy circle otherwise.
cplx log_xi_deriv(const PrimaryFunction& P, cplx x, int n);
/// Z1(n, x) for n = 1..N from one Cauchy circle about x.
std::vector<cplx> z1_positive_integers(const PrimaryFunction& P, cplx x, int N);

// ---- second family ---------------------------------------------------------

EvalResult z2_direct(const PrimaryFunction& P, const ZeroCache& cache, cplx sigma, cplx v);
/// Route selection: direct for Re sigma > 1/2, the (2 cos pi sigma)^{-1}
/// Z1(2 sigma, 1/2) relation at v = 0, the expansion about v = 0 otherwise.
EvalResult z2_eval(const PrimaryFunction& P, const ZeroCache& cache, cplx sigma, cplx v,
                   std::optional<Method> method = std::nullopt);
EvalResult z2_closed(const PrimaryFunction& P, Z2Marker marker, cplx v, int m = 0);
/// Z2(-m, v) as the terminating binomial sum over Z2(-m+l, 0).
EvalResult z2_terminating(const PrimaryFunction& P, int m, cplx v);

/// Residue R_m of Z2(sigma, 0) at sigma = 1/2 - m (m >= 1); R_0 = b1/(2 pi).
cplx z2_residue_at_zero(const PrimaryFunction& P, int m);
PolarDatum z2_polar(const PrimaryFunction& P, int m, cplx v);

// ---- third family ----------------------------------------------------------

EvalResult z3_direct(const PrimaryFunction& P, const ZeroCache& cache, cplx sigma, cplx y);
EvalResult z3_eval(const PrimaryFunction& P, const ZeroCache& cache, cplx sigma, cplx y,
                   std::optional<Method> method = std::nullopt);
PolarDatum z3_polar(const PrimaryFunction& P, int n, cplx y);

/// Polynomial extrapolation to h = 0 from samples f(h_i); err from the last
/// correction.
std::pair<cplx, double> extrapolate_to_zero(const std::vector<double>& h, const std::vector<cplx>& f);

}  // namespace superzeta
