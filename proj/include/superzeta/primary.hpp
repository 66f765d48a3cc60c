#pragma once

// Primary functions L(x): Riemann zeta, Dirichlet L of a real primitive
// character, and the Dedekind zeta of a quadratic field. Each carries its
// trivial factor G(x), the Stirling data of -log G, and evaluators for L,
// the completed function Xi(x) = (x-1)^q L(x) / G(x), log-derivatives and
// the shadow zeta function built over the trivial zeros.
//
// The trivial factor of every shipped instance has the shape
//   -log G(x) = -kappa x + p log x + sum_i m_i log Gamma(x / lambda_i + h_i).

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "superzeta/characters.hpp"
#include "superzeta/errors.hpp"

namespace superzeta {

enum class PrimaryKind { riemann, dirichlet, dedekind_quadratic };

struct GammaTerm {
  double multiplicity;  // m
  double scale;         // lambda
  double shift;         // h
};

struct DirichletGammaData {
  long d;
  int a;
};

struct DedekindGammaData {
  int r1;
  int r2;
  int n_K;
  long d_K;
};

/// -log G(x) ~ a1 x (log x - 1) + b1 x + a0 log x + b0 + sum_n a_{-n} x^{-n}.
struct StirlingData {
  double a1;
  double a0;
  double b1;
  double b0;
};

/// Coefficients of -L'/L(x) = sum_n c_n n^{-x}, stored for the nonzero c_n
/// with 2 <= n <= n_max.
struct VonMangoldtSeries {
  int n_max = 0;
  std::vector<double> bases;
  std::vector<double> coefficients;
  std::vector<double> coefficients_over_log;  // c_n / log n, for log L itself
};

struct PrimaryFunction {
  std::string id;
  PrimaryKind kind = PrimaryKind::riemann;
  int q = 1;
  std::optional<RealPrimitiveCharacter> chi;
  std::variant<DirichletGammaData, DedekindGammaData> gamma_data;
  StirlingData stirling{};
  double sigma0 = 1.0;
  std::optional<double> g0_closed;
  std::optional<double> g1_closed;

  double kappa = 0.0;
  int log_power = 0;  // p
  std::vector<GammaTerm> gamma_terms;
  std::shared_ptr<const VonMangoldtSeries> von_mangoldt;
  /// Height below which a sign-change scan of Xi on the critical line found
  /// no zero; bounds the Cauchy-circle radii away from nontrivial zeros.
  double zero_free_height = 0.0;

  /// Stirling coefficient a_{-k} of -log G, k >= 1.
  double a_minus(int k) const;
  /// Trivial zeros of L: points x_k with their multiplicities.
  std::vector<std::pair<double, int>> trivial_zeros(int count) const;
};

PrimaryFunction build_riemann();
PrimaryFunction build_dirichlet(long D);
PrimaryFunction build_dedekind_quadratic(long D);
/// Parses `riemann`, `dirichlet:<D>` or `dedekind:<D>`.
PrimaryFunction build_primary(const std::string& spec);

std::shared_ptr<const VonMangoldtSeries> von_mangoldt_series(PrimaryKind kind, const RealPrimitiveCharacter* chi,
                                                             int n_max = 100000);

/// L(x).
cplx l_value(const PrimaryFunction& P, cplx x);
/// d^m/dx^m [(x-1)^q L(x)] for m <= 2; continuous through x = 1.
cplx l_regularized(const PrimaryFunction& P, cplx x, int m = 0);
/// (log G)^(n)(x); n = 0 gives log G(x) on the branch continuous for Re x > 0.
cplx log_trivial_factor(const PrimaryFunction& P, cplx x, int n = 0);
/// F(x) = -log G(x) + q log(x-1), so that Xi = e^F L.
cplx smooth_log_factor(const PrimaryFunction& P, cplx x);

cplx xi_value(const PrimaryFunction& P, cplx x);
/// log Xi(x) on some branch (callers unwrap as needed).
cplx log_xi(const PrimaryFunction& P, cplx x);
/// Real function of t with the sign of Xi(1/2 + it); free of the
/// exponential decay of G^{-1} so it stays representable at large t.
double hardy(const PrimaryFunction& P, double t);

enum class DerivativeMethod { automatic, series, cauchy, analytic };

/// n-th x-derivative of log L (equivalently of log|L| on the real axis).
cplx log_l_derivative(const PrimaryFunction& P, cplx x, int n,
                      DerivativeMethod method = DerivativeMethod::automatic);
/// Tail bound of the truncated Dirichlet series route at (x, n); infinite
/// when the series does not converge.
double log_l_series_tail_bound(const PrimaryFunction& P, cplx x, int n);

/// Taylor coefficients of log[(x-1)^q L(x)] about center.
std::vector<cplx> log_l_taylor(const PrimaryFunction& P, cplx center, int count, double radius = 0.0);
/// Taylor coefficients of log Xi about center (radius 0 picks a default).
std::vector<cplx> log_xi_taylor(const PrimaryFunction& P, cplx center, int count, double radius = 0.0);
/// n-th derivative of log Xi at x.
cplx log_xi_derivative(const PrimaryFunction& P, cplx x, int n);

/// Shadow zeta Z(s, x) = sum over trivial zeros (x - x_k)^{-s}, in closed
/// Hurwitz form.
cplx shadow_zeta(const PrimaryFunction& P, cplx s, cplx x);
/// d^m/ds^m Z(s, x), m <= 2.
cplx shadow_zeta_ds(const PrimaryFunction& P, cplx s, cplx x, int m);
/// d^m/ds^m [(s-1) Z(s, x)], m <= 2; smooth through s = 1.
cplx shadow_zeta_pole_removed(const PrimaryFunction& P, cplx s, cplx x, int m = 0);
/// Z(-n, x) from the trace-identity polynomial in the Stirling data.
cplx shadow_trace_value(const PrimaryFunction& P, int n, cplx x);

struct ShadowMarkers {
  std::vector<cplx> at_minus_n;  // Z(-n, x), n = 0..N
  cplx fp_at_1;
  cplx s_deriv_at_0;
};
ShadowMarkers shadow_markers(const PrimaryFunction& P, cplx x, int N = 8);

/// Hook for the normalized-asymptotics assumption: max |log L(x)| over a
/// few large real x. Small values are consistent with L(x) -> 1; this is a
/// sanity probe, not a certificate.
double asymptotic_normalization_residual(const PrimaryFunction& P);

}  // namespace superzeta
