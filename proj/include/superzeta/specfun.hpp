#pragma once

// Real/complex special functions used throughout: Bernoulli and Euler data,
// the gamma family, Hurwitz zeta with its full continuation in s, Riemann
// zeta and Dirichlet beta. Everything here is a pure function of its
// arguments; the rational tables are built once and never mutated.

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "superzeta/errors.hpp"

namespace superzeta::specfun {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;
inline constexpr double kLog2Pi = 1.837877066409345483560659472811235279;

/// Exact Bernoulli (B_1 = -1/2) and Euler numbers up to max_index,
/// generated from their recurrences.
struct RationalSpecialNumbers {
  std::vector<Rational> bernoulli;
  std::vector<BigInt> euler;
  int max_index = 0;
};

inline constexpr int kMaxSpecialIndex = 64;

const RationalSpecialNumbers& special_numbers();

Rational bernoulli_number(int n);
double bernoulli_number_d(int n);
BigInt euler_number(int n);
double euler_number_d(int n);

cplx bernoulli_polynomial(int n, cplx w);

/// Binomial coefficient C(n, k) as a double (0 outside 0 <= k <= n).
double binomial(int n, int k);
/// Generalized binomial C(a, k) = a(a-1)...(a-k+1)/k! for complex a.
cplx binomial(cplx a, int k);

double factorial(int n);

// Gamma family.  log_gamma is the continuous log-gamma on Re z > 0 (and some
// branch elsewhere); poles at nonpositive integers raise PoleError.
cplx log_gamma(cplx z);
cplx reciprocal_gamma(cplx z);  // 1/Gamma(z), entire; exactly 0 at poles
cplx polygamma(int m, cplx z);
inline cplx digamma(cplx z) { return polygamma(0, z); }
double log_gamma(double x);
double digamma(double x);

/// Upper incomplete gamma Gamma(a, z) for complex a and real z > 0.
cplx upper_incomplete_gamma(cplx a, double z);

/// Hurwitz zeta zeta(s, w) = sum_k (k + w)^(-s), continued to all s != 1.
cplx hurwitz_zeta(cplx s, cplx w);
/// d^m/ds^m zeta(s, w) for m <= 2.
cplx hurwitz_zeta_ds(cplx s, cplx w, int m);
/// d^m/ds^m [(s - 1) zeta(s, w)] for m <= 2; smooth through s = 1.
cplx hurwitz_zeta_pole_removed(cplx s, cplx w, int m = 0);

/// d^m/ds^m [zeta(s, w) - 1/(s - 1)] for m <= 2; entire in s.
cplx hurwitz_zeta_regular(cplx s, cplx w, int m = 0);

struct HurwitzMarkers {
  cplx fp_at_1;       // finite part at s = 1
  cplx s_deriv_at_0;  // d/ds zeta(s, w) at s = 0
};
HurwitzMarkers hurwitz_zeta_markers(cplx w);

cplx riemann_zeta(cplx s);
cplx dirichlet_beta(cplx s);
/// d/ds beta(s) at s = 0.
double dirichlet_beta_deriv0();

}  // namespace superzeta::specfun
