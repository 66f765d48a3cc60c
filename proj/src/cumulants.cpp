#include "superzeta/cumulants.hpp"

#include <cmath>

#include "superzeta/numerics.hpp"
#include "superzeta/specfun.hpp"

namespace superzeta {

namespace {

using specfun::kPi;

// Closed g_0, g_1 of L_chi. Odd chi: L(1) = -pi d^{-3/2} sum chi(n) n and
// L'/L(1) from the Hurwitz derivative at s = 1 through log Gamma. Even chi:
// L(1) = -d^{-1/2} sum chi(n) log sin(pi n / d); no closed g_1.
std::pair<double, std::optional<double>> character_cumulants(const RealPrimitiveCharacter& chi) {
  const double d = double(chi.modulus);
  if (chi.parity == 1) {
    double acc = 0.0, lg = 0.0, lin = 0.0;
    for (long n = 1; n < chi.modulus; ++n) {
      const int c = chi.values[n];
      acc += c * double(n);
      lg += c * specfun::log_gamma(double(n) / d);
      lin += c * double(n) / d;
    }
    const double g0 = -std::log(-kPi * std::pow(d, -1.5) * acc);
    const double g1 = specfun::kEulerGamma + std::log(2.0 * kPi) + lg / lin;
    return {g0, g1};
  }
  double acc = 0.0;
  for (long n = 1; n < chi.modulus; ++n) acc += chi.values[n] * std::log(std::sin(kPi * double(n) / d));
  return {-std::log(-acc / std::sqrt(d)), std::nullopt};
}

}  // namespace

std::pair<std::optional<double>, std::optional<double>> closed_cumulant_values(const PrimaryFunction& P) {
  switch (P.kind) {
    case PrimaryKind::riemann: return {0.0, specfun::kEulerGamma};
    case PrimaryKind::dirichlet: return character_cumulants(*P.chi);
    case PrimaryKind::dedekind_quadratic: {
      const auto [g0, g1] = character_cumulants(*P.chi);
      std::optional<double> sum1;
      if (g1) sum1 = *g1 + specfun::kEulerGamma;
      return {g0, sum1};
    }
  }
  return {std::nullopt, std::nullopt};
}

CumulantSequence cumulants_closed(const PrimaryFunction& P) {
  CumulantSequence out;
  out.primary_id = P.id;
  for (const auto& v : {P.g0_closed, P.g1_closed}) {
    out.g.push_back(v.value_or(std::nan("")));
    out.provenance.push_back(v ? Provenance::closed_form : Provenance::unavailable);
  }
  return out;
}

CumulantSequence cumulants_numeric(const PrimaryFunction& P, int N, double radius) {
  if (N < 0 || N > kMaxCumulantOrder)
    throw DomainError("cumulants_numeric: order N=" + std::to_string(N) + " outside 0.." +
                      std::to_string(kMaxCumulantOrder));
  if (!(radius > 0.0)) throw DomainError("cumulants_numeric: radius must be positive");
  double nearest = P.zero_free_height;
  for (const auto& z : P.trivial_zeros(2)) nearest = std::min(nearest, std::fabs(1.0 - z.first));
  if (!(radius < nearest))
    throw NumericError("cumulants_numeric: circle of radius " + std::to_string(radius) +
                       " about x=1 reaches a zero of " + P.id);
  const auto c = log_l_taylor(P, 1.0, N + 1, radius);
  CumulantSequence out;
  out.primary_id = P.id;
  for (int n = 0; n <= N; ++n) {
    const cplx v = specfun::factorial(n) * c[n] * ((n % 2 == 1) ? 1.0 : -1.0);
    if (std::fabs(v.imag()) > 1e-9 * std::max(1.0, specfun::factorial(n)))
      throw NumericError("cumulants_numeric: imaginary residue " + format_complex(v) + " at n=" +
                         std::to_string(n) + " for " + P.id);
    out.g.push_back(v.real());
    out.provenance.push_back(Provenance::numeric);
  }
  return out;
}

}  // namespace superzeta
