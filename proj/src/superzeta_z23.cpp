#include <algorithm>
#include <cmath>

#include "superzeta/specfun.hpp"
#include "superzeta_detail.hpp"

namespace superzeta {

using detail::kPi;
using detail::neg_pow;

namespace {

bool on_negative_axis(cplx z) { return z.imag() == 0.0 && z.real() <= 0.0; }

double first_ordinate(const PrimaryFunction& P, const ZeroCache& cache, const char* op) {
  detail::require_cache(P, cache, op);
  return 0.5 * (cache.enclosures.front().first + cache.enclosures.front().second);
}

// Running sum of a convergent power series sum_l coef(l) F(l); stops once the
// geometric remainder implied by `ratio` falls below roundoff.
template <class Coef, class Term>
EvalResult power_series(Coef coef, Term term, double ratio, double growth, const char* op) {
  EvalResult r;
  r.method = Method::expansion;
  cplx sum = 0.0;
  double err = 0.0;
  for (int l = 0; l <= 600; ++l) {
    const cplx c = coef(l);
    if (c == 0.0) {  // terminating series
      r.value = require_finite(sum, op);
      r.err_est = err + 1e-15 * std::abs(sum);
      return r;
    }
    const EvalResult f = term(l);
    const cplx t = c * f.value;
    sum += t;
    err += std::abs(c) * f.err_est;
    const double rl = ratio * (1.0 + growth / (l + 1.0));
    if (l >= 2 && rl < 1.0) {
      const double rem = std::abs(t) * rl / (1.0 - rl);
      if (rem <= 1e-16 * std::max(1.0, std::abs(sum))) {
        r.value = require_finite(sum, op);
        r.err_est = err + rem + 1e-15 * std::abs(sum);
        return r;
      }
    }
  }
  throw NumericError(std::string(op) + ": expansion did not converge");
}

}  // namespace

// ---- second family ---------------------------------------------------------

EvalResult z2_direct(const PrimaryFunction& P, const ZeroCache& cache, cplx sigma, cplx v) {
  if (!(sigma.real() > 0.5))
    throw DomainError("z2_direct: requires Re sigma > 1/2 (sigma=" + format_complex(sigma) + ")");
  detail::require_cache(P, cache, "z2_direct");
  cplx sum = 0.0;
  double width_err = 0.0;
  for (auto it = cache.enclosures.rbegin(); it != cache.enclosures.rend(); ++it) {
    const double tau = 0.5 * (it->first + it->second);
    const cplx b = tau * tau + v;
    if (on_negative_axis(b)) throw DomainError("z2_direct: tau^2 + v on the negative axis (v=" + format_complex(v) + ")");
    const cplx t = neg_pow(b, sigma);
    sum += t;
    width_err += std::abs(sigma) * std::abs(t) / std::abs(b) * 2.0 * tau * 0.5 * (it->second - it->first);
  }
  const auto tail = detail::binomial_tail(P, sigma, v, 2.0 * sigma, 2, cache.T_max, [](int) { return cplx(1.0); });
  EvalResult r;
  r.value = require_finite(sum + tail.value, "z2_direct");
  r.method = Method::direct_sum;
  r.err_est = tail.bound + width_err + 1e-15 * cache.size() * std::max(1.0, std::abs(sum));
  r.zeros_used = static_cast<int>(cache.size());
  return r;
}

namespace {

EvalResult z2_relation(const PrimaryFunction& P, const ZeroCache& cache, cplx sigma) {
  const cplx c = 2.0 * std::cos(kPi * sigma);
  long k = 0;
  if (detail::is_integer(sigma - 0.5, &k)) {
    if (k <= 0) throw PoleError("z2: pole at sigma=" + format_complex(sigma));
    throw DomainError("z2 relation: degenerate at half-integer sigma=" + format_complex(sigma));
  }
  const auto z1 = z1_eval(P, &cache, 2.0 * sigma, 0.5);
  EvalResult r;
  r.value = require_finite(z1.value / c, "z2 relation");
  r.method = Method::relation;
  r.err_est = z1.err_est / std::abs(c) + 1e-15 * std::abs(r.value);
  r.zeros_used = z1.zeros_used;
  return r;
}

// Z2(sigma, 0) by the best route.
EvalResult z2_at_origin(const PrimaryFunction& P, const ZeroCache& cache, cplx sigma) {
  if (sigma.real() > 0.5) return z2_direct(P, cache, sigma, 0.0);
  return z2_relation(P, cache, sigma);
}

}  // namespace

EvalResult z2_eval(const PrimaryFunction& P, const ZeroCache& cache, cplx sigma, cplx v, std::optional<Method> method) {
  Method m;
  if (method) {
    m = *method;
  } else if (sigma.real() > 0.5 && cache.size() > 0) {
    m = Method::direct_sum;
  } else if (v == 0.0) {
    m = Method::relation;
  } else {
    m = Method::expansion;
  }
  switch (m) {
    case Method::direct_sum:
      return z2_direct(P, cache, sigma, v);
    case Method::relation:
      if (v != 0.0) throw DomainError("z2 relation: only at v = 0");
      return z2_relation(P, cache, sigma);
    case Method::expansion: {
      const double t1 = first_ordinate(P, cache, "z2 expansion");
      const double ratio = std::abs(v) / (t1 * t1);
      if (ratio > 0.8)
        throw DomainError("z2 expansion: |v| = " + std::to_string(std::abs(v)) + " exceeds 0.8 tau_1^2");
      auto r = power_series([&](int l) { return specfun::binomial(-sigma, l) * std::pow(v, l); },
                            [&](int l) { return z2_at_origin(P, cache, sigma + double(l)); }, ratio,
                            std::abs(sigma), "z2 expansion");
      r.zeros_used = static_cast<int>(cache.size());
      return r;
    }
    case Method::closed_form:
    case Method::integral_rep:
      break;
  }
  throw DomainError("z2_eval: method " + method_name(m) + " not available");
}

EvalResult z2_terminating(const PrimaryFunction& P, int m, cplx v) {
  if (m < 0) throw DomainError("z2_terminating: m must be >= 0");
  cplx sum = 0.0;
  for (int l = 0; l <= m; ++l) {
    const int k = m - l;  // Z2(-k, 0) = (-1)^k Z1(-2k, 1/2) / 2
    const cplx z2k = 0.5 * (k % 2 ? -1.0 : 1.0) * z1_closed(P, Z1Marker::minus_n, 0.5, 2 * k).value;
    sum += specfun::binomial(m, l) * z2k * std::pow(v, l);
  }
  EvalResult r;
  r.value = sum;
  r.method = Method::closed_form;
  r.err_est = 1e-14 * std::max(1.0, std::abs(sum));
  return r;
}

EvalResult z2_closed(const PrimaryFunction& P, Z2Marker marker, cplx v, int m) {
  const auto& st = P.stirling;
  const double q = P.q;
  EvalResult r;
  r.method = Method::closed_form;
  auto branch_point = [&]() {
    if (v.imag() == 0.0 && v.real() < 0.0)
      throw DomainError("z2_closed: branch of v^{1/2} ambiguous for v on the negative axis");
    return 0.5 + std::sqrt(v);
  };
  switch (marker) {
    case Z2Marker::minus_m: {
      if (m < 0) throw DomainError("z2_closed: minus_m needs m >= 0");
      cplx sum = 0.0;
      for (int j = 0; j <= m; ++j)
        sum -= specfun::binomial(m, j) * (j % 2 ? -1.0 : 1.0) * shadow_trace_value(P, 2 * j, 0.5) *
               std::pow(v, m - j);
      r.value = 0.5 * (sum + q * std::pow(v - 0.25, m));
      break;
    }
    case Z2Marker::zero:
      r.value = 0.5 * (0.5 * st.a1 + st.a0 + q);
      break;
    case Z2Marker::deriv0:
      r.value = 0.5 * st.b1 + st.b0 - log_xi_deriv(P, branch_point(), 0);
      break;
    case Z2Marker::plus_m: {
      if (m < 1) throw DomainError("z2_closed: plus_m needs m >= 1");
      if (v == 0.0) {
        r.value = 0.5 * (m % 2 ? -1.0 : 1.0) * z1_closed(P, Z1Marker::plus_n, 0.5, 2 * m).value;
        break;
      }
      const cplx x = branch_point();
      cplx sum = 0.0;
      for (int l = 0; l < m; ++l)
        sum += specfun::binomial(m + l - 1, m - 1) * neg_pow(2.0 * x - 1.0, double(m + l)) *
               z1_closed(P, Z1Marker::plus_n, x, m - l).value;
      r.value = sum;
      break;
    }
  }
  r.value = require_finite(r.value, "z2_closed");
  r.err_est = 1e-12 * std::max(1.0, std::abs(r.value));
  return r;
}

cplx z2_residue_at_zero(const PrimaryFunction& P, int m) {
  if (m < 0) throw DomainError("z2_residue_at_zero: m must be >= 0");
  if (m == 0) return P.stirling.b1 / (2.0 * kPi);
  const cplx zs = shadow_trace_value(P, 2 * m - 1, 0.5);
  return (m % 2 ? -1.0 : 1.0) / (2.0 * kPi) * (zs + double(P.q) * std::pow(2.0, 1 - 2 * m));
}

PolarDatum z2_polar(const PrimaryFunction& P, int m, cplx v) {
  if (m < 0) throw DomainError("z2_polar: m must be >= 0");
  const auto& st = P.stirling;
  // g = Gamma(m + 1/2) / (m! Gamma(1/2)), h = sum_{j<=m} 1/(2j-1)
  double g = 1.0, h = 0.0;
  for (int j = 1; j <= m; ++j) {
    g *= (j - 0.5) / j;
    h += 1.0 / (2.0 * j - 1.0);
  }
  cplx vm = 1.0;
  for (int j = 0; j < m; ++j) vm *= v;
  PolarDatum d;
  d.location = 0.5 - double(m);
  const cplx lead = st.a1 / (4.0 * kPi) * g * vm;
  cplx res = -g * (st.a1 / (2.0 * kPi) * h - st.b1 / (2.0 * kPi)) * vm;
  for (int j = 1; j <= m; ++j) {
    double ratio = 1.0;  // Gamma(1/2 + m) / Gamma(1/2 + j)
    for (int i = j; i < m; ++i) ratio *= 0.5 + i;
    cplx vp = 1.0;
    for (int i = 0; i < m - j; ++i) vp *= v;
    res += ratio / specfun::factorial(m - j) * z2_residue_at_zero(P, j) * vp;
  }
  d.order = lead != 0.0 ? 2 : 1;
  d.leading_coeff = lead != 0.0 ? lead : res;
  d.residue = res;
  return d;
}

// ---- third family ----------------------------------------------------------

EvalResult z3_direct(const PrimaryFunction& P, const ZeroCache& cache, cplx sigma, cplx y) {
  if (!(sigma.real() > 0.5))
    throw DomainError("z3_direct: requires Re sigma > 1/2 (sigma=" + format_complex(sigma) + ")");
  detail::require_cache(P, cache, "z3_direct");
  const cplx s = 2.0 * sigma;
  cplx sum = 0.0;
  double width_err = 0.0;
  for (auto it = cache.enclosures.rbegin(); it != cache.enclosures.rend(); ++it) {
    const double tau = 0.5 * (it->first + it->second);
    const cplx b = tau + y;
    if (on_negative_axis(b)) throw DomainError("z3_direct: tau + y on the negative axis (y=" + format_complex(y) + ")");
    const cplx t = neg_pow(b, s);
    sum += t;
    width_err += std::abs(s) * std::abs(t) / std::abs(b) * 0.5 * (it->second - it->first);
  }
  const auto tail = detail::binomial_tail(P, s, y, s, 1, cache.T_max, [](int) { return cplx(1.0); });
  EvalResult r;
  r.value = require_finite(sum + tail.value, "z3_direct");
  r.method = Method::direct_sum;
  r.err_est = tail.bound + width_err + 1e-15 * cache.size() * std::max(1.0, std::abs(sum));
  r.zeros_used = static_cast<int>(cache.size());
  return r;
}

EvalResult z3_eval(const PrimaryFunction& P, const ZeroCache& cache, cplx sigma, cplx y, std::optional<Method> method) {
  const Method m = method ? *method : (sigma.real() > 0.5 && cache.size() > 0 ? Method::direct_sum : Method::expansion);
  if (m == Method::direct_sum) return z3_direct(P, cache, sigma, y);
  if (m != Method::expansion) throw DomainError("z3_eval: method " + method_name(m) + " not available");
  long k = 0;
  if (detail::is_integer(2.0 * sigma, &k) && k <= 1) throw PoleError("z3: pole at sigma=" + format_complex(sigma));
  const double t1 = first_ordinate(P, cache, "z3 expansion");
  const double ratio = std::abs(y) / t1;
  if (ratio > 0.8) throw DomainError("z3 expansion: |y| = " + std::to_string(std::abs(y)) + " exceeds 0.8 tau_1");
  auto r = power_series([&](int l) { return specfun::binomial(-2.0 * sigma, l) * std::pow(y, l); },
                        [&](int l) { return z2_at_origin(P, cache, sigma + 0.5 * l); }, ratio,
                        2.0 * std::abs(sigma), "z3 expansion");
  r.zeros_used = static_cast<int>(cache.size());
  return r;
}

PolarDatum z3_polar(const PrimaryFunction& P, int n, cplx y) {
  if (n < 0) throw DomainError("z3_polar: n must be >= 0");
  if (n == 0) return z2_polar(P, 0, 0.0);
  const auto& st = P.stirling;
  cplx res = -st.a1 / (2.0 * kPi * n) * std::pow(y, n);
  for (int m = 1; 2 * m <= n; ++m)
    res += specfun::binomial(n - 1, 2 * m - 1) * z2_residue_at_zero(P, m) * std::pow(y, n - 2 * m);
  PolarDatum d;
  d.location = 0.5 * (1.0 - n);
  d.order = 1;
  d.leading_coeff = res;
  d.residue = res;
  if (n == 1) d.finite_part = 0.25 * st.a1 + 0.5 * (st.a0 + P.q) - st.b1 / kPi * y;
  return d;
}

}  // namespace superzeta
