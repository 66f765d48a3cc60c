#include "superzeta/primary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "superzeta/cumulants.hpp"
#include "superzeta/kernels.hpp"
#include "superzeta/numerics.hpp"
#include "superzeta/specfun.hpp"

namespace superzeta {

using specfun::kPi;

namespace {

constexpr cplx kI(0.0, 1.0);

std::string at(cplx x) { return " at x=" + format_complex(x); }

// zeta(s, w) or its s-derivatives for any w off the nonpositive integers,
// moving Re w > 0 with the ladder zeta(s, w) = zeta(s, w+K) + sum_{j<K} (w+j)^{-s}.
cplx hurwitz_any(cplx s, cplx w, int m) {
  if (w.real() > 0.0) return m == 0 ? specfun::hurwitz_zeta(s, w) : specfun::hurwitz_zeta_ds(s, w, m);
  const int K = static_cast<int>(std::floor(-w.real())) + 1;
  cplx acc = 0.0;
  for (int j = 0; j < K; ++j) {
    const cplx b = w + double(j);
    if (b == cplx(0.0)) throw DomainError("shadow_zeta: argument hits a trivial zero (w=" + format_complex(w) + ")");
    const cplx lb = std::log(b);
    acc += std::pow(-lb, m) * std::exp(-s * lb);
  }
  const cplx w2 = w + double(K);
  return acc + (m == 0 ? specfun::hurwitz_zeta(s, w2) : specfun::hurwitz_zeta_ds(s, w2, m));
}

// d^m/ds^m [(s-1) zeta(s, w)] for any admissible w.
cplx hurwitz_any_pole_removed(cplx s, cplx w, int m) {
  if (w.real() > 0.0) return specfun::hurwitz_zeta_pole_removed(s, w, m);
  const int K = static_cast<int>(std::floor(-w.real())) + 1;
  cplx acc = 0.0;
  for (int j = 0; j < K; ++j) {
    const cplx b = w + double(j);
    if (b == cplx(0.0)) throw DomainError("shadow_zeta: argument hits a trivial zero (w=" + format_complex(w) + ")");
    const cplx lb = std::log(b);
    const cplx p = std::exp(-s * lb);
    // d^m [(s-1) b^{-s}] = (s-1)(-lb)^m b^{-s} + m (-lb)^{m-1} b^{-s}
    acc += (s - 1.0) * std::pow(-lb, m) * p;
    if (m > 0) acc += double(m) * std::pow(-lb, m - 1) * p;
  }
  return acc + specfun::hurwitz_zeta_pole_removed(s, w + double(K), m);
}

// Dirichlet L^(m)(x) = d^m/dx^m d^{-x} sum chi(n) zeta(x, n/d). The 1/(x-1)
// parts of the Hurwitz terms cancel because sum chi(n) = 0.
cplx dirichlet_l(const RealPrimitiveCharacter& chi, cplx x, int m) {
  const double d = double(chi.modulus);
  const double ld = std::log(d);
  std::array<cplx, 3> inner{};
  for (long n = 1; n < chi.modulus; ++n) {
    const int c = chi.values[n];
    if (c == 0) continue;
    for (int j = 0; j <= m; ++j) inner[j] += double(c) * specfun::hurwitz_zeta_regular(x, double(n) / d, j);
  }
  const cplx dx = std::exp(-x * ld);
  cplx acc = 0.0;
  for (int j = 0; j <= m; ++j) acc += specfun::binomial(m, j) * std::pow(-ld, m - j) * inner[j];
  return dx * acc;
}

const std::vector<double>& von_mangoldt_table(int n_max) {
  static std::mutex mu;
  static std::map<int, std::vector<double>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n_max);
  if (it != cache.end()) return it->second;
  std::vector<int> spf(n_max + 1, 0);
  for (int i = 2; i <= n_max; ++i)
    if (spf[i] == 0)
      for (long j = i; j <= n_max; j += i)
        if (spf[j] == 0) spf[j] = i;
  std::vector<double> lam(n_max + 1, 0.0);
  for (int n = 2; n <= n_max; ++n) {
    int m = n;
    const int p = spf[n];
    while (m % p == 0) m /= p;
    if (m == 1) lam[n] = std::log(double(p));
  }
  return cache.emplace(n_max, std::move(lam)).first->second;
}

double first_sign_change_height(const PrimaryFunction& P, double t_end, double step) {
  double prev = hardy(P, step);
  for (double t = 2.0 * step; t <= t_end; t += step) {
    const double cur = hardy(P, t);
    if ((prev < 0.0) != (cur < 0.0)) return t - step;
    prev = cur;
  }
  return t_end;
}

PrimaryFunction finish(PrimaryFunction P) {
  double a1 = 0.0, b1 = -P.kappa, a0 = P.log_power, b0 = 0.0;
  for (const auto& g : P.gamma_terms) {
    a1 += g.multiplicity / g.scale;
    b1 -= g.multiplicity * std::log(g.scale) / g.scale;
    a0 += g.multiplicity * (g.shift - 0.5);
    b0 += g.multiplicity * (0.5 * specfun::kLog2Pi - (g.shift - 0.5) * std::log(g.scale));
  }
  P.stirling = {a1, a0, b1, b0};
  P.von_mangoldt = von_mangoldt_series(P.kind, P.chi ? &*P.chi : nullptr);
  const auto closed = closed_cumulant_values(P);
  P.g0_closed = closed.first;
  P.g1_closed = closed.second;
  P.zero_free_height = first_sign_change_height(P, 20.0, 0.02);
  return P;
}

}  // namespace

double PrimaryFunction::a_minus(int k) const {
  if (k < 1) throw DomainError("a_minus: k must be >= 1");
  double acc = 0.0;
  for (const auto& g : gamma_terms) {
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;  // (-1)^{k+1}
    acc += g.multiplicity * sign * specfun::bernoulli_polynomial(k + 1, g.shift).real() *
           std::pow(g.scale, k) / (double(k) * (k + 1));
  }
  return acc;
}

std::vector<std::pair<double, int>> PrimaryFunction::trivial_zeros(int count) const {
  std::map<double, int> mult;
  for (const auto& g : gamma_terms)
    for (int k = 0; k < count + 1; ++k) mult[-g.scale * (g.shift + k)] += static_cast<int>(g.multiplicity);
  mult[0.0] -= log_power;
  std::vector<std::pair<double, int>> out;
  for (auto it = mult.rbegin(); it != mult.rend() && int(out.size()) < count; ++it)
    if (it->second > 0) out.emplace_back(it->first, it->second);
  return out;
}

std::shared_ptr<const VonMangoldtSeries> von_mangoldt_series(PrimaryKind kind, const RealPrimitiveCharacter* chi,
                                                             int n_max) {
  const auto& lam = von_mangoldt_table(n_max);
  auto series = std::make_shared<VonMangoldtSeries>();
  series->n_max = n_max;
  for (int n = 2; n <= n_max; ++n) {
    if (lam[n] == 0.0) continue;
    double c = lam[n];
    if (kind == PrimaryKind::dirichlet) c *= (*chi)(n);
    if (kind == PrimaryKind::dedekind_quadratic) c *= 1.0 + (*chi)(n);
    if (c == 0.0) continue;
    series->bases.push_back(double(n));
    series->coefficients.push_back(c);
    series->coefficients_over_log.push_back(c / std::log(double(n)));
  }
  return series;
}

PrimaryFunction build_riemann() {
  PrimaryFunction P;
  P.id = "riemann";
  P.kind = PrimaryKind::riemann;
  P.q = 1;
  P.gamma_data = DedekindGammaData{1, 0, 1, 1};
  P.kappa = 0.5 * std::log(kPi);
  P.log_power = 1;
  P.gamma_terms = {{1.0, 2.0, 0.0}};
  return finish(std::move(P));
}

PrimaryFunction build_dirichlet(long D) {
  PrimaryFunction P;
  P.chi = kronecker_character(D);
  P.id = "dirichlet:" + std::to_string(D);
  P.kind = PrimaryKind::dirichlet;
  P.q = 0;
  const long d = P.chi->modulus;
  const int a = P.chi->parity;
  P.gamma_data = DirichletGammaData{d, a};
  P.kappa = 0.5 * std::log(kPi / double(d));
  P.log_power = 0;
  P.gamma_terms = {{1.0, 2.0, 0.5 * a}};
  return finish(std::move(P));
}

PrimaryFunction build_dedekind_quadratic(long D) {
  PrimaryFunction P;
  P.chi = kronecker_character(D);
  P.id = "dedekind:" + std::to_string(D);
  P.kind = PrimaryKind::dedekind_quadratic;
  P.q = 1;
  const double d = std::fabs(double(D));
  if (D > 0) {
    P.gamma_data = DedekindGammaData{2, 0, 2, D};
    P.kappa = 0.5 * std::log(kPi * kPi / d);
    P.gamma_terms = {{2.0, 2.0, 0.0}};
  } else {
    P.gamma_data = DedekindGammaData{0, 1, 2, D};
    P.kappa = 0.5 * std::log(4.0 * kPi * kPi / d);
    P.gamma_terms = {{1.0, 1.0, 0.0}};
  }
  P.log_power = 1;
  return finish(std::move(P));
}

PrimaryFunction build_primary(const std::string& spec) {
  if (spec == "riemann") return build_riemann();
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw DomainError("build_primary: unknown primary spec '" + spec + "'");
  const std::string family = spec.substr(0, colon);
  long D = 0;
  try {
    std::size_t used = 0;
    D = std::stol(spec.substr(colon + 1), &used);
    if (used != spec.size() - colon - 1) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw DomainError("build_primary: bad discriminant in '" + spec + "'");
  }
  if (family == "dirichlet") return build_dirichlet(D);
  if (family == "dedekind") return build_dedekind_quadratic(D);
  throw DomainError("build_primary: unknown primary family '" + family + "'");
}

cplx l_value(const PrimaryFunction& P, cplx x) {
  if (P.q == 1 && x == cplx(1.0)) throw PoleError("l_value: pole of " + P.id + at(x));
  switch (P.kind) {
    case PrimaryKind::riemann: return specfun::riemann_zeta(x);
    case PrimaryKind::dirichlet: return require_finite(dirichlet_l(*P.chi, x, 0), "l_value");
    case PrimaryKind::dedekind_quadratic:
      return require_finite(specfun::riemann_zeta(x) * dirichlet_l(*P.chi, x, 0), "l_value");
  }
  return 0.0;
}

cplx l_regularized(const PrimaryFunction& P, cplx x, int m) {
  if (m < 0 || m > 2) throw DomainError("l_regularized: derivative order must be 0..2");
  switch (P.kind) {
    case PrimaryKind::riemann: return specfun::hurwitz_zeta_pole_removed(x, 1.0, m);
    case PrimaryKind::dirichlet: return require_finite(dirichlet_l(*P.chi, x, m), "l_regularized");
    case PrimaryKind::dedekind_quadratic: {
      cplx acc = 0.0;
      for (int i = 0; i <= m; ++i)
        acc += specfun::binomial(m, i) * specfun::hurwitz_zeta_pole_removed(x, 1.0, i) * dirichlet_l(*P.chi, x, m - i);
      return require_finite(acc, "l_regularized");
    }
  }
  return 0.0;
}

cplx log_trivial_factor(const PrimaryFunction& P, cplx x, int n) {
  if (n < 0) throw DomainError("log_trivial_factor: negative order");
  if (n == 0) {
    cplx acc = P.kappa * x - double(P.log_power) * std::log(x);
    for (const auto& g : P.gamma_terms) acc -= g.multiplicity * specfun::log_gamma(x / g.scale + g.shift);
    return require_finite(acc, "log_trivial_factor");
  }
  cplx acc = (n == 1) ? cplx(P.kappa) : cplx(0.0);
  acc -= double(P.log_power) * ((n % 2 == 1) ? 1.0 : -1.0) * specfun::factorial(n - 1) * std::pow(x, -n);
  for (const auto& g : P.gamma_terms)
    acc -= g.multiplicity * std::pow(g.scale, -n) * specfun::polygamma(n - 1, x / g.scale + g.shift);
  return require_finite(acc, "log_trivial_factor");
}

cplx smooth_log_factor(const PrimaryFunction& P, cplx x) {
  cplx f = -log_trivial_factor(P, x, 0);
  if (P.q == 1) f += std::log(x - 1.0);
  return f;
}

namespace {

double distance_to_gamma_poles(const PrimaryFunction& P, cplx x) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& g : P.gamma_terms) {
    // Poles of Gamma(x/lambda + h) sit at x = -lambda (h + k).
    const double k = std::max(0.0, std::round(-x.real() / g.scale - g.shift));
    for (double kk : {k - 1.0, k, k + 1.0}) {
      if (kk < 0.0) continue;
      best = std::min(best, std::abs(x + g.scale * (g.shift + kk)));
    }
  }
  return best;
}

double distance_to_trivial_zeros(const PrimaryFunction& P, cplx x) {
  double best = std::numeric_limits<double>::infinity();
  const int count = static_cast<int>(std::max(4.0, -x.real() + 4.0));
  for (const auto& z : P.trivial_zeros(count)) best = std::min(best, std::abs(x - z.first));
  return best;
}

}  // namespace

cplx xi_value(const PrimaryFunction& P, cplx x) {
  if (x.real() < 0.5 && distance_to_gamma_poles(P, x) < 0.05) return xi_value(P, 1.0 - x);
  cplx v = std::exp(-log_trivial_factor(P, x, 0)) * l_regularized(P, x, 0);
  if (x.real() == 0.5) v = cplx(v.real(), 0.0);
  return require_finite(v, "xi_value");
}

cplx log_xi(const PrimaryFunction& P, cplx x) {
  const cplx xr = x.real() < 0.5 ? 1.0 - x : x;
  return require_finite(-log_trivial_factor(P, xr, 0) + std::log(l_regularized(P, xr, 0)), "log_xi");
}

double hardy(const PrimaryFunction& P, double t) {
  const cplx x(0.5, t);
  const double phase = smooth_log_factor(P, x).imag();
  return require_finite(std::exp(kI * phase) * l_value(P, x), "hardy").real();
}

double log_l_series_tail_bound(const PrimaryFunction& P, cplx x, int n) {
  const double sigma = x.real();
  if (!(sigma > P.sigma0)) return std::numeric_limits<double>::infinity();
  const double N = double(P.von_mangoldt->n_max);
  const double lN = std::log(N);
  // |c_k| <= 2 log k; integral of (log t)^n t^{-sigma} beyond N, with a
  // factor covering the lower-order terms of the antiderivative.
  const double e = sigma - 1.0;
  const int power = std::max(n, 0);
  const double lead = 2.0 * std::pow(lN, power) * std::pow(N, -e) / e;
  return lead * (1.0 + power / (e * lN)) * (1.0 + power / (e * lN));
}

std::vector<cplx> log_l_taylor(const PrimaryFunction& P, cplx center, int count, double radius) {
  if (radius <= 0.0) {
    radius = std::min({0.45, 0.9 * distance_to_trivial_zeros(P, center),
                       0.5 * (P.zero_free_height - std::fabs(center.imag()))});
    if (!(radius > 1e-3))
      throw NumericError("log_l_taylor: no admissible circle radius" + at(center) + " for " + P.id);
  }
  return numerics::log_taylor_coefficients([&](cplx z) { return std::log(l_regularized(P, z, 0)); }, center,
                                           radius, count);
}

std::vector<cplx> log_xi_taylor(const PrimaryFunction& P, cplx center, int count, double radius) {
  if (radius <= 0.0) {
    radius = std::min(2.0, 0.5 * (P.zero_free_height - std::fabs(center.imag())));
    if (!(radius > 1e-3))
      throw NumericError("log_xi_taylor: no admissible circle radius" + at(center) + " for " + P.id);
  }
  return numerics::log_taylor_coefficients([&](cplx z) { return log_xi(P, z); }, center, radius, count);
}

cplx log_xi_derivative(const PrimaryFunction& P, cplx x, int n) {
  if (n < 0) throw DomainError("log_xi_derivative: negative order");
  const auto c = log_xi_taylor(P, x, n + 1);
  return specfun::factorial(n) * c[n];
}

cplx log_l_derivative(const PrimaryFunction& P, cplx x, int n, DerivativeMethod method) {
  if (n < 0) throw DomainError("log_l_derivative: negative order");
  if (method == DerivativeMethod::automatic)
    method = log_l_series_tail_bound(P, x, n) <= 1e-12 ? DerivativeMethod::series : DerivativeMethod::cauchy;
  // Correction from log L = log[(x-1)^q L] - q log(x-1).
  auto pole_part = [&]() -> cplx {
    if (P.q == 0) return 0.0;
    if (n == 0) return std::log(x - 1.0);
    return ((n % 2 == 1) ? 1.0 : -1.0) * specfun::factorial(n - 1) * std::pow(x - 1.0, -n);
  };
  switch (method) {
    case DerivativeMethod::series: {
      if (!(log_l_series_tail_bound(P, x, n) <= 1e-12))
        throw DomainError("log_l_derivative: Dirichlet series route unavailable" + at(x));
      const auto& vm = *P.von_mangoldt;
      if (n == 0) return kernels::weighted_power_sum(vm.bases, vm.coefficients_over_log, x, 0);
      return -kernels::weighted_power_sum(vm.bases, vm.coefficients, x, n - 1);
    }
    case DerivativeMethod::analytic: {
      if (n > 2) throw DomainError("log_l_derivative: analytic route limited to n <= 2");
      const cplx R = l_regularized(P, x, 0);
      if (R == cplx(0.0)) throw DomainError("log_l_derivative: zero of L" + at(x));
      cplx v;
      if (n == 0) {
        v = std::log(R);
      } else {
        const cplx r1 = l_regularized(P, x, 1) / R;
        v = (n == 1) ? r1 : l_regularized(P, x, 2) / R - r1 * r1;
      }
      return require_finite(v - pole_part(), "log_l_derivative");
    }
    case DerivativeMethod::cauchy:
    case DerivativeMethod::automatic: {
      const auto c = log_l_taylor(P, x, std::max(n + 1, 2));
      return require_finite(specfun::factorial(n) * c[n] - pole_part(), "log_l_derivative");
    }
  }
  return 0.0;
}

cplx shadow_zeta(const PrimaryFunction& P, cplx s, cplx x) {
  if (s == cplx(1.0)) throw PoleError("shadow_zeta: pole at s=1 for " + P.id);
  cplx acc = 0.0;
  for (const auto& g : P.gamma_terms)
    acc += g.multiplicity * std::exp(-s * std::log(g.scale)) * hurwitz_any(s, x / g.scale + g.shift, 0);
  if (P.log_power != 0) acc -= double(P.log_power) * std::exp(-s * std::log(x));
  return require_finite(acc, "shadow_zeta");
}

cplx shadow_zeta_ds(const PrimaryFunction& P, cplx s, cplx x, int m) {
  if (m < 0 || m > 2) throw DomainError("shadow_zeta_ds: derivative order must be 0..2");
  if (s == cplx(1.0)) throw PoleError("shadow_zeta_ds: pole at s=1 for " + P.id);
  cplx acc = 0.0;
  for (const auto& g : P.gamma_terms) {
    const double ll = std::log(g.scale);
    const cplx w = x / g.scale + g.shift;
    cplx inner = 0.0;
    for (int j = 0; j <= m; ++j) inner += specfun::binomial(m, j) * std::pow(-ll, m - j) * hurwitz_any(s, w, j);
    acc += g.multiplicity * std::exp(-s * ll) * inner;
  }
  if (P.log_power != 0) {
    const cplx lx = std::log(x);
    acc -= double(P.log_power) * std::pow(-lx, m) * std::exp(-s * lx);
  }
  return require_finite(acc, "shadow_zeta_ds");
}

cplx shadow_zeta_pole_removed(const PrimaryFunction& P, cplx s, cplx x, int m) {
  if (m < 0 || m > 2) throw DomainError("shadow_zeta_pole_removed: derivative order must be 0..2");
  cplx acc = 0.0;
  for (const auto& g : P.gamma_terms) {
    const double ll = std::log(g.scale);
    const cplx w = x / g.scale + g.shift;
    cplx inner = 0.0;
    for (int j = 0; j <= m; ++j)
      inner += specfun::binomial(m, j) * std::pow(-ll, m - j) * hurwitz_any_pole_removed(s, w, j);
    acc += g.multiplicity * std::exp(-s * ll) * inner;
  }
  if (P.log_power != 0) {
    const cplx lx = std::log(x);
    const cplx p = std::exp(-s * lx);
    cplx t = (s - 1.0) * std::pow(-lx, m) * p;
    if (m > 0) t += double(m) * std::pow(-lx, m - 1) * p;
    acc -= double(P.log_power) * t;
  }
  return require_finite(acc, "shadow_zeta_pole_removed");
}

cplx shadow_trace_value(const PrimaryFunction& P, int n, cplx x) {
  if (n < 0) throw DomainError("shadow_trace_value: n must be >= 0");
  const auto& st = P.stirling;
  cplx v = -st.a1 / (n + 1.0) * std::pow(x, n + 1) - st.a0 * std::pow(x, n);
  for (int j = 1; j <= n; ++j)
    v += double(n) * ((j % 2 == 1) ? -1.0 : 1.0) * specfun::binomial(n - 1, j - 1) * P.a_minus(j) * std::pow(x, n - j);
  return v;
}

ShadowMarkers shadow_markers(const PrimaryFunction& P, cplx x, int N) {
  ShadowMarkers m;
  for (int n = 0; n <= N; ++n) m.at_minus_n.push_back(shadow_trace_value(P, n, x));
  m.fp_at_1 = log_trivial_factor(P, x, 1) + P.stirling.b1;
  m.s_deriv_at_0 = -P.stirling.b1 * x - P.stirling.b0 - log_trivial_factor(P, x, 0);
  return m;
}

double asymptotic_normalization_residual(const PrimaryFunction& P) {
  double worst = 0.0;
  for (double x : {30.0, 40.0}) worst = std::max(worst, std::abs(std::log(l_value(P, x))));
  return worst;
}

}  // namespace superzeta
