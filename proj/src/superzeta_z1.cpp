#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "superzeta/numerics.hpp"
#include "superzeta/specfun.hpp"
#include "superzeta_detail.hpp"

namespace superzeta {

using detail::kPi;
using detail::neg_pow;

namespace detail {

bool is_integer(cplx s, long* n) {
  if (s.imag() != 0.0 || std::fabs(s.real()) > 1e15) return false;
  const double r = std::round(s.real());
  if (r != s.real()) return false;
  if (n) *n = static_cast<long>(r);
  return true;
}

cplx cos_half_pi(cplx z) {
  long n = 0;
  if (is_integer(z, &n)) {
    static constexpr double table[4] = {1.0, 0.0, -1.0, 0.0};
    return table[((n % 4) + 4) % 4];
  }
  return std::cos(kPi * z / 2.0);
}

TailSum binomial_tail(const PrimaryFunction& P, cplx a, cplx w, cplx s0, int step, double T,
                      const std::function<cplx(int)>& extra) {
  const double scale = std::pow(T, step);
  if (std::abs(w) > 0.5 * scale)
    throw DomainError("tail expansion: shift " + format_complex(w) + " too large for height " + std::to_string(T));
  TailSum out{0.0, 0.0};
  cplx wj = 1.0;
  const double lT = std::log(T);
  for (int j = 0; j <= 200; ++j) {
    const cplx coef = specfun::binomial(-a, j) * wj * extra(j);
    const cplx sj = s0 + double(step * j);
    if (coef != 0.0) {
      if (!(sj.real() > 1.0))
        throw DomainError("tail expansion: exponent " + format_complex(sj) + " has Re <= 1");
      const auto te = tail_sum_estimate(P, sj, T);
      out.value += coef * te.estimate;
      out.bound += std::abs(coef) * te.bound;
      const double size = std::abs(coef) * std::pow(T, 1.0 - sj.real()) * (lT + 1.0);
      if (j > 0 && size < 1e-18) break;
    }
    wj *= w;
  }
  return out;
}

void require_cache(const PrimaryFunction& P, const ZeroCache& cache, const char* op) {
  if (cache.primary_id != P.id)
    throw DomainError(std::string(op) + ": zero cache of " + cache.primary_id + " used for " + P.id);
  if (cache.size() == 0) throw DomainError(std::string(op) + ": zero cache is empty (T_max=" +
                                           std::to_string(cache.T_max) + ")");
}

}  // namespace detail

std::string method_name(Method m) {
  switch (m) {
    case Method::direct_sum: return "direct_sum";
    case Method::integral_rep: return "integral_rep";
    case Method::closed_form: return "closed_form";
    case Method::expansion: return "expansion";
    case Method::relation: return "relation";
  }
  return "unknown";
}

std::optional<Method> parse_method(const std::string& name) {
  for (Method m : {Method::direct_sum, Method::integral_rep, Method::closed_form, Method::expansion,
                   Method::relation})
    if (method_name(m) == name) return m;
  return std::nullopt;
}

std::pair<cplx, double> extrapolate_to_zero(const std::vector<double>& h, const std::vector<cplx>& f) {
  if (h.size() != f.size() || h.empty()) throw DomainError("extrapolate_to_zero: bad samples");
  std::vector<cplx> p = f;
  const std::size_t n = h.size();
  double err = 0.0;
  // Neville's scheme evaluated at 0.
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i + k < n; ++i) {
      const cplx next = (h[i + k] * p[i] - h[i] * p[i + 1]) / (h[i + k] - h[i]);
      if (i == 0 && k == n - 1) err = std::abs(next - p[0]);
      p[i] = next;
    }
  }
  return {p[0], err};
}

// ---- direct sum ------------------------------------------------------------

EvalResult z1_direct(const PrimaryFunction& P, const ZeroCache& cache, cplx s, cplx x) {
  if (!(s.real() > 1.0 || s == cplx(1.0)))
    throw DomainError("z1_direct: requires Re s > 1 or s = 1 (s=" + format_complex(s) + ")");
  detail::require_cache(P, cache, "z1_direct");
  const cplx u = x - 0.5;
  const cplx I(0.0, 1.0);
  cplx sum = 0.0;
  double width_err = 0.0;
  for (auto it = cache.enclosures.rbegin(); it != cache.enclosures.rend(); ++it) {
    const double tau = 0.5 * (it->first + it->second);
    const double half = 0.5 * (it->second - it->first);
    for (double sign : {-1.0, 1.0}) {
      const cplx b = u + sign * I * tau;
      if (b.real() <= 0.0 && std::fabs(b.imag()) <= half + 1e-15)
        throw DomainError("z1_direct: x=" + format_complex(x) + " lies on the cut of the zero at height " +
                          std::to_string(tau));
      const cplx t = neg_pow(b, s);
      sum += t;
      width_err += std::abs(s) * std::abs(t) / std::abs(b) * half;
    }
  }
  const auto tail = detail::binomial_tail(P, s, u, s, 1, cache.T_max,
                                          [&](int j) { return 2.0 * detail::cos_half_pi(s + double(j)); });
  EvalResult r;
  r.value = require_finite(sum + tail.value, "z1_direct");
  r.method = Method::direct_sum;
  r.err_est = tail.bound + width_err + 1e-15 * cache.size() * std::max(1.0, std::abs(sum));
  r.zeros_used = static_cast<int>(cache.size());
  return r;
}

// ---- integral representation -----------------------------------------------

namespace {

const numerics::QuadratureRule& jacobi_rule(int n, double beta) {
  static std::mutex mu;
  static std::map<std::pair<int, double>, numerics::QuadratureRule> rules;
  std::lock_guard<std::mutex> lock(mu);
  auto it = rules.find({n, beta});
  if (it == rules.end()) it = rules.emplace(std::make_pair(n, beta), numerics::gauss_jacobi(n, 0.0, beta)).first;
  return it->second;
}

// Form of the integral representation usable at (s, x): nullopt when none,
// false for the plain form, true for the regularized real form.
std::optional<bool> integral_form(const PrimaryFunction& P, cplx s, cplx x) {
  if (!(s.real() < 1.0)) return std::nullopt;
  const double top_trivial = P.trivial_zeros(1).front().first;
  if (x.imag() == 0.0 && x.real() <= top_trivial) return std::nullopt;
  if (P.q == 0) return false;
  if (!(x.imag() == 0.0 && x.real() <= 1.0)) return false;
  if (x.real() > 0.0 && s.real() > 0.0) return true;
  return std::nullopt;
}

// k-th derivative of L'/L (+ q/(z-1) when regularized) at z.
cplx log_derivative_integrand(const PrimaryFunction& P, cplx z, int k, bool regularized) {
  const cplx R = l_regularized(P, z, 0);
  const cplx r1 = l_regularized(P, z, 1) / R;
  const double q = regularized ? 0.0 : double(P.q);
  if (k == 0) return r1 - q / (z - 1.0);
  const cplx r2 = l_regularized(P, z, 2) / R;
  return r2 - r1 * r1 + q / ((z - 1.0) * (z - 1.0));
}

cplx fp1_closed_value(const PrimaryFunction& P, cplx x) { return -P.stirling.b1 + log_xi_deriv(P, x, 1); }

}  // namespace

EvalResult jay_integral(const PrimaryFunction& P, cplx s, cplx x, int order, bool regularized, double split) {
  if (order < 0 || order > 1) throw DomainError("jay_integral: order must be 0 or 1");
  if (!(s.real() < 1.0 + order))
    throw DomainError("jay_integral: requires Re s < " + std::to_string(1 + order) + " (s=" + format_complex(s) + ")");
  if (regularized && !(s.real() > 0.0))
    throw DomainError("jay_integral: regularized form requires Re s > 0");
  const double q = double(P.q);
  double Y = split;
  if (!(Y > 0.0)) {
    Y = std::max(4.0 - x.real(), 1.0);
    if (regularized) Y = std::max(Y, 2.0 * std::abs(x - 1.0) + 0.5);
  }
  if (regularized && !(std::abs(x - 1.0) < 0.75 * Y)) throw DomainError("jay_integral: split point too small");

  // Head: int_0^Y h(x+y) y^{k-s} dy with the Jacobi weight (1+t)^{k - s}, real s.
  const double beta = order - s.real();
  auto head_with = [&](int n) {
    const auto& rule = jacobi_rule(n, beta);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double t1 = 1.0 + rule.nodes[i];
      const double y = 0.5 * Y * t1;
      acc += rule.weights[i] * log_derivative_integrand(P, x + y, order, regularized);
    }
    return acc * std::exp((double(order) - s + 1.0) * std::log(0.5 * Y));
  };
  // Complex s: y^{-i Im s} is not smooth at 0, so the head is split into a
  // Taylor piece on [0, d] and Gauss-Legendre panels on [d 4^j, d 4^{j+1}].
  auto head_panels = [&](int n) {
    static const auto gl16 = numerics::gauss_legendre(16);
    static const auto gl10 = numerics::gauss_legendre(10);
    const auto& rule = n == 16 ? gl16 : gl10;
    constexpr int kPanels = 20;
    const double d = Y * std::pow(4.0, -kPanels);
    const cplx e0 = double(order) + 1.0 - s;
    cplx acc = log_derivative_integrand(P, x, order, regularized) * std::exp(e0 * std::log(d)) / e0;
    if (order == 0) acc += log_derivative_integrand(P, x, 1, regularized) * std::exp((e0 + 1.0) * std::log(d)) / (e0 + 1.0);
    for (int j = 0; j < kPanels; ++j) {
      const double lo = d * std::pow(4.0, j), hi = 4.0 * lo, half = 0.5 * (hi - lo);
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double y = lo + half * (1.0 + rule.nodes[i]);
        acc += half * rule.weights[i] * std::exp((double(order) - s) * std::log(y)) *
               log_derivative_integrand(P, x + y, order, regularized);
      }
    }
    return acc;
  };
  const bool real_s = s.imag() == 0.0;
  const cplx head = real_s ? head_with(64) : head_panels(16);
  const double head_err = std::abs(head - (real_s ? head_with(40) : head_panels(10)));

  // Tail: h = -sum c_n n^{-z}; int_Y^inf n^{-y} y^{a-1} dy = (log n)^{-a} Gamma(a, Y log n).
  const auto& vm = *P.von_mangoldt;
  const cplx a = double(order) + 1.0 - s;
  const double decay = x.real() + Y;
  if (!(decay > 1.5)) throw DomainError("jay_integral: split point leaves the Dirichlet series divergent");
  cplx tail = 0.0;
  std::size_t used = 0;
  for (std::size_t i = 0; i < vm.bases.size(); ++i) {
    const double n = vm.bases[i];
    const double ln = std::log(n);
    const double size = std::pow(n, -decay) * std::pow(ln, std::max(0.0, double(order))) *
                        std::pow(Y, std::max(0.0, a.real() - 1.0)) * 10.0;
    if (size < 1e-19) break;
    const cplx g = specfun::upper_incomplete_gamma(a, Y * ln);
    const cplx term = -vm.coefficients[i] * (order % 2 ? -1.0 : 1.0) * neg_pow(cplx(n), x) *
                      std::exp((s - 1.0) * std::log(ln)) * g;
    tail += term;
    used = i + 1;
  }
  double trunc = 0.0;
  if (used == vm.bases.size()) {
    const double N = vm.n_max;
    trunc = std::log(N) * std::pow(N, 1.0 - decay) / (decay - 1.0) * std::pow(std::log(N), order);
  }
  // Regularizing term q/(z-1) on [Y, inf): binomial series in c/Y.
  if (regularized && P.q == 1) {
    const cplx c = x - 1.0;
    const double kfact = order == 1 ? -1.0 : 1.0;
    cplx cj = 1.0;
    for (int j = 0; j < 400; ++j) {
      const cplx term = kfact * specfun::binomial(cplx(-order - 1.0), j) * cj * std::exp(-(s + double(j)) * std::log(Y)) /
                        (s + double(j));
      tail += q * term;
      if (std::abs(term) < 1e-19) break;
      cj *= c;
    }
  }

  cplx I = head + tail;
  double err = head_err + trunc + 1e-15 * (std::abs(head) + std::abs(tail));
  if (order == 1) {
    const cplx f = -1.0 / (1.0 - s);
    I *= f;
    err *= std::abs(f);
  }
  EvalResult r;
  r.value = require_finite(I, "jay_integral");
  r.method = Method::integral_rep;
  r.err_est = err;
  return r;
}

bool z1_integral_available(const PrimaryFunction& P, cplx s, cplx x) { return integral_form(P, s, x).has_value(); }

EvalResult z1_integral(const PrimaryFunction& P, cplx s, cplx x, double split) {
  if (!(s.real() < 1.0)) throw DomainError("z1_integral: requires Re s < 1 (s=" + format_complex(s) + ")");
  if (std::abs(std::sin(kPi * s)) < 1e-3 && std::abs(s - 1.0) < 0.01) {
    // Too close to the pole for the quadrature: Laurent data at s = 1.
    const cplx fp = fp1_closed_value(P, x);
    EvalResult r;
    r.value = -P.stirling.a1 / (s - 1.0) + fp;
    r.method = Method::closed_form;
    r.err_est = 10.0 * std::abs(s - 1.0) * (1.0 + std::abs(fp));
    return r;
  }
  const auto form = integral_form(P, s, x);
  if (!form)
    throw DomainError("z1_integral: no integral representation at s=" + format_complex(s) +
                      ", x=" + format_complex(x));
  const auto J = jay_integral(P, s, x, 0, *form, split);
  const cplx shadow = shadow_zeta(P, s, x);
  const cplx pole = (*form || P.q == 0) ? cplx(0.0) : neg_pow(x - 1.0, s);
  const cplx f = std::sin(kPi * s) / kPi;
  EvalResult r;
  r.value = require_finite(-shadow + pole + f * J.value, "z1_integral");
  r.method = Method::integral_rep;
  r.err_est = std::abs(f) * J.err_est + 1e-15 * (std::abs(shadow) + std::abs(pole) + 1.0);
  return r;
}

EvalResult z1_integral_deriv0(const PrimaryFunction& P, cplx x) {
  const auto form = integral_form(P, 0.0, x);
  if (!form || *form) throw DomainError("z1_integral_deriv0: no integral representation at x=" + format_complex(x));
  const auto J = jay_integral(P, 0.0, x, 0, false);
  const cplx pole = P.q == 1 ? -std::log(x - 1.0) : cplx(0.0);
  const cplx ds = shadow_zeta_ds(P, 0.0, x, 1);
  EvalResult r;
  r.value = -ds + pole + J.value;
  r.method = Method::integral_rep;
  r.err_est = J.err_est + 1e-14 * (1.0 + std::abs(ds));
  return r;
}

namespace {

EvalResult extrapolate_left_of_one(const PrimaryFunction& P, cplx x, bool residue) {
  const std::vector<double> hs{0.08, 0.04, 0.02, 0.01, 0.005};
  std::vector<cplx> f;
  double err = 0.0;
  for (double h : hs) {
    const auto z = z1_integral(P, 1.0 - h, x);
    if (z.method != Method::integral_rep) throw NumericError("z1 extrapolation hit the pole guard");
    f.push_back(residue ? -h * z.value : z.value - P.stirling.a1 / h);
    err = std::max(err, residue ? h * z.err_est : z.err_est);
  }
  const auto [v, e] = extrapolate_to_zero(hs, f);
  EvalResult r;
  r.value = v;
  r.method = Method::integral_rep;
  r.err_est = e + 30.0 * err;
  return r;
}

}  // namespace

EvalResult z1_fp1_extrapolated(const PrimaryFunction& P, cplx x) { return extrapolate_left_of_one(P, x, false); }
EvalResult z1_residue_extrapolated(const PrimaryFunction& P, cplx x) { return extrapolate_left_of_one(P, x, true); }

// ---- closed values ---------------------------------------------------------

cplx log_xi_deriv(const PrimaryFunction& P, cplx x, int n) {
  if (n < 0) throw DomainError("log_xi_deriv: n must be >= 0");
  if (n == 0) return std::log(xi_value(P, x));
  if (n > 2) return log_xi_derivative(P, x, n);
  const cplx R = l_regularized(P, x, 0);
  // At or near a trivial zero the ratios cancel badly; Xi itself is regular there.
  if (std::abs(R) < 1e-6) return log_xi_derivative(P, x, n);
  const cplx r1 = l_regularized(P, x, 1) / R;
  if (n == 1) return r1 - log_trivial_factor(P, x, 1);
  const cplx r2 = l_regularized(P, x, 2) / R;
  return r2 - r1 * r1 - log_trivial_factor(P, x, 2);
}

std::vector<cplx> z1_positive_integers(const PrimaryFunction& P, cplx x, int N) {
  if (N < 1) throw DomainError("z1_positive_integers: N must be >= 1");
  const auto c = log_xi_taylor(P, x, N + 1);
  std::vector<cplx> out(N);
  for (int l = 1; l <= N; ++l) out[l - 1] = (l % 2 ? 1.0 : -1.0) * double(l) * c[l];
  return out;
}

EvalResult z1_closed(const PrimaryFunction& P, Z1Marker marker, cplx x, int n) {
  const auto& st = P.stirling;
  EvalResult r;
  r.method = Method::closed_form;
  switch (marker) {
    case Z1Marker::minus_n:
      if (n < 0) throw DomainError("z1_closed: minus_n needs n >= 0");
      r.value = -shadow_trace_value(P, n, x) + double(P.q) * std::pow(x - 1.0, n);
      break;
    case Z1Marker::zero:
      r.value = st.a1 * x + st.a0 + double(P.q);
      break;
    case Z1Marker::deriv0:
      r.value = st.b1 * x + st.b0 - log_xi_deriv(P, x, 0);
      break;
    case Z1Marker::fp1:
      r.value = fp1_closed_value(P, x);
      break;
    case Z1Marker::plus_n: {
      if (n < 1) throw DomainError("z1_closed: plus_n needs n >= 1");
      const cplx d = log_xi_deriv(P, x, n);
      r.value = (n % 2 ? 1.0 : -1.0) / specfun::factorial(n - 1) * d;
      break;
    }
  }
  r.value = require_finite(r.value, "z1_closed");
  const bool cauchy = marker == Z1Marker::plus_n && n > 2;
  r.err_est = (cauchy ? 1e-12 : 1e-14) * std::max(1.0, std::abs(r.value));
  return r;
}

EvalResult z1_eval(const PrimaryFunction& P, const ZeroCache* cache, cplx s, cplx x) {
  if (cache && cache->size() > 0 && (s.real() > 1.0 || s == cplx(1.0))) return z1_direct(P, *cache, s, x);
  if (integral_form(P, s, x)) return z1_integral(P, s, x);
  long n = 0;
  if (detail::is_integer(s, &n)) {
    if (n < 0) return z1_closed(P, Z1Marker::minus_n, x, int(-n));
    if (n == 0) return z1_closed(P, Z1Marker::zero, x);
    return z1_closed(P, Z1Marker::plus_n, x, int(n));
  }
  throw DomainError("z1: no evaluation route at s=" + format_complex(s) + ", x=" + format_complex(x));
}

}  // namespace superzeta
