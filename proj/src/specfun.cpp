#include "superzeta/specfun.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <type_traits>

#include "superzeta/kernels.hpp"

namespace superzeta::specfun {

namespace {

RationalSpecialNumbers build_tables(int max_index) {
  RationalSpecialNumbers t;
  t.max_index = max_index;
  t.bernoulli.resize(max_index + 1);
  t.euler.resize(max_index + 1);

  // sum_{k=0}^{n} C(n+1, k) B_k = 0
  t.bernoulli[0] = 1;
  for (int n = 1; n <= max_index; ++n) {
    Rational acc = 0;
    BigInt c = 1;  // C(n+1, k)
    for (int k = 0; k < n; ++k) {
      acc += Rational(c) * t.bernoulli[k];
      c = c * (n + 1 - k) / (k + 1);
    }
    t.bernoulli[n] = -acc / (n + 1);
  }

  // sum_{k=0}^{n/2} C(n, 2k) E_{2k} = 0 for even n > 0
  t.euler[0] = 1;
  for (int n = 1; n <= max_index; ++n) {
    if (n % 2 == 1) {
      t.euler[n] = 0;
      continue;
    }
    BigInt acc = 0;
    BigInt c = 1;  // C(n, j)
    for (int j = 0; j < n; ++j) {
      if (j % 2 == 0) acc += c * t.euler[j];
      c = c * (n - j) / (j + 1);
    }
    t.euler[n] = -acc;
  }
  return t;
}

void check_index(int n, const char* op) {
  if (n < 0 || n > kMaxSpecialIndex) {
    std::ostringstream os;
    os << op << ": index " << n << " outside [0, " << kMaxSpecialIndex << "]";
    throw DomainError(os.str());
  }
}

// B_{2j}/(2j)! for j = 0..32.
template <class T>
const std::array<T, 33>& bernoulli_over_factorial() {
  static const std::array<T, 33> table = [] {
    std::array<T, 33> t{};
    Rational f = 1;
    for (int j = 0; j <= 32; ++j) {
      if (j > 0) f *= Rational((2 * j - 1) * (2 * j));
      const Rational q = bernoulli_number(2 * j) / f;
      t[j] = q.template convert_to<T>();
    }
    return t;
  }();
  return table;
}

// Exact rational value of a finite double.
Rational to_rational(double x) {
  int e = 0;
  const double m = std::frexp(x, &e);
  const auto mant = static_cast<long long>(std::ldexp(m, 53));
  Rational r(mant);
  e -= 53;
  if (e >= 0) r *= Rational(BigInt(1) << e);
  else r /= Rational(BigInt(1) << -e);
  return r;
}

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

std::string args(cplx s, cplx w) {
  return "(s=" + format_complex(s) + ", w=" + format_complex(w) + ")";
}

}  // namespace

const RationalSpecialNumbers& special_numbers() {
  static const RationalSpecialNumbers tables = build_tables(kMaxSpecialIndex);
  return tables;
}

Rational bernoulli_number(int n) {
  check_index(n, "bernoulli_number");
  return special_numbers().bernoulli[n];
}

double bernoulli_number_d(int n) { return static_cast<double>(bernoulli_number(n)); }

BigInt euler_number(int n) {
  check_index(n, "euler_number");
  return special_numbers().euler[n];
}

double euler_number_d(int n) { return static_cast<double>(euler_number(n)); }

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

cplx binomial(cplx a, int k) {
  cplx r = 1.0;
  for (int i = 0; i < k; ++i) r *= (a - double(i)) / double(i + 1);
  return r;
}

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

cplx bernoulli_polynomial(int n, cplx w) {
  check_index(n, "bernoulli_polynomial");
  if (w.imag() == 0.0 && std::isfinite(w.real())) {
    // Real argument: evaluate exactly, round once.
    const Rational x = to_rational(w.real());
    Rational acc = 0;
    Rational xp = 1;
    const auto& b = special_numbers().bernoulli;
    BigInt c = 1;  // C(n, k) for k = n - j
    for (int j = 0; j <= n; ++j) {
      // term B_{n-j} C(n, n-j) x^j
      acc += b[n - j] * Rational(c) * xp;
      xp *= x;
      c = c * (n - j) / (j + 1);
    }
    return static_cast<double>(acc);
  }
  cplx acc = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double bk = bernoulli_number_d(k);
    if (bk == 0.0) continue;
    acc += binomial(n, k) * bk * std::pow(w, n - k);
  }
  return acc;
}

// ---------------------------------------------------------------- gamma ---

namespace {

constexpr double kShiftThreshold = 15.0;

cplx stirling_log_gamma(cplx z) {
  const auto& bf = bernoulli_over_factorial<double>();
  cplx acc = (z - 0.5) * std::log(z) - z + 0.5 * kLog2Pi;
  const cplx zinv2 = 1.0 / (z * z);
  cplx zpow = 1.0 / z;
  for (int j = 1; j <= 20; ++j) {
    // B_{2j} / (2j (2j-1) z^{2j-1}) = (B_{2j}/(2j)!) (2j-2)! / z^{2j-1}
    const cplx term = bf[j] * factorial(2 * j - 2) * zpow;
    acc += term;
    if (std::abs(term) < 1e-18 * std::abs(acc)) break;
    zpow *= zinv2;
  }
  return acc;
}

}  // namespace

cplx log_gamma(cplx z) {
  if (is_nonpositive_integer(z))
    throw PoleError("log_gamma: pole of Gamma at z=" + format_complex(z));
  cplx shift_sum = 0.0;
  cplx zz = z;
  while (zz.real() < kShiftThreshold || std::abs(zz) < kShiftThreshold) {
    shift_sum += std::log(zz);
    zz += 1.0;
  }
  return require_finite(stirling_log_gamma(zz) - shift_sum, "log_gamma");
}

double log_gamma(double x) { return log_gamma(cplx(x, 0.0)).real(); }

cplx reciprocal_gamma(cplx z) {
  if (is_nonpositive_integer(z)) return 0.0;
  return std::exp(-log_gamma(z));
}

cplx polygamma(int m, cplx z) {
  if (m < 0) throw DomainError("polygamma: negative order");
  if (is_nonpositive_integer(z))
    throw PoleError("polygamma: pole at z=" + format_complex(z));
  const auto& bf = bernoulli_over_factorial<double>();
  const double threshold = kShiftThreshold + m;
  cplx shift_sum = 0.0;
  cplx zz = z;
  while (zz.real() < threshold || std::abs(zz) < threshold) {
    shift_sum += std::pow(zz, -(m + 1));
    zz += 1.0;
  }
  cplx asym;
  const cplx zinv = 1.0 / zz;
  const cplx zinv2 = zinv * zinv;
  if (m == 0) {
    asym = std::log(zz) - 0.5 * zinv;
    cplx zp = zinv2;
    for (int j = 1; j <= 20; ++j) {
      const cplx term = bf[j] * factorial(2 * j) / (2.0 * j) * zp;
      asym -= term;
      if (std::abs(term) < 1e-18 * std::abs(asym)) break;
      zp *= zinv2;
    }
    return require_finite(asym - shift_sum, "polygamma");
  }
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^{m+1}
  cplx zm = std::pow(zinv, m);
  asym = factorial(m - 1) * zm + 0.5 * factorial(m) * zm * zinv;
  cplx zp = zm * zinv2;
  for (int j = 1; j <= 30; ++j) {
    // B_{2j} (2j+m-1)! / ((2j)! z^{2j+m})
    const cplx term = bf[j] * factorial(2 * j + m - 1) * zp;
    asym += term;
    if (std::abs(term) < 1e-18 * std::abs(asym)) break;
    zp *= zinv2;
  }
  // psi^(m)(z) = psi^(m)(z+N) - (-1)^m m! sum_{k<N} (z+k)^{-m-1}
  const double msign = (m % 2 == 0) ? 1.0 : -1.0;
  return require_finite(sign * asym - msign * factorial(m) * shift_sum, "polygamma");
}

double digamma(double x) { return polygamma(0, cplx(x, 0.0)).real(); }

cplx upper_incomplete_gamma(cplx a, double z) {
  if (!(z > 0.0)) throw DomainError("upper_incomplete_gamma: z must be > 0");
  const cplx prefactor = std::exp(-z + a * std::log(z));
  if (z >= std::max(1.0, a.real() + 1.0)) {
    // Modified Lentz evaluation of the continued fraction.
    constexpr double tiny = 1e-300;
    cplx b = z + 1.0 - a;
    cplx c = 1.0 / tiny;
    cplx d = 1.0 / b;
    cplx h = d;
    for (int i = 1; i < 10000; ++i) {
      const cplx an = -double(i) * (double(i) - a);
      b += 2.0;
      d = an * d + b;
      if (std::abs(d) < tiny) d = tiny;
      c = b + an / c;
      if (std::abs(c) < tiny) c = tiny;
      d = 1.0 / d;
      const cplx del = d * c;
      h *= del;
      if (std::abs(del - 1.0) < 1e-16) return require_finite(prefactor * h, "upper_incomplete_gamma");
    }
    throw NumericError("upper_incomplete_gamma: continued fraction did not converge (a=" +
                       format_complex(a) + ", z=" + std::to_string(z) + ")");
  }
  cplx term = 1.0 / a;
  cplx sum = term;
  for (int n = 1; n < 10000; ++n) {
    term *= z / (a + double(n));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) {
      const cplx lower = sum * prefactor;
      return require_finite(std::exp(log_gamma(a)) - lower, "upper_incomplete_gamma");
    }
  }
  throw NumericError("upper_incomplete_gamma: series did not converge");
}

// -------------------------------------------------------------- Hurwitz ---

namespace {

template <class R>
struct EmParts {
  std::array<std::complex<R>, 3> F{};  // derivatives of the non-polar part
  std::complex<R> a;                   // N + w
};

// Euler-Maclaurin with shift N: zeta(s,w) = F(s) + a^{1-s}/(s-1), a = N + w.
// R = long double is used where the partial sum cancels heavily (Re s < 0).
template <class R>
EmParts<R> euler_maclaurin(cplx s_in, cplx w_in, int m, int N, bool terminating) {
  using C = std::complex<R>;
  const C s(s_in.real(), s_in.imag());
  const C w(w_in.real(), w_in.imag());
  EmParts<R> out;
  if (N > 0) {
    if (std::is_same_v<R, double> && w.imag() == 0.0) {
      std::vector<double> bases(N);
      for (int k = 0; k < N; ++k) bases[k] = k + w_in.real();
      for (int r = 0; r <= m; ++r) {
        const cplx v = kernels::power_sum_real(bases, s_in, r);
        out.F[r] = C(v.real(), v.imag());
      }
    } else {
      for (int k = N - 1; k >= 0; --k) {
        const C b = R(k) + w;
        const C lb = std::log(b);
        const C p = std::exp(-s * lb);
        C f = p;
        for (int r = 0; r <= m; ++r) {
          out.F[r] += f;
          f *= -lb;
        }
      }
    }
  }
  const C a = R(N) + w;
  const C la = std::log(a);
  const C aps = std::exp(-s * la);
  out.a = a;
  {
    C f = R(0.5) * aps;
    for (int r = 0; r <= m; ++r) {
      out.F[r] += f;
      f *= -la;
    }
  }
  const auto& bf = bernoulli_over_factorial<R>();
  // P_j(s) = s (s+1) ... (s+2j-2) and its first two derivatives.
  C P = s, P1 = R(1), P2 = R(0);
  C g = aps / a;  // a^{-s-1}
  const C a2inv = R(1) / (a * a);
  const R scale = std::max(R(1), std::abs(aps * a));
  for (int j = 1; j <= 32; ++j) {
    if (j > 1) {
      for (int i : {2 * j - 3, 2 * j - 2}) {
        const C f = s + R(i);
        P2 = P2 * f + R(2) * P1;
        P1 = P1 * f + P;
        P = P * f;
      }
      g *= a2inv;
    }
    const std::array<C, 3> Pd{P, P1, P2};
    const std::array<C, 3> gd{g, -la * g, la * la * g};
    bool small = true;
    for (int r = 0; r <= m; ++r) {
      C t = R(0);
      for (int i = 0; i <= r; ++i) t += R(binomial(r, i)) * Pd[i] * gd[r - i];
      t *= bf[j];
      out.F[r] += t;
      if (std::abs(t) > R(1e-20) * std::max(scale, std::abs(out.F[r]))) small = false;
    }
    if (terminating) {
      if (P == R(0)) break;
    } else if (small && j >= 2) {
      break;
    }
  }
  return out;
}

// zeta derivatives Z[r] = d^r/ds^r zeta(s, w) and pole-removed derivatives
// P[r] = d^r/ds^r [(s - 1) zeta(s, w)], assembled in the working precision
// before rounding so the cancellation for Re s < 0 happens in extended
// precision.
struct EmResult {
  std::array<cplx, 3> Z{}, P{}, G{};  // G: derivatives of zeta(s, w) - 1/(s-1)
};

template <class R>
EmResult em_assemble(cplx s_in, cplx w, int m, int N) {
  using C = std::complex<R>;
  const auto p = euler_maclaurin<R>(s_in, w, m, N, false);
  const C s(s_in.real(), s_in.imag());
  const C u = s - R(1);
  const C la = std::log(p.a);
  const C h = std::exp(-u * la);
  std::array<C, 3> Z = p.F, P{};
  P[0] = u * p.F[0] + h;
  P[1] = p.F[0] + u * p.F[1] - la * h;
  P[2] = R(2) * p.F[1] + u * p.F[2] + la * la * h;
  if (u != C(0)) {
    Z[0] += h / u;
    Z[1] += -la * h / u - h / (u * u);
    Z[2] += la * la * h / u + R(2) * la * h / (u * u) + R(2) * h / (u * u * u);
  }
  // g(u) = (a^{-u} - 1)/u and its u-derivatives, by series when |u log a| is small.
  std::array<C, 3> g{};
  const C z = -u * la;
  if (std::abs(z) < R(0.5)) {
    // g = sum_{k>=1} (-la)^k u^{k-1} / k!, differentiated termwise.
    C coef = R(1);
    std::array<C, 40> up{};  // u^j
    up[0] = R(1);
    for (int j = 1; j < 40; ++j) up[j] = up[j - 1] * u;
    for (int k = 1; k < 40; ++k) {
      coef *= -la / R(k);
      g[0] += coef * up[k - 1];
      if (k >= 2) g[1] += coef * R(k - 1) * up[k - 2];
      if (k >= 3) g[2] += coef * R((k - 1) * (k - 2)) * up[k - 3];
    }
  } else {
    const C e = h - R(1);
    g[0] = e / u;
    g[1] = -la * h / u - e / (u * u);
    g[2] = la * la * h / u + R(2) * la * h / (u * u) + R(2) * e / (u * u * u);
  }
  EmResult r;
  for (int i = 0; i <= m; ++i) {
    const C G = p.F[i] + g[i];
    r.Z[i] = cplx(double(Z[i].real()), double(Z[i].imag()));
    r.P[i] = cplx(double(P[i].real()), double(P[i].imag()));
    r.G[i] = cplx(double(G.real()), double(G.imag()));
  }
  return r;
}

EmResult em_parts(cplx s, cplx w, int m, int N) {
  return s.real() < 0.0 ? em_assemble<long double>(s, w, m, N) : em_assemble<double>(s, w, m, N);
}

int shift_for(cplx s, cplx w) {
  const double amin = 10.0 + 0.4 * std::abs(s);
  return std::max(0, static_cast<int>(std::ceil(amin - w.real())));
}

constexpr double kReflectBelow = -3.5;

// zeta(s, w) for real w > 0 and Re s <= kReflectBelow via Hurwitz's formula
// zeta(1-u, w) = 2 Gamma(u) (2 pi)^{-u} sum_k cos(pi u/2 - 2 pi k w) k^{-u}.
cplx hurwitz_reflected(cplx s, double w) {
  double w0 = w - std::floor(w);
  if (w0 == 0.0) w0 = 1.0;
  const int steps = static_cast<int>(std::llround(w - w0));
  const cplx u = 1.0 - s;
  const double ru = u.real();
  const int kmax = static_cast<int>(std::ceil(std::pow(1e17, 1.0 / (ru - 1.0)))) + 2;
  cplx series = 0.0;
  for (int k = kmax; k >= 1; --k)
    series += std::cos(kPi * u / 2.0 - 2.0 * kPi * k * w0) * std::exp(-u * std::log(double(k)));
  cplx value = 2.0 * std::exp(log_gamma(u) - u * std::log(2.0 * kPi)) * series;
  for (int j = 0; j < steps; ++j) value -= std::exp(-s * std::log(w0 + j));
  return value;
}

}  // namespace

cplx hurwitz_zeta(cplx s, cplx w) {
  if (s == cplx(1.0, 0.0)) throw PoleError("hurwitz_zeta: pole at s=1 " + args(s, w));
  if (!(w.real() > 0.0)) throw DomainError("hurwitz_zeta: requires Re w > 0 " + args(s, w));
  if (is_nonpositive_integer(s) && -s.real() < kMaxSpecialIndex) {
    const int n = static_cast<int>(-s.real());
    if (w.imag() == 0.0) return bernoulli_polynomial(n + 1, w) / -double(n + 1);
    const auto p = euler_maclaurin<double>(s, w, 0, 0, true);
    return require_finite(p.F[0] + std::pow(p.a, 1.0 - s) / (s - 1.0), "hurwitz_zeta");
  }
  if (w.imag() == 0.0 && s.real() <= kReflectBelow) return require_finite(hurwitz_reflected(s, w.real()), "hurwitz_zeta");
  return require_finite(em_parts(s, w, 0, shift_for(s, w)).Z[0], "hurwitz_zeta");
}

cplx hurwitz_zeta_ds(cplx s, cplx w, int m) {
  if (m < 0 || m > 2) throw DomainError("hurwitz_zeta_ds: derivative order must be 0..2");
  if (m == 0) return hurwitz_zeta(s, w);
  if (s == cplx(1.0, 0.0)) throw PoleError("hurwitz_zeta_ds: pole at s=1 " + args(s, w));
  if (!(w.real() > 0.0)) throw DomainError("hurwitz_zeta_ds: requires Re w > 0 " + args(s, w));
  return require_finite(em_parts(s, w, m, shift_for(s, w)).Z[m], "hurwitz_zeta_ds");
}

cplx hurwitz_zeta_pole_removed(cplx s, cplx w, int m) {
  if (m < 0 || m > 2) throw DomainError("hurwitz_zeta_pole_removed: derivative order must be 0..2");
  if (!(w.real() > 0.0))
    throw DomainError("hurwitz_zeta_pole_removed: requires Re w > 0 " + args(s, w));
  if (m == 0 && s != cplx(1.0, 0.0) && (s.real() <= kReflectBelow || is_nonpositive_integer(s)))
    return (s - 1.0) * hurwitz_zeta(s, w);
  return require_finite(em_parts(s, w, m, shift_for(s, w)).P[m], "hurwitz_zeta_pole_removed");
}

cplx hurwitz_zeta_regular(cplx s, cplx w, int m) {
  if (m < 0 || m > 2) throw DomainError("hurwitz_zeta_regular: derivative order must be 0..2");
  if (!(w.real() > 0.0)) throw DomainError("hurwitz_zeta_regular: requires Re w > 0 " + args(s, w));
  if (m == 0 && (s.real() <= kReflectBelow || is_nonpositive_integer(s)))
    return hurwitz_zeta(s, w) - 1.0 / (s - 1.0);
  return require_finite(em_parts(s, w, m, shift_for(s, w)).G[m], "hurwitz_zeta_regular");
}

HurwitzMarkers hurwitz_zeta_markers(cplx w) {
  if (!(w.real() > 0.0))
    throw DomainError("hurwitz_zeta_markers: requires Re w > 0 (w=" + format_complex(w) + ")");
  return {-digamma(w), log_gamma(w) - 0.5 * kLog2Pi};
}

cplx riemann_zeta(cplx s) { return hurwitz_zeta(s, 1.0); }

cplx dirichlet_beta(cplx s) {
  // At s = 1 the poles cancel; the finite parts give psi(3/4) - psi(1/4) = pi.
  if (s == cplx(1.0, 0.0)) return kPi / 4.0;
  return std::exp(-s * std::log(4.0)) * (hurwitz_zeta(s, 0.25) - hurwitz_zeta(s, 0.75));
}

double dirichlet_beta_deriv0() {
  // d/ds [4^{-s} (zeta(s,1/4) - zeta(s,3/4))] at s = 0, with zeta(0,w) = 1/2 - w.
  const cplx d = hurwitz_zeta_ds(0.0, 0.25, 1) - hurwitz_zeta_ds(0.0, 0.75, 1);
  return (-std::log(4.0) * 0.5 + d).real();
}

}  // namespace superzeta::specfun
