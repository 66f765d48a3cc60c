#include "superzeta/tables.hpp"

#include <cmath>
#include <numbers>

#include "superzeta/cumulants.hpp"
#include "superzeta/specfun.hpp"

namespace superzeta {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGamma = std::numbers::egamma;
const double kLn2 = std::log(2.0);

double zeta_n(int n) { return specfun::riemann_zeta(double(n)).real(); }
double beta_n(int n) { return specfun::dirichlet_beta(double(n)).real(); }
double bern(int n) { return specfun::bernoulli_number_d(n); }
double euler(int n) { return specfun::euler_number_d(n); }
double log_gamma_quarter_sq_over_pi() { return 2.0 * std::lgamma(0.25) - std::log(kPi); }

std::string tag(const char* base, int n) { return std::string(base) + ":" + std::to_string(n); }

double tolerance_for(const EvalResult& r) {
  switch (r.method) {
    case Method::integral_rep: return kTolIntegral;
    case Method::direct_sum: return kTolDirect;
    default: return kTolAlgebraic;
  }
}

class Builder {
 public:
  Builder(SpecialValueTable& t) : t_(t) {}
  void add(std::string marker, int n, cplx closed, std::optional<EvalResult> check, std::string note = {}) {
    TableRow row;
    row.marker = std::move(marker);
    row.n = n;
    row.closed = closed;
    row.note = std::move(note);
    if (check) {
      row.tolerance = tolerance_for(*check);
      row.pass = std::abs(closed - check->value) <= row.tolerance;
      row.check = check;
    }
    t_.rows.push_back(std::move(row));
  }

 private:
  SpecialValueTable& t_;
};

EvalResult algebraic(cplx v) {
  EvalResult r;
  r.value = v;
  r.method = Method::closed_form;
  return r;
}

// Z1(-n, x) through the Hurwitz form of the shadow function.
EvalResult hurwitz_minus_n(const PrimaryFunction& P, int n, cplx x) {
  return algebraic(-shadow_zeta(P, -double(n), x) + double(P.q) * std::pow(x - 1.0, n));
}

std::optional<EvalResult> integral_or(const PrimaryFunction& P, cplx s, cplx x, std::optional<EvalResult> fallback) {
  if (z1_integral_available(P, s, x)) return z1_integral(P, s, x);
  return fallback;
}

std::optional<EvalResult> deriv0_check(const PrimaryFunction& P, cplx x) {
  try {
    return z1_integral_deriv0(P, x);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

std::optional<EvalResult> fp1_check(const PrimaryFunction& P, cplx x) {
  if (!z1_integral_available(P, 0.9, x)) return std::nullopt;
  return z1_fp1_extrapolated(P, x);
}

std::optional<EvalResult> direct_check(const PrimaryFunction& P, const ZeroCache& cache, int n, cplx x) {
  if (cache.size() == 0) return std::nullopt;
  return z1_direct(P, cache, double(n), x);
}

// g_0..g_N, closed where known.
std::vector<double> cumulant_values(const PrimaryFunction& P, int N, std::vector<std::string>& notes) {
  const auto numeric = cumulants_numeric(P, std::max(N, 1));
  std::vector<double> g = numeric.g;
  notes.assign(g.size(), "g numeric");
  if (P.g0_closed) {
    g[0] = *P.g0_closed;
    notes[0] = "";
  }
  if (P.g1_closed) {
    g[1] = *P.g1_closed;
    notes[1] = "";
  }
  return g;
}

void table1(const PrimaryFunction& P, const ZeroCache& cache, int N, cplx x, Builder& b) {
  for (int n = N; n >= 1; --n) {
    const cplx closed = z1_closed(P, Z1Marker::minus_n, x, n).value;
    b.add(tag("minus_n", n), -n, closed, integral_or(P, -double(n), x, hurwitz_minus_n(P, n, x)));
  }
  b.add("zero", 0, z1_closed(P, Z1Marker::zero, x).value, integral_or(P, 0.0, x, hurwitz_minus_n(P, 0, x)));
  b.add("deriv0", 0, z1_closed(P, Z1Marker::deriv0, x).value, deriv0_check(P, x));
  b.add("fp1", 1, z1_closed(P, Z1Marker::fp1, x).value, fp1_check(P, x));
  for (int n = 1; n <= N; ++n)
    b.add(tag("plus_n", n), n, z1_closed(P, Z1Marker::plus_n, x, n).value, direct_check(P, cache, n, x));
}

void table2(const PrimaryFunction& P, const ZeroCache& cache, int N, cplx v, Builder& b) {
  for (int m = N; m >= 1; --m)
    b.add(tag("minus_m", m), -m, z2_closed(P, Z2Marker::minus_m, v, m).value, z2_terminating(P, m, v));
  std::optional<EvalResult> zero_check;
  if (cache.size() > 0 && v != 0.0) zero_check = z2_eval(P, cache, 0.0, v, Method::expansion);
  b.add("zero", 0, z2_closed(P, Z2Marker::zero, v).value, zero_check);
  std::optional<EvalResult> d0;
  const cplx x = 0.5 + std::sqrt(v);
  if (auto z = deriv0_check(P, x)) {
    d0 = *z;
    d0->value -= P.stirling.b1 * (x - 0.5);
  }
  b.add("deriv0", 0, z2_closed(P, Z2Marker::deriv0, v).value, d0);
  for (int m = 1; m <= N; ++m) {
    std::optional<EvalResult> direct;
    if (cache.size() > 0) direct = z2_direct(P, cache, double(m), v);
    b.add(tag("plus_m", m), m, z2_closed(P, Z2Marker::plus_m, v, m).value, direct);
  }
}

void table3(const PrimaryFunction& P, const ZeroCache& cache, int N, cplx v, Builder& b) {
  const bool quarter = v == 0.25;
  if (!quarter && v != 0.0) throw DomainError("table 3: v must be 0 or 1/4");
  auto z1m = [&](int k) { return z1_closed(P, Z1Marker::minus_n, 0.5, k).value; };
  for (int m = N; m >= 1; --m) {
    cplx val = 0.0;
    if (quarter) {
      for (int j = 0; j <= m; ++j)
        val += specfun::binomial(m, j) * (j % 2 ? -1.0 : 1.0) * std::pow(2.0, -2 * (m - j)) * z1m(2 * j);
      val *= 0.5;
    } else {
      val = 0.5 * (m % 2 ? -1.0 : 1.0) * z1m(2 * m);
    }
    b.add(tag("minus_m", m), -m, val, algebraic(z2_closed(P, Z2Marker::minus_m, v, m).value));
  }
  b.add("zero", 0, 0.5 * z1_closed(P, Z1Marker::zero, 0.5).value, algebraic(z2_closed(P, Z2Marker::zero, v).value));
  const cplx d0 = quarter ? -0.5 * P.stirling.b1 + z1_closed(P, Z1Marker::deriv0, 1.0).value
                          : z1_closed(P, Z1Marker::deriv0, 0.5).value;
  b.add("deriv0", 0, d0, algebraic(z2_closed(P, Z2Marker::deriv0, v).value));
  for (int m = 1; m <= N; ++m) {
    cplx val = 0.0;
    if (quarter) {
      for (int l = 0; l < m; ++l)
        val += specfun::binomial(m + l - 1, m - 1) * z1_closed(P, Z1Marker::plus_n, 1.0, m - l).value;
    } else {
      val = 0.5 * (m % 2 ? -1.0 : 1.0) * z1_closed(P, Z1Marker::plus_n, 0.5, 2 * m).value;
    }
    std::optional<EvalResult> direct;
    if (cache.size() > 0) direct = z2_direct(P, cache, double(m), v);
    b.add(tag("plus_m", m), m, val, direct);
  }
}

void table4(const PrimaryFunction& P, const ZeroCache& cache, int N, Builder& b) {
  const auto& gd = std::get<DirichletGammaData>(P.gamma_data);
  const double a = gd.a, d = double(gd.d);
  std::vector<std::string> notes;
  const auto g = cumulant_values(P, N, notes);
  for (int n = N; n >= 1; --n) {
    const double val = ((a - 1.0) * (std::pow(2.0, n) - 1.0) + a * std::pow(2.0, n)) * bern(n + 1) / (n + 1);
    b.add(tag("minus_n", n), -n, val, integral_or(P, -double(n), 1.0, std::nullopt));
  }
  b.add("zero", 0, a / 2.0, integral_or(P, 0.0, 1.0, std::nullopt));
  b.add("deriv0", 0, 0.5 * ((1.0 - a) * kLn2 + a * std::log(kPi)) + g[0], deriv0_check(P, 1.0), notes[0]);
  b.add("fp1", 1, (a - 0.5) * kLn2 - kGamma / 2.0 + g[1], fp1_check(P, 1.0), notes[1]);
  b.add(tag("plus_n", 1), 1, (a - 1.0) * kLn2 - 0.5 * std::log(kPi / d) - kGamma / 2.0 + g[1],
        direct_check(P, cache, 1, 1.0), notes[1]);
  for (int n = 2; n <= N; ++n) {
    const double p = std::pow(2.0, -n);
    const double val = ((a - 1.0) * (1.0 - p) - a * p) * zeta_n(n) + g[n] / specfun::factorial(n - 1);
    b.add(tag("plus_n", n), n, val, direct_check(P, cache, n, 1.0), notes[n]);
  }
}

void table5(const PrimaryFunction& P, const ZeroCache& cache, int N, Builder& b) {
  const auto& gd = std::get<DirichletGammaData>(P.gamma_data);
  const double a = gd.a, d = double(gd.d);
  for (int n = N; n >= 1; --n) {
    const double val = n % 2 == 0 ? std::pow(2.0, -n - 1) * (a - 0.5) * euler(n)
                                  : -0.5 * (1.0 - std::pow(2.0, -n)) * bern(n + 1) / (n + 1);
    b.add(tag("minus_n", n), -n, val, integral_or(P, -double(n), 0.5, std::nullopt));
  }
  b.add("zero", 0, 0.5 * (a - 0.5), integral_or(P, 0.0, 0.5, std::nullopt));
  const double logL = std::log(std::abs(l_value(P, 0.5)));
  b.add("deriv0", 0, (0.75 - a) * kLn2 + (a - 0.5) * log_gamma_quarter_sq_over_pi() - logL, deriv0_check(P, 0.5));
  b.add("fp1", 1, 0.5 * std::log(2.0 * kPi / d), fp1_check(P, 0.5));
  for (int n = 1; n <= N; ++n) {
    double val = 0.0;
    if (n % 2 == 0) {
      const double dl = log_l_derivative(P, 0.5, n).real();
      val = -0.5 * ((std::pow(2.0, n) - 1.0) * zeta_n(n) + (1.0 - 2.0 * a) * std::pow(2.0, n) * beta_n(n)) -
            dl / specfun::factorial(n - 1);
    }
    b.add(tag("plus_n", n), n, val, direct_check(P, cache, n, 0.5));
  }
}

DedekindGammaData dedekind_data(const PrimaryFunction& P) {
  if (P.kind == PrimaryKind::dirichlet) throw DomainError("tables 6 and 7 need the Riemann or a Dedekind primary");
  return std::get<DedekindGammaData>(P.gamma_data);
}

void table6(const PrimaryFunction& P, const ZeroCache& cache, int N, Builder& b) {
  const auto k = dedekind_data(P);
  const double r1 = k.r1, r2 = k.r2, nK = k.n_K, dK = std::fabs(double(k.d_K));
  std::vector<std::string> notes;
  const auto g = cumulant_values(P, N, notes);
  for (int n = N; n >= 1; --n) {
    const double val = (-r1 * (std::pow(2.0, n) - 1.0) + r2) * bern(n + 1) / (n + 1) + 1.0;
    b.add(tag("minus_n", n), -n, val, integral_or(P, -double(n), 1.0, hurwitz_minus_n(P, n, 1.0)));
  }
  b.add("zero", 0, 0.5 * r2 + 2.0, integral_or(P, 0.0, 1.0, hurwitz_minus_n(P, 0, 1.0)));
  auto d0 = deriv0_check(P, 1.0);
  if (!d0) d0 = algebraic(z1_closed(P, Z1Marker::deriv0, 1.0).value);
  b.add("deriv0", 0, 0.5 * ((r1 + r2) * kLn2 + r2 * std::log(kPi)) + g[0], d0, notes[0]);
  b.add("fp1", 1, -0.5 * r1 * kLn2 + 1.0 - 0.5 * nK * kGamma + g[1], fp1_check(P, 1.0), notes[1]);
  b.add(tag("plus_n", 1), 1,
        0.5 * std::log(dK) - (r1 + r2) * kLn2 - 0.5 * nK * std::log(kPi) + 1.0 - 0.5 * nK * kGamma + g[1],
        direct_check(P, cache, 1, 1.0), notes[1]);
  for (int n = 2; n <= N; ++n) {
    const double val =
        -(r1 * (1.0 - std::pow(2.0, -n)) + r2) * zeta_n(n) + 1.0 + g[n] / specfun::factorial(n - 1);
    b.add(tag("plus_n", n), n, val, direct_check(P, cache, n, 1.0), notes[n]);
  }
}

void table7(const PrimaryFunction& P, const ZeroCache& cache, int N, Builder& b) {
  const auto k = dedekind_data(P);
  const double r1 = k.r1, r2 = k.r2, nK = k.n_K, dK = std::fabs(double(k.d_K));
  for (int n = N; n >= 1; --n) {
    const double val = n % 2 == 0 ? std::pow(2.0, 1 - n) * (1.0 - r1 * euler(n) / 8.0)
                                  : -0.5 * nK * (1.0 - std::pow(2.0, -n)) * bern(n + 1) / (n + 1);
    b.add(tag("minus_n", n), -n, val, integral_or(P, -double(n), 0.5, hurwitz_minus_n(P, n, 0.5)));
  }
  b.add("zero", 0, 2.0 - r1 / 4.0, integral_or(P, 0.0, 0.5, hurwitz_minus_n(P, 0, 0.5)));
  const double logZ = std::log(std::abs(l_value(P, 0.5)));
  auto d0 = deriv0_check(P, 0.5);
  if (!d0) d0 = algebraic(z1_closed(P, Z1Marker::deriv0, 0.5).value);
  b.add("deriv0", 0, (2.0 + 0.75 * r1 + 0.5 * r2) * kLn2 - 0.5 * r1 * log_gamma_quarter_sq_over_pi() - logZ, d0);
  b.add("fp1", 1, 0.5 * (nK * std::log(2.0 * kPi) - std::log(dK)), fp1_check(P, 0.5));
  for (int n = 1; n <= N; ++n) {
    double val = 0.0;
    if (n % 2 == 0) {
      const double p = std::pow(2.0, n);
      const double dl = log_l_derivative(P, 0.5, n).real();
      val = -0.5 * nK * (p - 1.0) * zeta_n(n) - 0.5 * r1 * p * beta_n(n) + 2.0 * p - dl / specfun::factorial(n - 1);
    }
    b.add(tag("plus_n", n), n, val, direct_check(P, cache, n, 0.5));
  }
}

}  // namespace

bool SpecialValueTable::all_pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

SpecialValueTable special_value_table(const PrimaryFunction& P, const ZeroCache& cache, int table, int n_max,
                                      cplx parameter) {
  if (n_max < 1 || n_max > 10) throw DomainError("special_value_table: n_max must be in 1..10");
  if (cache.size() > 0 && cache.primary_id != P.id)
    throw DomainError("special_value_table: cache belongs to " + cache.primary_id);
  SpecialValueTable t;
  t.table = table;
  t.primary_id = P.id;
  t.parameter = parameter;
  Builder b(t);
  switch (table) {
    case 1: table1(P, cache, n_max, parameter, b); break;
    case 2: table2(P, cache, n_max, parameter, b); break;
    case 3: table3(P, cache, n_max, parameter, b); break;
    case 4:
    case 5:
      if (P.kind != PrimaryKind::dirichlet) throw DomainError("tables 4 and 5 need a Dirichlet primary");
      if (table == 4) {
        t.parameter = 1.0;
        table4(P, cache, n_max, b);
      } else {
        t.parameter = 0.5;
        table5(P, cache, n_max, b);
      }
      break;
    case 6:
      t.parameter = 1.0;
      table6(P, cache, n_max, b);
      break;
    case 7:
      t.parameter = 0.5;
      table7(P, cache, n_max, b);
      break;
    default: throw DomainError("special_value_table: table must be 1..7");
  }
  return t;
}

}  // namespace superzeta
