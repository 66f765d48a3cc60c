#include <random>
#include <vector>

#include "doctest.h"
#include "superzeta/specfun.hpp"

using namespace superzeta;
using namespace superzeta::specfun;

namespace {

bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

// B_n(w) built from B_0 = 1, B_n' = n B_{n-1}, int_0^1 B_n = 0 (n >= 1).
std::vector<std::vector<double>> bernoulli_polys_by_recurrence(int nmax) {
  std::vector<std::vector<double>> p{{1.0}};
  for (int n = 1; n <= nmax; ++n) {
    std::vector<double> c(n + 1, 0.0);
    for (int k = 0; k < n; ++k) c[k + 1] = n * p[n - 1][k] / (k + 1);
    double integral = 0.0;
    for (int k = 1; k <= n; ++k) integral += c[k] / (k + 1);
    c[0] = -integral;
    p.push_back(c);
  }
  return p;
}

double eval_poly(const std::vector<double>& c, double w) {
  double r = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) r = r * w + c[k];
  return r;
}

}  // namespace

TEST_CASE("Bernoulli and Euler tables") {
  CHECK(bernoulli_number(1) == Rational(-1, 2));
  CHECK(bernoulli_number(2) == Rational(1, 6));
  CHECK(bernoulli_number(12) == Rational(-691, 2730));
  for (int k = 1; 2 * k + 1 <= kMaxSpecialIndex; ++k) CHECK(bernoulli_number(2 * k + 1) == 0);
  CHECK(euler_number(0) == 1);
  CHECK(euler_number(2) == -1);
  CHECK(euler_number(3) == 0);
  CHECK(euler_number(4) == 5);
  for (int k = 0; 2 * k + 1 <= kMaxSpecialIndex; ++k) CHECK(euler_number(2 * k + 1) == 0);
  CHECK_THROWS_AS(bernoulli_number(65), DomainError);
  CHECK_THROWS_AS(euler_number(-1), DomainError);
}

TEST_CASE("Euler numbers match the sech generating function") {
  // E_n = n! [t^n] sech t; Taylor coefficients by a Cauchy circle of radius 1
  // (sech has its nearest poles at +-i pi/2).
  const int nodes = 256;
  for (int n = 0; n <= 12; ++n) {
    cplx c = 0.0;
    for (int j = 0; j < nodes; ++j) {
      const cplx u = std::polar(1.0, 2.0 * kPi * j / nodes);
      c += 1.0 / std::cosh(u) * std::pow(u, -n);
    }
    c /= double(nodes);
    CHECK(std::abs(factorial(n) * c.real() - euler_number_d(n)) < 1e-14 * factorial(n));
  }
}

TEST_CASE("Bernoulli polynomials") {
  CHECK(close(bernoulli_polynomial(1, 0.0), -0.5, 1e-15));
  CHECK(close(bernoulli_polynomial(0, 0.7), 1.0, 1e-15));
  CHECK(close(bernoulli_polynomial(2, 1.0), 1.0 / 6.0, 1e-15));
  const auto oracle = bernoulli_polys_by_recurrence(12);
  for (int n = 0; n <= 12; ++n)
    for (double w : {0.0, 0.25, 0.5, 1.0, 1.7, 3.0})
      CHECK(close(bernoulli_polynomial(n, w), eval_poly(oracle[n], w), 1e-12));
  for (int n = 0; n <= 20; ++n)
    if (n != 1) CHECK(close(bernoulli_polynomial(n, 0.0), bernoulli_number_d(n), 1e-14));
  CHECK_THROWS_AS(bernoulli_polynomial(70, 0.5), DomainError);
}

TEST_CASE("Hurwitz zeta examples and errors") {
  CHECK(close(hurwitz_zeta(-1.0, 1.0), -1.0 / 12.0, 1e-14));
  CHECK(close(hurwitz_zeta(0.0, 0.3), 0.2, 1e-14));
  // Direct summation with the leading Euler-Maclaurin tail correction.
  const int K = 1000000;
  double direct = 0.0;
  for (int k = K; k >= 1; --k) direct += 1.0 / (double(k) * k);
  direct += 1.0 / K - 0.5 / (double(K) * K) + 1.0 / (6.0 * K * double(K) * K);
  CHECK(close(hurwitz_zeta(2.0, 1.0), direct, 1e-13));
  CHECK(close(hurwitz_zeta(2.0, 1.0), kPi * kPi / 6.0, 1e-14));
  CHECK_THROWS_AS(hurwitz_zeta(1.0, 0.5), PoleError);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), DomainError);
  CHECK_THROWS_AS(hurwitz_zeta(2.0, -0.5), DomainError);
}

TEST_CASE("Hurwitz zeta at nonpositive integers") {
  for (int n = 0; n <= 20; ++n)
    for (double w : {0.25, 0.5, 1.0, 1.7}) {
      const cplx expected = -bernoulli_polynomial(n + 1, w) / double(n + 1);
      CHECK(close(hurwitz_zeta(double(-n), w), expected, 1e-12));
    }
}

TEST_CASE("Hurwitz ladder identity") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> sr(-12.0, 12.0), si(-30.0, 30.0), wd(0.05, 4.0);
  for (int trial = 0; trial < 300; ++trial) {
    const cplx s(sr(rng), trial % 3 == 0 ? 0.0 : si(rng));
    const double w = wd(rng);
    const cplx lhs = hurwitz_zeta(s, w) - hurwitz_zeta(s, w + 1.0);
    const cplx rhs = std::pow(w, -s);
    const double scale = std::abs(hurwitz_zeta(s, w)) + std::abs(rhs) + 1.0;
    CHECK(std::abs(lhs - rhs) <= 1e-12 * scale);
  }
}

TEST_CASE("Hurwitz at large |s|") {
  // zeta(30, w) by direct summation (terms fall off like k^{-30}).
  for (double w : {0.5, 2.0, 7.5}) {
    double direct = 0.0;
    for (int k = 200; k >= 0; --k) direct += std::pow(k + w, -30.0);
    CHECK(close(hurwitz_zeta(30.0, w), direct, 1e-13));
  }
  // Multiplication formula zeta(s, 1/2) = (2^s - 1) zeta(s) across the
  // reflection threshold and at complex s.
  for (cplx s : {cplx(-4.7), cplx(-5.3), cplx(-20.5), cplx(-35.25, 3.0), cplx(-49.5), cplx(0.5, 40.0),
                 cplx(45.0, -5.0)}) {
    const cplx lhs = hurwitz_zeta(s, 0.5);
    const cplx rhs = (std::pow(2.0, s) - 1.0) * riemann_zeta(s);
    CHECK(std::abs(lhs - rhs) <= 1e-11 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("quarter-shift identities") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> sr(-8.0, 10.0), si(-20.0, 20.0);
  for (int trial = 0; trial < 100; ++trial) {
    const cplx s(sr(rng), si(rng));
    if (std::abs(s - 1.0) < 1e-3) continue;
    CHECK(std::abs(hurwitz_zeta(s, 0.5) - (std::pow(2.0, s) - 1.0) * riemann_zeta(s)) <=
          1e-12 * std::max(1.0, std::abs(hurwitz_zeta(s, 0.5))));
    const cplx lhs = std::pow(2.0, -2.0 * s) * hurwitz_zeta(s, 0.25);
    const cplx rhs = 0.5 * ((1.0 - std::pow(2.0, -s)) * riemann_zeta(s) + dirichlet_beta(s));
    CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("Hurwitz markers") {
  auto m1 = hurwitz_zeta_markers(1.0);
  CHECK(close(m1.fp_at_1, kEulerGamma, 1e-14));
  CHECK(close(m1.s_deriv_at_0, -0.5 * kLog2Pi, 1e-14));
  auto mh = hurwitz_zeta_markers(0.5);
  CHECK(close(mh.s_deriv_at_0, -0.5 * std::log(2.0), 1e-14));
  CHECK_THROWS_AS(hurwitz_zeta_markers(-1.0), DomainError);
  // Against numerical limits of the Hurwitz function itself.
  for (double w : {0.25, 0.5, 1.0, 1.7, 6.0}) {
    const auto m = hurwitz_zeta_markers(w);
    const double h = 1e-4;
    const cplx fp = 0.5 * (hurwitz_zeta(1.0 + h, w) + hurwitz_zeta(1.0 - h, w));
    CHECK(close(fp, m.fp_at_1, 1e-7));
    CHECK(close(hurwitz_zeta_ds(0.0, w, 1), m.s_deriv_at_0, 1e-12));
    CHECK(close(hurwitz_zeta_pole_removed(1.0, w, 1), m.fp_at_1, 1e-12));
    CHECK(close(hurwitz_zeta_pole_removed(1.0, w, 0), 1.0, 1e-14));
  }
}

TEST_CASE("s-derivatives agree with finite differences") {
  for (cplx s : {cplx(0.3, 2.0), cplx(2.5), cplx(-1.5, 0.5), cplx(0.5, 25.0)}) {
    for (double w : {0.3, 1.0, 2.2}) {
      const double h = 1e-4;
      const cplx d1 = (hurwitz_zeta(s + h, w) - hurwitz_zeta(s - h, w)) / (2 * h);
      const cplx d2 = (hurwitz_zeta(s + h, w) - 2.0 * hurwitz_zeta(s, w) + hurwitz_zeta(s - h, w)) / (h * h);
      CHECK(std::abs(hurwitz_zeta_ds(s, w, 1) - d1) < 1e-6 * std::max(1.0, std::abs(d1)));
      CHECK(std::abs(hurwitz_zeta_ds(s, w, 2) - d2) < 1e-4 * std::max(1.0, std::abs(d2)));
      const cplx r1 = ((s + h - 1.0) * hurwitz_zeta(s + h, w) - (s - h - 1.0) * hurwitz_zeta(s - h, w)) / (2 * h);
      CHECK(std::abs(hurwitz_zeta_pole_removed(s, w, 1) - r1) < 1e-6 * std::max(1.0, std::abs(r1)));
    }
  }
}

TEST_CASE("Dirichlet beta") {
  CHECK(close(dirichlet_beta(0.0), 0.5, 1e-14));
  CHECK(std::abs(dirichlet_beta(-1.0)) < 1e-14);
  for (int n = 0; n <= 10; ++n)
    CHECK(close(dirichlet_beta(double(-n)), 0.5 * euler_number_d(n), 1e-12));
  const double expected = -1.5 * std::log(2.0) - std::log(kPi) + 2.0 * log_gamma(0.25);
  CHECK(std::abs(dirichlet_beta_deriv0() - expected) < 1e-12);
  CHECK(close(dirichlet_beta(1.0), kPi / 4.0, 1e-14));
  CHECK(close(dirichlet_beta(2.0), 0.915965594177219015054603514932, 1e-14));  // Catalan
}

TEST_CASE("gamma family") {
  CHECK(close(log_gamma(cplx(0.5)), 0.5 * std::log(kPi), 1e-14));
  CHECK(std::abs(log_gamma(cplx(1.0))) < 1e-13);
  CHECK(std::abs(log_gamma(cplx(2.0))) < 1e-13);
  CHECK_THROWS_AS(log_gamma(cplx(-2.0)), PoleError);
  CHECK(reciprocal_gamma(cplx(-3.0)) == cplx(0.0));
  // digamma(1) = -gamma; gamma from its defining series with asymptotic tail.
  const int K = 100000;
  double h = 0.0;
  for (int k = K; k >= 1; --k) h += 1.0 / k;
  const double gamma_series = h - std::log(double(K)) - 0.5 / K + 1.0 / (12.0 * K * double(K));
  CHECK(std::abs(digamma(1.0) + gamma_series) < 1e-13);
  CHECK(close(polygamma(1, 1.0), kPi * kPi / 6.0, 1e-14));
  for (double x : {0.1, 0.7, 3.3, 12.0, 40.5}) CHECK(close(log_gamma(cplx(x)), std::lgamma(x), 1e-13));
  // Reflection Gamma(z) Gamma(1-z) = pi / sin(pi z).
  for (cplx z : {cplx(0.3, 0.4), cplx(0.5, 10.0), cplx(0.1, -3.0)}) {
    const cplx lhs = std::exp(log_gamma(z) + log_gamma(1.0 - z));
    const cplx rhs = kPi / std::sin(kPi * z);
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::abs(rhs));
  }
  // polygamma(m) against differences of polygamma(m-1) and of log_gamma.
  for (cplx z : {cplx(0.5, 0.5), cplx(2.0, -7.0), cplx(-2.5, 1.0)}) {
    const double e = 1e-5;
    const cplx d = (log_gamma(z + e) - log_gamma(z - e)) / (2 * e);
    CHECK(std::abs(polygamma(0, z) - d) < 1e-8 * std::max(1.0, std::abs(d)));
    for (int m = 1; m <= 4; ++m) {
      const cplx dm = (polygamma(m - 1, z + e) - polygamma(m - 1, z - e)) / (2 * e);
      CHECK(std::abs(polygamma(m, z) - dm) < 1e-6 * std::max(1.0, std::abs(dm)));
    }
  }
}

TEST_CASE("upper incomplete gamma") {
  for (double z : {0.1, 0.7, 1.5, 4.0, 20.0}) {
    CHECK(close(upper_incomplete_gamma(1.0, z), std::exp(-z), 1e-13));
    CHECK(close(upper_incomplete_gamma(0.5, z), std::sqrt(kPi) * std::erfc(std::sqrt(z)), 1e-13));
  }
  // Complex order against a truncated substitution quadrature y = z + u/(1-u).
  for (cplx a : {cplx(0.3, 0.2), cplx(0.001, 0.0), cplx(0.9, -1.0)}) {
    for (double z : {0.2, 1.3, 6.0}) {
      const int n = 200000;
      cplx acc = 0.0;
      for (int k = 0; k < n; ++k) {
        const double u = (k + 0.5) / n;
        const double y = z + u / (1.0 - u);
        acc += std::exp((a - 1.0) * std::log(y) - y) / ((1.0 - u) * (1.0 - u));
      }
      acc /= double(n);
      CHECK(std::abs(upper_incomplete_gamma(a, z) - acc) < 1e-8 * std::max(1.0, std::abs(acc)));
    }
  }
}

TEST_CASE("regular part of hurwitz zeta") {
  for (double w : {0.25, 1.0, 1.7}) {
    for (cplx s : {cplx(1.3, 0.0), cplx(0.5, 2.0), cplx(-2.5, 0.7), cplx(3.0, -1.0)}) {
      const cplx ref = hurwitz_zeta(s, w) - 1.0 / (s - 1.0);
      CHECK(std::abs(hurwitz_zeta_regular(s, w) - ref) < 1e-12 * std::max(1.0, std::abs(ref)));
      const cplx ref1 = hurwitz_zeta_ds(s, w, 1) + 1.0 / ((s - 1.0) * (s - 1.0));
      CHECK(std::abs(hurwitz_zeta_regular(s, w, 1) - ref1) < 1e-11 * std::max(1.0, std::abs(ref1)));
    }
    // finite part at s = 1 is -psi(w)
    CHECK(std::abs(hurwitz_zeta_regular(1.0, w) + digamma(w)) < 1e-14);
    const double h = 1e-4;
    const cplx d2 = (hurwitz_zeta_regular(1.0 + h, w) - 2.0 * hurwitz_zeta_regular(1.0, w) +
                     hurwitz_zeta_regular(1.0 - h, w)) / (h * h);
    CHECK(std::abs(hurwitz_zeta_regular(1.0, w, 2) - d2) < 1e-6);
  }
}
