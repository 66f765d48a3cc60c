#include <cmath>
#include <numbers>

#include "doctest.h"
#include "superzeta/identities.hpp"
#include "superzeta/specfun.hpp"
#include "superzeta/superzeta.hpp"
#include "superzeta/tables.hpp"

using namespace superzeta;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGamma = std::numbers::egamma;

const PrimaryFunction& riemann() {
  static const auto P = build_riemann();
  return P;
}
const PrimaryFunction& chi4() {
  static const auto P = build_dirichlet(-4);
  return P;
}
const ZeroCache& riemann_zeros() {
  static const auto c = locate_zeros(riemann(), 300.0);
  return c;
}
const ZeroCache& chi4_zeros() {
  static const auto c = locate_zeros(chi4(), 300.0);
  return c;
}

bool near(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

TEST_CASE("first family closed values") {
  const auto& P = riemann();
  CHECK(near(z1_closed(P, Z1Marker::zero, 1.0).value, 2.0, 1e-14));
  const double zpp = 1.0 + kGamma / 2.0 - 0.5 * std::log(4.0 * kPi);
  CHECK(near(z1_closed(P, Z1Marker::plus_n, 1.0, 1).value, zpp, 1e-13));
  CHECK(std::abs(zpp - 0.0230957) < 1e-7);
  CHECK(near(z1_closed(P, Z1Marker::fp1, 0.5).value, 0.5 * std::log(2.0 * kPi), 1e-13));
  CHECK(near(z1_closed(chi4(), Z1Marker::deriv0, 1.0).value, std::log(4.0) - 0.5 * std::log(kPi), 1e-13));
  // Odd positive integers vanish at the symmetry centre.
  CHECK(std::abs(z1_closed(P, Z1Marker::plus_n, 0.5, 3).value) < 1e-15);
}

TEST_CASE("first family direct sums") {
  const auto& P = riemann();
  const auto& c = riemann_zeros();
  const auto odd = z1_direct(P, c, 3.0, 0.5);
  CHECK(odd.method == Method::direct_sum);
  CHECK(std::abs(odd.value) <= odd.err_est + 1e-15);
  const auto d2 = z1_direct(P, c, 2.0, 1.0);
  CHECK(near(d2.value, z1_closed(P, Z1Marker::plus_n, 1.0, 2).value, d2.err_est + 1e-8));
  CHECK(d2.zeros_used == int(c.size()));
  const auto a = z1_direct(P, c, 2.0, 2.0);
  const auto b = z1_direct(P, c, 2.0, -1.0);
  CHECK(near(a.value, b.value, a.err_est + b.err_est));
  CHECK_THROWS_AS(z1_direct(P, c, 0.5, 2.0), DomainError);
}

TEST_CASE("first family integral representation") {
  const auto& P = riemann();
  for (cplx x : {cplx(2.0), cplx(3.5), cplx(0.5, 1.0)}) {
    const auto r = z1_integral(P, 0.0, x);
    CHECK(r.method == Method::integral_rep);
    CHECK(near(r.value, P.stirling.a1 * x + P.stirling.a0 + 1.0, 1e-10));
  }
  const auto y1 = z1_integral(P, 0.5, 2.0, 1.0);
  const auto y2 = z1_integral(P, 0.5, 2.0, 2.0);
  CHECK(near(y1.value, y2.value, 1e-8));
  CHECK(near(z1_residue_extrapolated(P, 2.0).value, -P.stirling.a1, 1e-6));
  CHECK(near(z1_fp1_extrapolated(P, 2.0).value, z1_closed(P, Z1Marker::fp1, 2.0).value, 1e-8));
  CHECK(near(z1_integral_deriv0(P, 2.0).value, z1_closed(P, Z1Marker::deriv0, 2.0).value, 1e-10));
  CHECK_FALSE(z1_integral_available(P, 0.0, 0.5));
  CHECK(z1_integral_available(P, 0.5, 0.5));
  // Negative integers.
  CHECK(near(z1_integral(P, -3.0, 2.0).value, z1_closed(P, Z1Marker::minus_n, 2.0, 3).value, 1e-9));
  // Complex s and x.
  const cplx s(0.3, 0.4), x(2.0, 0.5);
  CHECK(near(z1_integral(P, s, x, 1.0).value, z1_integral(P, s, x, 2.5).value, 1e-8));
  // J(0.3+0.4i, 2) by adaptive quadrature of zeta'/zeta at 20 digits.
  const cplx jref(-0.46953094385467467403, -0.2331429474080034296);
  for (double Y : {1.0, 2.0, 4.0}) CHECK(near(jay_integral(P, s, 2.0, 0, false, Y).value, jref, 1e-10));
}

TEST_CASE("automatic route selection") {
  const auto& P = riemann();
  const auto& c = riemann_zeros();
  CHECK(z1_eval(P, &c, 2.0, 2.0).method == Method::direct_sum);
  CHECK(z1_eval(P, &c, 0.5, 2.0).method == Method::integral_rep);
  CHECK(z1_eval(P, nullptr, 2.0, 2.0).method == Method::closed_form);
  CHECK(z2_eval(P, c, 0.3, 0.0).method == Method::relation);
  CHECK(z2_eval(P, c, 2.0, 1.0).method == Method::direct_sum);
  CHECK(z2_eval(P, c, 0.25, 3.0).method == Method::expansion);
  CHECK(z3_eval(P, c, 0.25, 0.3).method == Method::expansion);
}

TEST_CASE("second family") {
  const auto& P = riemann();
  const auto& c = riemann_zeros();
  // Relation with the first family at v = 0.
  const auto ov = z2_eval(P, c, 0.3, 0.0);
  CHECK(near(ov.value, z1_integral(P, 0.6, 0.5).value / (2.0 * std::cos(0.3 * kPi)), 1e-12));
  // Z2(1, 1/4) = Z1(1, 1).
  const auto q = z2_eval(P, c, 1.0, 0.25);
  CHECK(near(q.value, 1.0 + kGamma / 2.0 - 0.5 * std::log(4.0 * kPi), q.err_est + 1e-8));
  // Value at 0 does not depend on v.
  const cplx z0 = 0.5 * (0.5 * P.stirling.a1 + P.stirling.a0 + 1.0);
  CHECK(near(z0, 0.875, 1e-14));
  for (double v : {0.0, 0.5, 3.0}) CHECK(near(z2_eval(P, c, 0.0, v).value, z0, 1e-9));
  CHECK(near(z2_closed(P, Z2Marker::zero, 0.7).value, 0.875, 1e-14));
  CHECK(near(z2_closed(P, Z2Marker::plus_m, 0.0, 1).value, -0.5 * z1_closed(P, Z1Marker::plus_n, 0.5, 2).value,
             1e-14));
  // Degree-1 polynomial in v.
  const cplx a = z2_closed(P, Z2Marker::minus_m, 0.0, 1).value;
  const cplx b = z2_closed(P, Z2Marker::zero, 0.0).value;
  for (double v : {0.3, 2.0}) CHECK(near(z2_closed(P, Z2Marker::minus_m, v, 1).value, a + b * v, 1e-13));
  // Both square-root branches for complex v.
  const cplx v(-0.3, 0.8), r = std::sqrt(v);
  CHECK(near(log_xi(P, 0.5 + r), log_xi(P, 0.5 - r), 1e-12));
  CHECK_THROWS_AS(z2_closed(P, Z2Marker::deriv0, -1.0), DomainError);
}

TEST_CASE("second family polar data") {
  const auto& P = riemann();
  const auto& st = P.stirling;
  const auto p0 = z2_polar(P, 0, 1.3);
  CHECK(p0.order == 2);
  CHECK(near(p0.leading_coeff, st.a1 / (4.0 * kPi), 1e-15));
  CHECK(near(p0.residue, st.b1 / (2.0 * kPi), 1e-15));
  const auto p1 = z2_polar(P, 1, 0.0);
  const cplx r1 = -(shadow_zeta(P, -1.0, 0.5) + 0.5) / (2.0 * kPi);
  CHECK(near(p1.residue, r1, 1e-14));
  CHECK(near(z2_residue_at_zero(P, 1), r1, 1e-14));
  // Limit oracle for the double pole.
  const auto& c = riemann_zeros();
  std::vector<double> h{0.08, 0.04, 0.02, 0.01};
  std::vector<cplx> f;
  for (double e : h) f.push_back(e * e * z2_eval(P, c, 0.5 + e, 0.0).value);
  CHECK(near(extrapolate_to_zero(h, f).first, st.a1 / (4.0 * kPi), 1e-5));
}

TEST_CASE("third family") {
  const auto& P = riemann();
  const auto& c = riemann_zeros();
  CHECK(near(z3_eval(P, c, 1.5, 0.0).value, z2_eval(P, c, 1.5, 0.0).value, 1e-12));
  const auto up = z3_eval(P, c, 1.0, cplx(0.0, 0.3));
  const auto dn = z3_eval(P, c, 1.0, cplx(0.0, -0.3));
  const auto rhs = z1_direct(P, c, 2.0, 0.8);
  CHECK(near(-(up.value + dn.value), rhs.value, up.err_est + dn.err_est + rhs.err_est + 1e-8));
  // Positive terms: partial sums rise toward the reported value.
  const auto full = z3_eval(P, c, 2.0, 1.0);
  double partial = 0.0, last = 0.0;
  for (double t : c.ordinates()) {
    partial += std::pow(t + 1.0, -4.0);
    CHECK(partial > last);
    last = partial;
  }
  CHECK(partial < full.value.real());
  CHECK(full.value.real() - partial < 1e-6);
  const auto pn = z3_polar(P, 1, 0.3);
  CHECK(near(pn.residue, -P.stirling.a1 * 0.3 / (2.0 * kPi), 1e-15));
  REQUIRE(pn.finite_part.has_value());
  CHECK(near(*z3_polar(P, 1, 0.0).finite_part, z2_closed(P, Z2Marker::zero, 0.0).value, 1e-14));
  CHECK(near(z3_polar(P, 2, 0.0).residue, z2_residue_at_zero(P, 1), 1e-15));
  std::vector<double> h{0.04, 0.02, 0.01, 0.005};
  std::vector<cplx> f;
  for (double e : h) f.push_back(e * z3_eval(P, c, e, 0.3).value);
  CHECK(near(extrapolate_to_zero(h, f).first, -P.stirling.a1 * 0.3 / (2.0 * kPi), 1e-5));
  CHECK_THROWS_AS(z3_eval(P, c, 0.5, 0.3), PoleError);
}

TEST_CASE("special value tables") {
  const auto& c = riemann_zeros();
  for (int t : {1, 2, 3, 6, 7}) {
    const auto tab = special_value_table(riemann(), c, t, 4, t == 3 ? 0.25 : 2.0);
    CAPTURE(t);
    CHECK(tab.all_pass());
    for (const auto& row : tab.rows) CHECK(row.check.has_value());
  }
  for (int t : {4, 5}) CHECK(special_value_table(chi4(), chi4_zeros(), t).all_pass());
  CHECK_THROWS_AS(special_value_table(riemann(), c, 4), DomainError);
  CHECK_THROWS_AS(special_value_table(chi4(), chi4_zeros(), 6), DomainError);
}

TEST_CASE("Q(i) values add up") {
  const auto K = build_dedekind_quadratic(-4);
  const auto& Z = riemann();
  const auto& L = chi4();
  for (double x : {1.0, 0.5, 2.0}) {
    for (auto m : {Z1Marker::zero, Z1Marker::deriv0, Z1Marker::fp1}) {
      CHECK(near(z1_closed(K, m, x).value, z1_closed(Z, m, x).value + z1_closed(L, m, x).value, 1e-9));
    }
    for (int n = 1; n <= 4; ++n) {
      for (auto m : {Z1Marker::minus_n, Z1Marker::plus_n})
        CHECK(near(z1_closed(K, m, x, n).value, z1_closed(Z, m, x, n).value + z1_closed(L, m, x, n).value, 1e-9));
    }
  }
}

TEST_CASE("identity battery") {
  for (const auto* P : {&riemann(), &chi4()}) {
    const auto& c = P == &riemann() ? riemann_zeros() : chi4_zeros();
    const auto r = identity_suite(*P, c);
    for (const auto& k : r.checks) {
      CAPTURE(k.name);
      CAPTURE(k.detail);
      CHECK(k.pass);
    }
    CHECK(r.max_deviation("Z2X") < 1e-7);
  }
}
