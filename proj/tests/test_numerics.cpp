#include <cmath>

#include "doctest.h"
#include "superzeta/numerics.hpp"
#include "superzeta/specfun.hpp"

using namespace superzeta;
using namespace superzeta::numerics;

TEST_CASE("Taylor coefficients of exp") {
  const auto c = taylor_coefficients([](cplx z) { return std::exp(z); }, 0.3, 0.5, 10);
  // Roundoff in c_k scales like eps * max|f| / r^k.
  for (int k = 0; k < 10; ++k) CHECK(std::abs(c[k] - std::exp(0.3) / specfun::factorial(k)) < 4e-15 * std::pow(2.0, k));
}

TEST_CASE("log Taylor coefficients unwrap the branch") {
  // log(z) about z = -2: the principal branch jumps on the circle.
  const auto c = log_taylor_coefficients([](cplx z) { return std::log(z); }, -2.0, 1.0, 6);
  for (int k = 1; k < 6; ++k) {
    const double expected = (k % 2 == 1 ? 1.0 : -1.0) / k * std::pow(-2.0, -k);
    CHECK(std::abs(c[k] - expected) < 1e-13);
  }
  CHECK_THROWS_AS(log_taylor_coefficients([](cplx z) { return std::log(z); }, 0.1, 1.0, 4), NumericError);
  CHECK_THROWS_AS(taylor_coefficients([](cplx z) { return z; }, 0.0, 1.0, 600), DomainError);
}

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  const auto r = gauss_legendre(8);
  for (int p = 0; p <= 15; ++p) {
    double sum = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) sum += r.weights[i] * std::pow(r.nodes[i], p);
    const double exact = (p % 2 == 1) ? 0.0 : 2.0 / (p + 1);
    CHECK(std::abs(sum - exact) < 1e-14);
  }
}

TEST_CASE("Gauss-Jacobi moments") {
  // int_{-1}^{1} (1+t)^beta t^p dt against a Beta-function closed form.
  for (double beta : {-0.7, -0.3, 0.0, 0.5}) {
    const auto r = gauss_jacobi(10, 0.0, beta);
    for (int p = 0; p <= 6; ++p) {
      double sum = 0.0;
      for (std::size_t i = 0; i < r.nodes.size(); ++i) sum += r.weights[i] * std::pow(r.nodes[i], p);
      // Expand t^p = sum_j C(p,j) (1+t)^j (-1)^{p-j}; int (1+t)^{beta+j} = 2^{beta+j+1}/(beta+j+1).
      double exact = 0.0;
      for (int j = 0; j <= p; ++j)
        exact += specfun::binomial(p, j) * ((p - j) % 2 ? -1.0 : 1.0) * std::pow(2.0, beta + j + 1) / (beta + j + 1);
      CHECK(std::abs(sum - exact) < 1e-12 * std::max(1.0, std::abs(exact)));
    }
  }
  CHECK_THROWS_AS(gauss_jacobi(4, -1.5, 0.0), DomainError);
}
