#include "superzeta/numerics.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "superzeta/specfun.hpp"

namespace superzeta::numerics {

namespace {

constexpr double kTwoPi = 2.0 * specfun::kPi;

std::vector<cplx> dft_coefficients(const std::vector<cplx>& values, double radius, int count) {
  const int n = static_cast<int>(values.size());
  std::vector<cplx> c(count);
  for (int k = 0; k < count; ++k) {
    cplx acc = 0.0;
    for (int j = 0; j < n; ++j) acc += values[j] * std::polar(1.0, -kTwoPi * double(k) * j / n);
    c[k] = acc / double(n) * std::pow(radius, -k);
  }
  return c;
}

void check_circle(double radius, int count, int nodes) {
  if (!(radius > 0.0)) throw DomainError("Cauchy circle: radius must be positive");
  if (count < 1 || count >= nodes / 2) throw DomainError("Cauchy circle: too many coefficients for node count");
}

QuadratureRule golub_welsch(const std::vector<double>& diag, const std::vector<double>& offdiag, double mu0) {
  const int n = static_cast<int>(diag.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) J(i, i) = diag[i];
  for (int i = 0; i + 1 < n; ++i) J(i, i + 1) = J(i + 1, i) = offdiag[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  if (es.info() != Eigen::Success) throw NumericError("Golub-Welsch: eigen decomposition failed");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()(i);
    const double v0 = es.eigenvectors()(0, i);
    rule.weights[i] = mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace

std::vector<cplx> taylor_coefficients(const std::function<cplx(cplx)>& f, cplx center, double radius,
                                      int count, int nodes) {
  check_circle(radius, count, nodes);
  std::vector<cplx> values(nodes);
  for (int j = 0; j < nodes; ++j) values[j] = require_finite(f(center + std::polar(radius, kTwoPi * j / nodes)), "taylor_coefficients");
  return dft_coefficients(values, radius, count);
}

std::vector<cplx> log_taylor_coefficients(const std::function<cplx(cplx)>& log_f, cplx center,
                                          double radius, int count, int nodes) {
  check_circle(radius, count, nodes);
  std::vector<cplx> values(nodes);
  double shift = 0.0;
  double prev = 0.0;
  for (int j = 0; j < nodes; ++j) {
    cplx v = require_finite(log_f(center + std::polar(radius, kTwoPi * j / nodes)), "log_taylor_coefficients");
    double im = v.imag() + shift;
    if (j > 0) {
      while (im - prev > specfun::kPi) {
        im -= kTwoPi;
        shift -= kTwoPi;
      }
      while (im - prev < -specfun::kPi) {
        im += kTwoPi;
        shift += kTwoPi;
      }
    }
    prev = im;
    values[j] = cplx(v.real(), im);
  }
  // Closing step back to the first node decides the winding number.
  double closing = values[0].imag() - prev;
  const double winding = std::round(-(closing - std::remainder(closing, kTwoPi)) / kTwoPi);
  if (winding != 0.0)
    throw NumericError("log_taylor_coefficients: log f winds " + std::to_string(int(winding)) +
                       " times around the circle (center " + format_complex(center) +
                       ", radius " + std::to_string(radius) + "); a zero or pole lies inside");
  return dft_coefficients(values, radius, count);
}

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: n must be >= 1");
  std::vector<double> diag(n, 0.0), off(std::max(0, n - 1));
  for (int k = 1; k < n; ++k) off[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  return golub_welsch(diag, off, 2.0);
}

QuadratureRule gauss_jacobi(int n, double alpha, double beta) {
  if (n < 1) throw DomainError("gauss_jacobi: n must be >= 1");
  if (!(alpha > -1.0 && beta > -1.0)) throw DomainError("gauss_jacobi: alpha, beta must exceed -1");
  std::vector<double> diag(n), off(std::max(0, n - 1));
  const double ab = alpha + beta;
  for (int k = 0; k < n; ++k) {
    const double d = 2.0 * k + ab;
    diag[k] = k == 0 ? (beta - alpha) / (ab + 2.0) : (beta * beta - alpha * alpha) / (d * (d + 2.0));
  }
  if (n > 1) off[0] = std::sqrt(4.0 * (1.0 + alpha) * (1.0 + beta) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0)));
  for (int k = 2; k < n; ++k) {
    const double d = 2.0 * k + ab;
    off[k - 1] = std::sqrt(4.0 * k * (k + alpha) * (k + beta) * (k + ab) / (d * d * (d + 1.0) * (d - 1.0)));
  }
  const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
                              std::lgamma(ab + 2.0));
  return golub_welsch(diag, off, mu0);
}

}  // namespace superzeta::numerics
