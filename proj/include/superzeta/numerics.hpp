#pragma once

// Generic numerical building blocks: Cauchy-circle Taylor extraction and
// Gaussian quadrature rules.

#include <functional>
#include <vector>

#include "superzeta/errors.hpp"

namespace superzeta::numerics {

/// Taylor coefficients c_0..c_{count-1} of an analytic f about center,
/// by the trapezoidal rule on a circle of the given radius.
std::vector<cplx> taylor_coefficients(const std::function<cplx(cplx)>& f, cplx center, double radius,
                                      int count, int nodes = 1024);

/// Same for log f, where log_f returns log f(z) on any branch. Imaginary
/// parts are unwrapped along the circle; a nonzero winding number (a zero
/// or pole of f inside the circle) raises NumericError.
std::vector<cplx> log_taylor_coefficients(const std::function<cplx(cplx)>& log_f, cplx center,
                                          double radius, int count, int nodes = 1024);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1].
QuadratureRule gauss_legendre(int n);

/// n-point Gauss-Jacobi rule on [-1, 1] for the weight (1-t)^alpha (1+t)^beta.
QuadratureRule gauss_jacobi(int n, double alpha, double beta);

}  // namespace superzeta::numerics
