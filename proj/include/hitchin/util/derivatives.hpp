#pragma once

#include <functional>

#include "hitchin/linalg.hpp"

namespace hitchin::util {

/// Derivative of a holomorphic function by trapezoidal Cauchy quadrature on
/// a circle of radius h; error O(h^M) + roundoff O(eps/h), near machine
/// precision for analytic integrands at the default settings.
template <typename F>
Complex holomorphic_derivative(F&& f, Complex z, double h = 1e-2, int M = 16) {
  Complex acc = 0.0;
  for (int k = 0; k < M; ++k) {
    const Complex w = std::polar(1.0, 2.0 * M_PI * k / M);
    acc += f(z + h * w) / w;
  }
  return acc / (static_cast<double>(M) * h);
}

/// Same quadrature applied entrywise to a matrix-valued holomorphic map.
template <typename F>
CMatrix holomorphic_derivative_matrix(F&& f, Complex z, double h = 1e-2, int M = 16) {
  CMatrix acc = f(z);
  acc.setZero();
  for (int k = 0; k < M; ++k) {
    const Complex w = std::polar(1.0, 2.0 * M_PI * k / M);
    acc += f(z + h * w) / w;
  }
  return acc / (static_cast<double>(M) * h);
}

/// 5-point finite-difference d_z dbar_z = Laplacian/4 of a real scalar
/// sampled from an evaluator; O(h^2).
template <typename F>
double dzdzbar_fd(F&& f, Complex z, double h) {
  const double c = f(z);
  const double lap = (f(z + h) + f(z - h) + f(z + Complex(0, h)) + f(z - Complex(0, h)) - 4.0 * c) / (h * h);
  return lap / 4.0;
}

}  // namespace hitchin::util
