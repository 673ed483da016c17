#pragma once

#include <stdexcept>

#include "hitchin/linalg.hpp"

namespace hitchin::geom {

/// Conformal factor of the constant-curvature -4 metric lambda^2 dz dzbar,
/// with analytic z-derivatives. Disk model: lambda = 1/(1-|z|^2);
/// upper half-plane: lambda = i/(z - zbar) = 1/(2 Im z).
struct MetricChart {
  enum class Model { Disk, UpperHalfPlane } model = Model::Disk;

  double lambda(Complex z) const {
    if (model == Model::Disk) {
      const double r2 = std::norm(z);
      if (r2 >= 1.0) throw std::domain_error("lambda: point outside unit disk");
      return 1.0 / (1.0 - r2);
    }
    if (z.imag() <= 0.0) throw std::domain_error("lambda: point outside upper half-plane");
    return 1.0 / (2.0 * z.imag());
  }

  Complex dz_log_lambda(Complex z) const {
    if (model == Model::Disk) return std::conj(z) * lambda(z);
    return -1.0 / (z - std::conj(z));
  }

  Complex dz2_log_lambda(Complex z) const {
    if (model == Model::Disk) {
      const Complex zb = std::conj(z);
      const double l = lambda(z);
      return zb * zb * l * l;
    }
    const Complex w = z - std::conj(z);
    return 1.0 / (w * w);
  }

  Complex dz_lambda(Complex z) const {
    if (model == Model::Disk) {
      const double l = lambda(z);
      return std::conj(z) * l * l;
    }
    const Complex w = z - std::conj(z);
    return -Complex(0, 1) / (w * w);
  }

  Complex dz2_lambda(Complex z) const {
    if (model == Model::Disk) {
      const double l = lambda(z);
      const Complex zb = std::conj(z);
      return 2.0 * zb * zb * l * l * l;
    }
    const Complex w = z - std::conj(z);
    return 2.0 * Complex(0, 1) / (w * w * w);
  }
};

inline MetricChart disk_metric() { return {MetricChart::Model::Disk}; }
inline MetricChart uhp_metric() { return {MetricChart::Model::UpperHalfPlane}; }

}  // namespace hitchin::geom
