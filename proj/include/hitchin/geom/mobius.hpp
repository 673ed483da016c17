#pragma once

#include <stdexcept>
#include <vector>

#include "hitchin/linalg.hpp"

namespace hitchin::geom {

/// Unit-determinant Moebius map z -> (az+b)/(cz+d), stored as a fixed
/// SL(2)/SU(1,1) matrix lift: the sign of (a,b,c,d) is part of the data and
/// fixes the branch of alpha = cz + d.
struct MobiusMap {
  Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

  Complex apply(Complex z) const { return (a * z + b) / (c * z + d); }
  Complex derivative(Complex z) const {
    const Complex q = c * z + d;
    return 1.0 / (q * q);
  }
  Complex alpha(Complex z) const { return c * z + d; }  // sqrt(dz/dz'), lifted branch
  Complex det() const { return a * d - b * c; }

  MobiusMap compose(const MobiusMap& first) const {
    // (*this) after `first`: matrix product this * first
    return {a * first.a + b * first.c, a * first.b + b * first.d,
            c * first.a + d * first.c, c * first.b + d * first.d};
  }
  MobiusMap inverse() const { return {d, -b, -c, a}; }
  MobiusMap negated() const { return {-a, -b, -c, -d}; }

  static MobiusMap identity() { return {}; }
};

/// alpha^H for integer H-exponents (diagonal of the principal grading).
inline CMatrix alpha_power_H(Complex alpha, const std::vector<int>& h_diag) {
  return int_power_diag(alpha, h_diag);
}

/// Chart map with enough derivatives for the oper error term: provides
/// z' = f(z) and f', f'', f'''.
struct ChartMap {
  virtual ~ChartMap() = default;
  virtual Complex map(Complex z) const = 0;
  virtual Complex d1(Complex z) const = 0;
  virtual Complex d2(Complex z) const = 0;
  virtual Complex d3(Complex z) const = 0;
};

struct MobiusChart final : ChartMap {
  MobiusMap m;
  explicit MobiusChart(const MobiusMap& mm) : m(mm) {}
  Complex map(Complex z) const override { return m.apply(z); }
  Complex d1(Complex z) const override { return m.derivative(z); }
  Complex d2(Complex z) const override {
    const Complex q = m.c * z + m.d;
    return -2.0 * m.c / (q * q * q);
  }
  Complex d3(Complex z) const override {
    const Complex q = m.c * z + m.d;
    return 6.0 * m.c * m.c / (q * q * q * q);
  }
};

/// z' = z + coeff * z^3; a deliberately non-projective test chart.
struct CubicChart final : ChartMap {
  Complex coeff{1.0};
  explicit CubicChart(Complex c3) : coeff(c3) {}
  Complex map(Complex z) const override { return z + coeff * z * z * z; }
  Complex d1(Complex z) const override { return 1.0 + 3.0 * coeff * z * z; }
  Complex d2(Complex z) const override { return 6.0 * coeff * z; }
  Complex d3(Complex) const override { return 6.0 * coeff; }
};

}  // namespace hitchin::geom
