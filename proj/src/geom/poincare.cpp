#include "hitchin/geom/poincare.hpp"

#include <stdexcept>

namespace hitchin::geom {

namespace {

Complex int_pow(Complex base, int e) {
  Complex r = 1.0;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Complex DifferentialData::eval(Complex z) const {
  Complex sum = 0.0;
  for (const auto& [c, d] : cd) {
    const Complex q = c * z + d;
    sum += 1.0 / int_pow(q, 2 * order);
  }
  return sum;
}

Complex DifferentialData::eval_dz(Complex z) const {
  // d/dz (cz+d)^{-2n} = -2n c (cz+d)^{-2n-1}
  Complex sum = 0.0;
  for (const auto& [c, d] : cd) {
    const Complex q = c * z + d;
    sum += -2.0 * static_cast<double>(order) * c / int_pow(q, 2 * order + 1);
  }
  return sum;
}

DifferentialData poincare_series_differential(const FuchsianSurface& surface, int n, int L) {
  if (n < 2) throw std::invalid_argument("poincare series: order n >= 2 required for convergence");
  if (L < 0) throw std::invalid_argument("poincare series: truncation L >= 0 required");
  DifferentialData out;
  out.order = n;
  out.truncation_L = L;
  for (const MobiusMap& g : surface.elements(L)) out.cd.push_back({g.c, g.d});
  return out;
}

double automorphy_residual(const DifferentialData& p, const MobiusMap& g, Complex z) {
  const Complex lhs = p.eval(g.apply(z)) * int_pow(g.derivative(z), p.order);
  return std::abs(lhs - p.eval(z));
}

}  // namespace hitchin::geom
