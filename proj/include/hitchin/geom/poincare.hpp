#pragma once

#include <vector>

#include "hitchin/geom/bolza.hpp"

namespace hitchin::geom {

/// Truncated Poincare series P_n(z) = sum_{|gamma| <= L} gamma'(z)^n, a
/// weight-2n holomorphic function on the disk, approximately automorphic
/// (exactly holomorphic; automorphy improves with L).
struct DifferentialData {
  int order = 2;        // n; the differential is P_n dz^n
  int truncation_L = 0;
  std::vector<std::pair<Complex, Complex>> cd;  // (c, d) per group element

  Complex eval(Complex z) const;
  Complex eval_dz(Complex z) const;
};

DifferentialData poincare_series_differential(const FuchsianSurface& surface, int n, int L);

/// |P(gz) g'(z)^n - P(z)| at a sample point, for a deck transformation g.
double automorphy_residual(const DifferentialData& p, const MobiusMap& g, Complex z);

}  // namespace hitchin::geom
