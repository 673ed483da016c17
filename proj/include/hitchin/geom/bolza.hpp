#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hitchin/geom/mobius.hpp"

namespace hitchin::geom {

/// Genus-2 Fuchsian group of the regular hyperbolic octagon with opposite
/// sides identified (Bolza surface), in the unit-disk model. Generators
/// g_0..g_7 with g_{k+4} = g_k^{-1}; g_k translates along the ray at angle
/// k*pi/4 and maps side S_{k+4} onto side S_k. The SU(1,1) lifts are fixed
/// once and satisfy the surface-group relation with value +I.
struct FuchsianSurface {
  std::array<MobiusMap, 8> pairing;   // g_k
  std::vector<int> relation_word;     // indices whose product is +-I
  std::array<Complex, 8> vertex;      // corners, at angles (2k+1) pi/8
  double r_vertex = 0.0;              // Euclidean radius of corners
  double r_mid = 0.0;                 // Euclidean radius of side midpoints
  std::array<Complex, 8> side_center; // centers of the side geodesics
  std::array<double, 8> side_radius;  // Euclidean radii of those circles

  bool inside(Complex p) const;                 // strict fundamental-domain test
  /// Index of the first side whose geodesic disk contains p (i.e. p has
  /// left the domain through that side), or -1 when p is inside.
  int violated_side(Complex p) const;

  /// Deck transformations with word length <= L, deduplicated as group
  /// elements; includes the identity.
  std::vector<MobiusMap> elements(int L) const;
};

FuchsianSurface bolza_group();

/// Hyperbolic geodesic from p to q, parameterized by t in [0,1]
/// (constant-speed in the hyperbolic metric).
Complex geodesic_point(Complex p, Complex q, double t);

/// Hyperbolic distance in the curvature -4 disk model
/// (half the classical curvature -1 distance).
double hyper_distance(Complex p, Complex q);

}  // namespace hitchin::geom
