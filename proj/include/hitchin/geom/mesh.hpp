#pragma once

#include <Eigen/Sparse>
#include <array>
#include <string>
#include <vector>

#include "hitchin/geom/bolza.hpp"
#include "hitchin/geom/metric.hpp"

namespace hitchin::geom {

/// Triangulation of the Bolza fundamental octagon with identified boundary.
/// Fields live on "rep" vertices; every mesh vertex knows its rep and the
/// deck transformation placing it: vertex position = gauge(rep position).
/// Cotangent stiffness plus hyperbolic vertex areas discretize the
/// Laplace-Beltrami operator of the curvature -4 metric:
///   (Delta f)_i ~ -(1/area_i) (S f)_i.
struct SurfaceMesh {
  FuchsianSurface group;

  std::vector<Complex> vertex;             // fundamental-domain chart positions
  std::vector<std::array<int, 3>> tri;

  // Identification links (i, j, g): vertex i is the image of vertex j under
  // generator g. A vertex may carry several links (octagon corners).
  std::vector<std::array<int, 3>> links;

  std::vector<int> rep_index;    // per vertex: rep slot 0..n_reps-1
  std::vector<MobiusMap> gauge;  // per vertex: deck map from rep position
  std::vector<int> rep_ids;      // rep slot -> representative vertex id
  int n_reps = 0;

  std::vector<double> rep_area;           // lumped hyperbolic areas
  Eigen::SparseMatrix<double> stiffness;  // reps x reps, PSD

  // Per-triangle data.
  std::vector<std::array<double, 3>> cot_w;  // weights for edges (01, 12, 20)
  std::vector<double> tri_area_euc;
  std::vector<double> tri_area_hyp;
  // P1 gradient functionals: f_x = sum gx[i] f_i, f_y = sum gy[i] f_i.
  std::vector<std::array<double, 3>> grad_x, grad_y;

  double target_edge = 0.0;
  int subdivisions = 0;

  double total_area() const;
  int locate_triangle(Complex p) const;  // -1 when outside the domain

  /// Scalar P1 interpolation of a field given on reps.
  double interpolate(const RVector& rep_field, Complex p) const;

  /// Barycentric coordinates of p in triangle t.
  std::array<double, 3> barycentric(int t, Complex p) const;

  void build_locator();
  int grid_n = 0;
  std::vector<std::vector<int>> grid_cells;
};

SurfaceMesh build_mesh(const FuchsianSurface& surface, double target_edge);

/// Line-oriented text format: `v x y`, `t i j k`, `p i j g` (vertex i is the
/// image of vertex j under generator g).
void save_mesh(const SurfaceMesh& mesh, const std::string& path);
SurfaceMesh load_mesh(const std::string& path);

}  // namespace hitchin::geom
