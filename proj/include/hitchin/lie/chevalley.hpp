#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hitchin/exact.hpp"
#include "hitchin/linalg.hpp"

namespace hitchin::lie {

struct CartanType {
  char series = 'A';  // A, B, C, D, G
  int rank = 1;
};

CartanType parse_cartan_type(const std::string& label);  // "A2", "G2", ...
std::string to_string(const CartanType& t);

/// Root of the system, as integer coefficients over the simple roots.
using RootVec = std::vector<int>;

/// Chevalley basis of a simple complex Lie algebra: root system generated
/// from the Cartan matrix, structure constants computed in exact rational
/// arithmetic with signs fixed by the extraspecial-pair convention, and
/// adjoint-representation matrices in a weight-ordered basis
/// (positive roots by descending height, then the Cartan, then negatives).
struct ChevalleyData {
  CartanType type;
  int rank = 0;
  std::vector<RootVec> positive_roots;   // indexed 0..m-1, height-then-lex order
  std::vector<int> root_height;
  std::vector<std::vector<int>> gram;    // (alpha_i, alpha_j), integers
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_j, alpha_i^vee>

  // N(i, j) for positive pairs i < j in root order whose sum is a root.
  std::map<std::pair<int, int>, long long> n_table;

  // beta^vee = sum_i coroot[b][i] alpha_i^vee.
  std::vector<std::vector<long long>> coroot;

  // Principal coefficients r_i, from sum_{beta > 0} beta^vee = sum r_i alpha_i^vee.
  std::vector<long long> r_coeffs;

  int n_pos() const { return static_cast<int>(positive_roots.size()); }
  int dim() const { return rank + 2 * n_pos(); }

  // Weight-ordered basis of size dim(): positive root vectors by descending
  // height, then h_1..h_r, then negative root vectors by ascending height.
  std::vector<int> basis_grade;  // principal grade: 2*ht, 0, -2*ht
  std::vector<int> idx_pos;      // basis index of e_beta per positive root
  std::vector<int> idx_neg;      // basis index of e_{-beta}
  std::vector<int> idx_cartan;   // basis index of h_i

  // [b_i, b_j] expanded over the basis.
  std::vector<std::vector<RVector>> struct_const;

  // Adjoint matrices ad(b_k) in this basis.
  std::vector<CMatrix> adjoint;

  // Killing form B(b_i, b_j) = tr(ad b_i ad b_j).
  RMatrix killing;
};

/// Builds the basis, verifying the Jacobi identity exactly along the way.
/// Supported: A1..A4, B2..B4, C2..C4, D4, G2.
ChevalleyData chevalley_basis(const std::string& cartan_label);

bool is_root(const ChevalleyData& g, const RootVec& v);

/// Largest k with beta - k*alpha a root.
int root_string_down(const ChevalleyData& g, const RootVec& beta, const RootVec& alpha);

/// Structure constant N(a, b) for signed root indices (+k / -k refer to the
/// k-th positive root, 1-based). Zero when a+b is not a root.
exact::Rational n_value(const ChevalleyData& g, int a, int b);

}  // namespace hitchin::lie
