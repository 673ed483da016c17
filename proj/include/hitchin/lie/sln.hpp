#pragma once

#include <vector>

#include "hitchin/exact.hpp"
#include "hitchin/linalg.hpp"

namespace hitchin::lie {

/// Principal sl(2) triple together with the highest-weight vectors X_n,
/// one per exponent. For SL(N) the representation is the defining one and
/// X_n is supported on the n-th superdiagonal; for a general simple algebra
/// the matrices live in the adjoint representation.
struct PrincipalTriple {
  int n_dim = 0;                  // representation dimension
  CMatrix H, Xplus, Xminus;
  std::vector<CMatrix> Xn;        // highest-weight vectors, by exponent order
  std::vector<int> exponents;     // m_1 <= ... <= m_r
};

/// Scalar normalization of the X_n (the defining equations fix them only up
/// to scale). UnitLeading sets the topmost nonzero entry to 1. PaperExample
/// matches the handful of explicitly displayed matrices: X_1 = X_+ and, for
/// N = 5, X_2 twice the unit-leading solution.
enum class XnNormalization { UnitLeading, PaperExample };

/// H, X_+, X_- in the defining representation, with sqrt(r_i) entries,
/// r_i = i(N-i). Exponents are 1..N-1.
PrincipalTriple build_principal_triple_sln(int N,
    XnNormalization rule = XnNormalization::UnitLeading);

std::vector<CMatrix> build_highest_weight_vectors_sln(int N, XnNormalization rule);

/// Basis of { chi : [H, chi] = 2*grade*chi, [X_+, chi] = 0 } inside all
/// N x N matrices, computed by dense nullspace extraction. Each basis
/// element is returned as a matrix.
std::vector<CMatrix> solve_ad_constraints(int N, int grade);

/// Antidiagonal pairing matrix (eq. of the bilinear pairing); S^2 = 1.
CMatrix build_pairing_S(int N);

/// S-transpose-conjugate: S^{-1} m^T S.
CMatrix s_transpose(const CMatrix& m);

/// Exact-arithmetic counterparts used for the construction and for the
/// exact relation checks ([H,X+-] = +-2X+-, [X+,X-] = H, [X+,Xn] = 0).
exact::ExactMatrix exact_H_sln(int N);
exact::ExactMatrix exact_Xplus_sln(int N);
exact::ExactMatrix exact_Xminus_sln(int N);
exact::ExactMatrix exact_Xn_sln(int N, int n, XnNormalization rule);

/// Verifies the triple and highest-weight relations in exact arithmetic.
/// Throws on failure; returns normally otherwise.
void verify_sln_relations_exact(int N, XnNormalization rule);

/// Residual of the defining-representation involution consistency:
/// rho(X) = -X^dagger, sigma(X) = -S X^T S^{-1}, and sigma rho = rho sigma.
double sln_involution_commute_residual(int N, const CMatrix& sample);

}  // namespace hitchin::lie
