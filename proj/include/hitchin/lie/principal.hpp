#pragma once

#include "hitchin/lie/chevalley.hpp"
#include "hitchin/lie/sln.hpp"

namespace hitchin::lie {

/// Conjugate-linear Cartan involution rho, the complex-linear involution
/// sigma (equal to -1 on ker ad X_+ and with sigma(X_-) = -X_-), and the
/// Hermitian form <Y1, Y2> = -B(Y1, rho(Y2)). All maps act on coefficient
/// vectors over the weight-ordered Chevalley basis; rho conjugates its
/// argument first (conjugate-linearity).
struct InvolutionPair {
  RMatrix rho;     // rho(v) = rho_mat * conj(v)
  CMatrix sigma;   // complex-linear
  CMatrix herm;    // <u, v> = u^T * herm * conj(v)

  CVector apply_rho(const CVector& v) const { return rho * v.conjugate(); }
  CVector apply_sigma(const CVector& v) const { return sigma * v; }
  Complex pairing(const CVector& u, const CVector& v) const {
    return (u.transpose() * herm * v.conjugate())(0, 0);
  }
};

/// Kostant principal triple in the adjoint representation:
/// H = sum r_i h_i, X_pm = sum sqrt(r_i) x_{pm alpha_i}. Exponents read off
/// from the ad-H eigenvalues on ker(ad X_+). The triple matrices are ad(H),
/// ad(X_pm), ad(X_n); the underlying coefficient vectors are also returned.
struct PrincipalTripleG {
  PrincipalTriple triple;          // adjoint-representation matrices
  CVector H_vec, Xplus_vec, Xminus_vec;
  std::vector<CVector> Xn_vec;     // highest-weight vectors as elements of g
};

PrincipalTripleG principal_triple_g(const ChevalleyData& g);

InvolutionPair build_involutions(const ChevalleyData& g, const PrincipalTripleG& t);

/// ad of an element given by its coefficient vector.
CMatrix ad_of(const ChevalleyData& g, const CVector& v);

}  // namespace hitchin::lie
