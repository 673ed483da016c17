#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace hitchin {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline CMatrix comm(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

inline double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

/// Entrywise comparison with explicit tolerance.
inline bool approx_equal(const CMatrix& a, const CMatrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a - b) <= tol;
}

/// exp(s*X) for nilpotent X, summed until the power vanishes.
inline CMatrix nilpotent_exp(const CMatrix& x, Complex s) {
  const auto n = x.rows();
  CMatrix result = CMatrix::Identity(n, n);
  CMatrix term = CMatrix::Identity(n, n);
  for (Eigen::Index k = 1; k <= n + 1; ++k) {
    term = term * x * (s / static_cast<double>(k));
    if (max_abs(term) == 0.0) break;
    result += term;
  }
  return result;
}

/// diag(base^{e_0}, ..., base^{e_{n-1}}) for integer exponents.
inline CMatrix int_power_diag(Complex base, const std::vector<int>& exps) {
  const auto n = static_cast<Eigen::Index>(exps.size());
  CMatrix d = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    int e = exps[static_cast<size_t>(i)];
    Complex v = 1.0;
    Complex b = (e >= 0) ? base : 1.0 / base;
    for (int k = 0; k < std::abs(e); ++k) v *= b;
    d(i, i) = v;
  }
  return d;
}

/// Monic characteristic polynomial coefficients (c_1..c_n with
/// p(t) = t^n + c_1 t^{n-1} + ... + c_n), expanded from eigenvalues.
inline CVector char_poly(const CMatrix& m) {
  Eigen::ComplexEigenSolver<CMatrix> es(m, /*computeEigenvectors=*/false);
  const CVector ev = es.eigenvalues();
  const auto n = m.rows();
  std::vector<Complex> c(static_cast<size_t>(n) + 1, 0.0);
  c[0] = 1.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j >= 1; --j)
      c[static_cast<size_t>(j)] -= ev(i) * c[static_cast<size_t>(j - 1)];
  }
  CVector out(n);
  for (Eigen::Index j = 1; j <= n; ++j) out(j - 1) = c[static_cast<size_t>(j)];
  return out;
}

/// Orthonormal basis of the nullspace of a (possibly rectangular) map,
/// columns are basis vectors; rank cutoff relative to largest singular value.
inline CMatrix kernel_basis(const CMatrix& a, double rel_tol = 1e-9) {
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double cutoff = (sv.size() > 0 ? sv(0) : 0.0) * rel_tol;
  Eigen::Index rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff && sv(i) > 1e-13) ++rank;
  return svd.matrixV().rightCols(a.cols() - rank);
}

}  // namespace hitchin
