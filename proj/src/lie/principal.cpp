#include "hitchin/lie/principal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hitchin::lie {

CMatrix ad_of(const ChevalleyData& g, const CVector& v) {
  const int d = g.dim();
  CMatrix ad = CMatrix::Zero(d, d);
  for (int k = 0; k < d; ++k)
    if (std::abs(v(k)) > 0.0) ad += v(k) * g.adjoint[static_cast<size_t>(k)];
  return ad;
}

namespace {

int simple_root_index(const ChevalleyData& g, int i) {
  RootVec v(static_cast<size_t>(g.rank), 0);
  v[static_cast<size_t>(i)] = 1;
  for (int k = 0; k < g.n_pos(); ++k)
    if (g.positive_roots[static_cast<size_t>(k)] == v) return k;
  throw std::logic_error("simple root not found");
}

}  // namespace

PrincipalTripleG principal_triple_g(const ChevalleyData& g) {
  const int d = g.dim();
  PrincipalTripleG out;
  out.H_vec = CVector::Zero(d);
  out.Xplus_vec = CVector::Zero(d);
  out.Xminus_vec = CVector::Zero(d);
  for (int i = 0; i < g.rank; ++i) {
    const double ri = static_cast<double>(g.r_coeffs[static_cast<size_t>(i)]);
    out.H_vec(g.idx_cartan[static_cast<size_t>(i)]) = ri;
    const int k = simple_root_index(g, i);
    out.Xplus_vec(g.idx_pos[static_cast<size_t>(k)]) = std::sqrt(ri);
    out.Xminus_vec(g.idx_neg[static_cast<size_t>(k)]) = std::sqrt(ri);
  }

  PrincipalTriple t;
  t.n_dim = d;
  t.H = ad_of(g, out.H_vec);
  t.Xplus = ad_of(g, out.Xplus_vec);
  t.Xminus = ad_of(g, out.Xminus_vec);

  // Highest-weight vectors: ad-H eigenvectors inside ker(ad X_+).
  const CMatrix kernel = kernel_basis(t.Xplus);
  if (kernel.cols() != g.rank)
    throw std::logic_error("ker(ad X+) dimension != rank");
  const CMatrix h_on_kernel = kernel.adjoint() * t.H * kernel;
  Eigen::ComplexEigenSolver<CMatrix> es(h_on_kernel);
  std::vector<std::pair<double, CVector>> pairs;
  for (int i = 0; i < g.rank; ++i) {
    const double ev = es.eigenvalues()(i).real();
    CVector vec = kernel * es.eigenvectors().col(i);
    pairs.push_back({ev, vec});
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [ev, vec] : pairs) {
    const double m = ev / 2.0;
    const int mi = static_cast<int>(std::lround(m));
    if (std::abs(m - mi) > 1e-9) throw std::logic_error("non-integer exponent");
    t.exponents.push_back(mi);
    // normalize the largest coefficient to 1 for determinism
    Eigen::Index imax;
    vec.cwiseAbs().maxCoeff(&imax);
    vec /= vec(imax);
    out.Xn_vec.push_back(vec);
    t.Xn.push_back(ad_of(g, vec));
  }
  out.triple = std::move(t);
  return out;
}

InvolutionPair build_involutions(const ChevalleyData& g, const PrincipalTripleG& t) {
  const int d = g.dim();
  InvolutionPair inv;

  // rho: h_i -> -h_i, e_beta -> -e_{-beta}, extended conjugate-linearly.
  inv.rho = RMatrix::Zero(d, d);
  for (int i = 0; i < g.rank; ++i) {
    const int c = g.idx_cartan[static_cast<size_t>(i)];
    inv.rho(c, c) = -1.0;
  }
  for (int k = 0; k < g.n_pos(); ++k) {
    const int p = g.idx_pos[static_cast<size_t>(k)];
    const int n = g.idx_neg[static_cast<size_t>(k)];
    inv.rho(n, p) = -1.0;
    inv.rho(p, n) = -1.0;
  }

  // sigma: on the basis w_{n,j} = (ad X_-)^j X_n of the sl(2)-isotypic
  // decomposition, sigma acts by (-1)^{j+1}.
  const CMatrix adXm = t.triple.Xminus;
  CMatrix W = CMatrix::Zero(d, d);
  RVector signs = RVector::Zero(d);
  int col = 0;
  for (size_t n = 0; n < t.Xn_vec.size(); ++n) {
    CVector w = t.Xn_vec[n];
    const int m = t.triple.exponents[n];
    for (int j = 0; j <= 2 * m; ++j) {
      if (col >= d) throw std::logic_error("sl2 string overflow");
      W.col(col) = w;
      signs(col) = (j % 2 == 0) ? -1.0 : 1.0;  // (-1)^{j+1}
      ++col;
      w = adXm * w;
    }
  }
  if (col != d) throw std::logic_error("sl2 strings do not span g");
  const CMatrix Winv = W.inverse();
  inv.sigma = W * signs.asDiagonal().toDenseMatrix().cast<Complex>() * Winv;

  // Hermitian form matrix: <u, v> = -B(u, rho(v)) = -u^T K rho conj(v).
  inv.herm = -(g.killing * inv.rho).cast<Complex>();

  return inv;
}

}  // namespace hitchin::lie
