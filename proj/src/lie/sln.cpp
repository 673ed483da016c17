#include "hitchin/lie/sln.hpp"

#include <stdexcept>
#include <string>

namespace hitchin::lie {

using exact::ExactMatrix;
using exact::Rational;
using exact::SqrtVal;

namespace {

std::int64_t r_coeff(int N, int i) {  // r_i = i(N-i), 1-based
  return static_cast<std::int64_t>(i) * (N - i);
}

}  // namespace

exact::ExactMatrix exact_H_sln(int N) {
  ExactMatrix h = exact::exact_zero(N);
  for (int i = 0; i < N; ++i) h[i][i] = SqrtVal(Rational(N - 1 - 2 * i));
  return h;
}

exact::ExactMatrix exact_Xplus_sln(int N) {
  ExactMatrix x = exact::exact_zero(N);
  for (int i = 1; i < N; ++i) x[i - 1][i] = SqrtVal::sqrt_of(r_coeff(N, i));
  return x;
}

exact::ExactMatrix exact_Xminus_sln(int N) {
  ExactMatrix x = exact::exact_zero(N);
  for (int i = 1; i < N; ++i) x[i][i - 1] = SqrtVal::sqrt_of(r_coeff(N, i));
  return x;
}

exact::ExactMatrix exact_Xn_sln(int N, int n, XnNormalization rule) {
  if (n < 1 || n > N - 1) throw std::invalid_argument("exact_Xn_sln: 1 <= n <= N-1 required");
  // Entries c_i at (i, i+n), 1-based. [X+, Xn] = 0 forces
  // c_{i+1} sqrt(r_i) = c_i sqrt(r_{i+n}); with c_1 = 1 each entry is
  // c_i = sqrt(prod_{k<i} r_{k+n} / prod_{k<i} r_k).
  ExactMatrix x = exact::exact_zero(N);
  SqrtVal c = SqrtVal(Rational(1));
  std::int64_t num = 1, den = 1;  // c_i^2 as a running fraction
  for (int i = 1; i + n <= N; ++i) {
    if (i > 1) {
      num *= r_coeff(N, i - 1 + n);
      den *= r_coeff(N, i - 1);
      std::int64_t g = std::gcd(num, den);
      num /= g; den /= g;
      c = SqrtVal::sqrt_of(num * den);  // sqrt(num/den) = sqrt(num*den)/den
      c.coeff = c.coeff / Rational(den);
    }
    x[i - 1][i - 1 + n] = c;
  }
  if (rule == XnNormalization::PaperExample) {
    SqrtVal scale = SqrtVal(Rational(1));
    if (n == 1) scale = SqrtVal::sqrt_of(r_coeff(N, 1));  // X_1 = X_+
    else if (N == 5 && n == 2) scale = SqrtVal(Rational(2));
    x = exact::exact_scale(x, scale);
  }
  return x;
}

void verify_sln_relations_exact(int N, XnNormalization rule) {
  const ExactMatrix H = exact_H_sln(N);
  const ExactMatrix Xp = exact_Xplus_sln(N);
  const ExactMatrix Xm = exact_Xminus_sln(N);

  auto scaled = [](const ExactMatrix& m, std::int64_t k) {
    return exact::exact_scale(m, SqrtVal(Rational(k)));
  };

  if (!exact::exact_equal(exact_comm(H, Xp), scaled(Xp, 2)))
    throw std::logic_error("[H, X+] != 2 X+");
  if (!exact::exact_equal(exact_comm(H, Xm), scaled(Xm, -2)))
    throw std::logic_error("[H, X-] != -2 X-");
  if (!exact::exact_equal(exact_comm(Xp, Xm), H))
    throw std::logic_error("[X+, X-] != H");

  for (int n = 1; n < N; ++n) {
    const ExactMatrix Xn = exact_Xn_sln(N, n, rule);
    if (!exact::exact_equal(exact_comm(H, Xn), scaled(Xn, 2 * n)))
      throw std::logic_error("[H, X_n] != 2n X_n at n=" + std::to_string(n));
    if (!exact::exact_equal(exact_comm(Xp, Xn), exact::exact_zero(N)))
      throw std::logic_error("[X+, X_n] != 0 at n=" + std::to_string(n));
  }
}

PrincipalTriple build_principal_triple_sln(int N, XnNormalization rule) {
  if (N < 2) throw std::invalid_argument("build_principal_triple_sln: N >= 2 required");
  PrincipalTriple t;
  t.n_dim = N;
  t.H = exact::to_cmatrix(exact_H_sln(N));
  t.Xplus = exact::to_cmatrix(exact_Xplus_sln(N));
  t.Xminus = exact::to_cmatrix(exact_Xminus_sln(N));
  for (int n = 1; n < N; ++n) {
    t.Xn.push_back(exact::to_cmatrix(exact_Xn_sln(N, n, rule)));
    t.exponents.push_back(n);
  }
  return t;
}

std::vector<CMatrix> build_highest_weight_vectors_sln(int N, XnNormalization rule) {
  std::vector<CMatrix> out;
  for (int n = 1; n < N; ++n) out.push_back(exact::to_cmatrix(exact_Xn_sln(N, n, rule)));
  return out;
}

std::vector<CMatrix> solve_ad_constraints(int N, int grade) {
  if (N < 2) throw std::invalid_argument("solve_ad_constraints: N >= 2 required");
  const CMatrix H = exact::to_cmatrix(exact_H_sln(N));
  const CMatrix Xp = exact::to_cmatrix(exact_Xplus_sln(N));
  const Eigen::Index n2 = static_cast<Eigen::Index>(N) * N;

  // Stack the two linear conditions on vec(chi).
  CMatrix A = CMatrix::Zero(2 * n2, n2);
  for (int col = 0; col < N; ++col)
    for (int row = 0; row < N; ++row) {
      CMatrix e = CMatrix::Zero(N, N);
      e(row, col) = 1.0;
      const CMatrix c1 = comm(H, e) - 2.0 * static_cast<double>(grade) * e;
      const CMatrix c2 = comm(Xp, e);
      const Eigen::Index j = col * N + row;
      for (int cc = 0; cc < N; ++cc)
        for (int rr = 0; rr < N; ++rr) {
          A(cc * N + rr, j) = c1(rr, cc);
          A(n2 + cc * N + rr, j) = c2(rr, cc);
        }
    }

  const CMatrix kernel = kernel_basis(A);
  std::vector<CMatrix> basis;
  for (Eigen::Index k = 0; k < kernel.cols(); ++k) {
    CMatrix m(N, N);
    for (int cc = 0; cc < N; ++cc)
      for (int rr = 0; rr < N; ++rr) m(rr, cc) = kernel(cc * N + rr, k);
    basis.push_back(m);
  }
  return basis;
}

CMatrix build_pairing_S(int N) {
  CMatrix s = CMatrix::Zero(N, N);
  for (int i = 0; i < N; ++i) s(i, N - 1 - i) = 1.0;
  return s;
}

CMatrix s_transpose(const CMatrix& m) {
  const CMatrix s = build_pairing_S(static_cast<int>(m.rows()));
  return s * m.transpose() * s;  // S^{-1} = S
}

double sln_involution_commute_residual(int N, const CMatrix& sample) {
  const CMatrix s = build_pairing_S(N);
  auto rho = [](const CMatrix& x) { return CMatrix(-x.adjoint()); };
  auto sigma = [&s](const CMatrix& x) { return CMatrix(-s * x.transpose() * s); };
  return max_abs(sigma(rho(sample)) - rho(sigma(sample)));
}

}  // namespace hitchin::lie
