#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hitchin/linalg.hpp"

namespace hitchin::exact {

/// Reduced fraction over int64. Matrix entries in the Lie-theoretic
/// constructions stay tiny, so no overflow guards beyond normalization.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(std::abs(num), den);
    if (g > 1) { num /= g; den /= g; }
  }

  Rational operator+(const Rational& o) const { return {num * o.den + o.num * den, den * o.den}; }
  Rational operator-(const Rational& o) const { return {num * o.den - o.num * den, den * o.den}; }
  Rational operator*(const Rational& o) const { return {num * o.num, den * o.den}; }
  Rational operator/(const Rational& o) const {
    if (o.num == 0) throw std::invalid_argument("Rational: division by zero");
    return {num * o.den, den * o.num};
  }
  Rational operator-() const { return {-num, den}; }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool is_zero() const { return num == 0; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

inline std::int64_t squarefree_split(std::int64_t m, std::int64_t& square_part) {
  // m = square_part^2 * squarefree; m >= 0
  square_part = 1;
  std::int64_t rest = m;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) { rest /= p * p; square_part *= p; }
  }
  return rest;
}

/// A value of the form q * sqrt(m) with q rational and m a squarefree
/// nonnegative integer. Closed under multiplication; addition requires
/// matching radicands.
struct SqrtVal {
  Rational coeff;      // q
  std::int64_t rad = 1;  // squarefree m >= 0; value = q * sqrt(m)

  SqrtVal() : coeff(0), rad(1) {}
  SqrtVal(Rational q) : coeff(q), rad(1) {}
  static SqrtVal sqrt_of(std::int64_t m) {
    if (m < 0) throw std::invalid_argument("SqrtVal: negative radicand");
    std::int64_t sq = 1;
    std::int64_t sf = squarefree_split(m, sq);
    SqrtVal v;
    v.coeff = Rational(sq);
    v.rad = (sf == 0) ? 1 : sf;
    if (sf == 0) v.coeff = Rational(0);
    return v;
  }

  void canonicalize() { if (coeff.is_zero()) rad = 1; }

  SqrtVal operator*(const SqrtVal& o) const {
    SqrtVal r;
    std::int64_t m = rad * o.rad;
    std::int64_t sq = 1;
    std::int64_t sf = squarefree_split(m, sq);
    r.coeff = coeff * o.coeff * Rational(sq);
    r.rad = sf;
    r.canonicalize();
    return r;
  }
  SqrtVal operator+(const SqrtVal& o) const {
    if (coeff.is_zero()) return o;
    if (o.coeff.is_zero()) return *this;
    if (rad != o.rad) throw std::domain_error("SqrtVal: incompatible radicands in addition");
    SqrtVal r;
    r.coeff = coeff + o.coeff;
    r.rad = rad;
    r.canonicalize();
    return r;
  }
  SqrtVal operator-() const { SqrtVal r = *this; r.coeff = -r.coeff; return r; }
  SqrtVal operator-(const SqrtVal& o) const { return *this + (-o); }
  bool operator==(const SqrtVal& o) const {
    if (coeff.is_zero() && o.coeff.is_zero()) return true;
    return coeff == o.coeff && rad == o.rad;
  }
  bool is_zero() const { return coeff.is_zero(); }
  double value() const { return coeff.value() * std::sqrt(static_cast<double>(rad)); }
};

using ExactMatrix = std::vector<std::vector<SqrtVal>>;

inline ExactMatrix exact_zero(int n) {
  return ExactMatrix(static_cast<size_t>(n), std::vector<SqrtVal>(static_cast<size_t>(n)));
}

inline ExactMatrix exact_mul(const ExactMatrix& a, const ExactMatrix& b) {
  const size_t n = a.size();
  ExactMatrix c = exact_zero(static_cast<int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < n; ++j) {
        if (b[k][j].is_zero()) continue;
        c[i][j] = c[i][j] + a[i][k] * b[k][j];
      }
    }
  return c;
}

inline ExactMatrix exact_comm(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix ab = exact_mul(a, b), ba = exact_mul(b, a);
  const size_t n = a.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) ab[i][j] = ab[i][j] - ba[i][j];
  return ab;
}

inline bool exact_equal(const ExactMatrix& a, const ExactMatrix& b) {
  const size_t n = a.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!(a[i][j] == b[i][j])) return false;
  return true;
}

inline ExactMatrix exact_scale(const ExactMatrix& a, const SqrtVal& s) {
  ExactMatrix c = a;
  for (auto& row : c)
    for (auto& v : row) v = v * s;
  return c;
}

inline CMatrix to_cmatrix(const ExactMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.size());
  CMatrix m = CMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = a[static_cast<size_t>(i)][static_cast<size_t>(j)].value();
  return m;
}

}  // namespace hitchin::exact
