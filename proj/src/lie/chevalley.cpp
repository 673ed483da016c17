#include "hitchin/lie/chevalley.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace hitchin::lie {

using exact::Rational;

CartanType parse_cartan_type(const std::string& label) {
  if (label.size() < 2) throw std::invalid_argument("bad Cartan label: " + label);
  CartanType t;
  t.series = static_cast<char>(std::toupper(label[0]));
  t.rank = std::stoi(label.substr(1));
  const bool ok =
      (t.series == 'A' && t.rank >= 1 && t.rank <= 4) ||
      (t.series == 'B' && t.rank >= 2 && t.rank <= 4) ||
      (t.series == 'C' && t.rank >= 2 && t.rank <= 4) ||
      (t.series == 'D' && t.rank == 4) ||
      (t.series == 'G' && t.rank == 2);
  if (!ok) throw std::invalid_argument("unsupported Cartan type: " + label);
  return t;
}

std::string to_string(const CartanType& t) {
  return std::string(1, t.series) + std::to_string(t.rank);
}

namespace {

std::vector<std::vector<int>> gram_matrix(const CartanType& t) {
  const int r = t.rank;
  std::vector<std::vector<int>> g(static_cast<size_t>(r), std::vector<int>(static_cast<size_t>(r), 0));
  auto path = [&](const std::vector<int>& diag, int last_off) {
    for (int i = 0; i < r; ++i) g[static_cast<size_t>(i)][static_cast<size_t>(i)] = diag[static_cast<size_t>(i)];
    for (int i = 0; i + 1 < r; ++i) g[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = g[static_cast<size_t>(i + 1)][static_cast<size_t>(i)] = -1;
    if (r >= 2) g[static_cast<size_t>(r - 2)][static_cast<size_t>(r - 1)] = g[static_cast<size_t>(r - 1)][static_cast<size_t>(r - 2)] = last_off;
  };
  switch (t.series) {
    case 'A': path(std::vector<int>(static_cast<size_t>(r), 2), -1); break;
    case 'B': {
      std::vector<int> d(static_cast<size_t>(r), 2);
      d[static_cast<size_t>(r - 1)] = 1;
      path(d, -1);
      break;
    }
    case 'C': {
      std::vector<int> d(static_cast<size_t>(r), 2);
      d[static_cast<size_t>(r - 1)] = 4;
      path(d, -2);
      break;
    }
    case 'D':
      for (int i = 0; i < 4; ++i) g[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
      g[0][1] = g[1][0] = -1;
      g[1][2] = g[2][1] = -1;
      g[1][3] = g[3][1] = -1;
      break;
    case 'G':
      g[0][0] = 2; g[1][1] = 6;
      g[0][1] = g[1][0] = -3;
      break;
    default: throw std::logic_error("unreachable");
  }
  return g;
}

int expected_pos_roots(const CartanType& t) {
  switch (t.series) {
    case 'A': return t.rank * (t.rank + 1) / 2;
    case 'B':
    case 'C': return t.rank * t.rank;
    case 'D': return t.rank * (t.rank - 1);
    case 'G': return 6;
  }
  return -1;
}

long long inner(const ChevalleyData& g, const RootVec& a, const RootVec& b) {
  long long s = 0;
  for (int i = 0; i < g.rank; ++i)
    for (int j = 0; j < g.rank; ++j)
      s += static_cast<long long>(a[static_cast<size_t>(i)]) *
           g.gram[static_cast<size_t>(i)][static_cast<size_t>(j)] * b[static_cast<size_t>(j)];
  return s;
}

RootVec add(const RootVec& a, const RootVec& b, int sb = 1) {
  RootVec c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + sb * b[i];
  return c;
}

int height_of(const RootVec& v) {
  int h = 0;
  for (int c : v) h += c;
  return h;
}

struct RootOrder {
  bool operator()(const RootVec& a, const RootVec& b) const {
    const int ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a < b;
  }
};

int find_pos_index(const ChevalleyData& g, const RootVec& v) {
  auto it = std::lower_bound(g.positive_roots.begin(), g.positive_roots.end(), v, RootOrder{});
  if (it == g.positive_roots.end() || *it != v) return -1;
  return static_cast<int>(it - g.positive_roots.begin());
}

// Signed 1-based index of a root vector, 0 if not a root.
int signed_index(const ChevalleyData& g, const RootVec& v) {
  bool neg = false, pos = false;
  for (int c : v) {
    if (c < 0) neg = true;
    if (c > 0) pos = true;
  }
  if (neg && pos) return 0;
  RootVec w = v;
  if (neg)
    for (int& c : w) c = -c;
  const int k = find_pos_index(g, w);
  if (k < 0) return 0;
  return neg ? -(k + 1) : (k + 1);
}

RootVec root_of_signed(const ChevalleyData& g, int a) {
  RootVec v = g.positive_roots[static_cast<size_t>(std::abs(a) - 1)];
  if (a < 0)
    for (int& c : v) c = -c;
  return v;
}

Rational n_positive(const ChevalleyData& g, int i, int j) {  // 0-based indices
  if (i == j) return Rational(0);
  if (i < j) {
    auto it = g.n_table.find({i, j});
    return it == g.n_table.end() ? Rational(0) : Rational(it->second);
  }
  auto it = g.n_table.find({j, i});
  return it == g.n_table.end() ? Rational(0) : -Rational(it->second);
}

}  // namespace

bool is_root(const ChevalleyData& g, const RootVec& v) {
  return signed_index(g, v) != 0;
}

int root_string_down(const ChevalleyData& g, const RootVec& beta, const RootVec& alpha) {
  int p = 0;
  RootVec w = beta;
  for (;;) {
    w = add(w, alpha, -1);
    if (!is_root(g, w)) break;
    ++p;
  }
  return p;
}

exact::Rational n_value(const ChevalleyData& g, int a, int b) {
  const RootVec ra = root_of_signed(g, a), rb = root_of_signed(g, b);
  const RootVec sum = add(ra, rb);
  if (!is_root(g, sum)) return Rational(0);
  if (a > 0 && b > 0) return n_positive(g, a - 1, b - 1);
  if (a < 0 && b < 0) return -n_value(g, -a, -b);
  if (a < 0 && b > 0) return -n_value(g, b, a);
  // a > 0, b < 0.  x = ra, mu = -rb; x - mu is a root.
  const RootVec x = ra;
  RootVec mu = rb;
  for (int& c : mu) c = -c;
  const RootVec diff = add(x, mu, -1);
  const int sd = signed_index(g, diff);
  if (sd > 0) {
    // x = mu + delta with delta = diff: N(x,-mu) = -(d,d)/(x,x) N(mu,delta)
    const long long dd = inner(g, diff, diff);
    const long long xx = inner(g, x, x);
    return Rational(-dd, xx) * n_value(g, signed_index(g, mu), sd);
  }
  // mu = x + delta with delta = -diff: N(x,-mu) = (d,d)/(mu,mu) N(delta,x)
  const RootVec delta = root_of_signed(g, -sd);
  const long long dd = inner(g, delta, delta);
  const long long mm = inner(g, mu, mu);
  return Rational(dd, mm) * n_value(g, -sd, signed_index(g, x));
}

namespace {

struct BasisRef {
  int kind = 0;        // 0 = root vector, 1 = Cartan h_i
  int root_signed = 0;
  int cartan_i = 0;
};

using SparseVec = std::vector<std::pair<int, Rational>>;  // (basis index, coeff)

SparseVec bracket_sparse(const ChevalleyData& g, const std::vector<BasisRef>& basis, int bi, int bj) {
  const BasisRef& x = basis[static_cast<size_t>(bi)];
  const BasisRef& y = basis[static_cast<size_t>(bj)];
  SparseVec out;

  auto basis_index_of_signed = [&](int s) {
    const int k = std::abs(s) - 1;
    return s > 0 ? g.idx_pos[static_cast<size_t>(k)] : g.idx_neg[static_cast<size_t>(k)];
  };

  if (x.kind == 1 && y.kind == 1) return out;

  if (x.kind == 1 && y.kind == 0) {
    // [h_i, e_beta] = <beta, alpha_i^vee> e_beta
    const RootVec beta = root_of_signed(g, y.root_signed);
    long long pairing = 0;
    for (int j = 0; j < g.rank; ++j)
      pairing += static_cast<long long>(beta[static_cast<size_t>(j)]) *
                 g.cartan[static_cast<size_t>(x.cartan_i)][static_cast<size_t>(j)];
    if (pairing != 0) out.push_back({bj, Rational(pairing)});
    return out;
  }
  if (x.kind == 0 && y.kind == 1) {
    SparseVec o = bracket_sparse(g, basis, bj, bi);
    for (auto& p : o) p.second = -p.second;
    return o;
  }

  const RootVec ra = root_of_signed(g, x.root_signed);
  const RootVec rb = root_of_signed(g, y.root_signed);
  const RootVec sum = add(ra, rb);
  if (std::all_of(sum.begin(), sum.end(), [](int c) { return c == 0; })) {
    const int sgn = x.root_signed > 0 ? 1 : -1;
    const int k = std::abs(x.root_signed) - 1;
    for (int i = 0; i < g.rank; ++i) {
      const long long c = sgn * g.coroot[static_cast<size_t>(k)][static_cast<size_t>(i)];
      if (c != 0) out.push_back({g.idx_cartan[static_cast<size_t>(i)], Rational(c)});
    }
    return out;
  }
  const int ss = signed_index(g, sum);
  if (ss == 0) return out;
  const Rational n = n_value(g, x.root_signed, y.root_signed);
  if (!n.is_zero()) out.push_back({basis_index_of_signed(ss), n});
  return out;
}

}  // namespace

ChevalleyData chevalley_basis(const std::string& cartan_label) {
  ChevalleyData g;
  g.type = parse_cartan_type(cartan_label);
  g.rank = g.type.rank;
  g.gram = gram_matrix(g.type);
  const int r = g.rank;

  g.cartan.assign(static_cast<size_t>(r), std::vector<int>(static_cast<size_t>(r), 0));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const long long num = 2 * g.gram[static_cast<size_t>(j)][static_cast<size_t>(i)];
      const long long den = g.gram[static_cast<size_t>(i)][static_cast<size_t>(i)];
      if (num % den != 0) throw std::logic_error("non-integral Cartan entry");
      g.cartan[static_cast<size_t>(i)][static_cast<size_t>(j)] = static_cast<int>(num / den);
    }

  // Positive roots by repeated root-string extension.
  std::set<RootVec, RootOrder> roots;
  for (int i = 0; i < r; ++i) {
    RootVec v(static_cast<size_t>(r), 0);
    v[static_cast<size_t>(i)] = 1;
    roots.insert(v);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    g.positive_roots.assign(roots.begin(), roots.end());
    const std::vector<RootVec> snapshot = g.positive_roots;
    for (const RootVec& beta : snapshot) {
      for (int i = 0; i < r; ++i) {
        RootVec ai(static_cast<size_t>(r), 0);
        ai[static_cast<size_t>(i)] = 1;
        const int p = root_string_down(g, beta, ai);
        long long pairing = 0;
        for (int j = 0; j < r; ++j)
          pairing += static_cast<long long>(beta[static_cast<size_t>(j)]) *
                     g.cartan[static_cast<size_t>(i)][static_cast<size_t>(j)];
        if (p - pairing >= 1) {
          RootVec nb = add(beta, ai);
          if (!roots.count(nb)) {
            roots.insert(nb);
            grew = true;
          }
        }
      }
    }
  }
  g.positive_roots.assign(roots.begin(), roots.end());
  if (static_cast<int>(g.positive_roots.size()) != expected_pos_roots(g.type))
    throw std::logic_error("positive root count mismatch for " + cartan_label);
  for (const auto& v : g.positive_roots) g.root_height.push_back(height_of(v));

  const int m = g.n_pos();

  for (int k = 0; k < m; ++k) {
    const RootVec& beta = g.positive_roots[static_cast<size_t>(k)];
    const long long bb = inner(g, beta, beta);
    std::vector<long long> co(static_cast<size_t>(r), 0);
    for (int i = 0; i < r; ++i) {
      const long long num = static_cast<long long>(beta[static_cast<size_t>(i)]) *
                            g.gram[static_cast<size_t>(i)][static_cast<size_t>(i)];
      if (num % bb != 0) throw std::logic_error("non-integral coroot coefficient");
      co[static_cast<size_t>(i)] = num / bb;
    }
    g.coroot.push_back(co);
  }

  g.r_coeffs.assign(static_cast<size_t>(r), 0);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < r; ++i)
      g.r_coeffs[static_cast<size_t>(i)] += g.coroot[static_cast<size_t>(k)][static_cast<size_t>(i)];

  // Structure constants on positive pairs, by increasing height of the sum.
  for (int kg = 0; kg < m; ++kg) {
    const RootVec& gamma = g.positive_roots[static_cast<size_t>(kg)];
    if (g.root_height[static_cast<size_t>(kg)] < 2) continue;

    // Extraspecial pair: the minimal first element in root order; simple
    // roots occupy the first `r` slots of positive_roots.
    int ext_i = -1, ext_beta = -1;
    for (int k = 0; k < r; ++k) {
      const RootVec beta = add(gamma, g.positive_roots[static_cast<size_t>(k)], -1);
      const int kb = find_pos_index(g, beta);
      if (kb >= 0) { ext_i = k; ext_beta = kb; break; }
    }
    if (ext_i < 0) throw std::logic_error("no extraspecial pair found");
    if (ext_i >= ext_beta) throw std::logic_error("extraspecial pair not ordered");

    const RootVec alpha = g.positive_roots[static_cast<size_t>(ext_i)];
    const RootVec beta = g.positive_roots[static_cast<size_t>(ext_beta)];
    {
      const int p = root_string_down(g, beta, alpha);
      g.n_table[{ext_i, ext_beta}] = p + 1;
    }
    const Rational n_alpha_beta = n_positive(g, ext_i, ext_beta);
    const long long gg = inner(g, gamma, gamma);

    for (int kx = 0; kx < m; ++kx) {
      const RootVec& xi = g.positive_roots[static_cast<size_t>(kx)];
      const RootVec eta = add(gamma, xi, -1);
      const int ke = find_pos_index(g, eta);
      if (ke < 0 || ke <= kx) continue;
      if (kx == ext_i && ke == ext_beta) continue;

      Rational acc(0);
      bool any = false;
      const RootVec bmx = add(beta, xi, -1);
      if (is_root(g, bmx)) {
        any = true;
        const long long bb = inner(g, bmx, bmx);
        acc = acc + n_value(g, ext_beta + 1, -(kx + 1)) * n_value(g, ext_i + 1, -(ke + 1)) / Rational(bb);
      }
      const RootVec amx = add(alpha, xi, -1);
      if (is_root(g, amx)) {
        any = true;
        const long long aa = inner(g, amx, amx);
        acc = acc + n_value(g, -(kx + 1), ext_i + 1) * n_value(g, ext_beta + 1, -(ke + 1)) / Rational(aa);
      }
      if (!any) throw std::logic_error("degenerate special-pair recursion");

      const Rational n_xi_eta = Rational(gg) * acc / n_alpha_beta;
      if (n_xi_eta.den != 1) throw std::logic_error("non-integral structure constant");
      g.n_table[{kx, ke}] = n_xi_eta.num;
    }
  }

  // |N| = p + 1 on every positive pair.
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const RootVec sum = add(g.positive_roots[static_cast<size_t>(i)], g.positive_roots[static_cast<size_t>(j)]);
      if (!is_root(g, sum)) continue;
      const int p = root_string_down(g, g.positive_roots[static_cast<size_t>(j)], g.positive_roots[static_cast<size_t>(i)]);
      auto it = g.n_table.find({i, j});
      if (it == g.n_table.end() || std::abs(it->second) != p + 1)
        throw std::logic_error("structure constant magnitude mismatch");
    }

  // Weight-ordered basis.
  const int d = g.dim();
  std::vector<BasisRef> basis(static_cast<size_t>(d));
  g.idx_pos.assign(static_cast<size_t>(m), -1);
  g.idx_neg.assign(static_cast<size_t>(m), -1);
  g.idx_cartan.assign(static_cast<size_t>(r), -1);
  g.basis_grade.assign(static_cast<size_t>(d), 0);
  for (int k = 0; k < m; ++k) {
    const int pos_slot = m - 1 - k;
    basis[static_cast<size_t>(pos_slot)] = {0, k + 1, 0};
    g.idx_pos[static_cast<size_t>(k)] = pos_slot;
    g.basis_grade[static_cast<size_t>(pos_slot)] = 2 * g.root_height[static_cast<size_t>(k)];
    const int neg_slot = m + r + k;
    basis[static_cast<size_t>(neg_slot)] = {0, -(k + 1), 0};
    g.idx_neg[static_cast<size_t>(k)] = neg_slot;
    g.basis_grade[static_cast<size_t>(neg_slot)] = -2 * g.root_height[static_cast<size_t>(k)];
  }
  for (int i = 0; i < r; ++i) {
    basis[static_cast<size_t>(m + i)] = {1, 0, i};
    g.idx_cartan[static_cast<size_t>(i)] = m + i;
  }

  // Sparse exact bracket table; Jacobi verified exactly on all triples.
  std::vector<std::vector<SparseVec>> table(static_cast<size_t>(d), std::vector<SparseVec>(static_cast<size_t>(d)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      table[static_cast<size_t>(i)][static_cast<size_t>(j)] = bracket_sparse(g, basis, i, j);

  auto bracket_sv_unit = [&](const SparseVec& u, int k) {
    // [u, b_k]
    std::map<int, Rational> acc;
    for (const auto& [qi, qc] : u)
      for (const auto& [wi, wc] : table[static_cast<size_t>(qi)][static_cast<size_t>(k)]) {
        auto [it, inserted] = acc.try_emplace(wi, Rational(0));
        it->second = it->second + qc * wc;
      }
    return acc;
  };

  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k) {
        std::map<int, Rational> total;
        auto accumulate = [&](const std::map<int, Rational>& part) {
          for (const auto& [q, c] : part) {
            auto [it, inserted] = total.try_emplace(q, Rational(0));
            it->second = it->second + c;
          }
        };
        accumulate(bracket_sv_unit(table[static_cast<size_t>(i)][static_cast<size_t>(j)], k));
        accumulate(bracket_sv_unit(table[static_cast<size_t>(j)][static_cast<size_t>(k)], i));
        accumulate(bracket_sv_unit(table[static_cast<size_t>(k)][static_cast<size_t>(i)], j));
        for (const auto& [q, c] : total)
          if (!c.is_zero()) throw std::logic_error("Jacobi identity failed for " + cartan_label);
      }

  g.struct_const.assign(static_cast<size_t>(d), std::vector<RVector>(static_cast<size_t>(d)));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      RVector v = RVector::Zero(d);
      for (const auto& [q, c] : table[static_cast<size_t>(i)][static_cast<size_t>(j)]) v(q) = c.value();
      g.struct_const[static_cast<size_t>(i)][static_cast<size_t>(j)] = v;
    }
  g.adjoint.resize(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) {
    CMatrix ad = CMatrix::Zero(d, d);
    for (int j = 0; j < d; ++j)
      ad.col(j) = g.struct_const[static_cast<size_t>(i)][static_cast<size_t>(j)].cast<Complex>();
    g.adjoint[static_cast<size_t>(i)] = ad;
  }
  g.killing = RMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      const double v = (g.adjoint[static_cast<size_t>(i)] * g.adjoint[static_cast<size_t>(j)]).trace().real();
      g.killing(i, j) = g.killing(j, i) = v;
    }

  return g;
}

}  // namespace hitchin::lie
