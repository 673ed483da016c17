#include "hitchin/geom/bolza.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace hitchin::geom {

FuchsianSurface bolza_group() {
  FuchsianSurface s;
  const double sqrt2 = std::sqrt(2.0);
  const double a0 = 1.0 + sqrt2;                  // cosh of half the translation length
  const double b0 = std::sqrt(2.0 + 2.0 * sqrt2);

  for (int k = 0; k < 8; ++k) {
    const Complex w = std::polar(1.0, k * M_PI / 8.0);  // rotation by k*pi/4 in SU(1,1)
    // g_k = R T R^{-1} with T = [[a0, b0], [b0, a0]]
    s.pairing[static_cast<size_t>(k)] = MobiusMap{a0, b0 * w * w, b0 * std::conj(w) * std::conj(w), a0};
  }

  s.relation_word = {0, 5, 2, 7, 4, 1, 6, 3};  // g0 g1^-1 g2 g3^-1 g0^-1 g1 g2^-1 g3

  s.r_vertex = std::tanh(0.5 * std::acosh(3.0 + 2.0 * sqrt2));
  s.r_mid = std::tanh(0.5 * std::acosh(1.0 + sqrt2));
  for (int k = 0; k < 8; ++k) {
    s.vertex[static_cast<size_t>(k)] = std::polar(s.r_vertex, (2 * k + 1) * M_PI / 8.0);
    const double c = 0.5 * (s.r_mid + 1.0 / s.r_mid);
    const double r = 0.5 * (1.0 / s.r_mid - s.r_mid);
    s.side_center[static_cast<size_t>(k)] = std::polar(c, k * M_PI / 4.0);
    s.side_radius[static_cast<size_t>(k)] = r;
  }

  // Construction checks: pairings map side midpoints correctly and the
  // relation word closes up to +I.
  for (int k = 0; k < 4; ++k) {
    const Complex src = std::polar(s.r_mid, (k + 4) * M_PI / 4.0);
    const Complex dst = std::polar(s.r_mid, k * M_PI / 4.0);
    if (std::abs(s.pairing[static_cast<size_t>(k)].apply(src) - dst) > 1e-10)
      throw std::logic_error("bolza_group: side pairing mismatch");
  }
  MobiusMap rel = MobiusMap::identity();
  for (int idx : s.relation_word) rel = rel.compose(s.pairing[static_cast<size_t>(idx)]);
  const double dev = std::abs(rel.a - 1.0) + std::abs(rel.b) + std::abs(rel.c) + std::abs(rel.d - 1.0);
  if (dev > 1e-10) throw std::logic_error("bolza_group: relation word does not close");

  return s;
}

bool FuchsianSurface::inside(Complex p) const {
  return violated_side(p) < 0 && std::abs(p) < 1.0;
}

int FuchsianSurface::violated_side(Complex p) const {
  for (int k = 0; k < 8; ++k)
    if (std::abs(p - side_center[static_cast<size_t>(k)]) < side_radius[static_cast<size_t>(k)]) return k;
  return -1;
}

std::vector<MobiusMap> FuchsianSurface::elements(int L) const {
  if (L < 0) throw std::invalid_argument("elements: L >= 0 required");
  std::vector<MobiusMap> out;

  // Dedupe on matrices up to sign via a scalar bucket hash.
  auto canonical = [](const MobiusMap& m) {
    MobiusMap c = m;
    const Complex probe = std::abs(c.a) >= std::abs(c.b) ? c.a : c.b;
    if (probe.real() < 0 || (std::abs(probe.real()) < 1e-12 && probe.imag() < 0)) c = c.negated();
    return c;
  };
  auto same_element = [](const MobiusMap& x, const MobiusMap& y) {
    const double scale = std::max({1.0, std::abs(x.a), std::abs(x.b)});
    auto dev = [&](const MobiusMap& m) {
      return std::abs(m.a - x.a) + std::abs(m.b - x.b) + std::abs(m.c - x.c) + std::abs(m.d - x.d);
    };
    return dev(y) < 1e-6 * scale || dev(y.negated()) < 1e-6 * scale;
  };

  const double bucket = 1e-4;
  std::multimap<long long, size_t> index;
  auto insert_if_new = [&](const MobiusMap& m) -> bool {
    const MobiusMap canon = canonical(m);
    const double kappa = canon.a.real() + 0.7312 * canon.a.imag() + 0.3141 * canon.b.real() +
                         0.1379 * canon.b.imag();
    const long long kq = static_cast<long long>(std::llround(kappa / bucket));
    for (long long dk = -1; dk <= 1; ++dk) {
      auto [lo, hi] = index.equal_range(kq + dk);
      for (auto it = lo; it != hi; ++it)
        if (same_element(out[it->second], canon)) return false;
    }
    index.emplace(kq, out.size());
    out.push_back(canon);
    return true;
  };

  insert_if_new(MobiusMap::identity());
  size_t level_begin = 0;
  for (int len = 1; len <= L; ++len) {
    const size_t level_end = out.size();
    for (size_t i = level_begin; i < level_end; ++i) {
      const MobiusMap base = out[i];
      for (int k = 0; k < 8; ++k) insert_if_new(pairing[static_cast<size_t>(k)].compose(base));
    }
    level_begin = level_end;
  }
  return out;
}

double hyper_distance(Complex p, Complex q) {
  // curvature -4 model: ds = |dz| / (1 - |z|^2), half the classical metric
  const double t = std::abs((p - q) / (1.0 - std::conj(p) * q));
  return std::atanh(t);
}

Complex geodesic_point(Complex p, Complex q, double t) {
  // Moebius-transport p to 0, walk the straight ray, map back.
  const Complex w = (q - p) / (1.0 - std::conj(p) * q);
  const double rho = std::abs(w);
  if (rho < 1e-15) return p;
  const double d = std::atanh(rho);
  const double rt = std::tanh(t * d);
  const Complex wt = w / rho * rt;
  return (wt + p) / (1.0 + std::conj(p) * wt);
}

}  // namespace hitchin::geom
