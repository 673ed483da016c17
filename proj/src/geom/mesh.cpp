#include "hitchin/geom/mesh.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hitchin::geom {

namespace {

long long quantize(double x) { return static_cast<long long>(std::llround(x * 1e11)); }

struct VertexPool {
  std::vector<Complex> pts;
  std::map<std::pair<long long, long long>, int> index;

  int get(Complex p) {
    const auto key = std::make_pair(quantize(p.real()), quantize(p.imag()));
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    const int id = static_cast<int>(pts.size());
    pts.push_back(p);
    index.emplace(key, id);
    return id;
  }

  // Nearest existing vertex within tol, scanning neighbor quantization cells.
  int find_near(Complex p, double tol = 1e-9) const {
    const long long qx = quantize(p.real()), qy = quantize(p.imag());
    int best = -1;
    double best_d = tol;
    for (long long dx = -1; dx <= 1; ++dx)
      for (long long dy = -1; dy <= 1; ++dy) {
        auto it = index.find({qx + dx, qy + dy});
        if (it == index.end()) continue;
        const double d = std::abs(pts[static_cast<size_t>(it->second)] - p);
        if (d < best_d) { best_d = d; best = it->second; }
      }
    return best;
  }
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

void finalize_mesh(SurfaceMesh& m) {
  const int nv = static_cast<int>(m.vertex.size());

  UnionFind uf(nv);
  std::vector<char> is_image(static_cast<size_t>(nv), 0);
  for (const auto& [i, j, g] : m.links) {
    uf.unite(i, j);
    is_image[static_cast<size_t>(i)] = 1;
  }

  // One representative per orbit, preferring vertices that are never the
  // image of a link (interior points and the chosen boundary side).
  std::map<int, int> rep_of_root;
  m.rep_index.assign(static_cast<size_t>(nv), -1);
  m.rep_ids.clear();
  for (int v = 0; v < nv; ++v) {
    const int root = uf.find(v);
    if (!rep_of_root.count(root) && !is_image[static_cast<size_t>(v)]) {
      rep_of_root[root] = static_cast<int>(m.rep_ids.size());
      m.rep_ids.push_back(v);
    }
  }
  for (int v = 0; v < nv; ++v) {
    const int root = uf.find(v);
    if (!rep_of_root.count(root)) {
      rep_of_root[root] = static_cast<int>(m.rep_ids.size());
      m.rep_ids.push_back(v);
    }
    m.rep_index[static_cast<size_t>(v)] = rep_of_root[root];
  }
  m.n_reps = static_cast<int>(m.rep_ids.size());

  // Gauges by BFS over the link graph from each representative.
  m.gauge.assign(static_cast<size_t>(nv), MobiusMap::identity());
  {
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(nv));  // (other, +-(gen+1))
    for (const auto& [i, j, g] : m.links) {
      adj[static_cast<size_t>(j)].push_back({i, g + 1});     // i = g(j)
      adj[static_cast<size_t>(i)].push_back({j, -(g + 1)});  // j = g^{-1}(i)
    }
    std::vector<char> seen(static_cast<size_t>(nv), 0);
    for (int r : m.rep_ids) {
      std::queue<int> q;
      q.push(r);
      seen[static_cast<size_t>(r)] = 1;
      while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (auto [w, sg] : adj[static_cast<size_t>(v)]) {
          if (seen[static_cast<size_t>(w)]) continue;
          seen[static_cast<size_t>(w)] = 1;
          const int gi = std::abs(sg) - 1;
          MobiusMap step = m.group.pairing[static_cast<size_t>(gi)];
          if (sg < 0) step = step.inverse();
          m.gauge[static_cast<size_t>(w)] = step.compose(m.gauge[static_cast<size_t>(v)]);
          q.push(w);
        }
      }
    }
    for (int v = 0; v < nv; ++v) {
      const Complex rep_pos =
          m.vertex[static_cast<size_t>(m.rep_ids[static_cast<size_t>(m.rep_index[static_cast<size_t>(v)])])];
      if (std::abs(m.gauge[static_cast<size_t>(v)].apply(rep_pos) - m.vertex[static_cast<size_t>(v)]) > 1e-8)
        throw std::logic_error("finalize_mesh: gauge chain inconsistent");
    }
  }

  // Cotangent weights, areas, gradient functionals.
  const MetricChart metric = disk_metric();
  const size_t nt = m.tri.size();
  m.cot_w.assign(nt, {0, 0, 0});
  m.tri_area_euc.assign(nt, 0.0);
  m.tri_area_hyp.assign(nt, 0.0);
  m.grad_x.assign(nt, {0, 0, 0});
  m.grad_y.assign(nt, {0, 0, 0});
  m.rep_area.assign(static_cast<size_t>(m.n_reps), 0.0);

  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(12 * nt);
  for (size_t t = 0; t < nt; ++t) {
    const auto& T = m.tri[t];
    const Complex p0 = m.vertex[static_cast<size_t>(T[0])];
    const Complex p1 = m.vertex[static_cast<size_t>(T[1])];
    const Complex p2 = m.vertex[static_cast<size_t>(T[2])];
    const Complex e01 = p1 - p0;
    const double area2 = (std::conj(e01) * (p2 - p0)).imag();
    if (area2 <= 1e-14) throw std::logic_error("build_mesh: degenerate or inverted triangle");
    m.tri_area_euc[t] = 0.5 * area2;

    // Intrinsic cotangent weights from hyperbolic edge lengths. Lengths are
    // chart-invariant, so glued boundary stars stay geometrically consistent
    // (straight chart edges would kink across the side arcs).
    const double a = hyper_distance(p1, p2);  // opposite vertex 0
    const double b = hyper_distance(p2, p0);  // opposite vertex 1
    const double c = hyper_distance(p0, p1);  // opposite vertex 2
    const double s4 = (a + b + c) / 2.0;
    const double heron2 = s4 * (s4 - a) * (s4 - b) * (s4 - c);
    if (heron2 <= 0.0) throw std::logic_error("build_mesh: degenerate intrinsic triangle");
    const double area_flat = std::sqrt(heron2);
    m.cot_w[t][0] = (a * a + b * b - c * c) / (8.0 * area_flat);  // cot(angle at 2)/2
    m.cot_w[t][1] = (b * b + c * c - a * a) / (8.0 * area_flat);  // cot(angle at 0)/2
    m.cot_w[t][2] = (c * c + a * a - b * b) / (8.0 * area_flat);  // cot(angle at 1)/2

    const Complex m01 = 0.5 * (p0 + p1), m12 = 0.5 * (p1 + p2), m20 = 0.5 * (p2 + p0);
    auto l2 = [&](Complex p) {
      const double l = metric.lambda(p);
      return l * l;
    };
    m.tri_area_hyp[t] = m.tri_area_euc[t] * (l2(m01) + l2(m12) + l2(m20)) / 3.0;

    const int r[3] = {m.rep_index[static_cast<size_t>(T[0])], m.rep_index[static_cast<size_t>(T[1])],
                      m.rep_index[static_cast<size_t>(T[2])]};
    for (int i = 0; i < 3; ++i) m.rep_area[static_cast<size_t>(r[i])] += m.tri_area_hyp[t] / 3.0;

    auto add_edge = [&](int a, int b, double w) {
      trips.emplace_back(a, a, w);
      trips.emplace_back(b, b, w);
      trips.emplace_back(a, b, -w);
      trips.emplace_back(b, a, -w);
    };
    add_edge(r[0], r[1], m.cot_w[t][0]);
    add_edge(r[1], r[2], m.cot_w[t][1]);
    add_edge(r[2], r[0], m.cot_w[t][2]);

    const double x0 = p0.real(), y0 = p0.imag();
    const double x1 = p1.real(), y1 = p1.imag();
    const double x2 = p2.real(), y2 = p2.imag();
    m.grad_x[t] = {(y1 - y2) / area2, (y2 - y0) / area2, (y0 - y1) / area2};
    m.grad_y[t] = {(x2 - x1) / area2, (x0 - x2) / area2, (x1 - x0) / area2};
  }
  m.stiffness.resize(m.n_reps, m.n_reps);
  m.stiffness.setFromTriplets(trips.begin(), trips.end());

  m.build_locator();
}

}  // namespace

double SurfaceMesh::total_area() const {
  double a = 0.0;
  for (double t : tri_area_hyp) a += t;
  return a;
}

SurfaceMesh build_mesh(const FuchsianSurface& surface, double target_edge) {
  const double side_hyp = 2.0 * hyper_distance(surface.vertex[0], surface.vertex[1]);
  if (target_edge <= 0.0 || target_edge >= side_hyp)
    throw std::invalid_argument("build_mesh: 0 < target_edge < domain diameter required");
  int k = static_cast<int>(std::ceil(std::sqrt(M_PI / 8.0) / target_edge));
  if (k < 2) k = 2;

  SurfaceMesh m;
  m.group = surface;
  m.target_edge = target_edge;
  m.subdivisions = k;

  VertexPool pool;
  // Slice map: radial scaling of a blend between the straight chord and the
  // geodesic side arc. Pure arc scaling is homogeneous of degree one and
  // makes vertex stars near the center irreducibly distorted; the u^2 blend
  // keeps the map affine to second order at the center while the boundary
  // row stays exactly on the geodesic (required by the side pairings).
  for (int s = 0; s < 8; ++s) {
    const Complex wa = std::polar(surface.r_vertex, s * M_PI / 4.0 - M_PI / 8.0);
    const Complex wb = std::polar(surface.r_vertex, s * M_PI / 4.0 + M_PI / 8.0);
    std::vector<std::vector<int>> row_ids(static_cast<size_t>(k) + 1);
    for (int row = 0; row <= k; ++row) {
      const double u = static_cast<double>(row) / k;
      row_ids[static_cast<size_t>(row)].resize(static_cast<size_t>(row) + 1);
      for (int j = 0; j <= row; ++j) {
        const double t = (row == 0) ? 0.0 : static_cast<double>(j) / row;
        const Complex arc = geodesic_point(wa, wb, t);
        const Complex chord = wa + t * (wb - wa);
        const double blend = u * u;
        const Complex p = u * (chord + blend * (arc - chord));
        row_ids[static_cast<size_t>(row)][static_cast<size_t>(j)] = pool.get(p);
      }
    }
    for (int row = 1; row <= k; ++row)
      for (int j = 0; j < row; ++j) {
        const int a = row_ids[static_cast<size_t>(row)][static_cast<size_t>(j)];
        const int b = row_ids[static_cast<size_t>(row)][static_cast<size_t>(j + 1)];
        const int c = row_ids[static_cast<size_t>(row - 1)][static_cast<size_t>(j)];
        m.tri.push_back({a, b, c});
        if (j + 1 < row) {
          const int d = row_ids[static_cast<size_t>(row - 1)][static_cast<size_t>(j + 1)];
          m.tri.push_back({b, d, c});
        }
      }
  }
  m.vertex = pool.pts;

  // Identification links: every vertex on a slave side s in {4..7} is the
  // image of a side-(s-4) vertex under g_s.
  std::set<std::array<int, 3>> link_set;
  for (int s = 4; s < 8; ++s) {
    const Complex wa = std::polar(surface.r_vertex, s * M_PI / 4.0 - M_PI / 8.0);
    const Complex wb = std::polar(surface.r_vertex, s * M_PI / 4.0 + M_PI / 8.0);
    const MobiusMap back = surface.pairing[static_cast<size_t>(s - 4)];  // side s -> side s-4
    for (int j = 0; j <= k; ++j) {
      const Complex p = geodesic_point(wa, wb, static_cast<double>(j) / k);
      const int vid = pool.find_near(p);
      if (vid < 0) throw std::logic_error("build_mesh: boundary vertex lookup failed");
      const Complex q = back.apply(p);
      const int pid = pool.find_near(q);
      if (pid < 0) throw std::logic_error("build_mesh: side identification mismatch");
      link_set.insert({vid, pid, s});  // vid = g_s(pid)
    }
  }
  m.links.assign(link_set.begin(), link_set.end());

  finalize_mesh(m);
  return m;
}

void SurfaceMesh::build_locator() {
  grid_n = 128;
  grid_cells.assign(static_cast<size_t>(grid_n) * grid_n, {});
  const double lo = -0.9, hi = 0.9;
  auto cell_of = [&](double x) {
    const int c = static_cast<int>((x - lo) / (hi - lo) * grid_n);
    return std::min(std::max(c, 0), grid_n - 1);
  };
  for (size_t t = 0; t < tri.size(); ++t) {
    double xmin = 2, xmax = -2, ymin = 2, ymax = -2;
    for (int i = 0; i < 3; ++i) {
      const Complex p = vertex[static_cast<size_t>(tri[t][static_cast<size_t>(i)])];
      xmin = std::min(xmin, p.real());
      xmax = std::max(xmax, p.real());
      ymin = std::min(ymin, p.imag());
      ymax = std::max(ymax, p.imag());
    }
    for (int cx = cell_of(xmin - 1e-12); cx <= cell_of(xmax + 1e-12); ++cx)
      for (int cy = cell_of(ymin - 1e-12); cy <= cell_of(ymax + 1e-12); ++cy)
        grid_cells[static_cast<size_t>(cy) * grid_n + static_cast<size_t>(cx)].push_back(static_cast<int>(t));
  }
}

std::array<double, 3> SurfaceMesh::barycentric(int t, Complex p) const {
  const Complex p0 = vertex[static_cast<size_t>(tri[static_cast<size_t>(t)][0])];
  const Complex p1 = vertex[static_cast<size_t>(tri[static_cast<size_t>(t)][1])];
  const Complex p2 = vertex[static_cast<size_t>(tri[static_cast<size_t>(t)][2])];
  const double det = (std::conj(p1 - p0) * (p2 - p0)).imag();
  const double l1 = (std::conj(p - p0) * (p2 - p0)).imag() / det;
  const double l2 = (std::conj(p1 - p0) * (p - p0)).imag() / det;
  return {1.0 - l1 - l2, l1, l2};
}

int SurfaceMesh::locate_triangle(Complex p) const {
  if (grid_n == 0) return -1;
  const double lo = -0.9, hi = 0.9;
  auto cell_of = [&](double x) {
    const int c = static_cast<int>((x - lo) / (hi - lo) * grid_n);
    return std::min(std::max(c, 0), grid_n - 1);
  };
  const auto& cands =
      grid_cells[static_cast<size_t>(cell_of(p.imag())) * grid_n + static_cast<size_t>(cell_of(p.real()))];
  int best = -1;
  double best_violation = 1e-7;
  for (int t : cands) {
    const auto l = barycentric(t, p);
    const double violation = -std::min({l[0], l[1], l[2]});
    if (violation <= 0.0) return t;
    if (violation < best_violation) {
      best_violation = violation;
      best = t;
    }
  }
  return best;
}

double SurfaceMesh::interpolate(const RVector& rep_field, Complex p) const {
  const int t = locate_triangle(p);
  if (t < 0) throw std::domain_error("interpolate: point outside mesh");
  const auto l = barycentric(t, p);
  double val = 0.0;
  for (int i = 0; i < 3; ++i)
    val += l[static_cast<size_t>(i)] *
           rep_field(rep_index[static_cast<size_t>(tri[static_cast<size_t>(t)][static_cast<size_t>(i)])]);
  return val;
}

void save_mesh(const SurfaceMesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_mesh: cannot open " + path);
  out.precision(17);
  for (const Complex& p : mesh.vertex) out << "v " << p.real() << " " << p.imag() << "\n";
  for (const auto& t : mesh.tri) out << "t " << t[0] << " " << t[1] << " " << t[2] << "\n";
  for (const auto& [i, j, g] : mesh.links) out << "p " << i << " " << j << " " << g << "\n";
}

SurfaceMesh load_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_mesh: cannot open " + path);
  SurfaceMesh m;
  m.group = bolza_group();
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    char tag = 0;
    ss >> tag;
    if (tag == 'v') {
      double x = 0, y = 0;
      ss >> x >> y;
      m.vertex.push_back(Complex(x, y));
    } else if (tag == 't') {
      int i = 0, j = 0, k = 0;
      ss >> i >> j >> k;
      m.tri.push_back({i, j, k});
    } else if (tag == 'p') {
      int i = 0, j = 0, g = 0;
      ss >> i >> j >> g;
      m.links.push_back({i, j, g});
    } else {
      throw std::runtime_error("load_mesh: unknown record '" + line + "'");
    }
    if (ss.fail()) throw std::runtime_error("load_mesh: malformed record '" + line + "'");
  }
  finalize_mesh(m);
  return m;
}

}  // namespace hitchin::geom
