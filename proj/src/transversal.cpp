#include "trop/transversal.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "trop/json_io.hpp"
#include "trop/lp.hpp"

namespace trop {

std::string counterexample_json();  // generated from data/counterexample_d3_12.json
CellComplexOnPi parse_cell_complex(const std::string& text);

void validate(const BipartiteCell& cell) {
  if (cell.n < 1 || cell.n > kMaxGround) throw std::invalid_argument("bipartite cell: need 1 <= n <= 16");
  if (cell.I & ~full_mask(cell.n)) throw std::invalid_argument("bipartite cell: I outside [n]");
  std::set<std::pair<int, int>> seen;
  for (auto [i, j] : cell.X) {
    if (i < 1 || i > cell.n || j < 1 || j > cell.n || !contains(cell.I, i) || contains(cell.I, j))
      throw std::invalid_argument("bipartite cell: pair (" + std::to_string(i) + "," + std::to_string(j) + ") is not in I x J");
    if (!seen.insert({i, j}).second) throw std::invalid_argument("bipartite cell: repeated pair");
  }
}

// Kuhn's augmenting paths: can every element of `left` be matched into `right`?
static bool perfect_matching(const std::vector<int>& left, Mask right, const std::vector<Mask>& adj) {
  std::map<int, int> owner;
  std::function<bool(int, Mask&)> augment = [&](int i, Mask& seen) {
    for (int j : elements(adj[i] & right & ~seen)) {
      seen |= bit(j);
      auto it = owner.find(j);
      if (it == owner.end() || augment(it->second, seen)) {
        owner[j] = i;
        return true;
      }
    }
    return false;
  };
  for (int i : left) {
    Mask seen = 0;
    if (!augment(i, seen)) return false;
  }
  return true;
}

Matroid transversal_matroid(const BipartiteCell& cell) {
  validate(cell);
  std::vector<Mask> adj(cell.n + 1, 0);
  for (auto [i, j] : cell.X) adj[i] |= bit(j);
  const int k = popcount(cell.I);
  std::vector<Mask> bases;
  for (Mask B : enumerate_ksubsets(k, cell.n))
    if (perfect_matching(elements(cell.I & ~B), B & ~cell.I, adj)) bases.push_back(B);
  return Matroid(cell.n, k, std::move(bases));
}

bool is_tree_cell(const BipartiteCell& cell) {
  validate(cell);
  if (static_cast<int>(cell.X.size()) != cell.n - 1) return false;
  std::vector<int> parent(cell.n + 1);
  for (int v = 0; v <= cell.n; ++v) parent[v] = v;
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (auto [i, j] : cell.X) {
    int a = find(i), b = find(j);
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

bool is_noncrossing_tree(const BipartiteCell& cell) {
  if (!is_tree_cell(cell)) throw std::invalid_argument("is_noncrossing_tree: not a tree");
  for (size_t s = 0; s < cell.X.size(); ++s)
    for (size_t t = s + 1; t < cell.X.size(); ++t) {
      auto [a, b] = std::minmax(cell.X[s].first, cell.X[s].second);
      auto [c, d] = std::minmax(cell.X[t].first, cell.X[t].second);
      if (a == c || a == d || b == c || b == d) continue;
      bool c_in = a < c && c < b;
      bool d_in = a < d && d < b;
      if (c_in != d_in) return false;
    }
  return true;
}

Mat pi_points(int n, Mask I) {
  Mat pts;
  for (int i : elements(I))
    for (int j = 1; j <= n; ++j) {
      if (contains(I, j)) continue;
      Vec v(n, 0);
      for (int t : elements(I)) v[t - 1] = 1;
      v[i - 1] = 0;
      v[j - 1] = 1;
      pts.push_back(std::move(v));
    }
  return pts;
}

static int pi_index(int n, Mask I, int i, int j) {
  int r = 0;
  for (int t : elements(I)) {
    if (t == i) break;
    ++r;
  }
  int c = 0;
  for (int t = 1; t < j; ++t)
    if (!contains(I, t)) ++c;
  return r * (n - popcount(I)) + c;
}

std::vector<int> pi_indices(const BipartiteCell& cell) {
  std::vector<int> idx;
  for (auto [i, j] : cell.X) idx.push_back(pi_index(cell.n, cell.I, i, j));
  std::sort(idx.begin(), idx.end());
  return idx;
}

TilingReport check_tiling(const CellComplexOnPi& cx) {
  TilingReport rep;
  const int k = popcount(cx.I);
  rep.expected_volume = static_cast<long>(binom(cx.n - 2, k - 1));
  rep.all_trees = true;
  for (const auto& c : cx.cells)
    if (!is_tree_cell(c)) rep.all_trees = false;
  rep.volume = rep.all_trees ? static_cast<long>(cx.cells.size()) : -1;
  Mat pts = pi_points(cx.n, cx.I);
  std::vector<std::vector<int>> idx;
  for (const auto& c : cx.cells) idx.push_back(pi_indices(c));
  rep.proper_intersections = true;
  for (size_t a = 0; a < idx.size() && rep.proper_intersections; ++a)
    for (size_t b = a + 1; b < idx.size(); ++b) {
      // Largest weight on A-only vertices over points of conv(A) meeting conv(B).
      const auto& A = idx[a];
      const auto& B = idx[b];
      const int na = static_cast<int>(A.size()), nb = static_cast<int>(B.size());
      LPProblem lp;
      lp.num_vars = na + nb;
      lp.maximize = true;
      lp.objective.assign(na + nb, 0);
      for (int s = 0; s < na; ++s)
        if (!std::binary_search(B.begin(), B.end(), A[s])) lp.objective[s] = 1;
      Vec ra(na + nb, 0), rb(na + nb, 0);
      for (int s = 0; s < na; ++s) ra[s] = 1;
      for (int s = 0; s < nb; ++s) rb[na + s] = 1;
      lp.add(ra, Sense::Equal, 1);
      lp.add(rb, Sense::Equal, 1);
      for (int coord = 0; coord < cx.n; ++coord) {
        Vec row(na + nb, 0);
        for (int s = 0; s < na; ++s) row[s] = pts[A[s]][coord];
        for (int s = 0; s < nb; ++s) row[na + s] = -pts[B[s]][coord];
        lp.add(std::move(row), Sense::Equal, 0);
      }
      auto res = lp_solve(lp);
      if (res.status == LPStatus::Optimal && res.value > 0) {
        rep.proper_intersections = false;
        rep.bad_pair = {static_cast<int>(a), static_cast<int>(b)};
        break;
      }
    }
  return rep;
}

Subdivision cayley_lift(const CellComplexOnPi& cx) {
  Subdivision D;
  D.k = popcount(cx.I);
  D.n = cx.n;
  for (const auto& c : cx.cells) {
    if (c.n != cx.n || c.I != cx.I) throw std::invalid_argument("cayley_lift: cell does not match the complex");
    auto bases = transversal_matroid(c).bases();
    std::vector<Mask> cell(bases.begin(), bases.end());
    std::sort(cell.begin(), cell.end(), [&](Mask x, Mask y) { return lex_rank(x, cx.n) < lex_rank(y, cx.n); });
    D.cells.push_back(std::move(cell));
  }
  return D;
}

RegularityCertificate is_regular_complex(const CellComplexOnPi& cx) {
  std::vector<std::vector<int>> cells;
  for (const auto& c : cx.cells) cells.push_back(pi_indices(c));
  return is_regular_subdivision(pi_points(cx.n, cx.I), cells);
}

CellComplexOnPi restrict_to_pi(const Subdivision& D, Mask I) {
  CellComplexOnPi cx;
  cx.n = D.n;
  cx.I = I;
  const int k = popcount(I);
  if (k != D.k) throw std::invalid_argument("restrict_to_pi: |I| must equal k");
  Mat pts = pi_points(D.n, I);
  for (const auto& cell : D.cells) {
    BipartiteCell bc{D.n, I, {}};
    for (Mask B : cell) {
      if (popcount(B & I) != k - 1) continue;
      int i = elements(I & ~B)[0];
      int j = elements(B & ~I)[0];
      bc.X.emplace_back(i, j);
    }
    Mat sub;
    for (int id : pi_indices(bc)) sub.push_back(pts[id]);
    if (affine_rank(sub) == D.n - 1) cx.cells.push_back(std::move(bc));
  }
  return cx;
}

CellComplexOnPi counterexample_data() { return parse_cell_complex(counterexample_json()); }

bool CounterexampleReport::passed() const {
  return cells == 45 && noncrossing_trees == 45 && positroid_cells == 45 && tiling.ok() && !complex_regularity.regular &&
         complex_witness_verified && lift_facets == 45 && lift_matroidal && lift_positroidal_facets == 45 &&
         !lift_regularity.regular && lift_witness_verified;
}

CounterexampleReport verify_counterexample() {
  CounterexampleReport rep;
  CellComplexOnPi cx = counterexample_data();
  rep.cells = static_cast<int>(cx.cells.size());
  for (const auto& c : cx.cells) {
    if (is_tree_cell(c) && is_noncrossing_tree(c)) ++rep.noncrossing_trees;
    if (is_positroid(transversal_matroid(c))) ++rep.positroid_cells;
  }
  rep.tiling = check_tiling(cx);

  std::vector<std::vector<int>> cells;
  for (const auto& c : cx.cells) cells.push_back(pi_indices(c));
  Mat pts = pi_points(cx.n, cx.I);
  rep.complex_regularity = is_regular_subdivision(pts, cells);
  rep.complex_witness_verified =
      rep.complex_regularity.witness && verify_regularity_witness(pts, cells, *rep.complex_regularity.witness);

  Subdivision lift = cayley_lift(cx);
  rep.lift_facets = static_cast<int>(lift.cells.size());
  rep.lift_matroidal = is_matroidal(lift);
  if (rep.lift_matroidal)
    for (const auto& M : cell_matroids(lift))
      if (is_positroid(M)) ++rep.lift_positroidal_facets;
  rep.lift_regularity = is_regular_subdivision(lift);
  if (rep.lift_regularity.witness) {
    Mat hp = hypersimplex_points(lift.k, lift.n);
    std::vector<std::vector<int>> lc;
    for (const auto& c : lift.cells) {
      std::vector<int> idx;
      for (Mask s : c) idx.push_back(static_cast<int>(lex_rank(s, lift.n)));
      std::sort(idx.begin(), idx.end());
      lc.push_back(std::move(idx));
    }
    rep.lift_witness_verified = verify_regularity_witness(hp, lc, *rep.lift_regularity.witness);
  }
  return rep;
}

// ---------------------------------------------------------------------------
// SVG

namespace {

struct P2 {
  long x, y;
  bool operator<(const P2& o) const { return std::tie(x, y) < std::tie(o.x, o.y); }
  bool operator==(const P2& o) const { return x == o.x && y == o.y; }
};

std::vector<P2> convex_polygon(std::vector<P2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  auto cross = [](const P2& o, const P2& a, const P2& b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); };
  std::vector<P2> h(2 * pts.size());
  size_t t = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (t >= 2 && cross(h[t - 2], h[t - 1], pts[i]) <= 0) --t;
    h[t++] = pts[i];
  }
  for (size_t i = pts.size() - 1, lo = t + 1; i-- > 0;) {
    while (t >= lo && cross(h[t - 2], h[t - 1], pts[i]) <= 0) --t;
    h[t++] = pts[i];
  }
  h.resize(t - 1);
  return h;
}

}  // namespace

std::string counterexample_svg(const CellComplexOnPi& cx) {
  auto Iel = elements(cx.I);
  if (Iel.size() != 3) throw std::invalid_argument("counterexample_svg: |I| must be 3");
  std::map<int, P2> corner{{Iel[0], {1, 0}}, {Iel[1], {0, 1}}, {Iel[2], {1, 1}}};
  std::vector<int> J;
  for (int j = 1; j <= cx.n; ++j)
    if (!contains(cx.I, j)) J.push_back(j);
  const long m = static_cast<long>(J.size());
  const long S = 48, pad = 40;
  auto sx = [&](double x) { return pad + S * x; };
  auto sy = [&](double y) { return pad + S * (m - y); };

  struct Tile {
    std::vector<P2> poly;
    std::map<int, std::vector<P2>> summand;
    double cx = 0, cy = 0;
  };
  std::vector<Tile> tiles;
  for (const auto& cell : cx.cells) {
    Tile t;
    for (int h : J) t.summand[h] = {};
    for (auto [i, j] : cell.X) t.summand[j].push_back(corner[i]);
    std::vector<P2> pts{{0, 0}};
    for (int h : J) {
      std::vector<P2> next;
      for (const auto& p : pts)
        for (const auto& v : t.summand[h]) next.push_back({p.x + v.x, p.y + v.y});
      pts = convex_polygon(next);
    }
    t.poly = pts;
    for (const auto& p : t.poly) {
      t.cx += static_cast<double>(p.x) / t.poly.size();
      t.cy += static_cast<double>(p.y) / t.poly.size();
    }
    tiles.push_back(std::move(t));
  }

  static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  std::ostringstream os;
  const long W = 2 * pad + S * m;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * W << "\" height=\"" << W << "\" viewBox=\"0 0 "
     << 2 * W << " " << W << "\">\n";
  os << "<g id=\"mixed-subdivision\">\n";
  for (const auto& t : tiles) {
    os << "<polygon fill=\"" << (t.poly.size() == 3 ? "#dddddd" : "#ffffff") << "\" stroke=\"black\" stroke-width=\"1\" points=\"";
    for (const auto& p : t.poly) os << sx(p.x) << "," << sy(p.y) << " ";
    os << "\"/>\n";
  }
  for (auto [i, v] : corner)
    os << "<text x=\"" << sx(m * v.x) + (v.x ? 6 : -24) << "\" y=\"" << sy(m * v.y) + (v.y ? -6 : 18) << "\" font-size=\"14\">"
       << i << "</text>\n";
  os << "</g>\n<g id=\"pseudoline-arrangement\" transform=\"translate(" << W << ",0)\">\n";
  os << "<polygon fill=\"none\" stroke=\"#999999\" points=\"" << sx(0) << "," << sy(m) << " " << sx(m) << "," << sy(m) << " "
     << sx(m) << "," << sy(0) << "\"/>\n";
  // H_h crosses the shared edge of two tiles when that edge is parallel to a
  // segment of the h-summand in both tiles.
  auto parallel_in = [](const std::vector<P2>& f, long dx, long dy) {
    for (size_t a = 0; a < f.size(); ++a)
      for (size_t b = a + 1; b < f.size(); ++b) {
        long ex = f[b].x - f[a].x, ey = f[b].y - f[a].y;
        if (ex * dy - ey * dx == 0) return true;
      }
    return false;
  };
  for (size_t hi = 0; hi < J.size(); ++hi) {
    int h = J[hi];
    const char* col = palette[hi % 10];
    for (size_t a = 0; a < tiles.size(); ++a) {
      const auto& A = tiles[a];
      if (A.summand.at(h).size() == 3)
        os << "<text x=\"" << sx(A.cx) - 4 << "\" y=\"" << sy(A.cy) + 4 << "\" font-size=\"12\" fill=\"" << col << "\">" << h
           << "</text>\n";
      for (size_t e = 0; e < A.poly.size(); ++e) {
        P2 p = A.poly[e], q = A.poly[(e + 1) % A.poly.size()];
        long dx = q.x - p.x, dy = q.y - p.y;
        if (!parallel_in(A.summand.at(h), dx, dy)) continue;
        bool shared = false;
        for (size_t b = 0; b < tiles.size(); ++b) {
          if (b == a) continue;
          const auto& B = tiles[b];
          bool hp = std::find(B.poly.begin(), B.poly.end(), p) != B.poly.end();
          bool hq = std::find(B.poly.begin(), B.poly.end(), q) != B.poly.end();
          if (!hp || !hq) continue;
          shared = true;
          if (b > a && parallel_in(B.summand.at(h), dx, dy))
            os << "<line x1=\"" << sx(A.cx) << "\" y1=\"" << sy(A.cy) << "\" x2=\"" << sx(B.cx) << "\" y2=\"" << sy(B.cy)
               << "\" stroke=\"" << col << "\" stroke-width=\"2\"/>\n";
        }
        if (!shared) {
          double mx = (p.x + q.x) / 2.0, my = (p.y + q.y) / 2.0;
          os << "<line x1=\"" << sx(A.cx) << "\" y1=\"" << sy(A.cy) << "\" x2=\"" << sx(mx) << "\" y2=\"" << sy(my)
             << "\" stroke=\"" << col << "\" stroke-width=\"2\"/>\n";
        }
      }
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace trop
