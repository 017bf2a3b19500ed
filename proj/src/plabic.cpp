#include "trop/plabic.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <stdexcept>

namespace trop {

// ---------------------------------------------------------------------------
// Graph and faces

PlabicGraph::PlabicGraph(int n, std::vector<Color> internal_colors, std::vector<std::array<int, 2>> edges,
                         std::vector<std::vector<int>> internal_rotations, std::vector<int> external_ids)
    : n_(n), colors_(std::move(internal_colors)), ends_(std::move(edges)) {
  if (n < 1 || n > kMaxGround) throw std::invalid_argument("plabic graph: need 1 <= n <= 16");
  const int m = static_cast<int>(colors_.size());
  const int V = n + m;
  if (static_cast<int>(internal_rotations.size()) != m) throw std::invalid_argument("plabic graph: one rotation per internal vertex");
  std::vector<std::vector<int>> incident(V);
  for (int e = 0; e < num_edges(); ++e) {
    auto [a, b] = ends_[e];
    if (a < 0 || a >= V || b < 0 || b >= V) throw std::invalid_argument("plabic graph: edge endpoint out of range");
    if (a == b) throw std::invalid_argument("plabic graph: self-loop");
    if (a < n && b < n) throw std::invalid_argument("plabic graph: edge between two boundary vertices");
    incident[a].push_back(e);
    incident[b].push_back(e);
  }
  rot_.resize(V);
  for (int b = 0; b < n; ++b) {
    if (incident[b].size() != 1) throw std::invalid_argument("plabic graph: boundary vertex " + std::to_string(b + 1) + " must have degree 1");
    rot_[b] = incident[b];
  }
  for (int v = n; v < V; ++v) {
    auto r = internal_rotations[v - n];
    auto a = r, c = incident[v];
    std::sort(a.begin(), a.end());
    std::sort(c.begin(), c.end());
    if (a != c) throw std::invalid_argument("plabic graph: rotation at internal vertex does not list its edges");
    if (r.empty()) throw std::invalid_argument("plabic graph: isolated internal vertex");
    rot_[v] = std::move(r);
  }
  if (external_ids.empty()) {
    ids_.resize(V);
    for (int v = 0; v < V; ++v) ids_[v] = v + 1;
  } else {
    if (static_cast<int>(external_ids.size()) != V) throw std::invalid_argument("plabic graph: id count mismatch");
    ids_ = std::move(external_ids);
  }
  trace_faces();
}

void PlabicGraph::trace_faces() {
  const int E = num_edges();
  const int D = 2 * E + 2 * n_;
  auto arc_tail = [&](int d) {
    int b = (d - 2 * E) / 2;
    return (d % 2 == 0) ? b : (b + 1) % n_;
  };
  auto dhead = [&](int d) { return d < 2 * E ? head(d) : arc_tail(d ^ 1); };
  // Outgoing darts around each vertex, clockwise.
  std::vector<std::vector<int>> out(num_vertices());
  for (int v = 0; v < num_vertices(); ++v) {
    std::vector<int> real;
    for (int e : rot_[v]) real.push_back(ends_[e][0] == v ? 2 * e : 2 * e + 1);
    if (is_boundary(v)) {
      out[v] = {2 * E + 2 * v, real[0], 2 * E + 2 * ((v - 1 + n_) % n_) + 1};
    } else {
      out[v] = std::move(real);
    }
  }
  std::vector<int> pos(D, -1);
  for (int v = 0; v < num_vertices(); ++v)
    for (int t = 0; t < static_cast<int>(out[v].size()); ++t) pos[out[v][t]] = t;
  left_.assign(D, -1);
  face_darts_.clear();
  for (int d0 = 0; d0 < D; ++d0) {
    if (left_[d0] >= 0) continue;
    const int f = static_cast<int>(face_darts_.size());
    face_darts_.emplace_back();
    int d = d0;
    while (left_[d] < 0) {
      left_[d] = f;
      face_darts_[f].push_back(d);
      int v = dhead(d);
      int r = d ^ 1;
      const auto& ring = out[v];
      d = ring[(pos[r] + 1) % ring.size()];
    }
    if (d != d0) throw std::invalid_argument("plabic graph: inconsistent rotation system");
  }
  exterior_ = left_[2 * E];
  for (int b = 0; b < n_; ++b)
    if (left_[2 * E + 2 * b] != exterior_) throw std::invalid_argument("plabic graph: boundary is not a single face");
  if (static_cast<int>(face_darts_[exterior_].size()) != n_) throw std::invalid_argument("plabic graph: graph is not attached to the boundary");
  if (num_vertices() - (E + n_) + num_faces() != 2)
    throw std::invalid_argument("plabic graph: rotation system is not a planar embedding in the disk");
}

int PlabicGraph::degree_type() const {
  int s = 0;
  for (int v = n_; v < num_vertices(); ++v) {
    int deg = static_cast<int>(rot_[v].size());
    s += (color(v) == Color::Black ? 1 : -1) * (deg - 2);
  }
  if ((n_ + s) % 2 != 0) throw std::logic_error("degree_type: parity");
  return (n_ + s) / 2;
}

// ---------------------------------------------------------------------------
// Decorated permutations and trips

std::vector<int> anti_excedances(const DecoratedPermutation& p) {
  std::vector<int> out;
  for (int i = 1; i <= static_cast<int>(p.pi.size()); ++i) {
    int img = p.pi[i - 1];
    if (img < i) out.push_back(i);
    if (img == i && p.fixed_color[i - 1] == Color::White) out.push_back(i);
  }
  return out;
}

std::string to_string(const DecoratedPermutation& p) {
  std::string s = "(";
  for (size_t i = 0; i < p.pi.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p.pi[i]);
    if (p.fixed_color[i]) s += *p.fixed_color[i] == Color::Black ? "_" : "^";
  }
  return s + ")";
}

DecoratedPermutation trip_permutation(const PlabicGraph& G) {
  const int n = G.n();
  DecoratedPermutation out;
  out.pi.assign(n, 0);
  out.fixed_color.assign(n, std::nullopt);
  auto other = [&](int e, int v) { return G.ends(e)[0] == v ? G.ends(e)[1] : G.ends(e)[0]; };
  for (int b = 0; b < n; ++b) {
    int e = G.rotation(b)[0];
    int v = other(e, b);
    int steps = 0;
    while (!G.is_boundary(v)) {
      if (++steps > 2 * G.num_edges() + 2) throw std::invalid_argument("trip does not terminate at the boundary");
      const auto& ring = G.rotation(v);
      const int deg = static_cast<int>(ring.size());
      int idx = static_cast<int>(std::find(ring.begin(), ring.end(), e) - ring.begin());
      idx = G.color(v) == Color::White ? (idx + 1) % deg : (idx - 1 + deg) % deg;
      e = ring[idx];
      v = other(e, v);
    }
    out.pi[b] = v + 1;
    if (v == b) out.fixed_color[b] = G.color(other(G.rotation(b)[0], b));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Perfect orientations

static Mask source_set(const PlabicGraph& G, const std::vector<bool>& forward) {
  Mask s = 0;
  for (int b = 0; b < G.n(); ++b) {
    int e = G.rotation(b)[0];
    bool out_of_b = (G.ends(e)[0] == b) == static_cast<bool>(forward[e]);
    if (out_of_b) s |= bit(b + 1);
  }
  return s;
}

bool is_perfect_orientation(const PlabicGraph& G, const PerfectOrientation& O) {
  if (static_cast<int>(O.forward.size()) != G.num_edges()) return false;
  for (int v = G.n(); v < G.num_vertices(); ++v) {
    int outdeg = 0, indeg = 0;
    for (int e : G.rotation(v)) {
      bool out = (G.ends(e)[0] == v) == static_cast<bool>(O.forward[e]);
      (out ? outdeg : indeg) += 1;
    }
    if (G.color(v) == Color::Black && outdeg != 1) return false;
    if (G.color(v) == Color::White && indeg != 1) return false;
  }
  return O.sources == source_set(G, O.forward);
}

std::vector<PerfectOrientation> perfect_orientations(const PlabicGraph& G) {
  const int E = G.num_edges();
  std::vector<int> dir(E, 0);  // +1 forward, -1 backward, 0 unset
  std::vector<int> setters(E, 0);
  std::vector<PerfectOrientation> out;
  std::function<void(int)> rec = [&](int v) {
    if (v == G.num_vertices()) {
      PerfectOrientation O;
      O.forward.resize(E);
      for (int e = 0; e < E; ++e) O.forward[e] = dir[e] > 0;
      O.sources = source_set(G, O.forward);
      out.push_back(std::move(O));
      return;
    }
    const auto& ring = G.rotation(v);
    for (int special : ring) {
      // Black: special edge leaves v, others enter. White: special enters, others leave.
      std::vector<std::pair<int, int>> want;
      bool ok = true;
      for (int e : ring) {
        bool leaves = (e == special) == (G.color(v) == Color::Black);
        int d = (G.ends(e)[0] == v) == leaves ? 1 : -1;
        if (dir[e] != 0 && dir[e] != d) {
          ok = false;
          break;
        }
        want.emplace_back(e, d);
      }
      if (!ok) continue;
      for (auto [e, d] : want) {
        dir[e] = d;
        ++setters[e];
      }
      rec(v + 1);
      for (auto [e, d] : want)
        if (--setters[e] == 0) dir[e] = 0;
    }
  };
  rec(G.n());
  return out;
}

Matroid positroid_of_plabic(const PlabicGraph& G) {
  auto os = perfect_orientations(G);
  if (os.empty()) throw std::invalid_argument("positroid_of_plabic: graph is not perfectly orientable");
  std::vector<Mask> bases;
  for (const auto& o : os) bases.push_back(o.sources);
  return Matroid(G.n(), popcount(os[0].sources), std::move(bases));
}

// ---------------------------------------------------------------------------
// Flows

std::vector<Flow> flows(const PlabicGraph& G, const PerfectOrientation& O, Mask J) {
  if (popcount(J) != popcount(O.sources)) throw std::invalid_argument("flows: |J| must equal the number of sources");
  const int V = G.num_vertices();
  std::vector<std::vector<int>> outd(V);
  for (int e = 0; e < G.num_edges(); ++e) {
    int d = O.forward[e] ? 2 * e : 2 * e + 1;
    outd[G.tail(d)].push_back(d);
  }
  std::vector<int> srcs;
  for (int i : elements(O.sources & ~J)) srcs.push_back(i - 1);
  const Mask targets = J & ~O.sources;

  // All simple directed cycles, each recorded once from its smallest vertex.
  std::vector<std::vector<int>> cycles;
  {
    std::vector<bool> on(V, false);
    std::vector<int> stack;
    std::function<void(int, int)> dfs = [&](int start, int v) {
      for (int d : outd[v]) {
        int w = G.head(d);
        if (w == start) {
          stack.push_back(d);
          cycles.push_back(stack);
          stack.pop_back();
        } else if (w > start && !on[w] && !G.is_boundary(w)) {
          on[w] = true;
          stack.push_back(d);
          dfs(start, w);
          stack.pop_back();
          on[w] = false;
        }
      }
    };
    for (int s = G.n(); s < V; ++s) {
      on[s] = true;
      dfs(s, s);
      on[s] = false;
    }
  }

  std::vector<Flow> result;
  std::vector<bool> used(V, false);
  Flow cur;
  std::function<void(size_t)> pick_cycles = [&](size_t from) {
    result.push_back(cur);
    for (size_t c = from; c < cycles.size(); ++c) {
      bool free = true;
      for (int d : cycles[c])
        if (used[G.tail(d)]) {
          free = false;
          break;
        }
      if (!free) continue;
      for (int d : cycles[c]) used[G.tail(d)] = true;
      cur.cycles.push_back(cycles[c]);
      pick_cycles(c + 1);
      cur.cycles.pop_back();
      for (int d : cycles[c]) used[G.tail(d)] = false;
    }
  };
  std::vector<int> path;
  std::function<void(size_t)> route;
  std::function<void(size_t, int)> walk = [&](size_t p, int v) {
    for (int d : outd[v]) {
      int w = G.head(d);
      if (used[w]) continue;
      if (G.is_boundary(w)) {
        if (!contains(targets, w + 1)) continue;
        used[w] = true;
        path.push_back(d);
        cur.paths.push_back(path);
        auto saved = path;
        path.clear();
        route(p + 1);
        path = saved;
        cur.paths.pop_back();
        path.pop_back();
        used[w] = false;
      } else {
        used[w] = true;
        path.push_back(d);
        walk(p, w);
        path.pop_back();
        used[w] = false;
      }
    }
  };
  route = [&](size_t p) {
    if (p == srcs.size()) {
      pick_cycles(0);
      return;
    }
    used[srcs[p]] = true;
    walk(p, srcs[p]);
    used[srcs[p]] = false;
  };
  route(0);
  return result;
}

std::vector<int> faces_left_of(const PlabicGraph& G, const std::vector<int>& darts) {
  const int E = G.num_edges();
  std::vector<bool> blocked(E, false);
  for (int d : darts) blocked[d / 2] = true;
  std::vector<bool> seen(G.num_faces(), false);
  std::queue<int> q;
  for (int d : darts) {
    int f = G.left_face(d);
    if (f != G.exterior_face() && !seen[f]) {
      seen[f] = true;
      q.push(f);
    }
  }
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    for (int d : G.face_boundary(f)) {
      if (d >= 2 * E || blocked[d / 2]) continue;
      int g = G.left_face(d ^ 1);
      if (g == G.exterior_face() || seen[g]) continue;
      seen[g] = true;
      q.push(g);
    }
  }
  std::vector<int> out;
  for (int f = 0; f < G.num_faces(); ++f)
    if (seen[f]) out.push_back(f);
  return out;
}

std::vector<int> left_face_counts(const PlabicGraph& G, const Flow& F) {
  std::vector<int> counts(G.num_faces(), 0);
  for (const auto* group : {&F.paths, &F.cycles})
    for (const auto& w : *group)
      for (int f : faces_left_of(G, w)) ++counts[f];
  return counts;
}

Rational tropical_flow_weight(const PlabicGraph& G, const Flow& F, const std::vector<Rational>& params) {
  auto c = left_face_counts(G, F);
  Rational s = 0;
  for (int f = 0; f < G.num_faces(); ++f)
    if (c[f] && f != G.exterior_face()) s += c[f] * params.at(f);
  return s;
}

Rational classical_flow_weight(const PlabicGraph& G, const Flow& F, const std::vector<Rational>& params) {
  auto c = left_face_counts(G, F);
  Rational s = 1;
  for (int f = 0; f < G.num_faces(); ++f)
    for (int t = 0; t < c[f] && f != G.exterior_face(); ++t) s *= params.at(f);
  return s;
}

// ---------------------------------------------------------------------------
// Web_{k,n}

namespace {

// Counterclockwise angular order of direction vectors.
bool ccw_before(const Point2& a, const Point2& b) {
  auto half = [](const Point2& p) { return (p.y < 0 || (p.y == 0 && p.x < 0)) ? 1 : 0; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return a.x * b.y - a.y * b.x > 0;
}

struct WebBuilder {
  std::vector<Point2> pos;
  std::vector<Color> colors;  // internal only
  std::vector<std::array<int, 2>> edges;

  int add(Color c, Rational x, Rational y) {
    colors.push_back(c);
    pos.push_back({std::move(x), std::move(y)});
    return static_cast<int>(pos.size()) - 1;
  }
  int edge(int u, int v) {
    edges.push_back({u, v});
    return static_cast<int>(edges.size()) - 1;
  }
};

}  // namespace

WebGraph web_graph(int k, int n) {
  if (k < 1 || k >= n) throw std::invalid_argument("web_graph: need 1 <= k < n");
  if (n > kMaxGround) throw std::invalid_argument("web_graph: n <= 16");
  WebBuilder wb;
  auto X = [&](int j) { return Rational(-2 * (j - k)); };
  auto Y = [&](int i) { return Rational(-2 * i); };
  const Rational half(1, 2);
  const Rational ybot = Y(k) - 2;
  for (int b = 1; b <= n; ++b) {
    if (b <= k) wb.pos.push_back({Rational(1), Y(b)});
    else if (b < n) wb.pos.push_back({X(b) - half, ybot});
    else wb.pos.push_back({X(n), ybot});
  }
  auto boundary = [](int b) { return b - 1; };

  // Vertex tables indexed [i][j].
  std::vector<std::vector<int>> Bv(k + 2, std::vector<int>(n + 2, -1)), Wv = Bv;
  for (int j = k + 1; j < n; ++j) Wv[1][j] = wb.add(Color::White, X(j), Y(1));
  for (int i = 2; i <= k; ++i) {
    for (int j = k + 1; j < n; ++j) {
      Bv[i][j] = wb.add(Color::Black, X(j) + half, Y(i) + half);
      Wv[i][j] = wb.add(Color::White, X(j) - half, Y(i) - half);
    }
    Bv[i][n] = wb.add(Color::Black, X(n), Y(i));
  }
  auto entry = [&](int i, int j) {
    if (i == 1) return j < n ? Wv[1][j] : (k >= 2 ? Bv[2][n] : boundary(n));
    return Bv[i][j];
  };
  auto exit_left = [&](int i, int j) { return Wv[i][j]; };
  std::vector<std::vector<int>> column_edge(k + 2, std::vector<int>(n + 2, -1));

  for (int i = 1; i <= k; ++i) {
    int from = boundary(i);
    for (int j = k + 1; j <= n; ++j) {
      if (i == 1 && j == n && from < n && entry(1, n) < n) {
        // Web_{1,2}: a bivalent white vertex keeps boundary vertices apart.
        int w = wb.add(Color::White, (wb.pos[from].x + wb.pos[entry(1, n)].x) / 2, (wb.pos[from].y + wb.pos[entry(1, n)].y) / 2);
        wb.edge(from, w);
        from = w;
      }
      int e = wb.edge(from, entry(i, j));
      if (i == 1 && j == n) column_edge[1][n] = e;
      if (j < n) from = exit_left(i, j);
    }
  }
  for (int i = 2; i <= k; ++i)
    for (int j = k + 1; j < n; ++j) wb.edge(Bv[i][j], Wv[i][j]);
  for (int j = k + 1; j <= n; ++j)
    for (int i = (j == n ? 2 : 1); i <= k; ++i) {
      int from = j < n ? Wv[i][j] : Bv[i][n];
      int to = i < k ? entry(i + 1, j) : boundary(j);
      column_edge[i][j] = wb.edge(from, to);
    }

  const int V = static_cast<int>(wb.pos.size());
  std::vector<std::vector<int>> incident(V);
  for (int e = 0; e < static_cast<int>(wb.edges.size()); ++e) {
    incident[wb.edges[e][0]].push_back(e);
    incident[wb.edges[e][1]].push_back(e);
  }
  std::vector<std::vector<int>> rotations;
  for (int v = n; v < V; ++v) {
    auto ring = incident[v];
    auto dir = [&](int e) {
      int w = wb.edges[e][0] == v ? wb.edges[e][1] : wb.edges[e][0];
      return Point2{wb.pos[w].x - wb.pos[v].x, wb.pos[w].y - wb.pos[v].y};
    };
    std::sort(ring.begin(), ring.end(), [&](int a, int b) { return ccw_before(dir(a), dir(b)); });
    std::reverse(ring.begin(), ring.end());
    rotations.push_back(std::move(ring));
  }

  WebGraph web;
  web.k = k;
  web.n = n;
  web.graph = PlabicGraph(n, wb.colors, wb.edges, rotations);
  web.position = wb.pos;
  web.canonical.forward.assign(wb.edges.size(), true);
  web.canonical.sources = full_mask(k);
  if (!is_perfect_orientation(web.graph, web.canonical)) throw std::logic_error("web_graph: canonical orientation is not perfect");
  web.face.assign(k + 1, std::vector<int>(n + 1, -1));
  std::set<int> labelled;
  for (int i = 1; i <= k; ++i)
    for (int j = k + 1; j <= n; ++j) {
      int f = web.graph.left_face(2 * column_edge[i][j]);
      web.face[i][j] = f;
      labelled.insert(f);
    }
  if (static_cast<int>(labelled.size()) != k * (n - k) || web.graph.num_faces() != k * (n - k) + 2)
    throw std::logic_error("web_graph: unexpected face structure");
  for (int f = 0; f < web.graph.num_faces(); ++f)
    if (f != web.graph.exterior_face() && !labelled.count(f)) web.unlabeled_face = f;
  return web;
}

WebNetwork::WebNetwork(int k, int n) : web_(web_graph(k, n)) {
  const auto& G = web_.graph;
  std::vector<int> param_of(G.num_faces(), -1);
  for (int i = 1; i <= k; ++i)
    for (int j = k + 1; j <= n; ++j) param_of[web_.face[i][j]] = (i - 1) * (n - k) + (j - k - 1);
  for (Mask J : enumerate_ksubsets(k, n)) {
    std::vector<std::vector<int>> list;
    for (const auto& F : flows(G, web_.canonical, J)) {
      auto c = left_face_counts(G, F);
      if (c[web_.unlabeled_face] != 0) throw std::logic_error("WebNetwork: unlabeled face to the left of a path");
      std::vector<int> ex(static_cast<std::size_t>(k) * (n - k), 0);
      for (int f = 0; f < G.num_faces(); ++f)
        if (param_of[f] >= 0) ex[param_of[f]] = c[f];
      list.push_back(std::move(ex));
    }
    exps_.push_back(std::move(list));
  }
}

const std::vector<std::vector<int>>& WebNetwork::flow_exponents(Mask J) const { return exps_[lex_rank(J, web_.n)]; }

PluckerVector WebNetwork::phi(const WebParameters& x) const {
  if (x.k != web_.k || x.n != web_.n) throw std::invalid_argument("phi: parameter shape mismatch");
  for (const auto& v : x.x)
    if (v <= 0) throw std::invalid_argument("phi: parameters must be positive");
  PluckerVector p(web_.k, web_.n);
  for (size_t J = 0; J < exps_.size(); ++J) {
    Rational s = 0;
    for (const auto& ex : exps_[J]) {
      Rational w = 1;
      for (size_t q = 0; q < ex.size(); ++q)
        for (int t = 0; t < ex[q]; ++t) w *= x.x[q];
      s += w;
    }
    p.values[J] = s;
  }
  return p;
}

PluckerVector WebNetwork::trop_phi(const WebParameters& X) const {
  if (X.k != web_.k || X.n != web_.n) throw std::invalid_argument("trop_phi: parameter shape mismatch");
  PluckerVector P(web_.k, web_.n);
  for (size_t J = 0; J < exps_.size(); ++J) {
    bool first = true;
    Rational best;
    for (const auto& ex : exps_[J]) {
      Rational w = 0;
      for (size_t q = 0; q < ex.size(); ++q)
        if (ex[q]) w += ex[q] * X.x[q];
      if (first || w < best) best = w;
      first = false;
    }
    if (first) throw std::logic_error("trop_phi: no flow");
    P.values[J] = best;
  }
  return P;
}

PluckerVector phi(int k, int n, const WebParameters& x) { return WebNetwork(k, n).phi(x); }
PluckerVector trop_phi(int k, int n, const WebParameters& X) { return WebNetwork(k, n).trop_phi(X); }

// ---------------------------------------------------------------------------
// Inverse maps

Mask k_set(int i, int j, int k, int n) {
  if (i < 1 || i > k || j < k + 1 || j > n) return full_mask(k);
  Mask s = full_mask(i - 1);
  for (int t = i + j - k; t <= j; ++t) s |= bit(t);
  return s;
}

namespace {

struct PsiTerms {
  Mask num[3];
  Mask den[3];
};

PsiTerms psi_terms(int i, int j, int k, int n) {
  return {{k_set(i, j, k, n), k_set(i + 1, j - 2, k, n), k_set(i + 2, j - 1, k, n)},
          {k_set(i, j - 1, k, n), k_set(i + 1, j, k, n), k_set(i + 2, j - 2, k, n)}};
}

}  // namespace

WebParameters trop_psi(int k, int n, const PluckerVector& P) {
  if (P.k != k || P.n != n) throw std::invalid_argument("trop_psi: shape mismatch");
  WebParameters X(k, n);
  for (int i = 1; i <= k; ++i)
    for (int j = k + 1; j <= n; ++j) {
      auto t = psi_terms(i, j, k, n);
      X.at(i, j) = P[t.num[0]] + P[t.num[1]] + P[t.num[2]] - P[t.den[0]] - P[t.den[1]] - P[t.den[2]];
    }
  return X;
}

WebParameters psi(int k, int n, const PluckerVector& p) {
  if (p.k != k || p.n != n) throw std::invalid_argument("psi: shape mismatch");
  WebParameters x(k, n);
  for (int i = 1; i <= k; ++i)
    for (int j = k + 1; j <= n; ++j) {
      auto t = psi_terms(i, j, k, n);
      Rational num = 1, den = 1;
      for (Mask s : t.num) num *= p[s];
      for (Mask s : t.den) den *= p[s];
      if (num == 0 || den == 0) throw std::invalid_argument("psi: zero coordinate");
      x.at(i, j) = num / den;
    }
  return x;
}

// ---------------------------------------------------------------------------
// Built-in graphs

PlabicGraph lollipops(const std::vector<Color>& colors) {
  const int n = static_cast<int>(colors.size());
  std::vector<std::array<int, 2>> edges;
  std::vector<std::vector<int>> rot;
  for (int b = 0; b < n; ++b) {
    edges.push_back({b, n + b});
    rot.push_back({b});
  }
  return PlabicGraph(n, colors, edges, rot);
}

PlabicGraph delete_edges(const PlabicGraph& G, const std::vector<int>& del) {
  const int n = G.n();
  std::vector<bool> gone(G.num_edges(), false);
  for (int e : del) gone.at(e) = true;
  std::vector<int> deg(G.num_vertices(), 0);
  for (int e = 0; e < G.num_edges(); ++e)
    if (!gone[e]) {
      ++deg[G.ends(e)[0]];
      ++deg[G.ends(e)[1]];
    }
  std::vector<int> newv(G.num_vertices(), -1);
  std::vector<Color> colors;
  for (int v = 0; v < n; ++v) newv[v] = v;
  for (int v = n; v < G.num_vertices(); ++v)
    if (deg[v] > 0) {
      newv[v] = n + static_cast<int>(colors.size());
      colors.push_back(G.color(v));
    }
  std::vector<int> newe(G.num_edges(), -1);
  std::vector<std::array<int, 2>> edges;
  for (int e = 0; e < G.num_edges(); ++e)
    if (!gone[e]) {
      newe[e] = static_cast<int>(edges.size());
      edges.push_back({newv[G.ends(e)[0]], newv[G.ends(e)[1]]});
    }
  std::vector<std::vector<int>> rot;
  for (int v = n; v < G.num_vertices(); ++v) {
    if (newv[v] < 0) continue;
    std::vector<int> r;
    for (int e : G.rotation(v))
      if (!gone[e]) r.push_back(newe[e]);
    rot.push_back(std::move(r));
  }
  return PlabicGraph(n, colors, edges, rot);
}

std::vector<PlabicGraph> builtin_graphs(int k, int n, int max_deletions) {
  std::vector<PlabicGraph> out;
  WebGraph web = web_graph(k, n);
  const PlabicGraph& G = web.graph;
  std::vector<int> inner;
  for (int e = 0; e < G.num_edges(); ++e)
    if (!G.is_boundary(G.ends(e)[0]) && !G.is_boundary(G.ends(e)[1])) inner.push_back(e);
  const int m = static_cast<int>(inner.size());
  if (m > 24) throw std::invalid_argument("builtin_graphs: too many internal edges");
  for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << m); ++pick) {
    if (max_deletions >= 0 && std::popcount(pick) > max_deletions) continue;
    std::vector<int> del;
    for (int t = 0; t < m; ++t)
      if ((pick >> t) & 1u) del.push_back(inner[t]);
    try {
      PlabicGraph H = del.empty() ? G : delete_edges(G, del);
      auto os = perfect_orientations(H);
      if (os.empty() || popcount(os[0].sources) != k) continue;
      out.push_back(std::move(H));
    } catch (const std::invalid_argument&) {
      // A piece came loose from the boundary.
    }
  }
  for (Mask whites : enumerate_ksubsets(k, n)) {
    std::vector<Color> colors(n, Color::Black);
    for (int i : elements(whites)) colors[i - 1] = Color::White;
    out.push_back(lollipops(colors));
  }
  return out;
}

}  // namespace trop
