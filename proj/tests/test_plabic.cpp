#include <doctest.h>

#include <algorithm>
#include <set>

#include "trop/plabic.hpp"
#include "trop/random.hpp"

using namespace trop;

namespace {

Mask S(std::initializer_list<int> xs, int n) { return from_elements(xs, n); }

// Flows as edge sets, found by scanning every subset of oriented edges:
// internal vertices have in = out <= 1, boundary sources outside J send one
// path, J outside the sources receives one, other boundary vertices are idle.
std::set<std::vector<int>> brute_flows(const PlabicGraph& G, const PerfectOrientation& O, Mask J) {
  const int E = G.num_edges(), V = G.num_vertices();
  std::set<std::vector<int>> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << E); ++pick) {
    std::vector<int> in(V, 0), outd(V, 0);
    for (int e = 0; e < E; ++e)
      if ((pick >> e) & 1u) {
        int t = O.forward[e] ? G.ends(e)[0] : G.ends(e)[1];
        int h = O.forward[e] ? G.ends(e)[1] : G.ends(e)[0];
        ++outd[t];
        ++in[h];
      }
    bool ok = true;
    for (int v = 0; v < V && ok; ++v) {
      if (G.is_boundary(v)) {
        int b = v + 1;
        bool src = contains(O.sources, b) && !contains(J, b), snk = contains(J, b) && !contains(O.sources, b);
        ok = outd[v] == (src ? 1 : 0) && in[v] == (snk ? 1 : 0);
      } else {
        ok = in[v] == outd[v] && in[v] <= 1;
      }
    }
    if (!ok) continue;
    std::vector<int> edges;
    for (int e = 0; e < E; ++e)
      if ((pick >> e) & 1u) edges.push_back(e);
    out.insert(edges);
  }
  return out;
}

std::set<std::vector<int>> flow_edge_sets(const std::vector<Flow>& fs) {
  std::set<std::vector<int>> out;
  for (const auto& f : fs) {
    std::vector<int> edges;
    for (const auto& p : f.paths)
      for (int d : p) edges.push_back(d / 2);
    for (const auto& c : f.cycles)
      for (int d : c) edges.push_back(d / 2);
    std::sort(edges.begin(), edges.end());
    out.insert(edges);
  }
  return out;
}

bool necklace_matches_trip(const PlabicGraph& G) {
  auto p = trip_permutation(G);
  auto N = grassmann_necklace(positroid_of_plabic(G));
  const int n = G.n();
  for (int i = 1; i <= n; ++i) {
    Mask cur = N[i - 1], nxt = N[i % n];
    Mask want = contains(cur, i) ? ((cur & ~bit(i)) | bit(p.pi[i - 1])) : cur;
    if (want != nxt) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("Web graph shape and trip permutation") {
  for (auto [k, n] : {std::pair{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}, {4, 8}}) {
    WebGraph w = web_graph(k, n);
    CHECK(w.graph.num_faces() == k * (n - k) + 2);
    CHECK(w.graph.degree_type() == k);
    CHECK(w.canonical.sources == full_mask(k));
    CHECK(is_perfect_orientation(w.graph, w.canonical));
    auto p = trip_permutation(w.graph);
    for (int i = 1; i <= n; ++i) CHECK(p.pi[i - 1] == (i + k - 1) % n + 1);
    CHECK(static_cast<int>(anti_excedances(p).size()) == k);
    std::set<int> labelled;
    for (int i = 1; i <= k; ++i)
      for (int j = k + 1; j <= n; ++j) labelled.insert(w.face[i][j]);
    CHECK(static_cast<int>(labelled.size()) == k * (n - k));
    CHECK_FALSE(labelled.count(w.graph.exterior_face()));
    CHECK_FALSE(labelled.count(w.unlabeled_face));
  }
  CHECK(to_string(trip_permutation(web_graph(2, 5).graph)) == "(3,4,5,1,2)");
  CHECK(to_string(trip_permutation(web_graph(3, 6).graph)) == "(4,5,6,1,2,3)");
}

TEST_CASE("positroid of the Web graph is uniform") {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
    WebGraph w = web_graph(k, n);
    CHECK(positroid_of_plabic(w.graph) == Matroid::uniform(k, n));
    for (const auto& o : perfect_orientations(w.graph)) CHECK(is_perfect_orientation(w.graph, o));
  }
  auto os = perfect_orientations(web_graph(2, 5).graph);
  CHECK(std::any_of(os.begin(), os.end(), [](const PerfectOrientation& o) { return o.sources == S({1, 2}, 5); }));
}

TEST_CASE("lollipops") {
  PlabicGraph one = lollipops({Color::Black});
  auto p = trip_permutation(one);
  CHECK(p.pi == std::vector<int>{1});
  CHECK(p.fixed_color[0] == Color::Black);
  CHECK(anti_excedances(p).empty());
  PlabicGraph w = lollipops({Color::White});
  CHECK(perfect_orientations(w).size() == 1);
  CHECK(positroid_of_plabic(w).bases() == std::vector<Mask>{S({1}, 1)});
  PlabicGraph blacks = lollipops({Color::Black, Color::Black, Color::Black});
  CHECK(positroid_of_plabic(blacks).bases() == std::vector<Mask>{0});
  PlabicGraph mix = lollipops({Color::White, Color::Black, Color::White});
  CHECK(positroid_of_plabic(mix).bases() == std::vector<Mask>{S({1, 3}, 3)});
  CHECK(to_string(trip_permutation(mix)) == "(1^,2_,3^)");
}

TEST_CASE("decorated permutations") {
  DecoratedPermutation p{{3, 2, 5, 1, 6, 8, 7, 4}, std::vector<std::optional<Color>>(8)};
  p.fixed_color[1] = Color::Black;
  p.fixed_color[6] = Color::White;
  CHECK(anti_excedances(p) == std::vector<int>{4, 7, 8});
  CHECK(to_string(p) == "(3,2_,5,1,6,8,7^,4)");
}

TEST_CASE("trip permutation matches the Grassmann necklace of the positroid") {
  for (auto [k, n] : {std::pair{1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}}) CHECK(necklace_matches_trip(web_graph(k, n).graph));
  for (const auto& G : builtin_graphs(2, 4)) CHECK(necklace_matches_trip(G));
}

TEST_CASE("built-in graphs have the requested type") {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}}) {
    auto gs = builtin_graphs(k, n);
    CHECK(gs.size() > binom(n, k));
    for (const auto& G : gs) {
      CHECK(positroid_of_plabic(G).k() == k);
      CHECK(is_positroid(positroid_of_plabic(G)));
    }
  }
}

TEST_CASE("flows agree with exhaustive edge-subset enumeration") {
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}}) {
    WebGraph w = web_graph(k, n);
    auto os = perfect_orientations(w.graph);
    std::vector<PerfectOrientation> sample{w.canonical, os.back(), os[os.size() / 2]};
    for (const auto& O : sample)
      for (Mask J : enumerate_ksubsets(k, n)) CHECK(flow_edge_sets(flows(w.graph, O, J)) == brute_flows(w.graph, O, J));
  }
}

TEST_CASE("worked flows on Web graphs") {
  WebGraph w = web_graph(2, 5);
  CHECK(flows(w.graph, w.canonical, S({2, 4}, 5)).size() == 2);
  CHECK(flows(w.graph, w.canonical, S({3, 4}, 5)).size() == 1);
  CHECK(flows(w.graph, w.canonical, S({1, 2}, 5)).size() == 1);
  CHECK_THROWS_AS(flows(w.graph, w.canonical, S({1}, 5)), std::invalid_argument);

  // A path of Web_{3,6} has the faces X25, X24, X36, X35, X34 on its left.
  WebGraph w36 = web_graph(3, 6);
  std::multiset<int> want{w36.face[2][5], w36.face[2][4], w36.face[3][6], w36.face[3][5], w36.face[3][4]};
  bool found = false;
  for (Mask J : enumerate_ksubsets(3, 6))
    for (const auto& f : flows(w36.graph, w36.canonical, J))
      for (const auto& p : f.paths) {
        auto left = faces_left_of(w36.graph, p);
        if (std::multiset<int>(left.begin(), left.end()) == want) found = true;
      }
  CHECK(found);
}

TEST_CASE("trop_phi is the minimum flow weight and phi satisfies the Plucker relations") {
  RationalSampler rng(17);
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
    WebNetwork net(k, n);
    const WebGraph& w = net.web();
    for (int t = 0; t < 5; ++t) {
      WebParameters X = rng.web(k, n);
      std::vector<Rational> params(w.graph.num_faces(), 0);
      for (int i = 1; i <= k; ++i)
        for (int j = k + 1; j <= n; ++j) params[w.face[i][j]] = X.at(i, j);
      PluckerVector P = net.trop_phi(X);
      for (Mask J : enumerate_ksubsets(k, n)) {
        auto fs = flows(w.graph, w.canonical, J);
        REQUIRE_FALSE(fs.empty());
        Rational best = tropical_flow_weight(w.graph, fs[0], params);
        for (const auto& f : fs) best = std::min(best, tropical_flow_weight(w.graph, f, params));
        CHECK(P[J] == best);
      }
      CHECK(P[full_mask(k)] == 0);
      CHECK(P == trop_phi(k, n, X));

      WebParameters x = rng.positive_web(k, n);
      PluckerVector p = net.phi(x);
      for (const auto& v : p.values) CHECK(v > 0);
      for (const auto& r : [&] {
             std::vector<std::array<int, 5>> v;
             for (Mask Sm : enumerate_ksubsets(k - 2, n))
               for (int a = 1; a <= n; ++a)
                 for (int b = a + 1; b <= n; ++b)
                   for (int c = b + 1; c <= n; ++c)
                     for (int d = c + 1; d <= n; ++d)
                       if (!(Sm & (bit(a) | bit(b) | bit(c) | bit(d)))) v.push_back({static_cast<int>(Sm), a, b, c, d});
             return v;
           }()) {
        Mask Sm = static_cast<Mask>(r[0]);
        auto P2 = [&](int u, int v) { return p[Sm | bit(u) | bit(v)]; };
        CHECK(P2(r[1], r[3]) * P2(r[2], r[4]) == P2(r[1], r[2]) * P2(r[3], r[4]) + P2(r[1], r[4]) * P2(r[2], r[3]));
      }
    }
  }
}

TEST_CASE("inverse maps") {
  RationalSampler rng(23);
  for (auto [k, n] : {std::pair{2, 4}, {3, 6}, {3, 7}, {4, 8}}) {
    for (int i = 1; i <= k; ++i)
      for (int j = k + 1; j <= n; ++j) CHECK(popcount(k_set(i, j, k, n)) == k);
    WebParameters X = rng.web(k, n);
    CHECK(trop_psi(k, n, trop_phi(k, n, X)) == X);
  }
  PluckerVector zero(2, 4);
  CHECK_THROWS_AS(psi(2, 4, zero), std::invalid_argument);
}
