#include "trop/json_io.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace trop {

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational string \"p/q\" or an integer, got " + j.dump());
}

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) throw std::invalid_argument(std::string("missing integer field '") + key + "'");
  return j[key].get<int>();
}

}  // namespace

json subset_to_json(Mask s) { return json(elements(s)); }

Mask subset_from_json(const json& j, int n) {
  if (!j.is_array()) throw std::invalid_argument("subset must be an array of integers");
  std::vector<int> xs;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw std::invalid_argument("subset must be an array of integers");
    xs.push_back(e.get<int>());
  }
  return from_elements(xs, n);
}

json to_json(const PluckerVector& P) {
  json entries = json::array();
  auto subsets = enumerate_ksubsets(P.k, P.n);
  for (size_t i = 0; i < subsets.size(); ++i) entries.push_back({{"set", subset_to_json(subsets[i])}, {"value", to_string(P.values[i])}});
  return {{"k", P.k}, {"n", P.n}, {"entries", entries}};
}

PluckerVector plucker_from_json(const json& j) {
  int k = get_int(j, "k"), n = get_int(j, "n");
  if (n < 0 || n > kMaxGround || k < 0 || k > n) throw std::invalid_argument("need 0 <= k <= n <= 16");
  if (!j.contains("entries") || !j["entries"].is_array()) throw std::invalid_argument("missing 'entries' array");
  PluckerVector P(k, n);
  std::vector<bool> seen(P.size(), false);
  for (const auto& e : j["entries"]) {
    Mask s = subset_from_json(e.at("set"), n);
    if (popcount(s) != k) throw std::invalid_argument("entry " + e.at("set").dump() + " is not a k-subset");
    const auto& v = e.at("value");
    if (v.is_string()) {
      std::string t = v.get<std::string>();
      if (t == "inf" || t == "infinity" || t == "Infinity" || t == "oo") throw std::invalid_argument("infinite entries are not supported");
    }
    size_t r = lex_rank(s, n);
    if (seen[r]) throw std::invalid_argument("entry " + e.at("set").dump() + " given twice");
    seen[r] = true;
    P.values[r] = rational_from_json(v);
  }
  for (size_t r = 0; r < seen.size(); ++r)
    if (!seen[r]) throw std::invalid_argument("missing entry " + subset_to_json(enumerate_ksubsets(k, n)[r]).dump());
  return P;
}

json to_json(const Matroid& M) {
  json bases = json::array();
  for (Mask b : M.bases()) bases.push_back(subset_to_json(b));
  return {{"n", M.n()}, {"k", M.k()}, {"bases", bases}};
}

Matroid matroid_from_json(const json& j) {
  int n = get_int(j, "n"), k = get_int(j, "k");
  std::vector<Mask> bases;
  for (const auto& b : j.at("bases")) {
    Mask s = subset_from_json(b, n);
    if (popcount(s) != k) throw std::invalid_argument("basis " + b.dump() + " has the wrong size");
    bases.push_back(s);
  }
  if (bases.empty()) throw std::invalid_argument("matroid needs at least one basis");
  return Matroid(n, k, std::move(bases));
}

json to_json(const Subdivision& D) {
  json cells = json::array();
  for (const auto& c : D.cells) {
    json cell = json::array();
    for (Mask s : c) cell.push_back(subset_to_json(s));
    cells.push_back(cell);
  }
  return {{"k", D.k}, {"n", D.n}, {"cells", cells}};
}

Subdivision subdivision_from_json(const json& j) {
  Subdivision D;
  D.k = get_int(j, "k");
  D.n = get_int(j, "n");
  if (D.n < 0 || D.n > kMaxGround || D.k < 0 || D.k > D.n) throw std::invalid_argument("need 0 <= k <= n <= 16");
  for (const auto& c : j.at("cells")) {
    std::vector<Mask> cell;
    for (const auto& s : c) {
      Mask m = subset_from_json(s, D.n);
      if (popcount(m) != D.k) throw std::invalid_argument("cell vertex " + s.dump() + " is not a k-subset");
      cell.push_back(m);
    }
    std::sort(cell.begin(), cell.end(), [&](Mask a, Mask b) { return lex_rank(a, D.n) < lex_rank(b, D.n); });
    D.cells.push_back(std::move(cell));
  }
  return D;
}

json to_json(const PlabicGraph& G) {
  json boundary = json::array(), internal = json::array(), edges = json::array(), rotations = json::object();
  for (int b = 0; b < G.n(); ++b) boundary.push_back(G.external_id(b));
  for (int v = G.n(); v < G.num_vertices(); ++v) {
    internal.push_back({{"id", G.external_id(v)}, {"color", G.color(v) == Color::Black ? "black" : "white"}});
    rotations[std::to_string(G.external_id(v))] = G.rotation(v);
  }
  for (int e = 0; e < G.num_edges(); ++e) edges.push_back({G.external_id(G.ends(e)[0]), G.external_id(G.ends(e)[1])});
  return {{"n", G.n()}, {"boundary", boundary}, {"internal", internal}, {"edges", edges}, {"rotations", rotations}};
}

PlabicGraph plabic_from_json(const json& j) {
  int n = get_int(j, "n");
  std::map<int, int> index;
  std::vector<int> ids;
  const auto& boundary = j.at("boundary");
  if (!boundary.is_array() || static_cast<int>(boundary.size()) != n) throw std::invalid_argument("'boundary' must list n vertex ids");
  for (const auto& b : boundary) {
    int id = b.get<int>();
    if (!index.emplace(id, static_cast<int>(ids.size())).second) throw std::invalid_argument("duplicate vertex id " + std::to_string(id));
    ids.push_back(id);
  }
  std::vector<Color> colors;
  for (const auto& v : j.at("internal")) {
    int id = v.at("id").get<int>();
    std::string c = v.at("color").get<std::string>();
    if (c != "black" && c != "white") throw std::invalid_argument("color must be 'black' or 'white'");
    if (!index.emplace(id, static_cast<int>(ids.size())).second) throw std::invalid_argument("duplicate vertex id " + std::to_string(id));
    ids.push_back(id);
    colors.push_back(c == "black" ? Color::Black : Color::White);
  }
  std::vector<std::array<int, 2>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair of vertex ids");
    auto a = index.find(e[0].get<int>()), b = index.find(e[1].get<int>());
    if (a == index.end() || b == index.end()) throw std::invalid_argument("edge " + e.dump() + " names an unknown vertex");
    edges.push_back({a->second, b->second});
  }
  std::vector<std::vector<int>> rot(colors.size());
  const auto& rj = j.at("rotations");
  for (size_t t = 0; t < colors.size(); ++t) {
    std::string key = std::to_string(ids[n + t]);
    if (!rj.contains(key)) throw std::invalid_argument("missing rotation for vertex " + key);
    for (const auto& e : rj[key]) {
      int eid = e.get<int>();
      if (eid < 0 || eid >= static_cast<int>(edges.size())) throw std::invalid_argument("rotation of " + key + " names an unknown edge");
      rot[t].push_back(eid);
    }
  }
  return PlabicGraph(n, colors, edges, rot, ids);
}

json to_json(const WebParameters& X) {
  json entries = json::array();
  for (int i = 1; i <= X.k; ++i)
    for (int j = X.k + 1; j <= X.n; ++j) entries.push_back({{"face", {i, j}}, {"value", to_string(X.at(i, j))}});
  return {{"k", X.k}, {"n", X.n}, {"entries", entries}};
}

WebParameters web_parameters_from_json(const json& j) {
  int k = get_int(j, "k"), n = get_int(j, "n");
  if (k < 1 || k >= n || n > kMaxGround) throw std::invalid_argument("need 1 <= k < n <= 16");
  WebParameters X(k, n);
  std::set<std::pair<int, int>> seen;
  for (const auto& e : j.at("entries")) {
    const auto& f = e.at("face");
    int i = f.at(0).get<int>(), jj = f.at(1).get<int>();
    if (i < 1 || i > k || jj <= k || jj > n) throw std::invalid_argument("face " + f.dump() + " is not of the form (i,j), i <= k < j");
    if (!seen.insert({i, jj}).second) throw std::invalid_argument("face " + f.dump() + " given twice");
    X.at(i, jj) = rational_from_json(e.at("value"));
  }
  if (static_cast<int>(seen.size()) != k * (n - k)) throw std::invalid_argument("every face (i,j) needs a value");
  return X;
}

json to_json(const CellComplexOnPi& cx) {
  json cells = json::array();
  for (const auto& c : cx.cells) {
    json edges = json::array();
    for (auto [i, j] : c.X) edges.push_back({i, j});
    cells.push_back({{"edges", edges}});
  }
  return {{"n", cx.n}, {"I", subset_to_json(cx.I)}, {"cells", cells}};
}

CellComplexOnPi cell_complex_from_json(const json& j) {
  CellComplexOnPi cx;
  cx.n = get_int(j, "n");
  if (cx.n < 1 || cx.n > kMaxGround) throw std::invalid_argument("need 1 <= n <= 16");
  cx.I = subset_from_json(j.at("I"), cx.n);
  for (const auto& c : j.at("cells")) {
    BipartiteCell bc{cx.n, cx.I, {}};
    for (const auto& e : c.at("edges")) {
      int a = e.at(0).get<int>(), b = e.at(1).get<int>();
      if (contains(cx.I, b) && !contains(cx.I, a)) std::swap(a, b);
      bc.X.emplace_back(a, b);
    }
    validate(bc);
    cx.cells.push_back(std::move(bc));
  }
  return cx;
}

CellComplexOnPi parse_cell_complex(const std::string& text) { return cell_complex_from_json(json::parse(text)); }

json to_json(const RelationTuple& t) {
  return {{"S", subset_to_json(t.S)}, {"a", t.a}, {"b", t.b}, {"c", t.c}, {"d", t.d}};
}

json to_json(const DecoratedPermutation& p) {
  json colors = json::object();
  for (size_t i = 0; i < p.pi.size(); ++i)
    if (p.fixed_color[i]) colors[std::to_string(i + 1)] = *p.fixed_color[i] == Color::Black ? "black" : "white";
  return {{"permutation", p.pi}, {"fixed_point_colors", colors}, {"anti_excedances", anti_excedances(p)}};
}

json to_json(const RegularityCertificate& c, int k, int n) {
  json out = {{"regular", c.regular}};
  if (c.regular) {
    if (k >= 0) {
      PluckerVector P(k, n, c.heights);
      out["heights"] = to_json(P);
    } else {
      json h = json::array();
      for (const auto& v : c.heights) h.push_back(to_string(v));
      out["heights"] = h;
    }
  }
  if (c.witness) {
    json terms = json::array();
    for (const auto& t : c.witness->terms) terms.push_back({{"cell", t.cell}, {"point", t.point}, {"weight", to_string(t.weight)}});
    out["witness"] = terms;
  }
  return out;
}

json to_json(const CounterexampleReport& r) {
  return {{"cells", r.cells},
          {"noncrossing_trees", r.noncrossing_trees},
          {"positroid_cells", r.positroid_cells},
          {"tiling",
           {{"all_trees", r.tiling.all_trees},
            {"volume", r.tiling.volume},
            {"expected_volume", r.tiling.expected_volume},
            {"proper_intersections", r.tiling.proper_intersections}}},
          {"complex_regular", r.complex_regularity.regular},
          {"complex_witness_terms", r.complex_regularity.witness ? r.complex_regularity.witness->terms.size() : 0},
          {"complex_witness_verified", r.complex_witness_verified},
          {"lift_facets", r.lift_facets},
          {"lift_matroidal", r.lift_matroidal},
          {"lift_positroidal_facets", r.lift_positroidal_facets},
          {"lift_regular", r.lift_regularity.regular},
          {"lift_witness_terms", r.lift_regularity.witness ? r.lift_regularity.witness->terms.size() : 0},
          {"lift_witness_verified", r.lift_witness_verified},
          {"passed", r.passed()}};
}

}  // namespace trop
