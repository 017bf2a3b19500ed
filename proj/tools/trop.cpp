#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "trop/json_io.hpp"
#include "trop/random.hpp"
#include "trop/suite.hpp"

using namespace trop;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

KN parse_kn(const std::string& s) {
  int k = 0, n = 0;
  char comma = 0;
  std::istringstream in(s);
  if (!(in >> k >> comma >> n) || comma != ',' || !in.eof() || k < 1 || k >= n || n > kMaxGround)
    throw UsageError("expected k,n with 1 <= k < n <= 16, got '" + s + "'");
  return {k, n};
}

Matroid load_matroid(const std::string& spec) {
  if (spec == "MK4") return graphic_k4();
  if (spec.rfind("U:", 0) == 0) {
    auto [k, n] = parse_kn(spec.substr(2));
    return Matroid::uniform(k, n);
  }
  return matroid_from_json(read_json(spec));
}

PlabicGraph load_graph(const std::string& spec) {
  if (spec.rfind("web:", 0) == 0) {
    auto [k, n] = parse_kn(spec.substr(4));
    return web_graph(k, n).graph;
  }
  if (spec.rfind("lollipops:", 0) == 0) {
    std::vector<Color> colors;
    for (char c : spec.substr(10)) {
      if (c != 'b' && c != 'w') throw UsageError("lollipop colors are b or w");
      colors.push_back(c == 'b' ? Color::Black : Color::White);
    }
    return lollipops(colors);
  }
  return plabic_from_json(read_json(spec));
}

Mask parse_set(const std::string& s, int n) {
  std::vector<int> xs;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ','))
    if (!tok.empty()) xs.push_back(std::stoi(tok));
  return from_elements(xs, n);
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string web_svg(const WebGraph& w) {
  const auto& G = w.graph;
  double minx = 1e9, maxx = -1e9, miny = 1e9, maxy = -1e9;
  std::vector<std::pair<double, double>> p;
  for (const auto& q : w.position) {
    p.push_back({q.x.get_d(), -q.y.get_d()});
    minx = std::min(minx, p.back().first);
    maxx = std::max(maxx, p.back().first);
    miny = std::min(miny, p.back().second);
    maxy = std::max(maxy, p.back().second);
  }
  const double s = 40, pad = 30;
  auto X = [&](double x) { return pad + (x - minx) * s; };
  auto Y = [&](double y) { return pad + (y - miny) * s; };
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 2 * pad + (maxx - minx) * s << "\" height=\""
    << 2 * pad + (maxy - miny) * s << "\">\n";
  for (int e = 0; e < G.num_edges(); ++e) {
    auto [a, b] = G.ends(e);
    o << "  <line x1=\"" << X(p[a].first) << "\" y1=\"" << Y(p[a].second) << "\" x2=\"" << X(p[b].first) << "\" y2=\""
      << Y(p[b].second) << "\" stroke=\"black\"/>\n";
  }
  for (int v = 0; v < G.num_vertices(); ++v) {
    if (G.is_boundary(v)) {
      o << "  <text x=\"" << X(p[v].first) << "\" y=\"" << Y(p[v].second) - 6 << "\" font-size=\"12\" text-anchor=\"middle\">"
        << v + 1 << "</text>\n";
      continue;
    }
    o << "  <circle cx=\"" << X(p[v].first) << "\" cy=\"" << Y(p[v].second) << "\" r=\"5\" stroke=\"black\" fill=\""
      << (G.color(v) == Color::Black ? "black" : "white") << "\"/>\n";
  }
  o << "</svg>\n";
  return o.str();
}

int report(const CheckResult& r) {
  emit(to_json(r));
  return r.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical Plucker vectors, positroids and plabic graphs"};
  app.require_subcommand(1);
  std::uint64_t seed = 20240601;
  app.add_option("--seed", seed, "Seed for randomized suites");

  std::string input, heights, subdivision, matroid_spec, graph_spec, params, svg_path, kn_text, sources_text, target_text;
  bool positive = false;
  int samples = 100;
  std::vector<std::string> kns_text{"2,4", "2,5", "3,6"};

  auto* dressian = app.add_subcommand("dressian", "Dressian membership");
  dressian->require_subcommand(1);
  auto* dcheck = dressian->add_subcommand("check", "Check the three-term relations");
  dcheck->add_option("--input", input, "Plucker vector JSON")->required();
  dcheck->add_flag("--positive", positive, "Check the positive Dressian");

  auto* subdivide = app.add_subcommand("subdivide", "Regular subdivision induced by heights");
  subdivide->add_option("--heights", heights, "Plucker vector JSON")->required();

  auto* classify = app.add_subcommand("classify", "Matroidal and positroidal classification");
  classify->add_option("--subdivision", subdivision, "Subdivision JSON")->required();

  auto* finest = app.add_subcommand("finest", "Is the positive subdivision finest");
  finest->add_option("--heights", heights, "Plucker vector JSON")->required();

  auto* fvector = app.add_subcommand("fvector", "Interior face counts against the f-vector formula");
  fvector->add_option("--heights", heights, "Plucker vector JSON")->required();

  auto* positroid = app.add_subcommand("positroid", "Positroid recognition");
  positroid->require_subcommand(1);
  auto* pcheck = positroid->add_subcommand("check", "Is the matroid a positroid");
  pcheck->add_option("--matroid", matroid_spec, "Matroid JSON, U:k,n or MK4")->required();

  auto* matroid = app.add_subcommand("matroid", "Matroid data");
  matroid->require_subcommand(1);
  auto* minfo = matroid->add_subcommand("info", "Rank, components, polytope dimension");
  minfo->add_option("--matroid", matroid_spec, "Matroid JSON, U:k,n or MK4")->required();

  auto* plabic = app.add_subcommand("plabic", "Plabic graphs");
  plabic->require_subcommand(1);
  auto* ptrip = plabic->add_subcommand("trip", "Trip permutation");
  auto* ppos = plabic->add_subcommand("positroid", "Positroid from perfect orientations");
  auto* pflows = plabic->add_subcommand("flows", "Flows of a perfect orientation");
  for (auto* c : {ptrip, ppos, pflows})
    c->add_option("--graph", graph_spec, "Plabic graph JSON, web:k,n or lollipops:bw..")->required();
  pflows->add_option("--sources", sources_text, "Source set of the orientation, e.g. 1,2 (default: first found)");
  pflows->add_option("--to", target_text, "Target set J, e.g. 2,4")->required();

  auto* web = app.add_subcommand("web", "The Web graph");
  web->add_option("--kn", kn_text, "k,n")->required();
  web->add_option("--emit-svg", svg_path, "Write a drawing");

  auto* tropphi = app.add_subcommand("tropphi", "Face parameters to tropical Plucker vector");
  tropphi->add_option("--params", params, "Web parameter JSON")->required();
  auto* troppsi = app.add_subcommand("troppsi", "Tropical Plucker vector to face parameters");
  troppsi->add_option("--heights", heights, "Plucker vector JSON")->required();
  auto* phi_cmd = app.add_subcommand("phi", "Positive face weights to Plucker coordinates");
  phi_cmd->add_option("--params", params, "Web parameter JSON")->required();
  auto* psi_cmd = app.add_subcommand("psi", "Plucker coordinates to face weights");
  psi_cmd->add_option("--input", input, "Plucker vector JSON")->required();

  auto* roundtrip = app.add_subcommand("roundtrip", "Random round trips through both parametrizations");
  roundtrip->add_option("--kn", kns_text, "k,n pairs")->expected(1, -1);
  roundtrip->add_option("--samples", samples, "Samples per pair");

  auto* counterexample = app.add_subcommand("counterexample", "The nonregular positroidal subdivision");
  counterexample->require_subcommand(1);
  auto* cverify = counterexample->add_subcommand("verify", "Run every check on the embedded complex");
  cverify->add_option("--emit-svg", svg_path, "Write the mixed subdivision and dual arrangement");

  auto* theorems = app.add_subcommand("theorems", "Property suites at the given types");
  theorems->add_option("--kn", kns_text, "k,n pairs")->expected(1, -1);
  theorems->add_option("--samples", samples, "Random samples per pair");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (dcheck->parsed()) {
      PluckerVector P = plucker_from_json(read_json(input));
      auto r = positive ? is_positive_tropical_plucker(P) : is_tropical_plucker(P);
      json out = {{"ok", r.ok}, {"positive", positive}};
      if (r.witness) {
        auto& t = *r.witness;
        auto v = check_three_term(P, t.S, t.a, t.b, t.c, t.d);
        out["witness"] = to_json(t);
        out["witness"]["verdict"] = to_string(v.kind);
        out["witness"]["minimum_at"] = pairings_string(v.achieving);
      }
      emit(out);
      return r.ok ? 0 : 1;
    }
    if (subdivide->parsed()) {
      emit(to_json(regular_subdivision(plucker_from_json(read_json(heights)))));
      return 0;
    }
    if (classify->parsed()) {
      Subdivision D = subdivision_from_json(read_json(subdivision));
      json out = {{"cells", D.cells.size()}, {"matroidal", is_matroidal(D)}, {"positroidal", is_positroidal(D)}};
      if (auto bad = first_nonmatroidal_cell(D)) {
        json cell = json::array();
        for (Mask s : D.cells[*bad]) cell.push_back(subset_to_json(s));
        out["nonmatroidal_cell"] = cell;
      }
      emit(out);
      return 0;
    }
    if (finest->parsed()) {
      PluckerVector P = plucker_from_json(read_json(heights));
      auto pos = is_positive_tropical_plucker(P);
      if (!pos.ok) {
        emit({{"error", "heights are not a positive tropical Plucker vector"}, {"witness", to_json(*pos.witness)}});
        return 1;
      }
      Subdivision D = regular_subdivision(P);
      emit({{"finest", is_finest_positroidal(P)}, {"cells", D.cells.size()}, {"finest_cell_count", binom(P.n - 2, P.k - 1)}});
      return 0;
    }
    if (fvector->parsed()) {
      PluckerVector P = plucker_from_json(read_json(heights));
      Subdivision D = regular_subdivision(P);
      auto counts = interior_face_counts(D);
      json rows = json::array();
      bool equal = true;
      for (int c = 1; c <= std::min(P.k, P.n - P.k); ++c) {
        long got = counts.count(P.n - c) ? counts[P.n - c] : 0, bound = fvector_bound(P.k, P.n, c);
        equal = equal && got == bound;
        rows.push_back({{"c", c}, {"dimension", P.n - c}, {"interior_faces", got}, {"formula", bound}});
      }
      emit({{"matroidal", is_matroidal(D)}, {"counts", rows}, {"attains_formula", equal}});
      return 0;
    }
    if (pcheck->parsed()) {
      Matroid M = load_matroid(matroid_spec);
      bool p = is_positroid(M);
      json necklace = json::array();
      for (Mask s : grassmann_necklace(M)) necklace.push_back(subset_to_json(s));
      emit({{"positroid", p}, {"grassmann_necklace", necklace}, {"rank_relations_hold", rank_relations_hold(M)}});
      return p ? 0 : 1;
    }
    if (minfo->parsed()) {
      Matroid M = load_matroid(matroid_spec);
      json comps = json::array();
      for (Mask c : connected_components(M)) comps.push_back(subset_to_json(c));
      bool p = is_positroid(M);
      json out = {{"n", M.n()},
                  {"k", M.k()},
                  {"bases", M.bases().size()},
                  {"components", comps},
                  {"polytope_dimension", polytope_dimension(M)},
                  {"positroid", p},
                  {"octahedral_faces", octahedral_faces(M).size()}};
      if (p && comps.size() == 1) out["series_parallel"] = is_series_parallel_positroid(M);
      emit(out);
      return 0;
    }
    if (ptrip->parsed()) {
      emit(to_json(trip_permutation(load_graph(graph_spec))));
      return 0;
    }
    if (ppos->parsed()) {
      emit(to_json(positroid_of_plabic(load_graph(graph_spec))));
      return 0;
    }
    if (pflows->parsed()) {
      PlabicGraph G = load_graph(graph_spec);
      auto os = perfect_orientations(G);
      if (os.empty()) throw UsageError("graph has no perfect orientation");
      const PerfectOrientation* O = &os[0];
      if (!sources_text.empty()) {
        Mask want = parse_set(sources_text, G.n());
        O = nullptr;
        for (const auto& o : os)
          if (o.sources == want) O = &o;
        if (!O) throw UsageError("no perfect orientation has sources {" + sources_text + "}");
      }
      auto fs = flows(G, *O, parse_set(target_text, G.n()));
      json list = json::array();
      for (const auto& f : fs) {
        json paths = json::array();
        for (const auto& p : f.paths) {
          json vs = json::array();
          vs.push_back(G.external_id(G.tail(p.front())));
          for (int d : p) vs.push_back(G.external_id(G.head(d)));
          paths.push_back(vs);
        }
        list.push_back({{"paths", paths}, {"cycles", f.cycles.size()}, {"left_face_counts", left_face_counts(G, f)}});
      }
      emit({{"sources", subset_to_json(O->sources)}, {"count", fs.size()}, {"flows", list}});
      return 0;
    }
    if (web->parsed()) {
      auto [k, n] = parse_kn(kn_text);
      WebGraph w = web_graph(k, n);
      json faces = json::array();
      for (int i = 1; i <= k; ++i)
        for (int j = k + 1; j <= n; ++j) faces.push_back({{"face", {i, j}}, {"index", w.face[i][j]}});
      if (!svg_path.empty()) write_text(svg_path, web_svg(w));
      emit({{"graph", to_json(w.graph)}, {"labelled_faces", faces}, {"trip", to_string(trip_permutation(w.graph))}});
      return 0;
    }
    if (tropphi->parsed()) {
      WebParameters X = web_parameters_from_json(read_json(params));
      emit(to_json(trop_phi(X.k, X.n, X)));
      return 0;
    }
    if (troppsi->parsed()) {
      PluckerVector P = plucker_from_json(read_json(heights));
      emit(to_json(trop_psi(P.k, P.n, P)));
      return 0;
    }
    if (phi_cmd->parsed()) {
      WebParameters x = web_parameters_from_json(read_json(params));
      for (const auto& v : x.x)
        if (v <= 0) throw UsageError("phi needs positive face weights");
      emit(to_json(phi(x.k, x.n, x)));
      return 0;
    }
    if (psi_cmd->parsed()) {
      PluckerVector p = plucker_from_json(read_json(input));
      emit(to_json(psi(p.k, p.n, p)));
      return 0;
    }
    if (roundtrip->parsed()) {
      std::vector<KN> kns;
      for (const auto& s : kns_text) kns.push_back(parse_kn(s));
      return report(check_roundtrip(kns, samples, seed, 1e9));
    }
    if (cverify->parsed()) {
      CheckResult r = check_counterexample();
      if (!svg_path.empty()) write_text(svg_path, counterexample_svg(counterexample_data()));
      return report(r);
    }
    if (theorems->parsed()) {
      std::vector<KN> kns;
      for (const auto& s : kns_text) kns.push_back(parse_kn(s));
      const std::vector<std::pair<std::string, CheckResult (*)(const std::vector<KN>&, int, std::uint64_t)>> suites{
          {"trop_psi o trop_phi = id", [](const std::vector<KN>& v, int m, std::uint64_t s) { return check_roundtrip(v, m, s, 1e9); }},
          {"normalized -rank of plabic positroids is positive and round-trips",
           [](const std::vector<KN>& v, int, std::uint64_t) { return check_positroid_roundtrip(v); }},
          {"matroidal <=> Dressian, positroidal <=> positive Dressian",
           [](const std::vector<KN>& v, int m, std::uint64_t s) { return check_subdivision_equivalences(v, 2 * m, s); }},
          {"finest <=> series-parallel <=> no octahedron",
           [](const std::vector<KN>& v, int m, std::uint64_t s) { return check_finest_equivalence(v, m / 2, m / 2, s); }},
          {"finest cell count and interior f-vector",
           [](const std::vector<KN>& v, int m, std::uint64_t s) { return check_fvector(v, m / 2, s); }},
      };
      json out = json::array();
      bool all = true;
      for (const auto& [name, run] : suites) {
        CheckResult r = run(kns, samples, seed);
        all = all && r.passed;
        std::cerr << (r.passed ? "PASS " : "FAIL ") << name << "\n";
        json j = to_json(r);
        j["suite"] = name;
        out.push_back(j);
      }
      emit(out);
      return all ? 0 : 1;
    }
  } catch (const UsageError& e) {
    emit({{"error", e.what()}});
    return 2;
  } catch (const std::invalid_argument& e) {
    emit({{"error", e.what()}});
    return 2;
  } catch (const json::exception& e) {
    emit({{"error", e.what()}});
    return 2;
  }
  return 2;
}
