#include "trop/suite.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

#include "trop/lp.hpp"
#include "trop/random.hpp"

namespace trop {

namespace {

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

std::string kn_name(KN kn) { return std::to_string(kn.first) + "," + std::to_string(kn.second); }

std::uint64_t mix(std::uint64_t seed, KN kn, std::uint64_t salt) {
  return seed * 1000003u + static_cast<std::uint64_t>(kn.first) * 101u + static_cast<std::uint64_t>(kn.second) * 7u + salt;
}

PluckerVector permuted(const PluckerVector& P, const std::vector<int>& sigma) {
  PluckerVector Q(P.k, P.n);
  auto subsets = enumerate_ksubsets(P.k, P.n);
  for (size_t r = 0; r < subsets.size(); ++r) {
    Mask img = 0;
    for (int x : elements(subsets[r])) img |= bit(sigma[x - 1]);
    Q.values[r] = P[img];
  }
  return Q;
}

std::vector<Matroid> distinct_plabic_positroids(int k, int n) {
  std::set<std::vector<Mask>> seen;
  std::vector<Matroid> out;
  for (const auto& G : builtin_graphs(k, n)) {
    Matroid M = positroid_of_plabic(G);
    if (seen.insert(M.bases()).second) out.push_back(std::move(M));
  }
  return out;
}

long decorated_permutation_count(int k, int n) {
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  long count = 0;
  do {
    std::vector<int> fixed;
    for (int i = 0; i < n; ++i)
      if (pi[i] == i + 1) fixed.push_back(i);
    for (unsigned colors = 0; colors < (1u << fixed.size()); ++colors) {
      DecoratedPermutation p{pi, std::vector<std::optional<Color>>(n)};
      for (size_t t = 0; t < fixed.size(); ++t) p.fixed_color[fixed[t]] = ((colors >> t) & 1u) ? Color::White : Color::Black;
      if (static_cast<int>(anti_excedances(p).size()) == k) ++count;
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return count;
}

bool cells_series_parallel(const Subdivision& D) {
  for (const auto& M : cell_matroids(D)) {
    try {
      if (!is_series_parallel_positroid(M)) return false;
    } catch (const std::invalid_argument&) {
      return false;
    }
  }
  return true;
}

bool cells_free_of_octahedra(const Subdivision& D) {
  for (const auto& M : cell_matroids(D))
    if (!octahedral_faces(M).empty()) return false;
  return true;
}

}  // namespace

std::vector<PluckerVector> finest_positive_sample(int k, int n, int count, std::uint64_t seed) {
  RationalSampler rng(seed);
  WebNetwork net(k, n);
  std::vector<PluckerVector> out;
  for (int draws = 0; static_cast<int>(out.size()) < count; ++draws) {
    if (draws > 100 * count) throw std::runtime_error("finest_positive_sample: too few finest draws");
    PluckerVector P = net.trop_phi(rng.web(k, n));
    if (is_finest_positroidal(P)) out.push_back(std::move(P));
  }
  return out;
}

std::vector<PluckerVector> tied_positive_sample(int k, int n, int count, std::uint64_t seed) {
  RationalSampler rng(seed);
  WebNetwork net(k, n);
  std::vector<PluckerVector> out;
  for (int t = 0; t < count; ++t) {
    WebParameters X(k, n);
    for (auto& v : X.x) v = rng.uniform_int(0, 1);
    out.push_back(net.trop_phi(X));
  }
  return out;
}

bool is_face_of(const std::vector<Mask>& face, const std::vector<Mask>& cell, int n) {
  for (Mask b : face)
    if (std::find(cell.begin(), cell.end(), b) == cell.end()) return false;
  LPProblem lp;
  lp.num_vars = n + 1;
  lp.free_var.assign(n + 1, true);
  for (Mask v : cell) {
    Vec row(n + 1, 0);
    for (int i : elements(v)) row[i - 1] = 1;
    row[n] = -1;
    bool in = std::find(face.begin(), face.end(), v) != face.end();
    lp.add(row, in ? Sense::Equal : Sense::GreaterEq, in ? 0 : 1);
  }
  return lp_solve(lp).status == LPStatus::Optimal;
}

CheckResult check_roundtrip(const std::vector<KN>& kns, int samples, std::uint64_t seed, double budget_seconds) {
  Stopwatch sw;
  CheckResult r{1, "trop_psi o trop_phi = id and psi o phi = id on random parameters", true, 0, json::object()};
  for (KN kn : kns) {
    auto [k, n] = kn;
    RationalSampler rng(mix(seed, kn, 1));
    WebNetwork net(k, n);
    int trop_ok = 0, classical_ok = 0;
    for (int s = 0; s < samples; ++s) {
      WebParameters X = rng.web(k, n);
      if (trop_psi(k, n, net.trop_phi(X)) == X)
        ++trop_ok;
      else if (!r.detail.contains("witness"))
        r.detail["witness"] = {{"map", "trop"}, {"X", to_json(X)}};
      WebParameters x = rng.positive_web(k, n);
      if (psi(k, n, net.phi(x)) == x)
        ++classical_ok;
      else if (!r.detail.contains("witness"))
        r.detail["witness"] = {{"map", "classical"}, {"x", to_json(x)}};
    }
    r.detail[kn_name(kn)] = {{"samples", samples}, {"tropical_ok", trop_ok}, {"classical_ok", classical_ok}};
    if (trop_ok != samples || classical_ok != samples) r.passed = false;
  }
  r.seconds = sw.seconds();
  r.detail["budget_seconds"] = budget_seconds;
  if (r.seconds >= budget_seconds) r.passed = false;
  return r;
}

CheckResult check_positroid_roundtrip(const std::vector<KN>& kns) {
  Stopwatch sw;
  CheckResult r{2, "normalized -rank of plabic positroids is positive and fixed by trop_phi o trop_psi", true, 0, json::object()};
  for (KN kn : kns) {
    auto [k, n] = kn;
    WebNetwork net(k, n);
    int total = 0, positive = 0, fixed = 0;
    for (const auto& M : distinct_plabic_positroids(k, n)) {
      ++total;
      PluckerVector P = normalize(neg_rank_vector(M), full_mask(k));
      auto pos = is_positive_tropical_plucker(P);
      bool fix = net.trop_phi(trop_psi(k, n, P)) == P;
      positive += pos.ok;
      fixed += fix;
      if ((!pos.ok || !fix) && !r.detail.contains("witness")) {
        r.detail["witness"] = {{"matroid", to_json(M)}, {"positive", pos.ok}, {"fixed", fix}};
        if (pos.witness) r.detail["witness"]["relation"] = to_json(*pos.witness);
      }
    }
    r.detail[kn_name(kn)] = {{"positroids", total}, {"positive", positive}, {"fixed", fixed}};
    if (positive != total || fixed != total || total == 0) r.passed = false;
  }
  r.seconds = sw.seconds();
  return r;
}

CheckResult check_subdivision_equivalences(const std::vector<KN>& kns, int samples, std::uint64_t seed) {
  Stopwatch sw;
  CheckResult r{3, "matroidal <=> Dressian, positroidal <=> positive Dressian on random heights", true, 0, json::object()};
  for (KN kn : kns) {
    auto [k, n] = kn;
    RationalSampler rng(mix(seed, kn, 3));
    WebNetwork net(k, n);
    int in_dr = 0, in_pos = 0, mismatches = 0, unexplained = 0;
    for (int s = 0; s < samples; ++s) {
      PluckerVector P;
      switch (s % 3) {
        case 0:
          P = rng.heights(k, n);
          break;
        case 1:
          P = net.trop_phi(rng.web(k, n));
          break;
        default: {
          std::vector<int> sigma(n);
          std::iota(sigma.begin(), sigma.end(), 1);
          std::shuffle(sigma.begin(), sigma.end(), rng.engine());
          P = permuted(net.trop_phi(rng.web(k, n)), sigma);
        }
      }
      bool dr = is_tropical_plucker(P).ok, dp = is_positive_tropical_plucker(P).ok;
      Subdivision D = regular_subdivision(P);
      bool mat = is_matroidal(D), pos = is_positroidal(D);
      in_dr += dr;
      in_pos += dp;
      if (mat != dr || pos != dp) {
        ++mismatches;
        if (!r.detail.contains("witness"))
          r.detail["witness"] = {{"heights", to_json(P)}, {"dressian", dr}, {"matroidal", mat}, {"positive", dp}, {"positroidal", pos}};
      }
      if (!dr && !first_nonmatroidal_cell(D)) ++unexplained;
    }
    r.detail[kn_name(kn)] = {{"samples", samples},     {"in_dressian", in_dr},     {"in_positive_dressian", in_pos},
                             {"mismatches", mismatches}, {"failures_without_bad_cell", unexplained}};
    if (mismatches || unexplained) r.passed = false;
  }
  r.seconds = sw.seconds();
  return r;
}

CheckResult check_fvector(const std::vector<KN>& kns, int samples, std::uint64_t seed) {
  Stopwatch sw;
  CheckResult r{4, "finest positive subdivisions: binom(n-2,k-1) facets and interior f-vector formula", true, 0, json::object()};
  for (KN kn : kns) {
    auto [k, n] = kn;
    int facet_ok = 0, fvec_ok = 0;
    for (const auto& P : finest_positive_sample(k, n, samples, mix(seed, kn, 4))) {
      Subdivision D = regular_subdivision(P);
      bool facets = static_cast<long>(D.cells.size()) == static_cast<long>(binom(n - 2, k - 1));
      auto counts = interior_face_counts(D);
      std::map<int, long> expected;
      for (int c = 1; c <= std::min(k, n - k); ++c) expected[n - c] = fvector_bound(k, n, c);
      bool fvec = counts == expected;
      facet_ok += facets;
      fvec_ok += fvec;
      if ((!facets || !fvec) && !r.detail.contains("witness")) {
        json got = json::object(), want = json::object();
        for (auto [d, m] : counts) got[std::to_string(d)] = m;
        for (auto [d, m] : expected) want[std::to_string(d)] = m;
        r.detail["witness"] = {{"heights", to_json(P)}, {"facets", D.cells.size()}, {"counts", got}, {"formula", want}};
      }
    }
    r.detail[kn_name(kn)] = {{"samples", samples}, {"expected_facets", binom(n - 2, k - 1)}, {"facets_ok", facet_ok}, {"fvector_ok", fvec_ok}};
    if (facet_ok != samples || fvec_ok != samples) r.passed = false;
  }
  r.seconds = sw.seconds();
  return r;
}

CheckResult check_finest_equivalence(const std::vector<KN>& kns, int samples, int tied, std::uint64_t seed) {
  Stopwatch sw;
  CheckResult r{5, "finest <=> all facets series-parallel <=> no octahedral face", true, 0, json::object()};
  int finest_true = 0, finest_false = 0;
  for (KN kn : kns) {
    auto [k, n] = kn;
    auto sample = finest_positive_sample(k, n, samples, mix(seed, kn, 4));
    auto extra = tied_positive_sample(k, n, tied, mix(seed, kn, 5));
    sample.insert(sample.end(), extra.begin(), extra.end());
    int agree = 0, t = 0;
    for (const auto& P : sample) {
      bool fin = is_finest_positroidal(P);
      Subdivision D = regular_subdivision(P);
      bool sp = cells_series_parallel(D), oct = cells_free_of_octahedra(D);
      t += fin;
      if (fin == sp && sp == oct)
        ++agree;
      else if (!r.detail.contains("witness"))
        r.detail["witness"] = {{"heights", to_json(P)}, {"finest", fin}, {"series_parallel", sp}, {"no_octahedron", oct}};
    }
    finest_true += t;
    finest_false += static_cast<int>(sample.size()) - t;
    r.detail[kn_name(kn)] = {{"vectors", sample.size()}, {"finest", t}, {"agree", agree}};
    if (agree != static_cast<int>(sample.size())) r.passed = false;
  }
  r.detail["finest_true"] = finest_true;
  r.detail["finest_false"] = finest_false;
  if (finest_true == 0 || finest_false == 0) r.passed = false;
  r.seconds = sw.seconds();
  return r;
}

CheckResult check_positroid_recognition(const std::vector<KN>& kns) {
  Stopwatch sw;
  CheckResult r{6, "positroid recognition: U(2,4), M(K4) under all labelings, plabic positroids", true, 0, json::object()};
  bool u24 = is_positroid(Matroid::uniform(2, 4));
  std::vector<int> labels{1, 2, 3, 4, 5, 6};
  int k4_rejected = 0, k4_total = 0;
  do {
    ++k4_total;
    if (!is_positroid(graphic_k4(labels)))
      ++k4_rejected;
    else if (!r.detail.contains("witness"))
      r.detail["witness"] = {{"k4_labels", labels}};
  } while (std::next_permutation(labels.begin(), labels.end()));
  r.detail["U24"] = u24;
  r.detail["K4_rejected"] = k4_rejected;
  r.detail["K4_labelings"] = k4_total;
  if (!u24 || k4_rejected != k4_total) r.passed = false;
  for (KN kn : kns) {
    auto [k, n] = kn;
    int plabic = 0, recognized = 0;
    for (const auto& M : distinct_plabic_positroids(k, n)) {
      ++plabic;
      if (is_positroid(M))
        ++recognized;
      else if (!r.detail.contains("witness"))
        r.detail["witness"] = {{"plabic_positroid", to_json(M)}};
    }
    json d = {{"plabic_positroids", plabic}, {"recognized", recognized}};
    if (n <= 6) {
      long accepted = 0;
      for (const auto& M : enumerate_matroids(k, n)) accepted += is_positroid(M);
      long perms = decorated_permutation_count(k, n);
      d["matroids_accepted"] = accepted;
      d["decorated_permutations"] = perms;
      if (accepted != perms) r.passed = false;
    }
    r.detail[kn_name(kn)] = d;
    if (recognized != plabic) r.passed = false;
  }
  r.seconds = sw.seconds();
  return r;
}

CheckResult check_rank_vector_pipeline(const std::vector<KN>& kns) {
  Stopwatch sw;
  CheckResult r{7, "-rank in Dr gives a matroidal subdivision with the matroid polytope as a face; -rank in Dr+ <=> positroid",
                true, 0, json::object()};
  for (KN kn : kns) {
    auto [k, n] = kn;
    int total = 0, in_dr = 0, face_ok = 0, agree = 0, pos_not_positroid = 0, positroid_not_pos = 0;
    for (const auto& M : enumerate_matroids(k, n)) {
      ++total;
      PluckerVector P = neg_rank_vector(M);
      if (is_tropical_plucker(P).ok) {
        ++in_dr;
        Subdivision D = regular_subdivision(P);
        bool face = false;
        if (is_matroidal(D))
          for (const auto& c : D.cells)
            if (is_face_of(M.bases(), c, n)) {
              face = true;
              break;
            }
        if (face)
          ++face_ok;
        else if (!r.detail.contains("face_witness"))
          r.detail["face_witness"] = to_json(M);
      }
      bool dp = is_positive_tropical_plucker(P).ok, pr = is_positroid(M);
      if (dp == pr) {
        ++agree;
      } else {
        (dp ? pos_not_positroid : positroid_not_pos)++;
        if (!r.detail.contains("witness")) r.detail["witness"] = {{"matroid", to_json(M)}, {"positive", dp}, {"positroid", pr}};
      }
    }
    r.detail[kn_name(kn)] = {{"matroids", total},
                             {"in_dressian", in_dr},
                             {"face_ok", face_ok},
                             {"agree", agree},
                             {"positive_not_positroid", pos_not_positroid},
                             {"positroid_not_positive", positroid_not_pos}};
    if (face_ok != in_dr || agree != total) r.passed = false;
  }
  r.seconds = sw.seconds();
  return r;
}

CheckResult check_counterexample(double budget_seconds) {
  Stopwatch sw;
  CheckResult r{8, "nonregular positroidal subdivision: 45 noncrossing-tree cells, LP infeasibility, matroidal lift", true, 0, json::object()};
  CounterexampleReport rep = verify_counterexample();
  r.seconds = sw.seconds();
  r.detail = to_json(rep);
  r.detail["budget_seconds"] = budget_seconds;
  r.passed = rep.passed() && r.seconds < budget_seconds;
  return r;
}

CheckResult check_worked_values() {
  Stopwatch sw;
  CheckResult r{9, "worked values: trip permutation, flow count, face-parameter identities, anti-excedances", true, 0, json::object()};

  WebGraph w25 = web_graph(2, 5);
  DecoratedPermutation trip = trip_permutation(w25.graph);
  bool trip_ok = trip.pi == std::vector<int>{3, 4, 5, 1, 2};
  r.detail["trip"] = to_string(trip);

  bool sources_ok = w25.canonical.sources == from_elements({1, 2}, 5);
  auto fl = flows(w25.graph, w25.canonical, from_elements({2, 4}, 5));
  r.detail["flows_to_24"] = fl.size();
  bool flows_ok = sources_ok && fl.size() == 2;

  RationalSampler rng(13);
  WebNetwork net(3, 6);
  bool ident_ok = true;
  for (int t = 0; t < 20; ++t) {
    WebParameters X = rng.web(3, 6);
    PluckerVector P = net.trop_phi(X);
    if (P[from_elements({1, 2, 3}, 6)] != 0 || P[from_elements({1, 2, 4}, 6)] != X.at(3, 4) ||
        P[from_elements({1, 3, 4}, 6)] != X.at(3, 4) + X.at(2, 4)) {
      ident_ok = false;
      r.detail["identity_witness"] = to_json(X);
      break;
    }
  }
  r.detail["identities"] = ident_ok;

  DecoratedPermutation p{{3, 2, 5, 1, 6, 8, 7, 4}, std::vector<std::optional<Color>>(8)};
  p.fixed_color[1] = Color::Black;
  p.fixed_color[6] = Color::White;
  auto ae = anti_excedances(p);
  r.detail["anti_excedances"] = ae;
  bool ae_ok = ae == std::vector<int>{4, 7, 8};

  r.passed = trip_ok && flows_ok && ident_ok && ae_ok;
  r.seconds = sw.seconds();
  return r;
}

json to_json(const CheckResult& r) {
  return {{"criterion", r.id}, {"title", r.title}, {"passed", r.passed}, {"seconds", r.seconds}, {"detail", r.detail}};
}

}  // namespace trop
