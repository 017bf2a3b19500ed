#include <doctest.h>

#include "trop/hull.hpp"
#include "trop/random.hpp"
#include "trop/subdivision.hpp"
#include "trop/suite.hpp"

using namespace trop;

namespace {

Mask S(std::initializer_list<int> xs, int n) { return from_elements(xs, n); }
Rational q(long p, long d = 1) { return make_rational(p, d); }

// Outer triangle A B C and inner triangle a b c, points 0..5.
const Mat kNested{{q(0), q(0)}, {q(4), q(0)}, {q(0), q(4)}, {q(1), q(1)}, {q(2), q(1)}, {q(1), q(2)}};
enum { A, B, C, a, b, c };

std::vector<std::vector<int>> sorted_cells(std::vector<std::vector<int>> cells) {
  for (auto& x : cells) std::sort(x.begin(), x.end());
  std::sort(cells.begin(), cells.end());
  return cells;
}

}  // namespace

TEST_CASE("trivial and split subdivisions of the octahedron") {
  PluckerVector zero(2, 4);
  Subdivision T = regular_subdivision(zero);
  CHECK(T.cells.size() == 1);
  CHECK(T.cells[0].size() == 6);
  CHECK(interior_face_counts(T) == std::map<int, long>{{3, 1}});
  CHECK(is_matroidal(T));
  CHECK(is_positroidal(T));
  CHECK_FALSE(is_finest_positroidal(zero));

  PluckerVector P(2, 4);
  P[S({1, 4}, 4)] = 1;
  P[S({2, 3}, 4)] = 1;
  Subdivision D = regular_subdivision(P);
  CHECK(D.cells.size() == 2);
  CHECK(interior_face_counts(D) == std::map<int, long>{{3, 2}, {2, 1}});
  CHECK(is_finest_positroidal(P));
  CHECK(is_positroidal(D));
  for (const auto& M : cell_matroids(D)) CHECK(M.bases().size() == 5);

  PluckerVector N(2, 4);
  N[S({1, 3}, 4)] = 1;
  N[S({2, 4}, 4)] = 1;
  Subdivision E = regular_subdivision(N);
  CHECK(E.cells.size() == 2);
  CHECK(is_matroidal(E));
  CHECK_FALSE(is_positroidal(E));
  CHECK_THROWS_AS(is_finest_positroidal(N), std::invalid_argument);
}

TEST_CASE("f-vector formula values") {
  CHECK(fvector_bound(2, 4, 1) == 2);
  CHECK(fvector_bound(2, 4, 2) == 1);
  CHECK(fvector_bound(3, 12, 1) == 45);
  CHECK(fvector_bound(3, 6, 1) == 6);
  CHECK_THROWS_AS(fvector_bound(2, 4, 3), std::invalid_argument);
  CHECK_THROWS_AS(fvector_bound(2, 4, 0), std::invalid_argument);
}

TEST_CASE("non-Plucker heights produce a non-matroidal cell") {
  RationalSampler rng(21);
  int seen = 0;
  for (int t = 0; t < 60; ++t) {
    PluckerVector P = rng.heights(2 + t % 2, 5 + t % 2);
    bool dr = is_tropical_plucker(P).ok;
    Subdivision D = regular_subdivision(P);
    CHECK(is_matroidal(D) == dr);
    if (!dr) {
      ++seen;
      auto bad = first_nonmatroidal_cell(D);
      REQUIRE(bad);
      CHECK_FALSE(is_matroid(D.n, D.k, D.cells[*bad]));
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("finest positive subdivisions beyond the acceptance range") {
  for (auto [k, n, count] : {std::tuple{2, 6, 5}, {3, 7, 2}}) {
    for (const auto& P : finest_positive_sample(k, n, count, 77)) {
      Subdivision D = regular_subdivision(P);
      CHECK(static_cast<long>(D.cells.size()) == static_cast<long>(binom(n - 2, k - 1)));
      auto counts = interior_face_counts(D);
      for (int cc = 1; cc <= std::min(k, n - k); ++cc) CHECK(counts[n - cc] == fvector_bound(k, n, cc));
    }
  }
}

TEST_CASE("finest vectors have no coarsening under small positive perturbation") {
  RationalSampler rng(4);
  WebNetwork net(3, 6);
  for (int t = 0; t < 10; ++t) {
    WebParameters X = rng.web(3, 6);
    PluckerVector P = net.trop_phi(X);
    if (!is_finest_positroidal(P)) continue;
    size_t cells = regular_subdivision(P).cells.size();
    for (int s = 0; s < 3; ++s) {
      WebParameters Y = X;
      for (auto& v : Y.x) v += make_rational(rng.uniform_int(-1, 1), 1000);
      CHECK(regular_subdivision(net.trop_phi(Y)).cells.size() == cells);
    }
  }
  // All-zero parameters give the trivial subdivision.
  PluckerVector Z = net.trop_phi(WebParameters(3, 6));
  CHECK(regular_subdivision(Z).cells.size() == 1);
}

TEST_CASE("regularity certificates on hypersimplex subdivisions") {
  RationalSampler rng(8);
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}}) {
    for (int t = 0; t < 5; ++t) {
      Subdivision D = regular_subdivision(rng.heights(k, n));
      auto cert = is_regular_subdivision(D);
      REQUIRE(cert.regular);
      CHECK(regular_subdivision(PluckerVector(k, n, cert.heights)) == D);
    }
  }
}

TEST_CASE("twisted triangulations of nested triangles are not regular") {
  std::vector<std::vector<int>> twisted{{a, b, c}, {A, B, b}, {A, b, a}, {B, C, c}, {B, c, b}, {C, A, a}, {C, a, c}};
  auto cert = is_regular_subdivision(kNested, twisted);
  CHECK_FALSE(cert.regular);
  REQUIRE(cert.witness);
  CHECK(verify_regularity_witness(kNested, twisted, *cert.witness));

  std::vector<std::vector<int>> mirror{{a, b, c}, {A, B, a}, {B, a, b}, {B, C, b}, {C, b, c}, {C, A, c}, {A, c, a}};
  CHECK_FALSE(is_regular_subdivision(kNested, mirror).regular);

  std::vector<std::vector<int>> mixed{{a, b, c}, {A, B, b}, {A, b, a}, {B, C, c}, {B, c, b}, {C, A, c}, {A, c, a}};
  auto ok = is_regular_subdivision(kNested, mixed);
  REQUIRE(ok.regular);
  CHECK(lower_hull(kNested, ok.heights) == sorted_cells(mixed));
  // A witness for one subdivision does not certify another.
  CHECK_FALSE(verify_regularity_witness(kNested, mixed, *cert.witness));
}
