#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "trop/dressian.hpp"
#include "trop/linalg.hpp"
#include "trop/random.hpp"

using namespace trop;

namespace {

Mask S(std::initializer_list<int> xs, int n) { return from_elements(xs, n); }

// Tropical k x k minors (min over bijections) of a random k x n matrix.
PluckerVector tropical_minors(const std::vector<Vec>& A, int n) {
  const int k = static_cast<int>(A.size());
  PluckerVector P(k, n);
  auto subsets = enumerate_ksubsets(k, n);
  for (size_t r = 0; r < subsets.size(); ++r) {
    auto cols = elements(subsets[r]);
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    bool first = true;
    Rational best;
    do {
      Rational s = 0;
      for (int i = 0; i < k; ++i) s += A[i][cols[perm[i]] - 1];
      if (first || s < best) best = s, first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    P.values[r] = best;
  }
  return P;
}

// -(sum of split metrics) for splits given by intervals [a, b] of [n].
PluckerVector split_heights(int n, const std::vector<std::pair<int, int>>& intervals, const std::vector<Rational>& w) {
  PluckerVector P(2, n);
  for (Mask s : enumerate_ksubsets(2, n)) {
    auto e = elements(s);
    Rational d = 0;
    for (size_t t = 0; t < intervals.size(); ++t) {
      auto [a, b] = intervals[t];
      bool in_i = a <= e[0] && e[0] <= b, in_j = a <= e[1] && e[1] <= b;
      if (in_i != in_j) d += w[t];
    }
    P[s] = -d;
  }
  return P;
}

}  // namespace

TEST_CASE("three-term verdicts") {
  PluckerVector zero(2, 4);
  auto v = check_three_term(zero, 0, 1, 2, 3, 4);
  CHECK(v.kind == ThreeTerm::Positive);
  CHECK(v.achieving == (kAcBd | kAbCd | kAdBc));

  PluckerVector P(2, 4);
  P[S({1, 3}, 4)] = 1;  // ac + bd = 1, others 0: tie of ab|cd and ad|bc only
  v = check_three_term(P, 0, 1, 2, 3, 4);
  CHECK(v.kind == ThreeTerm::TropicalThirdOnly);
  CHECK(v.achieving == (kAbCd | kAdBc));
  CHECK(is_tropical_plucker(P).ok);
  auto w = is_positive_tropical_plucker(P);
  CHECK_FALSE(w.ok);
  REQUIRE(w.witness);
  CHECK(*w.witness == RelationTuple{0, 1, 2, 3, 4});

  PluckerVector Q(2, 4);
  Q[S({1, 2}, 4)] = 1;  // unique minimum at ac|bd... and ad|bc: both 0; ab|cd = 1
  CHECK(check_three_term(Q, 0, 1, 2, 3, 4).kind == ThreeTerm::Positive);
  Q[S({1, 4}, 4)] = 1;  // now ac|bd = 0 is the unique minimum
  CHECK(check_three_term(Q, 0, 1, 2, 3, 4).kind == ThreeTerm::NotTropical);
  CHECK_FALSE(is_tropical_plucker(Q).ok);
  CHECK(pairings_string(kAcBd | kAdBc) == "ac|bd,ad|bc");
}

TEST_CASE("relation tuples enumerate every (S, a<b<c<d)") {
  for (auto [k, n] : {std::pair{2, 4}, {2, 6}, {3, 6}, {3, 7}, {4, 8}}) {
    auto ts = relation_tuples(k, n);
    CHECK(ts.size() == binom(n, k - 2) * binom(n - k + 2, 4));
    for (const auto& t : ts) {
      CHECK(popcount(t.S) == k - 2);
      CHECK((t.a < t.b && t.b < t.c && t.c < t.d));
      CHECK_FALSE((t.S & (bit(t.a) | bit(t.b) | bit(t.c) | bit(t.d))));
    }
  }
}

TEST_CASE("tropical minors of a matrix lie in the Dressian") {
  RationalSampler rng(3);
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}, {3, 7}}) {
    for (int t = 0; t < 20; ++t) {
      std::vector<Vec> A(k, Vec(n));
      for (auto& row : A)
        for (auto& x : row) x = t % 2 ? rng() : Rational(rng.uniform_int(0, 2));
      CHECK(is_tropical_plucker(tropical_minors(A, n)).ok);
    }
  }
}

TEST_CASE("circular split metrics: laminar interval families are positive, crossing ones are not tropical") {
  RationalSampler rng(9);
  const int n = 7;
  for (int t = 0; t < 50; ++t) {
    // Laminar family of intervals inside [1, n-1].
    std::vector<std::pair<int, int>> iv;
    std::vector<Rational> w;
    std::function<void(int, int)> grow = [&](int a, int b) {
      if (a > b) return;
      iv.push_back({a, b});
      w.push_back(rng.positive());
      if (a == b) return;
      int m = rng.uniform_int(a, b - 1);
      if (rng.uniform_int(0, 1)) grow(a, m);
      if (rng.uniform_int(0, 1)) grow(m + 1, b);
    };
    grow(1, n - 1);
    PluckerVector P = split_heights(n, iv, w);
    CHECK(is_positive_tropical_plucker(P).ok);
    CHECK(is_tropical_plucker(P).ok);
  }
  PluckerVector X = split_heights(4, {{1, 2}, {2, 3}}, {1, 1});
  CHECK_FALSE(is_tropical_plucker(X).ok);
}

TEST_CASE("positivity depends on the cyclic order") {
  // A positive (2,5) vector relabelled by a transposition fails positivity
  // but stays tropical.
  PluckerVector P = split_heights(5, {{1, 2}, {3, 4}}, {1, 1});
  CHECK(is_positive_tropical_plucker(P).ok);
  PluckerVector Q(2, 5);
  std::vector<int> sigma{1, 3, 2, 4, 5};
  for (Mask s : enumerate_ksubsets(2, 5)) {
    Mask img = 0;
    for (int x : elements(s)) img |= bit(sigma[x - 1]);
    Q[s] = P[img];
  }
  CHECK(is_tropical_plucker(Q).ok);
  CHECK_FALSE(is_positive_tropical_plucker(Q).ok);
}

TEST_CASE("normalize shifts by the base coordinate") {
  RationalSampler rng(1);
  PluckerVector P = rng.heights(3, 6);
  PluckerVector N = normalize(P, S({1, 2, 3}, 6));
  CHECK(N[S({1, 2, 3}, 6)] == 0);
  for (size_t i = 0; i < P.size(); ++i) CHECK(N.values[i] - P.values[i] == N.values[0] - P.values[0]);
  CHECK(is_tropical_plucker(N).ok == is_tropical_plucker(P).ok);
  CHECK_THROWS_AS(normalize(P, S({1, 2}, 6)), std::invalid_argument);
}
