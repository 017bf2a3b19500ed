#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>

#include "trop/matroid.hpp"
#include "trop/plabic.hpp"

using namespace trop;

namespace {

Mask S(std::initializer_list<int> xs, int n) { return from_elements(xs, n); }

// Spanning trees of K4 by union-find over 3-edge subsets.
std::vector<Mask> k4_spanning_trees() {
  const int edges[6][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
  std::vector<Mask> out;
  for (Mask s : enumerate_ksubsets(3, 6)) {
    int parent[5] = {0, 1, 2, 3, 4};
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    bool ok = true;
    for (int e : elements(s)) {
      int a = find(edges[e - 1][0]), b = find(edges[e - 1][1]);
      if (a == b) ok = false;
      parent[a] = b;
    }
    if (ok) out.push_back(s);
  }
  return out;
}

long decorated_permutations(int k, int n) {
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  long count = 0;
  do {
    int below = 0, fixed = 0;
    for (int i = 0; i < n; ++i) {
      if (pi[i] < i + 1) ++below;
      if (pi[i] == i + 1) ++fixed;
    }
    // choose which fixed points are white
    for (int w = 0; w <= fixed; ++w)
      if (below + w == k) count += static_cast<long>(binom(fixed, w));
  } while (std::next_permutation(pi.begin(), pi.end()));
  return count;
}

}  // namespace

TEST_CASE("basis exchange validation") {
  CHECK(is_matroid(4, 2, enumerate_ksubsets(2, 4)));
  CHECK_FALSE(is_matroid(4, 2, {S({1, 2}, 4), S({3, 4}, 4)}));
  CHECK_THROWS_AS(is_matroid(4, 2, {}), std::invalid_argument);
  CHECK_THROWS_AS(is_matroid(4, 2, {S({1}, 4)}), std::invalid_argument);
  CHECK_THROWS_AS(Matroid(4, 2, {S({1, 2}, 4), S({3, 4}, 4)}), std::invalid_argument);
}

TEST_CASE("rank axioms on every small matroid") {
  for (auto [k, n] : {std::pair{1, 3}, {2, 4}, {2, 5}, {3, 5}}) {
    for (const auto& M : enumerate_matroids(k, n)) {
      auto all = submasks(full_mask(n));
      for (Mask A : all) {
        int r = rank(M, A);
        CHECK(r <= popcount(A));
        for (int x = 1; x <= n; ++x) {
          int r2 = rank(M, A | bit(x));
          CHECK((r2 == r || r2 == r + 1));
        }
      }
      for (Mask A : all)
        for (Mask B : all) CHECK(rank(M, A | B) + rank(M, A & B) <= rank(M, A) + rank(M, B));
    }
  }
}

TEST_CASE("enumeration counts") {
  CHECK(enumerate_matroids(1, 2).size() == 3);
  CHECK(enumerate_matroids(2, 4).size() == 36);
  CHECK_THROWS_AS(enumerate_matroids(3, 7), std::invalid_argument);
}

TEST_CASE("graphic K4") {
  Matroid K = graphic_k4();
  CHECK(K.bases() == Matroid(6, 3, k4_spanning_trees()).bases());
  CHECK(K.bases().size() == 16);
  CHECK(connected_components(K).size() == 1);
  CHECK(polytope_dimension(K) == 5);
  CHECK_FALSE(is_positroid(K));
}

TEST_CASE("connectivity and minors") {
  Matroid U = Matroid::uniform(2, 4);
  CHECK(connected_components(U) == std::vector<Mask>{full_mask(4)});
  Matroid D(4, 2, {S({1, 3}, 4), S({1, 4}, 4), S({2, 3}, 4), S({2, 4}, 4)});  // U12 + U12
  CHECK(connected_components(D) == std::vector<Mask>{S({1, 2}, 4), S({3, 4}, 4)});
  CHECK(polytope_dimension(D) == 2);
  Minor m = minor(U, S({4}, 4), S({1}, 4));
  CHECK(m.labels == std::vector<int>{2, 3});
  CHECK(m.matroid.k() == 1);
  CHECK(m.matroid.bases().size() == 2);
  CHECK_THROWS_AS(minor(U, S({1}, 4), S({1}, 4)), std::invalid_argument);
}

TEST_CASE("positroid recognition") {
  CHECK(is_positroid(Matroid::uniform(2, 4)));
  Matroid oct(4, 2, {S({1, 2}, 4), S({3, 4}, 4), S({1, 3}, 4), S({2, 4}, 4), S({1, 4}, 4)});
  CHECK(is_positroid(oct));
  Matroid bad(4, 2, {S({1, 2}, 4), S({3, 4}, 4), S({2, 3}, 4), S({2, 4}, 4), S({1, 4}, 4)});
  CHECK_FALSE(is_positroid(bad));
  CHECK(grassmann_necklace(Matroid::uniform(2, 4)) ==
        std::vector<Mask>{S({1, 2}, 4), S({2, 3}, 4), S({3, 4}, 4), S({1, 4}, 4)});
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 5}, {3, 6}}) {
    long accepted = 0;
    for (const auto& M : enumerate_matroids(k, n)) accepted += is_positroid(M);
    CHECK(accepted == decorated_permutations(k, n));
  }
}

TEST_CASE("four-element rank test is stronger than positroidness") {
  // Loop at 1 and 2 parallel to 4: realized by columns 0, e1, e2, -e1.
  Matroid M(4, 2, {S({2, 3}, 4), S({3, 4}, 4)});
  CHECK(is_positroid(M));
  CHECK_FALSE(rank_relations_hold(M));
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}})
    for (const auto& N : enumerate_matroids(k, n))
      if (rank_relations_hold(N)) CHECK(is_positroid(N));
}

TEST_CASE("octahedral faces and series-parallel positroids") {
  CHECK(octahedral_faces(Matroid::uniform(3, 6)).size() == 30);
  CHECK(octahedral_faces(Matroid::uniform(2, 4)).size() == 1);
  CHECK(octahedral_faces(Matroid::uniform(1, 2)).empty());
  CHECK(is_series_parallel_positroid(Matroid::uniform(1, 2)));
  CHECK_FALSE(is_series_parallel_positroid(Matroid::uniform(2, 4)));
  Matroid oct(4, 2, {S({1, 2}, 4), S({3, 4}, 4), S({1, 3}, 4), S({2, 4}, 4), S({1, 4}, 4)});
  CHECK(octahedral_faces(oct).empty());
  CHECK(is_series_parallel_positroid(oct));
  CHECK_THROWS_AS(is_series_parallel_positroid(graphic_k4()), std::invalid_argument);
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {3, 6}})
    for (const auto& M : enumerate_matroids(k, n))
      if (connected_components(M).size() == 1 && is_positroid(M))
        CHECK(is_series_parallel_positroid(M) == octahedral_faces(M).empty());
}

TEST_CASE("neg rank vector") {
  Matroid M(4, 2, {S({2, 3}, 4), S({3, 4}, 4)});
  PluckerVector P = neg_rank_vector(M);
  CHECK(P[S({2, 3}, 4)] == -2);
  CHECK(P[S({2, 4}, 4)] == -1);
  CHECK(P[S({1, 3}, 4)] == -1);
}
