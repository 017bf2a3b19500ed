#include <doctest.h>

#include <algorithm>
#include <functional>

#include "trop/json_io.hpp"
#include "trop/random.hpp"
#include "trop/suite.hpp"
#include "trop/transversal.hpp"

using namespace trop;

namespace {

// Every spanning tree of the complete bipartite graph between I and its
// complement, as edge lists (i in I first).
std::vector<BipartiteCell> spanning_trees(int n, Mask I) {
  std::vector<std::pair<int, int>> all;
  for (int i : elements(I))
    for (int j = 1; j <= n; ++j)
      if (!contains(I, j)) all.push_back({i, j});
  std::vector<BipartiteCell> out;
  const int m = static_cast<int>(all.size());
  if (m > 30) return out;
  std::vector<int> pick(n - 1);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n - 1) {
      BipartiteCell c{n, I, {}};
      for (int t : pick) c.X.push_back(all[t]);
      if (is_tree_cell(c)) out.push_back(c);
      return;
    }
    for (int t = start; t < m; ++t) {
      pick[depth] = t;
      rec(t + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

// Bases from nonzero maximal minors of the k x n matrix with identity columns
// on I and distinct primes at the positions (row of i, column j) for (i,j) in X.
std::vector<Mask> minor_bases(const BipartiteCell& c, const std::vector<long>& primes) {
  auto rows = elements(c.I);
  const int k = static_cast<int>(rows.size());
  Mat A(k, Vec(c.n, 0));
  for (int r = 0; r < k; ++r) A[r][rows[r] - 1] = 1;
  size_t t = 0;
  for (auto [i, j] : c.X) {
    int r = static_cast<int>(std::find(rows.begin(), rows.end(), i) - rows.begin());
    A[r][j - 1] = primes[t++ % primes.size()];
  }
  std::vector<Mask> out;
  for (Mask B : enumerate_ksubsets(k, c.n)) {
    Mat sub(k);
    for (int r = 0; r < k; ++r)
      for (int col : elements(B)) sub[r].push_back(A[r][col - 1]);
    if (matrix_rank(sub) == k) out.push_back(B);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("cells are validated") {
  CHECK_THROWS_AS(validate(BipartiteCell{4, from_elements({1, 2}, 4), {{3, 1}}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(BipartiteCell{4, from_elements({1, 2}, 4), {{1, 3}, {1, 3}}}), std::invalid_argument);
  CHECK_THROWS_AS(is_noncrossing_tree(BipartiteCell{4, from_elements({1, 2}, 4), {{1, 3}}}), std::invalid_argument);
}

TEST_CASE("tree cells are exactly the affinely independent spanning edge sets") {
  for (int n = 3; n <= 6; ++n)
    for (int k = 1; k < n; ++k)
      for (Mask I : enumerate_ksubsets(k, n)) {
        std::vector<std::pair<int, int>> all;
        for (int i : elements(I))
          for (int j = 1; j <= n; ++j)
            if (!contains(I, j)) all.push_back({i, j});
        if (all.size() > 12) continue;
        Mat pts = pi_points(n, I);
        for (std::uint32_t pick = 0; pick < (1u << all.size()); ++pick) {
          if (std::popcount(pick) != n - 1) continue;
          BipartiteCell c{n, I, {}};
          Mat sub;
          for (size_t t = 0; t < all.size(); ++t)
            if ((pick >> t) & 1u) {
              c.X.push_back(all[t]);
              sub.push_back(pts[t]);
            }
          CHECK(is_tree_cell(c) == (affine_rank(sub) == n - 1));
        }
      }
}

TEST_CASE("noncrossing trees are exactly the positroid trees") {
  for (int n = 3; n <= 7; ++n)
    for (int k = 1; k < n; ++k)
      for (Mask I : enumerate_ksubsets(k, n))
        for (const auto& c : spanning_trees(n, I)) {
          Matroid M = transversal_matroid(c);
          CHECK(M.is_basis(I));
          CHECK(is_noncrossing_tree(c) == is_positroid(M));
        }
}

TEST_CASE("transversal matroids match minors of the prime-filled matrix") {
  RationalSampler rng(31);
  const std::vector<long> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  const std::vector<long> other{41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
  for (int n : {5, 6, 7}) {
    Mask I = from_elements({1, 3, n - 1}, n);
    auto trees = spanning_trees(n, I);
    for (int t = 0; t < 15; ++t) {
      const auto& c = trees[rng.uniform_int(0, static_cast<int>(trees.size()) - 1)];
      auto want = transversal_matroid(c).bases();
      auto got = minor_bases(c, primes);
      if (got != want) got = minor_bases(c, other);
      CHECK(got == want);
    }
  }
}

TEST_CASE("restricting a regular positroidal subdivision gives a regular complex with a regular lift") {
  auto sample = finest_positive_sample(3, 6, 3, 5);
  const Mask I = from_elements({2, 4, 6}, 6);
  for (const auto& P : sample) {
    CellComplexOnPi cx = restrict_to_pi(regular_subdivision(P), I);
    REQUIRE_FALSE(cx.cells.empty());
    CHECK(is_regular_complex(cx).regular);
    Subdivision lift = cayley_lift(cx);
    CHECK(is_matroidal(lift));
    CHECK(is_regular_subdivision(lift).regular);
    for (const auto& c : cx.cells) {
      CHECK(is_positroid(transversal_matroid(c)));
      if (is_tree_cell(c)) CHECK(is_noncrossing_tree(c));
    }
  }
}

TEST_CASE("embedded nonregular complex") {
  CellComplexOnPi cx = counterexample_data();
  CHECK(cx.n == 12);
  CHECK(cx.I == from_elements({4, 8, 12}, 12));
  CHECK(cx.cells.size() == 45);
  for (const auto& c : cx.cells) {
    CHECK(is_tree_cell(c));
    CHECK(is_noncrossing_tree(c));
  }
  TilingReport tr = check_tiling(cx);
  CHECK(tr.all_trees);
  CHECK(tr.volume == 45);
  CHECK(tr.proper_intersections);

  // Dropping a cell breaks the tiling volume.
  CellComplexOnPi broken = cx;
  broken.cells.pop_back();
  CHECK_FALSE(check_tiling(broken).ok());

  // The marked cell of the dual arrangement.
  BipartiteCell marked{12, cx.I, {}};
  for (int j : {1, 2, 3, 11}) marked.X.push_back({12, j});
  for (int j : {5, 6, 7, 9, 10}) marked.X.push_back({8, j});
  for (int j : {3, 5}) marked.X.push_back({4, j});
  std::sort(marked.X.begin(), marked.X.end());
  bool present = false;
  for (auto c : cx.cells) {
    std::sort(c.X.begin(), c.X.end());
    if (c.X == marked.X) present = true;
  }
  CHECK(present);
  CHECK(is_series_parallel_positroid(transversal_matroid(marked)));
}

TEST_CASE("counterexample report and drawing") {
  CounterexampleReport r = verify_counterexample();
  CHECK(r.passed());
  CHECK_FALSE(r.complex_regularity.regular);
  CHECK(r.complex_witness_verified);
  CHECK(r.lift_matroidal);
  CHECK_FALSE(r.lift_regularity.regular);
  std::string svg = counterexample_svg(counterexample_data());
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg == counterexample_svg(counterexample_data()));
}
