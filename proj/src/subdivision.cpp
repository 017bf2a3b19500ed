#include "trop/subdivision.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "trop/dressian.hpp"
#include "trop/hull.hpp"
#include "trop/lp.hpp"

namespace trop {

Mat hypersimplex_points(int k, int n) {
  Mat pts;
  for (Mask s : enumerate_ksubsets(k, n)) {
    Vec v(n, 0);
    for (int i : elements(s)) v[i - 1] = 1;
    pts.push_back(std::move(v));
  }
  return pts;
}

Subdivision regular_subdivision(const PluckerVector& P) {
  Subdivision D{P.k, P.n, {}};
  auto subsets = enumerate_ksubsets(P.k, P.n);
  if (subsets.size() == 1) {
    D.cells.push_back(subsets);
    return D;
  }
  for (const auto& facet : lower_hull(hypersimplex_points(P.k, P.n), P.values)) {
    std::vector<Mask> cell;
    for (int i : facet) cell.push_back(subsets[i]);
    D.cells.push_back(std::move(cell));
  }
  return D;
}

std::optional<std::size_t> first_nonmatroidal_cell(const Subdivision& D) {
  for (std::size_t i = 0; i < D.cells.size(); ++i)
    if (!is_matroid(D.n, D.k, D.cells[i])) return i;
  return std::nullopt;
}

bool is_matroidal(const Subdivision& D) { return !first_nonmatroidal_cell(D).has_value(); }

std::vector<Matroid> cell_matroids(const Subdivision& D) {
  std::vector<Matroid> out;
  for (const auto& c : D.cells) out.emplace_back(D.n, D.k, c);
  return out;
}

bool is_positroidal(const Subdivision& D) {
  if (!is_matroidal(D)) return false;
  for (const auto& M : cell_matroids(D))
    if (!is_positroid(M)) return false;
  return true;
}

bool is_finest_positroidal(const PluckerVector& P) {
  if (!is_positive_tropical_plucker(P)) throw std::invalid_argument("is_finest_positroidal: P is not a positive tropical Plucker vector");
  for (const auto& t : relation_tuples(P.k, P.n)) {
    Mask S = t.S;
    Rational ab = P[S | bit(t.a) | bit(t.b)] + P[S | bit(t.c) | bit(t.d)];
    Rational ad = P[S | bit(t.a) | bit(t.d)] + P[S | bit(t.b) | bit(t.c)];
    if (ab == ad) return false;
  }
  return true;
}

std::map<int, long> interior_face_counts(const Subdivision& D) {
  std::set<std::vector<Mask>> faces;
  for (auto c : D.cells) {
    std::sort(c.begin(), c.end());
    faces.insert(c);
  }
  std::vector<std::vector<Mask>> frontier(faces.begin(), faces.end());
  const std::vector<std::vector<Mask>> maximal = frontier;
  while (!frontier.empty()) {
    std::vector<std::vector<Mask>> next;
    for (const auto& f : frontier)
      for (const auto& c : maximal) {
        std::vector<Mask> meet;
        std::set_intersection(f.begin(), f.end(), c.begin(), c.end(), std::back_inserter(meet));
        if (meet.empty()) continue;
        if (faces.insert(meet).second) next.push_back(std::move(meet));
      }
    frontier = std::move(next);
  }
  std::map<int, long> counts;
  for (const auto& f : faces) {
    bool interior = true;
    for (int i = 1; i <= D.n && interior; ++i) {
      std::size_t in = 0;
      for (Mask s : f) in += contains(s, i);
      interior = in > 0 && in < f.size();
    }
    if (!interior) continue;
    Mat pts;
    for (Mask s : f) {
      Vec v(D.n, 0);
      for (int i : elements(s)) v[i - 1] = 1;
      pts.push_back(std::move(v));
    }
    ++counts[affine_rank(pts) - 1];
  }
  return counts;
}

long fvector_bound(int k, int n, int c) {
  if (c < 1 || c > std::min(k, n - k)) throw std::invalid_argument("fvector_bound: need 1 <= c <= min(k, n-k)");
  auto fact = [](int m) {
    long r = 1;
    for (int i = 2; i <= m; ++i) r *= i;
    return r;
  };
  return fact(n - c - 1) / (fact(k - c) * fact(n - k - c) * fact(c - 1));
}

namespace {

// Rows over the point heights h: `eq` says h is affine on each cell, `ineq`
// (with its source cell and point) says h_u >= lambda_cell(u) + 1 off the cell.
struct RegularitySystem {
  Mat eq;
  Mat ineq;
  std::vector<std::pair<int, int>> src;
};

Mat inverse(Mat a) {
  const size_t m = a.size();
  for (size_t i = 0; i < m; ++i) {
    a[i].resize(2 * m, 0);
    a[i][m + i] = 1;
  }
  auto piv = rref(a);
  if (piv.size() != m || piv.back() != static_cast<int>(m) - 1) throw std::logic_error("inverse: singular matrix");
  Mat inv(m);
  for (size_t i = 0; i < m; ++i) inv[i].assign(a[i].begin() + m, a[i].end());
  return inv;
}

RegularitySystem build_system(const Mat& points, const std::vector<std::vector<int>>& cells) {
  const int N = static_cast<int>(points.size());
  Mat coords = affine_coordinates(points);
  const int d = static_cast<int>(coords[0].size());
  RegularitySystem sys;
  for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci) {
    const auto& cell = cells[ci];
    std::vector<bool> in(N, false);
    for (int u : cell) {
      if (u < 0 || u >= N) throw std::invalid_argument("is_regular_subdivision: point index out of range");
      in[u] = true;
    }
    std::vector<int> basis;
    Mat acc;
    for (int u : cell) {
      if (static_cast<int>(basis.size()) == d + 1) break;
      if (basis.empty()) {
        basis.push_back(u);
        continue;
      }
      Vec diff(d);
      for (int j = 0; j < d; ++j) diff[j] = coords[u][j] - coords[basis[0]][j];
      Mat trial = acc;
      trial.push_back(diff);
      if (matrix_rank(trial) > static_cast<int>(acc.size())) {
        acc.push_back(std::move(diff));
        basis.push_back(u);
      }
    }
    if (static_cast<int>(basis.size()) != d + 1) throw std::invalid_argument("is_regular_subdivision: cell is not full dimensional");
    // Column b of m is (coords(basis[b]), 1); alpha(u) = m^{-1} (coords(u), 1).
    Mat m(d + 1, Vec(d + 1));
    for (int b = 0; b <= d; ++b) {
      for (int j = 0; j < d; ++j) m[j][b] = coords[basis[b]][j];
      m[d][b] = 1;
    }
    Mat minv = inverse(m);
    std::vector<bool> is_basis(N, false);
    for (int b : basis) is_basis[b] = true;
    for (int u = 0; u < N; ++u) {
      if (is_basis[u]) continue;
      Vec cu(coords[u]);
      cu.push_back(1);
      Vec row(N, 0);
      row[u] = 1;
      for (int b = 0; b <= d; ++b) row[basis[b]] -= dot(minv[b], cu);
      if (in[u]) {
        sys.eq.push_back(std::move(row));
      } else {
        sys.ineq.push_back(std::move(row));
        sys.src.emplace_back(ci, u);
      }
    }
  }
  return sys;
}

}  // namespace

RegularityCertificate is_regular_subdivision(const Mat& points, const std::vector<std::vector<int>>& cells) {
  if (cells.empty()) throw std::invalid_argument("is_regular_subdivision: no cells");
  const int N = static_cast<int>(points.size());
  RegularitySystem sys = build_system(points, cells);

  Mat Z = nullspace(sys.eq, N);  // columns of the parametrisation h = sum_q t_q Z[q]
  const int f = static_cast<int>(Z.size());

  // Reduced inequality rows G t >= 1, deduplicated.
  std::map<Vec, int> seen;
  Mat G;
  std::vector<int> origin;
  for (size_t r = 0; r < sys.ineq.size(); ++r) {
    Vec g(f);
    for (int q = 0; q < f; ++q) g[q] = dot(sys.ineq[r], Z[q]);
    if (seen.emplace(g, static_cast<int>(G.size())).second) {
      G.push_back(std::move(g));
      origin.push_back(static_cast<int>(r));
    }
  }

  RegularityCertificate cert;
  if (G.empty()) {
    cert.regular = true;
    cert.heights.assign(N, 0);
    return cert;
  }

  // Alternative system: w >= 0, w^T G = 0, sum w = 1.
  LPProblem lp;
  lp.num_vars = static_cast<int>(G.size());
  for (int q = 0; q < f; ++q) {
    Vec row(G.size());
    for (size_t r = 0; r < G.size(); ++r) row[r] = G[r][q];
    lp.add(std::move(row), Sense::Equal, 0);
  }
  lp.add(Vec(G.size(), 1), Sense::Equal, 1);
  LPCertificate res = lp_solve(lp);

  if (res.status == LPStatus::Optimal) {
    RegularityWitness w;
    for (size_t r = 0; r < G.size(); ++r)
      if (res.x[r] != 0) w.terms.push_back({sys.src[origin[r]].first, sys.src[origin[r]].second, res.x[r]});
    cert.regular = false;
    cert.witness = std::move(w);
    return cert;
  }
  if (res.status != LPStatus::Infeasible) throw std::logic_error("is_regular_subdivision: unexpected LP status");
  Rational scale = -res.farkas[f];
  Vec h(N, 0);
  for (int q = 0; q < f; ++q) {
    Rational tq = res.farkas[q] / scale;
    if (tq == 0) continue;
    for (int u = 0; u < N; ++u)
      if (Z[q][u] != 0) h[u] += tq * Z[q][u];
  }
  cert.regular = true;
  cert.heights = std::move(h);
  return cert;
}

RegularityCertificate is_regular_subdivision(const Subdivision& D) {
  auto subsets = enumerate_ksubsets(D.k, D.n);
  std::vector<std::vector<int>> cells;
  for (const auto& c : D.cells) {
    std::vector<int> idx;
    for (Mask s : c) {
      if (popcount(s) != D.k || (s & ~full_mask(D.n))) throw std::invalid_argument("is_regular_subdivision: malformed cell");
      idx.push_back(static_cast<int>(lex_rank(s, D.n)));
    }
    std::sort(idx.begin(), idx.end());
    cells.push_back(std::move(idx));
  }
  if (subsets.size() == 1) {
    RegularityCertificate cert;
    cert.regular = true;
    cert.heights.assign(1, 0);
    return cert;
  }
  return is_regular_subdivision(hypersimplex_points(D.k, D.n), cells);
}

bool verify_regularity_witness(const Mat& points, const std::vector<std::vector<int>>& cells, const RegularityWitness& w) {
  if (w.terms.empty()) return false;
  const int N = static_cast<int>(points.size());
  RegularitySystem sys = build_system(points, cells);
  std::map<std::pair<int, int>, size_t> where;
  for (size_t r = 0; r < sys.src.size(); ++r) where[sys.src[r]] = r;
  Vec combo(N, 0);
  for (const auto& t : w.terms) {
    if (t.weight <= 0) return false;
    auto it = where.find({t.cell, t.point});
    if (it == where.end()) return false;
    const Vec& row = sys.ineq[it->second];
    for (int u = 0; u < N; ++u)
      if (row[u] != 0) combo[u] += t.weight * row[u];
  }
  // The sum is >= (sum of weights) > 0 for any admissible h, yet it vanishes
  // whenever h is affine on every cell.
  int r0 = matrix_rank(sys.eq);
  Mat ext = sys.eq;
  ext.push_back(combo);
  return matrix_rank(std::move(ext)) == r0;
}

}  // namespace trop
