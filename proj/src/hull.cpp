#include "trop/hull.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace trop {

Mat affine_coordinates(const Mat& points) {
  if (points.empty()) throw std::invalid_argument("affine_coordinates: no points");
  const size_t dim = points[0].size();
  Mat diff;
  for (size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != dim) throw std::invalid_argument("affine_coordinates: ragged points");
    Vec d(dim);
    for (size_t j = 0; j < dim; ++j) d[j] = points[i][j] - points[0][j];
    diff.push_back(std::move(d));
  }
  auto piv = rref(diff);
  if (piv.empty()) throw std::invalid_argument("degenerate input: all points coincide");
  Mat out;
  out.reserve(points.size());
  for (const auto& p : points) {
    Vec c;
    c.reserve(piv.size());
    for (int j : piv) c.push_back(p[j]);
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

struct Facet {
  std::vector<int> verts;  // sorted
  Vec normal;
  Rational offset;
};

// a.x = b through the given points, oriented so that `inside` has a.x < b.
Facet make_facet(std::vector<int> verts, const Mat& pts, const Vec& inside) {
  const int D = static_cast<int>(inside.size());
  Mat sys;
  for (int v : verts) {
    Vec row(pts[v]);
    row.push_back(-1);
    sys.push_back(std::move(row));
  }
  Mat ns = nullspace(std::move(sys), D + 1);
  if (ns.size() != 1) throw std::logic_error("lower_hull: degenerate facet");
  Facet f;
  f.normal.assign(ns[0].begin(), ns[0].begin() + D);
  f.offset = ns[0][D];
  if (dot(f.normal, inside) > f.offset) {
    for (auto& a : f.normal) a = -a;
    f.offset = -f.offset;
  }
  std::sort(verts.begin(), verts.end());
  f.verts = std::move(verts);
  return f;
}

}  // namespace

std::vector<std::vector<int>> lower_hull(const Mat& points, const Vec& heights, int direction) {
  if (points.size() != heights.size()) throw std::invalid_argument("lower_hull: size mismatch");
  if (direction != -1 && direction != 1) throw std::invalid_argument("lower_hull: direction must be -1 or +1");
  const int N = static_cast<int>(points.size());
  Mat coords = affine_coordinates(points);
  const int d = static_cast<int>(coords[0].size());
  const int D = d + 1;

  Mat lifted(N + 1);
  Rational hmax = direction < 0 ? heights[0] : Rational(-heights[0]);
  Vec centroid(d, 0);
  for (int i = 0; i < N; ++i) {
    lifted[i] = coords[i];
    Rational h = direction < 0 ? heights[i] : Rational(-heights[i]);
    lifted[i].push_back(h);
    if (h > hmax) hmax = h;
    for (int j = 0; j < d; ++j) centroid[j] += coords[i][j];
  }
  for (auto& c : centroid) c /= N;
  lifted[N] = centroid;
  lifted[N].push_back(hmax + 1);
  const int top = N;

  // Initial simplex: top first, then points in order while they raise the rank.
  std::vector<int> simplex{top};
  {
    Mat acc;
    for (int i = 0; i < N && static_cast<int>(simplex.size()) < D + 1; ++i) {
      Vec diff(D);
      for (int j = 0; j < D; ++j) diff[j] = lifted[i][j] - lifted[top][j];
      Mat trial = acc;
      trial.push_back(diff);
      if (matrix_rank(trial) > static_cast<int>(acc.size())) {
        acc.push_back(std::move(diff));
        simplex.push_back(i);
      }
    }
  }
  if (static_cast<int>(simplex.size()) != D + 1) throw std::logic_error("lower_hull: lifted points not full dimensional");

  Vec inside(D, 0);
  for (int v : simplex)
    for (int j = 0; j < D; ++j) inside[j] += lifted[v][j];
  for (auto& c : inside) c /= D + 1;

  std::vector<Facet> facets;
  for (int drop = 0; drop <= D; ++drop) {
    std::vector<int> vs;
    for (int t = 0; t <= D; ++t)
      if (t != drop) vs.push_back(simplex[t]);
    facets.push_back(make_facet(vs, lifted, inside));
  }

  std::set<int> used(simplex.begin(), simplex.end());
  for (int p = 0; p < N; ++p) {
    if (used.count(p)) continue;
    std::vector<size_t> visible;
    for (size_t f = 0; f < facets.size(); ++f)
      if (dot(facets[f].normal, lifted[p]) > facets[f].offset) visible.push_back(f);
    if (visible.empty()) continue;
    std::map<std::vector<int>, int> ridges;
    for (size_t f : visible) {
      const auto& vs = facets[f].verts;
      for (size_t drop = 0; drop < vs.size(); ++drop) {
        std::vector<int> r;
        for (size_t t = 0; t < vs.size(); ++t)
          if (t != drop) r.push_back(vs[t]);
        ++ridges[r];
      }
    }
    std::vector<Facet> next;
    std::vector<bool> gone(facets.size(), false);
    for (size_t f : visible) gone[f] = true;
    for (size_t f = 0; f < facets.size(); ++f)
      if (!gone[f]) next.push_back(std::move(facets[f]));
    for (auto& [r, cnt] : ridges) {
      if (cnt != 1) continue;
      std::vector<int> vs = r;
      vs.push_back(p);
      next.push_back(make_facet(vs, lifted, inside));
    }
    facets = std::move(next);
  }

  std::set<std::vector<int>> cells;
  for (const auto& f : facets) {
    if (std::binary_search(f.verts.begin(), f.verts.end(), top)) continue;
    if (f.normal[D - 1] >= 0) continue;
    std::vector<int> on;
    for (int i = 0; i < N; ++i)
      if (dot(f.normal, lifted[i]) == f.offset) on.push_back(i);
    cells.insert(std::move(on));
  }
  return {cells.begin(), cells.end()};
}

}  // namespace trop
