#include "trop/linalg.hpp"

#include <stdexcept>

namespace trop {

std::vector<int> rref(Mat& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  const int rows = static_cast<int>(a.size());
  const int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (int j = c; j < cols; ++j) a[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (int j = c; j < cols; ++j)
        if (a[r][j] != 0) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int matrix_rank(Mat a) { return static_cast<int>(rref(a).size()); }

Mat nullspace(Mat a, int cols) {
  for (auto& row : a)
    if (static_cast<int>(row.size()) != cols) throw std::invalid_argument("nullspace: ragged matrix");
  auto piv = rref(a);
  std::vector<int> pivot_row(cols, -1);
  for (size_t r = 0; r < piv.size(); ++r) pivot_row[piv[r]] = static_cast<int>(r);
  Mat basis;
  for (int f = 0; f < cols; ++f) {
    if (pivot_row[f] >= 0) continue;
    Vec v(cols, 0);
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

int affine_rank(const Mat& points) {
  if (points.empty()) return 0;
  Mat diff;
  for (size_t i = 1; i < points.size(); ++i) {
    Vec d(points[i].size());
    for (size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
    diff.push_back(std::move(d));
  }
  return matrix_rank(std::move(diff)) + 1;
}

Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

}  // namespace trop
