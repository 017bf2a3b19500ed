#pragma once

#include <vector>

#include "trop/rational.hpp"

namespace trop {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

// Reduced row echelon form in place; returns the pivot column of each nonzero row.
std::vector<int> rref(Mat& a);

int matrix_rank(Mat a);

// Basis of {x : a x = 0}, one vector per free column.
Mat nullspace(Mat a, int cols);

// Affine rank of a point set (dimension of its affine hull + 1); 0 for no points.
int affine_rank(const Mat& points);

Rational dot(const Vec& a, const Vec& b);

}  // namespace trop
