#pragma once

#include <vector>

#include "trop/linalg.hpp"

namespace trop {

// Coordinates of the points in a basis of their affine hull, obtained by
// keeping the pivot coordinates of the difference vectors. Throws if all
// points coincide.
Mat affine_coordinates(const Mat& points);

// Faces of the lifted configuration {(p_i, h_i)} seen from `direction` along
// the height axis: -1 gives the lower faces, +1 the upper ones. Each facet is
// the sorted list of every point lying on it; facets are sorted
// lexicographically.
std::vector<std::vector<int>> lower_hull(const Mat& points, const Vec& heights, int direction = -1);

}  // namespace trop
