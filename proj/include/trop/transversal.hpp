#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trop/matroid.hpp"
#include "trop/subdivision.hpp"

namespace trop {

// X is a set of pairs (i, j), i in I, j outside I; the graph G(X) on [n].
struct BipartiteCell {
  int n = 0;
  Mask I = 0;
  std::vector<std::pair<int, int>> X;
};

struct CellComplexOnPi {
  int n = 0;
  Mask I = 0;
  std::vector<BipartiteCell> cells;
};

void validate(const BipartiteCell& cell);

Matroid transversal_matroid(const BipartiteCell& cell);
bool is_tree_cell(const BipartiteCell& cell);
// Throws unless the cell is a tree.
bool is_noncrossing_tree(const BipartiteCell& cell);

// Vertices e_I - e_i + e_j of the slice, ordered by (i, j).
Mat pi_points(int n, Mask I);
std::vector<int> pi_indices(const BipartiteCell& cell);

// Every cell is a tree, the tree count is the normalized volume of the
// product of simplices, and any two cells meet in their common face.
struct TilingReport {
  bool all_trees = false;
  long volume = 0;
  long expected_volume = 0;
  bool proper_intersections = false;
  std::pair<int, int> bad_pair{-1, -1};
  bool ok() const { return all_trees && volume == expected_volume && proper_intersections; }
};
TilingReport check_tiling(const CellComplexOnPi& complex);

Subdivision cayley_lift(const CellComplexOnPi& complex);

RegularityCertificate is_regular_complex(const CellComplexOnPi& complex);

// Restriction of a regular matroid subdivision of the hypersimplex to the
// slice through e_I: the cells meeting it in a full-dimensional piece,
// each given by its vertices in the slice.
CellComplexOnPi restrict_to_pi(const Subdivision& D, Mask I);

CellComplexOnPi counterexample_data();

struct CounterexampleReport {
  int cells = 0;
  int noncrossing_trees = 0;
  int positroid_cells = 0;
  TilingReport tiling;
  RegularityCertificate complex_regularity;
  bool complex_witness_verified = false;
  int lift_facets = 0;
  bool lift_matroidal = false;
  int lift_positroidal_facets = 0;
  RegularityCertificate lift_regularity;
  bool lift_witness_verified = false;
  bool passed() const;
};

CounterexampleReport verify_counterexample();

// Drawing aids: the mixed subdivision of the dilated triangle and its dual
// tropical pseudoline arrangement for a complex with |I| = 3.
std::string counterexample_svg(const CellComplexOnPi& complex);

}  // namespace trop
