#pragma once

#include <map>
#include <optional>
#include <vector>

#include "trop/linalg.hpp"
#include "trop/matroid.hpp"
#include "trop/plucker.hpp"

namespace trop {

// A subdivision of the hypersimplex; each cell is the sorted list of k-subsets
// that are its vertices.
struct Subdivision {
  int k = 0;
  int n = 0;
  std::vector<std::vector<Mask>> cells;
  bool operator==(const Subdivision&) const = default;
};

// The 0/1 indicator vectors of all k-subsets, lexicographic.
Mat hypersimplex_points(int k, int n);

Subdivision regular_subdivision(const PluckerVector& P);

// First cell whose vertex set fails the exchange axiom, if any.
std::optional<std::size_t> first_nonmatroidal_cell(const Subdivision& D);
bool is_matroidal(const Subdivision& D);
bool is_positroidal(const Subdivision& D);

// Throws std::invalid_argument unless P is positive.
bool is_finest_positroidal(const PluckerVector& P);

std::map<int, long> interior_face_counts(const Subdivision& D);

// (n-c-1)! / ((k-c)! (n-k-c)! (c-1)!); throws for c outside [1, min(k, n-k)].
long fvector_bound(int k, int n, int c);

std::vector<Matroid> cell_matroids(const Subdivision& D);

// Regularity of a subdivision of an arbitrary point configuration whose cells
// are full dimensional.
struct RegularityWitness {
  struct Term {
    int cell;
    int point;
    Rational weight;
  };
  // Positive combination of the strict inequalities "h_u >= lambda_cell(u) + 1"
  // whose left-hand side lies in the span of the equalities "h affine on each cell".
  std::vector<Term> terms;
};

struct RegularityCertificate {
  bool regular = false;
  Vec heights;  // one per point when regular
  std::optional<RegularityWitness> witness;
};

RegularityCertificate is_regular_subdivision(const Mat& points, const std::vector<std::vector<int>>& cells);
RegularityCertificate is_regular_subdivision(const Subdivision& D);

// Checks a witness from scratch: rebuilds the constraint forms and tests that
// the weighted sum is in the row space of the equalities.
bool verify_regularity_witness(const Mat& points, const std::vector<std::vector<int>>& cells, const RegularityWitness& w);

}  // namespace trop
