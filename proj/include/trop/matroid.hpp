#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trop/plucker.hpp"
#include "trop/subset.hpp"

namespace trop {

bool is_matroid(int n, int k, const std::vector<Mask>& candidate_bases);

class Matroid {
 public:
  Matroid() = default;
  // Validates the exchange axiom; throws std::invalid_argument otherwise.
  Matroid(int n, int k, std::vector<Mask> bases);

  int n() const { return n_; }
  int k() const { return k_; }
  const std::vector<Mask>& bases() const { return bases_; }
  bool is_basis(Mask s) const;

  bool operator==(const Matroid&) const = default;

  static Matroid uniform(int k, int n);

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<Mask> bases_;  // sorted
};

int rank(const Matroid& M, Mask A);

// Blocks sorted by smallest element.
std::vector<Mask> connected_components(const Matroid& M);
int polytope_dimension(const Matroid& M);

struct Minor {
  Matroid matroid;
  std::vector<int> labels;  // labels[t] is the original element behind element t+1
};

// Throws when deletions and contractions overlap or the slice is empty.
Minor minor(const Matroid& M, Mask deletions, Mask contractions);

// P_I = -rank(I) on every k-subset.
PluckerVector neg_rank_vector(const Matroid& M);

// I_i = lexicographically least basis for the order i < i+1 < ... < i-1.
std::vector<Mask> grassmann_necklace(const Matroid& M);

// M equals the positroid envelope of its Grassmann necklace.
bool is_positroid(const Matroid& M);

// The four-element rank test: for |S| = k-2 and a<b<c<d outside S,
// r(Sac)+r(Sbd) = max(r(Sab)+r(Scd), r(Sad)+r(Sbc)). Equivalent to -rank being
// a positive tropical Plucker vector. Implies is_positroid but is strictly
// stronger once a rank-2 minor has a loop (bases {23,34} on [4]).
bool rank_relations_hold(const Matroid& M);

struct OctahedralFace {
  Mask contracted = 0;  // C with |C| = k-2
  Mask quad = 0;        // the four surviving elements; everything else is deleted
};

std::vector<OctahedralFace> octahedral_faces(const Matroid& M);

// Throws unless M is a connected positroid.
bool is_series_parallel_positroid(const Matroid& M);

// Graphic matroid of K4; edges 12,13,14,23,24,34 of the vertices 1..4 are
// elements 1..6, or `labels[e]` when a relabeling is given.
Matroid graphic_k4(const std::vector<int>& labels = {});

// All matroids of rank k on [n] (every exchange-closed basis family).
std::vector<Matroid> enumerate_matroids(int k, int n);

std::string describe(const Matroid& M);

}  // namespace trop
