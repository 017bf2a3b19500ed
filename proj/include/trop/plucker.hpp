#pragma once

#include <vector>

#include "trop/rational.hpp"
#include "trop/subset.hpp"

namespace trop {

// One finite height per k-subset of [n], stored in lexicographic order.
struct PluckerVector {
  int k = 0;
  int n = 0;
  std::vector<Rational> values;

  PluckerVector() = default;
  PluckerVector(int k_, int n_) : k(k_), n(n_), values(binom(n_, k_), 0) {}
  PluckerVector(int k_, int n_, std::vector<Rational> v);

  Rational& operator[](Mask s) { return values[lex_rank(s, n)]; }
  const Rational& operator[](Mask s) const { return values[lex_rank(s, n)]; }
  std::size_t size() const { return values.size(); }

  bool operator==(const PluckerVector& o) const = default;
};

// Tropical heights and positive classical coordinates share the layout.
using TropicalPluckerVector = PluckerVector;

}  // namespace trop
