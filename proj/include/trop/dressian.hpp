#pragma once

#include <optional>
#include <string>

#include "trop/plucker.hpp"

namespace trop {

enum class ThreeTerm { NotTropical, TropicalThirdOnly, Positive };

// Pairings of a<b<c<d: ac|bd, ab|cd, ad|bc.
enum Pairing : unsigned { kAcBd = 1, kAbCd = 2, kAdBc = 4 };

struct ThreeTermVerdict {
  ThreeTerm kind = ThreeTerm::NotTropical;
  unsigned achieving = 0;  // Pairing bits attaining the minimum
};

struct RelationTuple {
  Mask S = 0;
  int a = 0, b = 0, c = 0, d = 0;
  bool operator==(const RelationTuple&) const = default;
};

struct MembershipResult {
  bool ok = true;
  std::optional<RelationTuple> witness;
  explicit operator bool() const { return ok; }
};

ThreeTermVerdict check_three_term(const PluckerVector& P, Mask S, int a, int b, int c, int d);

// Every (S, a<b<c<d) with |S| = k-2 disjoint from {a,b,c,d}, S in lexicographic
// order first, then (a,b,c,d).
std::vector<RelationTuple> relation_tuples(int k, int n);

MembershipResult is_tropical_plucker(const PluckerVector& P);
MembershipResult is_positive_tropical_plucker(const PluckerVector& P);

// P_I - P_base.
PluckerVector normalize(const PluckerVector& P, Mask base);

std::string to_string(ThreeTerm t);
std::string pairings_string(unsigned achieving);

}  // namespace trop
