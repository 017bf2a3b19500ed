#include "trop/dressian.hpp"

#include <stdexcept>

namespace trop {

PluckerVector::PluckerVector(int k_, int n_, std::vector<Rational> v) : k(k_), n(n_), values(std::move(v)) {
  if (values.size() != binom(n, k)) throw std::invalid_argument("PluckerVector: wrong number of entries");
}

ThreeTermVerdict check_three_term(const PluckerVector& P, Mask S, int a, int b, int c, int d) {
  const int n = P.n;
  if (!(1 <= a && a < b && b < c && c < d && d <= n)) throw std::invalid_argument("check_three_term: need 1 <= a < b < c < d <= n");
  if (popcount(S) != P.k - 2 || (S & (bit(a) | bit(b) | bit(c) | bit(d))) || (S & ~full_mask(n)))
    throw std::invalid_argument("check_three_term: malformed S");
  Rational s1 = P[S | bit(a) | bit(c)] + P[S | bit(b) | bit(d)];
  Rational s2 = P[S | bit(a) | bit(b)] + P[S | bit(c) | bit(d)];
  Rational s3 = P[S | bit(a) | bit(d)] + P[S | bit(b) | bit(c)];
  Rational m = s1;
  if (s2 < m) m = s2;
  if (s3 < m) m = s3;
  ThreeTermVerdict v;
  if (s1 == m) v.achieving |= kAcBd;
  if (s2 == m) v.achieving |= kAbCd;
  if (s3 == m) v.achieving |= kAdBc;
  int ties = std::popcount(v.achieving);
  if (ties == 1) v.kind = ThreeTerm::NotTropical;
  else if (v.achieving & kAcBd) v.kind = ThreeTerm::Positive;
  else v.kind = ThreeTerm::TropicalThirdOnly;
  return v;
}

std::vector<RelationTuple> relation_tuples(int k, int n) {
  std::vector<RelationTuple> out;
  if (k < 2 || n - k < 2) return out;
  for (Mask S : enumerate_ksubsets(k - 2, n)) {
    std::vector<int> rest;
    for (int i = 1; i <= n; ++i)
      if (!contains(S, i)) rest.push_back(i);
    const int r = static_cast<int>(rest.size());
    for (int ia = 0; ia < r; ++ia)
      for (int ib = ia + 1; ib < r; ++ib)
        for (int ic = ib + 1; ic < r; ++ic)
          for (int id = ic + 1; id < r; ++id) out.push_back({S, rest[ia], rest[ib], rest[ic], rest[id]});
  }
  return out;
}

static MembershipResult scan(const PluckerVector& P, bool positive) {
  MembershipResult res;
  for (const auto& t : relation_tuples(P.k, P.n)) {
    auto v = check_three_term(P, t.S, t.a, t.b, t.c, t.d);
    bool bad = positive ? v.kind != ThreeTerm::Positive : v.kind == ThreeTerm::NotTropical;
    if (bad) {
      res.ok = false;
      res.witness = t;
      return res;
    }
  }
  return res;
}

MembershipResult is_tropical_plucker(const PluckerVector& P) { return scan(P, false); }
MembershipResult is_positive_tropical_plucker(const PluckerVector& P) { return scan(P, true); }

PluckerVector normalize(const PluckerVector& P, Mask base) {
  if (popcount(base) != P.k || (base & ~full_mask(P.n))) throw std::invalid_argument("normalize: base is not a k-subset");
  PluckerVector out = P;
  Rational shift = P[base];
  for (auto& v : out.values) v -= shift;
  return out;
}

std::string to_string(ThreeTerm t) {
  switch (t) {
    case ThreeTerm::NotTropical: return "NotTropical";
    case ThreeTerm::TropicalThirdOnly: return "TropicalThirdOnly";
    case ThreeTerm::Positive: return "Positive";
  }
  return "?";
}

std::string pairings_string(unsigned achieving) {
  std::string out;
  auto add = [&](const char* s) {
    if (!out.empty()) out += ",";
    out += s;
  };
  if (achieving & kAcBd) add("ac|bd");
  if (achieving & kAbCd) add("ab|cd");
  if (achieving & kAdBc) add("ad|bc");
  return out;
}

}  // namespace trop
