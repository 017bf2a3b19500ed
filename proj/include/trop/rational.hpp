#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace trop {

// Exact rationals. gmpxx keeps results of arithmetic canonical.
using Rational = mpq_class;

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

// Accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise or on q == 0.
Rational parse_rational(const std::string& s);

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const std::vector<Rational>& v);

}  // namespace trop
