#pragma once

#include <cstdint>
#include <random>

#include "trop/plabic.hpp"
#include "trop/rational.hpp"

namespace trop {

// Deterministic rationals p/q with |p| <= max_num and 1 <= q <= max_den.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, long max_num = 20, long max_den = 6)
      : gen_(seed), num_(-max_num, max_num), den_(1, max_den) {}

  Rational operator()() { return make_rational(num_(gen_), den_(gen_)); }
  Rational positive() {
    long p = num_(gen_);
    return make_rational(p < 0 ? -p + 1 : p + 1, den_(gen_));
  }
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  std::mt19937_64& engine() { return gen_; }

  WebParameters web(int k, int n) {
    WebParameters X(k, n);
    for (auto& v : X.x) v = (*this)();
    return X;
  }
  WebParameters positive_web(int k, int n) {
    WebParameters X(k, n);
    for (auto& v : X.x) v = positive();
    return X;
  }
  PluckerVector heights(int k, int n) {
    PluckerVector P(k, n);
    for (auto& v : P.values) v = (*this)();
    return P;
  }

 private:
  std::mt19937_64 gen_;
  std::uniform_int_distribution<long> num_, den_;
};

}  // namespace trop
