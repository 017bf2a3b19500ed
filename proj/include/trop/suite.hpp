#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "trop/json_io.hpp"

namespace trop {

using KN = std::pair<int, int>;

struct CheckResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  json detail;
};

// Finest positive vectors trop_phi(X) for random X, in draw order.
std::vector<PluckerVector> finest_positive_sample(int k, int n, int count, std::uint64_t seed);
// Positive vectors trop_phi(X) with X drawn from {0, 1}, so that sums tie.
std::vector<PluckerVector> tied_positive_sample(int k, int n, int count, std::uint64_t seed);

// True when `face` is the set of points of `cell` on some supporting hyperplane.
bool is_face_of(const std::vector<Mask>& face, const std::vector<Mask>& cell, int n);

CheckResult check_roundtrip(const std::vector<KN>& kns, int samples, std::uint64_t seed, double budget_seconds = 60);
CheckResult check_positroid_roundtrip(const std::vector<KN>& kns);
CheckResult check_subdivision_equivalences(const std::vector<KN>& kns, int samples, std::uint64_t seed);
CheckResult check_fvector(const std::vector<KN>& kns, int samples, std::uint64_t seed);
CheckResult check_finest_equivalence(const std::vector<KN>& kns, int samples, int tied, std::uint64_t seed);
CheckResult check_positroid_recognition(const std::vector<KN>& kns);
CheckResult check_rank_vector_pipeline(const std::vector<KN>& kns);
CheckResult check_counterexample(double budget_seconds = 300);
CheckResult check_worked_values();

json to_json(const CheckResult& r);

}  // namespace trop
