#pragma once

#include <string>
#include <vector>

#include "trop/linalg.hpp"

namespace trop {

enum class Sense { LessEq, GreaterEq, Equal };

struct LPConstraint {
  Vec coeffs;
  Sense sense = Sense::LessEq;
  Rational rhs = 0;
};

struct LPProblem {
  int num_vars = 0;
  std::vector<bool> free_var;  // empty means every variable is >= 0
  std::vector<LPConstraint> constraints;
  Vec objective;  // empty means pure feasibility
  bool maximize = false;

  bool is_free(int j) const { return !free_var.empty() && free_var[j]; }
  void add(Vec coeffs, Sense s, Rational rhs) { constraints.push_back({std::move(coeffs), s, std::move(rhs)}); }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPCertificate {
  LPStatus status = LPStatus::Infeasible;
  Vec x;           // Optimal: a feasible optimal point
  Rational value;  // Optimal: objective value
  Vec duals;       // Optimal: one multiplier per constraint (sign conventions as for farkas)
  Vec farkas;      // Infeasible: one multiplier per constraint
  Vec ray;         // Unbounded: a feasible improving direction
};

// Dense tableau two-phase simplex with Bland's rule; exact and deterministic.
LPCertificate lp_solve(const LPProblem& p);

// Independent checks that do not touch the solver state.
bool satisfies(const LPProblem& p, const Vec& x);

// y must be >= 0 on <= rows, <= 0 on >= rows, free on = rows; y^T A must be
// >= 0 on nonnegative variables and 0 on free ones; y^T b < 0.
bool is_infeasibility_witness(const LPProblem& p, const Vec& y);

std::string to_string(LPStatus s);

}  // namespace trop
