#include "trop/lp.hpp"

#include <stdexcept>

namespace trop {

namespace {

struct Tableau {
  int m = 0;
  int ncols = 0;  // structural + slack columns, artificials follow
  Mat t;          // m rows, ncols + m + 1 entries; last is the rhs
  std::vector<int> basis;
  Vec d;          // reduced costs over ncols + m columns
  Rational obj;   // current objective value

  int rhs() const { return ncols + m; }
  bool is_art(int j) const { return j >= ncols; }

  void pivot(int r, int q) {
    Vec& pr = t[r];
    Rational inv = 1 / pr[q];
    std::vector<int> nz;
    for (int j = 0; j <= rhs(); ++j) {
      if (pr[j] == 0) continue;
      pr[j] *= inv;
      nz.push_back(j);
    }
    for (int i = 0; i < m; ++i) {
      if (i == r || t[i][q] == 0) continue;
      Rational f = t[i][q];
      for (int j : nz) t[i][j] -= f * pr[j];
    }
    if (d[q] != 0) {
      Rational f = d[q];
      for (int j : nz) {
        if (j == rhs()) obj += f * pr[j];
        else d[j] -= f * pr[j];
      }
    }
    basis[r] = q;
  }

  // Bland's rule; returns -1 at optimum, -2 when unbounded (column in *unb).
  int step(bool allow_art, int* unb) {
    int q = -1;
    for (int j = 0; j < ncols + m; ++j) {
      if (!allow_art && is_art(j)) continue;
      if (d[j] < 0) {
        q = j;
        break;
      }
    }
    if (q < 0) return -1;
    int r = -1;
    Rational best;
    for (int i = 0; i < m; ++i) {
      if (t[i][q] <= 0) continue;
      Rational ratio = t[i][rhs()] / t[i][q];
      if (r < 0 || ratio < best || (ratio == best && basis[i] < basis[r])) {
        r = i;
        best = ratio;
      }
    }
    if (r < 0) {
      *unb = q;
      return -2;
    }
    pivot(r, q);
    return r;
  }
};

}  // namespace

LPCertificate lp_solve(const LPProblem& p) {
  const int nv = p.num_vars;
  const int m = static_cast<int>(p.constraints.size());
  if (!p.free_var.empty() && static_cast<int>(p.free_var.size()) != nv)
    throw std::invalid_argument("lp_solve: free_var size mismatch");
  if (!p.objective.empty() && static_cast<int>(p.objective.size()) != nv)
    throw std::invalid_argument("lp_solve: objective size mismatch");
  for (const auto& c : p.constraints)
    if (static_cast<int>(c.coeffs.size()) != nv) throw std::invalid_argument("lp_solve: constraint size mismatch");

  // Column layout: each variable gets a column (free ones a second, negated);
  // each inequality gets a slack.
  std::vector<int> pos_col(nv), neg_col(nv, -1), slack_col(m, -1);
  int nc = 0;
  for (int j = 0; j < nv; ++j) {
    pos_col[j] = nc++;
    if (p.is_free(j)) neg_col[j] = nc++;
  }
  for (int r = 0; r < m; ++r)
    if (p.constraints[r].sense != Sense::Equal) slack_col[r] = nc++;

  Tableau tb;
  tb.m = m;
  tb.ncols = nc;
  tb.t.assign(m, Vec(nc + m + 1, 0));
  tb.basis.resize(m);
  std::vector<int> sigma(m, 1);
  for (int r = 0; r < m; ++r) {
    const auto& c = p.constraints[r];
    sigma[r] = c.rhs < 0 ? -1 : 1;
    Vec& row = tb.t[r];
    for (int j = 0; j < nv; ++j) {
      if (c.coeffs[j] == 0) continue;
      row[pos_col[j]] = sigma[r] * c.coeffs[j];
      if (neg_col[j] >= 0) row[neg_col[j]] = -sigma[r] * c.coeffs[j];
    }
    if (c.sense == Sense::LessEq) row[slack_col[r]] = sigma[r];
    if (c.sense == Sense::GreaterEq) row[slack_col[r]] = -sigma[r];
    row[nc + r] = 1;
    row[tb.rhs()] = sigma[r] * c.rhs;
    tb.basis[r] = nc + r;
  }

  // Phase 1: minimize the sum of artificials.
  tb.d.assign(nc + m, 0);
  tb.obj = 0;
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < nc; ++j)
      if (tb.t[r][j] != 0) tb.d[j] -= tb.t[r][j];
    tb.obj += tb.t[r][tb.rhs()];
  }
  int unb = -1;
  while (tb.step(true, &unb) >= 0) {
  }

  LPCertificate cert;
  if (tb.obj > 0) {
    cert.status = LPStatus::Infeasible;
    cert.farkas.resize(m);
    for (int r = 0; r < m; ++r) cert.farkas[r] = -(1 - tb.d[nc + r]) * sigma[r];
    return cert;
  }

  // Drive zero-level artificials out of the basis where possible.
  for (int r = 0; r < m; ++r) {
    if (!tb.is_art(tb.basis[r])) continue;
    for (int j = 0; j < nc; ++j)
      if (tb.t[r][j] != 0) {
        tb.pivot(r, j);
        break;
      }
  }

  // Phase 2.
  Vec cost(nc + m, 0);
  if (!p.objective.empty())
    for (int j = 0; j < nv; ++j) {
      Rational c = p.maximize ? Rational(-p.objective[j]) : p.objective[j];
      cost[pos_col[j]] = c;
      if (neg_col[j] >= 0) cost[neg_col[j]] = -c;
    }
  tb.d = cost;
  tb.obj = 0;
  for (int r = 0; r < m; ++r) {
    const Rational& cb = cost[tb.basis[r]];
    if (cb == 0) continue;
    for (int j = 0; j < nc + m; ++j)
      if (tb.t[r][j] != 0) tb.d[j] -= cb * tb.t[r][j];
    tb.obj += cb * tb.t[r][tb.rhs()];
  }

  auto extract = [&](const Vec& colvals) {
    Vec x(nv, 0);
    for (int j = 0; j < nv; ++j) {
      x[j] = colvals[pos_col[j]];
      if (neg_col[j] >= 0) x[j] -= colvals[neg_col[j]];
    }
    return x;
  };

  int r;
  while ((r = tb.step(false, &unb)) >= 0) {
  }
  if (r == -2) {
    cert.status = LPStatus::Unbounded;
    Vec dir(nc + m, 0);
    dir[unb] = 1;
    for (int i = 0; i < m; ++i)
      if (!tb.is_art(tb.basis[i])) dir[tb.basis[i]] = -tb.t[i][unb];
    cert.ray = extract(dir);
    Vec vals(nc + m, 0);
    for (int i = 0; i < m; ++i) vals[tb.basis[i]] = tb.t[i][tb.rhs()];
    cert.x = extract(vals);
    return cert;
  }

  cert.status = LPStatus::Optimal;
  Vec vals(nc + m, 0);
  for (int i = 0; i < m; ++i) vals[tb.basis[i]] = tb.t[i][tb.rhs()];
  cert.x = extract(vals);
  cert.value = 0;
  if (!p.objective.empty()) cert.value = dot(p.objective, cert.x);
  cert.duals.assign(m, 0);
  for (int r2 = 0; r2 < m; ++r2) {
    Rational y = 0;
    for (int i = 0; i < m; ++i) {
      const Rational& cb = cost[tb.basis[i]];
      if (cb != 0 && tb.t[i][nc + r2] != 0) y += cb * tb.t[i][nc + r2];
    }
    cert.duals[r2] = y * sigma[r2];
    if (p.maximize) cert.duals[r2] = -cert.duals[r2];
  }
  return cert;
}

bool satisfies(const LPProblem& p, const Vec& x) {
  if (static_cast<int>(x.size()) != p.num_vars) return false;
  for (int j = 0; j < p.num_vars; ++j)
    if (!p.is_free(j) && x[j] < 0) return false;
  for (const auto& c : p.constraints) {
    Rational lhs = dot(c.coeffs, x);
    if (c.sense == Sense::LessEq && lhs > c.rhs) return false;
    if (c.sense == Sense::GreaterEq && lhs < c.rhs) return false;
    if (c.sense == Sense::Equal && lhs != c.rhs) return false;
  }
  return true;
}

bool is_infeasibility_witness(const LPProblem& p, const Vec& y) {
  if (y.size() != p.constraints.size()) return false;
  Vec combo(p.num_vars, 0);
  Rational rhs = 0;
  for (size_t r = 0; r < y.size(); ++r) {
    const auto& c = p.constraints[r];
    if (c.sense == Sense::LessEq && y[r] < 0) return false;
    if (c.sense == Sense::GreaterEq && y[r] > 0) return false;
    if (y[r] == 0) continue;
    for (int j = 0; j < p.num_vars; ++j)
      if (c.coeffs[j] != 0) combo[j] += y[r] * c.coeffs[j];
    rhs += y[r] * c.rhs;
  }
  for (int j = 0; j < p.num_vars; ++j) {
    if (p.is_free(j) && combo[j] != 0) return false;
    if (!p.is_free(j) && combo[j] < 0) return false;
  }
  return rhs < 0;
}

std::string to_string(LPStatus s) {
  switch (s) {
    case LPStatus::Optimal: return "optimal";
    case LPStatus::Infeasible: return "infeasible";
    case LPStatus::Unbounded: return "unbounded";
  }
  return "?";
}

}  // namespace trop
