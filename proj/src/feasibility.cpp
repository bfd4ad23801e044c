#include "helly/feasibility.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <utility>

#include "helly/errors.hpp"
#include "helly/rng.hpp"

namespace helly {

namespace {

// Relative slack for violation tests inside the solver. Well below feas_tol,
// well above double rounding at the coordinate scales the box bound allows.
constexpr double kLpEps = 1e-11;

struct LpRow {
  std::vector<double> g;
  double h = 0.0;
};

double row_value(const LpRow& r, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) s += r.g[i] * y[i];
  return s;
}

bool violated(const LpRow& r, const std::vector<double>& y) {
  return row_value(r, y) > r.h + kLpEps * (1.0 + std::abs(r.h));
}

struct LpSolution {
  bool feasible = false;
  std::vector<double> y;
};

// Minimize c.y subject to rows and the finite box lo <= y <= hi.
//
// Seidel's randomized incremental scheme: start from the box corner that
// minimizes c (ties toward the lexicographically smallest corner), insert
// rows in a seeded random order, and when row r is violated re-solve on the
// hyperplane of r with one variable substituted away. The eliminated
// variable's own bounds become ordinary rows of the subproblem. Base case is
// dimension zero, where rows degenerate to "0 <= h" checks.
//
// Any optimum of the subproblem lifts to an optimum here: if part of the old
// optimal face survives row r, the segment from the violated old optimizer to
// a surviving one crosses r's boundary inside that face, so restricting to
// the boundary never changes the optimal value. Hence the returned value is
// exact regardless of tie-breaking, and only the witness can differ.
LpSolution seidel_min(std::vector<LpRow> rows, std::vector<double> lo,
                      std::vector<double> hi, std::vector<double> c, Rng& rng) {
  const int dim = static_cast<int>(c.size());
  if (dim == 0) {
    for (const auto& r : rows)
      if (r.h < -kLpEps * (1.0 + std::abs(r.h))) return {false, {}};
    return {true, {}};
  }

  std::vector<double> y(dim);
  for (int k = 0; k < dim; ++k) y[k] = (c[k] > 0.0) ? lo[k] : (c[k] < 0.0 ? hi[k] : lo[k]);

  for (std::size_t i = rows.size(); i > 1; --i)
    std::swap(rows[i - 1], rows[rng.below(i)]);

  for (std::size_t processed = 0; processed < rows.size(); ++processed) {
    const LpRow& r = rows[processed];
    if (!violated(r, y)) continue;

    int piv = -1;
    double gmax = 0.0;
    for (int k = 0; k < dim; ++k) {
      double m = std::abs(r.g[k]);
      if (m > gmax) {
        gmax = m;
        piv = k;
      }
    }
    // All-zero row that is violated reads "0 <= h" with h < 0.
    if (piv < 0 || gmax <= 1e-14 * (1.0 + std::abs(r.h))) return {false, {}};

    // Substitution y_piv = p - q . y', with y' the remaining variables.
    const double inv = 1.0 / r.g[piv];
    const double p = r.h * inv;
    std::vector<double> q(dim - 1);
    for (int k = 0, j = 0; k < dim; ++k)
      if (k != piv) q[j++] = r.g[k] * inv;

    auto reduce = [&](const std::vector<double>& g, double h) {
      LpRow out;
      out.g.resize(dim - 1);
      const double gp = g[piv];
      for (int k = 0, j = 0; k < dim; ++k)
        if (k != piv) {
          out.g[j] = g[k] - gp * q[j];
          ++j;
        }
      out.h = h - gp * p;
      return out;
    };

    std::vector<LpRow> sub;
    sub.reserve(processed + 2);
    for (std::size_t e = 0; e < processed; ++e) sub.push_back(reduce(rows[e].g, rows[e].h));

    // lo_piv <= p - q.y' <= hi_piv
    LpRow from_lo;
    from_lo.g = q;
    from_lo.h = p - lo[piv];
    sub.push_back(std::move(from_lo));
    LpRow from_hi;
    from_hi.g.resize(dim - 1);
    for (int j = 0; j < dim - 1; ++j) from_hi.g[j] = -q[j];
    from_hi.h = hi[piv] - p;
    sub.push_back(std::move(from_hi));

    std::vector<double> slo, shi, sc;
    slo.reserve(dim - 1);
    shi.reserve(dim - 1);
    sc.reserve(dim - 1);
    for (int k = 0, j = 0; k < dim; ++k)
      if (k != piv) {
        slo.push_back(lo[k]);
        shi.push_back(hi[k]);
        sc.push_back(c[k] - c[piv] * q[j]);
        ++j;
      }

    LpSolution sres =
        seidel_min(std::move(sub), std::move(slo), std::move(shi), std::move(sc), rng);
    if (!sres.feasible) return {false, {}};

    double ypiv = p;
    for (int k = 0, j = 0; k < dim; ++k)
      if (k != piv) {
        y[k] = sres.y[j];
        ypiv -= q[j] * sres.y[j];
        ++j;
      }
    y[piv] = ypiv;
  }
  return {true, std::move(y)};
}

}  // namespace

void validate_oracle_config(const OracleConfig& cfg) {
  if (!(cfg.feas_tol > 0.0) || !std::isfinite(cfg.feas_tol))
    throw ParamOutOfRange("feas_tol must be positive and finite");
  if (!(cfg.proj_tol > 0.0) || !std::isfinite(cfg.proj_tol))
    throw ParamOutOfRange("proj_tol must be positive and finite");
  if (cfg.proj_max_iters < 1) throw ParamOutOfRange("proj_max_iters must be >= 1");
  if (!(cfg.bound_M > 0.0) || !std::isfinite(cfg.bound_M))
    throw ParamOutOfRange("bound_M must be positive and finite");
}

namespace {

struct Phase1Solution {
  double s_star = 0.0;
  Point x;
};

Phase1Solution solve_phase1(const std::vector<Halfspace>& rows, int d,
                            const OracleConfig& cfg) {
  validate_oracle_config(cfg);
  if (d < 0) throw ParamOutOfRange("dimension must be >= 0");
  if (rows.empty()) throw EmptyTuple("lp_feasible: no rows");
  for (const auto& r : rows)
    if (static_cast<int>(r.a.size()) != d)
      throw DimensionMismatch("row of length " + std::to_string(r.a.size()) +
                              " in dimension " + std::to_string(d));

  // Phase-1 variables y = (x, s). A bound on s wide enough that the program
  // is always strictly feasible at s = s_hi: at any x in the box the scaled
  // residual of row j is at most (sum_k |a_jk| M + |b_j|) / (1 + |b_j|).
  const int D = d + 1;
  double s_hi = 1.0;
  std::vector<LpRow> lrows;
  lrows.reserve(rows.size());
  for (const auto& r : rows) {
    double reach = std::abs(r.b);
    for (double ak : r.a) reach += std::abs(ak) * cfg.bound_M;
    s_hi = std::max(s_hi, 1.0 + reach / (1.0 + std::abs(r.b)));

    LpRow lr;
    lr.g.resize(D);
    for (int k = 0; k < d; ++k) lr.g[k] = r.a[k];
    lr.g[d] = -(1.0 + std::abs(r.b));
    lr.h = r.b;
    lrows.push_back(std::move(lr));
  }

  std::vector<double> lo(D, -cfg.bound_M), hi(D, cfg.bound_M), c(D, 0.0);
  lo[d] = -s_hi;
  hi[d] = s_hi;
  c[d] = 1.0;

  // The program is feasible and bounded by construction, so an infeasible
  // report can only be numerical. A couple of reshuffles clears transient
  // degeneracy before giving up.
  LpSolution sol;
  for (int attempt = 0; attempt < 3; ++attempt) {
    Rng rng(derive_seed(cfg.rng_seed, static_cast<std::uint64_t>(attempt)));
    sol = seidel_min(lrows, lo, hi, c, rng);
    if (sol.feasible) break;
  }
  if (!sol.feasible) throw Error("phase-1 program unexpectedly reported infeasible");

  Phase1Solution res;
  res.s_star = sol.y[d];
  res.x.assign(sol.y.begin(), sol.y.begin() + d);
  return res;
}

}  // namespace

double phase1_margin(const std::vector<Halfspace>& rows, int d,
                     const OracleConfig& cfg) {
  return solve_phase1(rows, d, cfg).s_star;
}

FeasibilityOutcome lp_feasible(const std::vector<Halfspace>& rows, int d,
                               const OracleConfig& cfg) {
  Phase1Solution sol = solve_phase1(rows, d, cfg);
  FeasibilityOutcome out;
  out.method = FeasMethod::ExactLP;
  if (sol.s_star <= cfg.feas_tol) {
    out.feasible = true;
    out.witness = std::move(sol.x);
  } else {
    out.feasible = false;
    out.max_residual = sol.s_star;
  }
  return out;
}

namespace {

FeasibilityOutcome projection_feasible(std::span<const ConvexSet> sets, int d,
                                       const OracleConfig& cfg) {
  // Elementary pieces all have closed-form projections.
  std::vector<ConvexSet> elems;
  for (const auto& s : sets) {
    if (const auto* poly = std::get_if<HPolytope>(&s)) {
      for (const auto& r : poly->rows) elems.push_back(r);
    } else {
      elems.push_back(s);
    }
  }

  Point x(d, 0.0);
  int anchors = 0;
  for (const auto& s : sets) {
    if (const auto* ball = std::get_if<Ball>(&s)) {
      for (int k = 0; k < d; ++k) x[k] += ball->center[k];
      ++anchors;
    } else if (const auto* box = std::get_if<Box>(&s)) {
      for (int k = 0; k < d; ++k) x[k] += 0.5 * (box->lo[k] + box->hi[k]);
      ++anchors;
    }
  }
  if (anchors > 0)
    for (int k = 0; k < d; ++k) x[k] /= anchors;

  auto in_all = [&](const Point& pt) {
    for (const auto& s : sets)
      if (!contains(s, pt, cfg.proj_tol)) return false;
    return true;
  };

  std::vector<Vec> corr(elems.size(), Vec(d, 0.0));
  for (std::int64_t iter = 0; iter < cfg.proj_max_iters; ++iter) {
    // Any iterate inside every set at proj_tol is already a certified
    // witness; accepting here only shortens the run, never changes an answer
    // from Infeasible to Feasible that the full cycle count would not reach.
    if (in_all(x)) {
      FeasibilityOutcome out;
      out.feasible = true;
      out.witness = x;
      out.method = FeasMethod::Projection;
      return out;
    }
    for (std::size_t e = 0; e < elems.size(); ++e) {
      Vec y = x;
      for (int k = 0; k < d; ++k) y[k] += corr[e][k];
      Vec z = project(elems[e], y);
      for (int k = 0; k < d; ++k) corr[e][k] = y[k] - z[k];
      x = std::move(z);
    }
  }
  if (in_all(x)) {
    FeasibilityOutcome out;
    out.feasible = true;
    out.witness = x;
    out.method = FeasMethod::Projection;
    return out;
  }

  double residual = 0.0;
  for (const auto& s : sets) residual = std::max(residual, membership_violation(s, x));
  FeasibilityOutcome out;
  out.feasible = false;
  out.max_residual = residual;
  out.method = FeasMethod::Projection;
  return out;
}

}  // namespace

FeasibilityOutcome tuple_feasible(std::span<const ConvexSet> sets, int d,
                                  const OracleConfig& cfg) {
  validate_oracle_config(cfg);
  if (sets.empty()) throw EmptyTuple("tuple_feasible: empty tuple");
  if (d < 1) throw ParamOutOfRange("dimension must be >= 1");
  for (const auto& s : sets)
    if (set_dimension(s) != d)
      throw DimensionMismatch("tuple member in dimension " +
                              std::to_string(set_dimension(s)) + ", expected " +
                              std::to_string(d));

  std::vector<Halfspace> rows;
  bool linear = true;
  for (const auto& s : sets) {
    auto lc = linear_constraints(s);
    if (!lc) {
      linear = false;
      break;
    }
    rows.insert(rows.end(), lc->begin(), lc->end());
  }

  if (linear) {
    FeasibilityOutcome out = lp_feasible(rows, d, cfg);
#ifndef NDEBUG
    if (out.feasible)
      for (const auto& s : sets) assert(contains(s, out.witness, cfg.feas_tol));
#endif
    return out;
  }

  if (cfg.strict)
    throw StrictLinearOnly("tuple contains a ball; only the exact LP path is allowed");
  return projection_feasible(sets, d, cfg);
}

FeasibilityOutcome tuple_feasible(const Instance& inst,
                                  std::span<const std::int32_t> indices,
                                  const OracleConfig& cfg) {
  if (indices.empty()) throw EmptyTuple("tuple_feasible: empty index list");
  std::vector<ConvexSet> gathered;
  gathered.reserve(indices.size());
  for (std::int32_t i : indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= inst.sets.size())
      throw ParamOutOfRange("tuple index " + std::to_string(i) + " out of range");
    gathered.push_back(inst.sets[static_cast<std::size_t>(i)]);
  }
  return tuple_feasible(std::span<const ConvexSet>(gathered), inst.dimension, cfg);
}

}  // namespace helly
