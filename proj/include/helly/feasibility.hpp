#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "helly/geometry.hpp"

namespace helly {

enum class FeasMethod { ExactLP, Projection };

// Feasible carries a witness point; Infeasible carries the residual that
// blocked it (the phase-1 optimum for the LP path, the final membership
// violation for the projection path).
struct FeasibilityOutcome {
  bool feasible = false;
  Point witness;
  double max_residual = 0.0;
  FeasMethod method = FeasMethod::ExactLP;
};

struct OracleConfig {
  double feas_tol = 1e-9;
  double proj_tol = 1e-7;
  std::int64_t proj_max_iters = 20000;
  double bound_M = 1e6;
  std::uint64_t rng_seed = 0;
  // When set, tuples that would need the approximate projection path (any
  // ball present) are rejected instead of answered.
  bool strict = false;
};

void validate_oracle_config(const OracleConfig& cfg);

// Feasibility of the halfspace system {a_j.x <= b_j} inside [-M, M]^d,
// decided exactly through the phase-1 program
//
//   minimize s  subject to  a_j.x <= b_j + s * (1 + |b_j|),  -M <= x_k <= M,
//
// solved by a seeded randomized incremental method: rows are inserted in a
// random permutation, a violated row forces a re-solve on its boundary one
// dimension lower, and the recursion bottoms out in dimension zero. Feasible
// iff the optimum s* <= feas_tol; otherwise s* is reported as the residual.
// The decision does not depend on the seed or the row order; the witness may.
FeasibilityOutcome lp_feasible(const std::vector<Halfspace>& rows, int d,
                               const OracleConfig& cfg);

// The phase-1 optimum s* itself: negative when the system has slack, zero at
// tangency, positive when infeasible. lp_feasible's decision is s* <= feas_tol.
double phase1_margin(const std::vector<Halfspace>& rows, int d,
                     const OracleConfig& cfg);

// Nonemptiness of the intersection of a tuple of sets. All-linear tuples
// concatenate their rows and go through lp_feasible. A tuple containing a
// ball runs cyclic Dykstra-corrected alternating projections over the
// elementary pieces (polytopes expanded into rows), started from the centroid
// of ball centers and box midpoints; Feasible requires an iterate that passes
// contains() at proj_tol for every set, so a Feasible answer is always
// certified even though Infeasible answers from this path are best-effort.
FeasibilityOutcome tuple_feasible(std::span<const ConvexSet> sets, int d,
                                  const OracleConfig& cfg);

// Same, over the subfamily of an instance selected by indices.
FeasibilityOutcome tuple_feasible(const Instance& inst,
                                  std::span<const std::int32_t> indices,
                                  const OracleConfig& cfg);

}  // namespace helly
