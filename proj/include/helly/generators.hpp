#pragma once

#include <cstdint>

#include "helly/geometry.hpp"

namespace helly {

enum class GenKind { CommonPoint, PairwiseDisjoint, Calibrated1D, RandomLinear };

// Everything a generator needs; k only matters for Calibrated1D. Identical
// specs produce byte-identical instances (all randomness is hand-rolled on
// top of mt19937_64, nothing implementation-defined).
struct GenSpec {
  GenKind kind = GenKind::CommonPoint;
  std::int64_t n = 0;
  int d = 1;
  std::uint64_t seed = 0;
  std::int64_t k = -1;
};

// n sets of mixed kinds, all containing a hidden anchor point in [-5, 5]^d
// with interior margin at least 0.05 (actual margins are drawn much larger,
// which keeps the projection path fast). The whole family intersects, so the
// tester must PASS with any seed. anchor_out, when given, receives the
// anchor so tests can check membership directly.
Instance gen_common_point(std::int64_t n, int d, std::uint64_t seed,
                          Point* anchor_out = nullptr);

// n unit boxes on a jittered lattice with pairwise gaps >= 0.5: no two sets
// intersect, so every (d+1)-tuple with d >= 1 is empty and the tester FAILs
// in round one. For n beyond what fits in [-10, 10]^d the lattice keeps its
// spacing and extends outward instead of shrinking the gaps.
Instance gen_pairwise_disjoint(std::int64_t n, int d, std::uint64_t seed);

// 1-dimensional family with exact ground truth: k intervals containing 0,
// n-k pairwise-disjoint intervals far to the right. Intersecting pair count
// is exactly C(k, 2) out of C(n, 2), and the depth is max(k, 1). Requires
// 0 <= k <= n.
Instance gen_calibrated_1d(std::int64_t n, std::int64_t k, std::uint64_t seed);

// n random boxes, halfspaces and small polytopes in [-10, 10]^d, d in
// {1, 2, 3}, kept away from degeneracy: every subfamily of size <= d+1 must
// clear a phase-1 margin of 1e-2 on both sides, and offending sets are
// resampled until the whole family does (perturb and retest). Decisions on
// these instances are therefore stable under the oracle's tolerances.
Instance gen_random_linear(std::int64_t n, int d, std::uint64_t seed);

Instance generate(const GenSpec& spec);

}  // namespace helly
