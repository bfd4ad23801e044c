#pragma once

#include <cstdint>
#include <vector>

#include "helly/feasibility.hpp"
#include "helly/geometry.hpp"

namespace helly {

// Exhaustive count of intersecting q-subsets.
struct TupleCensus {
  int q = 0;
  std::uint64_t total = 0;        // C(n, q)
  std::uint64_t intersecting = 0;
  double fraction = 0.0;          // intersecting / total
};

// Largest k admitting a common point among some k sets, with one witness
// subset of that size (empty iff depth == 0, which needs every single set to
// be empty; only polytopes can be).
struct DepthResult {
  int depth = 0;
  std::vector<std::int32_t> witness_subset;
};

// C(n, q), or throws EnumerationTooLarge once the value exceeds cap.
std::uint64_t binomial_capped(std::int64_t n, int q, std::uint64_t cap);

// Tests every q-subset in lexicographic order. Refuses families with
// C(n, q) > cap so an accidental combinatorial explosion fails loudly
// instead of hanging.
TupleCensus count_intersecting_tuples(const Instance& inst, int q,
                                      const OracleConfig& cfg,
                                      std::uint64_t cap = 1000000);

// Exact depth by descending subset size with early exit. Subsets containing
// a non-intersecting pair are pruned without an oracle call (a superset of
// an infeasible family is infeasible). Exponential in the worst case, hence
// the hard family-size cap.
DepthResult depth_bruteforce(const Instance& inst, const OracleConfig& cfg,
                             int max_n = 20);

// (alpha / C(q, d))^(1/(q-d)): the guaranteed fraction of the family that
// shares a common point once an alpha-fraction of q-subsets intersect.
// Requires q > d >= 1 and alpha in (0, 1].
double fractional_bound(double alpha, int q, int d);

struct CorollaryReport {
  double alpha = 0.0;
  int depth = 0;
  double depth_threshold = 0.0;  // (alpha / (d+1)) * n
  bool hypothesis_holds = false; // depth < threshold, strict
  TupleCensus census;            // at q = d + 1
  bool conclusion_holds = false; // census.fraction < alpha, strict
  bool violation = false;        // hypothesis without conclusion
};

// Checks, exhaustively, the implication "no point lies in (alpha/(d+1))*n of
// the sets => fewer than an alpha fraction of (d+1)-subsets intersect" on a
// concrete instance. Any violation on exactly-decidable (linear) instances
// is a bug by definition.
CorollaryReport verify_corollary(const Instance& inst, double alpha,
                                 const OracleConfig& cfg);

}  // namespace helly
