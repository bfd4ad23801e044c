#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "helly/feasibility.hpp"
#include "helly/geometry.hpp"
#include "helly/rng.hpp"

namespace helly {

struct TesterConfig {
  double alpha = 0.5;    // per-round survival bound being tested against
  double epsilon = 0.01; // acceptable miss probability for far-from-intersecting inputs
  std::optional<std::int64_t> rounds_override;
  std::uint64_t rng_seed = 0;
  OracleConfig oracle;
};

// PASS: all rounds found their tuple intersecting. FAIL: some round hit an
// empty tuple and stopped; tuple_indices is that witness, sorted ascending.
// rounds_run equals the failing round on FAIL and the full round count on
// PASS, and oracle_calls always equals rounds_run (one oracle query per
// round). In the degenerate regime n <= d+1 a single whole-family check
// stands in for sampling, so rounds_run == oracle_calls == 1 there.
struct Verdict {
  bool pass = false;
  std::int64_t rounds_run = 0;
  std::int64_t oracle_calls = 0;
  std::vector<std::int32_t> tuple_indices;  // empty on PASS
};

// Smallest t >= 1 with alpha^t <= epsilon (as evaluated by std::pow), i.e.
// ceil(log epsilon / log alpha) up to floating-point ties. Both parameters
// must lie strictly inside (0, 1).
std::int64_t compute_rounds(double alpha, double epsilon);

// Uniform random k-subset of {0, .., n-1}, sorted ascending: every subset has
// probability exactly 1 / C(n, k). Exactly k indices are drawn from rng
// (Floyd's algorithm), so the cost never depends on n.
std::vector<std::int32_t> sample_tuple(std::int64_t n, int k, Rng& rng);

// Counters the probe harness reads; index_reads counts accesses to the
// family's set list, (d+1) per executed round.
struct TesterStats {
  std::int64_t rounds_run = 0;
  std::int64_t oracle_calls = 0;
  std::int64_t index_reads = 0;
};

// The sampling tester: t rounds (compute_rounds or the override), each round
// drawing a uniform (d+1)-tuple and asking the oracle; FAIL ends the run at
// the first empty tuple. Round r uses the child streams derive_seed(rng_seed,
// r) and derive_seed(oracle.rng_seed, r), so a run is reproducible per round.
Verdict run_tester(const Instance& inst, const TesterConfig& cfg);
Verdict run_tester(const Instance& inst, const TesterConfig& cfg, TesterStats& stats);

}  // namespace helly
