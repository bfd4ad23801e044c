#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "helly/geometry.hpp"
#include "helly/tester.hpp"

namespace helly {

// Monte Carlo calibration of the tester against exact per-round survive
// probabilities obtained by enumeration.

struct CalibrationReport {
  std::int64_t trials = 0;
  double empirical_pass_rate = 0.0;
  // p_used^t_used, where p_used is the enumerated fraction of feasible
  // (d+1)-tuples.
  double predicted_pass_rate = 0.0;
  // sqrt(predicted * (1 - predicted) / trials).
  double binomial_sigma = 0.0;
  // (empirical - predicted) / sigma; 0 when sigma is 0 and they agree.
  double z_score = 0.0;
  std::int64_t t_used = 0;
  double p_used = 0.0;
  std::uint64_t master_seed = 0;
};

// Seeds for trial i: {tester stream, oracle stream}. Exposed so callers can
// reproduce any single trial in isolation; calibrate() uses exactly these,
// which makes trial outcomes independent of execution order.
std::pair<std::uint64_t, std::uint64_t> trial_seeds(std::uint64_t master_seed,
                                                    std::int64_t trial);

// Runs the tester `trials` times and compares the empirical pass rate with
// the prediction p^t. p comes from an exhaustive (d+1)-tuple census; if that
// enumeration exceeds its cap the instance has no usable ground truth and
// GroundTruthUnavailable is thrown. Families small enough for the
// single-check regime (n <= d+1) are calibrated against the whole-family
// census with t = 1.
// trials must be >= 1000: below that the 3-sigma band is too wide to detect
// a wrong round count.
CalibrationReport calibrate(const Instance& instance, const TesterConfig& cfg,
                            std::int64_t trials, std::uint64_t master_seed);

struct BoundCheckReport {
  CalibrationReport calibration;
  // Depth of the family and the threshold alpha/(d+1)*n it must stay below
  // for the guarantee to apply.
  int depth = 0;
  double depth_threshold = 0.0;
  bool hypothesis_met = false;
  double empirical_fail_rate = 0.0;
  // 1 - epsilon - 3*sigma.
  double required_fail_rate = 0.0;
  // empirical_fail_rate - (1 - epsilon).
  double margin = 0.0;
  // True iff the hypothesis held and the fail rate cleared the requirement.
  bool bound_holds = false;
};

// Verifies the guarantee "fail rate >= 1 - epsilon" on an instance whose
// depth is below alpha/(d+1)*n. The depth hypothesis is computed, not
// assumed; when it does not hold the report says so and no bound is claimed
// (trials still run, the numbers are informative).
BoundCheckReport theorem_bound_check(const Instance& instance, double alpha,
                                     double epsilon, const TesterConfig& cfg,
                                     std::int64_t trials,
                                     std::uint64_t master_seed);

struct ProbeRow {
  std::int64_t n = 0;
  // "common-point" or "disjoint".
  std::string family;
  bool pass = false;
  std::int64_t rounds_run = 0;
  std::int64_t oracle_calls = 0;
  std::int64_t index_reads = 0;
};

struct ProbeReport {
  std::vector<ProbeRow> rows;
  // Round budget shared by every probe run.
  std::int64_t t = 0;
  // All structural checks passed: pass rows show oracle_calls == t identical
  // across n, fail rows show oracle_calls == 1, and index_reads ==
  // (d+1) * rounds_run everywhere.
  bool ok = false;
};

// Cost model probe: for each n builds one family with a common point and one
// pairwise-disjoint family, runs the tester once on each, and records the
// call counters. Every n must exceed d+1 so the sampling regime is in force.
ProbeReport query_count_probe(int d, double alpha, double epsilon,
                              std::span<const std::int64_t> n_values,
                              std::uint64_t seed);

}  // namespace helly
