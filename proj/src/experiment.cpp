#include "helly/experiment.hpp"

#include <cmath>
#include <limits>

#include "helly/analysis.hpp"
#include "helly/errors.hpp"
#include "helly/generators.hpp"
#include "helly/rng.hpp"

namespace helly {

std::pair<std::uint64_t, std::uint64_t> trial_seeds(std::uint64_t master_seed,
                                                    std::int64_t trial) {
  const auto i = static_cast<std::uint64_t>(trial);
  return {derive_seed(master_seed, 2 * i), derive_seed(master_seed, 2 * i + 1)};
}

CalibrationReport calibrate(const Instance& instance, const TesterConfig& cfg,
                            std::int64_t trials, std::uint64_t master_seed) {
  if (trials < 1000)
    throw ParamOutOfRange("calibration needs trials >= 1000, got " +
                          std::to_string(trials));
  const auto n = static_cast<std::int64_t>(instance.sets.size());
  const int d = instance.dimension;

  CalibrationReport rep;
  rep.trials = trials;
  rep.master_seed = master_seed;

  // Tuple size the tester actually checks: d+1 in the sampling regime, the
  // whole family when n <= d+1.
  const bool degenerate = n <= static_cast<std::int64_t>(d) + 1;
  const int q = degenerate ? static_cast<int>(n) : d + 1;
  rep.t_used = degenerate ? 1
               : cfg.rounds_override ? *cfg.rounds_override
                                     : compute_rounds(cfg.alpha, cfg.epsilon);

  try {
    const TupleCensus census =
        count_intersecting_tuples(instance, q, cfg.oracle);
    rep.p_used = census.fraction;
  } catch (const EnumerationTooLarge& e) {
    throw GroundTruthUnavailable(
        std::string("per-round probability needs a census that exceeds the "
                    "enumeration cap: ") +
        e.what());
  }

  rep.predicted_pass_rate =
      std::pow(rep.p_used, static_cast<double>(rep.t_used));

  std::int64_t passes = 0;
  for (std::int64_t i = 0; i < trials; ++i) {
    TesterConfig tc = cfg;
    const auto [run_seed, oracle_seed] = trial_seeds(master_seed, i);
    tc.rng_seed = run_seed;
    tc.oracle.rng_seed = oracle_seed;
    if (run_tester(instance, tc).pass) ++passes;
  }
  rep.empirical_pass_rate =
      static_cast<double>(passes) / static_cast<double>(trials);

  rep.binomial_sigma =
      std::sqrt(rep.predicted_pass_rate * (1.0 - rep.predicted_pass_rate) /
                static_cast<double>(trials));
  if (rep.binomial_sigma > 0.0) {
    rep.z_score =
        (rep.empirical_pass_rate - rep.predicted_pass_rate) / rep.binomial_sigma;
  } else if (rep.empirical_pass_rate == rep.predicted_pass_rate) {
    rep.z_score = 0.0;
  } else {
    rep.z_score = std::numeric_limits<double>::infinity();
  }
  return rep;
}

BoundCheckReport theorem_bound_check(const Instance& instance, double alpha,
                                     double epsilon, const TesterConfig& cfg,
                                     std::int64_t trials,
                                     std::uint64_t master_seed) {
  TesterConfig tc = cfg;
  tc.alpha = alpha;
  tc.epsilon = epsilon;

  BoundCheckReport rep;
  const auto n = static_cast<std::int64_t>(instance.sets.size());
  rep.depth = depth_bruteforce(instance, tc.oracle).depth;
  rep.depth_threshold = alpha / static_cast<double>(instance.dimension + 1) *
                        static_cast<double>(n);
  rep.hypothesis_met = static_cast<double>(rep.depth) < rep.depth_threshold;

  rep.calibration = calibrate(instance, tc, trials, master_seed);
  rep.empirical_fail_rate = 1.0 - rep.calibration.empirical_pass_rate;
  rep.required_fail_rate = 1.0 - epsilon - 3.0 * rep.calibration.binomial_sigma;
  rep.margin = rep.empirical_fail_rate - (1.0 - epsilon);
  rep.bound_holds =
      rep.hypothesis_met && rep.empirical_fail_rate >= rep.required_fail_rate;
  return rep;
}

ProbeReport query_count_probe(int d, double alpha, double epsilon,
                              std::span<const std::int64_t> n_values,
                              std::uint64_t seed) {
  ProbeReport rep;
  rep.t = compute_rounds(alpha, epsilon);
  rep.ok = true;

  std::uint64_t stream = 0;
  for (const std::int64_t n : n_values) {
    if (n <= static_cast<std::int64_t>(d) + 1)
      throw ParamOutOfRange("probe sizes must exceed d+1");
    for (const bool common : {true, false}) {
      const std::uint64_t gen_seed = derive_seed(seed, stream++);
      const Instance inst = common ? gen_common_point(n, d, gen_seed)
                                   : gen_pairwise_disjoint(n, d, gen_seed);
      TesterConfig tc;
      tc.alpha = alpha;
      tc.epsilon = epsilon;
      tc.rng_seed = derive_seed(seed, stream++);
      tc.oracle.rng_seed = derive_seed(seed, stream++);

      TesterStats stats;
      const Verdict v = run_tester(inst, tc, stats);

      ProbeRow row;
      row.n = n;
      row.family = common ? "common-point" : "disjoint";
      row.pass = v.pass;
      row.rounds_run = stats.rounds_run;
      row.oracle_calls = stats.oracle_calls;
      row.index_reads = stats.index_reads;
      rep.rows.push_back(row);

      if (row.index_reads != static_cast<std::int64_t>(d + 1) * row.rounds_run)
        rep.ok = false;
      if (common) {
        if (!row.pass || row.oracle_calls != rep.t) rep.ok = false;
      } else {
        if (row.pass || row.oracle_calls != 1) rep.ok = false;
      }
    }
  }
  return rep;
}

}  // namespace helly
