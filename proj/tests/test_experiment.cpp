#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "helly/errors.hpp"
#include "helly/experiment.hpp"
#include "helly/generators.hpp"
#include "helly/rng.hpp"
#include "helly/tester.hpp"

using namespace helly;

TEST_CASE("calibration matches the enumerated prediction") {
  const Instance inst = gen_calibrated_1d(10, 8, 42);
  TesterConfig cfg;
  cfg.alpha = 0.9;
  cfg.epsilon = 0.5;

  const CalibrationReport rep = calibrate(inst, cfg, 4000, 99);
  CHECK(rep.trials == 4000);
  CHECK(rep.t_used == 7);
  CHECK(rep.p_used == doctest::Approx(28.0 / 45.0).epsilon(1e-12));
  CHECK(rep.predicted_pass_rate ==
        doctest::Approx(std::pow(28.0 / 45.0, 7.0)).epsilon(1e-12));
  CHECK(rep.binomial_sigma ==
        doctest::Approx(std::sqrt(rep.predicted_pass_rate *
                                  (1.0 - rep.predicted_pass_rate) / 4000.0)));
  CHECK(std::abs(rep.z_score) < 4.0);
  CHECK(rep.master_seed == 99);
}

TEST_CASE("always-feasible families calibrate to rate one") {
  const Instance inst = gen_common_point(12, 2, 7);
  TesterConfig cfg;
  const CalibrationReport rep = calibrate(inst, cfg, 1000, 1);
  CHECK(rep.p_used == 1.0);
  CHECK(rep.predicted_pass_rate == 1.0);
  CHECK(rep.empirical_pass_rate == 1.0);
  CHECK(rep.binomial_sigma == 0.0);
  CHECK(rep.z_score == 0.0);
}

TEST_CASE("pairwise-disjoint families calibrate to rate zero") {
  const Instance inst = gen_pairwise_disjoint(12, 1, 3);
  TesterConfig cfg;
  const CalibrationReport rep = calibrate(inst, cfg, 1000, 2);
  CHECK(rep.p_used == 0.0);
  CHECK(rep.predicted_pass_rate == 0.0);
  CHECK(rep.empirical_pass_rate == 0.0);
  CHECK(rep.z_score == 0.0);
}

TEST_CASE("trial floor is enforced") {
  const Instance inst = gen_calibrated_1d(6, 3, 1);
  CHECK_THROWS_AS(calibrate(inst, TesterConfig{}, 999, 1), ParamOutOfRange);
}

TEST_CASE("oversized censuses surface as missing ground truth") {
  const Instance inst = gen_pairwise_disjoint(200, 2, 1);
  // C(200, 3) exceeds the enumeration cap.
  CHECK_THROWS_AS(calibrate(inst, TesterConfig{}, 1000, 1),
                  GroundTruthUnavailable);
}

TEST_CASE("tiny families calibrate through the single-check regime") {
  Instance inst;
  inst.dimension = 2;
  inst.sets = {Box{{0.0, 0.0}, {2.0, 2.0}}, Box{{1.0, 1.0}, {3.0, 3.0}}};
  const CalibrationReport rep = calibrate(inst, TesterConfig{}, 1000, 5);
  CHECK(rep.t_used == 1);
  CHECK(rep.p_used == 1.0);
  CHECK(rep.empirical_pass_rate == 1.0);
}

TEST_CASE("trial outcomes do not depend on execution order") {
  const Instance inst = gen_calibrated_1d(10, 7, 8);
  TesterConfig cfg;
  cfg.alpha = 0.8;
  cfg.epsilon = 0.4;
  const std::int64_t trials = 1000;
  const std::uint64_t master = 31337;

  const CalibrationReport rep = calibrate(inst, cfg, trials, master);
  const CalibrationReport again = calibrate(inst, cfg, trials, master);
  CHECK(rep.empirical_pass_rate == again.empirical_pass_rate);
  CHECK(rep.z_score == again.z_score);

  // Replay the trials in reverse order straight from the seed chain.
  std::int64_t passes = 0;
  for (std::int64_t i = trials - 1; i >= 0; --i) {
    TesterConfig tc = cfg;
    const auto [run_seed, oracle_seed] = trial_seeds(master, i);
    tc.rng_seed = run_seed;
    tc.oracle.rng_seed = oracle_seed;
    if (run_tester(inst, tc).pass) ++passes;
  }
  CHECK(static_cast<double>(passes) / static_cast<double>(trials) ==
        rep.empirical_pass_rate);
}

TEST_CASE("bound check confirms the guarantee on a sparse family") {
  const Instance inst = gen_calibrated_1d(20, 2, 13);
  TesterConfig cfg;
  const BoundCheckReport rep =
      theorem_bound_check(inst, 0.5, 0.1, cfg, 2000, 55);
  CHECK(rep.depth == 2);
  CHECK(rep.depth_threshold == doctest::Approx(5.0));
  CHECK(rep.hypothesis_met);
  CHECK(rep.calibration.t_used == 4);
  CHECK(rep.calibration.p_used == doctest::Approx(1.0 / 190.0).epsilon(1e-12));
  CHECK(rep.empirical_fail_rate >= rep.required_fail_rate);
  CHECK(rep.bound_holds);
  CHECK(rep.margin >= 0.0);
}

TEST_CASE("bound check reports an unmet hypothesis without claiming") {
  const Instance inst = gen_calibrated_1d(10, 8, 21);
  const BoundCheckReport rep =
      theorem_bound_check(inst, 0.5, 0.25, TesterConfig{}, 1000, 6);
  CHECK(rep.depth == 8);
  CHECK(rep.depth_threshold == doctest::Approx(2.5));
  CHECK_FALSE(rep.hypothesis_met);
  CHECK_FALSE(rep.bound_holds);
}

TEST_CASE("query counts depend on the verdict path, never on n") {
  const std::array<std::int64_t, 3> sizes = {10, 80, 400};
  const ProbeReport rep = query_count_probe(1, 0.5, 0.01, sizes, 2718);
  CHECK(rep.ok);
  CHECK(rep.t == 7);
  REQUIRE(rep.rows.size() == 6);
  for (const auto& row : rep.rows) {
    if (row.family == "common-point") {
      CHECK(row.pass);
      CHECK(row.oracle_calls == 7);
      CHECK(row.rounds_run == 7);
    } else {
      CHECK_FALSE(row.pass);
      CHECK(row.oracle_calls == 1);
    }
    CHECK(row.index_reads == 2 * row.rounds_run);
  }
}

TEST_CASE("probe rejects sizes inside the single-check regime") {
  const std::array<std::int64_t, 2> sizes = {10, 3};
  CHECK_THROWS_AS(query_count_probe(2, 0.5, 0.01, sizes, 1), ParamOutOfRange);
}
