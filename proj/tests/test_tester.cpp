#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "helly/errors.hpp"
#include "helly/generators.hpp"
#include "helly/rng.hpp"
#include "helly/tester.hpp"
#include "support/stats.hpp"

using namespace helly;

TEST_CASE("round counts at pinned parameter pairs") {
  CHECK(compute_rounds(0.5, 0.25) == 2);
  CHECK(compute_rounds(0.5, 0.5) == 1);
  CHECK(compute_rounds(0.5, 0.1) == 4);
  CHECK(compute_rounds(0.9, 0.5) == 7);
  CHECK(compute_rounds(0.9, 0.01) == 44);
  CHECK(compute_rounds(0.1, 0.5) == 1);
  CHECK(compute_rounds(0.999, 1e-3) == 6905);
}

TEST_CASE("round count is the least budget meeting the target") {
  Rng rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    double alpha = rng.unit();
    double eps = rng.unit();
    if (alpha <= 0.0 || eps <= 0.0) continue;
    const auto t = compute_rounds(alpha, eps);
    REQUIRE(t >= 1);
    CHECK(std::pow(alpha, static_cast<double>(t)) <= eps);
    if (t > 1) CHECK(std::pow(alpha, static_cast<double>(t - 1)) > eps);
  }
}

TEST_CASE("round count rejects closed-interval endpoints") {
  CHECK_THROWS_AS(compute_rounds(0.0, 0.5), ParamOutOfRange);
  CHECK_THROWS_AS(compute_rounds(1.0, 0.5), ParamOutOfRange);
  CHECK_THROWS_AS(compute_rounds(0.5, 0.0), ParamOutOfRange);
  CHECK_THROWS_AS(compute_rounds(0.5, 1.0), ParamOutOfRange);
  CHECK_THROWS_AS(compute_rounds(-0.1, 0.5), ParamOutOfRange);
}

TEST_CASE("sampled tuples are sorted, distinct, and in range") {
  Rng rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const std::int64_t n = 2 + static_cast<std::int64_t>(rng.below(50));
    const int k = 1 + static_cast<int>(rng.below(
                          static_cast<std::uint64_t>(std::min<std::int64_t>(n, 6))));
    const auto tuple = sample_tuple(n, k, rng);
    REQUIRE(tuple.size() == static_cast<std::size_t>(k));
    CHECK(std::is_sorted(tuple.begin(), tuple.end()));
    CHECK(std::adjacent_find(tuple.begin(), tuple.end()) == tuple.end());
    CHECK(tuple.front() >= 0);
    CHECK(tuple.back() < n);
  }
}

TEST_CASE("tuple sampling validates its arguments") {
  Rng rng(1);
  CHECK_THROWS_AS(sample_tuple(0, 1, rng), ParamOutOfRange);
  CHECK_THROWS_AS(sample_tuple(5, 0, rng), ParamOutOfRange);
  CHECK_THROWS_AS(sample_tuple(3, 4, rng), TupleLargerThanFamily);
}

TEST_CASE("tuple sampling is uniform over subsets") {
  // 6000 draws over the 6 pairs of a 4-element family.
  Rng rng(2024);
  std::map<std::vector<std::int32_t>, long long> counts;
  const long long draws = 6000;
  for (long long i = 0; i < draws; ++i) ++counts[sample_tuple(4, 2, rng)];
  REQUIRE(counts.size() == 6);
  std::vector<long long> flat;
  for (const auto& [k, v] : counts) flat.push_back(v);
  const double p =
      testsupport::chi_square_pvalue(testsupport::uniform_chi2(flat, draws), 5);
  CHECK(p > 1e-3);
}

TEST_CASE("families sharing a point always pass") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Instance inst = gen_common_point(30, 2, derive_seed(9000, seed));
    TesterConfig cfg;
    cfg.alpha = 0.5;
    cfg.epsilon = 0.01;
    cfg.rng_seed = seed;
    cfg.oracle.rng_seed = seed + 1;

    TesterStats stats;
    const Verdict v = run_tester(inst, cfg, stats);
    CHECK(v.pass);
    CHECK(v.tuple_indices.empty());
    const auto t = compute_rounds(cfg.alpha, cfg.epsilon);
    CHECK(v.rounds_run == t);
    CHECK(v.oracle_calls == t);
    CHECK(stats.index_reads == 3 * t);
  }
}

TEST_CASE("pairwise-disjoint families fail in the first round") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Instance inst = gen_pairwise_disjoint(20, 1, derive_seed(9100, seed));
    TesterConfig cfg;
    cfg.rng_seed = seed;

    const Verdict v = run_tester(inst, cfg);
    CHECK_FALSE(v.pass);
    CHECK(v.rounds_run == 1);
    CHECK(v.oracle_calls == 1);
    REQUIRE(v.tuple_indices.size() == 2);

    // The reported tuple really is empty.
    CHECK_FALSE(tuple_feasible(inst, v.tuple_indices, cfg.oracle).feasible);
  }
}

TEST_CASE("failing tuple indices are a valid subset") {
  const Instance inst = gen_pairwise_disjoint(12, 2, 5);
  TesterConfig cfg;
  const Verdict v = run_tester(inst, cfg);
  REQUIRE_FALSE(v.pass);
  CHECK(std::is_sorted(v.tuple_indices.begin(), v.tuple_indices.end()));
  CHECK(v.tuple_indices.front() >= 0);
  CHECK(v.tuple_indices.back() < 12);
  CHECK(std::adjacent_find(v.tuple_indices.begin(), v.tuple_indices.end()) ==
        v.tuple_indices.end());
}

TEST_CASE("families no larger than d+1 get the single deterministic check") {
  TesterConfig cfg;
  cfg.rounds_override = 9;  // ignored outside the sampling regime

  SUBCASE("feasible pair in the plane") {
    Instance inst;
    inst.dimension = 2;
    inst.sets = {Box{{0.0, 0.0}, {2.0, 2.0}}, Box{{1.0, 1.0}, {3.0, 3.0}}};
    TesterStats stats;
    const Verdict v = run_tester(inst, cfg, stats);
    CHECK(v.pass);
    CHECK(v.rounds_run == 1);
    CHECK(v.oracle_calls == 1);
    CHECK(stats.index_reads == 2);
  }
  SUBCASE("infeasible pair reports the whole family") {
    Instance inst;
    inst.dimension = 2;
    inst.sets = {Box{{0.0, 0.0}, {1.0, 1.0}}, Box{{4.0, 4.0}, {5.0, 5.0}}};
    const Verdict v = run_tester(inst, cfg);
    CHECK_FALSE(v.pass);
    CHECK(v.rounds_run == 1);
    CHECK(v.tuple_indices == std::vector<std::int32_t>{0, 1});
  }
}

TEST_CASE("round override widens or narrows the budget") {
  const Instance inst = gen_common_point(20, 1, 3);
  TesterConfig cfg;
  cfg.rounds_override = 5;
  TesterStats stats;
  const Verdict v = run_tester(inst, cfg, stats);
  CHECK(v.pass);
  CHECK(v.rounds_run == 5);
  CHECK(v.oracle_calls == 5);
  CHECK(stats.index_reads == 10);

  cfg.rounds_override = 0;
  CHECK_THROWS_AS(run_tester(inst, cfg), ParamOutOfRange);
}

TEST_CASE("verdicts are reproducible per seed") {
  const Instance inst = gen_calibrated_1d(12, 6, 77);
  TesterConfig cfg;
  cfg.alpha = 0.8;
  cfg.epsilon = 0.3;
  cfg.rng_seed = 4242;
  cfg.oracle.rng_seed = 11;

  const Verdict a = run_tester(inst, cfg);
  const Verdict b = run_tester(inst, cfg);
  CHECK(a.pass == b.pass);
  CHECK(a.rounds_run == b.rounds_run);
  CHECK(a.tuple_indices == b.tuple_indices);
}

TEST_CASE("tester validates instance and parameters") {
  Instance empty;
  empty.dimension = 1;
  CHECK_THROWS_AS(run_tester(empty, TesterConfig{}), EmptyInstance);

  const Instance inst = gen_common_point(5, 1, 1);
  TesterConfig cfg;
  cfg.alpha = 1.0;
  CHECK_THROWS_AS(run_tester(inst, cfg), ParamOutOfRange);
  cfg = TesterConfig{};
  cfg.epsilon = 0.0;
  CHECK_THROWS_AS(run_tester(inst, cfg), ParamOutOfRange);
}

TEST_CASE("pass probability tracks the tuple census on a mixed family") {
  // 6 of 10 intervals share the origin: p = C(6,2)/C(10,2) = 1/3. With one
  // round the pass rate over many seeded runs must sit near p.
  const Instance inst = gen_calibrated_1d(10, 6, 31);
  TesterConfig cfg;
  cfg.rounds_override = 1;

  const int runs = 4000;
  int passes = 0;
  for (int i = 0; i < runs; ++i) {
    cfg.rng_seed = derive_seed(5150, static_cast<std::uint64_t>(i));
    if (run_tester(inst, cfg).pass) ++passes;
  }
  const double p = 15.0 / 45.0;
  const double sigma = std::sqrt(p * (1 - p) / runs);
  CHECK(std::abs(static_cast<double>(passes) / runs - p) < 4 * sigma);
}
