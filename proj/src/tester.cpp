#include "helly/tester.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "helly/errors.hpp"

namespace helly {

std::int64_t compute_rounds(double alpha, double epsilon) {
  if (!(alpha > 0.0 && alpha < 1.0) || !std::isfinite(alpha))
    throw ParamOutOfRange("alpha must lie in (0, 1), got " + std::to_string(alpha));
  if (!(epsilon > 0.0 && epsilon < 1.0) || !std::isfinite(epsilon))
    throw ParamOutOfRange("epsilon must lie in (0, 1), got " + std::to_string(epsilon));

  // ceil(log eps / log alpha), made robust against rounding in the logs: find
  // the smallest t with pow(alpha, t) <= epsilon by bisection around the
  // analytic estimate, then nudge for any local pow non-monotonicity.
  const double est = std::log(epsilon) / std::log(alpha);
  auto ok = [&](std::int64_t t) {
    return std::pow(alpha, static_cast<double>(t)) <= epsilon;
  };

  std::int64_t hi = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::min(std::ceil(est), 4.0e18)));
  while (!ok(hi)) hi = hi * 2 + 1;
  std::int64_t lo = 1;
  while (lo < hi) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (ok(mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  while (lo > 1 && ok(lo - 1)) --lo;
  while (!ok(lo)) ++lo;

  assert(std::pow(alpha, static_cast<double>(lo)) <= epsilon);
  return lo;
}

std::vector<std::int32_t> sample_tuple(std::int64_t n, int k, Rng& rng) {
  if (n < 1) throw ParamOutOfRange("family size must be >= 1");
  if (k < 1) throw ParamOutOfRange("tuple size must be >= 1");
  if (static_cast<std::int64_t>(k) > n)
    throw TupleLargerThanFamily("tuple size " + std::to_string(k) +
                                " exceeds family size " + std::to_string(n));

  // Floyd: for j = n-k .. n-1 draw t in [0, j]; take t unless already taken,
  // else take j. Exactly k draws, uniform over k-subsets.
  std::vector<std::int32_t> out;
  out.reserve(static_cast<std::size_t>(k));
  for (std::int64_t j = n - k; j < n; ++j) {
    auto t = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(j) + 1));
    if (std::find(out.begin(), out.end(), static_cast<std::int32_t>(t)) != out.end())
      out.push_back(static_cast<std::int32_t>(j));
    else
      out.push_back(static_cast<std::int32_t>(t));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Verdict run_tester(const Instance& inst, const TesterConfig& cfg) {
  TesterStats stats;
  return run_tester(inst, cfg, stats);
}

Verdict run_tester(const Instance& inst, const TesterConfig& cfg, TesterStats& stats) {
  if (inst.sets.empty()) throw EmptyInstance("run_tester: instance has no sets");
  if (inst.dimension < 1) throw ParamOutOfRange("run_tester: dimension must be >= 1");
  validate_oracle_config(cfg.oracle);
  if (cfg.rounds_override && *cfg.rounds_override < 1)
    throw ParamOutOfRange("rounds override must be >= 1");

  const std::int64_t rounds =
      cfg.rounds_override ? *cfg.rounds_override : compute_rounds(cfg.alpha, cfg.epsilon);
  const auto n = static_cast<std::int64_t>(inst.sets.size());
  const int d = inst.dimension;
  stats = TesterStats{};

  // Too few sets to sample a (d+1)-tuple properly: one deterministic check of
  // the whole family answers exactly.
  if (n <= static_cast<std::int64_t>(d) + 1) {
    std::vector<std::int32_t> all(static_cast<std::size_t>(n));
    for (std::int64_t i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(i);
    OracleConfig oc = cfg.oracle;
    oc.rng_seed = derive_seed(cfg.oracle.rng_seed, 0);
    FeasibilityOutcome res = tuple_feasible(inst, all, oc);
    stats.rounds_run = 1;
    stats.oracle_calls = 1;
    stats.index_reads = n;

    Verdict v;
    v.pass = res.feasible;
    v.rounds_run = 1;
    v.oracle_calls = 1;
    if (!v.pass) v.tuple_indices = std::move(all);
    return v;
  }

  for (std::int64_t round = 1; round <= rounds; ++round) {
    Rng round_rng(derive_seed(cfg.rng_seed, static_cast<std::uint64_t>(round)));
    std::vector<std::int32_t> idx = sample_tuple(n, d + 1, round_rng);
    stats.index_reads += d + 1;

    OracleConfig oc = cfg.oracle;
    oc.rng_seed = derive_seed(cfg.oracle.rng_seed, static_cast<std::uint64_t>(round));
    FeasibilityOutcome res = tuple_feasible(inst, idx, oc);
    ++stats.oracle_calls;
    stats.rounds_run = round;

    if (!res.feasible) {
      Verdict v;
      v.pass = false;
      v.rounds_run = round;
      v.oracle_calls = round;
      v.tuple_indices = std::move(idx);
      return v;
    }
  }

  Verdict v;
  v.pass = true;
  v.rounds_run = rounds;
  v.oracle_calls = rounds;
  return v;
}

}  // namespace helly
