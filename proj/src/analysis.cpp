#include "helly/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "helly/errors.hpp"
#include "helly/rng.hpp"

namespace helly {

std::uint64_t binomial_capped(std::int64_t n, int q, std::uint64_t cap) {
  if (n < 0 || q < 0 || static_cast<std::int64_t>(q) > n)
    throw ParamOutOfRange("binomial requires 0 <= q <= n");
  // r * (n-q+i) / i stays integral at every step.
  unsigned __int128 r = 1;
  for (int i = 1; i <= q; ++i) {
    r = r * static_cast<unsigned __int128>(n - q + i);
    r = r / static_cast<unsigned __int128>(i);
    if (r > cap)
      throw EnumerationTooLarge("C(" + std::to_string(n) + ", " + std::to_string(q) +
                                ") exceeds cap " + std::to_string(cap));
  }
  return static_cast<std::uint64_t>(r);
}

namespace {

// Lexicographic combinations of size q over [0, n). The visitor may return
// false to stop early.
template <typename F>
void for_each_combination(std::int64_t n, int q, F&& visit) {
  std::vector<std::int32_t> idx(static_cast<std::size_t>(q));
  for (int i = 0; i < q; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (!visit(idx)) return;
    int pos = q - 1;
    while (pos >= 0 &&
           idx[static_cast<std::size_t>(pos)] == static_cast<std::int32_t>(n - q + pos))
      --pos;
    if (pos < 0) return;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < q; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

TupleCensus count_intersecting_tuples(const Instance& inst, int q,
                                      const OracleConfig& cfg, std::uint64_t cap) {
  const auto n = static_cast<std::int64_t>(inst.sets.size());
  if (n == 0) throw EmptyInstance("census: instance has no sets");
  if (q < 1 || static_cast<std::int64_t>(q) > n)
    throw ParamOutOfRange("census requires 1 <= q <= n, got q = " + std::to_string(q));

  TupleCensus census;
  census.q = q;
  census.total = binomial_capped(n, q, cap);

  std::uint64_t ordinal = 0;
  for_each_combination(n, q, [&](const std::vector<std::int32_t>& idx) {
    OracleConfig oc = cfg;
    oc.rng_seed = derive_seed(cfg.rng_seed, ordinal++);
    if (tuple_feasible(inst, idx, oc).feasible) ++census.intersecting;
    return true;
  });
  census.fraction =
      static_cast<double>(census.intersecting) / static_cast<double>(census.total);
  return census;
}

namespace {

// Depth-first enumeration of q-subsets whose members are pairwise compatible,
// in lexicographic order. compat is an adjacency bitmask per element.
bool find_feasible_subset(const Instance& inst, const OracleConfig& cfg,
                          const std::vector<std::uint32_t>& compat, int q,
                          std::vector<std::int32_t>& chosen, std::int32_t from,
                          std::uint32_t allowed, std::uint64_t& ordinal) {
  const auto n = static_cast<std::int32_t>(inst.sets.size());
  if (static_cast<int>(chosen.size()) == q) {
    OracleConfig oc = cfg;
    oc.rng_seed = derive_seed(cfg.rng_seed, ordinal++);
    return tuple_feasible(inst, chosen, oc).feasible;
  }
  const int need = q - static_cast<int>(chosen.size());
  for (std::int32_t i = from; n - i >= need; ++i) {
    if (!(allowed & (1u << i))) continue;
    chosen.push_back(i);
    const std::uint32_t next_allowed = allowed & compat[static_cast<std::size_t>(i)];
    if (find_feasible_subset(inst, cfg, compat, q, chosen, i + 1, next_allowed, ordinal))
      return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

DepthResult depth_bruteforce(const Instance& inst, const OracleConfig& cfg, int max_n) {
  const auto n = static_cast<std::int64_t>(inst.sets.size());
  if (n == 0) throw EmptyInstance("depth: instance has no sets");
  max_n = std::min(max_n, 31);  // compatibility masks are 32-bit
  if (n > max_n)
    throw EnumerationTooLarge("depth enumeration limited to " + std::to_string(max_n) +
                              " sets, got " + std::to_string(n));

  const auto nn = static_cast<std::int32_t>(n);
  std::uint64_t ordinal = 0;

  std::vector<bool> single(static_cast<std::size_t>(nn));
  for (std::int32_t i = 0; i < nn; ++i) {
    std::vector<std::int32_t> one{i};
    OracleConfig oc = cfg;
    oc.rng_seed = derive_seed(cfg.rng_seed, ordinal++);
    single[static_cast<std::size_t>(i)] = tuple_feasible(inst, one, oc).feasible;
  }

  // Pairwise compatibility masks drive all pruning above level 2.
  std::vector<std::uint32_t> compat(static_cast<std::size_t>(nn), 0);
  for (std::int32_t i = 0; i < nn; ++i) {
    if (!single[static_cast<std::size_t>(i)]) continue;
    for (std::int32_t j = i + 1; j < nn; ++j) {
      if (!single[static_cast<std::size_t>(j)]) continue;
      std::vector<std::int32_t> pair{i, j};
      OracleConfig oc = cfg;
      oc.rng_seed = derive_seed(cfg.rng_seed, ordinal++);
      if (tuple_feasible(inst, pair, oc).feasible) {
        compat[static_cast<std::size_t>(i)] |= (1u << j);
        compat[static_cast<std::size_t>(j)] |= (1u << i);
      }
    }
  }

  const std::uint32_t everyone = (nn == 31) ? 0x7fffffffu : ((1u << nn) - 1u);
  for (int q = static_cast<int>(nn); q >= 2; --q) {
    std::vector<std::int32_t> chosen;
    chosen.reserve(static_cast<std::size_t>(q));
    if (find_feasible_subset(inst, cfg, compat, q, chosen, 0, everyone, ordinal)) {
      DepthResult res;
      res.depth = q;
      res.witness_subset = std::move(chosen);
      return res;
    }
  }

  for (std::int32_t i = 0; i < nn; ++i)
    if (single[static_cast<std::size_t>(i)]) return DepthResult{1, {i}};
  return DepthResult{0, {}};
}

double fractional_bound(double alpha, int q, int d) {
  if (d < 1) throw ParamOutOfRange("fractional bound requires d >= 1");
  if (q <= d) throw ParamOutOfRange("fractional bound requires q > d");
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw ParamOutOfRange("fractional bound requires alpha in (0, 1]");
  const double choose_qd =
      static_cast<double>(binomial_capped(q, d, 1000000000000000000ull));
  return std::pow(alpha / choose_qd, 1.0 / static_cast<double>(q - d));
}

CorollaryReport verify_corollary(const Instance& inst, double alpha,
                                 const OracleConfig& cfg) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw ParamOutOfRange("corollary check requires alpha in (0, 1]");
  const auto n = static_cast<std::int64_t>(inst.sets.size());
  const int d = inst.dimension;

  CorollaryReport rep;
  rep.alpha = alpha;
  rep.census = count_intersecting_tuples(inst, d + 1, cfg);
  rep.depth = depth_bruteforce(inst, cfg).depth;
  rep.depth_threshold = alpha / static_cast<double>(d + 1) * static_cast<double>(n);
  rep.hypothesis_holds = static_cast<double>(rep.depth) < rep.depth_threshold;
  rep.conclusion_holds = rep.census.fraction < alpha;
  rep.violation = rep.hypothesis_holds && !rep.conclusion_holds;
  return rep;
}

}  // namespace helly
