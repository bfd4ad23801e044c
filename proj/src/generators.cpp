#include "helly/generators.hpp"

#include <algorithm>
#include <cmath>

#include "helly/errors.hpp"
#include "helly/feasibility.hpp"
#include "helly/rng.hpp"

namespace helly {

namespace {

Vec unit_vector(Rng& rng, int d) {
  Vec a(static_cast<std::size_t>(d));
  while (true) {
    for (auto& x : a) x = rng.normal();
    double nn = norm(a);
    if (nn > 1e-6) {
      for (auto& x : a) x /= nn;
      return a;
    }
  }
}

void require_positive_n(std::int64_t n) {
  if (n < 1) throw ParamOutOfRange("generator requires n >= 1");
}

void require_dim(int d) {
  if (d < 1) throw ParamOutOfRange("generator requires d >= 1");
}

}  // namespace

Instance gen_common_point(std::int64_t n, int d, std::uint64_t seed, Point* anchor_out) {
  require_positive_n(n);
  require_dim(d);
  Rng rng(seed);

  Point anchor(static_cast<std::size_t>(d));
  for (auto& x : anchor) x = rng.uniform(-5.0, 5.0);
  if (anchor_out) *anchor_out = anchor;

  Instance inst;
  inst.dimension = d;
  inst.sets.reserve(static_cast<std::size_t>(n));

  for (std::int64_t i = 0; i < n; ++i) {
    // Interior margin around the anchor. The contract only promises 0.05;
    // drawing it large keeps the projection path far from its slow regime.
    const double margin = rng.uniform(0.3, 1.2);
    switch (rng.below(4)) {
      case 0: {
        Halfspace h;
        h.a = unit_vector(rng, d);
        h.b = dot(h.a, anchor) + margin;
        inst.sets.emplace_back(std::move(h));
        break;
      }
      case 1: {
        HPolytope poly;
        const auto nrows = static_cast<int>(3 + rng.below(4));
        poly.rows.reserve(static_cast<std::size_t>(nrows));
        for (int r = 0; r < nrows; ++r) {
          Halfspace row;
          row.a = unit_vector(rng, d);
          row.b = dot(row.a, anchor) + rng.uniform(margin, margin + 1.5);
          poly.rows.push_back(std::move(row));
        }
        inst.sets.emplace_back(std::move(poly));
        break;
      }
      case 2: {
        Box box;
        box.lo.resize(static_cast<std::size_t>(d));
        box.hi.resize(static_cast<std::size_t>(d));
        for (int k = 0; k < d; ++k) {
          box.lo[static_cast<std::size_t>(k)] =
              anchor[static_cast<std::size_t>(k)] - (margin + rng.uniform(0.0, 2.5));
          box.hi[static_cast<std::size_t>(k)] =
              anchor[static_cast<std::size_t>(k)] + (margin + rng.uniform(0.0, 2.5));
        }
        inst.sets.emplace_back(std::move(box));
        break;
      }
      default: {
        Ball ball;
        ball.radius = margin + rng.uniform(0.2, 2.0);
        Vec dir = unit_vector(rng, d);
        const double shift = rng.uniform(0.0, ball.radius - margin);
        ball.center = anchor;
        for (int k = 0; k < d; ++k) ball.center[static_cast<std::size_t>(k)] += dir[static_cast<std::size_t>(k)] * shift;
        inst.sets.emplace_back(std::move(ball));
        break;
      }
    }
  }
  return inst;
}

Instance gen_pairwise_disjoint(std::int64_t n, int d, std::uint64_t seed) {
  require_positive_n(n);
  require_dim(d);
  Rng rng(seed);

  // Per-axis cell count: smallest m with m^d >= n.
  std::int64_t per_axis = 1;
  while (true) {
    std::int64_t cells = 1;
    bool enough = false;
    for (int k = 0; k < d; ++k) {
      cells *= per_axis;
      if (cells >= n) {
        enough = true;
        break;
      }
    }
    if (enough || per_axis >= n) break;
    ++per_axis;
  }

  // Unit boxes, lattice pitch 1.7, jitter up to 0.1 per side: worst-case gap
  // 1.7 - 1.0 - 2*0.1 = 0.5.
  const double pitch = 1.7;
  const double half_extent = (static_cast<double>(per_axis - 1) * pitch) / 2.0;

  Instance inst;
  inst.dimension = d;
  inst.sets.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    std::int64_t rem = i;
    Box box;
    box.lo.resize(static_cast<std::size_t>(d));
    box.hi.resize(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
      const auto cell = rem % per_axis;
      rem /= per_axis;
      const double center = static_cast<double>(cell) * pitch - half_extent +
                            rng.uniform(-0.1, 0.1);
      box.lo[static_cast<std::size_t>(k)] = center - 0.5;
      box.hi[static_cast<std::size_t>(k)] = center + 0.5;
    }
    inst.sets.emplace_back(std::move(box));
  }
  return inst;
}

Instance gen_calibrated_1d(std::int64_t n, std::int64_t k, std::uint64_t seed) {
  require_positive_n(n);
  if (k < 0 || k > n)
    throw ParamOutOfRange("calibrated family requires 0 <= k <= n, got k = " +
                          std::to_string(k));
  Rng rng(seed);

  std::vector<ConvexSet> sets;
  sets.reserve(static_cast<std::size_t>(n));

  // k intervals holding the origin with margin >= 0.5 on both sides.
  for (std::int64_t i = 0; i < k; ++i) {
    Box b;
    b.lo = {-rng.uniform(0.5, 5.0)};
    b.hi = {rng.uniform(0.5, 5.0)};
    sets.emplace_back(std::move(b));
  }

  // n-k pairwise-disjoint intervals well to the right of every origin
  // interval. Slots shrink to fit inside [6, 10] but never below 0.025, so
  // the inter-interval gap stays >= 0.2 * slot = 0.005 in the extreme and
  // >= 0.04 at calibration scales.
  const std::int64_t rest = n - k;
  if (rest > 0) {
    const double slot = std::max(4.0 / static_cast<double>(rest), 0.025);
    for (std::int64_t j = 0; j < rest; ++j) {
      const double start =
          6.0 + static_cast<double>(j) * slot + rng.uniform(0.0, 0.2 * slot);
      Box b;
      b.lo = {start};
      b.hi = {start + 0.6 * slot};
      sets.emplace_back(std::move(b));
    }
  }

  for (std::size_t i = sets.size(); i > 1; --i)
    std::swap(sets[i - 1], sets[rng.below(i)]);

  Instance inst;
  inst.dimension = 1;
  inst.sets = std::move(sets);
  return inst;
}

namespace {

ConvexSet random_linear_set(Rng& rng, int d) {
  switch (rng.below(3)) {
    case 0: {
      Box box;
      box.lo.resize(static_cast<std::size_t>(d));
      box.hi.resize(static_cast<std::size_t>(d));
      for (int k = 0; k < d; ++k) {
        const double center = rng.uniform(-6.0, 6.0);
        const double half = rng.uniform(0.3, 3.0);
        box.lo[static_cast<std::size_t>(k)] = center - half;
        box.hi[static_cast<std::size_t>(k)] = center + half;
      }
      return box;
    }
    case 1: {
      Halfspace h;
      h.a = unit_vector(rng, d);
      Vec through(static_cast<std::size_t>(d));
      for (auto& x : through) x = rng.uniform(-6.0, 6.0);
      h.b = dot(h.a, through) + rng.uniform(-2.0, 2.0);
      return h;
    }
    default: {
      HPolytope poly;
      Vec center(static_cast<std::size_t>(d));
      for (auto& x : center) x = rng.uniform(-6.0, 6.0);
      const auto nrows = static_cast<int>(d + 1 + rng.below(3));
      poly.rows.reserve(static_cast<std::size_t>(nrows));
      for (int r = 0; r < nrows; ++r) {
        Halfspace row;
        row.a = unit_vector(rng, d);
        row.b = dot(row.a, center) + rng.uniform(0.3, 2.0);
        poly.rows.push_back(std::move(row));
      }
      return poly;
    }
  }
}

}  // namespace

Instance gen_random_linear(std::int64_t n, int d, std::uint64_t seed) {
  require_positive_n(n);
  if (d < 1 || d > 3)
    throw ParamOutOfRange("random linear generator supports d in {1, 2, 3}");
  Rng rng(seed);

  Instance inst;
  inst.dimension = d;
  inst.sets.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) inst.sets.push_back(random_linear_set(rng, d));

  // Degeneracy rejection: every subfamily of size <= d+1 must clear a
  // two-sided phase-1 margin. A row system's optimum over any larger
  // subfamily is the max over its (d+1)-row subsystems, so clean small
  // subfamilies keep every depth/census decision away from tolerance edges.
  OracleConfig probe;
  probe.rng_seed = derive_seed(seed, 0xACCE55);
  const double kMargin = 1e-2;
  const int tuple_cap = std::min<int>(static_cast<int>(n), d + 1);

  std::vector<std::int32_t> idx;
  std::vector<Halfspace> rows;
  int budget = 4000;

  auto subset_margin_ok = [&](const std::vector<std::int32_t>& subset) {
    rows.clear();
    for (std::int32_t i : subset) {
      auto lc = linear_constraints(inst.sets[static_cast<std::size_t>(i)]);
      rows.insert(rows.end(), lc->begin(), lc->end());
    }
    return std::abs(phase1_margin(rows, d, probe)) >= kMargin;
  };

  // Walk subset sizes 1..d+1; on a near-tangent subset resample one of its
  // members and start the scan over.
restart:
  for (int size = 1; size <= tuple_cap; ++size) {
    idx.assign(static_cast<std::size_t>(size), 0);
    for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
      if (!subset_margin_ok(idx)) {
        if (--budget < 0)
          throw Error("random linear generator failed to reach margin separation");
        const auto victim =
            idx[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(size)))];
        inst.sets[static_cast<std::size_t>(victim)] = random_linear_set(rng, d);
        goto restart;
      }
      int pos = size - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] ==
                             static_cast<std::int32_t>(n - size + pos))
        --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int j = pos + 1; j < size; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return inst;
}

Instance generate(const GenSpec& spec) {
  switch (spec.kind) {
    case GenKind::CommonPoint:
      return gen_common_point(spec.n, spec.d, spec.seed);
    case GenKind::PairwiseDisjoint:
      return gen_pairwise_disjoint(spec.n, spec.d, spec.seed);
    case GenKind::Calibrated1D:
      if (spec.k < 0)
        throw ParamOutOfRange("calibrated family requires k >= 0");
      return gen_calibrated_1d(spec.n, spec.k, spec.seed);
    case GenKind::RandomLinear:
      return gen_random_linear(spec.n, spec.d, spec.seed);
  }
  throw ParamOutOfRange("unknown generator kind");
}

}  // namespace helly
