#include "helly/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "helly/errors.hpp"

namespace helly {

namespace {

void require_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want)
    throw DimensionMismatch(std::string(what) + " has length " + std::to_string(got) +
                            ", expected " + std::to_string(want));
}

double row_violation(const Halfspace& h, const Point& p) {
  require_dim(p.size(), h.a.size(), "point");
  double v = dot(h.a, p) - h.b;
  return std::max(0.0, v / (1.0 + std::abs(h.b)));
}

}  // namespace

double dot(const Vec& a, const Vec& b) {
  require_dim(b.size(), a.size(), "vector");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const Vec& a) {
  double s = 0.0;
  for (double x : a) s += x * x;
  return s;
}

double norm(const Vec& a) { return std::sqrt(norm2(a)); }

double dist(const Vec& a, const Vec& b) {
  require_dim(b.size(), a.size(), "vector");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

int set_dimension(const ConvexSet& s) {
  return std::visit(
      [](const auto& v) -> int {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Halfspace>) {
          return static_cast<int>(v.a.size());
        } else if constexpr (std::is_same_v<T, HPolytope>) {
          if (v.rows.empty()) throw InvalidSet("hpolytope has no rows");
          return static_cast<int>(v.rows.front().a.size());
        } else if constexpr (std::is_same_v<T, Box>) {
          return static_cast<int>(v.lo.size());
        } else {
          return static_cast<int>(v.center.size());
        }
      },
      s);
}

double membership_violation(const ConvexSet& s, const Point& p) {
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Halfspace>) {
          return row_violation(v, p);
        } else if constexpr (std::is_same_v<T, HPolytope>) {
          double worst = 0.0;
          for (const auto& r : v.rows) worst = std::max(worst, row_violation(r, p));
          return worst;
        } else if constexpr (std::is_same_v<T, Box>) {
          require_dim(p.size(), v.lo.size(), "point");
          double worst = 0.0;
          for (std::size_t k = 0; k < p.size(); ++k) {
            worst = std::max(worst, v.lo[k] - p[k]);
            worst = std::max(worst, p[k] - v.hi[k]);
          }
          return worst;
        } else {
          require_dim(p.size(), v.center.size(), "point");
          return std::max(0.0, dist(p, v.center) - v.radius);
        }
      },
      s);
}

bool contains(const ConvexSet& s, const Point& p, double tol) {
  return membership_violation(s, p) <= tol;
}

Point project(const ConvexSet& s, const Point& p) {
  return std::visit(
      [&](const auto& v) -> Point {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Halfspace>) {
          require_dim(p.size(), v.a.size(), "point");
          double viol = dot(v.a, p) - v.b;
          if (viol <= 0.0) return p;
          double nn = norm2(v.a);
          if (nn <= 0.0) throw InvalidSet("halfspace normal is zero");
          Point out = p;
          double scale = viol / nn;
          for (std::size_t k = 0; k < out.size(); ++k) out[k] -= v.a[k] * scale;
          return out;
        } else if constexpr (std::is_same_v<T, HPolytope>) {
          throw InvalidSet("hpolytope projection has no closed form; use its rows");
        } else if constexpr (std::is_same_v<T, Box>) {
          require_dim(p.size(), v.lo.size(), "point");
          Point out = p;
          for (std::size_t k = 0; k < out.size(); ++k)
            out[k] = std::clamp(out[k], v.lo[k], v.hi[k]);
          return out;
        } else {
          require_dim(p.size(), v.center.size(), "point");
          double d = dist(p, v.center);
          if (d <= v.radius) return p;
          Point out = v.center;
          double scale = v.radius / d;  // d > 0 here since radius >= 0
          for (std::size_t k = 0; k < out.size(); ++k)
            out[k] += (p[k] - v.center[k]) * scale;
          return out;
        }
      },
      s);
}

std::optional<std::vector<Halfspace>> linear_constraints(const ConvexSet& s) {
  return std::visit(
      [](const auto& v) -> std::optional<std::vector<Halfspace>> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Halfspace>) {
          return std::vector<Halfspace>{v};
        } else if constexpr (std::is_same_v<T, HPolytope>) {
          return v.rows;
        } else if constexpr (std::is_same_v<T, Box>) {
          // Per coordinate k: -x_k <= -lo_k, then x_k <= hi_k.
          const int d = static_cast<int>(v.lo.size());
          std::vector<Halfspace> rows;
          rows.reserve(2 * static_cast<std::size_t>(d));
          for (int k = 0; k < d; ++k) {
            Halfspace low;
            low.a.assign(d, 0.0);
            low.a[k] = -1.0;
            low.b = -v.lo[k];
            rows.push_back(std::move(low));
            Halfspace high;
            high.a.assign(d, 0.0);
            high.a[k] = 1.0;
            high.b = v.hi[k];
            rows.push_back(std::move(high));
          }
          return rows;
        } else {
          return std::nullopt;
        }
      },
      s);
}

namespace {

bool all_finite(const Vec& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

void validate_set(const ConvexSet& s, int d, std::size_t idx) {
  const std::string where = "set " + std::to_string(idx);
  if (set_dimension(s) != d)
    throw DimensionMismatch(where + " lives in dimension " +
                            std::to_string(set_dimension(s)) + ", instance has " +
                            std::to_string(d));
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Halfspace>) {
          if (!all_finite(v.a) || !std::isfinite(v.b))
            throw InvalidSet(where + ": non-finite halfspace data");
          if (norm2(v.a) == 0.0) throw InvalidSet(where + ": halfspace normal is zero");
        } else if constexpr (std::is_same_v<T, HPolytope>) {
          if (v.rows.empty()) throw InvalidSet(where + ": hpolytope has no rows");
          if (static_cast<int>(v.rows.size()) > max_polytope_rows(d))
            throw InvalidSet(where + ": hpolytope has " + std::to_string(v.rows.size()) +
                             " rows, cap is " + std::to_string(max_polytope_rows(d)));
          for (const auto& r : v.rows) {
            if (static_cast<int>(r.a.size()) != d)
              throw DimensionMismatch(where + ": polytope row of length " +
                                      std::to_string(r.a.size()));
            if (!all_finite(r.a) || !std::isfinite(r.b))
              throw InvalidSet(where + ": non-finite polytope row");
            if (norm2(r.a) == 0.0) throw InvalidSet(where + ": polytope row normal is zero");
          }
        } else if constexpr (std::is_same_v<T, Box>) {
          if (!all_finite(v.lo) || !all_finite(v.hi))
            throw InvalidSet(where + ": non-finite box data");
          for (std::size_t k = 0; k < v.lo.size(); ++k)
            if (v.lo[k] > v.hi[k])
              throw InvalidSet(where + ": box has lo > hi in coordinate " + std::to_string(k));
        } else {
          if (!all_finite(v.center) || !std::isfinite(v.radius))
            throw InvalidSet(where + ": non-finite ball data");
          if (v.radius < 0.0) throw InvalidSet(where + ": ball radius is negative");
        }
      },
      s);
}

}  // namespace

std::vector<std::string> validate_instance(const Instance& inst) {
  if (inst.dimension < 1)
    throw ParamOutOfRange("instance dimension must be >= 1, got " +
                          std::to_string(inst.dimension));
  if (inst.sets.empty()) throw EmptyInstance("instance has no sets");
  for (std::size_t i = 0; i < inst.sets.size(); ++i) validate_set(inst.sets[i], inst.dimension, i);

  std::vector<std::string> warnings;
  if (inst.sets.size() <= static_cast<std::size_t>(inst.dimension)) {
    warnings.push_back("instance has n = " + std::to_string(inst.sets.size()) +
                       " sets in dimension " + std::to_string(inst.dimension) +
                       "; the sampling regime expects n > d");
  }
  return warnings;
}

}  // namespace helly
