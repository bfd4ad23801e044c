#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace helly {

using Vec = std::vector<double>;
using Point = Vec;

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);
double norm(const Vec& a);
double dist(const Vec& a, const Vec& b);

// The halfspace a.x <= b. Also doubles as a single linear row elsewhere.
struct Halfspace {
  Vec a;
  double b = 0.0;
  bool operator==(const Halfspace&) const = default;
};

// Intersection of finitely many halfspace rows. May be empty; at least one
// row is required so the embedded dimension is well defined.
struct HPolytope {
  std::vector<Halfspace> rows;
  bool operator==(const HPolytope&) const = default;
};

// Axis-aligned box, the product of [lo_k, hi_k]. lo_k == hi_k is allowed.
struct Box {
  Vec lo, hi;
  bool operator==(const Box&) const = default;
};

// Closed Euclidean ball. radius == 0 is a point.
struct Ball {
  Vec center;
  double radius = 0.0;
  bool operator==(const Ball&) const = default;
};

using ConvexSet = std::variant<Halfspace, HPolytope, Box, Ball>;

// Dimension embedded in the set's defining data.
int set_dimension(const ConvexSet& s);

// Per-set row budget: a fixed function of the dimension only, so the work a
// single set can demand from the oracle never depends on the family size.
constexpr int max_polytope_rows(int d) { return 64 * d; }

// Violation of membership, >= 0, and 0 exactly when p lies in the set.
// Halfspace rows measure (a.x - b) / (1 + |b|); boxes and balls measure
// plain Euclidean/coordinate excess. contains() compares this against tol,
// so the two stay consistent by construction.
double membership_violation(const ConvexSet& s, const Point& p);

bool contains(const ConvexSet& s, const Point& p, double tol);

// Euclidean nearest point, closed form. Defined for halfspace, box and ball;
// an HPolytope has no closed-form projection and throws InvalidSet (callers
// that need polytopes work on their rows instead).
Point project(const ConvexSet& s, const Point& p);

// The set as halfspace rows: identity for a halfspace, the row list for a
// polytope, 2d rows for a box. nullopt for a ball.
std::optional<std::vector<Halfspace>> linear_constraints(const ConvexSet& s);

struct Instance {
  int dimension = 0;
  std::vector<ConvexSet> sets;
  bool operator==(const Instance&) const = default;
};

// Throws on hard invariant violations (bad dimensions, zero normals,
// inverted boxes, negative radii, non-finite data, oversized polytopes).
// Returns warnings for legal-but-degenerate inputs, e.g. n <= d where the
// sampling regime loses its meaning.
std::vector<std::string> validate_instance(const Instance& inst);

}  // namespace helly
