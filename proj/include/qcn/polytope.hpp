#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcn/rational.hpp"

namespace qcn {

using IntPoint = std::vector<std::int64_t>;

/// a·x <= b (inequality) or a·x == b (equation), a primitive integer vector.
struct Hyperplane {
  std::vector<std::int64_t> a;
  std::int64_t b = 0;
  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

/// Exact convex hull of integer points via a placing (beneath-beyond)
/// triangulation. Lower-dimensional inputs are hulled inside their affine span.
class Polytope {
 public:
  static Polytope hull(int dim, std::vector<IntPoint> points);

  int ambient_dim() const { return dim_; }
  int affine_dim() const { return affine_dim_; }
  bool empty() const { return vertices_.empty(); }

  /// Irredundant vertices, lexicographically sorted.
  const std::vector<IntPoint>& vertices() const { return vertices_; }
  /// Facet inequalities within the affine span (irredundant, sorted).
  const std::vector<Hyperplane>& facets() const { return facets_; }
  /// Equations cutting out the affine span (empty when full-dimensional).
  const std::vector<Hyperplane>& equalities() const { return equalities_; }

  /// Lebesgue volume in the ambient dimension; 0 for degenerate polytopes.
  const Rational& volume() const { return volume_; }
  /// Number of simplices in the placing triangulation (full-dimensional case).
  std::size_t simplex_count() const { return simplices_; }

  bool contains(const std::vector<Rational>& x) const;
  bool contains(const IntPoint& x) const;

 private:
  int dim_ = 0;
  int affine_dim_ = -1;
  std::vector<IntPoint> vertices_;
  std::vector<Hyperplane> facets_;
  std::vector<Hyperplane> equalities_;
  Rational volume_ = 0;
  std::size_t simplices_ = 0;
};

/// "a1*x1 - x3 <= b"; `names` replaces the default x<c> variable names.
std::string format_hyperplane(const Hyperplane& h, const char* relation,
                              const std::vector<std::string>& names = {});

}  // namespace qcn
