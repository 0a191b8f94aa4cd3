#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polydual/duality.hpp"
#include "polydual/lattice_algebra.hpp"
#include "polydual/weight_system.hpp"

namespace polydual {

/// Raised when a geometric precondition fails (origin not interior, polytope
/// not full-dimensional, dimension out of range).
class GeometryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Full-rank lattice in Q^n given by rational basis rows. The basis is kept
/// in a canonical (Hermite) form so equal lattices have equal bases.
class Lattice {
 public:
  explicit Lattice(const RatMatrix& basis);
  explicit Lattice(const Sublattice& sub);
  static Lattice standard(std::size_t n);

  std::size_t dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }

  /// Dual lattice with respect to the standard pairing: basis (B^-1)^T.
  Lattice dual() const;

  /// y with x = y B.
  RatVector to_coordinates(const RatVector& ambient) const;
  RatVector to_ambient(const RatVector& coordinates) const;
  bool contains(const RatVector& ambient) const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }
  friend bool operator!=(const Lattice& a, const Lattice& b) { return !(a == b); }

 private:
  RatMatrix basis_;
  RatMatrix inverse_;
};

/// Supporting half-space <x, normal> >= -offset in ambient dual coordinates.
struct Facet {
  RatVector normal;
  Rational offset;
};

struct HRep {
  std::vector<Facet> facets;
};

/// Facet in lattice coordinates: <y, normal> >= -offset with a primitive
/// integral normal, and the indices of the vertices on it.
struct CoordinateFacet {
  IntVector normal;
  Rational offset;
  std::vector<std::size_t> vertices;
};

struct Face {
  std::size_t dim = 0;
  std::vector<std::size_t> vertices;  // indices into vertices()
};

/// Convex polytope with rational vertices, referenced to a lattice M.
class LatticePolytope {
 public:
  /// Convex hull of `points` (ambient coordinates). Throws InputError on an
  /// empty set and GeometryError when the ambient dimension is outside 1..4.
  LatticePolytope(Lattice lattice, const std::vector<RatVector>& points);

  const Lattice& lattice() const { return lattice_; }
  std::size_t ambient_dim() const { return lattice_.dim(); }
  /// Dimension of the affine hull.
  std::size_t dimension() const { return dim_; }
  bool is_full_dimensional() const { return dim_ == ambient_dim(); }

  /// Vertices in ambient coordinates, sorted lexicographically.
  const std::vector<RatVector>& vertices() const { return ambient_; }
  /// The same vertices in lattice coordinates.
  const std::vector<RatVector>& vertex_coordinates() const { return coords_; }

  /// Facets in lattice coordinates. For lower-dimensional polytopes these are
  /// the facets relative to the affine hull.
  const std::vector<CoordinateFacet>& coordinate_facets() const { return facets_; }
  /// Faces of every dimension from vertices up to the polytope itself,
  /// ordered by dimension then vertex list.
  const std::vector<Face>& faces() const { return faces_; }
  /// Affine hull equations <y, normal> = value in lattice coordinates; empty
  /// when full-dimensional.
  const std::vector<std::pair<IntVector, Rational>>& equations() const { return equations_; }

  bool is_integral() const;
  bool has_interior_origin() const;
  /// Membership of a point given in lattice coordinates.
  bool contains_coordinates(const RatVector& y) const;
  bool contains_point(const RatVector& ambient) const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.lattice_ == b.lattice_ && a.ambient_ == b.ambient_;
  }

 private:
  Lattice lattice_;
  std::size_t dim_ = 0;
  std::vector<RatVector> coords_;
  std::vector<RatVector> ambient_;
  std::vector<CoordinateFacet> facets_;
  // affine hull equations <y, normal> = value, empty when full-dimensional
  std::vector<std::pair<IntVector, Rational>> equations_;
  std::vector<Face> faces_;
};

LatticePolytope hull(const std::vector<RatVector>& points, const Lattice& lattice);

/// Irredundant H-representation. Throws GeometryError unless full-dimensional.
/// Normals are scaled to offset 1 when the origin is interior.
HRep facets(const LatticePolytope& p);

/// Polar dual in the dual lattice. Throws GeometryError unless the origin is
/// strictly interior.
LatticePolytope polar_dual(const LatticePolytope& p);

struct ReflexivityReport {
  bool reflexive = false;
  bool integral = false;
  bool origin_interior = false;
  /// First facet (in coordinate_facets order) whose dual vertex is not in N.
  std::optional<std::size_t> violating_facet;
  /// No lattice hyperplane strictly between the origin and any facet.
  bool no_intermediate_points = false;
};

/// Throws GeometryError when the origin is not interior or p is not
/// full-dimensional.
ReflexivityReport reflexivity(const LatticePolytope& p);
bool is_reflexive(const LatticePolytope& p);

// The four equivalent characterisations of reflexivity for an integral
// polytope with the origin in its interior. Each returns false for a
// non-integral polytope.
bool reflexive_by_dual_vertices(const LatticePolytope& p);
bool reflexive_by_dual_lattice_points(const LatticePolytope& p);
bool reflexive_by_facet_normals(const LatticePolytope& p);
bool reflexive_by_lattice_distance(const LatticePolytope& p);

struct FaceCount {
  Face face;
  std::size_t points = 0;
  std::size_t interior_points = 0;  // relative interior
};

struct FaceCounts {
  std::vector<FaceCount> faces;  // same order as LatticePolytope::faces()
  std::vector<IntVector> coordinates;  // lattice points, lattice coordinates
  std::vector<RatVector> points;       // the same points, ambient
  std::vector<std::size_t> carrier;    // smallest face containing each point
  std::size_t l = 0;
  std::size_t l_star = 0;  // relative interior of the polytope

  /// Points on faces of dimension <= k.
  std::size_t skeleton(std::size_t k) const;
};

FaceCounts lattice_points(const LatticePolytope& p);
std::size_t skeleton_count(const LatticePolytope& p, std::size_t k);

/// The simplex with vertices (-1 + h/a_i) e_i - 1 and (-1,...,-1) in M(W_a).
/// Throws UnsupportedCaseError unless a_0 > 0.
LatticePolytope weighted_simplex(const WeightSystem& w);

struct GeneratorReport {
  bool skipped_non_reduced = false;
  bool integral = false;      // vertices of the dual simplex lie in N
  bool generates = false;     // and span N
  bool index_matches = false; // [N : Z^n] = |a_0| / gcd(a)
  bool passed() const { return !skipped_non_reduced && integral && generates && index_matches; }
};
GeneratorReport dual_simplex_generators_check(const WeightSystem& w);

/// Hull of all points of M(W_a) in the weighted simplex.
LatticePolytope full_newton_polytope(const WeightSystem& w);

/// Monomials are exponent vectors over X_0..X_n; each becomes the point
/// (m_1 - 1, ..., m_n - 1) of M(W_a). Throws InputError naming any monomial
/// whose weighted degree is not h.
LatticePolytope monomials_to_polytope(const std::vector<Exponents>& monomials, const WeightSystem& w);

/// Throws InvalidLatticeError when the lattices differ.
bool contains(const LatticePolytope& outer, const LatticePolytope& inner);

/// Points of p summing to `target` (ambient, a lattice point of k p).
/// Throws GeometryError for dimension above 3 and InputError when the
/// target is not a lattice point of k p. nullopt means the search failed.
std::optional<std::vector<RatVector>> decompose_point(const LatticePolytope& p, std::size_t k,
                                                      const RatVector& target);

/// A unimodular U (lattice coordinates, y_q = y_p U) carrying the vertex set
/// of p onto that of q.
std::optional<IntMatrix> are_lattice_equivalent(const LatticePolytope& p, const LatticePolytope& q);

/// Image under y -> y U in lattice coordinates.
LatticePolytope apply_unimodular(const LatticePolytope& p, const IntMatrix& u);
/// Image under x -> x A in ambient coordinates, referenced to `target`.
LatticePolytope linear_image(const LatticePolytope& p, const RatMatrix& a, const Lattice& target);
LatticePolytope scale(const LatticePolytope& p, const Rational& factor);
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CorrespondenceReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
};

/// Checks that the square C relates the simplices of W_a and W_b through
/// sigma: beta -> beta B (B = C - 1) and its transpose.
CorrespondenceReport check_dual_correspondence(const WeightSystem& wa, const WeightSystem& wb,
                                               const IntMatrix& c);

std::string to_string(const LatticePolytope& p);

}  // namespace polydual
