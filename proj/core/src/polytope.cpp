#include "polydual/polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "polydual/monomial.hpp"

namespace polydual {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

// ---- scalar helpers shared by the int128 and GMP hull kernels ----

i128 zabs(i128 v) { return v < 0 ? -v : v; }
i128 zgcd(i128 a, i128 b) {
  a = zabs(a);
  b = zabs(b);
  while (b != 0) {
    const i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}
Integer zgcd(const Integer& a, const Integer& b) { return gcd(a, b); }
i128 zdiv(i128 a, i128 b) { return a / b; }
Integer zdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
Integer to_big(i128 v) {
  const bool neg = v < 0;
  u128 u = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  Integer out = 0;
  Integer place = 1;
  while (u != 0) {
    out += place * static_cast<unsigned long>(u % 1000000000u);
    place *= 1000000000u;
    u /= 1000000000u;
  }
  return neg ? Integer(-out) : out;
}
Integer to_big(const Integer& v) { return v; }

template <typename Z>
Z small_det(const std::vector<std::vector<Z>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Z(1);
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  Z total(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Z>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Z> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    const Z term = m[0][j] * small_det(minor);
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

struct CoreFacet {
  std::vector<Integer> normal;
  Integer level;  // <p, normal> >= level for all p
  std::vector<std::size_t> points;
};

struct CoreHull {
  std::vector<std::size_t> vertices;  // indices into the input
  std::vector<CoreFacet> facets;
};

// Facets of the hull of distinct integer points spanning Z^d, found by
// testing the hyperplane through every d-subset.
template <typename Z>
CoreHull hull_kernel(const std::vector<std::vector<Z>>& pts, std::size_t d) {
  const std::size_t m = pts.size();
  struct Found {
    std::vector<Z> normal;
    Z level;
    std::vector<char> on;
  };
  std::vector<Found> found;
  std::vector<std::size_t> pick(d);
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<Z> values(m);
  for (;;) {
    bool known = false;
    for (const auto& f : found) {
      bool all = true;
      for (auto i : pick) all = all && f.on[i];
      if (all) {
        known = true;
        break;
      }
    }
    if (!known) {
      std::vector<Z> normal(d);
      bool nonzero = false;
      for (std::size_t j = 0; j < d; ++j) {
        std::vector<std::vector<Z>> minor;
        for (std::size_t r = 1; r < d; ++r) {
          std::vector<Z> row;
          for (std::size_t k = 0; k < d; ++k)
            if (k != j) row.push_back(pts[pick[r]][k] - pts[pick[0]][k]);
          minor.push_back(std::move(row));
        }
        normal[j] = small_det(minor);
        if (j % 2 == 1) normal[j] = -normal[j];
        if (normal[j] != 0) nonzero = true;
      }
      if (nonzero) {
        Z g(0);
        for (const auto& v : normal) g = zgcd(g, v);
        for (auto& v : normal) v = zdiv(v, g);
        Z lo(0), hi(0);
        for (std::size_t t = 0; t < m; ++t) {
          Z s(0);
          for (std::size_t k = 0; k < d; ++k) s += pts[t][k] * normal[k];
          values[t] = s;
          if (t == 0 || s < lo) lo = s;
          if (t == 0 || s > hi) hi = s;
        }
        const Z base = values[pick[0]];
        if (base == lo || base == hi) {
          Found f;
          if (base == hi) {
            for (auto& v : normal) v = -v;
          }
          f.normal = std::move(normal);
          f.level = base == lo ? base : Z(-base);
          f.on.assign(m, 0);
          for (std::size_t t = 0; t < m; ++t) f.on[t] = values[t] == base;
          found.push_back(std::move(f));
        }
      }
    }
    std::size_t i = d;
    while (i > 0 && pick[i - 1] == m - d + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }

  CoreHull out;
  for (std::size_t t = 0; t < m; ++t) {
    // t is a vertex iff no other point lies on every facet through t
    std::size_t companions = 0;
    for (std::size_t u = 0; u < m; ++u) {
      bool shared = true;
      for (const auto& f : found)
        if (f.on[t] && !f.on[u]) {
          shared = false;
          break;
        }
      if (shared) ++companions;
    }
    if (companions == 1) out.vertices.push_back(t);
  }
  for (const auto& f : found) {
    CoreFacet cf;
    for (const auto& v : f.normal) cf.normal.push_back(to_big(v));
    cf.level = to_big(f.level);
    for (std::size_t t = 0; t < m; ++t)
      if (f.on[t]) cf.points.push_back(t);
    out.facets.push_back(std::move(cf));
  }
  return out;
}

CoreHull hull_of(const std::vector<RatVector>& pts, std::size_t d, Integer& scale) {
  scale = 1;
  for (const auto& p : pts) scale = lcm(scale, lcm_of_denominators(p));
  Integer bound = 0;
  std::vector<IntVector> scaled;
  for (const auto& p : pts) {
    IntVector row;
    for (const auto& v : p) {
      const Rational s = v * scale;
      row.push_back(s.get_num());
      bound = std::max(bound, Integer(abs(s.get_num())));
    }
    scaled.push_back(std::move(row));
  }
  if (bound < Integer(1 << 24)) {
    std::vector<std::vector<i128>> small;
    for (const auto& row : scaled) {
      std::vector<i128> r;
      for (const auto& v : row) r.push_back(v.get_si());
      small.push_back(std::move(r));
    }
    return hull_kernel(small, d);
  }
  return hull_kernel(scaled, d);
}

Rational rational_content(const RatVector& v) {
  Integer num = 0;
  Integer den = 1;
  for (const auto& x : v) {
    num = gcd(num, x.get_num());
    den = lcm(den, x.get_den());
  }
  return ratio(num, den);
}

std::size_t affine_rank(const std::vector<RatVector>& pts, const std::vector<std::size_t>& idx) {
  if (idx.size() <= 1) return 0;
  RatMatrix d(idx.size() - 1, pts[idx[0]].size());
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) d(i - 1, j) = pts[idx[i]][j] - pts[idx[0]][j];
  return rank(d);
}

std::int64_t narrow64(const Integer& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("coordinate too large: " + v.get_str());
  return v.get_si();
}

// Facets and equations as machine integers: den * <y, normal> + num >= 0.
struct FastConstraints {
  std::vector<std::vector<std::int64_t>> normals;
  std::vector<std::int64_t> num, den;
  std::vector<std::vector<std::int64_t>> eq_normals;
  std::vector<std::int64_t> eq_num, eq_den;

  explicit FastConstraints(const LatticePolytope& p, const std::vector<std::pair<IntVector, Rational>>& eqs) {
    for (const auto& f : p.coordinate_facets()) {
      std::vector<std::int64_t> z;
      for (const auto& v : f.normal) z.push_back(narrow64(v));
      normals.push_back(std::move(z));
      num.push_back(narrow64(f.offset.get_num()));
      den.push_back(narrow64(f.offset.get_den()));
    }
    for (const auto& [e, value] : eqs) {
      std::vector<std::int64_t> z;
      for (const auto& v : e) z.push_back(narrow64(v));
      eq_normals.push_back(std::move(z));
      eq_num.push_back(narrow64(value.get_num()));
      eq_den.push_back(narrow64(value.get_den()));
    }
  }

  static i128 dot(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& y) {
    i128 s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += static_cast<i128>(a[k]) * y[k];
    return s;
  }

  // membership in scale * P
  bool inside(const std::vector<std::int64_t>& y, std::int64_t scale = 1) const {
    for (std::size_t e = 0; e < eq_normals.size(); ++e)
      if (dot(eq_normals[e], y) * eq_den[e] != static_cast<i128>(eq_num[e]) * scale) return false;
    for (std::size_t f = 0; f < normals.size(); ++f)
      if (dot(normals[f], y) * den[f] + static_cast<i128>(num[f]) * scale < 0) return false;
    return true;
  }
  bool tight(std::size_t f, const std::vector<std::int64_t>& y) const {
    return dot(normals[f], y) * den[f] + num[f] == 0;
  }
};

}  // namespace

// ---------------------------------------------------------------- Lattice

Lattice::Lattice(const RatMatrix& basis) {
  if (!basis.is_square() || basis.rows() == 0) throw InvalidLatticeError("lattice basis must be square");
  Integer scale = 1;
  for (std::size_t i = 0; i < basis.rows(); ++i) scale = lcm(scale, lcm_of_denominators(basis.row(i)));
  IntMatrix integral(basis.rows(), basis.cols());
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (std::size_t j = 0; j < basis.cols(); ++j) {
      const Rational s = basis(i, j) * scale;
      integral(i, j) = s.get_num();
    }
  if (det(integral) == 0) throw InvalidLatticeError("lattice basis is singular");
  const IntMatrix h = hnf(integral).h;
  basis_ = RatMatrix(h.rows(), h.cols());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) basis_(i, j) = ratio(h(i, j), scale);
  inverse_ = *inverse(basis_);
}

Lattice::Lattice(const Sublattice& sub) : Lattice(to_rational(sub.basis())) {}

Lattice Lattice::standard(std::size_t n) { return Lattice(RatMatrix::identity(n)); }

Lattice Lattice::dual() const { return Lattice(inverse_.transpose()); }

RatVector Lattice::to_coordinates(const RatVector& ambient) const {
  if (ambient.size() != dim()) throw DimensionError("point dimension does not match lattice");
  return ambient * inverse_;
}

RatVector Lattice::to_ambient(const RatVector& coordinates) const {
  if (coordinates.size() != dim()) throw DimensionError("point dimension does not match lattice");
  return coordinates * basis_;
}

bool Lattice::contains(const RatVector& ambient) const { return is_integral(to_coordinates(ambient)); }

// ------------------------------------------------------- LatticePolytope

LatticePolytope::LatticePolytope(Lattice lattice, const std::vector<RatVector>& points)
    : lattice_(std::move(lattice)) {
  const std::size_t n = lattice_.dim();
  if (n == 0 || n > 4) throw GeometryError("polytopes are supported in dimensions 1 to 4");
  if (points.empty()) throw InputError("convex hull of an empty point set");

  std::vector<RatVector> ys;
  for (const auto& x : points) ys.push_back(lattice_.to_coordinates(x));
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  std::vector<std::size_t> all(ys.size());
  std::iota(all.begin(), all.end(), 0);
  dim_ = affine_rank(ys, all);

  // chart: coordinates on which the affine hull projects isomorphically
  std::vector<std::size_t> chart;
  if (ys.size() > 1) {
    for (std::size_t j = 0; j < n && chart.size() < dim_; ++j) {
      std::vector<std::size_t> trial = chart;
      trial.push_back(j);
      RatMatrix d(ys.size() - 1, trial.size());
      for (std::size_t i = 1; i < ys.size(); ++i)
        for (std::size_t k = 0; k < trial.size(); ++k) d(i - 1, k) = ys[i][trial[k]] - ys[0][trial[k]];
      if (rank(d) == trial.size()) chart = std::move(trial);
    }
  }

  if (dim_ < n) {
    if (ys.size() == 1) {
      for (std::size_t j = 0; j < n; ++j) {
        IntVector e(n, 0);
        e[j] = 1;
        equations_.emplace_back(std::move(e), ys[0][j]);
      }
    } else {
      Integer scale = 1;
      for (const auto& y : ys) scale = lcm(scale, lcm_of_denominators(y));
      IntMatrix dt(n, ys.size() - 1);
      for (std::size_t i = 1; i < ys.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) dt(j, i - 1) = Rational((ys[i][j] - ys[0][j]) * scale).get_num();
      const IntMatrix kernel = left_kernel(dt);
      for (std::size_t r = 0; r < kernel.rows(); ++r) {
        IntVector e = kernel.row(r);
        Rational value = 0;
        for (std::size_t j = 0; j < n; ++j) value += ys[0][j] * e[j];
        equations_.emplace_back(std::move(e), value);
      }
    }
  }

  std::vector<std::size_t> vertex_ids;
  std::vector<CoreFacet> core_facets;
  Integer scale = 1;
  if (dim_ == 0) {
    vertex_ids.push_back(0);
  } else {
    std::vector<RatVector> projected;
    for (const auto& y : ys) {
      RatVector q;
      for (auto j : chart) q.push_back(y[j]);
      projected.push_back(std::move(q));
    }
    CoreHull core = hull_of(projected, dim_, scale);
    vertex_ids = std::move(core.vertices);
    core_facets = std::move(core.facets);
  }

  std::vector<std::pair<RatVector, std::size_t>> order;
  for (auto id : vertex_ids) order.emplace_back(lattice_.to_ambient(ys[id]), id);
  std::sort(order.begin(), order.end());
  std::map<std::size_t, std::size_t> renumber;
  for (std::size_t k = 0; k < order.size(); ++k) {
    renumber[order[k].second] = k;
    ambient_.push_back(order[k].first);
    coords_.push_back(ys[order[k].second]);
  }

  for (const auto& cf : core_facets) {
    CoordinateFacet f;
    f.normal.assign(n, 0);
    for (std::size_t k = 0; k < chart.size(); ++k) f.normal[chart[k]] = cf.normal[k];
    f.offset = ratio(-cf.level, scale);
    for (auto t : cf.points) {
      const auto it = renumber.find(t);
      if (it != renumber.end()) f.vertices.push_back(it->second);
    }
    std::sort(f.vertices.begin(), f.vertices.end());
    facets_.push_back(std::move(f));
  }
  std::sort(facets_.begin(), facets_.end(),
            [](const CoordinateFacet& a, const CoordinateFacet& b) { return a.vertices < b.vertices; });

  // faces: all nonempty intersections of facets, plus the polytope itself
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> queue;
  for (const auto& f : facets_)
    if (seen.insert(f.vertices).second) queue.push_back(f.vertices);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& f : facets_) {
      std::vector<std::size_t> meet;
      std::set_intersection(queue[q].begin(), queue[q].end(), f.vertices.begin(), f.vertices.end(),
                            std::back_inserter(meet));
      if (!meet.empty() && seen.insert(meet).second) queue.push_back(meet);
    }
  }
  std::vector<std::size_t> whole(coords_.size());
  std::iota(whole.begin(), whole.end(), 0);
  seen.insert(whole);
  for (const auto& vs : seen) faces_.push_back({affine_rank(coords_, vs), vs});
  std::sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    return a.dim != b.dim ? a.dim < b.dim : a.vertices < b.vertices;
  });
}

bool LatticePolytope::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const RatVector& y) { return polydual::is_integral(y); });
}

bool LatticePolytope::has_interior_origin() const {
  if (!is_full_dimensional()) return false;
  return std::all_of(facets_.begin(), facets_.end(), [](const CoordinateFacet& f) { return f.offset > 0; });
}

bool LatticePolytope::contains_coordinates(const RatVector& y) const {
  if (y.size() != ambient_dim()) throw DimensionError("point dimension does not match polytope");
  for (const auto& [e, value] : equations_) {
    Rational s = 0;
    for (std::size_t j = 0; j < y.size(); ++j) s += y[j] * e[j];
    if (s != value) return false;
  }
  for (const auto& f : facets_) {
    Rational s = 0;
    for (std::size_t j = 0; j < y.size(); ++j) s += y[j] * f.normal[j];
    if (s < -f.offset) return false;
  }
  return true;
}

bool LatticePolytope::contains_point(const RatVector& ambient) const {
  return contains_coordinates(lattice_.to_coordinates(ambient));
}

LatticePolytope hull(const std::vector<RatVector>& points, const Lattice& lattice) {
  return LatticePolytope(lattice, points);
}

// ---------------------------------------------------------- H-rep, polar

namespace {

void require_full(const LatticePolytope& p, const char* what) {
  if (!p.is_full_dimensional())
    throw GeometryError(std::string(what) + ": polytope is not full-dimensional");
}

void require_origin_interior(const LatticePolytope& p, const char* what) {
  require_full(p, what);
  if (!p.has_interior_origin())
    throw GeometryError(std::string(what) + ": origin is not in the interior");
}

RatVector ambient_normal(const LatticePolytope& p, const IntVector& z) {
  const RatMatrix inv = *inverse(p.lattice().basis());
  RatVector u(z.size());
  for (std::size_t j = 0; j < z.size(); ++j)
    for (std::size_t k = 0; k < z.size(); ++k) u[j] += inv(j, k) * z[k];
  return u;
}

RatVector dual_vertex_coordinates(const CoordinateFacet& f) {
  RatVector v;
  for (const auto& z : f.normal) v.push_back(Rational(z) / f.offset);
  return v;
}

// Dual vertices expressed in ambient dual coordinates.
std::vector<RatVector> dual_vertices(const LatticePolytope& p) {
  std::vector<RatVector> out;
  for (const auto& f : p.coordinate_facets()) {
    RatVector u = ambient_normal(p, f.normal);
    for (auto& x : u) x /= f.offset;
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace

HRep facets(const LatticePolytope& p) {
  require_full(p, "facets");
  const bool polar_ready = p.has_interior_origin();
  HRep out;
  for (const auto& f : p.coordinate_facets()) {
    Facet facet{ambient_normal(p, f.normal), f.offset};
    if (polar_ready) {
      for (auto& x : facet.normal) x /= f.offset;
      facet.offset = 1;
    }
    out.facets.push_back(std::move(facet));
  }
  return out;
}

LatticePolytope polar_dual(const LatticePolytope& p) {
  require_origin_interior(p, "polar dual");
  return LatticePolytope(p.lattice().dual(), dual_vertices(p));
}

ReflexivityReport reflexivity(const LatticePolytope& p) {
  require_origin_interior(p, "reflexivity");
  ReflexivityReport report;
  report.origin_interior = true;
  report.integral = p.is_integral();
  const auto& fs = p.coordinate_facets();
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (!is_integral(dual_vertex_coordinates(fs[i]))) {
      report.violating_facet = i;
      break;
    }
  report.no_intermediate_points = report.integral && reflexive_by_lattice_distance(p);
  report.reflexive = report.integral && !report.violating_facet;
  return report;
}

bool is_reflexive(const LatticePolytope& p) { return reflexivity(p).reflexive; }

bool reflexive_by_dual_vertices(const LatticePolytope& p) {
  require_origin_interior(p, "reflexivity");
  if (!p.is_integral()) return false;
  return polar_dual(p).is_integral();
}

bool reflexive_by_dual_lattice_points(const LatticePolytope& p) {
  require_origin_interior(p, "reflexivity");
  if (!p.is_integral()) return false;
  // Intersect the half-spaces <x, y> >= -1 over every y in N inside the polar
  // dual; the result equals p exactly when p is cut out by such y.
  const FaceCounts dual_points = lattice_points(polar_dual(p));
  const Lattice n_lattice = p.lattice().dual();
  const LatticePolytope cut(n_lattice, dual_points.points);
  if (!cut.has_interior_origin()) return false;
  return polar_dual(cut) == p;
}

bool reflexive_by_facet_normals(const LatticePolytope& p) {
  require_origin_interior(p, "reflexivity");
  if (!p.is_integral()) return false;
  const std::size_t n = p.ambient_dim();
  for (const auto& f : p.coordinate_facets()) {
    // solve <v, y> = -1 on n affinely independent vertices of the facet
    std::vector<std::size_t> frame;
    for (auto v : f.vertices) {
      std::vector<std::size_t> trial = frame;
      trial.push_back(v);
      RatMatrix m(trial.size(), n);
      for (std::size_t i = 0; i < trial.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = p.vertex_coordinates()[trial[i]][j];
      if (rank(m) == trial.size()) frame = std::move(trial);
      if (frame.size() == n) break;
    }
    if (frame.size() != n) return false;
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = p.vertex_coordinates()[frame[i]][j];
    const auto y = solve_rational(m, RatVector(n, Rational(-1)));
    if (!y || !is_integral(*y)) return false;
  }
  return true;
}

bool reflexive_by_lattice_distance(const LatticePolytope& p) {
  require_origin_interior(p, "reflexivity");
  if (!p.is_integral()) return false;
  // With a primitive normal the lattice hyperplanes parallel to the facet are
  // the integer levels; one lies strictly between iff some integer t has
  // -offset < t < 0.
  for (const auto& f : p.coordinate_facets()) {
    Integer t;
    mpz_fdiv_q(t.get_mpz_t(), Rational(-f.offset).get_num().get_mpz_t(),
               Rational(-f.offset).get_den().get_mpz_t());
    t += 1;  // smallest integer strictly above -offset
    if (t < 0) return false;
  }
  return true;
}

// -------------------------------------------------------- lattice points

std::size_t FaceCounts::skeleton(std::size_t k) const {
  std::size_t count = 0;
  for (auto c : carrier)
    if (faces[c].face.dim <= k) ++count;
  return count;
}


FaceCounts lattice_points(const LatticePolytope& p) {
  const std::size_t n = p.ambient_dim();
  const FastConstraints fast(p, p.equations());
  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational mn = p.vertex_coordinates()[0][j], mx = mn;
    for (const auto& y : p.vertex_coordinates()) {
      mn = std::min(mn, y[j]);
      mx = std::max(mx, y[j]);
    }
    Integer f, c;
    mpz_fdiv_q(f.get_mpz_t(), mn.get_num().get_mpz_t(), mn.get_den().get_mpz_t());
    mpz_cdiv_q(c.get_mpz_t(), mx.get_num().get_mpz_t(), mx.get_den().get_mpz_t());
    lo[j] = narrow64(f);
    hi[j] = narrow64(c);
  }
  double volume = 1;
  for (std::size_t j = 0; j < n; ++j) volume *= static_cast<double>(hi[j] - lo[j] + 1);
  if (volume > 2e8) throw GeometryError("lattice point enumeration box too large");

  FaceCounts out;
  std::map<std::vector<std::size_t>, std::size_t> face_index;
  for (std::size_t i = 0; i < p.faces().size(); ++i) {
    out.faces.push_back({p.faces()[i], 0, 0});
    face_index[p.faces()[i].vertices] = i;
  }
  std::vector<std::size_t> all(p.vertex_coordinates().size());
  std::iota(all.begin(), all.end(), 0);
  const auto& fs = p.coordinate_facets();

  std::vector<std::int64_t> y = lo;
  for (;;) {
    if (fast.inside(y)) {
      std::vector<std::size_t> carrier = all;
      for (std::size_t f = 0; f < fs.size(); ++f) {
        if (!fast.tight(f, y)) continue;
        std::vector<std::size_t> meet;
        std::set_intersection(carrier.begin(), carrier.end(), fs[f].vertices.begin(), fs[f].vertices.end(),
                              std::back_inserter(meet));
        carrier = std::move(meet);
      }
      const std::size_t face = face_index.at(carrier);
      IntVector coords;
      for (auto v : y) coords.emplace_back(static_cast<long>(v));
      out.points.push_back(p.lattice().to_ambient(to_rational(coords)));
      out.coordinates.push_back(std::move(coords));
      out.carrier.push_back(face);
      ++out.faces[face].interior_points;
    }
    std::size_t j = n;
    while (j > 0 && y[j - 1] == hi[j - 1]) {
      y[j - 1] = lo[j - 1];
      --j;
    }
    if (j == 0) break;
    ++y[j - 1];
  }

  for (auto c : out.carrier) {
    const auto& inner = out.faces[c].face.vertices;
    for (auto& fc : out.faces)
      if (std::includes(fc.face.vertices.begin(), fc.face.vertices.end(), inner.begin(), inner.end()))
        ++fc.points;
  }
  out.l = out.points.size();
  out.l_star = out.faces.back().interior_points;
  return out;
}

std::size_t skeleton_count(const LatticePolytope& p, std::size_t k) {
  const FaceCounts counts = lattice_points(p);
  if (k >= p.dimension()) return counts.l;
  return counts.skeleton(k);
}

// ------------------------------------------------- weighted constructions

LatticePolytope weighted_simplex(const WeightSystem& w) {
  validate(w);
  const std::int64_t a0 = defect(w);
  if (a0 <= 0) throw UnsupportedCaseError("weighted simplex needs a_0 > 0: " + w.to_string());
  const std::size_t n = w.size();
  std::vector<RatVector> pts;
  pts.emplace_back(n, Rational(-1));
  for (std::size_t i = 0; i < n; ++i) {
    RatVector v(n, Rational(-1));
    v[i] = ratio(w.degree, w.weights[i]) - 1;
    pts.push_back(std::move(v));
  }
  return LatticePolytope(Lattice(monomial_lattice(w)), pts);
}

GeneratorReport dual_simplex_generators_check(const WeightSystem& w) {
  GeneratorReport report;
  if (!is_reduced(w)) {
    report.skipped_non_reduced = true;
    return report;
  }
  const std::size_t n = w.size();
  const std::int64_t a0 = defect(w);
  const LatticePolytope dual = polar_dual(weighted_simplex(w));

  std::vector<RatVector> expected;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector e(n, Rational(0));
    e[i] = 1;
    expected.push_back(std::move(e));
  }
  RatVector v0;
  for (auto a : w.weights) {
    v0.push_back(ratio(-a, a0));
  }
  expected.push_back(v0);
  std::sort(expected.begin(), expected.end());

  report.integral = dual.vertices() == expected && dual.is_integral();
  if (report.integral) {
    IntMatrix gens(dual.vertex_coordinates().size(), n);
    for (std::size_t i = 0; i < gens.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j) gens(i, j) = dual.vertex_coordinates()[i][j].get_num();
    const IntMatrix h = hnf(gens).h;
    Integer volume = 1;
    for (std::size_t i = 0; i < n; ++i) volume *= h(i, i);
    report.generates = abs(volume) == 1;
  }
  // Z^n has index |a_0|/gcd(a) in N, and v_0 has exactly that order mod Z^n.
  const Integer expected_index = Integer(static_cast<long>(std::abs(a0) / weights_gcd(w)));
  const Integer index = Rational(abs(Rational(1) / det(dual.lattice().basis()))).get_num();
  const Integer order = lcm_of_denominators(v0);
  report.index_matches = index == expected_index && order == expected_index;
  return report;
}

LatticePolytope full_newton_polytope(const WeightSystem& w) {
  const LatticePolytope simplex = weighted_simplex(w);
  return LatticePolytope(simplex.lattice(), lattice_points(simplex).points);
}

LatticePolytope monomials_to_polytope(const std::vector<Exponents>& monomials, const WeightSystem& w) {
  validate(w);
  if (monomials.empty()) throw InputError("no monomials given");
  const std::size_t n = w.size();
  std::vector<RatVector> pts;
  for (const auto& m : monomials) {
    const std::int64_t d = weighted_degree(m, w);
    if (d != w.degree)
      throw InputError("monomial " + format_monomial(m) + " has weighted degree " + std::to_string(d) +
                       ", expected " + std::to_string(w.degree));
    RatVector p;
    for (std::size_t i = 0; i < n; ++i) p.emplace_back(m[i + 1] - 1);
    pts.push_back(std::move(p));
  }
  return LatticePolytope(Lattice(monomial_lattice(w)), pts);
}

bool contains(const LatticePolytope& outer, const LatticePolytope& inner) {
  if (outer.lattice() != inner.lattice()) throw InvalidLatticeError("containment test across different lattices");
  for (const auto& y : inner.vertex_coordinates())
    if (!outer.contains_coordinates(y)) return false;
  return true;
}

// ------------------------------------------------------- decomposition

std::optional<std::vector<RatVector>> decompose_point(const LatticePolytope& p, std::size_t k,
                                                      const RatVector& target) {
  if (p.ambient_dim() > 3) throw GeometryError("point decomposition is limited to dimension 3");
  if (k == 0) throw InputError("decomposition needs k >= 1");
  const std::size_t n = p.ambient_dim();
  const FastConstraints fast(p, p.equations());
  const RatVector ty = p.lattice().to_coordinates(target);
  if (!is_integral(ty)) throw InputError("target is not a lattice point");
  std::vector<std::int64_t> t;
  for (const auto& v : ty) t.push_back(narrow64(v.get_num()));
  if (!fast.inside(t, static_cast<std::int64_t>(k))) throw InputError("target lies outside k times the polytope");

  std::vector<std::vector<std::int64_t>> pts;
  for (const auto& c : lattice_points(p).coordinates) {
    std::vector<std::int64_t> v;
    for (const auto& x : c) v.push_back(narrow64(x));
    pts.push_back(std::move(v));
  }
  // try points far from the origin first; they exhaust the target fastest
  std::stable_sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    std::int64_t na = 0, nb = 0;
    for (auto x : a) na += x < 0 ? -x : x;
    for (auto x : b) nb += x < 0 ? -x : x;
    return na > nb;
  });

  std::set<std::pair<std::vector<std::int64_t>, std::size_t>> dead;
  std::vector<std::vector<std::int64_t>> chosen;
  auto search = [&](auto&& self, const std::vector<std::int64_t>& rest, std::size_t j) -> bool {
    if (j == 1) {
      chosen.push_back(rest);
      return true;
    }
    if (dead.count({rest, j})) return false;
    std::vector<std::int64_t> next(n);
    for (const auto& s : pts) {
      for (std::size_t i = 0; i < n; ++i) next[i] = rest[i] - s[i];
      if (!fast.inside(next, static_cast<std::int64_t>(j - 1))) continue;
      chosen.push_back(s);
      if (self(self, next, j - 1)) return true;
      chosen.pop_back();
    }
    dead.insert({rest, j});
    return false;
  };
  if (!search(search, t, k)) return std::nullopt;

  std::vector<RatVector> out;
  for (const auto& c : chosen) {
    RatVector y;
    for (auto x : c) y.emplace_back(static_cast<long>(x));
    out.push_back(p.lattice().to_ambient(y));
  }
  return out;
}

// -------------------------------------------------------- equivalence

namespace {

struct Shape {
  std::vector<std::vector<char>> adjacent;
  std::vector<std::vector<Rational>> signature;  // per vertex
};

Shape shape_of(const LatticePolytope& p) {
  const auto& ys = p.vertex_coordinates();
  const std::size_t v = ys.size();
  Shape s;
  s.adjacent.assign(v, std::vector<char>(v, 0));
  for (const auto& f : p.faces())
    if (f.dim == 1) {
      s.adjacent[f.vertices[0]][f.vertices[1]] = 1;
      s.adjacent[f.vertices[1]][f.vertices[0]] = 1;
    }
  s.signature.resize(v);
  for (std::size_t i = 0; i < v; ++i) {
    std::size_t incident = 0;
    for (const auto& f : p.coordinate_facets())
      if (std::binary_search(f.vertices.begin(), f.vertices.end(), i)) ++incident;
    std::vector<Rational> edges;
    for (std::size_t j = 0; j < v; ++j) {
      if (!s.adjacent[i][j]) continue;
      RatVector d(ys[i].size());
      for (std::size_t k = 0; k < d.size(); ++k) d[k] = ys[j][k] - ys[i][k];
      edges.push_back(rational_content(d));
    }
    std::sort(edges.begin(), edges.end());
    auto& sig = s.signature[i];
    sig.push_back(Rational(static_cast<long>(incident)));
    sig.push_back(rational_content(ys[i]));
    sig.insert(sig.end(), edges.begin(), edges.end());
  }
  return s;
}

std::vector<Rational> offsets_of(const LatticePolytope& p) {
  std::vector<Rational> out;
  for (const auto& f : p.coordinate_facets()) out.push_back(f.offset);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::optional<IntMatrix> are_lattice_equivalent(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) return std::nullopt;
  if (!p.is_full_dimensional() || !q.is_full_dimensional())
    throw GeometryError("lattice equivalence needs full-dimensional polytopes");
  const std::size_t n = p.ambient_dim();
  const auto& py = p.vertex_coordinates();
  const auto& qy = q.vertex_coordinates();
  if (py.size() != qy.size() || p.coordinate_facets().size() != q.coordinate_facets().size()) return std::nullopt;
  if (offsets_of(p) != offsets_of(q)) return std::nullopt;
  const FaceCounts pc = lattice_points(p);
  const FaceCounts qc = lattice_points(q);
  if (pc.l != qc.l || pc.l_star != qc.l_star) return std::nullopt;

  const Shape ps = shape_of(p);
  const Shape qs = shape_of(q);
  {
    auto a = ps.signature, b = qs.signature;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // frame: linearly independent vertices, rarest signatures first
  std::vector<std::size_t> order(py.size());
  std::iota(order.begin(), order.end(), 0);
  auto frequency = [&](std::size_t i) {
    return std::count(ps.signature.begin(), ps.signature.end(), ps.signature[i]);
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return frequency(a) < frequency(b); });
  std::vector<std::size_t> frame;
  for (auto i : order) {
    std::vector<std::size_t> trial = frame;
    trial.push_back(i);
    RatMatrix m(trial.size(), n);
    for (std::size_t r = 0; r < trial.size(); ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = py[trial[r]][c];
    if (rank(m) == trial.size()) frame = std::move(trial);
    if (frame.size() == n) break;
  }
  if (frame.size() != n) return std::nullopt;  // origin not interior

  RatMatrix pf(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) pf(r, c) = py[frame[r]][c];
  const RatMatrix pf_inv = *inverse(pf);
  const std::set<RatVector> targets(qy.begin(), qy.end());

  auto pair_content = [](const RatVector& a, const RatVector& b) {
    RatVector d(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) d[k] = a[k] - b[k];
    return rational_content(d);
  };

  std::vector<std::size_t> image;
  std::vector<char> used(qy.size(), 0);
  std::optional<IntMatrix> result;
  auto search = [&](auto&& self, std::size_t slot) -> bool {
    if (slot == n) {
      RatMatrix qg(n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) qg(r, c) = qy[image[r]][c];
      const RatMatrix u = pf_inv * qg;
      if (!is_integral(u)) return false;
      if (abs(det(u)) != 1) return false;
      for (const auto& y : py)
        if (!targets.count(y * u)) return false;
      result = to_integer(u);
      return true;
    }
    const std::size_t src = frame[slot];
    for (std::size_t cand = 0; cand < qy.size(); ++cand) {
      if (used[cand] || qs.signature[cand] != ps.signature[src]) continue;
      bool consistent = true;
      for (std::size_t prev = 0; prev < slot && consistent; ++prev) {
        const std::size_t a = frame[prev], b = image[prev];
        consistent = ps.adjacent[src][a] == qs.adjacent[cand][b] &&
                     pair_content(py[src], py[a]) == pair_content(qy[cand], qy[b]);
      }
      if (!consistent) continue;
      used[cand] = 1;
      image.push_back(cand);
      if (self(self, slot + 1)) return true;
      image.pop_back();
      used[cand] = 0;
    }
    return false;
  };
  search(search, 0);
  return result;
}

LatticePolytope apply_unimodular(const LatticePolytope& p, const IntMatrix& u) {
  if (u.rows() != p.ambient_dim() || !u.is_square()) throw DimensionError("transform size mismatch");
  if (abs(det(u)) != 1) throw InvalidLatticeError("transform is not unimodular");
  const RatMatrix ur = to_rational(u);
  std::vector<RatVector> pts;
  for (const auto& y : p.vertex_coordinates()) pts.push_back(p.lattice().to_ambient(y * ur));
  return LatticePolytope(p.lattice(), pts);
}

LatticePolytope linear_image(const LatticePolytope& p, const RatMatrix& a, const Lattice& target) {
  std::vector<RatVector> pts;
  for (const auto& x : p.vertices()) pts.push_back(x * a);
  return LatticePolytope(target, pts);
}

LatticePolytope scale(const LatticePolytope& p, const Rational& factor) {
  std::vector<RatVector> pts;
  for (auto x : p.vertices()) {
    for (auto& v : x) v *= factor;
    pts.push_back(std::move(x));
  }
  return LatticePolytope(p.lattice(), pts);
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.lattice() != q.lattice()) throw InvalidLatticeError("Minkowski sum across different lattices");
  std::vector<RatVector> pts;
  for (const auto& x : p.vertices())
    for (const auto& y : q.vertices()) {
      RatVector s(x.size());
      for (std::size_t k = 0; k < s.size(); ++k) s[k] = x[k] + y[k];
      pts.push_back(std::move(s));
    }
  return LatticePolytope(p.lattice(), pts);
}

// ------------------------------------------------- dual correspondence

bool CorrespondenceReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* CorrespondenceReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

CorrespondenceReport check_dual_correspondence(const WeightSystem& wa, const WeightSystem& wb, const IntMatrix& c) {
  CorrespondenceReport report;
  auto record = [&](const std::string& name, auto&& test) {
    CheckResult r{name, false, ""};
    try {
      r.passed = test(r.detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    report.checks.push_back(std::move(r));
  };

  const std::size_t n = wa.size();
  const std::int64_t a0 = defect(wa);
  const std::int64_t b0 = defect(wb);
  const IntMatrix b = offset_rows(c);
  const RatMatrix br = to_rational(b);
  const RatVector apex(n, Rational(-1));

  record("magic_square", [&](std::string&) { return is_weighted_magic_square(c, wa, wb); });
  record("primitive", [&](std::string& d) {
    d = "|det C| = " + Integer(abs(det(c))).get_str();
    return is_primitive({c, wa, wb});
  });
  record("facet_plane", [&](std::string&) {
    for (std::size_t i = 0; i < n; ++i) {
      Integer level = 0;
      for (std::size_t j = 0; j < n; ++j) level += b(i, j) * Integer(static_cast<long>(wa.weights[j]));
      if (level != a0) return false;
    }
    return true;
  });
  record("divisibility", [&](std::string& d) {
    d = "a_0 = " + std::to_string(a0) + ", b_0 = " + std::to_string(b0);
    return a0 > 0 && b0 > 0 && wa.degree % a0 == 0 && wb.degree % b0 == 0;
  });
  record("determinant", [&](std::string& d) {
    const Integer v = abs(det(b));
    d = "|det B| = " + v.get_str();
    return v == Integer(static_cast<long>(a0 * b0));
  });
  record("apex", [&](std::string&) {
    RatVector v0;
    for (auto x : wb.weights) v0.push_back(ratio(-x, b0));
    return v0 * br == apex;
  });
  record("transpose_apex", [&](std::string&) {
    RatVector v0;
    for (auto x : wa.weights) v0.push_back(ratio(-x, a0));
    return v0 * br.transpose() == apex;
  });
  record("image_simplex", [&](std::string&) {
    const LatticePolytope inner = polar_dual(weighted_simplex(wb));
    const Lattice m(monomial_lattice(wa));
    const LatticePolytope image = linear_image(inner, br, m);
    std::vector<RatVector> expected{apex};
    for (std::size_t i = 0; i < n; ++i) expected.push_back(br.row(i));
    return image == LatticePolytope(m, expected);
  });
  record("inside", [&](std::string&) {
    const LatticePolytope outer = weighted_simplex(wa);
    const LatticePolytope image = linear_image(polar_dual(weighted_simplex(wb)), br, outer.lattice());
    return contains(outer, image);
  });
  record("meets_facets", [&](std::string&) {
    const LatticePolytope outer = weighted_simplex(wa);
    const LatticePolytope image = linear_image(polar_dual(weighted_simplex(wb)), br, outer.lattice());
    for (const auto& f : outer.coordinate_facets()) {
      bool touches = false;
      for (const auto& y : image.vertex_coordinates()) {
        Rational s = 0;
        for (std::size_t j = 0; j < n; ++j) s += y[j] * f.normal[j];
        touches = touches || s == -f.offset;
      }
      if (!touches) return false;
    }
    return true;
  });
  record("generates", [&](std::string& d) {
    // rows of B span a sublattice of index b_0 in M(W_a)
    const Sublattice m = monomial_lattice(wa);
    for (std::size_t i = 0; i < n; ++i)
      if (!m.contains(b.row(i))) return false;
    const Integer index = abs(det(b)) / sublattice_index(m);
    d = "index " + index.get_str();
    return index == Integer(static_cast<long>(b0));
  });
  record("dual_lattice_image", [&](std::string&) {
    const Lattice source = Lattice(monomial_lattice(wb)).dual();
    return Lattice(source.basis() * br) == Lattice(monomial_lattice(wa));
  });
  record("transpose_lattice_image", [&](std::string&) {
    const Lattice source = Lattice(monomial_lattice(wa)).dual();
    return Lattice(source.basis() * br.transpose()) == Lattice(monomial_lattice(wb));
  });
  return report;
}

std::string to_string(const LatticePolytope& p) {
  std::ostringstream os;
  os << "conv{";
  for (std::size_t i = 0; i < p.vertices().size(); ++i) os << (i ? ", " : "") << to_string(p.vertices()[i]);
  os << "}";
  return os.str();
}

}  // namespace polydual
