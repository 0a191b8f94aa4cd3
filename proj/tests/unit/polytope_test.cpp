#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "polydual/catalog.hpp"
#include "polydual/monomial.hpp"
#include "polydual/polytope.hpp"

using namespace polydual;
using oracle::Pt;

namespace {

WeightSystem ws(const char* s) { return parse_weight_system(s); }

LatticePolytope poly(const std::vector<Pt>& pts) { return oracle::to_polytope(pts); }

RatVector rv(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<Pt> sorted(std::vector<Pt> v) {
  std::sort(v.begin(), v.end());
  return v;
}

const std::vector<Pt> kSquare{{-1, -1}, {1, -1}, {-1, 1}, {1, 1}};
const std::vector<Pt> kCube{{-1, -1, -1}, {1, -1, -1}, {-1, 1, -1}, {1, 1, -1},
                            {-1, -1, 1},  {1, -1, 1},  {-1, 1, 1},  {1, 1, 1}};
const std::vector<Pt> kP2{{2, -1}, {-1, 2}, {-1, -1}};

const CatalogEntry& entry(const std::string& table, const std::string& label) {
  for (const auto& e : catalog_table(table))
    if (e.label == label) return e;
  throw std::runtime_error("no row " + label);
}

LatticePolytope delta(int i) { return *entry_polytope(entry("example-442", "Delta_" + std::to_string(i))); }

}  // namespace

TEST(Hull, DropsInteriorPoints) {
  auto pts = kSquare;
  pts.push_back({0, 0});
  pts.push_back({1, 0});
  const auto p = poly(pts);
  EXPECT_EQ(oracle::to_points(p.vertices()), sorted(kSquare));
  EXPECT_EQ(p.dimension(), 2u);
  EXPECT_EQ(p.coordinate_facets().size(), 4u);
}

TEST(Hull, LowerDimensional) {
  const auto p = poly({{0, 0, 0}, {1, 1, 0}, {2, 2, 0}});
  EXPECT_EQ(p.dimension(), 1u);
  EXPECT_FALSE(p.is_full_dimensional());
  EXPECT_EQ(p.vertices().size(), 2u);
  EXPECT_THROW(facets(p), GeometryError);
}

TEST(Hull, EmptyAndTooHigh) {
  EXPECT_THROW(LatticePolytope(Lattice::standard(2), {}), InputError);
  EXPECT_THROW(poly({{0, 0, 0, 0, 1}}), GeometryError);
}

TEST(Facets, MatchBruteForceHalfSpaces) {
  std::mt19937 rng(21);
  for (int i = 0; i < 60; ++i) {
    const auto pts = oracle::random_polytope_with_origin(2 + i % 2, 3, rng);
    const auto p = poly(pts);
    std::vector<std::pair<Pt, std::int64_t>> want, got;
    for (const auto& h : oracle::brute_halfspaces(pts)) want.push_back({h.normal, h.c});
    for (const auto& f : p.coordinate_facets()) {
      Pt n;
      for (const auto& x : f.normal) n.push_back(x.get_si());
      ASSERT_EQ(f.offset.get_den(), 1);
      got.push_back({n, -f.offset.get_num().get_si()});
    }
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, want);
  }
}

TEST(Polar, Examples) {
  const auto q = polar_dual(poly({{1, 0}, {0, 1}, {-1, -1}}));
  EXPECT_EQ(oracle::to_points(q.vertices()), sorted({{-1, -1}, {2, -1}, {-1, 2}}));
  const auto c = polar_dual(poly(kCube));
  EXPECT_EQ(c.vertices().size(), 6u);
  EXPECT_THROW(polar_dual(poly({{0, 0}, {1, 0}, {0, 1}})), GeometryError);
}

TEST(Polar, Involution) {
  std::mt19937 rng(22);
  for (int i = 0; i < 100; ++i) {
    const auto p = poly(oracle::random_polytope_with_origin(2 + i % 2, 4, rng));
    EXPECT_EQ(polar_dual(polar_dual(p)), p);
  }
  for (const auto& n : corpus::reflexive_polyhedra()) EXPECT_EQ(polar_dual(polar_dual(n.polytope)), n.polytope) << n.label;
}

TEST(Polar, ReversesInclusionOnTheChain) {
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) {
      EXPECT_TRUE(contains(delta(i), delta(j))) << i << " " << j;
      EXPECT_TRUE(contains(polar_dual(delta(j)), polar_dual(delta(i)))) << i << " " << j;
      EXPECT_FALSE(contains(delta(j), delta(i))) << i << " " << j;
    }
}

TEST(Polar, ExampleSimplexDual) {
  const WeightSystem wa = ws("2,3,6;12");
  const auto s = weighted_simplex(wa);
  const auto names = parse_variable_names("W,X,Y,Z");
  std::vector<Exponents> ms;
  for (const char* m : {"W^12", "Y^3", "X^2Y^2", "XZ^2"}) ms.push_back(parse_weighted_monomial(m, ws("2,4,5;12"), names));
  const auto target = monomials_to_polytope(ms, ws("2,4,5;12"));
  EXPECT_TRUE(are_lattice_equivalent(polar_dual(s), target).has_value());
}

TEST(Reflexive, Examples) {
  EXPECT_TRUE(is_reflexive(weighted_simplex(ws("2,3,6;12"))));
  EXPECT_TRUE(is_reflexive(poly(kCube)));
  EXPECT_TRUE(is_reflexive(poly(kSquare)));
  const auto r = reflexivity(poly({{2, 0}, {0, 2}, {-2, -2}}));
  EXPECT_FALSE(r.reflexive);
  EXPECT_FALSE(r.no_intermediate_points);
  EXPECT_TRUE(r.violating_facet.has_value());
  EXPECT_THROW(reflexivity(poly({{0, 0}, {1, 0}, {0, 1}})), GeometryError);
}

TEST(Reflexive, FourConditionsAgreeWithOracle) {
  std::mt19937 rng(23);
  int yes = 0;
  for (int i = 0; i < 200; ++i) {
    const auto pts = oracle::random_polytope_with_origin(2 + i % 2, 1 + i % 4, rng);
    const auto p = poly(pts);
    const bool want = corpus::oracle_reflexive(p);
    EXPECT_EQ(is_reflexive(p), want) << i;
    EXPECT_EQ(reflexive_by_dual_vertices(p), want) << i;
    EXPECT_EQ(reflexive_by_dual_lattice_points(p), want) << i;
    EXPECT_EQ(reflexive_by_facet_normals(p), want) << i;
    EXPECT_EQ(reflexive_by_lattice_distance(p), want) << i;
    yes += want;
  }
  // both outcomes must actually occur for the comparison to mean anything
  EXPECT_GT(yes, 5);
  EXPECT_LT(yes, 195);
}

TEST(Reflexive, DualOfReflexiveIsReflexive) {
  for (const auto& n : corpus::reflexive_polyhedra()) {
    EXPECT_TRUE(corpus::oracle_reflexive(n.polytope)) << n.label;
    EXPECT_TRUE(is_reflexive(polar_dual(n.polytope))) << n.label;
    EXPECT_EQ(lattice_points(n.polytope).l_star, 1u) << n.label;
  }
}

TEST(LatticePoints, Examples) {
  auto c = lattice_points(poly(kSquare));
  EXPECT_EQ(c.l, 9u);
  EXPECT_EQ(c.l_star, 1u);
  c = lattice_points(poly(kP2));
  EXPECT_EQ(c.l, 10u);
  EXPECT_EQ(c.l_star, 1u);
  EXPECT_EQ(c.skeleton(1), 9u);
  EXPECT_EQ(skeleton_count(poly(kCube), 1), 20u);
  EXPECT_EQ(skeleton_count(poly(kCube), 3), 27u);
  EXPECT_EQ(skeleton_count(poly(kCube), 7), 27u);
  EXPECT_EQ(lattice_points(weighted_simplex(ws("1,1;3"))).l, 10u);
}

TEST(LatticePoints, E12SimplexHoldsTheDegreeMonomials) {
  const WeightSystem w = ws("6,14,21;42");
  const auto s = weighted_simplex(w);
  EXPECT_EQ(s.vertices().size(), 4u);
  const auto c = lattice_points(s);
  std::size_t hits = 0;
  for (const auto& m : degree_monomials(w)) {
    RatVector x;
    for (auto e : m) x.emplace_back(static_cast<long>(e - 1));
    hits += std::count(c.points.begin(), c.points.end(), x);
  }
  EXPECT_EQ(hits, 3u);
  EXPECT_EQ(c.l_star, 1u);
}

TEST(LatticePoints, MatchNaiveOracle) {
  std::mt19937 rng(24);
  for (int i = 0; i < 120; ++i) {
    const auto pts = oracle::random_polytope_with_origin(2 + i % 2, 4, rng);
    const auto c = lattice_points(poly(pts));
    std::vector<Pt> got;
    for (const auto& x : c.coordinates) {
      Pt q;
      for (const auto& v : x) q.push_back(v.get_si());
      got.push_back(q);
    }
    EXPECT_EQ(sorted(got), sorted(oracle::naive_points(pts))) << i;
    EXPECT_EQ(c.l_star, oracle::naive_interior(pts)) << i;
  }
}

TEST(LatticePoints, FaceCountsAddUp) {
  for (const auto& n : corpus::table_polytopes()) {
    const auto c = lattice_points(n.polytope);
    std::size_t total = 0;
    for (const auto& f : c.faces) total += f.interior_points;
    EXPECT_EQ(total, c.l) << n.label;
    EXPECT_EQ(c.skeleton(n.polytope.ambient_dim()), c.l) << n.label;
    EXPECT_EQ(c.skeleton(n.polytope.ambient_dim() - 1), c.l - c.l_star) << n.label;
  }
}

TEST(LatticePoints, RespectsSublattice) {
  // simplex of (3,5,5;15) lives in the index-2 lattice of even coordinate sums
  const auto s = weighted_simplex(ws("3,5,5;15"));
  for (const auto& x : lattice_points(s).points) {
    Integer sum = 0;
    for (const auto& v : x) sum += v.get_num();
    EXPECT_EQ(sum % 2, 0);
  }
}

TEST(WeightedSimplex, Examples) {
  auto s = weighted_simplex(ws("2,3,6;12"));
  EXPECT_EQ(oracle::to_points(s.vertices()), sorted({{5, -1, -1}, {-1, 3, -1}, {-1, -1, 1}, {-1, -1, -1}}));
  s = weighted_simplex(ws("6,14,21;42"));
  EXPECT_EQ(oracle::to_points(s.vertices()), sorted({{6, -1, -1}, {-1, 2, -1}, {-1, -1, 1}, {-1, -1, -1}}));
  EXPECT_EQ(weighted_simplex(ws("1,1;3")), poly(kP2));
  EXPECT_THROW(weighted_simplex(ws("1,2,3;6")), UnsupportedCaseError);
}

TEST(GeneratorCheck, Examples) {
  EXPECT_TRUE(dual_simplex_generators_check(ws("2,3,6;12")).passed());
  EXPECT_TRUE(dual_simplex_generators_check(ws("3,5,5;15")).passed());
  const auto r = dual_simplex_generators_check(ws("2,4,6;14"));
  EXPECT_TRUE(r.skipped_non_reduced);
  EXPECT_FALSE(r.passed());
}

TEST(GeneratorCheck, AllReducedCatalogRows) {
  for (const auto& id : table_ids())
    for (const auto& e : catalog_table(id))
      if (defect(e.weights) > 0 && is_reduced(e.weights))
        EXPECT_TRUE(dual_simplex_generators_check(e.weights).passed()) << e.label;
}

TEST(FullNewton, Examples) {
  EXPECT_EQ(full_newton_polytope(ws("1,1;3")), weighted_simplex(ws("1,1;3")));
  const auto e12 = full_newton_polytope(ws("6,14,21;42"));
  EXPECT_TRUE(is_reflexive(e12));
  EXPECT_TRUE(contains(e12, *entry_polytope(entry("thm439-polytopes", "E_12"))));
  const auto f = full_newton_polytope(ws("2,3,6;12"));
  EXPECT_TRUE(is_reflexive(f));
  EXPECT_TRUE(contains(weighted_simplex(ws("2,3,6;12")), f));
}

TEST(Monomials, ToPolytope) {
  const WeightSystem w = ws("2,3,6;12");
  const auto names = parse_variable_names("W,X,Y,Z");
  std::vector<Exponents> ms;
  for (const char* m : {"W^12", "X^6", "Y^4", "Z^2"}) ms.push_back(parse_weighted_monomial(m, w, names));
  EXPECT_EQ(monomials_to_polytope(ms, w), weighted_simplex(w));
  const auto pt = monomials_to_polytope({ms[0]}, w);
  EXPECT_EQ(pt.vertices(), (std::vector<RatVector>{rv({-1, -1, -1})}));
  try {
    monomials_to_polytope({{0, 1, 1, 1}}, w);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("XYZ"), std::string::npos) << e.what();
  }
}

TEST(Contains, Examples) {
  const auto s = weighted_simplex(ws("2,3,6;12"));
  EXPECT_TRUE(contains(s, *entry_polytope(entry("example-441", "nabla-bar-dual"))));
  EXPECT_TRUE(contains(s, s));
  EXPECT_TRUE(contains(delta(1), delta(6)));
  EXPECT_THROW(contains(weighted_simplex(ws("3,5,5;15")), poly(kCube)), InvalidLatticeError);
}

TEST(Decompose, Examples) {
  const auto p = poly(kP2);
  auto d = decompose_point(p, 2, rv({1, 1}));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->size(), 2u);
  EXPECT_EQ((*d)[0][0] + (*d)[1][0], 1);
  EXPECT_EQ((*d)[0][1] + (*d)[1][1], 1);
  d = decompose_point(p, 2, rv({0, 0}));
  ASSERT_TRUE(d.has_value());
  d = decompose_point(poly(kCube), 3, rv({3, 3, 3}));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(*d, (std::vector<RatVector>(3, rv({1, 1, 1}))));
  EXPECT_THROW(decompose_point(p, 2, rv({5, 5})), InputError);
}

TEST(Decompose, EveryPointOfTwoAndThreeTimesCatalogPolyhedra) {
  const auto start = std::chrono::steady_clock::now();
  std::size_t checked = 0;
  for (const auto& n : corpus::reflexive_polyhedra()) {
    const auto base = lattice_points(n.polytope);
    for (std::size_t k : {2u, 3u}) {
      const auto big = lattice_points(scale(n.polytope, k));
      for (const auto& target : big.points) {
        const auto d = decompose_point(n.polytope, k, target);
        ASSERT_TRUE(d.has_value()) << n.label << " k=" << k;
        ASSERT_EQ(d->size(), k);
        RatVector sum(target.size());
        for (const auto& x : *d) {
          EXPECT_NE(std::find(base.points.begin(), base.points.end(), x), base.points.end());
          for (std::size_t i = 0; i < x.size(); ++i) sum[i] += x[i];
        }
        EXPECT_EQ(sum, target);
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 1000u);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  RecordProperty("seconds", std::to_string(secs));
}

TEST(Equivalence, RandomUnimodularImages) {
  std::mt19937 rng(25);
  for (const auto& n : corpus::table_polytopes()) {
    const auto u = oracle::random_unimodular(3, rng);
    const auto q = apply_unimodular(n.polytope, u);
    const auto found = are_lattice_equivalent(n.polytope, q);
    ASSERT_TRUE(found.has_value()) << n.label;
    EXPECT_EQ(abs(det(*found)), 1);
    EXPECT_EQ(apply_unimodular(n.polytope, *found), q) << n.label;
  }
}

TEST(Equivalence, ChainMirrors) {
  for (int i = 1; i <= 6; ++i) EXPECT_TRUE(are_lattice_equivalent(polar_dual(delta(i)), delta(7 - i)).has_value()) << i;
  EXPECT_FALSE(are_lattice_equivalent(delta(1), delta(2)).has_value());
  EXPECT_FALSE(are_lattice_equivalent(poly(kSquare), poly(kP2)).has_value());
}

TEST(Equivalence, SixteenReflexivePolygons) {
  const auto classes = oracle::reflexive_polygons(4);
  ASSERT_EQ(classes.size(), 16u);
  std::vector<LatticePolytope> ps;
  for (const auto& c : classes) {
    std::vector<Pt> pts;
    for (const auto& v : c) pts.push_back({v[0], v[1]});
    ps.push_back(poly(pts));
    EXPECT_TRUE(is_reflexive(ps.back()));
  }
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) EXPECT_FALSE(are_lattice_equivalent(ps[i], ps[j]).has_value());
}

TEST(Correspondence, ExampleAndSelfPair) {
  const auto r = check_dual_correspondence(ws("2,3,6;12"), ws("2,4,5;12"), IntMatrix{{0, 2, 1}, {3, 2, 0}, {0, 0, 2}});
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  EXPECT_TRUE(r.all_passed());
  const auto e = check_dual_correspondence(ws("6,14,21;42"), ws("6,14,21;42"), IntMatrix{{7, 0, 0}, {0, 3, 0}, {0, 0, 2}});
  EXPECT_TRUE(e.all_passed());
}

TEST(Correspondence, NonPrimitiveSquareFails) {
  const auto& w17 = entry("min-elliptic-a0-gt1", "W_17");
  const auto sq = entry_square(w17);
  ASSERT_TRUE(sq.has_value());
  const auto r = check_dual_correspondence(w17.weights, weights_from_square(*sq).value(), *sq);
  EXPECT_FALSE(r.all_passed());
}

TEST(Transforms, ScaleAndSum) {
  const auto p = poly(kP2);
  EXPECT_EQ(scale(p, 2), poly({{4, -2}, {-2, 4}, {-2, -2}}));
  EXPECT_EQ(minkowski_sum(p, p), scale(p, 2));
  EXPECT_EQ(lattice_points(scale(poly(kSquare), 3)).l, 49u);
}
