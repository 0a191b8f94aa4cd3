// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "oracles.hpp"
#include "polydual/catalog.hpp"
#include "polydual/duality.hpp"
#include "polydual/k3_invariants.hpp"
#include "polydual/monomial.hpp"
#include "polydual/verify.hpp"

using namespace polydual;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void check(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) detail << what;
    else if (detail.tellp() < 300) detail << "; " << what;
    ok = false;
  }
};

WeightSystem ws(const std::string& s) { return parse_weight_system(s); }

const CatalogEntry& entry(const std::string& table, const std::string& label) {
  for (const auto& e : catalog_table(table))
    if (e.label == label) return e;
  throw std::runtime_error("no row " + label);
}

const CatalogEntry* find_by_weights(const std::string& table, const WeightSystem& w) {
  for (const auto& e : catalog_table(table))
    if (equivalent(e.weights, w)) return &e;
  return nullptr;
}

void for_each_square(const WeightSystem& w, const std::function<void(const IntMatrix&)>& f) {
  const auto rows = degree_monomials(w);
  const std::size_t n = w.size();
  std::vector<std::size_t> idx(n);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == n) {
      IntMatrix c(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c(i, j) = static_cast<long>(rows[idx[i]][j]);
      f(c);
      return;
    }
    for (std::size_t k = start; k < rows.size(); ++k) {
      idx[pos] = k;
      rec(pos + 1, k + 1);
    }
  };
  rec(0, 0);
}

// ----------------------------------------------------------------------------

void arnold(Outcome& o) {
  std::size_t rows = 0;
  for (const auto& e : catalog_table("arnold14")) {
    const auto classes = dual_weights(e.weights);
    o.check(classes.size() == 1, e.label + ": " + std::to_string(classes.size()) + " duals");
    if (classes.size() != 1) continue;
    const auto& c = classes.front();
    o.check(equivalent(c.dual, e.duals.front()), e.label + ": dual " + c.dual.to_string());
    o.check(c.strongly_dual && c.witness().strongly_dual && c.witness().primitive, e.label + ": no strong primitive certificate");
    ++rows;
  }
  o.check(rows == 14, "expected 14 rows");
  o.detail << rows << " rows";
}

void ade(Outcome& o) {
  std::size_t checked = 0;
  for (std::int64_t l = 2; l <= 12; ++l) {
    std::set<WeightSystem> family;
    for (std::int64_t k = 1; k < l; ++k) family.insert(canonical_form(WeightSystem{{1, k, l - k}, l}));
    for (const auto& w : family) {
      const auto classes = dual_weights(w);
      o.check(!classes.empty(), w.to_string() + " has no dual");
      for (const auto& c : classes)
        o.check(family.count(canonical_form(c.dual)) == 1, w.to_string() + " -> " + c.dual.to_string());
      ++checked;
    }
  }
  for (const auto& e : catalog_table("ade")) {
    if (e.label[0] != 'D' && e.label[0] != 'E') continue;
    o.check(is_self_dual(e.weights), e.label + " not self-dual");
    o.check(symmetric_certificate(e.weights).has_value(), e.label + " has no symmetric certificate");
    ++checked;
  }
  o.detail << checked << " systems";
}

void elliptic(Outcome& o) {
  for (const char* id : {"simple-elliptic", "min-elliptic-a0-1", "min-elliptic-a0-gt1", "reid-a0-1"}) {
    const auto r = verify_table(id);
    o.check(r.passed(), std::string(id) + " has failing rows");
    o.detail << id << " " << r.count(RowStatus::pass) << "/" << r.rows.size();
    if (r.count(RowStatus::observed)) o.detail << " (" << r.count(RowStatus::observed) << " observed)";
    o.detail << "  ";
  }
  auto only = [&](const char* w, const char* want) {
    const auto c = dual_weights(ws(w));
    o.check(c.size() == 1 && equivalent(c.front().dual, ws(want)), std::string(w) + " dual");
  };
  only("6,16,21;48", "3,16,24;48");
  only("6,16,27;54", "4,18,27;54");
  for (const char* label : {"W_17", "Z_17", "E_18"})
    o.check(dual_weights(entry("min-elliptic-a0-gt1", label).weights).empty(), std::string(label) + " has a dual");
  bool strong = false;
  for (const auto& c : dual_weights(ws("2,3,3;9"))) strong = strong || c.strongly_dual;
  o.check(!strong, "(2,3,3;9) strongly dual");
  std::size_t self = 0, none = 0;
  for (const auto& e : catalog_table("reid-a0-1")) {
    if (e.has_flag("selfdual")) self += is_self_dual(e.weights);
    if (e.has_flag("derived")) none += dual_weights(e.weights).empty();
  }
  o.check(self == 5, "self-dual count " + std::to_string(self));
  o.check(none == 10, "no-dual count " + std::to_string(none));
}

void example441(Outcome& o) {
  const WeightSystem wa = ws("2,3,6;12"), wb = ws("2,4,5;12");
  const auto& row = entry("example-441", "simplex");
  const IntMatrix c = *entry_square(row);
  o.check(det(c) == -12, "det C = " + det(c).get_str());
  const auto s = weighted_simplex(wa);
  o.check(is_reflexive(s), "simplex not reflexive");
  std::vector<RatVector> want;
  for (auto v : std::vector<std::vector<long>>{{-1, -1, -1}, {-1, -1, 1}, {-1, 3, -1}, {5, -1, -1}}) {
    RatVector r;
    for (long x : v) r.emplace_back(x);
    want.push_back(r);
  }
  o.check(s.vertices() == want, "simplex vertices");
  const auto target = polytope_from_monomials("W^12,Y^3,X^2Y^2,XZ^2", wb, row.variables());
  // B^T carries the polar dual onto the partner's monomial points
  const RatMatrix bt = to_rational(offset_rows(c)).transpose();
  o.check(linear_image(polar_dual(s), bt, target.lattice()) == target, "polar dual differs from the monomial hull");
  const auto r = check_dual_correspondence(wa, wb, c);
  for (const auto& chk : r.checks) o.check(chk.passed, chk.name + ": " + chk.detail);
  o.check(verify_table("example-441").passed(), "example-441 table");
  if (o.ok) o.detail << r.checks.size() << " correspondence checks";
}

void example442(Outcome& o) {
  std::vector<LatticePolytope> d;
  for (int i = 1; i <= 6; ++i) d.push_back(*entry_polytope(entry("example-442", "Delta_" + std::to_string(i))));
  for (int i = 0; i < 6; ++i) {
    const std::string name = "Delta_" + std::to_string(i + 1);
    o.check(is_reflexive(d[i]), name + " not reflexive");
    o.check(rank_triple(d[i]).l0 == 0, name + " l0 != 0");
    o.check(are_lattice_equivalent(polar_dual(d[i]), d[5 - i]).has_value(), name + "* not equivalent to its mirror");
    if (i < 5) o.check(contains(d[i], d[i + 1]), name + " does not contain the next");
  }
  o.detail << d.size() << " polytopes";
}

std::vector<corpus::Named> identity_corpus() {
  std::vector<corpus::Named> out;
  for (auto& n : corpus::reflexive_polyhedra())
    if (n.polytope.ambient_dim() == 3) out.push_back(n);
  std::mt19937 rng(2024);
  const auto subs = corpus::random_reflexive_subpolytopes(100, rng);
  out.insert(out.end(), subs.begin(), subs.end());
  return out;
}

void identities(Outcome& o, const std::vector<corpus::Named>& polys) {
  for (const auto& n : polys) {
    const auto r = check_identities(n.polytope);
    o.check(r.reflexive && r.total == 24 && r.ranks.sum() == 20 && r.passed(), n.label);
  }
  o.detail << polys.size() << " polyhedra";
}

void mirror(Outcome& o, const std::vector<corpus::Named>& polys) {
  for (const auto& n : polys) {
    const auto r = rank_triple(n.polytope);
    const auto s = rank_triple(polar_dual(n.polytope));
    o.check(s.lg == r.ld && s.ld == r.lg && s.l0 == r.l0, n.label);
  }
  o.detail << polys.size() << " polyhedra";
}

void properties(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937 rng(8);
  const auto polys = corpus::reflexive_polyhedra();
  for (const auto& n : polys) o.check(polar_dual(polar_dual(n.polytope)) == n.polytope, "involution " + n.label);

  std::size_t reflexive = 0;
  for (int i = 0; i < 200; ++i) {
    const auto pts = oracle::random_polytope_with_origin(2 + i % 2, 1 + i % 4, rng);
    const auto p = oracle::to_polytope(pts);
    const bool want = corpus::oracle_reflexive(p);
    reflexive += want;
    o.check(polar_dual(polar_dual(p)) == p, "involution random " + std::to_string(i));
    o.check(reflexive_by_dual_vertices(p) == want && reflexive_by_dual_lattice_points(p) == want &&
                reflexive_by_facet_normals(p) == want && reflexive_by_lattice_distance(p) == want,
            "reflexivity conditions disagree on random " + std::to_string(i));
    auto got = lattice_points(p);
    std::vector<oracle::Pt> mine;
    for (const auto& x : got.coordinates) {
      oracle::Pt q;
      for (const auto& v : x) q.push_back(v.get_si());
      mine.push_back(q);
    }
    auto naive = oracle::naive_points(pts);
    std::sort(mine.begin(), mine.end());
    std::sort(naive.begin(), naive.end());
    o.check(mine == naive, "lattice points differ on random " + std::to_string(i));
  }

  std::size_t certificates = 0, squares = 0;
  for (const auto& id : table_ids())
    for (const auto& e : catalog_table(id)) {
      const WeightSystem& w = e.weights;
      if (defect(w) == 0 && w.size() > 2) continue;
      if (!is_reduced(w)) continue;
      for (const auto& cls : dual_weights(w))
        for (const auto& cert : cls.certificates) {
          const auto& sq = cert.square;
          bool back = false;
          for (const auto& d : dual_weights(sq.wb)) back = back || equivalent(d.dual, sq.wa);
          o.check(is_weighted_magic_square(sq.c.transpose(), sq.wb, sq.wa) && back, "transpose symmetry " + e.label);
          ++certificates;
        }
      for_each_square(w, [&](const IntMatrix& c) {
        o.check(Integer(det(c) * defect(w)) == Integer(det(offset_rows(c)) * w.degree), "determinant identity " + e.label);
        ++squares;
      });
    }

  std::size_t decomposed = 0;
  for (const auto& n : polys)
    for (std::size_t k : {2u, 3u})
      for (const auto& target : lattice_points(scale(n.polytope, k)).points) {
        const auto d = decompose_point(n.polytope, k, target);
        bool ok = d.has_value() && d->size() == k;
        if (ok) {
          RatVector sum(target.size());
          for (const auto& x : *d) {
            ok = ok && n.polytope.contains_point(x) && n.polytope.lattice().contains(x);
            for (std::size_t i = 0; i < x.size(); ++i) sum[i] += x[i];
          }
          ok = ok && sum == target;
        }
        o.check(ok, "decomposition " + n.label);
        ++decomposed;
      }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.detail << "random " << reflexive << "/200 reflexive, " << certificates << " certificates, " << squares
           << " squares, " << decomposed << " decompositions, " << static_cast<int>(secs) << "s";
}

void thm439(Outcome& o) {
  const auto& rows = catalog_table("thm439-polytopes");
  for (const auto& e : rows) {
    const auto p = entry_polytope(e);
    o.check(p.has_value(), e.label + " has no polytope");
    if (!p) continue;
    o.check(is_reflexive(*p), e.label + " not reflexive");
    o.check(rank_triple(*p).l0 == 0, e.label + " l0 != 0");
    const auto c = entry_square(e);
    std::vector<Exponents> ms;
    for (std::size_t i = 0; i < c->rows(); ++i) {
      Exponents m{0};
      for (std::size_t j = 0; j < c->cols(); ++j) m.push_back(c->operator()(i, j).get_si());
      std::int64_t used = 0;
      for (std::size_t j = 1; j < m.size(); ++j) used += m[j] * e.weights.weights[j - 1];
      m[0] = e.weights.degree - used;
      ms.push_back(m);
    }
    ms.push_back(Exponents(e.weights.size() + 1, 0));
    ms.back()[0] = e.weights.degree;
    o.check(contains(*p, monomials_to_polytope(ms, e.weights)), e.label + " misses the partner's dual simplex");
    const WeightSystem& partner = e.duals.front();
    if (equivalent(partner, e.weights)) continue;  // only dual rows are compared across
    const CatalogEntry* q = find_by_weights("thm439-polytopes", partner);
    o.check(q != nullptr, e.label + " partner row missing");
    if (q) o.check(are_lattice_equivalent(polar_dual(*p), *entry_polytope(*q)).has_value(), e.label + "* vs " + q->label);
  }
  const auto r = verify_table("thm439-polytopes");
  o.check(r.passed(), "thm439 table");
  o.detail << rows.size() << " rows, " << r.count(RowStatus::observed) << " observed";
}

void polygons(Outcome& o) {
  const auto classes = oracle::reflexive_polygons(4);
  std::vector<LatticePolytope> reps;
  for (const auto& c : classes) {
    std::vector<oracle::Pt> pts;
    for (const auto& v : c) pts.push_back({v[0], v[1]});
    const auto p = oracle::to_polytope(pts);
    o.check(is_reflexive(p), "oracle polygon not reflexive");
    bool fresh = true;
    for (const auto& q : reps) fresh = fresh && !are_lattice_equivalent(p, q).has_value();
    if (fresh) reps.push_back(p);
  }
  o.check(classes.size() == 16, "oracle found " + std::to_string(classes.size()));
  o.check(reps.size() == 16, "library dedup gives " + std::to_string(reps.size()));
  o.detail << reps.size() << " classes";
}

}  // namespace

int main() {
  int failed = 0;
  std::vector<corpus::Named> polys;
  auto run = [&](int id, const char* name, const std::function<void(Outcome&)>& f) {
    Outcome o;
    try {
      f(o);
    } catch (const std::exception& ex) {
      o.ok = false;
      o.detail << " exception: " << ex.what();
    }
    failed += !o.ok;
    std::printf("%s %2d %s: %s\n", o.ok ? "PASS" : "FAIL", id, name, o.detail.str().c_str());
    std::fflush(stdout);
  };
  run(1, "strange duality", arnold);
  run(2, "A-D-E closure", ade);
  run(3, "elliptic tables", elliptic);
  run(4, "simplex pair example", example441);
  run(5, "nested polytope chain", example442);
  run(6, "20/24 identities", [&](Outcome& o) {
    polys = identity_corpus();
    identities(o, polys);
  });
  run(7, "mirror rank swap", [&](Outcome& o) { mirror(o, polys); });
  run(8, "property suite", properties);
  run(9, "Newton polytope table", thm439);
  run(10, "reflexive polygons", polygons);
  return failed ? 1 : 0;
}
