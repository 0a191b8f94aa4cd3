#include "polydual/json_io.hpp"

#include <fstream>

#include "polydual/monomial.hpp"

namespace polydual {

namespace {

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<std::int64_t>())));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected an integer or a \"p/q\" string, got " + j.dump());
}

RatVector rational_row(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array, got " + j.dump());
  RatVector out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

Json rational_row_json(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& err) {
    throw InputError(path + ": " + err.what());
  }
}

Json to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json to_json(const Rational& v) {
  if (v.get_den() == 1) return to_json(Integer(v.get_num()));
  return Json(v.get_str());
}

Json to_json(const WeightSystem& w) {
  return Json{{"weights", w.weights}, {"degree", w.degree}};
}

WeightSystem weight_system_from_json(const Json& j) {
  if (j.is_string()) return parse_weight_system(j.get<std::string>());
  if (!j.is_object() || !j.contains("weights") || !j.contains("degree"))
    throw InputError("weight system needs \"weights\" and \"degree\"");
  try {
    WeightSystem w{j.at("weights").get<std::vector<std::int64_t>>(), j.at("degree").get<std::int64_t>()};
    validate(w);
    return w;
  } catch (const Json::exception& err) {
    throw InputError(std::string("weight system: ") + err.what());
  }
}

Json to_json(const LatticePolytope& p) {
  Json basis = Json::array();
  for (std::size_t i = 0; i < p.lattice().basis().rows(); ++i)
    basis.push_back(rational_row_json(p.lattice().basis().row(i)));
  Json verts = Json::array();
  for (const auto& v : p.vertices()) verts.push_back(rational_row_json(v));
  return Json{{"lattice_basis", basis}, {"vertices", verts}};
}

LatticePolytope polytope_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("polytope JSON must be an object");
  if (j.contains("monomials")) {
    const WeightSystem w = weight_system_from_json(j.at("weight_system"));
    std::vector<std::string> names = kDefaultVariables;
    if (j.contains("variables")) names = parse_variable_names(j.at("variables").get<std::string>());
    std::vector<Exponents> ms;
    for (const auto& m : j.at("monomials")) ms.push_back(parse_weighted_monomial(m.get<std::string>(), w, names));
    return monomials_to_polytope(ms, w);
  }
  if (!j.contains("vertices") || !j.at("vertices").is_array() || j.at("vertices").empty())
    throw InputError("polytope JSON needs a non-empty \"vertices\" array");
  std::vector<RatVector> pts;
  for (const auto& v : j.at("vertices")) pts.push_back(rational_row(v));
  const std::size_t n = pts.front().size();
  for (const auto& v : pts)
    if (v.size() != n) throw InputError("vertices of different lengths");
  if (!j.contains("lattice_basis")) return LatticePolytope(Lattice::standard(n), pts);
  std::vector<RatVector> rows;
  for (const auto& r : j.at("lattice_basis")) rows.push_back(rational_row(r));
  if (rows.size() != n) throw InputError("lattice basis must have one row per coordinate");
  RatMatrix basis(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw InputError("lattice basis must be square");
    basis.set_row(i, rows[i]);
  }
  return LatticePolytope(Lattice(basis), pts);
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const DualityCertificate& c) {
  return Json{{"C", to_json(c.square.c)},
              {"dual_order", to_json(c.square.wb)},
              {"primitive", c.primitive},
              {"strongly_dual", c.strongly_dual}};
}

Json to_json(const DualClass& c, bool verbose) {
  const auto& w = c.witness();
  Json out{{"dual", to_json(c.dual)},
           {"C", to_json(w.square.c)},
           {"primitive", w.primitive},
           {"strongly_dual", c.strongly_dual}};
  if (verbose) {
    Json certs = Json::array();
    for (const auto& cert : c.certificates) certs.push_back(to_json(cert));
    out["certificates"] = certs;
    out["multiplicity"] = c.certificates.size();
  }
  return out;
}

Json to_json(const FaceCounts& c) {
  Json faces = Json::array();
  for (const auto& f : c.faces)
    faces.push_back(Json{{"dim", f.face.dim},
                         {"vertices", f.face.vertices},
                         {"points", f.points},
                         {"interior_points", f.interior_points}});
  Json pts = Json::array();
  for (const auto& p : c.points) pts.push_back(rational_row_json(p));
  return Json{{"l", c.l}, {"l_star", c.l_star}, {"points", pts}, {"faces", faces}};
}

Json to_json(const RankTriple& r) { return Json{{"lg", r.lg}, {"ld", r.ld}, {"l0", r.l0}}; }

Json to_json(const DualGraph& g) {
  Json nodes = Json::array();
  for (const auto& n : g.nodes) {
    Json pt = Json::array();
    for (const auto& x : n.point) pt.push_back(to_json(x));
    nodes.push_back(Json{{"point", pt}, {"multiplicity", n.multiplicity}, {"on_edge", n.carrier_dim == 1}});
  }
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"weight", e.weight}});
  Json removed = Json::array();
  for (const auto& r : g.removed) {
    Json pt = Json::array();
    for (const auto& x : r) pt.push_back(to_json(x));
    removed.push_back(pt);
  }
  Json adj = Json::array();
  for (const auto& a : g.adjacency()) adj.push_back(a);
  return Json{{"nodes", nodes},
              {"edges", edges},
              {"adjacency", adj},
              {"removed", removed},
              {"tree", g.is_tree()},
              {"total_multiplicity", g.total_multiplicity()}};
}

Json to_json(const CorrespondenceReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"passed", r.all_passed()}, {"checks", checks}};
}

Json to_json(const TableReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back(Json{{"label", row.label},
                        {"weights", row.weights},
                        {"status", to_string(row.status)},
                        {"computed", row.computed},
                        {"failures", row.failures}});
  return Json{{"table", r.table_id},
              {"passed", r.passed()},
              {"pass", r.count(RowStatus::pass)},
              {"fail", r.count(RowStatus::fail)},
              {"observed", r.count(RowStatus::observed)},
              {"rows", rows}};
}

}  // namespace polydual
