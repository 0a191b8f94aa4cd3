#include <CLI11.hpp>

#include <cctype>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "polydual/catalog.hpp"
#include "polydual/duality.hpp"
#include "polydual/json_io.hpp"
#include "polydual/k3_invariants.hpp"
#include "polydual/monomial.hpp"
#include "polydual/polytope.hpp"
#include "polydual/verify.hpp"
#include "polydual/weight_system.hpp"

using namespace polydual;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct Options {
  bool json = false;
  bool verbose = false;
  std::string vars = "W,X,Y,Z";
  std::vector<std::string> names() const { return parse_variable_names(vars); }
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json read_json(const std::string& path) {
  if (path != "-") return load_json_file(path);
  try {
    return Json::parse(std::cin);
  } catch (const Json::parse_error& err) {
    throw InputError(std::string("stdin: ") + err.what());
  }
}

LatticePolytope read_polytope(const std::string& path, const Options& opt) {
  Json j = read_json(path);
  if (j.is_object() && j.contains("monomials") && !j.contains("variables")) j["variables"] = opt.vars;
  try {
    return polytope_from_json(j);
  } catch (const Json::exception& err) {
    throw InputError(path + ": " + err.what());
  }
}

std::string row_monomial(const IntMatrix& c, std::size_t i, const std::vector<std::string>& names) {
  Exponents m{0};
  for (std::size_t j = 0; j < c.cols(); ++j) m.push_back(c(i, j).get_si());
  return format_monomial(m, names);
}

std::string square_text(const IntMatrix& c, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < c.rows(); ++i) out += (i ? "," : "") + row_monomial(c, i, names);
  return out;
}

// "Y^2Z,X^3Y^2,Z^2" (rows as monomials) or "0,2,1;3,2,0;0,0,2"
IntMatrix parse_square(const std::string& text, const WeightSystem& wa, const std::vector<std::string>& names) {
  const std::size_t n = wa.size();
  IntMatrix c(n, n);
  bool letters = false;
  for (char ch : text) letters |= std::isalpha(static_cast<unsigned char>(ch)) != 0;
  if (letters) {
    const auto rows = split_monomial_list(text);
    if (rows.size() != n) throw InputError("C needs " + std::to_string(n) + " monomial rows");
    for (std::size_t i = 0; i < n; ++i) {
      const Exponents m = parse_weighted_monomial(rows[i], wa, names);
      if (m[0] != 0) throw InputError("a row of C cannot involve " + names[0]);
      for (std::size_t j = 0; j < n; ++j) c(i, j) = static_cast<long>(m[j + 1]);
    }
    return c;
  }
  std::vector<std::string> rows;
  std::stringstream in(text);
  for (std::string r; std::getline(in, r, ';');) rows.push_back(r);
  if (rows.size() != n) throw InputError("C needs " + std::to_string(n) + " rows separated by ';'");
  for (std::size_t i = 0; i < n; ++i) {
    std::stringstream row(rows[i]);
    std::size_t j = 0;
    for (std::string x; std::getline(row, x, ',');) {
      if (j == n) throw InputError("row " + std::to_string(i + 1) + " of C is too long");
      try {
        c(i, j++) = Integer(x.substr(x.find_first_not_of(' ')));
      } catch (const std::exception&) {
        throw InputError("bad entry '" + x + "' in C");
      }
    }
    if (j != n) throw InputError("row " + std::to_string(i + 1) + " of C is too short");
  }
  return c;
}

RatVector parse_point(const std::string& text) {
  RatVector v;
  std::stringstream in(text);
  for (std::string x; std::getline(in, x, ',');) v.push_back(parse_rational(x));
  if (v.empty()) throw InputError("empty point");
  return v;
}

// ---------------------------------------------------------------------------

int cmd_reduce(const Options& opt, const std::string& text) {
  const WeightSystem w = parse_weight_system(text);
  const WeightSystem r = reduce(w);
  if (opt.json) {
    emit(Json{{"input", to_json(w)},
              {"reduced", to_json(r)},
              {"a0", defect(r)},
              {"well_formed", is_well_formed(r.weights)},
              {"canonical", to_json(canonical_form(w))}});
  } else {
    std::cout << r.to_string() << "\n";
    if (opt.verbose)
      std::cout << "a0 " << defect(r) << (is_well_formed(r.weights) ? "  well formed" : "  not well formed") << "\n";
  }
  return kPass;
}

int cmd_dual(const Options& opt, const std::string& text) {
  const WeightSystem w = reduce(parse_weight_system(text));
  const DualSearch search = dual_search(w);
  const auto names = opt.names();
  if (opt.json) {
    Json out = Json::array();
    for (const auto& c : search.classes) out.push_back(to_json(c, opt.verbose));
    emit(out);
    return kPass;
  }
  if (search.classes.empty()) std::cout << "no dual\n";
  for (const auto& c : search.classes) {
    const auto& w0 = c.witness();
    std::cout << c.dual.to_string() << "  " << (c.strongly_dual ? "strong" : "weak") << "  "
              << (w0.primitive ? "primitive" : "not primitive") << "  C = " << square_text(w0.square.c, names);
    if (opt.verbose) std::cout << "  certificates " << c.certificates.size();
    std::cout << "\n";
  }
  if (opt.verbose)
    std::cout << "subsets " << search.subsets_examined << ", raw certificates " << search.raw_certificates << "\n";
  return kPass;
}

int cmd_selfdual(const Options& opt, const std::string& text) {
  const WeightSystem w = reduce(parse_weight_system(text));
  const auto classes = dual_weights(w);
  const DualClass* self = nullptr;
  for (const auto& c : classes)
    if (equivalent(c.dual, w)) self = &c;
  const auto sym = self ? symmetric_certificate(w) : std::nullopt;
  const auto names = opt.names();
  if (opt.json) {
    Json certs = Json::array();
    if (self)
      for (const auto& cert : self->certificates) certs.push_back(to_json(cert));
    emit(Json{{"self_dual", self != nullptr},
              {"symmetric", sym ? to_json(*sym) : Json(nullptr)},
              {"certificates", certs}});
  } else {
    std::cout << (self ? "self-dual" : "not self-dual") << "\n";
    if (self)
      for (const auto& cert : self->certificates)
        std::cout << "  C = " << square_text(cert.square.c, names) << (cert.strongly_dual ? "  strong" : "")
                  << (cert.primitive ? "  primitive" : "") << "\n";
    if (sym) std::cout << "  symmetric C = " << square_text(*sym, names) << "\n";
  }
  return self ? kPass : kFail;
}

int cmd_magic(const Options& opt, const std::string& wtext, const std::string& ctext) {
  const WeightSystem wa = parse_weight_system(wtext);
  const auto names = opt.names();
  const IntMatrix c = parse_square(ctext, wa, names);
  const auto wb = weights_from_square(c);
  const bool magic = wb && is_weighted_magic_square(c, wa, *wb);
  const WeightedMagicSquare sq{c, wa, wb.value_or(WeightSystem{})};
  const bool primitive = magic && is_primitive(sq);
  const bool strong = magic && is_strongly_dual(sq);
  if (opt.json) {
    emit(Json{{"C", to_json(c)},
              {"det", to_json(det(c))},
              {"magic", magic},
              {"dual", wb ? to_json(*wb) : Json(nullptr)},
              {"primitive", primitive},
              {"strongly_dual", strong}});
  } else {
    std::cout << "det C = " << to_string(det(c)) << "\n";
    if (!magic) {
      std::cout << "not a weighted magic square\n";
    } else {
      std::cout << "dual " << wb->to_string() << (primitive ? "  primitive" : "  not primitive")
                << (strong ? "  strong" : "  weak") << "\n";
    }
  }
  return magic ? kPass : kFail;
}

int cmd_simplex(const Options& opt, const std::string& text, bool full) {
  const WeightSystem w = reduce(parse_weight_system(text));
  const LatticePolytope p = full ? full_newton_polytope(w) : weighted_simplex(w);
  if (opt.json) emit(to_json(p));
  else std::cout << to_string(p) << "\n";
  return kPass;
}

int cmd_polar(const Options& opt, const std::string& path) {
  const LatticePolytope d = polar_dual(read_polytope(path, opt));
  if (opt.json) emit(to_json(d));
  else std::cout << to_string(d) << "\n";
  return kPass;
}

int cmd_reflexive(const Options& opt, const std::string& path) {
  const LatticePolytope p = read_polytope(path, opt);
  ReflexivityReport r;
  if (p.is_full_dimensional() && p.has_interior_origin()) r = reflexivity(p);
  if (opt.json) {
    Json out{{"reflexive", r.reflexive},
             {"integral", p.is_integral()},
             {"origin_interior", r.origin_interior},
             {"no_intermediate_points", r.no_intermediate_points}};
    if (r.violating_facet) out["violating_facet"] = *r.violating_facet;
    emit(out);
  } else {
    std::cout << (r.reflexive ? "reflexive" : "not reflexive") << "\n";
    if (opt.verbose || !r.reflexive) {
      std::cout << "  integral " << (p.is_integral() ? "yes" : "no") << ", origin interior "
                << (r.origin_interior ? "yes" : "no") << "\n";
      if (r.violating_facet) std::cout << "  facet " << *r.violating_facet << " has a non-integral dual vertex\n";
    }
  }
  return r.reflexive ? kPass : kFail;
}

int cmd_points(const Options& opt, const std::string& path) {
  const FaceCounts fc = lattice_points(read_polytope(path, opt));
  if (opt.json) {
    emit(to_json(fc));
    return kPass;
  }
  std::cout << "l " << fc.l << "  l* " << fc.l_star << "\n";
  if (opt.verbose) {
    for (const auto& f : fc.faces) {
      std::cout << "  dim " << f.face.dim << " {";
      for (std::size_t i = 0; i < f.face.vertices.size(); ++i) std::cout << (i ? "," : "") << f.face.vertices[i];
      std::cout << "}  points " << f.points << "  interior " << f.interior_points << "\n";
    }
    for (const auto& pt : fc.points) std::cout << "  " << pt << "\n";
  }
  return kPass;
}

int cmd_ranks(const Options& opt, const std::string& path) {
  const LatticePolytope p = read_polytope(path, opt);
  const IdentityReport id = check_identities(p);
  if (!id.reflexive) throw NotReflexiveError("ranks need a reflexive 3-dimensional polytope");
  if (opt.json) {
    emit(Json{{"lg", id.ranks.lg}, {"ld", id.ranks.ld}, {"l0", id.ranks.l0}, {"sum20", id.sum20}, {"sum24", id.sum24}});
  } else {
    std::cout << "lg " << id.ranks.lg << "  ld " << id.ranks.ld << "  l0 " << id.ranks.l0 << "\n";
    std::cout << "sum " << id.ranks.sum() << "  edge total " << id.total << "\n";
  }
  return id.passed() ? kPass : kFail;
}

int cmd_graph(const Options& opt, const std::string& path) {
  const DualGraph g = picard_dual_graph(read_polytope(path, opt));
  if (opt.json) {
    emit(to_json(g));
    return kPass;
  }
  std::cout << g.nodes.size() << " nodes  " << g.edges.size() << " edges  multiplicity " << g.total_multiplicity()
            << (g.is_tree() ? "  tree" : "") << "\n";
  const auto adj = g.adjacency();
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    std::cout << "  " << i << "  " << g.nodes[i].point;
    if (g.nodes[i].multiplicity > 1) std::cout << "  x" << g.nodes[i].multiplicity;
    std::cout << "  -";
    for (auto j : adj[i]) std::cout << " " << j;
    std::cout << "\n";
  }
  return kPass;
}

int cmd_equiv(const Options& opt, const std::string& a, const std::string& b) {
  const auto u = are_lattice_equivalent(read_polytope(a, opt), read_polytope(b, opt));
  if (opt.json) {
    emit(Json{{"equivalent", u.has_value()}, {"U", u ? to_json(*u) : Json(nullptr)}});
  } else {
    std::cout << (u ? "equivalent" : "not equivalent") << "\n";
    if (u && opt.verbose) std::cout << *u;
  }
  return u ? kPass : kFail;
}

int cmd_decompose(const Options& opt, const std::string& path, std::size_t k, const std::string& point) {
  const auto parts = decompose_point(read_polytope(path, opt), k, parse_point(point));
  if (opt.json) {
    Json out = Json::array();
    if (parts)
      for (const auto& v : *parts) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(to_json(x));
        out.push_back(row);
      }
    emit(Json{{"found", parts.has_value()}, {"points", out}});
  } else if (parts) {
    for (const auto& v : *parts) std::cout << v << "\n";
  } else {
    std::cout << "no decomposition\n";
  }
  return parts ? kPass : kFail;
}

int cmd_correspond(const Options& opt, const std::string& wa_text, const std::string& wb_text,
                   const std::string& ctext) {
  const WeightSystem wa = parse_weight_system(wa_text);
  const WeightSystem wb = parse_weight_system(wb_text);
  const IntMatrix c = parse_square(ctext, wa, opt.names());
  const CorrespondenceReport r = check_dual_correspondence(wa, wb, c);
  if (opt.json) {
    emit(to_json(r));
  } else {
    for (const auto& chk : r.checks) {
      std::cout << (chk.passed ? "ok    " : "FAIL  ") << chk.name;
      if (opt.verbose || !chk.passed) std::cout << "  " << chk.detail;
      std::cout << "\n";
    }
  }
  return r.all_passed() ? kPass : kFail;
}

int cmd_verify(const Options& opt, std::vector<std::string> tables) {
  if (tables.empty()) tables = table_ids();
  for (const auto& t : tables) catalog_source(t);  // unknown ids fail before any work
  bool ok = true;
  Json all = Json::array();
  for (const auto& t : tables) {
    const TableReport r = verify_table(t);
    ok &= r.passed();
    if (opt.json) all.push_back(to_json(r));
    else std::cout << r.to_text();
  }
  if (opt.json) emit(Json{{"passed", ok}, {"tables", all}});
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dual weight systems, reflexive polytopes and K3 lattice ranks"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "Print JSON");
  app.add_flag("--verbose", opt.verbose, "More detail; certificate multiplicities for dual");
  app.add_option("--vars", opt.vars, "Variable letters for X_0..X_n")->capture_default_str();

  std::string w1, w2, ctext, path1, path2, point;
  std::size_t k = 2;
  std::vector<std::string> tables;
  int rc = kPass;

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->fallthrough();
    return s;
  };

  auto* reduce_cmd = sub("reduce", "Reduce a weight system");
  reduce_cmd->add_option("weights", w1, "e.g. 2,3,6;12")->required();
  reduce_cmd->callback([&] { rc = cmd_reduce(opt, w1); });

  auto* dual_cmd = sub("dual", "All dual weight systems with certificates");
  dual_cmd->add_option("weights", w1)->required();
  dual_cmd->callback([&] { rc = cmd_dual(opt, w1); });

  auto* self_cmd = sub("selfdual", "Is the weight system dual to itself");
  self_cmd->add_option("weights", w1)->required();
  self_cmd->callback([&] { rc = cmd_selfdual(opt, w1); });

  auto* magic_cmd = sub("magic", "Check a weighted magic square C for the given weights");
  magic_cmd->add_option("weights", w1)->required();
  magic_cmd->add_option("C", ctext, "rows as monomials (Y^2Z,X^3Y^2,Z^2) or numbers (0,2,1;3,2,0;0,0,2)")
      ->required();
  magic_cmd->callback([&] { rc = cmd_magic(opt, w1, ctext); });

  auto* simplex_cmd = sub("simplex", "The weighted simplex in the monomial lattice");
  simplex_cmd->add_option("weights", w1)->required();
  simplex_cmd->callback([&] { rc = cmd_simplex(opt, w1, false); });

  auto* newton_cmd = sub("newton", "Hull of the lattice points of the weighted simplex");
  newton_cmd->add_option("weights", w1)->required();
  newton_cmd->callback([&] { rc = cmd_simplex(opt, w1, true); });

  auto* polar_cmd = sub("polar", "Polar dual of a polytope file");
  polar_cmd->add_option("polytope", path1, "JSON file, - for stdin")->required();
  polar_cmd->callback([&] { rc = cmd_polar(opt, path1); });

  auto* refl_cmd = sub("reflexive", "Reflexivity test");
  refl_cmd->add_option("polytope", path1)->required();
  refl_cmd->callback([&] { rc = cmd_reflexive(opt, path1); });

  auto* points_cmd = sub("points", "Lattice points per face");
  points_cmd->add_option("polytope", path1)->required();
  points_cmd->callback([&] { rc = cmd_points(opt, path1); });

  auto* ranks_cmd = sub("ranks", "Lattice ranks of a reflexive 3-polytope");
  ranks_cmd->add_option("polytope", path1)->required();
  ranks_cmd->callback([&] { rc = cmd_ranks(opt, path1); });

  auto* graph_cmd = sub("graph", "Dual graph of the divisor lattice");
  graph_cmd->add_option("polytope", path1)->required();
  graph_cmd->callback([&] { rc = cmd_graph(opt, path1); });

  auto* equiv_cmd = sub("equiv", "Lattice equivalence of two polytopes");
  equiv_cmd->add_option("first", path1)->required();
  equiv_cmd->add_option("second", path2)->required();
  equiv_cmd->callback([&] { rc = cmd_equiv(opt, path1, path2); });

  auto* dec_cmd = sub("decompose", "Write a lattice point of kP as a sum of k points of P");
  dec_cmd->add_option("polytope", path1)->required();
  dec_cmd->add_option("k", k)->required()->check(CLI::PositiveNumber);
  dec_cmd->add_option("point", point, "comma separated, p/q allowed")->required();
  dec_cmd->callback([&] { rc = cmd_decompose(opt, path1, k, point); });

  auto* corr_cmd = sub("correspond", "Check the simplex correspondence for a square C");
  corr_cmd->add_option("weights", w1)->required();
  corr_cmd->add_option("dual", w2)->required();
  corr_cmd->add_option("C", ctext)->required();
  corr_cmd->callback([&] { rc = cmd_correspond(opt, w1, w2, ctext); });

  auto* verify_cmd = sub("verify", "Recompute embedded tables; all when none is named");
  verify_cmd->add_option("tables", tables);
  verify_cmd->add_option("--table", tables, "Table id (repeatable)");
  verify_cmd->callback([&] { rc = cmd_verify(opt, tables); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return rc;
}
