#include "polydual/k3_invariants.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace polydual {

namespace {

void require_reflexive_3d(const LatticePolytope& p, const char* what) {
  if (p.ambient_dim() != 3 || !p.is_full_dimensional())
    throw NotReflexiveError(std::string(what) + " needs a 3-dimensional polytope");
  bool ok = false;
  try {
    ok = is_reflexive(p);
  } catch (const GeometryError&) {
    ok = false;
  }
  if (!ok) throw NotReflexiveError(std::string(what) + " needs a reflexive polytope: " + to_string(p));
}

std::size_t interior_on_segment(const IntVector& from, const IntVector& to) {
  IntVector d(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) d[i] = to[i] - from[i];
  Integer g = content(d);
  return g == 0 ? 0 : static_cast<std::size_t>(g.get_ui()) - 1;
}

IntVector integral_coordinates(const RatVector& v) {
  IntVector out;
  for (const auto& x : v) {
    if (x.get_den() != 1) throw NotReflexiveError("non-integral vertex");
    out.push_back(x.get_num());
  }
  return out;
}

IntVector dual_vertex(const CoordinateFacet& f) {
  RatVector v;
  for (const auto& z : f.normal) v.push_back(Rational(z) / f.offset);
  return integral_coordinates(v);
}

bool lex_less(const RatVector& a, const RatVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

EdgePairData edge_pair_data(const LatticePolytope& p) {
  require_reflexive_3d(p, "edge data");
  EdgePairData out;
  const auto& faces = p.faces();
  const auto& fs = p.coordinate_facets();
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].dim != 1) continue;
    const std::size_t u = faces[i].vertices.front(), v = faces[i].vertices.back();
    std::vector<IntVector> duals;
    for (const auto& f : fs)
      if (std::binary_search(f.vertices.begin(), f.vertices.end(), u) &&
          std::binary_search(f.vertices.begin(), f.vertices.end(), v))
        duals.push_back(dual_vertex(f));
    if (duals.size() != 2) throw GeometryError("edge not on exactly two facets");
    EdgePair e;
    e.face = i;
    e.l_star = interior_on_segment(integral_coordinates(p.vertex_coordinates()[u]),
                                   integral_coordinates(p.vertex_coordinates()[v]));
    e.l_star_dual = interior_on_segment(duals[0], duals[1]);
    e.dual_from = duals[0];
    e.dual_to = duals[1];
    out.edges.push_back(std::move(e));
  }
  return out;
}

RankTriple rank_triple(const LatticePolytope& p) {
  require_reflexive_3d(p, "rank triple");
  RankTriple r;
  r.lg = lattice_points(p).skeleton(1) - 3;
  r.ld = lattice_points(polar_dual(p)).skeleton(1) - 3;
  for (const auto& e : edge_pair_data(p).edges) r.l0 += e.l_star * e.l_star_dual;
  return r;
}

IdentityReport check_identities(const LatticePolytope& p) {
  IdentityReport report;
  try {
    require_reflexive_3d(p, "identities");
  } catch (const NotReflexiveError&) {
    return report;
  }
  report.reflexive = true;
  report.ranks = rank_triple(p);
  for (const auto& e : edge_pair_data(p).edges) {
    report.contributions.push_back((e.l_star + 1) * (e.l_star_dual + 1));
    report.total += report.contributions.back();
  }
  report.sum20 = report.ranks.sum() == 20;
  report.sum24 = report.total == 24;
  return report;
}

bool mirror_rank_swap(const LatticePolytope& p) {
  const RankTriple a = rank_triple(p);
  const RankTriple b = rank_triple(polar_dual(p));
  return a.lg == b.ld && a.ld == b.lg && a.l0 == b.l0;
}

// ------------------------------------------------------------ dual graph

std::size_t DualGraph::total_multiplicity() const {
  std::size_t t = 0;
  for (const auto& n : nodes) t += n.multiplicity;
  return t;
}

std::vector<std::vector<std::size_t>> DualGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(nodes.size());
  for (const auto& e : edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

bool DualGraph::is_connected() const {
  if (nodes.empty()) return true;
  const auto adj = adjacency();
  std::vector<bool> seen(nodes.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == nodes.size();
}

bool DualGraph::is_tree() const { return is_connected() && edges.size() + 1 == std::max<std::size_t>(nodes.size(), 1); }

DualGraph picard_dual_graph(const LatticePolytope& p) {
  require_reflexive_3d(p, "dual graph");
  const LatticePolytope dual = polar_dual(p);
  const FaceCounts counts = lattice_points(dual);
  const auto& faces = dual.faces();
  const EdgePairData pairs = edge_pair_data(dual);

  std::vector<std::size_t> skeleton;
  for (std::size_t i = 0; i < counts.points.size(); ++i)
    if (faces[counts.carrier[i]].dim <= 1) skeleton.push_back(i);
  std::sort(skeleton.begin(), skeleton.end(),
            [&](std::size_t a, std::size_t b) { return lex_less(counts.points[a], counts.points[b]); });

  auto is_basis = [&](std::size_t i, std::size_t j, std::size_t k) {
    IntMatrix m = IntMatrix::from_rows(
        std::vector<IntVector>{counts.coordinates[i], counts.coordinates[j], counts.coordinates[k]}, 3);
    return abs(det(m)) == 1;
  };

  // The divisors {X_i = 0} sit at the unit vectors; removing them gives the
  // resolution graph at infinity.
  std::vector<std::size_t> triple;
  for (std::size_t axis = 0; axis < 3; ++axis)
    for (auto idx : skeleton) {
      RatVector unit(3, Rational(0));
      unit[axis] = 1;
      if (counts.points[idx] == unit) triple.push_back(idx);
    }
  bool coordinate = triple.size() == 3 && is_basis(triple[0], triple[1], triple[2]);
  if (!coordinate) triple.clear();

  const std::size_t s = skeleton.size();
  for (std::size_t i = 0; i < s && triple.empty(); ++i)
    for (std::size_t j = i + 1; j < s && triple.empty(); ++j)
      for (std::size_t k = j + 1; k < s && triple.empty(); ++k)
        if (is_basis(skeleton[i], skeleton[j], skeleton[k])) triple = {skeleton[i], skeleton[j], skeleton[k]};
  if (triple.empty()) throw GraphUnavailableError("no basis of N among the skeleton points of the dual");

  DualGraph g;
  g.coordinate_triple = coordinate;
  std::vector<std::size_t> node_of(counts.points.size(), SIZE_MAX);
  for (auto idx : skeleton) {
    if (std::find(triple.begin(), triple.end(), idx) != triple.end()) continue;
    GraphNode node;
    node.point = counts.coordinates[idx];
    node.carrier_dim = faces[counts.carrier[idx]].dim;
    if (node.carrier_dim == 1)
      for (const auto& e : pairs.edges)
        if (e.face == counts.carrier[idx]) node.multiplicity = e.l_star_dual + 1;
    node_of[idx] = g.nodes.size();
    g.nodes.push_back(std::move(node));
  }
  for (auto idx : triple) g.removed.push_back(counts.coordinates[idx]);

  std::vector<std::size_t> vertex_face(dual.vertices().size(), SIZE_MAX);
  for (std::size_t i = 0; i < faces.size(); ++i)
    if (faces[i].dim == 0) vertex_face[faces[i].vertices.front()] = i;

  for (const auto& e : pairs.edges) {
    const std::size_t u = faces[e.face].vertices.front(), v = faces[e.face].vertices.back();
    const RatVector& cu = dual.vertex_coordinates()[u];
    const RatVector& cv = dual.vertex_coordinates()[v];
    std::vector<std::pair<Rational, std::size_t>> on_edge;
    for (auto idx : skeleton) {
      const std::size_t c = counts.carrier[idx];
      if (c != e.face && c != vertex_face[u] && c != vertex_face[v]) continue;
      Rational t = 0;
      for (std::size_t j = 0; j < cu.size(); ++j) t += (counts.coordinates[idx][j] - cu[j]) * (cv[j] - cu[j]);
      on_edge.emplace_back(t, idx);
    }
    std::sort(on_edge.begin(), on_edge.end());
    for (std::size_t k = 0; k + 1 < on_edge.size(); ++k) {
      const std::size_t a = node_of[on_edge[k].second], b = node_of[on_edge[k + 1].second];
      if (a == SIZE_MAX || b == SIZE_MAX) continue;
      g.edges.push_back({std::min(a, b), std::max(a, b),
                         std::max(g.nodes[a].multiplicity, g.nodes[b].multiplicity)});
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const GraphEdge& x, const GraphEdge& y) {
    return std::tie(x.from, x.to) < std::tie(y.from, y.to);
  });
  return g;
}

// ------------------------------------------------------------ tree codes

std::string tree_code(const std::vector<std::vector<std::size_t>>& adj) {
  const std::size_t n = adj.size();
  if (n == 0) return "";
  std::size_t degree_sum = 0;
  for (const auto& a : adj) degree_sum += a.size();
  if (degree_sum != 2 * (n - 1)) throw std::invalid_argument("not a tree");
  {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (auto w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
    }
    if (count != n) throw std::invalid_argument("not a tree");
  }

  // peel leaves to find the center(s)
  std::vector<std::size_t> deg(n);
  for (std::size_t i = 0; i < n; ++i) deg[i] = adj[i].size();
  std::vector<std::size_t> layer;
  for (std::size_t i = 0; i < n; ++i)
    if (deg[i] <= 1) layer.push_back(i);
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next;
    for (auto v : layer)
      for (auto w : adj[v])
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }

  std::function<std::string(std::size_t, std::size_t)> encode = [&](std::size_t v, std::size_t parent) {
    std::vector<std::string> kids;
    for (auto w : adj[v])
      if (w != parent) kids.push_back(encode(w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    return s + ")";
  };
  std::string best;
  for (auto c : layer) {
    std::string code = encode(c, SIZE_MAX);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

std::vector<std::vector<std::size_t>> chain_with_branches(
    std::size_t length, const std::vector<std::pair<std::size_t, std::size_t>>& branches) {
  std::vector<std::vector<std::size_t>> adj(length);
  auto link = [&](std::size_t a, std::size_t b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (std::size_t i = 0; i + 1 < length; ++i) link(i, i + 1);
  for (const auto& [pos, len] : branches) {
    std::size_t prev = pos;
    for (std::size_t k = 0; k < len; ++k) {
      adj.emplace_back();
      link(prev, adj.size() - 1);
      prev = adj.size() - 1;
    }
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

}  // namespace polydual
