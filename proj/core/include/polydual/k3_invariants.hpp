#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "polydual/lattice_algebra.hpp"
#include "polydual/polytope.hpp"

namespace polydual {

/// Raised by the rank and edge functions for input that is not a reflexive
/// 3-dimensional polytope.
class NotReflexiveError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

/// Raised when no three skeleton points of the dual form a basis of N.
class GraphUnavailableError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

struct RankTriple {
  std::size_t lg = 0;  // vanishing-cycle part
  std::size_t ld = 0;  // toric divisor part
  std::size_t l0 = 0;  // complement of the divisor part
  std::size_t sum() const { return lg + ld + l0; }
  friend bool operator==(const RankTriple&, const RankTriple&) = default;
};

struct EdgePair {
  std::size_t face = 0;  // index into faces() of the polytope
  std::size_t l_star = 0;
  std::size_t l_star_dual = 0;
  /// Vertices of the dual edge in N lattice coordinates.
  IntVector dual_from, dual_to;
};

struct EdgePairData {
  std::vector<EdgePair> edges;
};

/// Edge data of a reflexive 3-polytope. The dual edge of an edge is spanned
/// by the dual vertices of the two facets through it.
EdgePairData edge_pair_data(const LatticePolytope& p);

RankTriple rank_triple(const LatticePolytope& p);

struct IdentityReport {
  bool reflexive = false;
  RankTriple ranks;
  std::vector<std::size_t> contributions;  // (l*+1)(l*dual+1) per edge
  std::size_t total = 0;
  bool sum20 = false;
  bool sum24 = false;
  bool passed() const { return reflexive && sum20 && sum24; }
};

/// Never throws for a 3-dimensional input; failures are in the report.
IdentityReport check_identities(const LatticePolytope& p);

/// rank_triple(p*) is rank_triple(p) with the first two entries swapped.
bool mirror_rank_swap(const LatticePolytope& p);

struct GraphNode {
  IntVector point;  // N lattice coordinates
  std::size_t multiplicity = 1;
  std::size_t carrier_dim = 0;  // 0 on a vertex, 1 inside an edge
};

struct GraphEdge {
  std::size_t from = 0, to = 0;
  std::size_t weight = 1;
};

struct DualGraph {
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  std::vector<IntVector> removed;  // the basis triple, N lattice coordinates
  bool coordinate_triple = false;  // removed triple is the unit vectors

  std::size_t total_multiplicity() const;
  bool is_connected() const;
  bool is_tree() const;
  std::vector<std::vector<std::size_t>> adjacency() const;
};

/// Graph of the divisor lattice read off the 1-skeleton of p*. The removed
/// triple is the ambient unit vectors when they are skeleton points forming
/// a basis of N, otherwise the lexicographically first basis of N among the
/// skeleton points ordered by ambient coordinates.
DualGraph picard_dual_graph(const LatticePolytope& p);

/// Canonical string for an unlabelled tree (center-rooted AHU encoding).
/// Throws std::invalid_argument when the adjacency is not a tree.
std::string tree_code(const std::vector<std::vector<std::size_t>>& adjacency);

/// Adjacency of a path of `length` nodes with pendant paths: each branch
/// (position, length) hangs off node `position` of the main path.
std::vector<std::vector<std::size_t>> chain_with_branches(
    std::size_t length, const std::vector<std::pair<std::size_t, std::size_t>>& branches);

}  // namespace polydual
