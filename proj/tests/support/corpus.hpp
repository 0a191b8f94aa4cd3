#pragma once

// Polytopes drawn from the embedded tables, shared by the unit tests and the
// acceptance binary.

#include <random>
#include <string>
#include <vector>

#include "polydual/polytope.hpp"

namespace corpus {

struct Named {
  std::string label;
  polydual::LatticePolytope polytope;
};

/// Every table polytope flagged reflexive.
const std::vector<Named>& table_polytopes();

/// Weighted simplices and full Newton polytopes of the three-weight catalog
/// rows with a_0 > 0 that are reflexive, deduplicated by weight system.
const std::vector<Named>& weighted_polytopes();

/// Both lists together.
std::vector<Named> reflexive_polyhedra();

/// Hulls of random subsets of the lattice points of the catalog polyhedra
/// that keep the origin inside and come out reflexive (by the vertex
/// oracle, in lattice coordinates).
std::vector<Named> random_reflexive_subpolytopes(std::size_t count, std::mt19937& rng);

/// Reflexivity by brute force: every supporting plane of the vertex
/// coordinates sits at lattice distance one from the origin.
bool oracle_reflexive(const polydual::LatticePolytope& p);

}  // namespace corpus
