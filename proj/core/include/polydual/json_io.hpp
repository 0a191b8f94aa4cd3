#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polydual/duality.hpp"
#include "polydual/k3_invariants.hpp"
#include "polydual/polytope.hpp"
#include "polydual/verify.hpp"
#include "polydual/weight_system.hpp"

namespace polydual {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Throws InputError when the file is missing
/// or is not valid JSON.
Json load_json_file(const std::string& path);

/// {"weights":[2,3,6],"degree":12}; the string form "2,3,6;12" is accepted
/// on input as well.
Json to_json(const WeightSystem& w);
WeightSystem weight_system_from_json(const Json& j);

/// {"lattice_basis":[[...]],"vertices":[["p/q",...],...]}: integers may be
/// plain numbers. A missing basis means the standard lattice. Alternatively
/// {"weight_system":..., "monomials":["W^12",...], "variables":"W,X,Y,Z"}.
Json to_json(const LatticePolytope& p);
LatticePolytope polytope_from_json(const Json& j);

Json to_json(const Integer& v);
Json to_json(const Rational& v);
Json to_json(const IntMatrix& m);
Json to_json(const DualityCertificate& c);
Json to_json(const DualClass& c, bool verbose);
Json to_json(const FaceCounts& c);
Json to_json(const RankTriple& r);
Json to_json(const DualGraph& g);
Json to_json(const CorrespondenceReport& r);
Json to_json(const TableReport& r);

}  // namespace polydual
