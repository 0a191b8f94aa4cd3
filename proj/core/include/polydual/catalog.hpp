#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polydual/lattice_algebra.hpp"
#include "polydual/polytope.hpp"
#include "polydual/weight_system.hpp"

namespace polydual {

/// One row of a golden table. Columns in the data files, tab separated:
/// label, weights, degree, dual, c_rows, flags, polytope, extra. A '-' marks
/// an empty column; duals are '|' separated; extra is "key=value;...".
struct CatalogEntry {
  std::string table_id;
  std::string label;
  WeightSystem weights;
  std::vector<WeightSystem> duals;  // empty: no dual expected
  std::vector<std::string> c_rows;
  std::vector<std::string> flags;
  std::vector<std::string> polytope;
  std::vector<std::pair<std::string, std::string>> extra;
  std::size_t line = 0;

  bool has_flag(std::string_view flag) const;
  std::optional<std::string> extra_value(std::string_view key) const;
  /// W, X, Y[, Z]: X_0 then one letter per weight.
  std::vector<std::string> variables() const;
};

/// Table ids in a fixed order.
const std::vector<std::string>& table_ids();

/// Raw text of an embedded table. Throws InputError for an unknown id.
const std::string& catalog_source(const std::string& table_id);

/// Parses table text; throws InputError naming the line on malformed rows.
std::vector<CatalogEntry> parse_catalog(const std::string& table_id, const std::string& text);

/// Parsed embedded table (cached). Throws InputError for an unknown id.
const std::vector<CatalogEntry>& catalog_table(const std::string& table_id);

/// The c_rows monomials as an n x n matrix; nullopt when the row has none.
std::optional<IntMatrix> entry_square(const CatalogEntry& e);

/// Hull of the polytope monomials; nullopt when the row has none.
std::optional<LatticePolytope> entry_polytope(const CatalogEntry& e);

/// Hull of monomials of `w` given as a comma separated list.
LatticePolytope polytope_from_monomials(const std::string& list, const WeightSystem& w,
                                        const std::vector<std::string>& names);

}  // namespace polydual
