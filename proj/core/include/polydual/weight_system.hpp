#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "polydual/lattice_algebra.hpp"

namespace polydual {

/// Exponent vector of a monomial.
using Exponents = std::vector<std::int64_t>;

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedCaseError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Positive weights (a_1..a_n) with degree h.
///
/// Weights are input-sized values and are kept in 64-bit integers; every
/// derived quantity that can grow (determinants, lattice bases) is computed
/// with arbitrary precision.
struct WeightSystem {
  std::vector<std::int64_t> weights;
  std::int64_t degree = 0;

  std::size_t size() const { return weights.size(); }
  std::string to_string() const;

  friend bool operator==(const WeightSystem&, const WeightSystem&) = default;
  friend auto operator<=>(const WeightSystem&, const WeightSystem&) = default;
};

/// A weight system together with a_0 = h - sum(a_i), the weight of the
/// compactifying coordinate X_0. a_0 may be zero or negative.
struct AugmentedWeight {
  std::int64_t a0 = 0;
  WeightSystem base;
};

/// Parses "2,3,6;12". Throws InputError on malformed text or an invalid
/// weight system.
WeightSystem parse_weight_system(std::string_view text);

/// Throws InputError unless all weights and the degree are positive and the
/// degree lies in the monoid generated by the weights.
void validate(const WeightSystem& w);
bool degree_in_monoid(const WeightSystem& w);

WeightSystem reduce(const WeightSystem& w);
bool is_reduced(const WeightSystem& w);

/// True iff dropping any single coordinate leaves entries with gcd 1.
bool is_well_formed(std::span<const std::int64_t> weights);

std::int64_t weights_gcd(const WeightSystem& w);
std::int64_t defect(const WeightSystem& w);
AugmentedWeight augment(const WeightSystem& w);

/// Reduced representative with ascending weights; two systems are
/// equivalent iff their canonical forms agree.
WeightSystem canonical_form(const WeightSystem& w);
bool equivalent(const WeightSystem& a, const WeightSystem& b);

/// M(W) = { alpha in Z^n : sum a_i alpha_i = 0 mod a_0 }, basis in HNF.
/// Throws UnsupportedCaseError when a_0 = 0.
Sublattice monomial_lattice(const WeightSystem& w);

/// All c in N^n with sum c_j a_j = h, ordered lexicographically descending
/// (largest c_1 first).
std::vector<Exponents> degree_monomials(const WeightSystem& w);

}  // namespace polydual
