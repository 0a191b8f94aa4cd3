#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polydual/weight_system.hpp"

namespace polydual {

/// Default names for X_0..X_3.
inline const std::vector<std::string> kDefaultVariables{"W", "X", "Y", "Z"};

/// Parses "X^2Y^2" into an exponent vector over `names`. Each variable is a
/// single letter followed by an optional "^" and unsigned exponent; repeated
/// letters accumulate. Throws InputError on unknown letters or bad syntax.
Exponents parse_monomial(std::string_view text, const std::vector<std::string>& names = kDefaultVariables);

/// Same, over X_0..X_n for the augmented weights (a_0, a_1..a_n) of `w`, and
/// checks the weighted degree is h. The error message names the computed degree.
Exponents parse_weighted_monomial(std::string_view text, const WeightSystem& w,
                                  const std::vector<std::string>& names = kDefaultVariables);

/// Weighted degree of an exponent vector over X_0..X_n.
std::int64_t weighted_degree(const Exponents& m, const WeightSystem& w);

std::string format_monomial(const Exponents& m, const std::vector<std::string>& names = kDefaultVariables);

/// Splits "W^12, Y^3 X^2Y^2" style lists on commas and whitespace.
std::vector<std::string> split_monomial_list(std::string_view text);

/// Parses "W,X,Y,Z" into single-letter variable names.
std::vector<std::string> parse_variable_names(std::string_view text);

}  // namespace polydual
