#include "polydual/monomial.hpp"

#include <cctype>

namespace polydual {

Exponents parse_monomial(std::string_view text, const std::vector<std::string>& names) {
  Exponents out(names.size(), 0);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i == text.size()) throw InputError("empty monomial");
  while (i < text.size()) {
    const char letter = text[i];
    std::size_t slot = names.size();
    for (std::size_t k = 0; k < names.size(); ++k)
      if (names[k].size() == 1 && names[k][0] == letter) slot = k;
    if (slot == names.size())
      throw InputError("unknown variable '" + std::string(1, letter) + "' in monomial '" +
                       std::string(text) + "'");
    ++i;
    std::int64_t power = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw InputError("missing exponent in monomial '" + std::string(text) + "'");
      power = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        power = power * 10 + (text[i] - '0');
        if (power > (std::int64_t{1} << 40)) throw InputError("exponent too large in '" + std::string(text) + "'");
        ++i;
      }
    }
    out[slot] += power;
    skip_space();
  }
  return out;
}

std::int64_t weighted_degree(const Exponents& m, const WeightSystem& w) {
  if (m.size() != w.size() + 1)
    throw InputError("monomial has " + std::to_string(m.size()) + " exponents, expected " +
                     std::to_string(w.size() + 1));
  std::int64_t d = m[0] * defect(w);
  for (std::size_t i = 0; i < w.size(); ++i) d += m[i + 1] * w.weights[i];
  return d;
}

Exponents parse_weighted_monomial(std::string_view text, const WeightSystem& w,
                                  const std::vector<std::string>& names) {
  if (names.size() < w.size() + 1)
    throw InputError("need " + std::to_string(w.size() + 1) + " variable names");
  const std::vector<std::string> used(names.begin(), names.begin() + static_cast<long>(w.size() + 1));
  Exponents m = parse_monomial(text, used);
  const std::int64_t d = weighted_degree(m, w);
  if (d != w.degree)
    throw InputError("monomial '" + std::string(text) + "' has weighted degree " + std::to_string(d) +
                     ", expected " + std::to_string(w.degree));
  return m;
}

std::string format_monomial(const Exponents& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    out += i < names.size() ? names[i] : "X" + std::to_string(i);
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::vector<std::string> split_monomial_list(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!current.empty()) out.push_back(std::move(current));
      current.clear();
    } else {
      current += ch;
    }
  }
  if (!current.empty()) out.push_back(std::move(current));
  return out;
}

std::vector<std::string> parse_variable_names(std::string_view text) {
  std::vector<std::string> out = split_monomial_list(text);
  for (const auto& name : out)
    if (name.size() != 1 || !std::isalpha(static_cast<unsigned char>(name[0])))
      throw InputError("variable names must be single letters: '" + name + "'");
  if (out.empty()) throw InputError("no variable names given");
  return out;
}

}  // namespace polydual
