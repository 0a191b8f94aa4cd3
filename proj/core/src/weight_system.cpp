#include "polydual/weight_system.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace polydual {

namespace {

std::int64_t parse_positive(std::string_view token, std::string_view whole) {
  while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
  while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw InputError("bad integer '" + std::string(token) + "' in weight system '" +
                     std::string(whole) + "'");
  return value;
}

void enumerate_monomials(const WeightSystem& w, std::size_t i, std::int64_t remaining,
                         Exponents& current, std::vector<Exponents>& out) {
  if (i == w.size()) {
    if (remaining == 0) out.push_back(current);
    return;
  }
  for (std::int64_t m = remaining / w.weights[i]; m >= 0; --m) {
    current[i] = m;
    enumerate_monomials(w, i + 1, remaining - m * w.weights[i], current, out);
  }
}

}  // namespace

std::string WeightSystem::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(weights[i]);
  }
  return out + ";" + std::to_string(degree);
}

WeightSystem parse_weight_system(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos)
    throw InputError("weight system '" + std::string(text) + "' must look like 'a1,...,an;h'");
  WeightSystem w;
  std::string_view list = text.substr(0, semi);
  while (!list.empty()) {
    const auto comma = list.find(',');
    w.weights.push_back(parse_positive(list.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  w.degree = parse_positive(text.substr(semi + 1), text);
  validate(w);
  return w;
}

bool degree_in_monoid(const WeightSystem& w) {
  // Coin problem by dynamic programming over 0..h.
  std::vector<char> reachable(static_cast<std::size_t>(w.degree) + 1, 0);
  reachable[0] = 1;
  for (std::int64_t t = 1; t <= w.degree; ++t)
    for (auto a : w.weights)
      if (a <= t && reachable[static_cast<std::size_t>(t - a)]) {
        reachable[static_cast<std::size_t>(t)] = 1;
        break;
      }
  return reachable[static_cast<std::size_t>(w.degree)] != 0;
}

void validate(const WeightSystem& w) {
  if (w.weights.empty()) throw InputError("weight system has no weights");
  for (auto a : w.weights)
    if (a < 1) throw InputError("weights must be positive: " + w.to_string());
  if (w.degree < 1) throw InputError("degree must be positive: " + w.to_string());
  if (!degree_in_monoid(w))
    throw InputError("degree is not a nonnegative combination of the weights: " + w.to_string());
}

std::int64_t weights_gcd(const WeightSystem& w) {
  std::int64_t g = 0;
  for (auto a : w.weights) g = std::gcd(g, a);
  return g;
}

WeightSystem reduce(const WeightSystem& w) {
  const std::int64_t g = std::gcd(weights_gcd(w), w.degree);
  if (g <= 1) return w;
  WeightSystem out = w;
  for (auto& a : out.weights) a /= g;
  out.degree /= g;
  return out;
}

bool is_reduced(const WeightSystem& w) { return std::gcd(weights_gcd(w), w.degree) == 1; }

bool is_well_formed(std::span<const std::int64_t> weights) {
  for (std::size_t skip = 0; skip < weights.size(); ++skip) {
    std::int64_t g = 0;
    for (std::size_t j = 0; j < weights.size(); ++j)
      if (j != skip) g = std::gcd(g, weights[j]);
    if (g != 1) return false;
  }
  return true;
}

std::int64_t defect(const WeightSystem& w) {
  return w.degree - std::accumulate(w.weights.begin(), w.weights.end(), std::int64_t{0});
}

AugmentedWeight augment(const WeightSystem& w) { return {defect(w), w}; }

WeightSystem canonical_form(const WeightSystem& w) {
  WeightSystem out = reduce(w);
  std::sort(out.weights.begin(), out.weights.end());
  return out;
}

bool equivalent(const WeightSystem& a, const WeightSystem& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

Sublattice monomial_lattice(const WeightSystem& w) {
  const std::int64_t a0 = defect(w);
  if (a0 == 0) throw UnsupportedCaseError("monomial lattice undefined for a_0 = 0: " + w.to_string());
  // alpha is in M iff (alpha, t) . (a_1..a_n, a_0) = 0 for some integer t.
  // The left kernel of that column projects isomorphically onto M.
  const std::size_t n = w.size();
  IntMatrix column(n + 1, 1);
  for (std::size_t i = 0; i < n; ++i) column(i, 0) = Integer(static_cast<long>(w.weights[i]));
  column(n, 0) = Integer(static_cast<long>(a0));
  const IntMatrix kernel = left_kernel(column);
  IntMatrix generators(kernel.rows(), n);
  for (std::size_t i = 0; i < kernel.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) generators(i, j) = kernel(i, j);
  return Sublattice::from_generators(generators);
}

std::vector<Exponents> degree_monomials(const WeightSystem& w) {
  std::vector<Exponents> out;
  Exponents current(w.size(), 0);
  enumerate_monomials(w, 0, w.degree, current, out);
  return out;
}

}  // namespace polydual
