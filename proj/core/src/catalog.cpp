#include "polydual/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "polydual/monomial.hpp"

namespace polydual {

namespace detail {
struct EmbeddedTable {
  const char* id;
  const char* text;
};
// generated at build time from core/data
const std::vector<EmbeddedTable>& embedded_tables();
}  // namespace detail

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

bool empty_field(const std::string& s) { return s.empty() || s == "-"; }

std::vector<std::string> list_field(const std::string& s) {
  std::vector<std::string> out;
  if (empty_field(s)) return out;
  for (auto& part : split(s, ','))
    if (auto t = trim(part); !t.empty()) out.push_back(t);
  return out;
}

}  // namespace

bool CatalogEntry::has_flag(std::string_view flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

std::optional<std::string> CatalogEntry::extra_value(std::string_view key) const {
  for (const auto& [k, v] : extra)
    if (k == key) return v;
  return std::nullopt;
}

std::vector<std::string> CatalogEntry::variables() const {
  return {kDefaultVariables.begin(), kDefaultVariables.begin() + static_cast<std::ptrdiff_t>(weights.size() + 1)};
}

const std::vector<std::string>& table_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& t : detail::embedded_tables()) out.emplace_back(t.id);
    return out;
  }();
  return ids;
}

const std::string& catalog_source(const std::string& table_id) {
  static const std::map<std::string, std::string> sources = [] {
    std::map<std::string, std::string> out;
    for (const auto& t : detail::embedded_tables()) out.emplace(t.id, t.text);
    return out;
  }();
  auto it = sources.find(table_id);
  if (it == sources.end()) throw InputError("unknown table: " + table_id);
  return it->second;
}

std::vector<CatalogEntry> parse_catalog(const std::string& table_id, const std::string& text) {
  std::vector<CatalogEntry> out;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    auto cols = split(line, '\t');
    auto where = [&] { return table_id + ":" + std::to_string(lineno); };
    if (cols.size() < 6 || cols.size() > 8) throw InputError(where() + ": expected 6 to 8 tab separated columns");
    cols.resize(8, "-");
    for (auto& c : cols) c = trim(c);

    CatalogEntry e;
    e.table_id = table_id;
    e.line = lineno;
    e.label = cols[0];
    try {
      e.weights = parse_weight_system(cols[1] + ";" + cols[2]);
      if (!empty_field(cols[3]))
        for (const auto& d : split(cols[3], '|')) e.duals.push_back(parse_weight_system(trim(d) + ";" + cols[2]));
    } catch (const InputError& err) {
      throw InputError(where() + ": " + err.what());
    }
    e.c_rows = list_field(cols[4]);
    e.flags = list_field(cols[5]);
    e.polytope = list_field(cols[6]);
    if (!empty_field(cols[7]))
      for (const auto& kv : split(cols[7], ';')) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw InputError(where() + ": extra field needs key=value");
        e.extra.emplace_back(trim(kv.substr(0, eq)), trim(kv.substr(eq + 1)));
      }
    out.push_back(std::move(e));
  }
  return out;
}

const std::vector<CatalogEntry>& catalog_table(const std::string& table_id) {
  static std::mutex mu;
  static std::map<std::string, std::vector<CatalogEntry>> cache;
  const std::string& text = catalog_source(table_id);
  std::lock_guard lock(mu);
  auto it = cache.find(table_id);
  if (it == cache.end()) it = cache.emplace(table_id, parse_catalog(table_id, text)).first;
  return it->second;
}

std::optional<IntMatrix> entry_square(const CatalogEntry& e) {
  if (e.c_rows.empty()) return std::nullopt;
  const std::size_t n = e.weights.size();
  if (e.c_rows.size() != n) throw InputError(e.label + ": need " + std::to_string(n) + " rows of C");
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Exponents m = parse_weighted_monomial(e.c_rows[i], e.weights, e.variables());
    if (m[0] != 0) throw InputError(e.label + ": a row of C cannot involve " + e.variables()[0]);
    for (std::size_t j = 0; j < n; ++j) c(i, j) = static_cast<long>(m[j + 1]);
  }
  return c;
}

LatticePolytope polytope_from_monomials(const std::string& list, const WeightSystem& w,
                                        const std::vector<std::string>& names) {
  std::vector<Exponents> ms;
  for (const auto& t : split_monomial_list(list)) ms.push_back(parse_weighted_monomial(t, w, names));
  return monomials_to_polytope(ms, w);
}

std::optional<LatticePolytope> entry_polytope(const CatalogEntry& e) {
  if (e.polytope.empty()) return std::nullopt;
  std::vector<Exponents> ms;
  for (const auto& t : e.polytope) ms.push_back(parse_weighted_monomial(t, e.weights, e.variables()));
  return monomials_to_polytope(ms, e.weights);
}

}  // namespace polydual
