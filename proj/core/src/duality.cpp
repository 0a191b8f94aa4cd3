#include "polydual/duality.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace polydual {

namespace {

std::int64_t narrow(const Integer& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("value does not fit in 64 bits: " + v.get_str());
  return v.get_si();
}

Integer big(std::int64_t v) { return Integer(static_cast<long>(v)); }

void require_square_for(const IntMatrix& c, const WeightSystem& w) {
  if (!c.is_square() || c.rows() != w.size())
    throw DimensionError("square of size " + std::to_string(c.rows()) + "x" +
                         std::to_string(c.cols()) + " does not match " + w.to_string());
}

// Permutations of 0..n-1 that fix the weight vector.
std::vector<std::vector<std::size_t>> weight_symmetries(const WeightSystem& w) {
  std::vector<std::size_t> p(w.size());
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < p.size() && ok; ++i) ok = w.weights[p[i]] == w.weights[i];
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

using RowKey = std::vector<Exponents>;

// Row order and column order among equal weights do not change the square.
RowKey certificate_key(const IntMatrix& c, const std::vector<std::vector<std::size_t>>& symmetries) {
  RowKey best;
  for (const auto& sigma : symmetries) {
    RowKey rows(c.rows(), Exponents(c.cols()));
    for (std::size_t i = 0; i < c.rows(); ++i)
      for (std::size_t j = 0; j < c.cols(); ++j) rows[i][j] = narrow(c(i, sigma[j]));
    std::sort(rows.begin(), rows.end());
    if (best.empty() || rows < best) best = std::move(rows);
  }
  return best;
}

Sublattice lattice_for(const WeightSystem& wa) {
  if (defect(wa) == 0) return Sublattice::standard(wa.size());
  return monomial_lattice(wa);
}

// Barycentric coordinates of `point` with respect to the rows of `vertices`
// (n points in an (n-1)-dimensional affine plane of Q^n).
std::optional<RatVector> barycentric(const IntMatrix& vertices, const RatVector& point) {
  const std::size_t n = vertices.rows();
  const std::size_t dim = vertices.cols();
  RatMatrix system(dim + 1, n);
  RatVector rhs(dim + 1);
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t i = 0; i < n; ++i) system(j, i) = vertices(i, j);
    rhs[j] = point[j];
  }
  for (std::size_t i = 0; i < n; ++i) system(dim, i) = 1;
  rhs[dim] = 1;
  return solve_unique(system, rhs);
}

}  // namespace

const DualityCertificate& DualClass::witness() const {
  for (const auto& cert : certificates)
    if (cert.strongly_dual) return cert;
  return certificates.front();
}

bool is_weighted_magic_square(const IntMatrix& c, const WeightSystem& wa, const WeightSystem& wb) {
  require_square_for(c, wa);
  require_square_for(c, wb);
  const std::size_t n = c.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (c(i, j) < 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row = 0;
    for (std::size_t j = 0; j < n; ++j) row += c(i, j) * big(wa.weights[j]);
    if (row != wa.degree) return false;
  }
  for (std::size_t j = 0; j < n; ++j) {
    Integer column = 0;
    for (std::size_t i = 0; i < n; ++i) column += big(wb.weights[i]) * c(i, j);
    if (column != wb.degree) return false;
  }
  return true;
}

bool is_primitive(const WeightedMagicSquare& s) {
  const Integer d = abs(det(s.c));
  return d == big(s.wa.degree / weights_gcd(s.wa)) && d == big(s.wb.degree / weights_gcd(s.wb));
}

bool has_zero_cross(const IntMatrix& c) {
  for (std::size_t i = 0; i < c.rows(); ++i) {
    bool zero = false;
    for (std::size_t j = 0; j < c.cols(); ++j) zero = zero || c(i, j) == 0;
    if (!zero) return false;
  }
  for (std::size_t j = 0; j < c.cols(); ++j) {
    bool zero = false;
    for (std::size_t i = 0; i < c.rows(); ++i) zero = zero || c(i, j) == 0;
    if (!zero) return false;
  }
  return true;
}

bool is_strongly_dual(const WeightedMagicSquare& s) { return is_primitive(s) && has_zero_cross(s.c); }

IntMatrix offset_rows(const IntMatrix& c) {
  IntMatrix b = c;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) -= 1;
  return b;
}

std::optional<WeightSystem> weights_from_square(const IntMatrix& c) {
  if (!c.is_square()) throw DimensionError("weights_from_square: square matrix required");
  const auto x = solve_rational(c.transpose(), RatVector(c.rows(), Rational(1)));
  if (!x) return std::nullopt;
  for (const auto& v : *x)
    if (v <= 0) return std::nullopt;
  const Integer scale = lcm_of_denominators(*x);
  WeightSystem out;
  for (const auto& v : *x) {
    const Rational scaled = v * scale;
    out.weights.push_back(narrow(scaled.get_num()));
  }
  out.degree = narrow(scale);
  return out;
}

bool interior_condition(const IntMatrix& c, const WeightSystem& wa) {
  require_square_for(c, wa);
  const std::int64_t a0 = defect(wa);
  const Rational t = ratio(big(a0), big(wa.degree - a0));
  const auto coords = barycentric(offset_rows(c), RatVector(c.rows(), t));
  if (!coords) return false;
  return std::all_of(coords->begin(), coords->end(), [](const Rational& v) { return v > 0; });
}

bool simplex_is_elementary(const IntMatrix& b_rows, const WeightSystem& wa) {
  require_square_for(b_rows, wa);
  const std::size_t n = b_rows.rows();
  const std::int64_t a0 = defect(wa);
  const Sublattice lattice = lattice_for(wa);

  std::vector<std::int64_t> lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    lo[j] = hi[j] = narrow(b_rows(0, j));
    for (std::size_t i = 1; i < n; ++i) {
      lo[j] = std::min(lo[j], narrow(b_rows(i, j)));
      hi[j] = std::max(hi[j], narrow(b_rows(i, j)));
    }
  }
  // A degenerate simplex has no unique barycentric coordinates at its vertices.
  if (!barycentric(b_rows, to_rational(b_rows.row(0)))) return false;

  std::size_t found = 0;
  std::vector<std::int64_t> point = lo;
  for (;;) {
    std::int64_t level = 0;
    for (std::size_t j = 0; j < n; ++j) level += wa.weights[j] * point[j];
    if (level == a0) {
      IntVector p(n);
      for (std::size_t j = 0; j < n; ++j) p[j] = big(point[j]);
      if (lattice.contains(p)) {
        const auto coords = barycentric(b_rows, to_rational(p));
        if (coords && std::all_of(coords->begin(), coords->end(),
                                  [](const Rational& v) { return v >= 0; }))
          ++found;
      }
    }
    std::size_t j = 0;
    while (j < n && point[j] == hi[j]) {
      point[j] = lo[j];
      ++j;
    }
    if (j == n) break;
    ++point[j];
  }
  return found == n;
}

DualSearch dual_search(const WeightSystem& wa) {
  validate(wa);
  if (!is_reduced(wa)) throw InputError("dual search expects a reduced weight system: " + wa.to_string());
  const std::size_t n = wa.size();
  if (defect(wa) == 0 && n >= 3)
    throw UnsupportedCaseError("dual search with a_0 = 0 is only supported for two weights: " +
                               wa.to_string());

  const auto monomials = degree_monomials(wa);
  const Integer target = big(wa.degree / weights_gcd(wa));
  const auto symmetries = weight_symmetries(wa);

  struct Bucket {
    DualClass cls;
    std::set<RowKey> seen;
  };
  std::map<WeightSystem, Bucket> buckets;
  DualSearch result;

  if (monomials.size() >= n) {
    std::vector<std::size_t> pick(n);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      ++result.subsets_examined;
      IntMatrix c(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c(i, j) = big(monomials[pick[i]][j]);

      if (abs(det(c)) == target && interior_condition(c, wa)) {
        const auto wb = weights_from_square(c);
        if (wb && wb->degree == wa.degree) {
          WeightedMagicSquare square{c, wa, *wb};
          if (is_primitive(square)) {
            ++result.raw_certificates;
            const WeightSystem key = canonical_form(*wb);
            Bucket& bucket = buckets[key];
            bucket.cls.dual = key;
            if (bucket.seen.insert(certificate_key(c, symmetries)).second) {
              const bool strong = has_zero_cross(c);
              bucket.cls.certificates.push_back({std::move(square), true, strong});
              bucket.cls.strongly_dual = bucket.cls.strongly_dual || strong;
            }
          }
        }
      }

      // next n-subset in lexicographic order
      std::size_t i = n;
      while (i > 0 && pick[i - 1] == monomials.size() - n + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  for (auto& [key, bucket] : buckets) result.classes.push_back(std::move(bucket.cls));
  return result;
}

std::vector<DualClass> dual_weights(const WeightSystem& wa) { return dual_search(wa).classes; }

std::optional<SimplexWeights> simplex_to_weights(const IntMatrix& rows, const WeightSystem& wa) {
  require_square_for(rows, wa);
  validate(wa);
  const std::size_t n = rows.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rows(i, j) < -1)
        throw InputError("simplex vertex entry below -1 at row " + std::to_string(i));

  IntMatrix c = rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c(i, j) += 1;

  // (1) every vertex lies on sum a_j x_j = a_0, i.e. every row of C has degree h
  for (std::size_t i = 0; i < n; ++i) {
    Integer level = 0;
    for (std::size_t j = 0; j < n; ++j) level += c(i, j) * big(wa.weights[j]);
    if (level != wa.degree) return std::nullopt;
  }
  if (!interior_condition(c, wa)) return std::nullopt;
  if (!simplex_is_elementary(rows, wa)) return std::nullopt;

  const auto reduced = weights_from_square(c);
  if (!reduced || wa.degree % reduced->degree != 0) return std::nullopt;
  const std::int64_t m = wa.degree / reduced->degree;
  WeightSystem wb = *reduced;
  for (auto& b : wb.weights) b *= m;
  wb.degree = wa.degree;
  return SimplexWeights{wb, {c, wa, wb}};
}

bool is_self_dual(const WeightSystem& w) {
  const WeightSystem key = canonical_form(w);
  for (const auto& cls : dual_weights(reduce(w)))
    if (cls.dual == key) return true;
  return false;
}

std::optional<IntMatrix> symmetric_certificate(const WeightSystem& w) {
  const WeightSystem wa = reduce(w);
  const WeightSystem key = canonical_form(wa);
  const std::size_t n = wa.size();
  const auto column_moves = weight_symmetries(wa);
  for (const auto& cls : dual_weights(wa)) {
    if (cls.dual != key) continue;
    for (const auto& cert : cls.certificates) {
      const auto& c = cert.square.c;
      const auto& b = cert.square.wb.weights;
      std::vector<std::size_t> rows(n);
      std::iota(rows.begin(), rows.end(), 0);
      do {
        bool matches = true;
        for (std::size_t i = 0; i < n && matches; ++i) matches = b[rows[i]] == wa.weights[i];
        if (!matches) continue;
        for (const auto& sigma : column_moves) {
          IntMatrix arranged(n, n);
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) arranged(i, j) = c(rows[i], sigma[j]);
          if (arranged == arranged.transpose()) return arranged;
        }
      } while (std::next_permutation(rows.begin(), rows.end()));
    }
  }
  return std::nullopt;
}

}  // namespace polydual
