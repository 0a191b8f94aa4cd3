#include "polydual/lattice_algebra.hpp"

#include <sstream>
#include <utility>

namespace polydual {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

template <typename T>
void require_same_inner(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows())
    throw DimensionError("matrix product: inner dimensions differ");
}

template <typename T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  require_same_inner(a, b);
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

template <typename T>
std::vector<T> row_times(const std::vector<T>& v, const Matrix<T>& m) {
  if (v.size() != m.rows()) throw DimensionError("vector-matrix product");
  std::vector<T> out(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

// Gauss-Jordan on [a | rhs]; returns false when a is singular.
bool gauss_jordan(RatMatrix& a, RatMatrix& rhs) {
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return false;
    a.swap_rows(p, c);
    rhs.swap_rows(p, c);
    const Rational pivot = a(c, c);
    for (std::size_t j = 0; j < n; ++j) a(c, j) /= pivot;
    for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(c, j) /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) a(i, j) -= f * a(c, j);
      for (std::size_t j = 0; j < rhs.cols(); ++j) rhs(i, j) -= f * rhs(c, j);
    }
  }
  return true;
}

}  // namespace

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) { return multiply(a, b); }
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return multiply(a, b); }
IntVector operator*(const IntVector& v, const IntMatrix& m) { return row_times(v, m); }
RatVector operator*(const RatVector& v, const RatMatrix& m) { return row_times(v, m); }

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw DimensionError("non-integral entry");
      out(i, j) = m(i, j).get_num();
    }
  return out;
}

bool is_integral(const RatVector& v) {
  for (const auto& x : v)
    if (x.get_den() != 1) return false;
  return true;
}

bool is_integral(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).get_den() != 1) return false;
  return true;
}

Integer det(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rational det(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational result = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      result = -result;
    }
    result *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return result;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of a non-square matrix");
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(m.rows());
  if (!gauss_jordan(a, inv)) return std::nullopt;
  return inv;
}

HermiteForm hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  const std::size_t rows = h.rows();
  const std::size_t cols = h.cols();

  auto add_multiple = [&](std::size_t target, std::size_t source, const Integer& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols; ++j) h(target, j) -= q * h(source, j);
    for (std::size_t j = 0; j < rows; ++j) u(target, j) -= q * u(source, j);
  };
  auto negate = [&](std::size_t r) {
    for (std::size_t j = 0; j < cols; ++j) h(r, j) = -h(r, j);
    for (std::size_t j = 0; j < rows; ++j) u(r, j) = -u(r, j);
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    bool has_pivot = false;
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        if (best == rows || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == rows) break;
      has_pivot = true;
      h.swap_rows(best, r);
      u.swap_rows(best, r);
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        Integer q = h(i, c) / h(r, c);  // truncating
        add_multiple(i, r, q);
        if (h(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!has_pivot) continue;
    if (h(r, c) < 0) negate(r);
    for (std::size_t i = 0; i < r; ++i) add_multiple(i, r, floor_div(h(i, c), h(r, c)));
    ++r;
  }
  return {std::move(h), std::move(u)};
}

IntMatrix left_kernel(const IntMatrix& m) {
  const HermiteForm form = hnf(m);
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < form.h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < form.h.cols() && zero; ++j) zero = form.h(i, j) == 0;
    if (zero) rows.push_back(form.u.row(i));
  }
  return IntMatrix::from_rows(rows, m.rows());
}

std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b) {
  if (!a.is_square()) throw DimensionError("solve_rational: matrix is not square");
  if (b.size() != a.rows()) throw DimensionError("solve_rational: rhs length mismatch");
  RatMatrix work = a;
  RatMatrix rhs(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) rhs(i, 0) = b[i];
  if (!gauss_jordan(work, rhs)) return std::nullopt;
  return rhs.col(0);
}

std::optional<RatVector> solve_unique(const RatMatrix& a, const RatVector& b) {
  if (b.size() != a.rows()) throw DimensionError("solve_unique: rhs length mismatch");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  RatMatrix aug(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = r;
    while (p < m && aug(p, c) == 0) ++p;
    if (p == m) return std::nullopt;  // free variable
    aug.swap_rows(p, r);
    const Rational pivot = aug(r, c);
    for (std::size_t j = c; j <= n; ++j) aug(r, j) /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || aug(i, c) == 0) continue;
      const Rational f = aug(i, c);
      for (std::size_t j = c; j <= n; ++j) aug(i, j) -= f * aug(r, j);
    }
    ++r;
  }
  for (std::size_t i = n; i < m; ++i)
    if (aug(i, n) != 0) return std::nullopt;  // inconsistent
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

std::optional<RatVector> solve_rational(const IntMatrix& a, const RatVector& b) {
  return solve_rational(to_rational(a), b);
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw DimensionError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

Integer lcm_of_denominators(const RatVector& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, Integer(x.get_den()));
  return l;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// --- Sublattice -------------------------------------------------------------

Sublattice::Sublattice(IntMatrix basis) : basis_(std::move(basis)) {
  if (!basis_.is_square()) throw InvalidLatticeError("sublattice basis must be square");
  if (basis_.rows() == 0) throw InvalidLatticeError("sublattice of rank zero");
  if (det(basis_) == 0) throw InvalidLatticeError("sublattice basis is singular");
}

Sublattice Sublattice::standard(std::size_t n) { return Sublattice(IntMatrix::identity(n)); }

Sublattice Sublattice::from_generators(const IntMatrix& generators) {
  const HermiteForm form = hnf(generators);
  const std::size_t n = generators.cols();
  std::size_t nonzero = 0;
  for (std::size_t i = 0; i < form.h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < n && zero; ++j) zero = form.h(i, j) == 0;
    if (!zero) ++nonzero;
  }
  if (nonzero != n) throw InvalidLatticeError("generators do not span a full-rank lattice");
  IntMatrix basis(n, n);
  for (std::size_t i = 0; i < n; ++i) basis.set_row(i, form.h.row(i));
  return Sublattice(std::move(basis));
}

IntMatrix Sublattice::canonical_basis() const { return hnf(basis_).h; }

bool Sublattice::contains(const IntVector& point) const {
  if (point.size() != ambient_dim()) throw DimensionError("point dimension mismatch");
  const auto coords = solve_rational(basis_.transpose(), to_rational(point));
  return coords && is_integral(*coords);
}

bool operator==(const Sublattice& a, const Sublattice& b) {
  return a.ambient_dim() == b.ambient_dim() && a.canonical_basis() == b.canonical_basis();
}

Integer sublattice_index(const Sublattice& l) { return abs(det(l.basis())); }

// --- text -------------------------------------------------------------------

std::string to_string(const Integer& v) { return v.get_str(); }
std::string to_string(const Rational& v) { return v.get_str(); }

namespace {
template <typename V>
std::string join_vector(const V& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}
}  // namespace

std::string to_string(const IntVector& v) { return join_vector(v); }
std::string to_string(const RatVector& v) { return join_vector(v); }

std::string to_string(const IntMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ",";
      out += m(i, j).get_str();
    }
    out += "]";
  }
  return out + "]";
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0)
    throw std::invalid_argument("not a rational number: '" + text + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

std::ostream& operator<<(std::ostream& os, const IntVector& v) { return os << to_string(v); }
std::ostream& operator<<(std::ostream& os, const RatVector& v) { return os << to_string(v); }
std::ostream& operator<<(std::ostream& os, const IntMatrix& m) { return os << to_string(m); }

}  // namespace polydual
