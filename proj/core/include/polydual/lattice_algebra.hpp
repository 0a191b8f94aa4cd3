#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace polydual {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidLatticeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<T>>& rows,
                          std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<T> row(std::size_t i) const;
  std::vector<T> col(std::size_t j) const;
  void set_row(std::size_t i, const std::vector<T>& values);
  void swap_rows(std::size_t a, std::size_t b);

  Matrix transpose() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
/// Row vector times matrix.
IntVector operator*(const IntVector& v, const IntMatrix& m);
RatVector operator*(const RatVector& v, const RatMatrix& m);

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);
/// Throws DimensionError if any entry is not an integer.
IntMatrix to_integer(const RatMatrix& m);
bool is_integral(const RatVector& v);
bool is_integral(const RatMatrix& m);

/// Exact determinant by fraction-free Bareiss elimination.
Integer det(const IntMatrix& m);
Rational det(const RatMatrix& m);

std::size_t rank(const RatMatrix& m);
inline std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Row-style Hermite normal form: h = u * m with u unimodular, h in row
/// echelon form with positive pivots and entries above each pivot reduced
/// into [0, pivot). Zero rows sink to the bottom.
struct HermiteForm {
  IntMatrix h;
  IntMatrix u;
};
HermiteForm hnf(const IntMatrix& m);

/// Rows x with x * m = 0, as a basis of the integral left kernel.
IntMatrix left_kernel(const IntMatrix& m);

/// Unique solution of a * x = b, or nullopt when a is singular.
std::optional<RatVector> solve_rational(const IntMatrix& a, const RatVector& b);
std::optional<RatVector> solve_rational(const RatMatrix& a, const RatVector& b);
/// Solution of a possibly overdetermined system a * x = b (a is m x n with
/// m >= n) when it is consistent and has exactly one solution.
std::optional<RatVector> solve_unique(const RatMatrix& a, const RatVector& b);

/// num/den in lowest terms. Throws DimensionError when den is zero.
Rational ratio(const Integer& num, const Integer& den);
inline Rational ratio(long num, long den) { return ratio(Integer(num), Integer(den)); }

Integer content(const IntVector& v);
Integer lcm_of_denominators(const RatVector& v);
Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);

/// Full-rank sublattice of Z^n given by basis rows in ambient coordinates.
class Sublattice {
 public:
  explicit Sublattice(IntMatrix basis);

  static Sublattice standard(std::size_t n);
  /// Lattice spanned by the rows of `generators`; throws InvalidLatticeError
  /// when the span is not full rank.
  static Sublattice from_generators(const IntMatrix& generators);

  std::size_t ambient_dim() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }
  /// Basis in Hermite normal form; two sublattices are equal iff these agree.
  IntMatrix canonical_basis() const;
  bool contains(const IntVector& point) const;

  friend bool operator==(const Sublattice& a, const Sublattice& b);

 private:
  IntMatrix basis_;
};

Integer sublattice_index(const Sublattice& l);

std::string to_string(const Integer& v);
std::string to_string(const Rational& v);
std::string to_string(const IntVector& v);
std::string to_string(const RatVector& v);
std::string to_string(const IntMatrix& m);
/// Parses "p/q" or "p".
Rational parse_rational(const std::string& text);

std::ostream& operator<<(std::ostream& os, const IntVector& v);
std::ostream& operator<<(std::ostream& os, const RatVector& v);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// ---------------------------------------------------------------------------

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

template <typename T>
Matrix<T> Matrix<T>::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

template <typename T>
Matrix<T> Matrix<T>::from_rows(const std::vector<std::vector<T>>& rows,
                               std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

template <typename T>
std::vector<T> Matrix<T>::row(std::size_t i) const {
  return std::vector<T>(data_.begin() + i * cols_,
                        data_.begin() + (i + 1) * cols_);
}

template <typename T>
std::vector<T> Matrix<T>::col(std::size_t j) const {
  std::vector<T> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

template <typename T>
void Matrix<T>::set_row(std::size_t i, const std::vector<T>& values) {
  if (values.size() != cols_) throw DimensionError("row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = values[j];
}

template <typename T>
void Matrix<T>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

template <typename T>
Matrix<T> Matrix<T>::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

}  // namespace polydual
