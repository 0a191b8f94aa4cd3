#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polydual/lattice_algebra.hpp"
#include "polydual/weight_system.hpp"

namespace polydual {

/// n x n nonnegative integer matrix C with C a = (h,...,h) and b C = (k,...,k).
struct WeightedMagicSquare {
  IntMatrix c;
  WeightSystem wa;
  WeightSystem wb;
};

struct DualityCertificate {
  WeightedMagicSquare square;
  bool primitive = false;
  bool strongly_dual = false;
};

/// One dual weight system (up to equivalence) with every distinct certificate
/// found for it. Certificates are distinct up to row permutations and column
/// permutations among equal weights of wa.
struct DualClass {
  WeightSystem dual;  // canonical form
  std::vector<DualityCertificate> certificates;
  bool strongly_dual = false;  // some certificate is strongly dual

  /// A strongly dual certificate when one exists, else the first.
  const DualityCertificate& witness() const;
};

struct DualSearch {
  std::vector<DualClass> classes;  // ordered by canonical dual
  std::size_t subsets_examined = 0;
  std::size_t raw_certificates = 0;  // accepted squares before deduplication
};

bool is_weighted_magic_square(const IntMatrix& c, const WeightSystem& wa, const WeightSystem& wb);
bool is_primitive(const WeightedMagicSquare& s);
bool is_strongly_dual(const WeightedMagicSquare& s);
/// Zero in every row and every column.
bool has_zero_cross(const IntMatrix& c);

/// Rows of C minus the all-ones matrix.
IntMatrix offset_rows(const IntMatrix& c);

/// Positive weights b with b C = (k,...,k), scaled to a reduced system (b; k).
/// nullopt when C is singular or the solution is not strictly positive.
std::optional<WeightSystem> weights_from_square(const IntMatrix& c);

/// The point (a_0/(h-a_0)) (1,...,1) lies strictly inside the simplex spanned
/// by the rows of B = C - 1, tested in exact barycentric coordinates.
bool interior_condition(const IntMatrix& c, const WeightSystem& wa);

/// No lattice point of M(W_a) in the simplex spanned by the rows of B other
/// than its vertices. Checked by enumerating a bounding box.
bool simplex_is_elementary(const IntMatrix& b_rows, const WeightSystem& wa);

/// Exhaustive search over n-subsets of the degree-h monomials of wa.
/// wa must be reduced. Throws UnsupportedCaseError when a_0 = 0 and n >= 3.
DualSearch dual_search(const WeightSystem& wa);
std::vector<DualClass> dual_weights(const WeightSystem& wa);

struct SimplexWeights {
  WeightSystem wb;
  WeightedMagicSquare square;
};

/// Converse direction: given the n vertex rows (c_i1 - 1, ..., c_in - 1),
/// check that they lie on the plane sum a_j x_j = a_0, contain the interior
/// point and span an elementary simplex, then rebuild W_b with h = k.
/// Throws InputError when some entry is below -1.
std::optional<SimplexWeights> simplex_to_weights(const IntMatrix& rows, const WeightSystem& wa);

bool is_self_dual(const WeightSystem& w);

/// A certificate for W_a dual to itself whose rows can be reordered so that
/// b = a entrywise and C is symmetric. Returns that reordered C.
std::optional<IntMatrix> symmetric_certificate(const WeightSystem& w);

}  // namespace polydual
