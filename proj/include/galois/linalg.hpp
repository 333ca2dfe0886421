#ifndef GALOIS_LINALG_HPP
#define GALOIS_LINALG_HPP

#include <optional>
#include <vector>

#include "galois/numbers.hpp"
#include "galois/unipoly.hpp"

namespace galois {

using RatVec = std::vector<Rat>;
using RatMatrix = std::vector<RatVec>;  // row major

/// Row echelon data of a matrix whose columns are processed in a fixed
/// order: for each pivot column, the reduced row expressing that column's
/// unit contribution over the free columns.
struct Echelon {
  std::vector<int> pivot_cols;             // in elimination order
  std::vector<int> free_cols;              // ascending
  std::vector<RatVec> reduced_rows;        // RREF rows, full width
  size_t rank() const { return pivot_cols.size(); }
};

/// Reduced row echelon form with deterministic pivoting: columns are
/// visited in `column_order`, the pivot row is the first row with a
/// nonzero entry in the current column. Rows are integer-normalized
/// before elimination to keep entries small.
Echelon rref(RatMatrix rows, const std::vector<int>& column_order);

/// Incremental dependency finder: vectors are added one at a time; when a
/// vector is linearly dependent on the previously added ones, the
/// representation coefficients are returned (in addition order).
class LinearSolver {
 public:
  explicit LinearSolver(size_t width) : width_(width) {}
  /// nullopt = independent (vector absorbed); otherwise coefficients c with
  /// v = sum c_i * previously_added_i.
  std::optional<RatVec> add(RatVec v);
  size_t rank() const { return basis_.size(); }

 private:
  size_t width_;
  size_t added_ = 0;
  std::vector<RatVec> basis_;       // reduced, each with a pivot
  std::vector<int> pivot_of_;       // pivot column of basis_[k]
  std::vector<RatVec> combo_;       // basis_[k] = sum combo_[k][i] * added_i
};

/// Exact characteristic polynomial det(xI - M), monic of degree dim(M).
/// Computed by scaling to an integer matrix, Hessenberg charpoly modulo a
/// certified set of primes, and Chinese remaindering.
UniPoly charpoly(const RatMatrix& m);

/// Exact determinant via fraction-free elimination (Bareiss).
Rat determinant(const RatMatrix& m);

struct PrimeField;  // modp.hpp

/// Characteristic polynomial of a matrix mod p (coefficients ascending,
/// monic of degree dim); Hessenberg reduction plus the leading-minor
/// recurrence.
std::vector<uint64_t> hessenberg_charpoly_mod_p(
    std::vector<std::vector<uint64_t>> h, const PrimeField& f);

}  // namespace galois

#endif
