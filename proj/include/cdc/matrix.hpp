#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cdc/field.hpp"

namespace cdc {

/// Dense matrix over a finite field, row-major, value semantics.
class MatrixFq {
 public:
  MatrixFq(FieldPtr field, int rows, int cols);
  static MatrixFq identity(FieldPtr field, int n);

  const FieldPtr& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Elem at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  void set(int i, int j, Elem v) { a_[static_cast<std::size_t>(i) * cols_ + j] = v; }
  const std::vector<Elem>& entries() const { return a_; }

  MatrixFq stacked(const MatrixFq& below) const;   ///< vertical [this; below]
  MatrixFq concat(const MatrixFq& right) const;    ///< horizontal [this | right]
  MatrixFq transposed() const;
  MatrixFq mul(const MatrixFq& rhs) const;
  MatrixFq add(const MatrixFq& rhs) const;
  MatrixFq sub(const MatrixFq& rhs) const;
  MatrixFq scaled(Elem c) const;

  /// Unique row reduced echelon form together with the rank.
  std::pair<MatrixFq, int> rref() const;
  int rank() const;
  bool is_rref() const;
  /// Pivot columns of a matrix already in rref (one per nonzero row).
  std::vector<int> pivot_columns() const;
  bool is_zero() const;

  bool operator==(const MatrixFq& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator<(const MatrixFq& o) const { return a_ < o.a_; }

 private:
  FieldPtr field_;
  int rows_, cols_;
  std::vector<Elem> a_;
};

/// A k-dimensional subspace of GF(q)^v, held as its unique full-rank k x v
/// representative matrix in rref.
class Subspace {
 public:
  /// Wraps a matrix that is already a full-rank rref representative.
  static Subspace from_rref(MatrixFq rep);
  /// Row space of an arbitrary matrix (rrefs and drops zero rows).
  static Subspace span(const MatrixFq& m);

  const MatrixFq& rep() const { return rep_; }
  int ambient() const { return rep_.cols(); }
  int dim() const { return rep_.rows(); }

  /// Binary indicator of the pivot columns of the representative.
  std::vector<bool> pivot_vector() const;

  /// Orthogonal complement with respect to the standard dot product.
  Subspace orthogonal_complement() const;

  bool operator==(const Subspace& o) const { return rep_ == o.rep_; }
  bool operator<(const Subspace& o) const { return rep_ < o.rep_; }

 private:
  explicit Subspace(MatrixFq rep) : rep_(std::move(rep)) {}
  MatrixFq rep_;
};

/// Subspace distance dim(U+W) - dim(U n W), via the rank of the stacked
/// representatives; supports unequal dimensions.  Throws on ambient mismatch.
int subspace_distance(const Subspace& u, const Subspace& w);

/// dim(U n W), computed as dim U + dim W - rank of the stack.
int intersection_dim(const Subspace& u, const Subspace& w);

int hamming_distance(const std::vector<bool>& a, const std::vector<bool>& b);

/// Streams every k-dimensional subspace of GF(q)^v exactly once as a
/// full-rank rref matrix: pivot sets in lexicographic order, then free
/// entries in lexicographic order (row-major, first position most
/// significant).  Construction throws BudgetError when the Grassmannian has
/// more than `budget` elements.
class GrassmannianEnumerator {
 public:
  static constexpr std::uint64_t kDefaultBudget = 10'000'000;

  GrassmannianEnumerator(FieldPtr field, int v, int k,
                         std::uint64_t budget = kDefaultBudget);

  /// Writes the next representative into `out`; false when exhausted.
  bool next(MatrixFq& out);

 private:
  void load_free_positions();

  FieldPtr field_;
  int v_, k_;
  bool done_ = false, fresh_ = true;
  std::vector<int> pivots_;
  std::vector<std::pair<int, int>> free_pos_;  // row-major free coordinates
  std::vector<Elem> free_val_;
};

}  // namespace cdc
