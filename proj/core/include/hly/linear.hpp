#pragma once

#include "hly/matrix.hpp"

#include <optional>
#include <vector>

namespace hly {

/// Subspace of Q^ambient held as the unique reduced row-echelon basis of its
/// row span; equality of subspaces is equality of representations.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  explicit SubspaceBasis(int ambient) : ambient_(ambient) {}

  /// Canonicalizes arbitrary generators (dependent or zero vectors allowed).
  static SubspaceBasis from_generators(int ambient, std::vector<Vec> gens);
  static SubspaceBasis full_space(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& vectors() const { return rows_; }

  /// Remainder of v after elimination against the basis; zero iff contained.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero_vec(reduce(v)); }
  bool contains_subspace(const SubspaceBasis& other) const;

  SubspaceBasis sum(const SubspaceBasis& other) const;
  /// Zassenhaus intersection.
  SubspaceBasis intersect(const SubspaceBasis& other) const;

  /// dim(this) - dim(sub); throws ValidationError naming the first basis
  /// vector of `sub` that is not contained in this subspace.
  int quotient_dim(const SubspaceBasis& sub) const;

  bool operator==(const SubspaceBasis&) const = default;

 private:
  int ambient_ = 0;
  std::vector<Vec> rows_;    // reduced row-echelon form, no zero rows
  std::vector<int> pivots_;  // pivot column of each row, strictly increasing
};

/// System of exact linear equations  lhs . x = rhs  assembled row by row.
class LinearSystem {
 public:
  explicit LinearSystem(int unknowns) : unknowns_(unknowns) {}

  int unknowns() const { return unknowns_; }
  int equations() const { return static_cast<int>(lhs_.size()); }

  void add(Vec row, Scalar rhs = Scalar(0));
  /// Adds the equation x[unknown] = value.
  void add_pin(int unknown, Scalar value);

  const std::vector<Vec>& lhs() const { return lhs_; }
  const Vec& rhs() const { return rhs_; }

 private:
  int unknowns_;
  std::vector<Vec> lhs_;
  Vec rhs_;
};

/// Basis of the homogeneous solution space (the right-hand sides are ignored).
SubspaceBasis nullspace(const LinearSystem& sys);

struct SolveResult {
  bool consistent = false;
  Vec particular;        // free unknowns set to zero; empty when inconsistent
  SubspaceBasis kernel;  // homogeneous solutions
};

/// Deterministic exact solve (Gauss-Jordan, leftmost pivot first).
SolveResult solve(const LinearSystem& sys);

/// Rank of a row collection; used for dimension cross-checks.
int rank_of(std::vector<Vec> rows);

/// Nullspace of the linear map realized column-by-column: columns[t] is the
/// image of unit vector t. Columns shorter than the longest one are read as
/// zero-padded.
SubspaceBasis kernel_of_columns(int unknowns, const std::vector<Vec>& columns);

}  // namespace hly
