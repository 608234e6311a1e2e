#include "hly/linear.hpp"

#include "hly/errors.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace hly {

namespace {

// In-place reduced row echelon form over the first `cols` columns (rows may
// be wider; trailing columns ride along, which reduces augmented systems).
// Returns the pivot column of each echelon row. Deterministic: columns are
// processed left to right and the first row with a nonzero entry is chosen.
std::vector<int> rref(std::vector<Vec>& rows, int cols) {
  std::vector<int> pivots;
  size_t r = 0;
  for (int c = 0; c < cols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && is_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    if (rows[r][c] != 1) {
      Scalar inv = Scalar(1) / rows[r][c];
      for (size_t j = c; j < rows[r].size(); ++j)
        if (!is_zero(rows[r][j])) rows[r][j] *= inv;
    }
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || is_zero(rows[i][c])) continue;
      Scalar f = rows[i][c];
      for (size_t j = c; j < rows[i].size(); ++j)
        if (!is_zero(rows[r][j])) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);  // drop the all-zero tail (over the leading block)
  return pivots;
}

}  // namespace

SubspaceBasis SubspaceBasis::from_generators(int ambient,
                                             std::vector<Vec> gens) {
  for (const Vec& g : gens)
    if (static_cast<int>(g.size()) != ambient)
      throw ValidationError("generator length does not match ambient dimension");
  SubspaceBasis s(ambient);
  s.pivots_ = rref(gens, ambient);
  s.rows_ = std::move(gens);
  return s;
}

SubspaceBasis SubspaceBasis::full_space(int ambient) {
  std::vector<Vec> gens;
  gens.reserve(static_cast<size_t>(ambient));
  for (int i = 0; i < ambient; ++i) gens.push_back(basis_vec(ambient, i));
  return from_generators(ambient, std::move(gens));
}

Vec SubspaceBasis::reduce(Vec v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw ValidationError("vector length does not match ambient dimension");
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& f = v[static_cast<size_t>(pivots_[r])];
    if (!is_zero(f)) axpy(v, -f, rows_[r]);
  }
  return v;
}

bool SubspaceBasis::contains_subspace(const SubspaceBasis& other) const {
  for (const Vec& v : other.rows_)
    if (!contains(v)) return false;
  return true;
}

SubspaceBasis SubspaceBasis::sum(const SubspaceBasis& other) const {
  if (other.ambient_ != ambient_)
    throw ValidationError("subspace sum needs a common ambient space");
  std::vector<Vec> gens = rows_;
  gens.insert(gens.end(), other.rows_.begin(), other.rows_.end());
  return from_generators(ambient_, std::move(gens));
}

SubspaceBasis SubspaceBasis::intersect(const SubspaceBasis& other) const {
  if (other.ambient_ != ambient_)
    throw ValidationError("subspace intersection needs a common ambient space");
  const int n = ambient_;
  // Zassenhaus block matrix: rows [x | x] for x in this, [y | 0] for y in
  // other. After echelon reduction, rows whose left half vanished carry an
  // intersection basis in the right half.
  std::vector<Vec> block;
  for (const Vec& x : rows_) {
    Vec row(2 * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) row[i] = row[n + i] = x[i];
    block.push_back(std::move(row));
  }
  for (const Vec& y : other.rows_) {
    Vec row(2 * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) row[i] = y[i];
    block.push_back(std::move(row));
  }
  std::vector<int> pivots = rref(block, 2 * n);
  std::vector<Vec> inter;
  for (size_t r = 0; r < block.size(); ++r)
    if (pivots[r] >= n)
      inter.emplace_back(block[r].begin() + n, block[r].end());
  return from_generators(n, std::move(inter));
}

int SubspaceBasis::quotient_dim(const SubspaceBasis& sub) const {
  for (size_t i = 0; i < sub.rows_.size(); ++i)
    if (!contains(sub.rows_[i]))
      throw ValidationError("quotient: basis vector " + std::to_string(i) +
                            " of the would-be subspace is not contained");
  return dim() - sub.dim();
}

void LinearSystem::add(Vec row, Scalar rhs) {
  if (static_cast<int>(row.size()) != unknowns_)
    throw ValidationError("equation length does not match unknown count");
  lhs_.push_back(std::move(row));
  rhs_.push_back(std::move(rhs));
}

void LinearSystem::add_pin(int unknown, Scalar value) {
  Vec row = zero_vec(unknowns_);
  row[static_cast<size_t>(unknown)] = 1;
  add(std::move(row), std::move(value));
}

namespace {

// Free-column parameterization of the homogeneous solutions of an RREF block.
SubspaceBasis kernel_from_rref(const std::vector<Vec>& rows,
                               const std::vector<int>& pivots, int unknowns) {
  std::vector<bool> is_pivot(static_cast<size_t>(unknowns), false);
  for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < unknowns; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    Vec v = zero_vec(unknowns);
    v[static_cast<size_t>(f)] = 1;
    for (size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<size_t>(pivots[r])] = -rows[r][static_cast<size_t>(f)];
    basis.push_back(std::move(v));
  }
  return SubspaceBasis::from_generators(unknowns, std::move(basis));
}

}  // namespace

SubspaceBasis nullspace(const LinearSystem& sys) {
  std::vector<Vec> rows = sys.lhs();
  std::vector<int> pivots = rref(rows, sys.unknowns());
  return kernel_from_rref(rows, pivots, sys.unknowns());
}

SolveResult solve(const LinearSystem& sys) {
  const int n = sys.unknowns();
  std::vector<Vec> aug = sys.lhs();
  for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(sys.rhs()[i]);
  // Reduce across the augmented column as well: a pivot landing there is
  // exactly an inconsistent equation 0 = 1.
  std::vector<int> pivots = rref(aug, n + 1);
  SolveResult res;
  if (!pivots.empty() && pivots.back() == n) {
    res.consistent = false;
    return res;
  }
  res.consistent = true;
  res.particular = zero_vec(n);
  for (size_t r = 0; r < pivots.size(); ++r)
    res.particular[static_cast<size_t>(pivots[r])] = aug[r].back();
  std::vector<Vec> lhs_only;
  lhs_only.reserve(aug.size());
  for (const Vec& row : aug) lhs_only.emplace_back(row.begin(), row.end() - 1);
  res.kernel = kernel_from_rref(lhs_only, pivots, n);
  return res;
}

int rank_of(std::vector<Vec> rows) {
  if (rows.empty()) return 0;
  return static_cast<int>(rref(rows, static_cast<int>(rows[0].size())).size());
}

SubspaceBasis kernel_of_columns(int unknowns,
                                const std::vector<Vec>& columns) {
  if (static_cast<int>(columns.size()) != unknowns)
    throw ValidationError("one column per unknown is required");
  size_t height = 0;
  for (const Vec& col : columns) height = std::max(height, col.size());
  LinearSystem sys(unknowns);
  for (size_t r = 0; r < height; ++r) {
    Vec row = zero_vec(unknowns);
    bool nonzero = false;
    for (int t = 0; t < unknowns; ++t)
      if (r < columns[t].size() && !is_zero(columns[t][r])) {
        row[t] = columns[t][r];
        nonzero = true;
      }
    if (nonzero) sys.add(std::move(row));
  }
  return nullspace(sys);
}

}  // namespace hly
