#pragma once

#include "hly/matrix.hpp"
#include "hly/parity.hpp"
#include "hly/super_space.hpp"

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace hly {

/// Structure constants of a multilinear map L^arity -> L on a graded space,
/// stored densely: entry (i_1..i_k; m) is the m-th output coordinate on the
/// basis tuple (e_{i_1}, ..., e_{i_k}). A homogeneous map of parity s admits
/// a nonzero entry only when parity(m) = parity(i_1) + ... + parity(i_k) + s;
/// set() enforces this continuously. Arity is 2 or 3.
class MultiTensor {
 public:
  MultiTensor() = default;

  static MultiTensor zero(SuperSpace space, int arity,
                          Parity parity = Parity::even);

  const SuperSpace& space() const { return space_; }
  int arity() const { return arity_; }
  Parity parity() const { return parity_; }

  /// Writes one structure constant; throws ValidationError when (idx; m)
  /// sits outside the parity pattern (unless the value is zero).
  void set(std::span<const int> idx, int m, Scalar value);
  void set2(int i, int j, int m, Scalar value) {
    set(std::array{i, j}, m, std::move(value));
  }
  void set3(int i, int j, int k, int m, Scalar value) {
    set(std::array{i, j, k}, m, std::move(value));
  }

  const Scalar& at(std::span<const int> idx, int m) const {
    return c_[flat(idx, m)];
  }
  const Scalar& at2(int i, int j, int m) const {
    return at(std::array{i, j}, m);
  }
  const Scalar& at3(int i, int j, int k, int m) const {
    return at(std::array{i, j, k}, m);
  }

  /// Output vector on a basis tuple.
  Vec eval_basis(std::span<const int> idx) const;
  Vec eval_basis2(int i, int j) const { return eval_basis(std::array{i, j}); }
  Vec eval_basis3(int i, int j, int k) const {
    return eval_basis(std::array{i, j, k});
  }

  /// Multilinear extension to coordinate vectors (arity must match the
  /// number of arguments). Zero coefficients are skipped.
  Vec eval2(const Vec& x, const Vec& y) const;
  Vec eval3(const Vec& x, const Vec& y, const Vec& z) const;

  MultiTensor operator+(const MultiTensor& o) const;
  MultiTensor operator-(const MultiTensor& o) const;
  friend MultiTensor operator*(const Scalar& c, MultiTensor t) {
    for (Scalar& s : t.c_) s *= c;
    return t;
  }

  bool is_zero() const {
    for (const Scalar& s : c_)
      if (!hly::is_zero(s)) return false;
    return true;
  }

  /// First nonzero entry in lexicographic (tuple, output) order.
  std::optional<std::pair<std::vector<int>, int>> first_nonzero() const;

  /// Visits every entry (including zeros) in lexicographic order.
  void for_each(
      const std::function<void(std::span<const int>, int, const Scalar&)>& fn)
      const;

  bool operator==(const MultiTensor&) const = default;

 private:
  size_t flat(std::span<const int> idx, int m) const;
  bool pattern_allows(std::span<const int> idx, int m) const;

  SuperSpace space_;
  int arity_ = 0;
  Parity parity_ = Parity::even;
  std::vector<Scalar> c_;
};

}  // namespace hly
