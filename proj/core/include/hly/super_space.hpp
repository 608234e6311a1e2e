#pragma once

#include "hly/errors.hpp"
#include "hly/parity.hpp"

#include <span>
#include <string>

namespace hly {

/// Finite-dimensional Z/2-graded coordinate space. The basis is ordered with
/// all even vectors first: indices [0, even_dim) are even, the rest odd.
struct SuperSpace {
  int even_dim = 0;
  int odd_dim = 0;

  int dim() const { return even_dim + odd_dim; }

  Parity parity(int i) const {
    if (i < 0 || i >= dim())
      throw ValidationError("basis index " + std::to_string(i) +
                            " out of range for dimension " +
                            std::to_string(dim()));
    return i < even_dim ? Parity::even : Parity::odd;
  }

  bool operator==(const SuperSpace&) const = default;
};

/// Advances `t` through {0..n-1}^t.size() in lexicographic order.
/// Returns false (leaving t all-zero) after the last tuple.
inline bool advance_tuple(std::span<int> t, int n) {
  for (int pos = static_cast<int>(t.size()) - 1; pos >= 0; --pos) {
    if (++t[pos] < n) return true;
    t[pos] = 0;
  }
  return false;
}

}  // namespace hly
