#pragma once

#include "hly/graded_map.hpp"
#include "hly/linear.hpp"

#include <utility>
#include <vector>

namespace hly {

/// Flat exact-coordinate chart on the homogeneous endomorphisms of a graded
/// space with a fixed parity. Coordinates enumerate the matrix slots (r, c)
/// with parity(r) = parity(c) + parity, in row-major order; every other slot
/// of such an endomorphism is identically zero.
class EndoIndex {
 public:
  EndoIndex(SuperSpace space, Parity parity);

  const SuperSpace& space() const { return space_; }
  Parity parity() const { return parity_; }
  int size() const { return static_cast<int>(entries_.size()); }

  /// Coordinate of slot (r, c), or -1 when the slot lies outside the
  /// parity pattern.
  int slot(int r, int c) const { return slot_[r * space_.dim() + c]; }
  /// Matrix slot of coordinate t.
  std::pair<int, int> entry(int t) const { return entries_[t]; }

  Vec pack(const GradedMap& m) const;
  GradedMap unpack(const Vec& v) const;

 private:
  SuperSpace space_;
  Parity parity_ = Parity::even;
  std::vector<std::pair<int, int>> entries_;
  std::vector<int> slot_;
};

/// Appends to sys the conditions "unpack of the unknown block commutes with
/// a", where the block occupies coordinates [offset, offset + idx.size())
/// of the system's unknown vector.
void add_commutation_rows(LinearSystem& sys, const EndoIndex& idx,
                          const GradedMap& a, int offset);

}  // namespace hly
