#include "hly/endo_index.hpp"

#include "hly/errors.hpp"

namespace hly {

EndoIndex::EndoIndex(SuperSpace space, Parity parity)
    : space_(space), parity_(parity) {
  const int n = space_.dim();
  slot_.assign(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (space_.parity(r) == space_.parity(c) + parity_) {
        slot_[r * n + c] = static_cast<int>(entries_.size());
        entries_.emplace_back(r, c);
      }
}

Vec EndoIndex::pack(const GradedMap& m) const {
  if (m.domain() != space_ || m.codomain() != space_ ||
      m.parity() != parity_)
    throw ValidationError("endomorphism does not fit this coordinate chart");
  Vec v = zero_vec(size());
  for (int t = 0; t < size(); ++t) {
    auto [r, c] = entries_[t];
    v[t] = m.mat().at(r, c);
  }
  return v;
}

GradedMap EndoIndex::unpack(const Vec& v) const {
  if (static_cast<int>(v.size()) != size())
    throw ValidationError("coordinate vector length mismatch");
  Mat m(space_.dim(), space_.dim());
  for (int t = 0; t < size(); ++t) {
    auto [r, c] = entries_[t];
    m.at(r, c) = v[t];
  }
  return GradedMap::make(space_, space_, parity_, std::move(m));
}

void add_commutation_rows(LinearSystem& sys, const EndoIndex& idx,
                          const GradedMap& a, int offset) {
  const int n = idx.space().dim();
  const Mat& am = a.mat();
  // Residual (a M - M a) at slot (r, c); with a even the residual has the
  // parity of M, so only pattern slots can be nonzero.
  for (int t = 0; t < idx.size(); ++t) {
    auto [r, c] = idx.entry(t);
    Vec row = zero_vec(sys.unknowns());
    for (int k = 0; k < n; ++k) {
      int s1 = idx.slot(k, c);
      if (s1 >= 0 && !is_zero(am.at(r, k))) row[offset + s1] += am.at(r, k);
      int s2 = idx.slot(r, k);
      if (s2 >= 0 && !is_zero(am.at(k, c))) row[offset + s2] -= am.at(k, c);
    }
    if (!is_zero_vec(row)) sys.add(std::move(row));
  }
}

}  // namespace hly
