#include "hly/graded_map.hpp"

#include <string>

namespace hly {

GradedMap GradedMap::make(SuperSpace domain, SuperSpace codomain, Parity parity,
                          Mat m) {
  if (m.rows() != codomain.dim() || m.cols() != domain.dim())
    throw ValidationError("graded map matrix has shape " +
                          std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + ", expected " +
                          std::to_string(codomain.dim()) + "x" +
                          std::to_string(domain.dim()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!is_zero(m.at(r, c)) &&
          codomain.parity(r) != domain.parity(c) + parity)
        throw ValidationError("graded map entry (" + std::to_string(r) + "," +
                              std::to_string(c) + ") violates the parity pattern");
  return GradedMap(domain, codomain, parity, std::move(m));
}

GradedMap GradedMap::compose(const GradedMap& g) const {
  if (g.codomain_ != domain_)
    throw ValidationError("graded map composition domain mismatch");
  // Composition of parity-patterned maps keeps the pattern; no re-check.
  return GradedMap(g.domain_, codomain_, parity_ + g.parity_, m_ * g.m_);
}

GradedMap GradedMap::operator+(const GradedMap& o) const {
  if (o.domain_ != domain_ || o.codomain_ != codomain_ || o.parity_ != parity_)
    throw ValidationError("graded map sum needs matching spaces and parity");
  return GradedMap(domain_, codomain_, parity_, m_ + o.m_);
}

GradedMap GradedMap::operator-(const GradedMap& o) const {
  if (o.domain_ != domain_ || o.codomain_ != codomain_ || o.parity_ != parity_)
    throw ValidationError("graded map difference needs matching spaces and parity");
  return GradedMap(domain_, codomain_, parity_, m_ - o.m_);
}

GradedMap GradedMap::pow(int k) const {
  if (domain_ != codomain_ || parity_ != Parity::even)
    throw ValidationError("graded map power needs an even endomorphism");
  return GradedMap(domain_, codomain_, Parity::even, m_.pow(k));
}

bool GradedMap::commutes_with(const GradedMap& o) const {
  return compose(o).mat() == o.compose(*this).mat();
}

GradedMap super_commutator(const GradedMap& a, const GradedMap& b) {
  const Scalar sign(parity_sign(parity_product(a.parity(), b.parity())));
  GradedMap ab = a.compose(b);
  GradedMap ba = b.compose(a);
  return GradedMap::make(a.domain(), a.codomain(), a.parity() + b.parity(),
                         ab.mat() - sign * ba.mat());
}

}  // namespace hly
