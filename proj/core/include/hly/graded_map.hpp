#pragma once

#include "hly/matrix.hpp"
#include "hly/parity.hpp"
#include "hly/super_space.hpp"

namespace hly {

/// Homogeneous linear map between graded coordinate spaces. The matrix is
/// stored output-by-input (entry (r, c) is the r-th coordinate of the image
/// of basis vector c) and may only be nonzero where
/// parity_codomain(r) == parity_domain(c) + parity.
class GradedMap {
 public:
  GradedMap() = default;

  /// Validating constructor; throws ValidationError on a parity violation.
  static GradedMap make(SuperSpace domain, SuperSpace codomain, Parity parity,
                        Mat m);

  /// Endomorphism convenience form of make().
  static GradedMap endo(SuperSpace space, Parity parity, Mat m) {
    return make(space, space, parity, std::move(m));
  }

  static GradedMap zero(SuperSpace domain, SuperSpace codomain, Parity parity) {
    return GradedMap(domain, codomain, parity, Mat(codomain.dim(), domain.dim()));
  }

  static GradedMap identity(SuperSpace space) {
    return GradedMap(space, space, Parity::even, Mat::identity(space.dim()));
  }

  const SuperSpace& domain() const { return domain_; }
  const SuperSpace& codomain() const { return codomain_; }
  Parity parity() const { return parity_; }
  const Mat& mat() const { return m_; }

  Vec apply(const Vec& x) const { return m_.apply(x); }
  Vec col(int i) const { return m_.col(i); }

  /// Composition this o g; parities add.
  GradedMap compose(const GradedMap& g) const;

  GradedMap operator+(const GradedMap& o) const;
  GradedMap operator-(const GradedMap& o) const;
  friend GradedMap operator*(const Scalar& c, const GradedMap& m) {
    return GradedMap(m.domain_, m.codomain_, m.parity_, c * m.m_);
  }

  /// k-fold composition of an even endomorphism with itself.
  GradedMap pow(int k) const;

  bool commutes_with(const GradedMap& o) const;
  bool is_identity() const { return parity_ == Parity::even && m_.is_identity(); }
  bool is_zero_map() const { return m_.is_zero_mat(); }

  bool operator==(const GradedMap&) const = default;

 private:
  GradedMap(SuperSpace d, SuperSpace c, Parity p, Mat m)
      : domain_(d), codomain_(c), parity_(p), m_(std::move(m)) {}

  SuperSpace domain_;
  SuperSpace codomain_;
  Parity parity_ = Parity::even;
  Mat m_;
};

/// Super-commutator [a, b] = a b - (-1)^(|a||b|) b a of two endomorphisms
/// of the same space; the result has parity |a| + |b|.
GradedMap super_commutator(const GradedMap& a, const GradedMap& b);

}  // namespace hly
