#pragma once

#include "hly/algebra.hpp"
#include "hly/cohomology.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hly {

/// Truncated one-parameter deformation of an algebra: even coefficient pairs
/// (f_n, g_n) for n = 1..order on top of the base brackets (f_0, g_0).
/// The constructor enforces shapes and parity patterns only; the per-order
/// deformation equations D1..D8 are certified by verify_deformation().
class Deformation {
 public:
  Deformation() = default;

  /// f and g hold the coefficients for orders 1..order (size == order each);
  /// every entry must be an even tensor of the right arity on the base space.
  static Deformation make(HomLYSA base, int order, std::vector<MultiTensor> f,
                          std::vector<MultiTensor> g);

  /// All coefficients of orders 1..order zero.
  static Deformation null_deformation(HomLYSA base, int order);

  const HomLYSA& base() const { return base_; }
  int order() const { return order_; }

  /// n-th binary coefficient, n in 0..order; n = 0 is the base bracket.
  const MultiTensor& f(int n) const;
  /// n-th ternary coefficient, n in 0..order; n = 0 is the base bracket.
  const MultiTensor& g(int n) const;

  /// The order-n coefficient pair, n in 1..order.
  CochainPair coeff(int n) const;
  /// Replaces the order-n coefficient pair, n in 1..order.
  void set_coeff(int n, const CochainPair& c);

  bool operator==(const Deformation&) const = default;

 private:
  HomLYSA base_;
  int order_ = 0;
  std::vector<MultiTensor> f_;  // index 0 holds the base binary bracket
  std::vector<MultiTensor> g_;  // index 0 holds the base ternary bracket
};

/// The eight per-order deformation equations, in the order they are checked.
/// At order 0 they are exactly the base axioms SHLY1..SHLY8; at order 1 the
/// last four are the cocycle conditions E1..E4 on the coefficient pair.
enum class DeformEq {
  d1,  // twist equivariance of the binary coefficient
  d2,  // twist equivariance of the ternary coefficient
  d3,  // super-skew-symmetry of the binary coefficient
  d4,  // leading-pair super-skew-symmetry of the ternary coefficient
  d5,  // signed cyclic identity coupling the binary convolution and g_n
  d6,  // signed cyclic identity for the ternary-of-binary convolution
  d7,  // twisted-derivation identity of the ternary over the binary family
  d8,  // twisted-derivation identity of the ternary over itself
};

constexpr int deform_eq_count = 8;
std::string deform_eq_name(DeformEq e);
/// Number of bound variables in each equation (2, 3, 2, 3, 3, 4, 4, 5).
int deform_eq_arity(DeformEq e);

/// Residual of one equation at one order on one basis tuple
/// (tuple size = deform_eq_arity, order in 0..d.order()).
Vec deformation_residual(const Deformation& d, int order, DeformEq eq,
                         std::span<const int> tuple);

struct DeformationViolation {
  int order = 0;
  DeformEq eq = DeformEq::d1;
  std::vector<int> tuple;
  Vec residual;
};

struct DeformationReport {
  bool pass = true;
  std::optional<DeformationViolation> first;
};

/// Evaluates D1..D8 at every order 0..nmax (nmax = -1 means the deformation's
/// full order) on every homogeneous basis tuple, stopping at the first
/// violation.
DeformationReport verify_deformation(const Deformation& d, int nmax = -1);

/// The order-1 coefficient pair of a deformation that verifies through
/// order 1, certified as a degree-(2,3) cocycle. Throws ValidationError when
/// verification through order 1 fails; a cocycle-residual mismatch after that
/// signals a library inconsistency (InternalError), since the order-1
/// equations and the cocycle conditions are the same equations.
CochainPair infinitesimal(const Deformation& d);

/// Truncated formal automorphism of the base space: coefficient phi(0) is
/// the identity; every higher coefficient is even and commutes with the
/// twist. Constructor-enforced.
class FormalIso {
 public:
  FormalIso() = default;

  /// phi holds the coefficients for orders 1..order (size == order each).
  static FormalIso make(const GradedMap& alpha, int order,
                        std::vector<GradedMap> phi);

  /// All coefficients of orders 1..order zero.
  static FormalIso identity(SuperSpace space, int order);

  const SuperSpace& space() const { return space_; }
  int order() const { return order_; }
  /// n-th coefficient, n in 0..order; n = 0 is the identity map.
  const GradedMap& phi(int n) const;

  /// Truncated series inverse (same order).
  FormalIso inverse() const;
  /// Truncated series composition this after inner (same space and order).
  FormalIso compose(const FormalIso& inner) const;

  bool operator==(const FormalIso&) const = default;

 private:
  SuperSpace space_;
  int order_ = 0;
  std::vector<GradedMap> phi_;  // index 0 holds the identity
};

/// The deformation with brackets conjugated by the iso, order by order:
/// the new n-th coefficients collect every convolution of one iso
/// coefficient, one old coefficient, and one inverse-iso coefficient per
/// argument slot, truncated at the common order.
Deformation transport(const Deformation& d, const FormalIso& iso);

/// Whether the order-1 coefficient pairs of two deformations over the same
/// base differ by a coboundary. Both deformations must verify through
/// order 1.
bool equivalent_infinitesimals(const Deformation& d1, const Deformation& d2);

enum class TrivializeStatus { trivializable, obstructed };

struct ObstructionReport {
  TrivializeStatus status = TrivializeStatus::trivializable;
  /// Lowest order whose coefficient pair is not a coboundary; 0 when
  /// trivializable.
  int obstruction_order = 0;
  /// The offending cocycle pair (present when obstructed).
  std::optional<CochainPair> certificate;
  /// Composed iso transporting the deformation to the null one (present when
  /// trivializable).
  std::optional<FormalIso> iso;
};

/// Inductively removes the lowest-order nonzero coefficient pair while it is
/// a coboundary; reports the composed trivializing iso, or the order and
/// cocycle certificate of the first obstruction. The input must pass
/// verify_deformation (ValidationError otherwise).
ObstructionReport trivialize(const Deformation& d);

}  // namespace hly
