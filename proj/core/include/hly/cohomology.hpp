#pragma once

#include "hly/algebra.hpp"
#include "hly/endo_index.hpp"
#include "hly/linear.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hly {

/// A bilinear and a trilinear candidate deformation direction on L, both
/// parity-even and L-valued. The defining conditions (super-skew leading
/// pair, twist equivariance) are certified by is_cochain(), not by the
/// type itself.
struct CochainPair {
  MultiTensor f;  // arity 2
  MultiTensor g;  // arity 3

  bool operator==(const CochainPair&) const = default;
};

CochainPair zero_cochain(const SuperSpace& space);
CochainPair add_cochain(const CochainPair& a, const CochainPair& b);
CochainPair scale_cochain(const Scalar& c, const CochainPair& a);
bool is_zero_cochain(const CochainPair& c);

/// Flat exact-coordinate chart on the parity-even pairs (f, g): first every
/// bilinear slot (i, j; m) with parity(m) = parity(i) + parity(j) in
/// lexicographic order with m innermost, then every trilinear slot
/// (i, j, k; m) under the same filter.
class CochainIndex {
 public:
  explicit CochainIndex(SuperSpace space);

  const SuperSpace& space() const { return space_; }
  int f_coords() const { return static_cast<int>(fslots_.size()); }
  int g_coords() const { return static_cast<int>(gslots_.size()); }
  int size() const { return f_coords() + g_coords(); }

  Vec pack(const CochainPair& c) const;
  CochainPair unpack(const Vec& v) const;

 private:
  SuperSpace space_;
  std::vector<std::array<int, 3>> fslots_;  // (i, j, m)
  std::vector<std::array<int, 4>> gslots_;  // (i, j, k, m)
};

/// Witnessed check of the two defining conditions on all basis tuples:
/// super-skewness of the leading pair (f(x,y) = -(-1)^{|x||y|} f(y,x) and
/// the same for g in its first two slots) and twist equivariance
/// (f(ax, ay) = a f(x,y), g(ax, ay, az) = a g(x,y,z)).
struct CochainCheck {
  bool pass = true;
  std::string condition;   // which requirement failed; empty on pass
  std::vector<int> tuple;  // witness basis tuple
};
CochainCheck is_cochain(const HomLYSA& a, const CochainPair& c);

/// Diagnostic companion reading of the alternation condition: vanishing on
/// literally repeated arguments, evaluated on even vectors only (where it
/// coincides with super-skewness).
CochainCheck even_alternation_diagnostic(const HomLYSA& a,
                                         const CochainPair& c);

/// Basis of the even endomorphisms commuting with the twist (the degree-1
/// cochains the coboundary below accepts).
std::vector<GradedMap> one_cochain_basis(const HomLYSA& a);

/// Coboundary of an even twist-commuting map phi:
///   binary part  (x,y)   -> [phi x, y] + [x, phi y] - phi[x, y]
///   ternary part (x,y,z) -> {phi x,y,z} + {x,phi y,z} + {x,y,phi z}
///                           - phi{x,y,z}
/// Throws ValidationError when phi is odd or fails to commute with the
/// twist.
CochainPair delta1(const HomLYSA& a, const GradedMap& phi);

/// Dense exact tensor of arbitrary arity on a graded space, holding one
/// output vector per basis tuple (the residual tensors below have arities
/// 3..5, beyond what MultiTensor covers).
class ResidualTensor {
 public:
  ResidualTensor() = default;
  ResidualTensor(SuperSpace space, int arity);

  const SuperSpace& space() const { return space_; }
  int arity() const { return arity_; }

  Vec& at(std::span<const int> tuple) { return vals_[flat(tuple)]; }
  const Vec& at(std::span<const int> tuple) const {
    return vals_[flat(tuple)];
  }

  bool is_zero() const;
  /// First basis tuple with a nonzero output, in lexicographic order.
  std::optional<std::vector<int>> first_nonzero() const;

  bool operator==(const ResidualTensor&) const = default;

 private:
  size_t flat(std::span<const int> tuple) const;

  SuperSpace space_;
  int arity_ = 0;
  std::vector<Vec> vals_;
};

/// The four components of the cocycle condition at degree (2, 3); (f, g) is
/// a cocycle exactly when all four tensors vanish.
enum class CocycleEq { e1, e2, e3, e4 };
constexpr int cocycle_eq_count = 4;
std::string cocycle_eq_name(CocycleEq e);
/// Bound variables per component (3, 4, 4, 5).
int cocycle_eq_arity(CocycleEq e);

/// One component of the cocycle residual on one basis tuple.
Vec cocycle_eq_residual(const HomLYSA& a, const CochainPair& c, CocycleEq e,
                        std::span<const int> tuple);

struct CocycleResidual {
  ResidualTensor E1;  // trilinear
  ResidualTensor E2;  // quadrilinear
  ResidualTensor E3;  // quadrilinear
  ResidualTensor E4;  // pentalinear

  bool is_zero() const;
  /// First violated (component, tuple) scanning E1..E4 in order.
  std::optional<std::pair<CocycleEq, std::vector<int>>> first_violation()
      const;
};

/// Evaluates all four residual tensors of (f, g) over the given algebra.
CocycleResidual cocycle_residual(const HomLYSA& a, const CochainPair& c);

/// Basis (in packed coordinates) of the pairs passing is_cochain.
SubspaceBasis cochain_basis(const HomLYSA& a);
/// Basis (packed) of the cochains with vanishing cocycle residual.
SubspaceBasis z23_basis(const HomLYSA& a);
/// Basis (packed) of the coboundaries delta1(phi) over one_cochain_basis.
SubspaceBasis b23_basis(const HomLYSA& a);

struct CohomologyDims {
  int cochains = 0;      // dim of the cochain space
  int cocycles = 0;      // dim Z
  int coboundaries = 0;  // dim B
  int h = 0;             // dim Z - dim B
  int one_cochains = 0;  // dim of the degree-1 space feeding delta1
};

/// Computes all dimensions; throws InternalError when the coboundary space
/// is not contained in the cocycle space (a library bug, never a property
/// of the input).
CohomologyDims h23_dims(const HomLYSA& a);

/// Deterministic preimage under delta1: an even twist-commuting phi with
/// delta1(phi) = c (free coordinates pinned to zero), or nullopt when c is
/// not a coboundary.
std::optional<GradedMap> solve_coboundary(const HomLYSA& a,
                                          const CochainPair& c);

}  // namespace hly
