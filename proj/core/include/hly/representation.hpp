#pragma once

#include "hly/algebra.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hly {

/// Module data over a HomLYSA: an even twist beta on the module space V, a
/// linear action rho (rho(e_i) homogeneous of the parity of e_i), and two
/// bilinear actions D, theta (D(e_i,e_j), theta(e_i,e_j) homogeneous of
/// parity |e_i|+|e_j|). Shapes and parities are constructor-enforced; the
/// defining conditions SHR1..SHR10 are certified by verify_representation().
class RepTriple {
 public:
  RepTriple() = default;

  static RepTriple make(SuperSpace algebra_space, SuperSpace module_space,
                        GradedMap beta, std::vector<GradedMap> rho,
                        std::vector<GradedMap> Dmap,
                        std::vector<GradedMap> theta);

  /// rho = D = theta = 0, beta = identity.
  static RepTriple zero(const SuperSpace& algebra_space,
                        const SuperSpace& module_space);

  const SuperSpace& algebra_space() const { return algebra_space_; }
  const SuperSpace& module_space() const { return module_space_; }
  const GradedMap& beta() const { return beta_; }
  const GradedMap& rho(int i) const { return rho_[i]; }
  const GradedMap& Dmap(int i, int j) const {
    return Dmap_[i * algebra_space_.dim() + j];
  }
  const GradedMap& theta(int i, int j) const {
    return theta_[i * algebra_space_.dim() + j];
  }

  /// Linear/bilinear extensions; results are raw matrices on V (mixing
  /// parities when the algebra argument is inhomogeneous).
  Mat rho_mat(const Vec& x) const;
  Mat D_mat(const Vec& x, const Vec& y) const;
  Mat theta_mat(const Vec& x, const Vec& y) const;

  bool operator==(const RepTriple&) const = default;

 private:
  SuperSpace algebra_space_;
  SuperSpace module_space_;
  GradedMap beta_;
  std::vector<GradedMap> rho_;
  std::vector<GradedMap> Dmap_;
  std::vector<GradedMap> theta_;
};

/// The ten defining conditions, in the order they are checked.
enum class RepCondition {
  shr1, shr2, shr3, shr4, shr5, shr6, shr7, shr8, shr9, shr10,
};
constexpr int rep_condition_count = 10;
std::string rep_condition_name(RepCondition c);
/// Bound algebra variables per condition (1, 2, 2, 2, 3, 3, 3, 3, 4, 4).
int rep_condition_arity(RepCondition c);

struct RepWitness {
  std::vector<int> tuple;
  Mat residual;  // endomorphism of V
};

struct RepStatus {
  bool pass = true;
  long violations = 0;
  std::optional<RepWitness> witness;
};

struct RepReport {
  std::array<RepStatus, rep_condition_count> status;

  const RepStatus& operator[](RepCondition c) const {
    return status[static_cast<size_t>(c)];
  }
  bool all_pass() const {
    for (const auto& s : status)
      if (!s.pass) return false;
    return true;
  }
};

/// Residual of one condition on one basis tuple of the algebra.
Mat rep_condition_residual(const HomLYSA& a, const RepTriple& r,
                           RepCondition c, std::span<const int> tuple);

/// Evaluates all ten conditions on all homogeneous basis tuples.
RepReport verify_representation(const HomLYSA& a, const RepTriple& r);

/// Early-exit variant.
struct RepQuickCheck {
  bool pass = true;
  std::optional<std::pair<RepCondition, std::vector<int>>> first_failure;
};
RepQuickCheck verify_representation_quick(const HomLYSA& a,
                                          const RepTriple& r);

/// Diagnostic for the first condition's stronger companion reading
/// beta . rho(x) = rho(alpha(x)) . beta (checked per basis vector; not part
/// of the pass/fail verdict).
struct Shr1AltDiagnostic {
  bool pass = true;
  std::optional<RepWitness> witness;
};
Shr1AltDiagnostic shr1_alternative_diagnostic(const HomLYSA& a,
                                              const RepTriple& r);

/// Combined-space basis layout for the semidirect sum: the algebra's even
/// vectors, the module's even vectors, the algebra's odd vectors, the
/// module's odd vectors.
struct SplitSpec {
  SuperSpace algebra_space;
  SuperSpace module_space;

  SuperSpace total() const;
  int algebra_index(int i) const;  // algebra basis index -> combined index
  int module_index(int a) const;   // module basis index -> combined index
};

/// The algebra structure on L (+) V induced by a representation candidate:
/// [x+u, y+v]     = [x,y] + rho(x)v - (-1)^{|x||y|} rho(y)u
/// {x+u,y+v,z+w} = {x,y,z} + D(x,y)w - (-1)^{|y||z|} theta(x,z)v
///                 + (-1)^{|x|(|y|+|z|)} theta(y,z)u
/// Valid (passes the axioms) exactly when r passes verify_representation.
HomLYSA semidirect_sum(const HomLYSA& a, const RepTriple& r);

/// Inverse of semidirect_sum for a compatible split: recovers (beta, rho, D,
/// theta) from the combined structure constants. Throws ValidationError with
/// a witness description when the split is incompatible (brackets leak out
/// of the required blocks or the module is not an abelian ideal).
RepTriple extract_rep(const HomLYSA& s, const SplitSpec& split);

}  // namespace hly
