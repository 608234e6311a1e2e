#pragma once

#include "hly/graded_map.hpp"
#include "hly/multi_tensor.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hly {

/// Finite-dimensional algebra with a graded binary bracket, a graded ternary
/// bracket, and an even twist endomorphism, all over exact rationals. The
/// structural invariants (shapes, parity patterns, evenness of the twist) are
/// constructor-enforced; the defining identities SHLY1..SHLY8 are certified
/// separately by verify_axioms().
class HomLYSA {
 public:
  HomLYSA() = default;

  static HomLYSA make(SuperSpace space, MultiTensor bracket2,
                      MultiTensor bracket3, GradedMap alpha);

  /// Abelian algebra with identity twist (both brackets zero).
  static HomLYSA abelian(SuperSpace space);

  const SuperSpace& space() const { return space_; }
  const MultiTensor& bracket2() const { return bracket2_; }
  const MultiTensor& bracket3() const { return bracket3_; }
  const GradedMap& alpha() const { return alpha_; }

  int dim() const { return space_.dim(); }

  Vec eval2(const Vec& x, const Vec& y) const { return bracket2_.eval2(x, y); }
  Vec eval3(const Vec& x, const Vec& y, const Vec& z) const {
    return bracket3_.eval3(x, y, z);
  }

  bool operator==(const HomLYSA&) const = default;

 private:
  SuperSpace space_;
  MultiTensor bracket2_;
  MultiTensor bracket3_;
  GradedMap alpha_;
};

/// The eight defining identities, in the order they are checked.
enum class Axiom {
  shly1,  // twist respects the binary bracket
  shly2,  // twist respects the ternary bracket
  shly3,  // binary bracket is super-skew
  shly4,  // ternary bracket is super-skew in its leading pair
  shly5,  // signed cyclic identity coupling both brackets
  shly6,  // signed cyclic identity for bracketed ternary arguments
  shly7,  // ternary action is a twisted derivation of the binary bracket
  shly8,  // ternary action is a twisted derivation of the ternary bracket
};

constexpr int axiom_count = 8;
std::string axiom_name(Axiom a);
/// Number of bound variables in each identity (2, 3, 2, 3, 3, 4, 4, 5).
int axiom_arity(Axiom a);

struct AxiomWitness {
  std::vector<int> tuple;  // first violating basis tuple, lexicographic
  Vec residual;
};

struct AxiomStatus {
  bool pass = true;
  long violations = 0;
  std::optional<AxiomWitness> witness;
};

struct AxiomReport {
  std::array<AxiomStatus, axiom_count> status;

  const AxiomStatus& operator[](Axiom a) const {
    return status[static_cast<size_t>(a)];
  }
  bool all_pass() const {
    for (const auto& s : status)
      if (!s.pass) return false;
    return true;
  }
};

/// Evaluates every axiom residual on every homogeneous basis tuple,
/// recording the first violating tuple and a violation count per axiom.
AxiomReport verify_axioms(const HomLYSA& a);

/// Early-exit variant: stops at the first violating (axiom, tuple).
struct QuickCheck {
  bool pass = true;
  std::optional<std::pair<Axiom, std::vector<int>>> first_failure;
};
QuickCheck verify_axioms_quick(const HomLYSA& a);

/// Residual of one axiom on one basis tuple (tuple size = axiom_arity).
Vec axiom_residual(const HomLYSA& a, Axiom ax, std::span<const int> tuple);

/// Structure flags: identity twist, vanishing binary bracket, vanishing
/// ternary bracket.
struct DegenerateTags {
  bool untwisted = false;
  bool supertriple = false;  // binary bracket is identically zero
  bool hom_lie = false;      // ternary bracket is identically zero
};
DegenerateTags classify_degenerate(const HomLYSA& a);

/// Wraps binary-only data as an algebra with zero ternary bracket.
HomLYSA embed_hom_lie_super(SuperSpace space, MultiTensor bracket2,
                            GradedMap alpha);

/// Builds the candidate ternary bracket {x,y,z} := [[x,y], alpha(z)] on top
/// of the given binary data and verifies the result.
struct CandidateResult {
  std::optional<HomLYSA> algebra;  // present iff the report passes
  AxiomReport report;
};
CandidateResult candidate_from_binary(SuperSpace space, MultiTensor bracket2,
                                      GradedMap alpha);

/// Checks that an even map intertwines the twists and both brackets.
struct MorphismCheck {
  bool ok = true;
  std::string condition;   // which requirement failed
  std::vector<int> tuple;  // witness tuple (empty for the twist condition)
};
MorphismCheck is_morphism(const GradedMap& phi, const HomLYSA& a,
                          const HomLYSA& b);

}  // namespace hly
