#pragma once

#include "hly/algebra.hpp"
#include "hly/endo_index.hpp"
#include "hly/linear.hpp"

#include <string>
#include <vector>

namespace hly {

/// The six operator families solved for, all twisted by a power of the
/// algebra's twist map and required to commute with it:
///   der        — Leibniz rule against both brackets
///   gder       — Leibniz-shaped rules with independent partner maps
///                (three witnesses: binary partner, shared middle map,
///                ternary output)
///   qder       — the defining map in every argument slot, with separate
///                binary and ternary output maps (two witnesses)
///   centroid   — sliding chains equal to the image of the bracket
///   qcentroid  — sliding chains only (no bracket-image clause)
///   zder       — bracket outputs and bracket images all vanish
enum class Family { der, gder, qder, centroid, qcentroid, zder };
constexpr int family_count = 6;
std::string family_name(Family f);
/// Partner maps carried per basis element: gder 3, qder 2, others 0.
int family_witness_count(Family f);

struct FamilyElement {
  GradedMap map;
  std::vector<GradedMap> witnesses;
};

struct OperatorFamilyBasis {
  Family family = Family::der;
  int k = 0;
  Parity parity = Parity::even;
  std::vector<FamilyElement> basis;

  int dim() const { return static_cast<int>(basis.size()); }
};

/// Exact basis of the parity-s family at twist power k. For gder/qder the
/// returned maps are the projection of the joint solution space onto the
/// defining-map block; each carries one deterministic witness tuple (the
/// solution with every free coordinate pinned to zero).
OperatorFamilyBasis family_basis(const HomLYSA& a, Family f, int k,
                                 Parity s);

/// Solver-independent re-substitution of one element (with witnesses) into
/// its family's defining equations on all basis tuples, plus the
/// twist-commutation requirement on every carried map.
struct FamilyCheck {
  bool ok = true;
  std::string condition;   // which requirement failed; empty when ok
  std::vector<int> tuple;  // witness basis tuple (empty for commutation)
};
FamilyCheck verify_family_element(const HomLYSA& a, Family f, int k,
                                  const FamilyElement& e);

/// Annihilator subspace options. The default requires [x, y] = 0,
/// {x, y, z} = 0, and {y, z, x} = 0 for all basis y, z (first- and
/// third-slot ternary vanishing; second-slot follows from the leading-pair
/// skew axiom). The diagnostic reading keeps only first-slot ternary
/// vanishing.
struct CenterOptions {
  bool ternary_first_slot_only = false;
};
SubspaceBasis center(const HomLYSA& a, const CenterOptions& opts = {});

/// One verified closure/inclusion claim about the computed families.
struct TowerClaim {
  std::string name;
  bool skipped = false;  // hypothesis unavailable (e.g. twist not surjective)
  bool pass = true;
  std::string detail;  // violation or skip reason; empty otherwise
};

struct TowerReport {
  int kmax = 0;
  std::vector<TowerClaim> claims;
  std::vector<std::string> notes;  // implemented equation readings
  bool all_pass() const {
    for (const auto& c : claims)
      if (!c.skipped && !c.pass) return false;
    return true;
  }
};

/// Computes every family for twist powers 0..kmax (both parities) and
/// verifies the closure and inclusion claims between them: bracket-closure
/// of derivations across twist powers, the ideal/module properties of the
/// smaller families, the inclusion chain zder <= der <= qder <= gder, the
/// centroid chain centroid <= qcentroid, the subalgebra generated by the
/// quasicentroid, and centrality of centroid-quasicentroid brackets when
/// the twist is surjective.
TowerReport check_tower(const HomLYSA& a, int kmax);

}  // namespace hly
