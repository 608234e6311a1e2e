// Shared hand-built fixtures: small algebras with known verification
// outcomes, engineered single-identity mutants, representation triples,
// and a deterministic cross-platform random source for property tests.
#pragma once

#include "hly/algebra.hpp"
#include "hly/deformation.hpp"
#include "hly/representation.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace fx {

using namespace hly;

inline SuperSpace sp11() { return SuperSpace{1, 1}; }
inline SuperSpace sp20() { return SuperSpace{2, 0}; }

inline MultiTensor b2_a1(const SuperSpace& s) {
  MultiTensor t = MultiTensor::zero(s, 2);
  t.set2(0, 1, 1, Scalar(1));
  t.set2(1, 0, 1, Scalar(-1));
  return t;
}

inline MultiTensor b3_a2(const SuperSpace& s) {
  MultiTensor t = MultiTensor::zero(s, 3);
  t.set3(0, 1, 0, 1, Scalar(-1));
  t.set3(1, 0, 0, 1, Scalar(1));
  return t;
}

inline GradedMap alpha_diag12(const SuperSpace& s) {
  Mat m = Mat::identity(2);
  m.at(1, 1) = Scalar(2);
  return GradedMap::endo(s, Parity::even, std::move(m));
}

/// (1|1), both brackets zero, identity twist.
inline HomLYSA a0() { return HomLYSA::abelian(sp11()); }

/// (1|1), [e0,e1] = e1 = -[e1,e0], ternary zero, identity twist.
inline HomLYSA a1() {
  SuperSpace s = sp11();
  return HomLYSA::make(s, b2_a1(s), MultiTensor::zero(s, 3),
                       GradedMap::identity(s));
}

/// a1 plus {e0,e1,e0} = -e1, {e1,e0,e0} = e1.
inline HomLYSA a2() {
  SuperSpace s = sp11();
  return HomLYSA::make(s, b2_a1(s), b3_a2(s), GradedMap::identity(s));
}

/// a1's binary bracket with twist diag(1, 2).
inline HomLYSA a3() {
  SuperSpace s = sp11();
  return HomLYSA::make(s, b2_a1(s), MultiTensor::zero(s, 3), alpha_diag12(s));
}

/// a3 plus a2's ternary bracket.
inline HomLYSA a4() {
  SuperSpace s = sp11();
  return HomLYSA::make(s, b2_a1(s), b3_a2(s), alpha_diag12(s));
}

/// (2|0), binary zero, ternary action of the pair (e0,e1) is the
/// 90-degree rotation, identity twist.
inline HomLYSA a5() {
  SuperSpace s = sp20();
  MultiTensor t = MultiTensor::zero(s, 3);
  t.set3(0, 1, 0, 1, Scalar(-1));
  t.set3(0, 1, 1, 0, Scalar(1));
  t.set3(1, 0, 0, 1, Scalar(1));
  t.set3(1, 0, 1, 0, Scalar(-1));
  return HomLYSA::make(s, MultiTensor::zero(s, 2), t,
                       GradedMap::identity(s));
}

/// (1|1), twist zero (non-surjective); exercises skipped tower claims.
inline HomLYSA a_zero_twist() {
  SuperSpace s = sp11();
  return HomLYSA::make(s, MultiTensor::zero(s, 2), MultiTensor::zero(s, 3),
                       GradedMap::zero(s, s, Parity::even));
}

// -------------------------------------------------------------- mutants --
// Each breaks a known subset of the defining identities; the expected
// fail sets below were frozen from an independent symbolic expansion
// before this library was built.

/// Fails shly3 (first witness (0,1)) and shly5.
inline HomLYSA m3() {
  SuperSpace s = sp11();
  MultiTensor t = MultiTensor::zero(s, 2);
  t.set2(0, 1, 1, Scalar(1));
  t.set2(1, 0, 1, Scalar(1));
  return HomLYSA::make(s, t, MultiTensor::zero(s, 3),
                       GradedMap::identity(s));
}

/// Fails shly4 (first witness (0,1,0)), shly5, shly8.
inline HomLYSA m4() {
  SuperSpace s = sp11();
  MultiTensor t = MultiTensor::zero(s, 3);
  t.set3(0, 1, 0, 1, Scalar(-1));
  t.set3(1, 0, 0, 1, Scalar(-1));
  return HomLYSA::make(s, b2_a1(s), t, GradedMap::identity(s));
}

/// Fails shly5 (first witness (0,1,1)), shly7, shly8.
inline HomLYSA m5() {
  SuperSpace s = sp11();
  MultiTensor t = MultiTensor::zero(s, 3);
  t.set3(0, 1, 1, 0, Scalar(1));
  t.set3(1, 0, 1, 0, Scalar(-1));
  return HomLYSA::make(s, b2_a1(s), t, GradedMap::identity(s));
}

/// Fails shly5, shly6 (first witness (0,1,1,0)), shly7, shly8.
inline HomLYSA m6() {
  SuperSpace s = sp11();
  MultiTensor t = b3_a2(s);
  t.set3(1, 1, 0, 0, Scalar(1));
  return HomLYSA::make(s, b2_a1(s), t, GradedMap::identity(s));
}

/// Fails shly5, shly6, shly7 (first witness (0,1,0,1)).
inline HomLYSA m7() {
  SuperSpace s = sp11();
  MultiTensor t = b2_a1(s);
  t.set2(1, 1, 0, Scalar(1));
  return HomLYSA::make(s, t, b3_a2(s), GradedMap::identity(s));
}

/// (2|0) with the ternary action of (e0,e1) equal to the identity map;
/// fails shly8 alone (first witness (0,1,0,1,0)).
inline HomLYSA m8() {
  SuperSpace s = sp20();
  MultiTensor t = MultiTensor::zero(s, 3);
  t.set3(0, 1, 0, 0, Scalar(1));
  t.set3(1, 0, 0, 0, Scalar(-1));
  t.set3(0, 1, 1, 1, Scalar(1));
  t.set3(1, 0, 1, 1, Scalar(-1));
  return HomLYSA::make(s, MultiTensor::zero(s, 2), t,
                       GradedMap::identity(s));
}

// ------------------------------------------------------ representations --

/// On a1, V = (1|1): beta = id, rho(e0) = id, rho(e1) = 0, D = theta = 0.
/// Passes all ten conditions.
inline RepTriple rep_a1_valid() {
  SuperSpace l = sp11();
  SuperSpace v = sp11();
  Mat r0 = Mat::identity(2);
  std::vector<GradedMap> rho{GradedMap::endo(v, Parity::even, std::move(r0)),
                             GradedMap::zero(v, v, Parity::odd)};
  std::vector<GradedMap> dm, th;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Parity p = l.parity(i) + l.parity(j);
      dm.push_back(GradedMap::zero(v, v, p));
      th.push_back(GradedMap::zero(v, v, p));
    }
  return RepTriple::make(l, v, GradedMap::identity(v), std::move(rho),
                         std::move(dm), std::move(th));
}

/// rep_a1_valid with rho(e1) v0 = v1 added; fails exactly shr4.
inline RepTriple rep_a1_mutant() {
  SuperSpace l = sp11();
  SuperSpace v = sp11();
  Mat r0 = Mat::identity(2);
  Mat r1(2, 2);
  r1.at(1, 0) = Scalar(1);
  std::vector<GradedMap> rho{GradedMap::endo(v, Parity::even, std::move(r0)),
                             GradedMap::endo(v, Parity::odd, std::move(r1))};
  std::vector<GradedMap> dm, th;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Parity p = l.parity(i) + l.parity(j);
      dm.push_back(GradedMap::zero(v, v, p));
      th.push_back(GradedMap::zero(v, v, p));
    }
  return RepTriple::make(l, v, GradedMap::identity(v), std::move(rho),
                         std::move(dm), std::move(th));
}

// ----------------------------------------------------------- deformation --

/// Order-3 deformation of a0 whose order-1 binary coefficient is a1's
/// bracket: passes verification, obstructed at order 1.
inline Deformation deform_a0_obstructed() {
  HomLYSA base = a0();
  SuperSpace s = base.space();
  std::vector<MultiTensor> f{b2_a1(s), MultiTensor::zero(s, 2),
                             MultiTensor::zero(s, 2)};
  std::vector<MultiTensor> g{MultiTensor::zero(s, 3), MultiTensor::zero(s, 3),
                             MultiTensor::zero(s, 3)};
  return Deformation::make(base, 3, std::move(f), std::move(g));
}

// ------------------------------------------------------------ randomness --

/// Deterministic draws built from raw 64-bit outputs (no distribution
/// objects), so every platform produces the same stream for a seed.
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform integer in [lo, hi].
  int range(int lo, int hi) {
    return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  /// Zero two times out of three, otherwise uniform in [-2, 2].
  Scalar sparse_entry() {
    if (gen_() % 3 != 0) return Scalar(0);
    return Scalar(range(-2, 2));
  }

  /// Random matrix of a homogeneous endomorphism of the given parity.
  Mat graded_mat(const SuperSpace& space, Parity p) {
    Mat m(space.dim(), space.dim());
    for (int r = 0; r < space.dim(); ++r)
      for (int c = 0; c < space.dim(); ++c)
        if (space.parity(r) == space.parity(c) + p) m.at(r, c) = sparse_entry();
    return m;
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

/// Random representation candidate of `a` on a module of the given shape.
inline RepTriple random_rep_candidate(const HomLYSA& a, const SuperSpace& v,
                                      TestRng& rng) {
  const SuperSpace& l = a.space();
  GradedMap beta =
      GradedMap::endo(v, Parity::even, rng.graded_mat(v, Parity::even));
  std::vector<GradedMap> rho, dm, th;
  for (int i = 0; i < l.dim(); ++i)
    rho.push_back(
        GradedMap::endo(v, l.parity(i), rng.graded_mat(v, l.parity(i))));
  for (int i = 0; i < l.dim(); ++i)
    for (int j = 0; j < l.dim(); ++j) {
      Parity p = l.parity(i) + l.parity(j);
      dm.push_back(GradedMap::endo(v, p, rng.graded_mat(v, p)));
      th.push_back(GradedMap::endo(v, p, rng.graded_mat(v, p)));
    }
  return RepTriple::make(l, v, std::move(beta), std::move(rho), std::move(dm),
                         std::move(th));
}

/// Random truncated isomorphism of the base space: identity at order 0,
/// random even twist-commuting coefficients above. Valid for the fixture
/// algebras because their even endomorphisms all commute with the fixture
/// twists.
inline FormalIso random_iso(const HomLYSA& a, int order, TestRng& rng) {
  std::vector<GradedMap> phi;
  for (int n = 1; n <= order; ++n) {
    Mat m = rng.graded_mat(a.space(), Parity::even);
    phi.push_back(GradedMap::endo(a.space(), Parity::even, std::move(m)));
  }
  return FormalIso::make(a.alpha(), order, std::move(phi));
}

}  // namespace fx
