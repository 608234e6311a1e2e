// Degree-(2,3) cochain complex: packing, the coboundary map, the four
// cocycle components, dimension computations, and coboundary solving.
// Dimension tables were frozen from an independent symbolic computation.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common/fixtures.hpp"

#include "hly/cohomology.hpp"
#include "hly/errors.hpp"

using namespace hly;

namespace {

void check_dims(const HomLYSA& a, int cochains, int cocycles,
                int coboundaries, int h, int one_cochains) {
  CohomologyDims d = h23_dims(a);
  CHECK(d.cochains == cochains);
  CHECK(d.cocycles == cocycles);
  CHECK(d.coboundaries == coboundaries);
  CHECK(d.h == h);
  CHECK(d.one_cochains == one_cochains);
}

}  // namespace

TEST_CASE("dimension tables match the frozen oracle") {
  check_dims(fx::a0(), 6, 4, 0, 4, 2);
  check_dims(fx::a1(), 6, 2, 1, 1, 2);
  check_dims(fx::a2(), 6, 2, 1, 1, 2);
  check_dims(fx::a3(), 2, 2, 1, 1, 2);
  check_dims(fx::a4(), 2, 2, 1, 1, 2);
  check_dims(fx::a5(), 6, 3, 3, 0, 4);
}

TEST_CASE("basis dimensions are consistent with the summary") {
  for (const HomLYSA& a :
       {fx::a0(), fx::a1(), fx::a2(), fx::a3(), fx::a4(), fx::a5()}) {
    CohomologyDims d = h23_dims(a);
    CHECK(cochain_basis(a).dim() == d.cochains);
    CHECK(z23_basis(a).dim() == d.cocycles);
    CHECK(b23_basis(a).dim() == d.coboundaries);
    CHECK(static_cast<int>(one_cochain_basis(a).size()) == d.one_cochains);
    CHECK(z23_basis(a).contains_subspace(b23_basis(a)));
  }
}

TEST_CASE("the coboundary of every degree-1 element is a cocycle") {
  for (const HomLYSA& a :
       {fx::a0(), fx::a1(), fx::a2(), fx::a3(), fx::a4(), fx::a5()}) {
    for (const GradedMap& phi : one_cochain_basis(a)) {
      CochainPair c = delta1(a, phi);
      CHECK(is_cochain(a, c).pass);
      CHECK(cocycle_residual(a, c).is_zero());
    }
  }
}

TEST_CASE("coboundary values match hand computations") {
  // phi = projection onto e0 over the binary fixture
  Mat p(2, 2);
  p.at(0, 0) = Scalar(1);
  CochainPair c = delta1(fx::a1(), GradedMap::endo(fx::sp11(), Parity::even, p));
  CHECK(c.f.at2(0, 1, 1) == Scalar(1));
  CHECK(c.f.at2(1, 0, 1) == Scalar(-1));
  CHECK(c.g.is_zero());

  // phi = the slot map e1 -> e0 over the ternary fixture
  Mat e01(2, 2);
  e01.at(0, 1) = Scalar(1);
  CochainPair d = delta1(fx::a5(), GradedMap::endo(fx::sp20(), Parity::even, e01));
  CHECK(d.f.is_zero());
  CHECK(d.g.at3(0, 1, 0, 0) == Scalar(1));
  CHECK(d.g.at3(0, 1, 1, 1) == Scalar(-1));
  CHECK(d.g.at3(1, 0, 0, 0) == Scalar(-1));
  CHECK(d.g.at3(1, 0, 1, 1) == Scalar(1));
}

TEST_CASE("the coboundary map validates its input") {
  Mat odd(2, 2);
  odd.at(1, 0) = Scalar(1);
  CHECK_THROWS_AS(delta1(fx::a1(), GradedMap::endo(fx::sp11(), Parity::odd, odd)),
                  ValidationError);

  // an even map that fails to commute with a non-scalar twist
  SuperSpace s{2, 0};
  Mat tw = Mat::identity(2);
  tw.at(1, 1) = Scalar(2);
  HomLYSA a = HomLYSA::make(s, MultiTensor::zero(s, 2), MultiTensor::zero(s, 3),
                            GradedMap::endo(s, Parity::even, tw));
  Mat e01(2, 2);
  e01.at(0, 1) = Scalar(1);
  CHECK_THROWS_AS(delta1(a, GradedMap::endo(s, Parity::even, e01)),
                  ValidationError);
}

TEST_CASE("cochain conditions are witnessed") {
  // break the super-skew requirement: f(e0, e1) = f(e1, e0) = e1
  SuperSpace s = fx::sp11();
  MultiTensor f = MultiTensor::zero(s, 2);
  f.set2(0, 1, 1, Scalar(1));
  f.set2(1, 0, 1, Scalar(1));
  CochainPair c{f, MultiTensor::zero(s, 3)};
  CochainCheck chk = is_cochain(fx::a1(), c);
  CHECK_FALSE(chk.pass);
  CHECK_FALSE(chk.condition.empty());
  CHECK_FALSE(chk.tuple.empty());

  // the skew fixture pair passes both readings
  CochainPair good{fx::b2_a1(s), MultiTensor::zero(s, 3)};
  CHECK(is_cochain(fx::a1(), good).pass);
  CHECK(even_alternation_diagnostic(fx::a1(), good).pass);
}

TEST_CASE("packed coordinates round-trip") {
  CochainIndex idx(fx::sp11());
  CHECK(idx.size() == idx.f_coords() + idx.g_coords());
  CochainPair c{fx::b2_a1(fx::sp11()), MultiTensor::zero(fx::sp11(), 3)};
  Vec packed = idx.pack(c);
  CHECK(static_cast<int>(packed.size()) == idx.size());
  CHECK(idx.unpack(packed) == c);

  CochainPair sum = add_cochain(c, scale_cochain(Scalar(-1), c));
  CHECK(is_zero_cochain(sum));
  CHECK(is_zero_cochain(zero_cochain(fx::sp11())));
}

TEST_CASE("cocycle components evaluate per tuple") {
  const int arities[] = {3, 4, 4, 5};
  for (int i = 0; i < cocycle_eq_count; ++i) {
    auto e = static_cast<CocycleEq>(i);
    CHECK(cocycle_eq_arity(e) == arities[i]);
  }
  CHECK(cocycle_eq_name(CocycleEq::e1) == "E1");
  CHECK(cocycle_eq_name(CocycleEq::e4) == "E4");

  // g({1,1,1}) = e1 fails the trilinear component on the binary fixture:
  // the signed cyclic sum at (1, 1, 1) is -3 g(1,1,1)
  SuperSpace s = fx::sp11();
  MultiTensor g = MultiTensor::zero(s, 3);
  g.set3(1, 1, 1, 1, Scalar(1));
  CochainPair c{MultiTensor::zero(s, 2), g};
  CocycleResidual r = cocycle_residual(fx::a1(), c);
  CHECK_FALSE(r.is_zero());
  auto first = r.first_violation();
  REQUIRE(first.has_value());
  CHECK(first->first == CocycleEq::e1);
  CHECK(first->second == std::vector<int>{1, 1, 1});
  Vec res = cocycle_eq_residual(fx::a1(), c, first->first, first->second);
  CHECK(res == Vec{Scalar(0), Scalar(-3)});
}

TEST_CASE("coboundary solving recovers a preimage") {
  Mat e01(2, 2);
  e01.at(0, 1) = Scalar(1);
  CochainPair c =
      delta1(fx::a5(), GradedMap::endo(fx::sp20(), Parity::even, e01));
  auto phi = solve_coboundary(fx::a5(), c);
  REQUIRE(phi.has_value());
  CHECK(delta1(fx::a5(), *phi) == c);

  // a cocycle that is not a coboundary has no preimage
  CochainPair z{fx::b2_a1(fx::sp11()), MultiTensor::zero(fx::sp11(), 3)};
  CHECK(cocycle_residual(fx::a0(), z).is_zero());
  CHECK_FALSE(solve_coboundary(fx::a0(), z).has_value());
}
