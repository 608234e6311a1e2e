// Module conditions, the combined-space construction, and their exact
// agreement: a candidate triple satisfies the ten conditions precisely when
// the combined space satisfies the eight algebra identities.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "common/fixtures.hpp"

#include "hly/errors.hpp"
#include "hly/representation.hpp"

using namespace hly;

TEST_CASE("condition names and arities") {
  CHECK(rep_condition_name(RepCondition::shr1) == "SHR1");
  CHECK(rep_condition_name(RepCondition::shr10) == "SHR10");
  const int arities[] = {1, 2, 2, 2, 3, 3, 3, 3, 4, 4};
  for (int i = 0; i < rep_condition_count; ++i)
    CHECK(rep_condition_arity(static_cast<RepCondition>(i)) == arities[i]);
}

TEST_CASE("the valid fixture representation passes every condition") {
  RepReport rep = verify_representation(fx::a1(), fx::rep_a1_valid());
  CHECK(rep.all_pass());
  CHECK(verify_representation_quick(fx::a1(), fx::rep_a1_valid()).pass);
}

TEST_CASE("zero representations pass on every fixture algebra") {
  for (const HomLYSA& a :
       {fx::a0(), fx::a1(), fx::a2(), fx::a3(), fx::a4(), fx::a5()}) {
    RepTriple z = RepTriple::zero(a.space(), SuperSpace{1, 0});
    CHECK(verify_representation(a, z).all_pass());
  }
}

TEST_CASE("the mutant representation fails exactly the fourth condition") {
  RepReport rep = verify_representation(fx::a1(), fx::rep_a1_mutant());
  for (int i = 0; i < rep_condition_count; ++i) {
    auto c = static_cast<RepCondition>(i);
    INFO("condition ", rep_condition_name(c));
    CHECK(rep[c].pass == (c != RepCondition::shr4));
  }
  const RepStatus& st = rep[RepCondition::shr4];
  CHECK(st.violations == 2);
  REQUIRE(st.witness.has_value());
  CHECK(st.witness->tuple == std::vector<int>{0, 1});
  // the witness reproduces under the single-tuple evaluator
  Mat res = rep_condition_residual(fx::a1(), fx::rep_a1_mutant(),
                                   RepCondition::shr4, st.witness->tuple);
  CHECK(res == st.witness->residual);
  CHECK_FALSE(res.is_zero_mat());
}

TEST_CASE("combined-space layout") {
  SplitSpec split{fx::sp11(), fx::sp11()};
  SuperSpace t = split.total();
  CHECK(t.even_dim == 2);
  CHECK(t.odd_dim == 2);
  // algebra evens, module evens, algebra odds, module odds
  CHECK(split.algebra_index(0) == 0);
  CHECK(split.module_index(0) == 1);
  CHECK(split.algebra_index(1) == 2);
  CHECK(split.module_index(1) == 3);
}

TEST_CASE("combined space of the valid fixture satisfies the identities") {
  HomLYSA s = semidirect_sum(fx::a1(), fx::rep_a1_valid());
  CHECK(s.dim() == 4);
  CHECK(verify_axioms(s).all_pass());

  // the action is readable in the combined bracket: [e0, v0] = rho(e0) v0
  SplitSpec split{fx::sp11(), fx::sp11()};
  Vec out = s.eval2(basis_vec(4, split.algebra_index(0)),
                    basis_vec(4, split.module_index(0)));
  CHECK(out[split.module_index(0)] == Scalar(1));
}

TEST_CASE("combined space of the mutant fails exactly the cyclic identity") {
  HomLYSA s = semidirect_sum(fx::a1(), fx::rep_a1_mutant());
  AxiomReport rep = verify_axioms(s);
  for (int i = 0; i < axiom_count; ++i) {
    auto ax = static_cast<Axiom>(i);
    INFO("axiom ", axiom_name(ax));
    CHECK(rep[ax].pass == (ax != Axiom::shly5));
  }
}

TEST_CASE("extraction inverts the combined-space construction") {
  SplitSpec split{fx::sp11(), fx::sp11()};
  for (const RepTriple& r : {fx::rep_a1_valid(), fx::rep_a1_mutant()}) {
    // extraction is structural, so it inverts the construction even for
    // candidates that fail the conditions
    RepTriple back = extract_rep(semidirect_sum(fx::a1(), r), split);
    CHECK(back == r);
  }
}

TEST_CASE("extraction rejects an incompatible split") {
  // a5 restricted to the split {e0} + {e1} leaks {e0, e1, e1} = e0 out of
  // the module blocks
  SplitSpec split{SuperSpace{1, 0}, SuperSpace{1, 0}};
  CHECK_THROWS_AS(extract_rep(fx::a5(), split), ValidationError);
}

TEST_CASE("companion twist-intertwining diagnostic") {
  CHECK(shr1_alternative_diagnostic(fx::a1(), fx::rep_a1_valid()).pass);
  CHECK(shr1_alternative_diagnostic(fx::a3(), RepTriple::zero(fx::sp11(),
                                                              SuperSpace{1, 1}))
            .pass);
}

TEST_CASE("random candidates agree with the combined-space verdict") {
  fx::TestRng rng(2024);
  int checked = 0;
  int valid = 0;
  for (const HomLYSA& a : {fx::a0(), fx::a1(), fx::a3()}) {
    for (int s = 0; s < 12; ++s) {
      RepTriple r = fx::random_rep_candidate(a, SuperSpace{1, 1}, rng);
      bool rep_ok = verify_representation(a, r).all_pass();
      bool sum_ok = verify_axioms(semidirect_sum(a, r)).all_pass();
      CHECK(rep_ok == sum_ok);
      ++checked;
      if (rep_ok) {
        ++valid;
        SplitSpec split{a.space(), SuperSpace{1, 1}};
        CHECK(extract_rep(semidirect_sum(a, r), split) == r);
      }
    }
  }
  CHECK(checked == 36);
  // `valid` counts how many random draws were genuine module structures;
  // agreement above must hold whether or not any draw is valid, and the
  // curated fixtures cover the valid side deterministically.
  CHECK(valid >= 0);
}

TEST_CASE("construction validates shapes") {
  // rho of an even basis vector must be even: build an odd matrix for e0
  SuperSpace l = fx::sp11();
  SuperSpace v = fx::sp11();
  Mat odd(2, 2);
  odd.at(1, 0) = Scalar(1);
  std::vector<GradedMap> rho{GradedMap::endo(v, Parity::odd, odd),
                             GradedMap::zero(v, v, Parity::odd)};
  std::vector<GradedMap> dm, th;
  for (int i = 0; i < 4; ++i) {
    dm.push_back(GradedMap::zero(v, v, Parity::even));
    th.push_back(GradedMap::zero(v, v, Parity::even));
  }
  CHECK_THROWS_AS(RepTriple::make(l, v, GradedMap::identity(v), rho, dm, th),
                  ValidationError);
}
