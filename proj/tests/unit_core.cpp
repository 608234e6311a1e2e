// Exact-arithmetic foundations: scalars, parities, graded spaces, matrices,
// graded maps, structure tensors, and the linear solver.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hly/endo_index.hpp"
#include "hly/errors.hpp"
#include "hly/linear.hpp"
#include "hly/multi_tensor.hpp"

#include <array>
#include <vector>

using namespace hly;

TEST_CASE("scalar parsing and canonical formatting") {
  CHECK(parse_scalar("3") == Scalar(3));
  CHECK(parse_scalar("-3") == Scalar(-3));
  CHECK(parse_scalar("2/4") == Scalar(1) / 2);
  CHECK(parse_scalar("-6/4") == Scalar(-3) / 2);
  CHECK(format_scalar(Scalar(5)) == "5");
  CHECK(format_scalar(Scalar(-1) / 2) == "-1/2");
  CHECK(format_scalar(Scalar(0)) == "0");
  CHECK(parse_scalar(format_scalar(Scalar(22) / 7)) == Scalar(22) / 7);

  CHECK_THROWS_AS(parse_scalar(""), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("0.5"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1 / 2"), ParseError);
  CHECK_THROWS_AS(parse_scalar("a"), ParseError);
}

TEST_CASE("parity arithmetic") {
  CHECK(Parity::even + Parity::even == Parity::even);
  CHECK(Parity::even + Parity::odd == Parity::odd);
  CHECK(Parity::odd + Parity::odd == Parity::even);
  CHECK(bit(Parity::even) == 0);
  CHECK(bit(Parity::odd) == 1);
  CHECK(parity_sign(0) == 1);
  CHECK(parity_sign(3) == -1);
}

TEST_CASE("graded space indexing") {
  SuperSpace s{2, 1};
  CHECK(s.dim() == 3);
  CHECK(s.parity(0) == Parity::even);
  CHECK(s.parity(1) == Parity::even);
  CHECK(s.parity(2) == Parity::odd);
  CHECK_THROWS_AS(s.parity(3), ValidationError);
  CHECK_THROWS_AS(s.parity(-1), ValidationError);
}

TEST_CASE("tuple odometer visits lexicographically") {
  std::array<int, 2> t{0, 0};
  std::vector<std::array<int, 2>> seen;
  do {
    seen.push_back(t);
  } while (advance_tuple(t, 2));
  CHECK(seen == std::vector<std::array<int, 2>>{
                    {0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("matrix basics") {
  Mat m(2, 2);
  CHECK(m.is_zero_mat());
  m.at(0, 1) = Scalar(3);
  Vec x = basis_vec(2, 1);
  Vec y = m.apply(x);
  CHECK(y[0] == Scalar(3));
  CHECK(y[1] == Scalar(0));
  CHECK(Mat::identity(2).is_identity());

  Vec v = zero_vec(2);
  axpy(v, Scalar(2), basis_vec(2, 0));
  CHECK(v[0] == Scalar(2));
  CHECK(is_zero_vec(zero_vec(3)));
}

TEST_CASE("graded maps enforce their parity pattern") {
  SuperSpace s{1, 1};
  Mat bad(2, 2);
  bad.at(1, 0) = Scalar(1);  // odd slot in an even map
  CHECK_THROWS_AS(GradedMap::endo(s, Parity::even, bad), ValidationError);
  Mat good(2, 2);
  good.at(1, 0) = Scalar(1);
  GradedMap odd = GradedMap::endo(s, Parity::odd, good);
  CHECK(odd.parity() == Parity::odd);

  GradedMap id = GradedMap::identity(s);
  CHECK(id.is_identity());
  CHECK(odd.compose(odd).parity() == Parity::even);
  CHECK(id.commutes_with(odd));
}

TEST_CASE("super-commutator of two odd maps is an anticommutator") {
  SuperSpace s{1, 1};
  Mat e01(2, 2), e10(2, 2);
  e01.at(0, 1) = Scalar(1);
  e10.at(1, 0) = Scalar(1);
  GradedMap a = GradedMap::endo(s, Parity::odd, e01);
  GradedMap b = GradedMap::endo(s, Parity::odd, e10);
  GradedMap c = super_commutator(a, b);
  CHECK(c.parity() == Parity::even);
  // a b + b a = identity for these two slots
  CHECK(c.mat().is_identity());
  // super-symmetry: [a, b] = +[b, a] when both maps are odd
  CHECK(super_commutator(b, a) == c);
}

TEST_CASE("endomorphism power") {
  SuperSpace s{1, 1};
  Mat d(2, 2);
  d.at(0, 0) = Scalar(1);
  d.at(1, 1) = Scalar(2);
  GradedMap a = GradedMap::endo(s, Parity::even, d);
  CHECK(a.pow(0).is_identity());
  CHECK(a.pow(3).mat().at(1, 1) == Scalar(8));
}

TEST_CASE("structure tensors enforce the output parity pattern") {
  SuperSpace s{1, 1};
  MultiTensor t = MultiTensor::zero(s, 2);
  CHECK_THROWS_AS(t.set2(0, 0, 1, Scalar(1)), ValidationError);  // even pair, odd out
  t.set2(0, 0, 1, Scalar(0));  // writing an explicit zero there is allowed
  t.set2(0, 1, 1, Scalar(1));
  CHECK(t.at2(0, 1, 1) == Scalar(1));
  CHECK_FALSE(t.is_zero());
  auto fn = t.first_nonzero();
  REQUIRE(fn.has_value());
  CHECK(fn->first == std::vector<int>{0, 1});
  CHECK(fn->second == 1);
}

TEST_CASE("tensor evaluation is multilinear") {
  SuperSpace s{1, 1};
  MultiTensor t = MultiTensor::zero(s, 2);
  t.set2(0, 1, 1, Scalar(1));
  t.set2(1, 0, 1, Scalar(-1));
  Vec x = basis_vec(2, 0);
  axpy(x, Scalar(2), basis_vec(2, 1));  // x = e0 + 2 e1
  Vec out = t.eval2(x, basis_vec(2, 1));
  CHECK(out[1] == Scalar(1));  // only the e0-component of x acts
  Vec swapped = t.eval2(basis_vec(2, 1), x);
  CHECK(swapped[1] == Scalar(-1));
}

TEST_CASE("for_each walks every slot in lexicographic order") {
  SuperSpace s{1, 1};
  MultiTensor t = MultiTensor::zero(s, 2);
  t.set2(1, 0, 1, Scalar(5));
  std::vector<std::vector<int>> order;
  int nonzero = 0;
  t.for_each([&](std::span<const int> idx, int m, const Scalar& v) {
    std::vector<int> key(idx.begin(), idx.end());
    key.push_back(m);
    order.push_back(key);
    if (v != 0) ++nonzero;
  });
  CHECK(nonzero == 1);
  REQUIRE(order.size() > 1);
  for (size_t i = 1; i < order.size(); ++i) CHECK(order[i - 1] < order[i]);
}

TEST_CASE("subspace bases canonicalize generators") {
  Vec v1 = basis_vec(3, 0);
  Vec v2 = basis_vec(3, 0);
  axpy(v2, Scalar(1), basis_vec(3, 1));
  SubspaceBasis b = SubspaceBasis::from_generators(3, {v1, v2, v1, zero_vec(3)});
  CHECK(b.dim() == 2);
  CHECK(b.contains(basis_vec(3, 1)));
  CHECK_FALSE(b.contains(basis_vec(3, 2)));

  SubspaceBasis full = SubspaceBasis::full_space(3);
  CHECK(full.dim() == 3);
  CHECK(full.contains_subspace(b));
  CHECK(full.quotient_dim(b) == 1);
  CHECK_THROWS_AS(b.quotient_dim(full), ValidationError);
}

TEST_CASE("sum and intersection of subspaces") {
  SubspaceBasis x = SubspaceBasis::from_generators(
      3, {basis_vec(3, 0), basis_vec(3, 1)});
  SubspaceBasis y = SubspaceBasis::from_generators(
      3, {basis_vec(3, 1), basis_vec(3, 2)});
  CHECK(x.sum(y).dim() == 3);
  SubspaceBasis meet = x.intersect(y);
  CHECK(meet.dim() == 1);
  CHECK(meet.contains(basis_vec(3, 1)));
}

TEST_CASE("linear systems solve exactly") {
  // x + y = 3, x - y = 1  =>  x = 2, y = 1
  LinearSystem sys(2);
  sys.add(Vec{Scalar(1), Scalar(1)}, Scalar(3));
  sys.add(Vec{Scalar(1), Scalar(-1)}, Scalar(1));
  SolveResult r = solve(sys);
  REQUIRE(r.consistent);
  CHECK(r.particular == Vec{Scalar(2), Scalar(1)});
  CHECK(r.kernel.dim() == 0);

  LinearSystem bad(1);
  bad.add(Vec{Scalar(0)}, Scalar(1));
  CHECK_FALSE(solve(bad).consistent);
}

TEST_CASE("pins fix one unknown") {
  LinearSystem sys(2);
  sys.add(Vec{Scalar(1), Scalar(-1)}, Scalar(0));  // x = y
  sys.add_pin(1, Scalar(7));
  SolveResult r = solve(sys);
  REQUIRE(r.consistent);
  CHECK(r.particular == Vec{Scalar(7), Scalar(7)});
}

TEST_CASE("nullspace dimension and membership") {
  // one equation x + y + z = 0 in three unknowns
  LinearSystem sys(3);
  sys.add(Vec{Scalar(1), Scalar(1), Scalar(1)});
  SubspaceBasis k = nullspace(sys);
  CHECK(k.dim() == 2);
  for (const Vec& v : k.vectors()) CHECK(v[0] + v[1] + v[2] == Scalar(0));

  CHECK(rank_of({Vec{Scalar(1), Scalar(2)}, Vec{Scalar(2), Scalar(4)}}) == 1);
}

TEST_CASE("kernel of a column-realized map") {
  // map sending (x, y) to x + y: columns are images of the unit vectors
  std::vector<Vec> cols{Vec{Scalar(1)}, Vec{Scalar(1)}};
  SubspaceBasis k = kernel_of_columns(2, cols);
  CHECK(k.dim() == 1);
  CHECK(k.vectors()[0][0] + k.vectors()[0][1] == Scalar(0));
}

TEST_CASE("endomorphism charts cover exactly the parity pattern") {
  SuperSpace s{1, 1};
  EndoIndex even(s, Parity::even);
  EndoIndex odd(s, Parity::odd);
  CHECK(even.size() == 2);  // diagonal slots
  CHECK(odd.size() == 2);   // antidiagonal slots
  CHECK(even.slot(0, 1) == -1);
  CHECK(odd.slot(0, 0) == -1);

  GradedMap id = GradedMap::identity(s);
  Vec packed = even.pack(id);
  CHECK(packed == Vec{Scalar(1), Scalar(1)});
  CHECK(even.unpack(packed) == id);
}

TEST_CASE("commutation rows cut out the commutant") {
  SuperSpace s{1, 1};
  Mat d(2, 2);
  d.at(0, 0) = Scalar(1);
  d.at(1, 1) = Scalar(2);
  GradedMap a = GradedMap::endo(s, Parity::even, d);

  EndoIndex odd(s, Parity::odd);
  LinearSystem sys(odd.size());
  add_commutation_rows(sys, odd, a, 0);
  // no odd map commutes with diag(1, 2)
  CHECK(nullspace(sys).dim() == 0);

  EndoIndex even(s, Parity::even);
  LinearSystem sys2(even.size());
  add_commutation_rows(sys2, even, a, 0);
  // every diagonal map does
  CHECK(nullspace(sys2).dim() == 2);
}
