// Wall-clock benchmarks for the hot paths: exact elimination, full axiom
// verification, cohomology dimensions, and operator-family solving.
#include <benchmark/benchmark.h>

#include "common/fixtures.hpp"

#include "hly/algebra.hpp"
#include "hly/cohomology.hpp"
#include "hly/derivations.hpp"
#include "hly/linear.hpp"

using namespace hly;

namespace {

void BM_nullspace(benchmark::State& state) {
  const int unknowns = static_cast<int>(state.range(0));
  fx::TestRng rng(99);
  LinearSystem sys(unknowns);
  for (int r = 0; r < unknowns + 2; ++r) {
    Vec row(unknowns, Scalar(0));
    for (int c = 0; c < unknowns; ++c) row[c] = Scalar(rng.range(-3, 3));
    sys.add(std::move(row));
  }
  for (auto _ : state) {
    SubspaceBasis b = nullspace(sys);
    benchmark::DoNotOptimize(b.dim());
  }
}
BENCHMARK(BM_nullspace)->Arg(8)->Arg(16)->Arg(32);

void BM_verify_axioms(benchmark::State& state) {
  HomLYSA a = fx::a4();
  for (auto _ : state) {
    AxiomReport rep = verify_axioms(a);
    benchmark::DoNotOptimize(rep.all_pass());
  }
}
BENCHMARK(BM_verify_axioms);

void BM_h23_dims(benchmark::State& state) {
  HomLYSA a = fx::a2();
  for (auto _ : state) {
    CohomologyDims d = h23_dims(a);
    benchmark::DoNotOptimize(d.h);
  }
}
BENCHMARK(BM_h23_dims);

void BM_family_basis(benchmark::State& state) {
  HomLYSA a = fx::a2();
  for (auto _ : state) {
    OperatorFamilyBasis b = family_basis(a, Family::gder, 1, Parity::even);
    benchmark::DoNotOptimize(b.dim());
  }
}
BENCHMARK(BM_family_basis);

}  // namespace

BENCHMARK_MAIN();
