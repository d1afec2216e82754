#include <benchmark/benchmark.h>

#include "omcat/covector_lattice.hpp"
#include "omcat/fixtures.hpp"

using namespace omcat;

static void BM_CovectorClosure(benchmark::State& state) {
    Fixture f = fixture("uniform(3,6)", 17);
    const OrientedMatroid& om = f.program->mtilde();
    for (auto _ : state) {
        CovectorLattice lat(om);
        benchmark::DoNotOptimize(lat.covectors().size());
    }
}
BENCHMARK(BM_CovectorClosure);

static void BM_ProgramConstruction(benchmark::State& state) {
    Fixture f = fixture("uniform(3,6)", 17);
    OrientedMatroid om = f.program->mtilde();
    for (auto _ : state) {
        Program p(om, "g", "f");
        benchmark::DoNotOptimize(p.bounded_feasible_topes().size());
    }
}
BENCHMARK(BM_ProgramConstruction);

static void BM_DualProgram(benchmark::State& state) {
    Fixture f = fixture("uniform(2,6)", 3);
    for (auto _ : state) {
        Program dual = f.program->dual_program();
        benchmark::DoNotOptimize(dual.bounded_feasible_topes().size());
    }
}
BENCHMARK(BM_DualProgram);
