#include <benchmark/benchmark.h>

#include "omcat/algebra.hpp"
#include "omcat/fixtures.hpp"
#include "omcat/oracle.hpp"

using namespace omcat;

static void BM_HilbertMatrixEfm8(benchmark::State& state) {
    Fixture f = fixture("efm8_mu_table");
    for (auto _ : state) {
        GradedMatrix h = hilbert_matrix(*f.table);
        benchmark::DoNotOptimize(h.sum_eval_one());
    }
}
BENCHMARK(BM_HilbertMatrixEfm8);

static void BM_KoszulIdentityEfm8(benchmark::State& state) {
    Fixture f = fixture("efm8_mu_table");
    for (auto _ : state) {
        KoszulReport rep = koszul_identity(*f.table);
        benchmark::DoNotOptimize(rep.pass);
    }
}
BENCHMARK(BM_KoszulIdentityEfm8);

static void BM_OracleFigure1(benchmark::State& state) {
    Fixture f = fixture("figure1");
    for (auto _ : state) {
        GradedMatrix dims = path_algebra_oracle(*f.program, *f.param);
        benchmark::DoNotOptimize(dims.sum_eval_one());
    }
}
BENCHMARK(BM_OracleFigure1);

static void BM_ConeClosureEfm8(benchmark::State& state) {
    Fixture f = fixture("efm8_mu_table");
    std::vector<std::pair<std::uint64_t, SignVector>> rows;
    for (std::size_t i = 0; i < f.table->size(); ++i)
        rows.emplace_back(f.table->bases()[i], f.table->topes()[i]);
    for (auto _ : state) {
        MuTable t(f.table->n(), rows);
        benchmark::DoNotOptimize(t.closure_antisymmetric());
    }
}
BENCHMARK(BM_ConeClosureEfm8);
