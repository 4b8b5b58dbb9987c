#include <benchmark/benchmark.h>

#include <zetabound/bound.hpp>
#include <zetabound/dirichlet.hpp>
#include <zetabound/hurwitz.hpp>
#include <zetabound/report.hpp>

using namespace zetabound;

namespace {

void BM_hurwitz_real(benchmark::State& state) {
    const HurwitzArgs args{{0.5, 0.0}, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(hurwitz_zeta(args));
    }
}
BENCHMARK(BM_hurwitz_real);

void BM_hurwitz_complex(benchmark::State& state) {
    const HurwitzArgs args{{0.5, static_cast<double>(state.range(0))}, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(hurwitz_zeta(args));
    }
}
BENCHMARK(BM_hurwitz_complex)->Arg(1)->Arg(100)->Arg(10000);

void BM_hurwitz_fixed_terms(benchmark::State& state) {
    // single shot at the configured N, no escalation
    EMConfig cfg;
    cfg.n_terms = static_cast<int>(state.range(0));
    cfg.k_bernoulli = 8;
    cfg.target_abs_error = 0.0;
    const HurwitzArgs args{{2.0, 0.0}, 1.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(hurwitz_zeta(args, cfg));
    }
}
BENCHMARK(BM_hurwitz_fixed_terms)->Arg(32)->Arg(512)->Arg(8192);

void BM_theorem_bound(benchmark::State& state) {
    const RealArgs args{0.5, 2.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(theorem_bound(args));
    }
}
BENCHMARK(BM_theorem_bound);

void BM_lambda_sequence(benchmark::State& state) {
    const RealArgs args{0.5, 1.0};
    const long n = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lambda_sequence(args, n));
    }
}
BENCHMARK(BM_lambda_sequence)->Arg(100)->Arg(10000);

void BM_characters_mod(benchmark::State& state) {
    const int q = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(characters_mod(q));
    }
}
BENCHMARK(BM_characters_mod)->Arg(12)->Arg(240)->Arg(10000);

void BM_dirichlet_L(benchmark::State& state) {
    const auto chars = characters_mod(12);
    const Complex s{2.0, 0.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(dirichlet_L(chars[1], s));
    }
}
BENCHMARK(BM_dirichlet_L);

void BM_riemann_scan(benchmark::State& state) {
    RunConfig rc;
    rc.workers = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_scan(RiemannSubject{}, 0.01, 0.99, 0.01, rc));
    }
}
BENCHMARK(BM_riemann_scan)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
