// Serial reference against the OpenMP kernels on the X3 presentation.

#include <benchmark/benchmark.h>

#include "loopkit/lyndon.hpp"
#include "loopkit/manifold.hpp"

using namespace loopkit;

namespace {

const QuadraticPresentation &x3()
{
    static const QuadraticPresentation p = make_presentation(
        {"X3", 2, 4, {2, 2, 2}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, std::nullopt});
    return p;
}

Execution mode(const benchmark::State &state)
{
    return state.range(1) ? Execution::parallel : Execution::serial;
}

void ideal_slice(benchmark::State &state)
{
    const auto m = static_cast<int>(state.range(0));
    SliceOptions opts;
    opts.exec = mode(state);
    for (auto _ : state) {
        auto slice = build_ideal_slice(x3().graded, x3().leading, m, opts);
        benchmark::DoNotOptimize(slice->echelon.rank());
    }
}

void lyndon_basis(benchmark::State &state)
{
    const auto N = static_cast<int>(state.range(0));
    StandardBasisOptions opts;
    opts.exec = mode(state);
    opts.slice.exec = opts.exec;
    for (auto _ : state) {
        auto basis = standard_basis(x3(), N, nullptr, opts);
        benchmark::DoNotOptimize(basis.size());
    }
}

} // namespace

BENCHMARK(ideal_slice)
    ->ArgsProduct({{6, 7, 8}, {0, 1}})
    ->ArgNames({"m", "parallel"})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(lyndon_basis)
    ->ArgsProduct({{8, 9, 10}, {0, 1}})
    ->ArgNames({"N", "parallel"})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
