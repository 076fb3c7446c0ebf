#include <benchmark/benchmark.h>

#include "latomo/transforms.hpp"

using namespace latomo;

namespace {

const SinogramGrid kGrid{180, 181, 1.5};

void bm_forward_analytic(benchmark::State& state) {
    Phantom p = default_phantom();
    for (auto _ : state)
        benchmark::DoNotOptimize(forward_analytic(p, kGrid, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_forward_analytic)->Arg(1)->Arg(4);

void bm_forward_numeric(benchmark::State& state) {
    Image img = rasterize(default_phantom(), 128);
    WeightSpec w = WeightSpec::exponential(0.25);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            forward_numeric(img, w, kGrid, kGrid.ds() / 2.0, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_forward_numeric)->Arg(1)->Arg(4);

void bm_filter(benchmark::State& state) {
    Sinogram g(kGrid);
    for (int i = 0; i < kGrid.n_phi; ++i)
        for (int j = 0; j < kGrid.n_s; ++j)
            g.at(i, j) = std::cos(0.1 * i) * std::exp(-kGrid.s(j) * kGrid.s(j));
    FilterSpec f = FilterSpec::fbp();
    for (auto _ : state)
        benchmark::DoNotOptimize(apply_filter(g, f, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_filter)->Arg(1)->Arg(4);

void bm_backproject(benchmark::State& state) {
    Sinogram g(kGrid);
    for (int i = 0; i < kGrid.n_phi; ++i)
        for (int j = 0; j < kGrid.n_s; ++j)
            g.at(i, j) = std::exp(-kGrid.s(j) * kGrid.s(j));
    WeightSpec w = WeightSpec::unit();
    for (auto _ : state)
        benchmark::DoNotOptimize(backproject(g, w, 128, static_cast<int>(state.range(0))));
}
BENCHMARK(bm_backproject)->Arg(1)->Arg(4);

} // namespace
