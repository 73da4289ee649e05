// Copyright 2026 layerheat authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <complex>
#include <vector>

#include "layerheat/eigenfunctions.hpp"
#include "layerheat/heat_solver.hpp"
#include "layerheat/kernels.hpp"
#include "layerheat/media.hpp"
#include "layerheat/special.hpp"

namespace {

using namespace layerheat;

void bm_normalized_bessel(benchmark::State& state) {
    const double order = static_cast<double>(state.range(0)) / 2.0;
    double z = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(normalized_bessel(order, z));
        z = z < 40.0 ? z + 0.37 : 0.1;
    }
}
BENCHMARK(bm_normalized_bessel)->Arg(0)->Arg(1)->Arg(3);

void bm_closed_two_layer_kernel(benchmark::State& state) {
    const TwoLayerIdealParams params{1.0, 1.5, 2.0};
    KernelQuery q;
    q.rho = 2.0;
    q.x = -0.6;
    q.xi = 0.4;
    q.s = 0.8;
    q.k = 1;
    q.j = 2;
    q.m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(phi_kj_closed_spectral(q, params));
    }
}
BENCHMARK(bm_closed_two_layer_kernel)->Arg(1)->Arg(2)->Arg(3);

void bm_kernel_angle_integral(benchmark::State& state) {
    const TwoLayerIdealParams params{1.0, 1.5, 2.0};
    const LayeredMedium medium = params.medium();
    const InterfaceCoupling coupling = params.coupling();
    QuadratureSpec spec;
    spec.alpha_nodes = static_cast<int>(state.range(0));
    KernelQuery q;
    q.rho = 2.0;
    q.x = -0.6;
    q.xi = 0.4;
    q.s = 0.8;
    q.k = 1;
    q.j = 2;
    q.m = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(phi_kj_integral(q, medium, coupling, spec));
    }
}
BENCHMARK(bm_kernel_angle_integral)->Arg(16)->Arg(48)->Arg(96);

void bm_build_pair(benchmark::State& state) {
    LayeredMedium medium;
    medium.interfaces = {-0.3, 0.9};
    medium.diffusivity_coeffs = {1.0, 1.5, 0.8};
    InterfaceCoupling coupling;
    coupling.at.push_back(ideal_contact(1.5, 1).at[0]);
    coupling.at.push_back(ideal_contact(2.0, 1).at[0]);
    double lambda = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_primal(medium, coupling, lambda));
        benchmark::DoNotOptimize(build_dual(medium, coupling, lambda));
        lambda = lambda < 50.0 ? lambda * 1.7 : 0.3;
    }
}
BENCHMARK(bm_build_pair);

void bm_solve_point_homogeneous(benchmark::State& state) {
    GaussianBump b;
    b.layer = 1;
    b.amplitude = 1.0;
    b.center_x = 0.0;
    b.sigma_x = 0.5;
    b.center_y = {0.0};
    b.sigma_y = {0.5};
    const HeatScenario sc =
        make_scenario(homogeneous_medium(1.0, 1), InterfaceCoupling{}, {b},
                      {0.1}, {ProbePoint{0.25, {0.0}}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_point(sc, 0.1, 0.25, {0.0}));
    }
}
BENCHMARK(bm_solve_point_homogeneous)->Unit(benchmark::kMillisecond);

void bm_solve_point_two_layer(benchmark::State& state) {
    const TwoLayerIdealParams params{1.0, 2.0, 1.0};
    GaussianBump b;
    b.layer = 1;
    b.amplitude = 1.0;
    b.center_x = -1.0;
    b.sigma_x = 0.35;
    b.center_y = {0.0};
    b.sigma_y = {0.5};
    const HeatScenario sc =
        make_scenario(params.medium(), params.coupling(), {b}, {0.1},
                      {ProbePoint{0.5, {0.0}}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_point(sc, 0.1, 0.5, {0.0}));
    }
}
BENCHMARK(bm_solve_point_two_layer)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
