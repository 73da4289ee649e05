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

#ifndef LAYERHEAT_HEAT_SOLVER_HPP_
#define LAYERHEAT_HEAT_SOLVER_HPP_

#include <string>
#include <vector>

#include "layerheat/fields.hpp"
#include "layerheat/media.hpp"
#include "layerheat/quadrature.hpp"
#include "layerheat/transforms.hpp"

namespace layerheat {

// One spatial evaluation point: axial coordinate x (off-interface) and
// transverse coordinates y (size medium.transverse_dim).
struct ProbePoint {
    double x = 0.0;
    std::vector<double> y;
};

// A complete initial-value problem for the layered heat equation plus the
// evaluation schedule.  `initial` is the per-layer data g_j; when `bumps`
// is nonempty it must describe exactly the same data (make_scenario keeps
// the two in sync), which lets solve_point precompute quadrature tables
// for homogeneous and two-layer ideal-contact media instead of quadrating
// the kernel per spectral node.
struct HeatScenario {
    LayeredMedium medium;
    InterfaceCoupling coupling;
    ScalarField initial;
    std::vector<GaussianBump> bumps;
    std::vector<double> times;
    std::vector<ProbePoint> probes;
    SpectralWeightMode mode;
    QuadratureSpec spec;
};

// Builds a scenario whose initial data is the given bump sum; `initial`
// and `bumps` are guaranteed consistent.  Throws on invalid bumps.
HeatScenario make_scenario(LayeredMedium medium, InterfaceCoupling coupling,
                           std::vector<GaussianBump> bumps,
                           std::vector<double> times,
                           std::vector<ProbePoint> probes,
                           SpectralWeightMode mode = SpectralWeightMode{},
                           QuadratureSpec spec = QuadratureSpec{});

// All violated scenario invariants as human-readable messages (empty
// means valid): medium/coupling validity, quadrature spec validity,
// positive finite times, probes off-interface with matching transverse
// dimension, well-formed initial pieces, and bump/initial consistency.
std::vector<std::string> validate_scenario(const HeatScenario& sc);

// The solution value u_{layer(x)}(t, x, y):
//   w_c Integral_0^inf e^{-rho^2 t} rho^{w_p} F(x, y, rho) d rho
// where F is the mixed direct transform of the initial data and
// (w_c, w_p) is the spectral measure of sc.mode.  The integral is
// evaluated by integrate_semiinfinite_damped with damping scale t.
// Requires t > 0; x must be off-interface.
double solve_point(const HeatScenario& sc, double t, double x,
                   const std::vector<double>& y);

// One output row of solve_grid.
struct GridSample {
    double t = 0.0;
    double x = 0.0;
    std::vector<double> y;
    int layer = 1;
    double value = 0.0;
};

// Maps solve_point over times x probes.  Rows are ordered by time index,
// then probe index.  Probe columns are evaluated concurrently; every
// value is written to its own slot, so results are bit-identical across
// thread schedules.  Throws std::invalid_argument listing the first
// validate_scenario problem if the scenario is invalid.
std::vector<GridSample> solve_grid(const HeatScenario& sc);

// The t -> 0 limit of solve_point at (x, y) by abel_limit over
// sc.spec.tau_schedule used as a time schedule; for a correct spectral
// measure this reproduces the initial data at the point.  The optional
// spread output receives the extrapolation spread.
double reproduce_initial(const HeatScenario& sc, double x,
                         const std::vector<double>& y,
                         double* spread = nullptr);

}  // namespace layerheat

#endif  // LAYERHEAT_HEAT_SOLVER_HPP_
