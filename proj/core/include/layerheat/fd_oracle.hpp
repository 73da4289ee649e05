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

#pragma once

#include <vector>

#include "layerheat/heat_solver.hpp"

namespace layerheat {

// Uniform grid on the box [x_lo, x_hi] x [y_lo, y_hi]^m with step h in
// every direction and time step dt.  The outer boundary carries
// homogeneous Dirichlet values, so the box must be large enough that the
// solution stays negligible there over the simulated interval.  Every
// interface of the medium must coincide with an axial grid node at least
// two nodes away from the boundary.
struct FdGrid {
    double x_lo = -7.0;
    double x_hi = 7.0;
    double y_lo = -6.0;
    double y_hi = 6.0;
    double h = 1.0 / 64.0;
    double dt = 1e-3;
};

// Snapshot of the finite-difference solution at the final time.
class FdSolution {
  public:
    FdSolution(std::vector<double> x_nodes, std::vector<double> y_nodes,
               int transverse_dim, std::vector<double> values);

    const std::vector<double>& x_nodes() const { return x_; }
    const std::vector<double>& y_nodes() const { return y_; }
    int transverse_dim() const { return m_; }

    // Value by node index; iy must have one entry per transverse
    // dimension.
    double at(int ix, const std::vector<int>& iy) const;

    // Value at a point that coincides with a grid node (relative slack
    // 1e-6 of the step).  Off-node points raise std::invalid_argument;
    // the oracle never interpolates.
    double value(double x, const std::vector<double>& y) const;

  private:
    std::vector<double> x_;
    std::vector<double> y_;
    int m_ = 1;
    std::vector<double> values_;
};

// Advances the scenario's initial data to time t > 0 by Strang-split
// Crank-Nicolson sweeps: transverse half step, axial full step, transverse
// half step.  The axial system replaces the heat-equation row at every
// interface node with the second-order one-sided flux constraint
//   [1, -4, 3(1 + nu), -4 nu, nu] u = 0   on nodes i-2 .. i+2,
// which matches u'_left = nu u'_right while the shared node enforces value
// continuity.  Requires ideal thermal contact, transverse_dim in {1, 2},
// and t an integer multiple of grid.dt.  The initial value at an interface
// node is the average of the two one-sided limits.
FdSolution fd_solve(const HeatScenario& sc, double t, const FdGrid& grid);

// Error summary between paired samples (reference first).
struct ErrorReport {
    // || candidate - reference ||_2 / || reference ||_2
    double l2_rel = 0.0;
    double linf_abs = 0.0;
    // max |reference|, the natural scale of linf_abs
    double ref_scale = 0.0;
    int samples = 0;
};

ErrorReport compare_samples(const std::vector<double>& reference,
                            const std::vector<double>& candidate);

}  // namespace layerheat
