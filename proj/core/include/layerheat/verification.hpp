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

#ifndef LAYERHEAT_VERIFICATION_HPP_
#define LAYERHEAT_VERIFICATION_HPP_

#include <string>
#include <vector>

#include "layerheat/heat_solver.hpp"
#include "layerheat/media.hpp"
#include "layerheat/quadrature.hpp"

namespace layerheat {

// One verification check.  `value` is the measured residual or relative
// error and `pass` records value <= threshold.
struct CheckRow {
    std::string suite;
    std::string check;
    double value = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

// True when every row passes (and the list is nonempty).
bool all_pass(const std::vector<CheckRow>& rows);

// Short-time reconstruction of the initial data at every probe of the
// scenario.  Each row reports |reconstructed - initial| divided by
// max(|initial at the probe|, 1e-2 * max |initial| over probes), so
// near-zero probes are judged on an absolute scale tied to the data size.
std::vector<CheckRow> roundtrip_suite(const HeatScenario& sc,
                                      double threshold);

// Residual of the transform-diagonalization identity T[Bf] = -lambda^2 T[f]
// on the coupling-compliant mirror family, lambda in {0.5, 1, 2}, one
// anchor point per layer.  Supports one or two layers; the transverse
// resolution is capped for transverse_dim >= 2 to keep the tensor-product
// quadrature tractable.
std::vector<CheckRow> diagonalization_suite(const LayeredMedium& medium,
                                            const InterfaceCoupling& coupling,
                                            const QuadratureSpec& spec,
                                            double threshold);

// Kernel identities.  Cross-representation rows compare the angular
// integral form of the transform kernels against the closed Bessel forms
// on a 3 x 3 x 3 (x, xi, s) grid for transverse_dim in {1, 2, 3} and
// rho in {0.5, 2}, aggregated to the worst case per (dimension, rho);
// the error metric is |integral - closed| / (1 + |closed|) with
// threshold 1e-6.  Plane-wave rows check the spherical-mean identity for
// transverse_dim in {2, 3}, rho in {0.5, 1, 3}, |y| in {0.5, 1, 5} with
// threshold 1e-8 relative to 1 + |lhs|.
std::vector<CheckRow> kernel_suite(const LayeredMedium& medium,
                                   const InterfaceCoupling& coupling,
                                   const QuadratureSpec& spec);

}  // namespace layerheat

#endif  // LAYERHEAT_VERIFICATION_HPP_
