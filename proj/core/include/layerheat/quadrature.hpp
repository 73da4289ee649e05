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

#ifndef LAYERHEAT_QUADRATURE_HPP_
#define LAYERHEAT_QUADRATURE_HPP_

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace layerheat {

// Node budgets, truncation radii, regularization schedule, and tolerances
// shared by every integral in the library. All quadrature is deterministic
// fixed-node Gauss-Legendre with dyadic refinement, so identical specs give
// bit-identical results.
struct QuadratureSpec {
    // Initial node budget of integrate_finite (composite 12-point panels).
    int finite_nodes = 96;
    // The spectral radius integral is truncated at
    // max(rho_truncation, 6/sqrt(damping_scale)); the constant 6 keeps the
    // discarded Gaussian tail below 1e-15 relative.
    double rho_truncation = 12.0;
    // Initial node budget of the truncated spectral integral.
    int rho_nodes = 192;
    // Node count of the kernel integral over [0, pi]. Even counts keep the
    // nodes away from pi/2, where the axial spectral parameter vanishes.
    int alpha_nodes = 48;
    // Decreasing regularization values for abel_limit.
    std::vector<double> tau_schedule = {0.2, 0.1, 0.05, 0.025, 0.0125};
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;

    // Throws std::invalid_argument on the first violated invariant.
    void validate() const;
};

struct IntegrationResult {
    std::complex<double> value{0.0, 0.0};
    // Difference between the two finest refinement levels.
    double error_estimate = 0.0;
    long evaluations = 0;
    // False means the refinement budget ran out before rel_tol was met;
    // the value is still the finest-level result, not a failure.
    bool converged = false;
};

struct AbelResult {
    std::complex<double> value{0.0, 0.0};
    // Magnitude of the last extrapolation correction; an error estimate for
    // the limit.
    double spread = 0.0;
};

// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Cached rule of the given order. Thread safe; the reference stays valid for
// the process lifetime.
const GaussRule& gauss_legendre(int n);

// Rule mapped onto [a, b].
GaussRule gauss_legendre_on(int n, double a, double b);

using Integrand = std::function<std::complex<double>(double)>;

// Composite 12-point Gauss-Legendre over [a, b], starting from
// ceil(finite_nodes / 12) panels and doubling the panel count until the
// change drops below max(rel_tol * |I|, abs_tol) or the refinement budget
// (5 doublings) runs out.
IntegrationResult integrate_finite(const Integrand& f, double a, double b,
                                   const QuadratureSpec& spec);

// Semi-infinite integral of an integrand damped at least like
// exp(-damping_scale * rho^2): truncates at
// max(rho_truncation, 6/sqrt(damping_scale)) and applies integrate_finite
// with the rho_nodes budget. Throws std::domain_error for
// damping_scale <= 0; limits in the damping parameter belong to abel_limit.
IntegrationResult integrate_semiinfinite_damped(const Integrand& f,
                                                double damping_scale,
                                                const QuadratureSpec& spec);

// Evaluates family on the decreasing schedule and extrapolates polynomially
// (full-degree Neville) to 0. Throws std::invalid_argument for a schedule
// with fewer than 3 entries or one that is not strictly decreasing positive,
// and std::runtime_error naming tau if the family value is not finite.
AbelResult abel_limit(const std::function<std::complex<double>(double)>& family,
                      const std::vector<double>& schedule);

// Neville extrapolation to 0 of already-computed (tau, value) samples.
AbelResult extrapolate_to_zero(
    const std::vector<std::pair<double, std::complex<double>>>& samples);

}  // namespace layerheat

#endif  // LAYERHEAT_QUADRATURE_HPP_
