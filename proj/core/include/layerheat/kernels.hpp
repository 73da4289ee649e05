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

#ifndef LAYERHEAT_KERNELS_HPP_
#define LAYERHEAT_KERNELS_HPP_

#include <complex>
#include <utility>
#include <vector>

#include "layerheat/eigenfunctions.hpp"
#include "layerheat/media.hpp"
#include "layerheat/quadrature.hpp"

namespace layerheat {

// One evaluation point of the mixed axial/transverse kernel
// phi_{k,j}(rho, x, xi, s): spectral radius rho, field coordinate x in
// layer k, source coordinate xi in layer j, transverse distance
// s = |y - eta|, and transverse dimension m.
struct KernelQuery {
    double rho = 1.0;
    double x = 0.0;
    double xi = 0.0;
    double s = 0.0;
    int k = 1;
    int j = 1;
    int m = 1;
};

// The angular factor of the kernel integrand at polar angle alpha:
//   sin^{m/2}(alpha) * J_{(m-2)/2}(rho sin(alpha) s) / s^{(m-2)/2},
// written through normalized_bessel so s = 0 is regular.  For m = 1 the
// half-integer kernel collapses to sqrt(2/(pi rho)) cos(rho sin(alpha) s).
double transverse_kernel_factor(int m, double rho, double alpha, double s);

// Evaluates phi_{k,j} by the polar-angle integral
//   Integral_0^pi transverse_kernel_factor(m, rho, alpha, s)
//     * primal(k, x, rho cos(alpha)) * dual(j, xi, rho cos(alpha)) dalpha
// with a Gauss rule of spec.alpha_nodes points (odd counts are bumped to
// even so no node lands on alpha = pi/2, where the axial frequency
// rho cos(alpha) crosses zero).  A pair-construction failure at a node is
// rethrown with the node index and frequency attached.
std::complex<double> phi_kj_integral(const KernelQuery& q,
                                     const PairProvider& pair,
                                     const QuadratureSpec& spec);

// Same integral with the pair chosen from the medium: the printed
// closed-form pair for a two-layer ideal-contact medium (so the result is
// directly comparable with phi_kj_closed_two_layer), the transfer-matrix
// pair otherwise.
std::complex<double> phi_kj_integral(const KernelQuery& q,
                                     const LayeredMedium& medium,
                                     const InterfaceCoupling& coupling,
                                     const QuadratureSpec& spec);

// Closed form of the two-layer ideal-contact kernel (interface at 0).
// With delta0 = a2/(nu a1), D = sqrt(2 pi / rho), the bridge constant
// C = D (1+delta0)^2/2, and B(R) = J_{(m-1)/2}(rho R)/R^{(m-1)/2}:
//   phi_11 = C [ (1+delta0)/a1 B(R-) + (delta0-1)/a1 B(R+) ],
//            R-+ = sqrt((x -+ xi)^2/a1^2 + s^2)
//   phi_22 = C [ (1+delta0)/a2 B(R-) + (1-delta0)/a2 B(R+) ],
//            R-+ = sqrt((x -+ xi)^2/a2^2 + s^2)
//   phi_21 = C (2 delta0/a1) B(R), R = sqrt((x/a2 - xi/a1)^2 + s^2)
//   phi_12 = C (2/a2) B(R),        R = sqrt((x/a1 - xi/a2)^2 + s^2)
// This is the unique closed form consistent with the polar-angle integral
// over the printed eigenfunction pair; it agrees with phi_kj_integral to
// quadrature accuracy for every m and both layer sides.
double phi_kj_closed_two_layer(const KernelQuery& q,
                               const TwoLayerIdealParams& params);

// The two-layer kernel rescaled to the unit-spectral-density pair used by
// the reconstruction formulas: 2/(1+delta0)^3 times the closed form above.
double phi_kj_closed_spectral(const KernelQuery& q,
                              const TwoLayerIdealParams& params);

// The kernel of a homogeneous medium with coefficient a under the
// unit-density pair:
//   sqrt(2 pi / rho) (1/a) J_{(m-1)/2}(rho R)/R^{(m-1)/2},
//   R = sqrt((x - xi)^2/a^2 + s^2).
double kernel_homogeneous(const KernelQuery& q, double a);

// Compares the radial Bessel kernel with the plane-wave average over the
// sphere of radius rho:
//   lhs = rho^{m/2} J_{(m-2)/2}(rho |y|)/|y|^{(m-2)/2}
//   rhs = (2 pi)^{-m/2} Integral_{|xi| = rho} e^{i<y, xi>} dS(xi)
// evaluated by trapezoid (m = 2) or product Gauss-trapezoid (m = 3)
// surface quadrature.  Supports m in {2, 3} and |y| > 0.
std::pair<double, double> plane_wave_identity_check(
    double rho, const std::vector<double>& y, const QuadratureSpec& spec);

// Residual |Laplacian_eta K + rho^2 sin^2(alpha) K| of the transverse
// kernel factor K(eta) = J_{(m-2)/2}(rho sin(alpha) |y-eta|)/|y-eta|^{(m-2)/2}
// with the Laplacian taken by central differences (step 1e-3) in the m
// components of eta.
double laplacian_eigen_check(double rho, double alpha,
                             const std::vector<double>& y,
                             const std::vector<double>& eta, int m,
                             const QuadratureSpec& spec);

}  // namespace layerheat

#endif  // LAYERHEAT_KERNELS_HPP_
