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

#ifndef LAYERHEAT_TRANSFORMS_HPP_
#define LAYERHEAT_TRANSFORMS_HPP_

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "layerheat/eigenfunctions.hpp"
#include "layerheat/fields.hpp"
#include "layerheat/media.hpp"
#include "layerheat/quadrature.hpp"

namespace layerheat {

// Selects the measure of the inverse transforms.
//
// Kind::literal keeps the inversion weights in their originally stated
// form: (1/(pi i)) lambda d lambda for the axial inverse and
// (1/pi) rho^{(m+1)/2} d rho for the polar inverse.  Those weights do not
// reproduce the input field (calibrate_weights quantifies by how much);
// the mode exists so the discrepancy stays reportable.
//
// Kind::calibrated integrates against c * rho^p d rho.  Negative c or p
// stand for the verified defaults c = 1/(2 pi), p = m/2 + 1, which are
// exact for the homogeneous medium and carry over to layered media through
// the unit-spectral-density eigenfunction pair.  The axial (one
// dimensional) calibrated inverse always uses the standard Fourier density
// (1/(2 pi)) d lambda folded onto (0, inf) by 2 Re; its exponent is not
// configurable because the round trip fixes it to zero.
struct SpectralWeightMode {
    enum class Kind { literal, calibrated };

    Kind kind = Kind::calibrated;
    double c = -1.0;
    double p = -1.0;

    static SpectralWeightMode literal();
    static SpectralWeightMode calibrated_default();
    // Explicit calibrated measure.  Runs the homogeneous-medium round-trip
    // self-test for transverse dimension m and throws std::invalid_argument
    // when the measure fails to reproduce the probe values within 2e-3.
    // Outcomes are cached per (c, p, m), so repeated construction is cheap.
    static SpectralWeightMode calibrated(double c, double p, int m,
                                         const QuadratureSpec& spec);

    std::string name() const;
};

// The polar measure constant and exponent the mode denotes for transverse
// dimension m, with the negative-field defaults resolved.
double polar_constant(const SpectralWeightMode& mode, int m);
double polar_exponent(const SpectralWeightMode& mode, int m);

// Classical non-separated direct transform over the transverse space:
//   (2 pi)^{-m/2} Integral J_{(m-2)/2}(lambda |y-eta|)/|y-eta|^{(m-2)/2}
//                           f(eta) d eta
// by tensor Gauss-Legendre over the support box (spec.finite_nodes per
// coordinate).  Requires lambda > 0 and matching box/point dimensions.
std::complex<double> classic_direct(const TransverseField& f,
                                    const std::vector<double>& y,
                                    double lambda, const QuadratureSpec& spec);

// Classical inverse at the point y:
//   lim_{tau->0} Integral_0^inf lambda^{m/2} e^{-lambda tau}
//                fhat(y, lambda) d lambda
// realized by abel_limit over spec.tau_schedule.  The optional spread
// output receives the extrapolation spread (an error estimate).
double classic_inverse(
    const std::function<std::complex<double>(const std::vector<double>&,
                                             double)>& fhat,
    const std::vector<double>& y, const QuadratureSpec& spec,
    double* spread = nullptr);

// Axial direct transform on the segmented axis: the sum over pieces of
//   Integral piece.f(xi) * dual(piece.layer, xi, lambda) d xi.
// The medium/coupling overload uses make_pair_provider, so a two-layer
// ideal-contact medium gets the unit-spectral-density pair.
std::complex<double> direct_1d(const PiecewiseFunc1d& f, double lambda,
                               const PairProvider& pair,
                               const QuadratureSpec& spec);
std::complex<double> direct_1d(const PiecewiseFunc1d& f, double lambda,
                               const LayeredMedium& medium,
                               const InterfaceCoupling& coupling,
                               const QuadratureSpec& spec);

// Axial inverse at x inside layer k.  Calibrated mode evaluates
//   (1/(2 pi)) lim_{tau->0} Integral_0^inf e^{-lambda tau}
//              2 Re[ primal(k, x, lambda) fhat(lambda) ] d lambda
// with the unit-density pair; literal mode evaluates
//   (1/(pi i)) lim_{tau->0} Integral_0^inf e^{-lambda tau}
//              primal(k, x, lambda) fhat(lambda) lambda d lambda
// with the same eigenfunction convention the kernel module prints.
// fhat values are memoized per lambda across the regularization family.
std::complex<double> inverse_1d(
    const std::function<std::complex<double>(double)>& fhat, double x, int k,
    const LayeredMedium& medium, const InterfaceCoupling& coupling,
    const SpectralWeightMode& mode, const QuadratureSpec& spec,
    double* spread = nullptr);

// Mixed direct transform at anchor (x, y) and spectral radius lambda:
//   (2 pi)^{-m/2} Sum_j IntInt phi_{k(x), j}(lambda, x, xi, |y - eta|)
//                              f_j(xi, eta) d xi d eta
// over the support boxes, with the kernel evaluated in closed form for
// homogeneous and two-layer ideal-contact media (unit-density convention)
// and by the angular integral over the transfer-matrix pair otherwise.
std::complex<double> direct_nd(const ScalarField& f, double x,
                               const std::vector<double>& y, double lambda,
                               const LayeredMedium& medium,
                               const InterfaceCoupling& coupling,
                               const QuadratureSpec& spec);

// Polar inverse at (x, y): the Abel-regularized integral
//   lim_{tau->0} Integral_0^inf e^{-rho tau} w(rho) F(x, y, rho) d rho
// with w = c rho^p in calibrated mode and w = (1/pi) rho^{(m+1)/2} in
// literal mode.  F values are memoized per rho across the family.
double inverse_nd(
    const std::function<std::complex<double>(
        double, const std::vector<double>&, double)>& F,
    double x, const std::vector<double>& y, const SpectralWeightMode& mode,
    const QuadratureSpec& spec, double* spread = nullptr);

// The piecewise elliptic operator at a point:
//   a_{layer(x)}^2 d^2f/dx^2 + sum_i d^2f/dy_i^2
// by central differences with step h on ScalarField::value.  Throws
// std::domain_error when the axial stencil touches or crosses an
// interface; shrink h or move x.
double apply_B(const ScalarField& f, double x, const std::vector<double>& y,
               const LayeredMedium& medium, double h = 1e-3);

// The same operator applied piecewise: every piece is differentiated
// through its own callable (the analytic extension of that layer's data),
// so interface proximity never obstructs the stencil.  Boxes and layer
// tags are preserved.
ScalarField apply_B_field(const ScalarField& f, const LayeredMedium& medium,
                          double h = 1e-3);

// Residual of the diagonalization identity  T[B f] = -lambda^2 T[f]  at
// anchor (x, y), where T is direct_nd:
//   |T[B f] + lambda^2 T[f]| / (1 + lambda^2 |T[f]|).
// Meaningful for fields satisfying the interface coupling conditions
// (see mirror_field); h is the apply_B_field stencil step.
double diagonalization_residual(const ScalarField& f, double lambda, double x,
                                const std::vector<double>& y,
                                const LayeredMedium& medium,
                                const InterfaceCoupling& coupling,
                                const QuadratureSpec& spec, double h = 1e-3);

// A smooth compactly supported field satisfying the coupling conditions,
// built from the Gaussian g(x) = exp(-(x + 1/2)^2 / (2 * 0.6^2)) times a
// centered transverse Gaussian with sigma 0.7 per coordinate.  For a
// homogeneous medium the field is g itself; for two-layer ideal contact
// with interface at 0 it is the mirror construction
//   f_1(x) = g(x) + c_r g(-x),  f_2(x) = c_t g(x),
//   c_t = 2/(1 + nu),  c_r = (1 - nu)/(1 + nu),
// which matches the value and the nu-weighted flux at the interface for
// every transverse point.  Other media raise std::invalid_argument.
ScalarField mirror_field(const LayeredMedium& medium,
                         const InterfaceCoupling& coupling);

// The mixed transform of a separable Gaussian over the homogeneous medium
// with coefficient a, reduced to a two-dimensional radial integral:
// axial profile exp(-xi^2/(2 sigma_x^2)), transverse profile
// exp(-|eta|^2/(2 sigma_y^2)), anchor (x, y = 0).  Equals
// direct_nd of the same data; the reduction makes the weight-calibration
// protocol affordable for every m.
double homogeneous_gaussian_spectrum(double rho, double x, double a,
                                     double sigma_x, double sigma_y, int m,
                                     const QuadratureSpec& spec);

// One inversion-measure candidate of the calibration protocol.
struct CalibrationCandidate {
    std::string label;
    double c = 0.0;
    double p = 0.0;
    // Largest reconstruction error over the probe set (the probe values
    // have unit maximum, so this is also the relative error).
    double max_error = 0.0;
    // True when c was fitted by least squares rather than taken as stated.
    bool c_fitted = false;
    bool passes = false;
};

// Outcome of calibrate_weights.
struct CalibrationReport {
    int m = 1;
    // Exponent sweep {m/2, m/2+1, (m+1)/2} with least-squares c.
    std::vector<CalibrationCandidate> fitted;
    // The stated weights evaluated verbatim.
    std::vector<CalibrationCandidate> stated;
    double best_c = 0.0;
    double best_p = 0.0;
    double best_error = 0.0;

    // Human-readable per-candidate lines plus the selected measure.
    std::string summary() const;
    // The calibrated mode carrying the winning measure (self-tested).
    SpectralWeightMode mode(const QuadratureSpec& spec) const;
};

// Runs the weight-calibration protocol for transverse dimension m on the
// homogeneous medium: Gaussian data, five axial probes, exponent sweep
// with least-squares constants, and verbatim evaluation of the stated
// weights.  Deterministic for a fixed spec.
CalibrationReport calibrate_weights(int m, const QuadratureSpec& spec);

}  // namespace layerheat

#endif  // LAYERHEAT_TRANSFORMS_HPP_
