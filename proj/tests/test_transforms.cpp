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

#include "layerheat/transforms.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "layerheat/eigenfunctions.hpp"
#include "layerheat/fields.hpp"
#include "layerheat/kernels.hpp"
#include "layerheat/media.hpp"
#include "layerheat/quadrature.hpp"
#include "layerheat/special.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;

using layerheat::FieldPiece;
using layerheat::GaussianBump;
using layerheat::PiecewiseFunc1d;
using layerheat::QuadratureSpec;
using layerheat::ScalarField;
using layerheat::SpectralWeightMode;
using layerheat::TransverseField;

using Complex = std::complex<double>;

TransverseField radial_gaussian(int m, double sigma, double reach = 8.0) {
    TransverseField f;
    f.f = [sigma](const std::vector<double>& eta) {
        double sum = 0.0;
        for (double v : eta) {
            sum += v * v;
        }
        return std::exp(-0.5 * sum / (sigma * sigma));
    };
    f.lo.assign(m, -reach * sigma);
    f.hi.assign(m, reach * sigma);
    return f;
}

ScalarField separable_gaussian_field(int m, double sigma_x, double sigma_y,
                                     double center_x = 0.0) {
    ScalarField f;
    FieldPiece piece;
    piece.layer = 1;
    piece.f = [sigma_x, sigma_y, center_x](double xi,
                                           const std::vector<double>& eta) {
        const double ax = (xi - center_x) / sigma_x;
        double sum = 0.0;
        for (double v : eta) {
            sum += v * v;
        }
        return std::exp(-0.5 * ax * ax - 0.5 * sum / (sigma_y * sigma_y));
    };
    piece.x_lo = center_x - 8.0 * sigma_x;
    piece.x_hi = center_x + 8.0 * sigma_x;
    piece.y_lo.assign(m, -8.0 * sigma_y);
    piece.y_hi.assign(m, 8.0 * sigma_y);
    f.pieces.push_back(std::move(piece));
    return f;
}

}  // namespace

TEST_CASE("classic direct transform reproduces Hankel and cosine integrals") {
    const QuadratureSpec spec;

    // m = 2 radial Gaussian: the transform is exp(-lambda^2/2).
    const TransverseField g2 = radial_gaussian(2, 1.0);
    for (double lambda : {0.3, 1.0, 2.0}) {
        const Complex value = classic_direct(g2, {0.0, 0.0}, lambda, spec);
        CHECK(std::abs(value.real() - std::exp(-0.5 * lambda * lambda)) <=
              1e-9);
        CHECK(std::abs(value.imag()) == 0.0);
    }

    // m = 1 Gaussian: sqrt(2/(pi lambda)) exp(-lambda^2/2).
    const TransverseField g1 = radial_gaussian(1, 1.0);
    const double lambda1 = 1.3;
    const double expected1 = std::sqrt(2.0 / (kPi * lambda1)) *
                             std::exp(-0.5 * lambda1 * lambda1);
    CHECK(std::abs(classic_direct(g1, {0.0}, lambda1, spec).real() -
                   expected1) <= 1e-10);

    // Small-lambda limit for m = 2 tends to the plain integral over 2 pi.
    const double sigma = 0.7;
    const TransverseField gs = radial_gaussian(2, sigma);
    const Complex small = classic_direct(gs, {0.0, 0.0}, 1e-8, spec);
    CHECK(std::abs(small.real() - sigma * sigma) <= 1e-9);

    // Translating the data and the evaluation point together changes
    // nothing beyond node-mapping roundoff.
    TransverseField shifted = radial_gaussian(2, 1.0);
    const double dx = 0.4;
    const double dy = -0.3;
    shifted.f = [](const std::vector<double>& eta) {
        const double u = eta[0] - 0.4;
        const double v = eta[1] + 0.3;
        return std::exp(-0.5 * (u * u + v * v));
    };
    for (int d = 0; d < 2; ++d) {
        shifted.lo[d] += d == 0 ? dx : dy;
        shifted.hi[d] += d == 0 ? dx : dy;
    }
    const Complex base = classic_direct(g2, {0.2, 0.5}, 1.1, spec);
    const Complex moved =
        classic_direct(shifted, {0.2 + dx, 0.5 + dy}, 1.1, spec);
    CHECK(std::abs(base - moved) <= 1e-12);

    CHECK_THROWS_AS(classic_direct(g2, {0.0, 0.0}, 0.0, spec),
                    std::invalid_argument);
    CHECK_THROWS_AS(classic_direct(g2, {0.0}, 1.0, spec),
                    std::invalid_argument);
}

TEST_CASE("classic inverse recovers the Gaussian it transformed") {
    const QuadratureSpec spec;
    const TransverseField g2 = radial_gaussian(2, 1.0);
    auto fhat = [&](const std::vector<double>& y, double lambda) {
        return classic_direct(g2, y, lambda, spec);
    };

    double spread = 0.0;
    const double at_origin = classic_inverse(fhat, {0.0, 0.0}, spec, &spread);
    CHECK(std::abs(at_origin - 1.0) <= 1e-3);
    CHECK(spread <= 1e-3);

    const double at_unit = classic_inverse(fhat, {0.6, 0.8}, spec);
    CHECK(std::abs(at_unit - std::exp(-0.5)) <= 1e-3);
}

TEST_CASE("classic inverse of a Gaussian cutoff matches the Gamma moment") {
    const QuadratureSpec spec;
    auto fhat = [](const std::vector<double>&, double lambda) {
        return Complex(std::exp(-lambda * lambda), 0.0);
    };
    for (int m = 1; m <= 3; ++m) {
        const std::vector<double> y(m, 0.3);
        const double expected = 0.5 * std::tgamma(0.25 * m + 0.5);
        CHECK(std::abs(classic_inverse(fhat, y, spec) - expected) <= 1e-6);
    }
}

TEST_CASE("axial direct transform matches the Fourier integral") {
    const QuadratureSpec spec;
    const layerheat::LayeredMedium medium = layerheat::homogeneous_medium(1.0);
    const layerheat::InterfaceCoupling coupling;

    PiecewiseFunc1d f;
    f.pieces.push_back({1, [](double xi) { return std::exp(-xi * xi); },
                        -6.0, 6.0});
    for (double lambda : {0.5, 1.7}) {
        const Complex value = direct_1d(f, lambda, medium, coupling, spec);
        const double expected =
            std::sqrt(kPi) * std::exp(-0.25 * lambda * lambda);
        CHECK(std::abs(value.real() - expected) <= 1e-10);
        // The unit-density adjoint is exp(-i lambda xi); an even real f has
        // a real transform.
        CHECK(std::abs(value.imag()) <= 1e-12);
    }

    PiecewiseFunc1d zero;
    zero.pieces.push_back({1, [](double) { return 0.0; }, -1.0, 1.0});
    CHECK(std::abs(direct_1d(zero, 1.0, medium, coupling, spec)) == 0.0);

    // A piece in layer 2 of a two-layer medium integrates against the
    // layer-2 adjoint branch only.
    const layerheat::TwoLayerIdealParams params{1.0, 1.5, 1.25};
    const layerheat::LayeredMedium medium2 = params.medium();
    const layerheat::InterfaceCoupling coupling2 = params.coupling();
    PiecewiseFunc1d in_layer2;
    in_layer2.pieces.push_back(
        {2, [](double xi) { return std::exp(-(xi - 1.0) * (xi - 1.0)); },
         0.0, 5.0});
    const auto pair = layerheat::make_pair_provider(medium2, coupling2);
    const Complex via_op = direct_1d(in_layer2, 0.9, medium2, coupling2, spec);
    const Complex manual =
        layerheat::integrate_finite(
            [&](double xi) {
                return std::exp(-(xi - 1.0) * (xi - 1.0)) *
                       pair->dual(2, xi, 0.9);
            },
            0.0, 5.0, spec)
            .value;
    CHECK(std::abs(via_op - manual) <= 1e-14);
}

TEST_CASE("axial inverse round trips through the direct transform") {
    const QuadratureSpec spec;
    const layerheat::LayeredMedium medium = layerheat::homogeneous_medium(1.0);
    const layerheat::InterfaceCoupling coupling;
    PiecewiseFunc1d f;
    f.pieces.push_back({1, [](double xi) { return std::exp(-xi * xi); },
                        -6.0, 6.0});
    auto fhat = [&](double lambda) {
        return direct_1d(f, lambda, medium, coupling, spec);
    };
    const SpectralWeightMode mode = SpectralWeightMode::calibrated_default();
    for (double x : {0.0, 0.4}) {
        const Complex value =
            inverse_1d(fhat, x, 1, medium, coupling, mode, spec);
        CHECK(std::abs(value.real() - std::exp(-x * x)) <= 1e-4);
        CHECK(std::abs(value.imag()) <= 1e-8);
    }

    auto zero_hat = [](double) { return Complex(0.0, 0.0); };
    CHECK(std::abs(inverse_1d(zero_hat, 0.3, 1, medium, coupling, mode,
                              spec)) <= 1e-15);

    // The literal axial weight lambda d lambda / (pi i) does not reproduce
    // the homogeneous Gaussian; this documents the discrepancy.
    const Complex literal = inverse_1d(
        fhat, 0.0, 1, medium, coupling, SpectralWeightMode::literal(), spec);
    CHECK(std::abs(literal - Complex(1.0, 0.0)) >= 0.5);
}

TEST_CASE("axial inverse round trips on a two-layer medium") {
    QuadratureSpec spec;
    const layerheat::TwoLayerIdealParams params{1.0, 1.5, 1.25};
    const layerheat::LayeredMedium medium = params.medium();
    const layerheat::InterfaceCoupling coupling = params.coupling();
    const double center = -1.5;
    const double sigma = 0.4;
    PiecewiseFunc1d f;
    f.pieces.push_back({1,
                        [center, sigma](double xi) {
                            const double arg = (xi - center) / sigma;
                            return std::exp(-0.5 * arg * arg);
                        },
                        center - 8.0 * sigma, 0.0});
    auto fhat = [&](double lambda) {
        return direct_1d(f, lambda, medium, coupling, spec);
    };
    const SpectralWeightMode mode = SpectralWeightMode::calibrated_default();

    const double x = -1.2;
    const double expected = std::exp(-0.5 * std::pow((x - center) / sigma, 2));
    const Complex recon = inverse_1d(fhat, x, 1, medium, coupling, mode, spec);
    CHECK(std::abs(recon.real() - expected) <= 1e-3 * expected);

    // The identity holds where the data vanishes too.
    const Complex in_layer2 =
        inverse_1d(fhat, 0.8, 2, medium, coupling, mode, spec);
    CHECK(std::abs(in_layer2) <= 2e-3);
}

TEST_CASE("mixed transform factorizes over the angular rule for one layer") {
    const QuadratureSpec spec;
    struct Setup {
        int m;
        double a;
    };
    for (const Setup setup : {Setup{1, 1.3}, Setup{2, 1.0}}) {
        const layerheat::LayeredMedium medium =
            layerheat::homogeneous_medium(setup.a, setup.m);
        const layerheat::InterfaceCoupling coupling;
        const double sigma_x = 0.5;
        const double sigma_y = 0.6;
        const ScalarField f =
            separable_gaussian_field(setup.m, sigma_x, sigma_y, 0.2);
        const TransverseField gy = radial_gaussian(setup.m, sigma_y);
        PiecewiseFunc1d gx;
        gx.pieces.push_back({1,
                             [sigma_x](double xi) {
                                 const double arg = (xi - 0.2) / sigma_x;
                                 return std::exp(-0.5 * arg * arg);
                             },
                             0.2 - 8.0 * sigma_x, 0.2 + 8.0 * sigma_x});
        const auto pair = layerheat::make_pair_provider(medium, coupling);

        const double rho = 1.4;
        const double x = 0.45;
        const std::vector<double> y(setup.m, 0.15);
        const Complex lhs = direct_nd(f, x, y, rho, medium, coupling, spec);

        const layerheat::GaussRule& rule = layerheat::gauss_legendre(48);
        Complex rhs(0.0, 0.0);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double alpha = 0.5 * kPi * (rule.nodes[i] + 1.0);
            const double weight = 0.5 * kPi * rule.weights[i];
            const double axial_freq = rho * std::cos(alpha);
            const Complex transverse =
                classic_direct(gy, y, rho * std::sin(alpha), spec);
            rhs += weight * std::pow(std::sin(alpha), 0.5 * setup.m) *
                   transverse * pair->primal(1, x, axial_freq) *
                   direct_1d(gx, axial_freq, *pair, spec);
        }
        CHECK(std::abs(lhs - rhs) <= 1e-8 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("mixed transform is linear and respects supports") {
    const QuadratureSpec spec;
    const layerheat::TwoLayerIdealParams params{1.0, 1.5, 2.0};
    const layerheat::LayeredMedium medium = params.medium();
    const layerheat::InterfaceCoupling coupling = params.coupling();

    ScalarField f;
    FieldPiece piece;
    piece.layer = 2;
    piece.f = [](double xi, const std::vector<double>& eta) {
        const double dx = xi - 1.2;
        return std::exp(-2.0 * dx * dx - eta[0] * eta[0]);
    };
    piece.x_lo = 0.0;
    piece.x_hi = 4.0;
    piece.y_lo = {-4.0};
    piece.y_hi = {4.0};
    f.pieces.push_back(piece);

    const double rho = 0.9;
    const double x = -0.7;
    const std::vector<double> y = {0.3};
    const Complex base = direct_nd(f, x, y, rho, medium, coupling, spec);

    // Doubling the data doubles the transform exactly.
    ScalarField doubled = f;
    doubled.pieces[0].f = [inner = piece.f](double xi,
                                            const std::vector<double>& eta) {
        return 2.0 * inner(xi, eta);
    };
    const Complex twice = direct_nd(doubled, x, y, rho, medium, coupling,
                                    spec);
    CHECK(twice == 2.0 * base);

    // Piece lists add.
    ScalarField other;
    FieldPiece second = piece;
    second.layer = 1;
    second.x_lo = -3.0;
    second.x_hi = 0.0;
    second.f = [](double xi, const std::vector<double>& eta) {
        const double dx = xi + 1.0;
        return std::exp(-3.0 * dx * dx - 0.5 * eta[0] * eta[0]);
    };
    other.pieces.push_back(second);
    ScalarField joined = f;
    joined.pieces.push_back(second);
    const Complex sum = direct_nd(other, x, y, rho, medium, coupling, spec);
    const Complex together =
        direct_nd(joined, x, y, rho, medium, coupling, spec);
    CHECK(std::abs(together - (base + sum)) <= 1e-14 * (1.0 + std::abs(base)));

    // Layer-2 data seen from layer 1 goes through the cross kernel alone.
    const layerheat::GaussRule xr =
        layerheat::gauss_legendre_on(spec.finite_nodes, piece.x_lo,
                                     piece.x_hi);
    const layerheat::GaussRule yr = layerheat::gauss_legendre_on(
        spec.finite_nodes, piece.y_lo[0], piece.y_hi[0]);
    Complex manual(0.0, 0.0);
    for (std::size_t i = 0; i < xr.nodes.size(); ++i) {
        for (std::size_t j = 0; j < yr.nodes.size(); ++j) {
            layerheat::KernelQuery q;
            q.rho = rho;
            q.x = x;
            q.xi = xr.nodes[i];
            q.s = std::abs(y[0] - yr.nodes[j]);
            q.k = 1;
            q.j = 2;
            q.m = 1;
            manual += xr.weights[i] * yr.weights[j] *
                      layerheat::phi_kj_closed_spectral(q, params) *
                      piece.f(xr.nodes[i], {yr.nodes[j]});
        }
    }
    manual *= std::pow(kTwoPi, -0.5);
    CHECK(std::abs(base - manual) <= 1e-12 * (1.0 + std::abs(base)));
}

TEST_CASE("mixed inverse round trips on the homogeneous medium") {
    const QuadratureSpec spec;
    const layerheat::LayeredMedium medium =
        layerheat::homogeneous_medium(1.0, 1);
    const layerheat::InterfaceCoupling coupling;
    const ScalarField f = separable_gaussian_field(1, 0.5, 0.5, 0.2);
    auto F = [&](double x, const std::vector<double>& y, double rho) {
        return direct_nd(f, x, y, rho, medium, coupling, spec);
    };
    const SpectralWeightMode mode = SpectralWeightMode::calibrated_default();
    const double x = 0.15;
    const std::vector<double> y = {-0.2};
    double spread = 0.0;
    const double recon = inverse_nd(F, x, y, mode, spec, &spread);
    const double expected = f.value(1, x, y);
    CHECK(std::abs(recon - expected) <= 1e-3);
    CHECK(spread <= 1e-3);

    auto zero = [](double, const std::vector<double>&, double) {
        return Complex(0.0, 0.0);
    };
    CHECK(std::abs(inverse_nd(zero, 0.0, {0.0}, mode, spec)) <= 1e-15);
}

TEST_CASE("mixed inverse round trips on a two-layer medium") {
    const QuadratureSpec spec;
    const layerheat::TwoLayerIdealParams params{1.0, 1.5, 1.25};
    const layerheat::LayeredMedium medium = params.medium();
    const layerheat::InterfaceCoupling coupling = params.coupling();
    GaussianBump bump;
    bump.layer = 1;
    bump.amplitude = 1.0;
    bump.center_x = -1.5;
    bump.sigma_x = 0.45;
    bump.center_y = {0.0};
    bump.sigma_y = {0.45};
    const ScalarField f = layerheat::gaussian_bumps(medium, {bump});
    auto F = [&](double x, const std::vector<double>& y, double rho) {
        return direct_nd(f, x, y, rho, medium, coupling, spec);
    };
    const SpectralWeightMode mode = SpectralWeightMode::calibrated_default();
    const std::vector<double> y = {0.1};

    // Inside the bump the relative error stays small.
    const double near = -1.2;
    const double expected_near = f.value(1, near, y);
    CHECK(std::abs(inverse_nd(F, near, y, mode, spec) - expected_near) <=
          5e-3 * expected_near);

    // Half a unit from the interface the data is tiny; the absolute error
    // of the reconstruction stays well below the field scale.
    const double x = -0.5;
    const double expected = f.value(1, x, y);
    CHECK(std::abs(inverse_nd(F, x, y, mode, spec) - expected) <= 1e-3);
}

TEST_CASE("polar and iterated orderings of the solution integral agree") {
    const QuadratureSpec spec;
    const layerheat::LayeredMedium medium =
        layerheat::homogeneous_medium(1.0, 1);
    const layerheat::InterfaceCoupling coupling;
    const double sigma = 0.5;
    const ScalarField f = separable_gaussian_field(1, sigma, sigma);
    const TransverseField gy = radial_gaussian(1, sigma);
    PiecewiseFunc1d gx;
    gx.pieces.push_back({1,
                         [sigma](double xi) {
                             return std::exp(-0.5 * xi * xi / (sigma * sigma));
                         },
                         -8.0 * sigma, 8.0 * sigma});
    const auto pair = layerheat::make_pair_provider(medium, coupling);

    const double t = 0.08;
    const double x = 0.25;
    const std::vector<double> y = {-0.15};
    const SpectralWeightMode mode = SpectralWeightMode::calibrated_default();
    const double c = polar_constant(mode, 1);
    const double p = polar_exponent(mode, 1);

    // Polar ordering: radius integral of the mixed transform.
    const double polar =
        c * layerheat::integrate_semiinfinite_damped(
                [&](double rho) {
                    return std::pow(rho, p) * std::exp(-rho * rho * t) *
                           direct_nd(f, x, y, rho, medium, coupling, spec);
                },
                t, spec)
                .value.real();

    // Iterated ordering: axial frequency times transverse radius on a
    // truncated rectangle, with the same measure transported through
    // lambda = rho cos(alpha), w = rho sin(alpha).
    const double cut = 14.0;
    const int n = 220;
    const layerheat::GaussRule lam_rule =
        layerheat::gauss_legendre_on(n, -cut, cut);
    const layerheat::GaussRule w_rule =
        layerheat::gauss_legendre_on(n, 0.0, cut);
    std::vector<Complex> axial(lam_rule.nodes.size());
    for (std::size_t i = 0; i < lam_rule.nodes.size(); ++i) {
        const double lambda = lam_rule.nodes[i];
        axial[i] = pair->primal(1, x, lambda) *
                   direct_1d(gx, lambda, *pair, spec);
    }
    std::vector<double> transverse(w_rule.nodes.size());
    for (std::size_t j = 0; j < w_rule.nodes.size(); ++j) {
        transverse[j] =
            classic_direct(gy, y, w_rule.nodes[j], spec).real();
    }
    Complex iterated(0.0, 0.0);
    for (std::size_t i = 0; i < lam_rule.nodes.size(); ++i) {
        const double lambda = lam_rule.nodes[i];
        for (std::size_t j = 0; j < w_rule.nodes.size(); ++j) {
            const double w = w_rule.nodes[j];
            iterated += lam_rule.weights[i] * w_rule.weights[j] *
                        std::sqrt(w) * std::exp(-(lambda * lambda + w * w) *
                                                t) *
                        axial[i] * transverse[j];
        }
    }
    const double iterated_value = c * iterated.real();
    CHECK(std::abs(polar - iterated_value) <= 1e-6 * (1.0 + std::abs(polar)));
}

TEST_CASE("piecewise elliptic operator matches hand derivatives") {
    for (int m : {1, 2}) {
        const layerheat::LayeredMedium medium =
            layerheat::homogeneous_medium(1.0, m);
        ScalarField f;
        FieldPiece piece;
        piece.layer = 1;
        piece.f = [](double xi, const std::vector<double>& eta) {
            double sum = xi * xi;
            for (double v : eta) {
                sum += v * v;
            }
            return std::exp(-sum);
        };
        piece.x_lo = -6.0;
        piece.x_hi = 6.0;
        piece.y_lo.assign(m, -6.0);
        piece.y_hi.assign(m, 6.0);
        f.pieces.push_back(piece);
        const std::vector<double> origin(m, 0.0);
        CHECK(std::abs(apply_B(f, 0.0, origin, medium, 1e-3) -
                       (-2.0 - 2.0 * m)) <= 1e-5);

        // Linear data is annihilated.
        ScalarField lin;
        FieldPiece lp = piece;
        lp.f = [](double xi, const std::vector<double>& eta) {
            double sum = 1.0 + 0.3 * xi;
            for (double v : eta) {
                sum += 0.2 * v;
            }
            return sum;
        };
        lin.pieces.push_back(lp);
        CHECK(std::abs(apply_B(lin, 0.4, origin, medium, 1e-3)) <= 1e-8);
    }
}

TEST_CASE("piecewise elliptic operator weights layers by their coefficient") {
    const layerheat::TwoLayerIdealParams params{1.0, 2.0, 1.0};
    const layerheat::LayeredMedium medium = params.medium();
    auto gaussian = [](double xi, const std::vector<double>& eta) {
        return std::exp(-xi * xi - eta[0] * eta[0]);
    };
    ScalarField f;
    f.pieces.push_back({1, gaussian, -6.0, 0.0, {-6.0}, {6.0}});
    f.pieces.push_back({2, gaussian, 0.0, 6.0, {-6.0}, {6.0}});
    auto expected = [&](double x, double y, double a) {
        const double value = std::exp(-x * x - y * y);
        return a * a * (4.0 * x * x - 2.0) * value +
               (4.0 * y * y - 2.0) * value;
    };
    const double x = 0.25;
    CHECK(std::abs(apply_B(f, -x, {0.1}, medium, 1e-3) -
                   expected(-x, 0.1, params.a1)) <= 1e-5);
    CHECK(std::abs(apply_B(f, x, {0.1}, medium, 1e-3) -
                   expected(x, 0.1, params.a2)) <= 1e-5);

    // A stencil reaching across the interface is rejected.
    CHECK_THROWS_AS(apply_B(f, 1e-4, {0.0}, medium, 1e-3), std::domain_error);

    // The per-piece form differentiates analytic extensions and agrees
    // with the pointwise form away from the interface.
    const ScalarField applied = apply_B_field(f, medium, 1e-3);
    CHECK(std::abs(applied.value(2, x, {0.1}) -
                   apply_B(f, x, {0.1}, medium, 1e-3)) <= 1e-13);
    // It also evaluates right up to the interface.
    CHECK(std::isfinite(applied.value(1, -1e-9, {0.0})));
}

TEST_CASE("mirror construction satisfies the interface coupling") {
    const layerheat::TwoLayerIdealParams params{1.0, 1.5, 2.0};
    const layerheat::LayeredMedium medium = params.medium();
    const layerheat::InterfaceCoupling coupling = params.coupling();
    const ScalarField f = layerheat::mirror_field(medium, coupling);
    REQUIRE(f.pieces.size() == 2);
    const std::vector<double> y = {0.3};

    const double left = f.value(1, 0.0, y);
    const double right = f.value(2, 0.0, y);
    CHECK(std::abs(left - right) <= 1e-14 * (1.0 + std::abs(left)));

    const double h = 1e-6;
    const double d_left =
        (f.value(1, h, y) - f.value(1, -h, y)) / (2.0 * h);
    const double d_right =
        (f.value(2, h, y) - f.value(2, -h, y)) / (2.0 * h);
    CHECK(std::abs(d_left - params.nu * d_right) <=
          1e-6 * (1.0 + std::abs(d_left)));

    CHECK_THROWS_AS(
        layerheat::mirror_field(
            layerheat::LayeredMedium{{-0.5, 0.5}, {1.0, 2.0, 1.5}, 1},
            layerheat::ideal_contact(1.0, 2)),
        std::invalid_argument);
}

TEST_CASE("transform diagonalizes the elliptic operator") {
    const QuadratureSpec spec;

    // Homogeneous medium.
    const layerheat::LayeredMedium single =
        layerheat::homogeneous_medium(1.0, 1);
    const layerheat::InterfaceCoupling none;
    const ScalarField g = layerheat::mirror_field(single, none);
    CHECK(layerheat::diagonalization_residual(g, 1.0, 0.2, {0.1}, single,
                                              none, spec) <= 1e-4);

    // Two-layer ideal contact.
    const layerheat::TwoLayerIdealParams params{1.0, 1.5, 2.0};
    const layerheat::LayeredMedium medium = params.medium();
    const layerheat::InterfaceCoupling coupling = params.coupling();
    const ScalarField f = layerheat::mirror_field(medium, coupling);
    for (double lambda : {0.5, 1.0, 2.0}) {
        for (double x : {-0.3, 0.4}) {
            CHECK(layerheat::diagonalization_residual(
                      f, lambda, x, {0.2}, medium, coupling, spec) <= 1e-3);
        }
    }

    ScalarField zero;
    zero.pieces.push_back(
        {1, [](double, const std::vector<double>&) { return 0.0; }, -1.0,
         0.0, {-1.0}, {1.0}});
    CHECK(layerheat::diagonalization_residual(zero, 1.0, -0.5, {0.0}, medium,
                                              coupling, spec) == 0.0);
}

TEST_CASE("reduced homogeneous spectrum matches the shell projection") {
    const QuadratureSpec spec;
    const double sigma = 0.5;
    for (int m : {1, 2, 3}) {
        const double order = 0.5 * (m - 1);
        for (double rho : {0.7, 2.5}) {
            for (double x : {0.0, 0.3}) {
                const double reduced = layerheat::homogeneous_gaussian_spectrum(
                    rho, x, 1.0, sigma, sigma, m, spec);
                const double analytic =
                    kTwoPi / std::sqrt(rho) *
                    std::pow(sigma, m + 1) *
                    std::exp(-0.5 * sigma * sigma * rho * rho) *
                    std::pow(rho, order) *
                    layerheat::normalized_bessel(order, rho * std::abs(x));
                CHECK(std::abs(reduced - analytic) <=
                      1e-8 * (1.0 + std::abs(analytic)));
            }
        }
    }
}

TEST_CASE("reduced homogeneous spectrum equals the mixed transform") {
    const QuadratureSpec spec;
    const double sigma = 0.5;
    for (int m : {1, 2}) {
        const layerheat::LayeredMedium medium =
            layerheat::homogeneous_medium(1.0, m);
        const layerheat::InterfaceCoupling coupling;
        const ScalarField f = separable_gaussian_field(m, sigma, sigma);
        const std::vector<double> y(m, 0.0);
        for (double rho : {0.8, 1.9}) {
            const double reduced = layerheat::homogeneous_gaussian_spectrum(
                rho, 0.25, 1.0, sigma, sigma, m, spec);
            const Complex full =
                direct_nd(f, 0.25, y, rho, medium, coupling, spec);
            CHECK(std::abs(full.real() - reduced) <=
                  1e-9 * (1.0 + std::abs(reduced)));
            CHECK(std::abs(full.imag()) == 0.0);
        }
    }
}

TEST_CASE("weight mode constructors enforce the round trip") {
    const QuadratureSpec spec;

    const SpectralWeightMode good =
        SpectralWeightMode::calibrated(1.0 / kTwoPi, 1.5, 1, spec);
    CHECK(good.name() == "calibrated");
    CHECK(polar_constant(good, 1) == 1.0 / kTwoPi);
    CHECK(polar_exponent(good, 1) == 1.5);

    CHECK_THROWS_AS(SpectralWeightMode::calibrated(1.0 / kPi, 1.0, 1, spec),
                    std::invalid_argument);
    CHECK_THROWS_AS(SpectralWeightMode::calibrated(-1.0, 1.5, 1, spec),
                    std::invalid_argument);

    const SpectralWeightMode literal = SpectralWeightMode::literal();
    CHECK(literal.name() == "literal");
    CHECK(polar_constant(literal, 2) == 1.0 / kPi);
    CHECK(polar_exponent(literal, 2) == 1.5);

    const SpectralWeightMode fallback =
        SpectralWeightMode::calibrated_default();
    CHECK(polar_constant(fallback, 2) == 1.0 / kTwoPi);
    CHECK(polar_exponent(fallback, 2) == 2.0);
    CHECK(polar_exponent(fallback, 1) == 1.5);
}

TEST_CASE("weight calibration selects the reproducing measure") {
    const QuadratureSpec spec;
    for (int m : {1, 2}) {
        const layerheat::CalibrationReport report =
            layerheat::calibrate_weights(m, spec);
        CHECK(report.m == m);
        REQUIRE(report.fitted.size() == 3);
        REQUIRE(report.stated.size() == 3);
        CHECK(report.best_p == 0.5 * m + 1.0);
        CHECK(std::abs(report.best_c * kTwoPi - 1.0) <= 5e-3);
        CHECK(report.best_error <= 1e-3);
        // The sweep rejects the neighboring exponents.
        CHECK(!report.fitted[0].passes);
        CHECK(!report.fitted[2].passes);
        CHECK(report.fitted[1].passes);
        // None of the stated weights reproduces the data.
        for (const layerheat::CalibrationCandidate& cand : report.stated) {
            CHECK(!cand.passes);
            CHECK(cand.max_error > 0.05);
        }
        CHECK(report.summary().find("selected") != std::string::npos);
        const SpectralWeightMode mode = report.mode(spec);
        CHECK(mode.name() == "calibrated");
    }
}
