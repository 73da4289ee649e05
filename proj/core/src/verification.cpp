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

#include "layerheat/verification.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "layerheat/fields.hpp"
#include "layerheat/kernels.hpp"
#include "layerheat/transforms.hpp"

namespace layerheat {
namespace {

std::string format_point(double x, const std::vector<double>& y) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "x=%g y=(", x);
    std::string out = buf;
    for (std::size_t i = 0; i < y.size(); ++i) {
        std::snprintf(buf, sizeof(buf), i + 1 < y.size() ? "%g," : "%g", y[i]);
        out += buf;
    }
    out += ")";
    return out;
}

std::string format_tag(const char* fmt, double a, double b) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), fmt, a, b);
    return buf;
}

CheckRow make_row(std::string suite, std::string check, double value,
                  double threshold) {
    CheckRow row;
    row.suite = std::move(suite);
    row.check = std::move(check);
    row.value = value;
    row.threshold = threshold;
    row.pass = std::isfinite(value) && value <= threshold;
    return row;
}

// Caps the axial node count so the tensor-product transverse quadrature
// inside the mixed transform stays tractable for higher transverse_dim.
QuadratureSpec capped_spec(const QuadratureSpec& spec, int m) {
    QuadratureSpec local = spec;
    if (m == 2) local.finite_nodes = std::min(local.finite_nodes, 64);
    if (m >= 3) local.finite_nodes = std::min(local.finite_nodes, 36);
    return local;
}

}  // namespace

bool all_pass(const std::vector<CheckRow>& rows) {
    if (rows.empty()) return false;
    return std::all_of(rows.begin(), rows.end(),
                       [](const CheckRow& r) { return r.pass; });
}

std::vector<CheckRow> roundtrip_suite(const HeatScenario& sc,
                                      double threshold) {
    std::vector<CheckRow> rows;
    double scale = 0.0;
    std::vector<double> expected(sc.probes.size(), 0.0);
    for (std::size_t i = 0; i < sc.probes.size(); ++i) {
        const ProbePoint& p = sc.probes[i];
        int layer = layer_index(sc.medium, p.x);
        expected[i] = sc.initial.value(layer, p.x, p.y);
        scale = std::max(scale, std::abs(expected[i]));
    }
    if (scale == 0.0) scale = 1.0;
    for (std::size_t i = 0; i < sc.probes.size(); ++i) {
        const ProbePoint& p = sc.probes[i];
        double recon = reproduce_initial(sc, p.x, p.y);
        double denom = std::max(std::abs(expected[i]), 1e-2 * scale);
        rows.push_back(make_row("roundtrip", format_point(p.x, p.y),
                                std::abs(recon - expected[i]) / denom,
                                threshold));
    }
    return rows;
}

std::vector<CheckRow> diagonalization_suite(const LayeredMedium& medium,
                                            const InterfaceCoupling& coupling,
                                            const QuadratureSpec& spec,
                                            double threshold) {
    const int m = medium.transverse_dim;
    const QuadratureSpec local = capped_spec(spec, m);
    const ScalarField f = mirror_field(medium, coupling);
    const double c =
        medium.interface_count() == 1 ? medium.interfaces[0] : 0.0;
    const double anchors[2] = {c - 0.3, c + 0.4};
    std::vector<double> y(static_cast<std::size_t>(m), 0.0);
    y[0] = 0.2;
    std::vector<CheckRow> rows;
    for (double lambda : {0.5, 1.0, 2.0}) {
        for (double x : anchors) {
            double r = diagonalization_residual(f, lambda, x, y, medium,
                                                coupling, local);
            rows.push_back(make_row(
                "diagonalization",
                format_tag("lambda=%g x=%g", lambda, x), r, threshold));
        }
    }
    return rows;
}

std::vector<CheckRow> kernel_suite(const LayeredMedium& medium,
                                   const InterfaceCoupling& coupling,
                                   const QuadratureSpec& spec) {
    std::vector<CheckRow> rows;
    TwoLayerIdealParams params;
    const bool two_layer = is_two_layer_ideal(medium, coupling, &params);
    if (!two_layer && medium.interface_count() != 0) {
        throw std::invalid_argument(
            "kernel_suite: closed kernel forms exist only for a homogeneous "
            "medium or the two-layer ideal-contact configuration");
    }
    const double c = 0.0;

    const double offsets[3] = {0.2, 0.6, 1.2};
    const double s_grid[3] = {0.3, 0.8, 1.5};
    for (int m : {1, 2, 3}) {
        for (double rho : {0.5, 2.0}) {
            double worst = 0.0;
            const int layers = two_layer ? 2 : 1;
            for (int k = 1; k <= layers; ++k) {
                for (int j = 1; j <= layers; ++j) {
                    for (double dx : offsets) {
                        for (double dxi : offsets) {
                            for (double s : s_grid) {
                                KernelQuery q;
                                q.rho = rho;
                                q.x = k == 1 ? c - dx : c + dx;
                                q.xi = j == 1 ? c - dxi : c + dxi;
                                q.s = s;
                                q.k = k;
                                q.j = j;
                                q.m = m;
                                double closed =
                                    two_layer
                                        ? phi_kj_closed_two_layer(q, params)
                                        : kernel_homogeneous(q, medium.a(1));
                                std::complex<double> integral =
                                    phi_kj_integral(q, medium, coupling,
                                                    spec);
                                double err = std::abs(integral - closed) /
                                             (1.0 + std::abs(closed));
                                worst = std::max(worst, err);
                            }
                        }
                    }
                }
            }
            rows.push_back(make_row(
                "kernels",
                format_tag("cross-representation m=%g rho=%g",
                           static_cast<double>(m), rho),
                worst, 1e-6));
        }
    }

    for (int m : {2, 3}) {
        for (double rho : {0.5, 1.0, 3.0}) {
            double worst = 0.0;
            for (double r : {0.5, 1.0, 5.0}) {
                std::vector<double> y(static_cast<std::size_t>(m), 0.0);
                y[0] = r;
                auto [lhs, rhs] = plane_wave_identity_check(rho, y, spec);
                double err = std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
                worst = std::max(worst, err);
            }
            rows.push_back(make_row(
                "kernels",
                format_tag("plane-wave m=%g rho=%g",
                           static_cast<double>(m), rho),
                worst, 1e-8));
        }
    }
    return rows;
}

}  // namespace layerheat
