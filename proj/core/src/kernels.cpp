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

#include "layerheat/kernels.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "layerheat/special.hpp"

namespace layerheat {

namespace {

using Complex = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;

void check_query(const KernelQuery& q, int layer_count) {
    if (!(q.rho > 0.0) || !std::isfinite(q.rho)) {
        throw std::invalid_argument("kernel query: rho must be positive");
    }
    if (!(q.s >= 0.0)) {
        throw std::invalid_argument("kernel query: s must be >= 0");
    }
    if (q.m < 1) {
        throw std::invalid_argument(
            "kernel query: transverse dimension must be >= 1");
    }
    if (q.k < 1 || q.k > layer_count || q.j < 1 || q.j > layer_count) {
        throw std::out_of_range("kernel query: layer ids (" +
                                std::to_string(q.k) + ", " +
                                std::to_string(q.j) +
                                ") outside 1.." + std::to_string(layer_count));
    }
}

int even_node_count(int requested) {
    int n = requested < 2 ? 2 : requested;
    return n % 2 == 0 ? n : n + 1;
}

// J_{(m-1)/2}(rho R) / R^{(m-1)/2}, regular at R = 0.
double radial_profile(int m, double rho, double radius) {
    const double order = 0.5 * (m - 1);
    return std::pow(rho, order) * normalized_bessel(order, rho * radius);
}

}  // namespace

double transverse_kernel_factor(int m, double rho, double alpha, double s) {
    const double sa = std::sin(alpha);
    const double z = rho * sa * s;
    if (m == 1) {
        return std::sqrt(2.0 / (kPi * rho)) * std::cos(z);
    }
    const double order = 0.5 * (m - 2);
    return std::pow(sa, m - 1) * std::pow(rho, order) *
           normalized_bessel(order, z);
}

std::complex<double> phi_kj_integral(const KernelQuery& q,
                                     const PairProvider& pair,
                                     const QuadratureSpec& spec) {
    check_query(q, pair.layer_count());
    spec.validate();

    const GaussRule& rule = gauss_legendre(even_node_count(spec.alpha_nodes));
    Complex sum(0.0, 0.0);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double alpha = 0.5 * kPi * (rule.nodes[i] + 1.0);
        const double weight = 0.5 * kPi * rule.weights[i];
        const double lambda = q.rho * std::cos(alpha);
        Complex primal;
        Complex dual;
        try {
            primal = pair.primal(q.k, q.x, lambda);
            dual = pair.dual(q.j, q.xi, lambda);
        } catch (const std::exception& e) {
            throw std::runtime_error(
                "kernel integrand failed at angular node " +
                std::to_string(i) + " (axial frequency " +
                std::to_string(lambda) + "): " + e.what());
        }
        sum += weight * transverse_kernel_factor(q.m, q.rho, alpha, q.s) *
               primal * dual;
    }
    return sum;
}

std::complex<double> phi_kj_integral(const KernelQuery& q,
                                     const LayeredMedium& medium,
                                     const InterfaceCoupling& coupling,
                                     const QuadratureSpec& spec) {
    TwoLayerIdealParams params;
    if (is_two_layer_ideal(medium, coupling, &params)) {
        ClosedTwoLayerPairProvider pair(params);
        return phi_kj_integral(q, pair, spec);
    }
    TransferPairProvider pair(medium, coupling);
    return phi_kj_integral(q, pair, spec);
}

double phi_kj_closed_two_layer(const KernelQuery& q,
                               const TwoLayerIdealParams& params) {
    check_query(q, 2);
    const double d0 = params.delta0();
    const double bridge =
        std::sqrt(2.0 * kPi / q.rho) * 0.5 * (1.0 + d0) * (1.0 + d0);
    const double a1 = params.a1;
    const double a2 = params.a2;

    if (q.k == 1 && q.j == 1) {
        const double r_diff = std::hypot((q.x - q.xi) / a1, q.s);
        const double r_image = std::hypot((q.x + q.xi) / a1, q.s);
        return bridge * ((1.0 + d0) / a1 * radial_profile(q.m, q.rho, r_diff) +
                         (d0 - 1.0) / a1 * radial_profile(q.m, q.rho, r_image));
    }
    if (q.k == 2 && q.j == 2) {
        const double r_diff = std::hypot((q.x - q.xi) / a2, q.s);
        const double r_image = std::hypot((q.x + q.xi) / a2, q.s);
        return bridge * ((1.0 + d0) / a2 * radial_profile(q.m, q.rho, r_diff) +
                         (1.0 - d0) / a2 * radial_profile(q.m, q.rho, r_image));
    }
    if (q.k == 2 && q.j == 1) {
        const double radius = std::hypot(q.x / a2 - q.xi / a1, q.s);
        return bridge * (2.0 * d0 / a1) * radial_profile(q.m, q.rho, radius);
    }
    const double radius = std::hypot(q.x / a1 - q.xi / a2, q.s);
    return bridge * (2.0 / a2) * radial_profile(q.m, q.rho, radius);
}

double phi_kj_closed_spectral(const KernelQuery& q,
                              const TwoLayerIdealParams& params) {
    const double d0 = params.delta0();
    const double one = 1.0 + d0;
    return 2.0 / (one * one * one) * phi_kj_closed_two_layer(q, params);
}

double kernel_homogeneous(const KernelQuery& q, double a) {
    check_query(q, 1);
    if (!(a > 0.0)) {
        throw std::invalid_argument("kernel_homogeneous: a must be positive");
    }
    const double radius = std::hypot((q.x - q.xi) / a, q.s);
    return std::sqrt(2.0 * kPi / q.rho) / a *
           radial_profile(q.m, q.rho, radius);
}

std::pair<double, double> plane_wave_identity_check(
    double rho, const std::vector<double>& y, const QuadratureSpec& spec) {
    spec.validate();
    const int m = static_cast<int>(y.size());
    if (m != 2 && m != 3) {
        throw std::invalid_argument(
            "plane_wave_identity_check supports dimensions 2 and 3");
    }
    if (!(rho > 0.0)) {
        throw std::invalid_argument(
            "plane_wave_identity_check: rho must be positive");
    }
    double norm_sq = 0.0;
    for (double c : y) {
        norm_sq += c * c;
    }
    const double norm = std::sqrt(norm_sq);
    if (!(norm > 0.0)) {
        throw std::invalid_argument(
            "plane_wave_identity_check: |y| must be positive");
    }

    const double order = 0.5 * (m - 2);
    const double lhs = std::pow(rho, 0.5 * m) * std::pow(rho, order) *
                       normalized_bessel(order, rho * norm);

    // Node counts comfortably above the bandwidth rho * |y| of the
    // oscillatory phase.
    const int oscillation = static_cast<int>(std::ceil(rho * norm));
    double surface = 0.0;
    if (m == 2) {
        const int n = std::max(96, 8 * oscillation + 32);
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            const double theta = 2.0 * kPi * i / n;
            const double dot =
                rho * (y[0] * std::cos(theta) + y[1] * std::sin(theta));
            acc += std::cos(dot);
        }
        surface = acc * (2.0 * kPi * rho / n);
    } else {
        const int n_polar = std::max(48, 2 * oscillation + 24);
        const int n_azimuth = 2 * n_polar;
        const GaussRule& rule = gauss_legendre(n_polar);
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double u = rule.nodes[i];
            const double ring = std::sqrt(std::max(0.0, 1.0 - u * u));
            double ring_acc = 0.0;
            for (int p = 0; p < n_azimuth; ++p) {
                const double phi = 2.0 * kPi * p / n_azimuth;
                const double dot = rho * (y[0] * ring * std::cos(phi) +
                                          y[1] * ring * std::sin(phi) +
                                          y[2] * u);
                ring_acc += std::cos(dot);
            }
            acc += rule.weights[i] * ring_acc * (2.0 * kPi / n_azimuth);
        }
        surface = acc * rho * rho;
    }

    const double rhs = std::pow(2.0 * kPi, -0.5 * m) * surface;
    return {lhs, rhs};
}

double laplacian_eigen_check(double rho, double alpha,
                             const std::vector<double>& y,
                             const std::vector<double>& eta, int m,
                             const QuadratureSpec& spec) {
    spec.validate();
    if (m < 1 || static_cast<int>(y.size()) != m ||
        static_cast<int>(eta.size()) != m) {
        throw std::invalid_argument(
            "laplacian_eigen_check: y and eta must have size m >= 1");
    }
    const double freq = rho * std::sin(alpha);
    if (m == 1 && freq == 0.0) {
        throw std::invalid_argument(
            "laplacian_eigen_check: the one-dimensional factor is singular "
            "at sin(alpha) = 0");
    }

    const double order = 0.5 * (m - 2);
    auto factor = [&](const std::vector<double>& point) {
        double dist_sq = 0.0;
        for (int i = 0; i < m; ++i) {
            const double d = y[static_cast<std::size_t>(i)] -
                             point[static_cast<std::size_t>(i)];
            dist_sq += d * d;
        }
        const double dist = std::sqrt(dist_sq);
        if (m == 1) {
            return std::sqrt(2.0 / (kPi * freq)) * std::cos(freq * dist);
        }
        return std::pow(freq, order) * normalized_bessel(order, freq * dist);
    };

    const double h = 1e-3;
    const double center = factor(eta);
    double laplacian = 0.0;
    std::vector<double> probe = eta;
    for (int i = 0; i < m; ++i) {
        probe[static_cast<std::size_t>(i)] += h;
        const double up = factor(probe);
        probe[static_cast<std::size_t>(i)] -= 2.0 * h;
        const double down = factor(probe);
        probe[static_cast<std::size_t>(i)] += h;
        laplacian += (up - 2.0 * center + down) / (h * h);
    }
    return std::abs(laplacian + freq * freq * center);
}

}  // namespace layerheat
