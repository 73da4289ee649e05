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

#include "layerheat/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace layerheat {

void QuadratureSpec::validate() const {
    if (finite_nodes < 2)
        throw std::invalid_argument("QuadratureSpec: finite_nodes must be >= 2");
    if (rho_nodes < 2)
        throw std::invalid_argument("QuadratureSpec: rho_nodes must be >= 2");
    if (alpha_nodes < 2)
        throw std::invalid_argument("QuadratureSpec: alpha_nodes must be >= 2");
    if (!(rho_truncation > 0.0))
        throw std::invalid_argument("QuadratureSpec: rho_truncation must be > 0");
    if (tau_schedule.empty())
        throw std::invalid_argument("QuadratureSpec: tau_schedule must be nonempty");
    double prev = std::numeric_limits<double>::infinity();
    for (double tau : tau_schedule) {
        if (!(tau > 0.0) || tau >= prev)
            throw std::invalid_argument(
                "QuadratureSpec: tau_schedule must be strictly decreasing and positive");
        prev = tau;
    }
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
        throw std::invalid_argument("QuadratureSpec: tolerances must be > 0");
}

namespace {

// Newton iteration on the Legendre polynomial, standard Golub-Welsch-free
// construction. Deterministic, so cached rules are reproducible.
std::unique_ptr<GaussRule> make_rule(int n) {
    auto rule = std::make_unique<GaussRule>();
    rule->nodes.resize(n);
    rule->weights.resize(n);
    const double pi = 3.14159265358979323846264338328;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                // One clean-up step after convergence.
                p0 = 1.0;
                p1 = x;
                for (int k = 2; k <= n; ++k) {
                    double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                pp = n * (x * p1 - p0) / (x * x - 1.0);
                break;
            }
        }
        rule->nodes[i] = -x;
        rule->nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule->weights[i] = w;
        rule->weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule->nodes[n / 2] = 0.0;
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<GaussRule>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_rule(n)).first;
    return *it->second;
}

GaussRule gauss_legendre_on(int n, double a, double b) {
    const GaussRule& base = gauss_legendre(n);
    GaussRule out;
    out.nodes.resize(n);
    out.weights.resize(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        out.nodes[i] = mid + half * base.nodes[i];
        out.weights[i] = half * base.weights[i];
    }
    return out;
}

namespace {

std::complex<double> composite_gauss(const Integrand& f, double a, double b,
                                     int panels, long* evaluations) {
    const GaussRule& rule = gauss_legendre(12);
    const double width = (b - a) / panels;
    std::complex<double> sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * width;
        const double mid = lo + 0.5 * width, half = 0.5 * width;
        std::complex<double> panel = 0.0;
        for (int i = 0; i < 12; ++i)
            panel += rule.weights[i] * f(mid + half * rule.nodes[i]);
        sum += half * panel;
    }
    *evaluations += 12L * panels;
    return sum;
}

}  // namespace

IntegrationResult integrate_finite(const Integrand& f, double a, double b,
                                   const QuadratureSpec& spec) {
    if (!(a < b))
        throw std::invalid_argument("integrate_finite: requires a < b");
    IntegrationResult res;
    int panels = (spec.finite_nodes + 11) / 12;
    if (panels < 1) panels = 1;
    std::complex<double> prev = composite_gauss(f, a, b, panels, &res.evaluations);
    const int max_refinements = 5;
    for (int level = 0; level < max_refinements; ++level) {
        panels *= 2;
        std::complex<double> cur = composite_gauss(f, a, b, panels, &res.evaluations);
        res.error_estimate = std::abs(cur - prev);
        res.value = cur;
        if (res.error_estimate <=
            std::max(spec.rel_tol * std::abs(cur), spec.abs_tol)) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    res.converged = false;
    return res;
}

IntegrationResult integrate_semiinfinite_damped(const Integrand& f,
                                                double damping_scale,
                                                const QuadratureSpec& spec) {
    if (!(damping_scale > 0.0))
        throw std::domain_error(
            "integrate_semiinfinite_damped: damping_scale must be > 0 "
            "(use abel_limit for vanishing damping)");
    const double cutoff =
        std::max(spec.rho_truncation, 6.0 / std::sqrt(damping_scale));
    QuadratureSpec inner = spec;
    inner.finite_nodes = spec.rho_nodes;
    return integrate_finite(f, 0.0, cutoff, inner);
}

AbelResult extrapolate_to_zero(
    const std::vector<std::pair<double, std::complex<double>>>& samples) {
    const int n = static_cast<int>(samples.size());
    if (n < 1) throw std::invalid_argument("extrapolate_to_zero: no samples");
    std::vector<std::complex<double>> diag(n);
    std::vector<double> taus(n);
    for (int i = 0; i < n; ++i) {
        taus[i] = samples[i].first;
        diag[i] = samples[i].second;
    }
    AbelResult out;
    std::complex<double> prev_best = diag[0];
    // Neville tableau evaluated at tau = 0, column by column.
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < n - j; ++i) {
            diag[i] = (taus[i] * diag[i + 1] - taus[i + j] * diag[i]) /
                      (taus[i] - taus[i + j]);
        }
        if (j == n - 1) out.spread = std::abs(diag[0] - prev_best);
        prev_best = diag[0];
    }
    out.value = diag[0];
    if (n == 1) out.spread = 0.0;
    return out;
}

AbelResult abel_limit(const std::function<std::complex<double>(double)>& family,
                      const std::vector<double>& schedule) {
    if (schedule.size() < 3)
        throw std::invalid_argument("abel_limit: schedule needs >= 3 entries");
    double prev = std::numeric_limits<double>::infinity();
    for (double tau : schedule) {
        if (!(tau > 0.0) || tau >= prev)
            throw std::invalid_argument(
                "abel_limit: schedule must be strictly decreasing and positive");
        prev = tau;
    }
    std::vector<std::pair<double, std::complex<double>>> samples;
    samples.reserve(schedule.size());
    for (double tau : schedule) {
        std::complex<double> v = family(tau);
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::runtime_error("abel_limit: non-finite family value at tau = " +
                                     std::to_string(tau));
        samples.emplace_back(tau, v);
    }
    return extrapolate_to_zero(samples);
}

}  // namespace layerheat
