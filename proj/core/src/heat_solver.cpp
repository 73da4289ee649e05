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

#include "layerheat/heat_solver.hpp"

#include <atomic>
#include <cmath>
#include <complex>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "layerheat/kernels.hpp"
#include "layerheat/special.hpp"

namespace layerheat {
namespace {

constexpr double kTwoPi = 6.28318530717958647692;

using Complex = std::complex<double>;

// Tensor-quadrature table of one initial-data piece against the closed
// kernel: data-weighted node weights plus the precomputed radii of the
// direct and (same-layer) image Bessel arguments.  Everything here is
// independent of the spectral radius and of t.
struct PieceTable {
    std::vector<double> weight;
    std::vector<double> r_minus;
    std::vector<double> r_plus;
    double coef_minus = 0.0;
    double coef_plus = 0.0;
};

// The mixed direct transform of a scenario's initial data at one probe,
// as a function of the spectral radius.  Homogeneous and two-layer
// ideal-contact media use precomputed tables (one normalized Bessel
// evaluation per node per call); other media fall back to direct_nd.
class SpectrumEvaluator {
public:
    SpectrumEvaluator(const HeatScenario& sc, double x, std::vector<double> y)
        : sc_(sc), x_(x), y_(std::move(y)) {
        const int m = sc.medium.transverse_dim;
        if (static_cast<int>(y_.size()) != m) {
            throw std::invalid_argument(
                "probe dimension does not match transverse_dim");
        }
        layer_ = layer_index(sc.medium, x_);
        order_ = 0.5 * (m - 1);
        TwoLayerIdealParams params;
        const bool two_layer =
            is_two_layer_ideal(sc.medium, sc.coupling, &params);
        const bool homogeneous = sc.medium.interface_count() == 0;
        tabulated_ = two_layer || homogeneous;
        if (!tabulated_) {
            return;
        }
        const double norm = std::pow(kTwoPi, -0.5 * m);
        tables_.reserve(sc.initial.pieces.size());
        for (const FieldPiece& piece : sc.initial.pieces) {
            if (piece.layer < 1 || piece.layer > sc.medium.layer_count()) {
                throw std::out_of_range("piece layer outside the medium");
            }
            PieceTable table;
            if (homogeneous) {
                const double a = sc.medium.diffusivity_coeffs.front();
                table.coef_minus = norm / a;
            } else if (piece.layer == layer_) {
                const double a = params.a(layer_);
                const double delta0 = params.delta0();
                table.coef_minus = norm / a;
                table.coef_plus = norm / a *
                                  (layer_ == 1 ? delta0 - 1.0 : 1.0 - delta0) /
                                  (1.0 + delta0);
            } else if (layer_ == 1) {
                table.coef_minus =
                    norm * 2.0 / (params.a2 * (1.0 + params.delta0()));
            } else {
                table.coef_minus = norm * 2.0 * params.delta0() /
                                   (params.a1 * (1.0 + params.delta0()));
            }
            fill_table(piece, homogeneous, params, table);
            tables_.push_back(std::move(table));
        }
    }

    int layer() const { return layer_; }

    Complex operator()(double rho) const {
        if (!tabulated_) {
            return direct_nd(sc_.initial, x_, y_, rho, sc_.medium,
                             sc_.coupling, sc_.spec);
        }
        double sum = 0.0;
        for (const PieceTable& table : tables_) {
            double direct = 0.0;
            for (std::size_t i = 0; i < table.weight.size(); ++i) {
                direct += table.weight[i] *
                          normalized_bessel(order_, rho * table.r_minus[i]);
            }
            sum += table.coef_minus * direct;
            if (!table.r_plus.empty()) {
                double image = 0.0;
                for (std::size_t i = 0; i < table.weight.size(); ++i) {
                    image += table.weight[i] *
                             normalized_bessel(order_, rho * table.r_plus[i]);
                }
                sum += table.coef_plus * image;
            }
        }
        return Complex(
            std::sqrt(kTwoPi) * std::pow(rho, order_ - 0.5) * sum, 0.0);
    }

private:
    void fill_table(const FieldPiece& piece, bool homogeneous,
                    const TwoLayerIdealParams& params, PieceTable& table) {
        if (piece.y_lo.size() != y_.size() || piece.y_hi.size() != y_.size()) {
            throw std::invalid_argument(
                "piece transverse box dimension mismatch");
        }
        if (!piece.f) {
            throw std::invalid_argument("piece callable is empty");
        }
        if (!(piece.x_lo <= piece.x_hi)) {
            throw std::invalid_argument("piece has x_lo > x_hi");
        }
        const bool image = !homogeneous && piece.layer == layer_;
        double a_field = 0.0;
        double a_source = 0.0;
        if (homogeneous) {
            a_field = sc_.medium.diffusivity_coeffs.front();
            a_source = a_field;
        } else {
            a_field = params.a(layer_);
            a_source = params.a(piece.layer);
        }
        const GaussRule axial = gauss_legendre_on(
            sc_.spec.finite_nodes, piece.x_lo, piece.x_hi);
        std::vector<GaussRule> transverse;
        transverse.reserve(y_.size());
        for (std::size_t d = 0; d < y_.size(); ++d) {
            if (!(piece.y_lo[d] <= piece.y_hi[d])) {
                throw std::invalid_argument("piece has y_lo > y_hi");
            }
            transverse.push_back(gauss_legendre_on(
                sc_.spec.finite_nodes, piece.y_lo[d], piece.y_hi[d]));
        }
        std::vector<std::size_t> index(y_.size(), 0);
        std::vector<double> eta(y_.size(), 0.0);
        const std::size_t entries =
            axial.nodes.size() *
            [&] {
                std::size_t count = 1;
                for (const GaussRule& rule : transverse) {
                    count *= rule.nodes.size();
                }
                return count;
            }();
        table.weight.reserve(entries);
        table.r_minus.reserve(entries);
        if (image) {
            table.r_plus.reserve(entries);
        }
        while (true) {
            double weight_t = 1.0;
            double s2 = 0.0;
            for (std::size_t d = 0; d < y_.size(); ++d) {
                eta[d] = transverse[d].nodes[index[d]];
                weight_t *= transverse[d].weights[index[d]];
                const double diff = y_[d] - eta[d];
                s2 += diff * diff;
            }
            for (std::size_t i = 0; i < axial.nodes.size(); ++i) {
                const double xi = axial.nodes[i];
                const double value = piece.f(xi, eta);
                table.weight.push_back(axial.weights[i] * weight_t * value);
                const double dx = piece.layer == layer_
                                      ? (x_ - xi) / a_field
                                      : x_ / a_field - xi / a_source;
                table.r_minus.push_back(std::sqrt(dx * dx + s2));
                if (image) {
                    const double dp = (x_ + xi) / a_field;
                    table.r_plus.push_back(std::sqrt(dp * dp + s2));
                }
            }
            std::size_t d = 0;
            while (d < y_.size()) {
                if (++index[d] < transverse[d].nodes.size()) {
                    break;
                }
                index[d] = 0;
                ++d;
            }
            if (d == y_.size()) {
                break;
            }
        }
    }

    const HeatScenario& sc_;
    double x_;
    std::vector<double> y_;
    int layer_ = 1;
    double order_ = 0.0;
    bool tabulated_ = false;
    std::vector<PieceTable> tables_;
};

void check_scenario_medium(const HeatScenario& sc) {
    const std::vector<std::string> problems =
        validate(sc.medium, sc.coupling);
    if (!problems.empty()) {
        throw std::invalid_argument("invalid medium: " + problems.front());
    }
    sc.spec.validate();
}

// One damped spectral integral of the solution formula at fixed t.
Complex solution_integral(
    const std::function<Complex(double)>& spectrum, double t, double constant,
    double exponent, const QuadratureSpec& spec) {
    return constant * integrate_semiinfinite_damped(
                          [&](double rho) {
                              return std::pow(rho, exponent) *
                                     std::exp(-rho * rho * t) * spectrum(rho);
                          },
                          t, spec)
                          .value;
}

}  // namespace

HeatScenario make_scenario(LayeredMedium medium, InterfaceCoupling coupling,
                           std::vector<GaussianBump> bumps,
                           std::vector<double> times,
                           std::vector<ProbePoint> probes,
                           SpectralWeightMode mode, QuadratureSpec spec) {
    HeatScenario sc;
    sc.medium = std::move(medium);
    sc.coupling = std::move(coupling);
    sc.initial = gaussian_bumps(sc.medium, bumps);
    sc.bumps = std::move(bumps);
    sc.times = std::move(times);
    sc.probes = std::move(probes);
    sc.mode = mode;
    sc.spec = spec;
    return sc;
}

std::vector<std::string> validate_scenario(const HeatScenario& sc) {
    std::vector<std::string> problems = validate(sc.medium, sc.coupling);
    try {
        sc.spec.validate();
    } catch (const std::exception& error) {
        problems.emplace_back(std::string("quadrature spec: ") + error.what());
    }
    const int m = sc.medium.transverse_dim;
    for (std::size_t i = 0; i < sc.times.size(); ++i) {
        if (!std::isfinite(sc.times[i]) || sc.times[i] <= 0.0) {
            std::ostringstream message;
            message << "time " << i + 1 << ": must be positive and finite";
            problems.push_back(message.str());
        }
    }
    for (std::size_t i = 0; i < sc.probes.size(); ++i) {
        const ProbePoint& probe = sc.probes[i];
        std::ostringstream prefix;
        prefix << "probe " << i + 1 << ": ";
        if (static_cast<int>(probe.y.size()) != m) {
            problems.push_back(prefix.str() +
                               "transverse dimension mismatch");
            continue;
        }
        if (!std::isfinite(probe.x)) {
            problems.push_back(prefix.str() + "x must be finite");
            continue;
        }
        try {
            layer_index(sc.medium, probe.x);
        } catch (const std::invalid_argument&) {
            problems.push_back(prefix.str() + "x lies on an interface");
        }
    }
    for (std::size_t i = 0; i < sc.initial.pieces.size(); ++i) {
        const FieldPiece& piece = sc.initial.pieces[i];
        std::ostringstream prefix;
        prefix << "initial piece " << i + 1 << ": ";
        if (piece.layer < 1 || piece.layer > sc.medium.layer_count()) {
            problems.push_back(prefix.str() + "layer outside the medium");
        }
        if (!piece.f) {
            problems.push_back(prefix.str() + "callable is empty");
        }
        if (!(piece.x_lo <= piece.x_hi) || !std::isfinite(piece.x_lo) ||
            !std::isfinite(piece.x_hi)) {
            problems.push_back(prefix.str() + "axial box is not an interval");
        }
        if (piece.y_lo.size() != static_cast<std::size_t>(m) ||
            piece.y_hi.size() != static_cast<std::size_t>(m)) {
            problems.push_back(prefix.str() +
                               "transverse box dimension mismatch");
        }
    }
    if (!sc.bumps.empty()) {
        if (sc.bumps.size() != sc.initial.pieces.size()) {
            problems.emplace_back(
                "bump list and initial pieces disagree in size; build the "
                "scenario with make_scenario");
        } else {
            for (std::size_t i = 0; i < sc.bumps.size(); ++i) {
                if (sc.bumps[i].layer != sc.initial.pieces[i].layer) {
                    std::ostringstream message;
                    message << "bump " << i + 1
                            << ": layer disagrees with its initial piece";
                    problems.push_back(message.str());
                }
            }
        }
    }
    return problems;
}

double solve_point(const HeatScenario& sc, double t, double x,
                   const std::vector<double>& y) {
    check_scenario_medium(sc);
    if (!std::isfinite(t) || t <= 0.0) {
        throw std::invalid_argument("t must be positive and finite");
    }
    const int m = sc.medium.transverse_dim;
    const double constant = polar_constant(sc.mode, m);
    const double exponent = polar_exponent(sc.mode, m);
    const SpectrumEvaluator spectrum(sc, x, y);
    return solution_integral([&](double rho) { return spectrum(rho); }, t,
                             constant, exponent, sc.spec)
        .real();
}

std::vector<GridSample> solve_grid(const HeatScenario& sc) {
    const std::vector<std::string> problems = validate_scenario(sc);
    if (!problems.empty()) {
        throw std::invalid_argument("invalid scenario: " + problems.front());
    }
    const int m = sc.medium.transverse_dim;
    const double constant = polar_constant(sc.mode, m);
    const double exponent = polar_exponent(sc.mode, m);
    const std::size_t probe_count = sc.probes.size();
    const std::size_t time_count = sc.times.size();
    std::vector<std::vector<double>> values(
        probe_count, std::vector<double>(time_count, 0.0));
    std::vector<int> layers(probe_count, 1);

    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::exception_ptr failure;
    auto worker = [&]() {
        while (true) {
            const std::size_t p = next.fetch_add(1);
            if (p >= probe_count) {
                break;
            }
            try {
                const ProbePoint& probe = sc.probes[p];
                const SpectrumEvaluator spectrum(sc, probe.x, probe.y);
                layers[p] = spectrum.layer();
                std::map<double, Complex> memo;
                auto cached = [&](double rho) {
                    auto it = memo.find(rho);
                    if (it != memo.end()) {
                        return it->second;
                    }
                    const Complex value = spectrum(rho);
                    memo.emplace(rho, value);
                    return value;
                };
                for (std::size_t ti = 0; ti < time_count; ++ti) {
                    values[p][ti] =
                        solution_integral(cached, sc.times[ti], constant,
                                          exponent, sc.spec)
                            .real();
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
            }
        }
    };

    const unsigned hardware = std::thread::hardware_concurrency();
    const std::size_t worker_count = std::min<std::size_t>(
        probe_count, hardware == 0 ? 1 : hardware);
    if (worker_count <= 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(worker_count);
        for (std::size_t w = 0; w < worker_count; ++w) {
            threads.emplace_back(worker);
        }
        for (std::thread& thread : threads) {
            thread.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    std::vector<GridSample> samples;
    samples.reserve(probe_count * time_count);
    for (std::size_t ti = 0; ti < time_count; ++ti) {
        for (std::size_t p = 0; p < probe_count; ++p) {
            GridSample sample;
            sample.t = sc.times[ti];
            sample.x = sc.probes[p].x;
            sample.y = sc.probes[p].y;
            sample.layer = layers[p];
            sample.value = values[p][ti];
            samples.push_back(std::move(sample));
        }
    }
    return samples;
}

double reproduce_initial(const HeatScenario& sc, double x,
                         const std::vector<double>& y, double* spread) {
    check_scenario_medium(sc);
    const int m = sc.medium.transverse_dim;
    const double constant = polar_constant(sc.mode, m);
    const double exponent = polar_exponent(sc.mode, m);
    const SpectrumEvaluator spectrum(sc, x, y);
    std::map<double, Complex> memo;
    auto cached = [&](double rho) {
        auto it = memo.find(rho);
        if (it != memo.end()) {
            return it->second;
        }
        const Complex value = spectrum(rho);
        memo.emplace(rho, value);
        return value;
    };
    auto family = [&](double t) {
        return solution_integral(cached, t, constant, exponent, sc.spec);
    };
    const AbelResult limit = abel_limit(family, sc.spec.tau_schedule);
    if (spread != nullptr) {
        *spread = limit.spread;
    }
    return limit.value.real();
}

}  // namespace layerheat
