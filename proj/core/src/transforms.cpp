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

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "layerheat/kernels.hpp"
#include "layerheat/special.hpp"

namespace layerheat {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;

using Complex = std::complex<double>;

void require_finite(double value, const char* what) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument(std::string(what) + " must be finite");
    }
}

// Visits every node of the tensor product of the given one-dimensional
// rules, passing the node coordinates and the product weight.
void visit_tensor(
    const std::vector<GaussRule>& rules,
    const std::function<void(const std::vector<double>&, double)>& visit) {
    const std::size_t dims = rules.size();
    if (dims == 0) {
        return;
    }
    std::vector<std::size_t> index(dims, 0);
    std::vector<double> node(dims, 0.0);
    while (true) {
        double weight = 1.0;
        for (std::size_t d = 0; d < dims; ++d) {
            node[d] = rules[d].nodes[index[d]];
            weight *= rules[d].weights[index[d]];
        }
        visit(node, weight);
        std::size_t d = 0;
        while (d < dims) {
            if (++index[d] < rules[d].nodes.size()) {
                break;
            }
            index[d] = 0;
            ++d;
        }
        if (d == dims) {
            break;
        }
    }
}

// The eigenfunction convention matching the closed kernel formulas: the
// two-layer ideal-contact pair in its (1 + delta0) amplitude form, the
// transfer-matrix pair for every other medium.
std::unique_ptr<PairProvider> printed_pair_provider(
    const LayeredMedium& medium, const InterfaceCoupling& coupling) {
    TwoLayerIdealParams params;
    if (is_two_layer_ideal(medium, coupling, &params)) {
        return std::make_unique<ClosedTwoLayerPairProvider>(params);
    }
    return std::make_unique<TransferPairProvider>(medium, coupling);
}

void check_medium(const LayeredMedium& medium,
                  const InterfaceCoupling& coupling) {
    const std::vector<std::string> problems = validate(medium, coupling);
    if (!problems.empty()) {
        throw std::invalid_argument("invalid medium: " + problems.front());
    }
}

// Memoizes an expensive spectral callable across the Abel regularization
// family; every tau pass hits the same quadrature nodes.
class SpectralCache {
public:
    explicit SpectralCache(std::function<Complex(double)> f)
        : f_(std::move(f)) {}

    Complex operator()(double lambda) {
        auto it = values_.find(lambda);
        if (it != values_.end()) {
            return it->second;
        }
        const Complex value = f_(lambda);
        values_.emplace(lambda, value);
        return value;
    }

private:
    std::function<Complex(double)> f_;
    std::map<double, Complex> values_;
};

// Round-trip error of the measure c * rho^p d rho on the homogeneous
// medium: separable Gaussian data, two axial probes, reduced radial
// quadrature for the spectrum.
double calibration_roundtrip_error(double c, double p, int m,
                                   const QuadratureSpec& spec) {
    const double sigma = 0.5;
    const double probes[] = {0.0, 0.3};
    double worst = 0.0;
    for (double x : probes) {
        std::map<double, double> memo;
        auto spectrum = [&](double rho) {
            auto it = memo.find(rho);
            if (it != memo.end()) {
                return it->second;
            }
            const double value =
                homogeneous_gaussian_spectrum(rho, x, 1.0, sigma, sigma, m,
                                              spec);
            memo.emplace(rho, value);
            return value;
        };
        const double damping = 0.5 * sigma * sigma;
        const Complex integral =
            integrate_semiinfinite_damped(
                [&](double rho) {
                    return Complex(std::pow(rho, p) * spectrum(rho), 0.0);
                },
                damping, spec)
                .value;
        const double target = std::exp(-x * x / (2.0 * sigma * sigma));
        worst = std::max(worst, std::abs(c * integral.real() - target));
    }
    return worst;
}

bool calibrated_measure_ok(double c, double p, int m,
                           const QuadratureSpec& spec) {
    static std::mutex mutex;
    static std::map<std::tuple<double, double, int>, bool> cache;
    const std::tuple<double, double, int> key(c, p, m);
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(key);
        if (it != cache.end()) {
            return it->second;
        }
    }
    const bool ok = calibration_roundtrip_error(c, p, m, spec) <= 2e-3;
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(key, ok);
    return ok;
}

std::string format_measure(double c, double p) {
    std::ostringstream out;
    out << std::setprecision(6) << std::scientific << c << " * rho^"
        << std::defaultfloat << std::setprecision(3) << p << " d rho";
    return out.str();
}

}  // namespace

SpectralWeightMode SpectralWeightMode::literal() {
    SpectralWeightMode mode;
    mode.kind = Kind::literal;
    return mode;
}

SpectralWeightMode SpectralWeightMode::calibrated_default() {
    return SpectralWeightMode{};
}

SpectralWeightMode SpectralWeightMode::calibrated(double c, double p, int m,
                                                  const QuadratureSpec& spec) {
    require_finite(c, "measure constant");
    require_finite(p, "measure exponent");
    if (c <= 0.0 || p < 0.0) {
        throw std::invalid_argument(
            "calibrated measure needs a positive constant and a nonnegative "
            "exponent");
    }
    if (m < 1) {
        throw std::invalid_argument("transverse dimension must be >= 1");
    }
    spec.validate();
    if (!calibrated_measure_ok(c, p, m, spec)) {
        std::ostringstream message;
        message << "measure " << format_measure(c, p)
                << " fails the homogeneous round trip for m = " << m;
        throw std::invalid_argument(message.str());
    }
    SpectralWeightMode mode;
    mode.kind = Kind::calibrated;
    mode.c = c;
    mode.p = p;
    return mode;
}

std::string SpectralWeightMode::name() const {
    return kind == Kind::literal ? "literal" : "calibrated";
}

double polar_constant(const SpectralWeightMode& mode, int m) {
    if (m < 1) {
        throw std::invalid_argument("transverse dimension must be >= 1");
    }
    if (mode.kind == SpectralWeightMode::Kind::literal) {
        return 1.0 / kPi;
    }
    return mode.c > 0.0 ? mode.c : 1.0 / kTwoPi;
}

double polar_exponent(const SpectralWeightMode& mode, int m) {
    if (m < 1) {
        throw std::invalid_argument("transverse dimension must be >= 1");
    }
    if (mode.kind == SpectralWeightMode::Kind::literal) {
        return 0.5 * (m + 1);
    }
    return mode.p >= 0.0 ? mode.p : 0.5 * m + 1.0;
}

std::complex<double> classic_direct(const TransverseField& f,
                                    const std::vector<double>& y,
                                    double lambda,
                                    const QuadratureSpec& spec) {
    spec.validate();
    const int m = static_cast<int>(y.size());
    if (m < 1) {
        throw std::invalid_argument(
            "classic_direct needs at least one transverse coordinate");
    }
    if (f.lo.size() != y.size() || f.hi.size() != y.size()) {
        throw std::invalid_argument(
            "transverse box dimension does not match the evaluation point");
    }
    if (!f.f) {
        throw std::invalid_argument("transverse field callable is empty");
    }
    require_finite(lambda, "lambda");
    if (lambda <= 0.0) {
        throw std::invalid_argument("lambda must be positive");
    }
    std::vector<GaussRule> rules;
    rules.reserve(y.size());
    for (std::size_t d = 0; d < y.size(); ++d) {
        require_finite(f.lo[d], "box bound");
        require_finite(f.hi[d], "box bound");
        if (f.lo[d] > f.hi[d]) {
            throw std::invalid_argument("box has lo > hi");
        }
        rules.push_back(gauss_legendre_on(spec.finite_nodes, f.lo[d], f.hi[d]));
    }
    const double order = 0.5 * (m - 2);
    double sum = 0.0;
    visit_tensor(rules, [&](const std::vector<double>& node, double weight) {
        double s2 = 0.0;
        for (std::size_t d = 0; d < node.size(); ++d) {
            const double diff = y[d] - node[d];
            s2 += diff * diff;
        }
        const double s = std::sqrt(s2);
        const double kernel =
            m == 1 ? std::sqrt(2.0 / (kPi * lambda)) * std::cos(lambda * s)
                   : std::pow(lambda, order) *
                         normalized_bessel(order, lambda * s);
        sum += weight * kernel * f.f(node);
    });
    return Complex(std::pow(kTwoPi, -0.5 * m) * sum, 0.0);
}

double classic_inverse(
    const std::function<std::complex<double>(const std::vector<double>&,
                                             double)>& fhat,
    const std::vector<double>& y, const QuadratureSpec& spec, double* spread) {
    spec.validate();
    if (y.empty()) {
        throw std::invalid_argument(
            "classic_inverse needs at least one transverse coordinate");
    }
    if (!fhat) {
        throw std::invalid_argument("spectral callable is empty");
    }
    const double half_m = 0.5 * static_cast<double>(y.size());
    SpectralCache cached([&](double lambda) { return fhat(y, lambda); });
    auto family = [&](double tau) {
        return integrate_semiinfinite_damped(
                   [&](double lambda) {
                       return std::pow(lambda, half_m) *
                              std::exp(-lambda * tau) * cached(lambda);
                   },
                   1.0, spec)
            .value;
    };
    const AbelResult limit = abel_limit(family, spec.tau_schedule);
    if (spread != nullptr) {
        *spread = limit.spread;
    }
    return limit.value.real();
}

std::complex<double> direct_1d(const PiecewiseFunc1d& f, double lambda,
                               const PairProvider& pair,
                               const QuadratureSpec& spec) {
    spec.validate();
    require_finite(lambda, "lambda");
    if (lambda == 0.0) {
        throw std::invalid_argument("lambda must be nonzero");
    }
    Complex total(0.0, 0.0);
    for (const PiecewiseFunc1d::Piece& piece : f.pieces) {
        if (piece.layer < 1 || piece.layer > pair.layer_count()) {
            throw std::out_of_range("piece layer outside the medium");
        }
        if (!piece.f) {
            throw std::invalid_argument("piece callable is empty");
        }
        require_finite(piece.lo, "piece bound");
        require_finite(piece.hi, "piece bound");
        if (piece.lo > piece.hi) {
            throw std::invalid_argument("piece has lo > hi");
        }
        total += integrate_finite(
                     [&](double xi) {
                         return piece.f(xi) * pair.dual(piece.layer, xi,
                                                        lambda);
                     },
                     piece.lo, piece.hi, spec)
                     .value;
    }
    return total;
}

std::complex<double> direct_1d(const PiecewiseFunc1d& f, double lambda,
                               const LayeredMedium& medium,
                               const InterfaceCoupling& coupling,
                               const QuadratureSpec& spec) {
    check_medium(medium, coupling);
    const std::unique_ptr<PairProvider> pair =
        make_pair_provider(medium, coupling);
    return direct_1d(f, lambda, *pair, spec);
}

std::complex<double> inverse_1d(
    const std::function<std::complex<double>(double)>& fhat, double x, int k,
    const LayeredMedium& medium, const InterfaceCoupling& coupling,
    const SpectralWeightMode& mode, const QuadratureSpec& spec,
    double* spread) {
    spec.validate();
    check_medium(medium, coupling);
    if (k < 1 || k > medium.layer_count()) {
        throw std::out_of_range("layer index outside the medium");
    }
    if (!fhat) {
        throw std::invalid_argument("spectral callable is empty");
    }
    require_finite(x, "x");
    SpectralCache cached(fhat);
    AbelResult limit;
    if (mode.kind == SpectralWeightMode::Kind::calibrated) {
        const std::unique_ptr<PairProvider> pair =
            make_pair_provider(medium, coupling);
        auto family = [&](double tau) {
            const Complex integral =
                integrate_semiinfinite_damped(
                    [&](double lambda) {
                        const Complex term =
                            pair->primal(k, x, lambda) * cached(lambda);
                        return Complex(
                            2.0 * term.real() * std::exp(-lambda * tau), 0.0);
                    },
                    1.0, spec)
                    .value;
            return integral / kTwoPi;
        };
        limit = abel_limit(family, spec.tau_schedule);
    } else {
        const std::unique_ptr<PairProvider> pair =
            printed_pair_provider(medium, coupling);
        const Complex prefactor(0.0, -1.0 / kPi);
        auto family = [&](double tau) {
            const Complex integral =
                integrate_semiinfinite_damped(
                    [&](double lambda) {
                        return pair->primal(k, x, lambda) * cached(lambda) *
                               lambda * std::exp(-lambda * tau);
                    },
                    1.0, spec)
                    .value;
            return prefactor * integral;
        };
        limit = abel_limit(family, spec.tau_schedule);
    }
    if (spread != nullptr) {
        *spread = limit.spread;
    }
    return limit.value;
}

std::complex<double> direct_nd(const ScalarField& f, double x,
                               const std::vector<double>& y, double lambda,
                               const LayeredMedium& medium,
                               const InterfaceCoupling& coupling,
                               const QuadratureSpec& spec) {
    spec.validate();
    check_medium(medium, coupling);
    const int m = medium.transverse_dim;
    if (static_cast<int>(y.size()) != m) {
        throw std::invalid_argument(
            "evaluation point dimension does not match transverse_dim");
    }
    require_finite(lambda, "lambda");
    if (lambda <= 0.0) {
        throw std::invalid_argument("lambda must be positive");
    }
    const int k = layer_index(medium, x);
    TwoLayerIdealParams params;
    const bool closed_two_layer = is_two_layer_ideal(medium, coupling, &params);
    const bool homogeneous = medium.interface_count() == 0;
    std::unique_ptr<PairProvider> pair;
    if (!homogeneous && !closed_two_layer) {
        pair = make_pair_provider(medium, coupling);
    }
    const double a0 = medium.diffusivity_coeffs.front();

    Complex total(0.0, 0.0);
    std::vector<double> eta(y.size(), 0.0);
    for (const FieldPiece& piece : f.pieces) {
        if (piece.layer < 1 || piece.layer > medium.layer_count()) {
            throw std::out_of_range("piece layer outside the medium");
        }
        if (piece.y_lo.size() != y.size() || piece.y_hi.size() != y.size()) {
            throw std::invalid_argument(
                "piece transverse box dimension mismatch");
        }
        if (!piece.f) {
            throw std::invalid_argument("piece callable is empty");
        }
        if (!(piece.x_lo <= piece.x_hi)) {
            throw std::invalid_argument("piece has x_lo > x_hi");
        }
        std::vector<GaussRule> rules;
        rules.reserve(y.size() + 1);
        rules.push_back(
            gauss_legendre_on(spec.finite_nodes, piece.x_lo, piece.x_hi));
        for (std::size_t d = 0; d < y.size(); ++d) {
            if (!(piece.y_lo[d] <= piece.y_hi[d])) {
                throw std::invalid_argument("piece has y_lo > y_hi");
            }
            rules.push_back(gauss_legendre_on(spec.finite_nodes,
                                              piece.y_lo[d], piece.y_hi[d]));
        }
        visit_tensor(rules, [&](const std::vector<double>& node,
                                double weight) {
            double s2 = 0.0;
            for (std::size_t d = 0; d < y.size(); ++d) {
                const double diff = y[d] - node[d + 1];
                s2 += diff * diff;
                eta[d] = node[d + 1];
            }
            KernelQuery q;
            q.rho = lambda;
            q.x = x;
            q.xi = node[0];
            q.s = std::sqrt(s2);
            q.k = k;
            q.j = piece.layer;
            q.m = m;
            Complex kernel;
            if (homogeneous) {
                kernel = Complex(kernel_homogeneous(q, a0), 0.0);
            } else if (closed_two_layer) {
                kernel = Complex(phi_kj_closed_spectral(q, params), 0.0);
            } else {
                kernel = phi_kj_integral(q, *pair, spec);
            }
            total += weight * kernel * piece.f(node[0], eta);
        });
    }
    return std::pow(kTwoPi, -0.5 * m) * total;
}

double inverse_nd(
    const std::function<std::complex<double>(
        double, const std::vector<double>&, double)>& F,
    double x, const std::vector<double>& y, const SpectralWeightMode& mode,
    const QuadratureSpec& spec, double* spread) {
    spec.validate();
    const int m = static_cast<int>(y.size());
    if (m < 1) {
        throw std::invalid_argument(
            "inverse_nd needs at least one transverse coordinate");
    }
    if (!F) {
        throw std::invalid_argument("spectral callable is empty");
    }
    const double c = polar_constant(mode, m);
    const double p = polar_exponent(mode, m);
    SpectralCache cached([&](double rho) { return F(x, y, rho); });
    auto family = [&](double tau) {
        return c * integrate_semiinfinite_damped(
                       [&](double rho) {
                           return std::pow(rho, p) * std::exp(-rho * tau) *
                                  cached(rho);
                       },
                       1.0, spec)
                       .value;
    };
    const AbelResult limit = abel_limit(family, spec.tau_schedule);
    if (spread != nullptr) {
        *spread = limit.spread;
    }
    return limit.value.real();
}

double apply_B(const ScalarField& f, double x, const std::vector<double>& y,
               const LayeredMedium& medium, double h) {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw std::invalid_argument("stencil step must be positive");
    }
    if (static_cast<int>(y.size()) != medium.transverse_dim) {
        throw std::invalid_argument(
            "evaluation point dimension does not match transverse_dim");
    }
    const int layer = layer_index(medium, x);
    int layer_lo = 0;
    int layer_hi = 0;
    try {
        layer_lo = layer_index(medium, x - h);
        layer_hi = layer_index(medium, x + h);
    } catch (const std::invalid_argument&) {
        throw std::domain_error(
            "axial stencil touches an interface; shrink h or move x");
    }
    if (layer_lo != layer || layer_hi != layer) {
        throw std::domain_error(
            "axial stencil straddles an interface; shrink h or move x");
    }
    const double a = medium.diffusivity_coeffs[layer - 1];
    const double center = f.value(layer, x, y);
    const double axial = (f.value(layer, x + h, y) - 2.0 * center +
                          f.value(layer, x - h, y)) /
                         (h * h);
    double transverse = 0.0;
    std::vector<double> shifted = y;
    for (std::size_t d = 0; d < y.size(); ++d) {
        shifted[d] = y[d] + h;
        const double up = f.value(layer, x, shifted);
        shifted[d] = y[d] - h;
        const double down = f.value(layer, x, shifted);
        shifted[d] = y[d];
        transverse += (up - 2.0 * center + down) / (h * h);
    }
    return a * a * axial + transverse;
}

ScalarField apply_B_field(const ScalarField& f, const LayeredMedium& medium,
                          double h) {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw std::invalid_argument("stencil step must be positive");
    }
    ScalarField result;
    result.pieces.reserve(f.pieces.size());
    for (const FieldPiece& piece : f.pieces) {
        if (piece.layer < 1 || piece.layer > medium.layer_count()) {
            throw std::out_of_range("piece layer outside the medium");
        }
        if (!piece.f) {
            throw std::invalid_argument("piece callable is empty");
        }
        const double a = medium.diffusivity_coeffs[piece.layer - 1];
        FieldPiece derived = piece;
        derived.f = [g = piece.f, a, h](double xi,
                                        const std::vector<double>& eta) {
            const double center = g(xi, eta);
            const double axial =
                (g(xi + h, eta) - 2.0 * center + g(xi - h, eta)) / (h * h);
            double transverse = 0.0;
            std::vector<double> shifted = eta;
            for (std::size_t d = 0; d < eta.size(); ++d) {
                shifted[d] = eta[d] + h;
                const double up = g(xi, shifted);
                shifted[d] = eta[d] - h;
                const double down = g(xi, shifted);
                shifted[d] = eta[d];
                transverse += (up - 2.0 * center + down) / (h * h);
            }
            return a * a * axial + transverse;
        };
        result.pieces.push_back(std::move(derived));
    }
    return result;
}

double diagonalization_residual(const ScalarField& f, double lambda, double x,
                                const std::vector<double>& y,
                                const LayeredMedium& medium,
                                const InterfaceCoupling& coupling,
                                const QuadratureSpec& spec, double h) {
    const ScalarField applied = apply_B_field(f, medium, h);
    const Complex transformed =
        direct_nd(f, x, y, lambda, medium, coupling, spec);
    const Complex transformed_b =
        direct_nd(applied, x, y, lambda, medium, coupling, spec);
    const double lambda2 = lambda * lambda;
    return std::abs(transformed_b + lambda2 * transformed) /
           (1.0 + lambda2 * std::abs(transformed));
}

ScalarField mirror_field(const LayeredMedium& medium,
                         const InterfaceCoupling& coupling) {
    check_medium(medium, coupling);
    const int m = medium.transverse_dim;
    const double center = -0.5;
    const double sigma_x = 0.6;
    const double sigma_y = 0.7;
    if (medium.interface_count() == 0) {
        GaussianBump bump;
        bump.layer = 1;
        bump.amplitude = 1.0;
        bump.center_x = center;
        bump.sigma_x = sigma_x;
        bump.center_y.assign(m, 0.0);
        bump.sigma_y.assign(m, sigma_y);
        return gaussian_bumps(medium, {bump});
    }
    TwoLayerIdealParams params;
    if (!is_two_layer_ideal(medium, coupling, &params)) {
        throw std::invalid_argument(
            "mirror_field supports homogeneous media and two-layer ideal "
            "contact with the interface at 0");
    }
    const double c_r = (1.0 - params.nu) / (1.0 + params.nu);
    const double c_t = 2.0 / (1.0 + params.nu);
    auto axial = [center, sigma_x](double t) {
        const double arg = (t - center) / sigma_x;
        return std::exp(-0.5 * arg * arg);
    };
    auto radial = [sigma_y](const std::vector<double>& eta) {
        double sum = 0.0;
        for (double v : eta) {
            sum += v * v;
        }
        return std::exp(-0.5 * sum / (sigma_y * sigma_y));
    };
    const double reach = 8.0 * sigma_x;
    ScalarField field;
    FieldPiece left;
    left.layer = 1;
    left.f = [axial, radial, c_r](double xi, const std::vector<double>& eta) {
        return (axial(xi) + c_r * axial(-xi)) * radial(eta);
    };
    left.x_lo = center - reach;
    left.x_hi = 0.0;
    left.y_lo.assign(m, -8.0 * sigma_y);
    left.y_hi.assign(m, 8.0 * sigma_y);
    field.pieces.push_back(std::move(left));

    FieldPiece right;
    right.layer = 2;
    right.f = [axial, radial, c_t](double xi, const std::vector<double>& eta) {
        return c_t * axial(xi) * radial(eta);
    };
    right.x_lo = 0.0;
    right.x_hi = center + reach;
    right.y_lo.assign(m, -8.0 * sigma_y);
    right.y_hi.assign(m, 8.0 * sigma_y);
    field.pieces.push_back(std::move(right));
    return field;
}

double homogeneous_gaussian_spectrum(double rho, double x, double a,
                                     double sigma_x, double sigma_y, int m,
                                     const QuadratureSpec& spec) {
    spec.validate();
    require_finite(rho, "rho");
    require_finite(x, "x");
    if (rho <= 0.0) {
        throw std::invalid_argument("rho must be positive");
    }
    if (!(a > 0.0) || !(sigma_x > 0.0) || !(sigma_y > 0.0)) {
        throw std::invalid_argument(
            "coefficient and widths must be positive");
    }
    if (m < 1) {
        throw std::invalid_argument("transverse dimension must be >= 1");
    }
    const double order = 0.5 * (m - 1);
    // Area of the unit sphere in R^m; the transverse integral is radial.
    const double sphere = 2.0 * std::pow(kPi, 0.5 * m) / std::tgamma(0.5 * m);
    const GaussRule axial =
        gauss_legendre_on(spec.finite_nodes, -8.0 * sigma_x, 8.0 * sigma_x);
    const GaussRule radial =
        gauss_legendre_on(spec.finite_nodes, 0.0, 8.0 * sigma_y);
    const double front = std::sqrt(kTwoPi / rho) / a * std::pow(rho, order);
    double sum = 0.0;
    for (std::size_t i = 0; i < axial.nodes.size(); ++i) {
        const double xi = axial.nodes[i];
        const double gx = std::exp(-0.5 * xi * xi / (sigma_x * sigma_x));
        const double dx = (x - xi) / a;
        for (std::size_t j = 0; j < radial.nodes.size(); ++j) {
            const double s = radial.nodes[j];
            const double gy = std::exp(-0.5 * s * s / (sigma_y * sigma_y));
            const double radius = std::hypot(dx, s);
            sum += axial.weights[i] * radial.weights[j] * gx * gy *
                   std::pow(s, m - 1) * normalized_bessel(order, rho * radius);
        }
    }
    return std::pow(kTwoPi, -0.5 * m) * sphere * front * sum;
}

std::string CalibrationReport::summary() const {
    std::ostringstream out;
    out << "weight calibration, m = " << m << "\n";
    auto line = [&out](const CalibrationCandidate& cand) {
        out << "  " << (cand.passes ? "PASS" : "FAIL") << "  "
            << format_measure(cand.c, cand.p) << "  max error "
            << std::setprecision(2) << std::scientific << cand.max_error
            << std::defaultfloat << "  (" << cand.label << ")\n";
    };
    for (const CalibrationCandidate& cand : fitted) {
        line(cand);
    }
    for (const CalibrationCandidate& cand : stated) {
        line(cand);
    }
    out << "  selected " << format_measure(best_c, best_p) << "  max error "
        << std::setprecision(2) << std::scientific << best_error
        << std::defaultfloat << "\n";
    return out.str();
}

SpectralWeightMode CalibrationReport::mode(const QuadratureSpec& spec) const {
    return SpectralWeightMode::calibrated(best_c, best_p, m, spec);
}

CalibrationReport calibrate_weights(int m, const QuadratureSpec& spec) {
    spec.validate();
    if (m < 1) {
        throw std::invalid_argument("transverse dimension must be >= 1");
    }
    const double sigma = 0.5;
    const std::vector<double> probes = {0.0, 0.15, 0.3, 0.45, 0.6};
    std::vector<double> targets;
    targets.reserve(probes.size());
    for (double x : probes) {
        targets.push_back(std::exp(-x * x / (2.0 * sigma * sigma)));
    }

    std::vector<std::map<double, double>> memo(probes.size());
    auto spectrum = [&](std::size_t i, double rho) {
        auto it = memo[i].find(rho);
        if (it != memo[i].end()) {
            return it->second;
        }
        const double value = homogeneous_gaussian_spectrum(
            rho, probes[i], 1.0, sigma, sigma, m, spec);
        memo[i].emplace(rho, value);
        return value;
    };
    const double damping = 0.5 * sigma * sigma;
    std::map<double, std::vector<double>> moments;
    auto moments_for = [&](double p) -> const std::vector<double>& {
        auto it = moments.find(p);
        if (it != moments.end()) {
            return it->second;
        }
        std::vector<double> values;
        values.reserve(probes.size());
        for (std::size_t i = 0; i < probes.size(); ++i) {
            values.push_back(
                integrate_semiinfinite_damped(
                    [&](double rho) {
                        return Complex(std::pow(rho, p) * spectrum(i, rho),
                                       0.0);
                    },
                    damping, spec)
                    .value.real());
        }
        return moments.emplace(p, std::move(values)).first->second;
    };
    auto max_error = [&](double c, const std::vector<double>& values) {
        double worst = 0.0;
        for (std::size_t i = 0; i < probes.size(); ++i) {
            worst = std::max(worst, std::abs(c * values[i] - targets[i]));
        }
        return worst;
    };

    CalibrationReport report;
    report.m = m;
    const double pass_threshold = 1e-3;

    const double exponents[] = {0.5 * m, 0.5 * m + 1.0, 0.5 * (m + 1)};
    const char* exponent_labels[] = {"swept exponent m/2",
                                     "swept exponent m/2 + 1",
                                     "swept exponent (m + 1)/2"};
    for (std::size_t e = 0; e < 3; ++e) {
        const std::vector<double>& values = moments_for(exponents[e]);
        double dot = 0.0;
        double norm = 0.0;
        for (std::size_t i = 0; i < probes.size(); ++i) {
            dot += values[i] * targets[i];
            norm += values[i] * values[i];
        }
        CalibrationCandidate cand;
        cand.label = exponent_labels[e];
        cand.p = exponents[e];
        cand.c = norm > 0.0 ? dot / norm : 0.0;
        cand.c_fitted = true;
        cand.max_error = max_error(cand.c, values);
        cand.passes = cand.max_error <= pass_threshold;
        report.fitted.push_back(cand);
    }

    const CalibrationCandidate stated_list[] = {
        {"stated axial measure lambda d lambda / (pi i), taken by modulus",
         1.0 / kPi, 1.0, 0.0, false, false},
        {"stated polar measure rho^{(m+1)/2} d rho / pi", 1.0 / kPi,
         0.5 * (m + 1), 0.0, false, false},
        {"stated polar measure rho^{m/2+1} d rho", 1.0, 0.5 * m + 1.0, 0.0,
         false, false},
    };
    for (CalibrationCandidate cand : stated_list) {
        cand.max_error = max_error(cand.c, moments_for(cand.p));
        cand.passes = cand.max_error <= pass_threshold;
        report.stated.push_back(cand);
    }

    const CalibrationCandidate* best = &report.fitted.front();
    for (const CalibrationCandidate& cand : report.fitted) {
        if (cand.max_error < best->max_error) {
            best = &cand;
        }
    }
    report.best_c = best->c;
    report.best_p = best->p;
    report.best_error = best->max_error;
    return report;
}

}  // namespace layerheat
