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

#include "layerheat/eigenfunctions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace layerheat {

namespace {

using Complex = std::complex<double>;

constexpr Complex kI(0.0, 1.0);

void check_layer(const PiecewiseWave& wave, int layer) {
    if (layer < 1 || layer > static_cast<int>(wave.plus.size())) {
        throw std::out_of_range("PiecewiseWave: layer " +
                                std::to_string(layer) + " out of range");
    }
}

void require_buildable(const LayeredMedium& medium,
                       const InterfaceCoupling& coupling, double lambda) {
    if (lambda == 0.0 || !std::isfinite(lambda)) {
        throw std::invalid_argument(
            "eigenfunction builders require a finite nonzero lambda");
    }
    std::vector<std::string> violations = validate(medium, coupling);
    if (!violations.empty()) {
        throw std::invalid_argument("invalid medium/coupling: " +
                                    violations.front());
    }
}

PiecewiseWave propagate(const LayeredMedium& medium,
                        const InterfaceCoupling& coupling, double lambda,
                        WaveKind kind, Complex seed_plus, Complex seed_minus) {
    require_buildable(medium, coupling, lambda);

    const int layers = medium.layer_count();
    PiecewiseWave wave;
    wave.medium = medium;
    wave.kind = kind;
    wave.lambda = lambda;
    wave.plus.assign(static_cast<std::size_t>(layers), Complex(0.0, 0.0));
    wave.minus.assign(static_cast<std::size_t>(layers), Complex(0.0, 0.0));
    wave.plus.back() = seed_plus;
    wave.minus.back() = seed_minus;

    for (int k = layers - 2; k >= 0; --k) {
        const InterfaceConditions& c = coupling.at[static_cast<std::size_t>(k)];
        const double l = medium.interfaces[static_cast<std::size_t>(k)];
        const double a_left = medium.diffusivity_coeffs[
            static_cast<std::size_t>(k)];
        const double a_right = medium.diffusivity_coeffs[
            static_cast<std::size_t>(k) + 1];

        const Complex d_left = kI * (lambda / a_left);
        const Complex d_right = kI * (lambda / a_right);
        const Complex e_left = std::exp(kI * (lambda * l / a_left));
        const Complex e_right = std::exp(kI * (lambda * l / a_right));

        Complex m00, m01, m10, m11, rhs0, rhs1;
        {
            Complex m[2][2];
            Complex r[2];
            for (int row = 0; row < 2; ++row) {
                m[row][0] = (c.alpha[row][0] * d_left + c.beta[row][0]) *
                            e_left;
                m[row][1] = (-c.alpha[row][0] * d_left + c.beta[row][0]) /
                            e_left;
                const Complex rp =
                    (c.alpha[row][1] * d_right + c.beta[row][1]) * e_right;
                const Complex rm =
                    (-c.alpha[row][1] * d_right + c.beta[row][1]) / e_right;
                r[row] = rp * wave.plus[static_cast<std::size_t>(k) + 1] +
                         rm * wave.minus[static_cast<std::size_t>(k) + 1];
                if (kind == WaveKind::dual) {
                    r[row] *= (c.delta(0) * a_right * a_right) /
                              (c.delta(1) * a_left * a_left);
                }
            }
            m00 = m[0][0];
            m01 = m[0][1];
            m10 = m[1][0];
            m11 = m[1][1];
            rhs0 = r[0];
            rhs1 = r[1];
        }

        const Complex det = m00 * m11 - m01 * m10;
        const double scale =
            std::max({std::abs(m00) * std::abs(m11),
                      std::abs(m01) * std::abs(m10), 1e-300});
        if (std::abs(det) <= 1e-14 * scale) {
            throw std::runtime_error(
                "interface " + std::to_string(k + 1) +
                ": singular coupling system at lambda = " +
                std::to_string(lambda));
        }
        wave.plus[static_cast<std::size_t>(k)] =
            (rhs0 * m11 - rhs1 * m01) / det;
        wave.minus[static_cast<std::size_t>(k)] =
            (m00 * rhs1 - m10 * rhs0) / det;
    }

    return wave;
}

}  // namespace

std::complex<double> PiecewiseWave::value(double x) const {
    return value(x, layer_index(medium, x));
}

std::complex<double> PiecewiseWave::value(double x, int layer) const {
    check_layer(*this, layer);
    const double a = medium.diffusivity_coeffs[
        static_cast<std::size_t>(layer) - 1];
    const Complex phase = std::exp(kI * (lambda * x / a));
    return plus[static_cast<std::size_t>(layer) - 1] * phase +
           minus[static_cast<std::size_t>(layer) - 1] / phase;
}

std::complex<double> PiecewiseWave::derivative(double x, int layer) const {
    check_layer(*this, layer);
    const double a = medium.diffusivity_coeffs[
        static_cast<std::size_t>(layer) - 1];
    const Complex d = kI * (lambda / a);
    const Complex phase = std::exp(kI * (lambda * x / a));
    return d * (plus[static_cast<std::size_t>(layer) - 1] * phase -
                minus[static_cast<std::size_t>(layer) - 1] / phase);
}

std::complex<double> eval(const PiecewiseWave& wave, double x) {
    return wave.value(x);
}

PiecewiseWave build_primal(const LayeredMedium& medium,
                           const InterfaceCoupling& coupling, double lambda) {
    return propagate(medium, coupling, lambda, WaveKind::primal,
                     Complex(1.0, 0.0), Complex(0.0, 0.0));
}

PiecewiseWave build_primal(const LayeredMedium& medium,
                           const InterfaceCoupling& coupling, double lambda,
                           std::complex<double> seed_plus,
                           std::complex<double> seed_minus) {
    return propagate(medium, coupling, lambda, WaveKind::primal, seed_plus,
                     seed_minus);
}

PiecewiseWave build_dual(const LayeredMedium& medium,
                         const InterfaceCoupling& coupling, double lambda) {
    return propagate(medium, coupling, lambda, WaveKind::dual,
                     Complex(0.0, 0.0), Complex(1.0, 0.0));
}

PiecewiseWave build_dual(const LayeredMedium& medium,
                         const InterfaceCoupling& coupling, double lambda,
                         std::complex<double> seed_plus,
                         std::complex<double> seed_minus) {
    return propagate(medium, coupling, lambda, WaveKind::dual, seed_plus,
                     seed_minus);
}

PiecewiseWave closed_form_two_layer(const TwoLayerIdealParams& params,
                                    WaveKind which, double lambda) {
    const double d0 = params.delta0();
    const double root = std::sqrt(d0);
    const double half = 0.5 * (1.0 + d0);
    const double plus1 = half * (1.0 + 1.0 / root);
    const double minus1 = half * (1.0 - 1.0 / root);
    const double plus2 = half * (1.0 + root);
    const double minus2 = half * (1.0 - root);

    PiecewiseWave wave;
    wave.medium = params.medium();
    wave.kind = which;
    wave.lambda = lambda;
    if (which == WaveKind::primal) {
        wave.plus = {Complex(plus1, 0.0), Complex(plus2, 0.0)};
        wave.minus = {Complex(minus1, 0.0), Complex(minus2, 0.0)};
    } else {
        // Conjugation swaps the amplitude roles because the printed
        // amplitudes are real.
        const double r1 = params.r1();
        const double r2 = params.r2();
        wave.plus = {Complex(r1 * minus1, 0.0), Complex(r2 * minus2, 0.0)};
        wave.minus = {Complex(r1 * plus1, 0.0), Complex(r2 * plus2, 0.0)};
    }
    return wave;
}

TransferPairProvider::TransferPairProvider(LayeredMedium medium,
                                           InterfaceCoupling coupling)
    : medium_(std::move(medium)), coupling_(std::move(coupling)) {
    std::vector<std::string> violations = validate(medium_, coupling_);
    if (!violations.empty()) {
        throw std::invalid_argument("invalid medium/coupling: " +
                                    violations.front());
    }
    dual_scale_ = 1.0 / medium_.diffusivity_coeffs.back();
}

const std::pair<PiecewiseWave, PiecewiseWave>& TransferPairProvider::pair_for(
    double lambda) const {
    std::lock_guard<std::mutex> guard(mutex_);
    auto it = cache_.find(lambda);
    if (it == cache_.end()) {
        auto built = std::make_unique<std::pair<PiecewiseWave, PiecewiseWave>>(
            build_primal(medium_, coupling_, lambda),
            build_dual(medium_, coupling_, lambda));
        for (auto& amp : built->second.plus) {
            amp *= dual_scale_;
        }
        for (auto& amp : built->second.minus) {
            amp *= dual_scale_;
        }
        it = cache_.emplace(lambda, std::move(built)).first;
    }
    return *it->second;
}

std::complex<double> TransferPairProvider::primal(int layer, double x,
                                                  double lambda) const {
    return pair_for(lambda).first.value(x, layer);
}

std::complex<double> TransferPairProvider::dual(int layer, double xi,
                                                double lambda) const {
    return pair_for(lambda).second.value(xi, layer);
}

int TransferPairProvider::layer_count() const {
    return medium_.layer_count();
}

void TransferPairProvider::warm(const std::vector<double>& lambdas) const {
    for (double lambda : lambdas) {
        pair_for(lambda);
    }
}

namespace {

// Shared amplitude setup for the two closed-form providers.  scale
// multiplies the printed primal amplitudes; the dual is r_k times the
// conjugated scaled primal, and conjugation swaps plus and minus.
void fill_two_layer_amplitudes(const TwoLayerIdealParams& params, double scale,
                               double a[2], double primal_plus[2],
                               double primal_minus[2], double dual_plus[2],
                               double dual_minus[2]) {
    const double d0 = params.delta0();
    const double root = std::sqrt(d0);
    const double half = 0.5 * (1.0 + d0) * scale;
    a[0] = params.a1;
    a[1] = params.a2;
    primal_plus[0] = half * (1.0 + 1.0 / root);
    primal_minus[0] = half * (1.0 - 1.0 / root);
    primal_plus[1] = half * (1.0 + root);
    primal_minus[1] = half * (1.0 - root);
    dual_plus[0] = params.r1() * primal_minus[0];
    dual_minus[0] = params.r1() * primal_plus[0];
    dual_plus[1] = params.r2() * primal_minus[1];
    dual_minus[1] = params.r2() * primal_plus[1];
}

Complex two_layer_value(const double a[2], const double plus[2],
                        const double minus[2], int layer, double x,
                        double lambda) {
    if (layer < 1 || layer > 2) {
        throw std::out_of_range("two-layer pair: layer " +
                                std::to_string(layer) + " out of range");
    }
    const Complex phase =
        std::exp(kI * (lambda * x / a[layer - 1]));
    return plus[layer - 1] * phase + minus[layer - 1] / phase;
}

}  // namespace

ClosedTwoLayerPairProvider::ClosedTwoLayerPairProvider(
    const TwoLayerIdealParams& params) {
    fill_two_layer_amplitudes(params, 1.0, a_, primal_plus_, primal_minus_,
                              dual_plus_, dual_minus_);
}

std::complex<double> ClosedTwoLayerPairProvider::primal(int layer, double x,
                                                        double lambda) const {
    return two_layer_value(a_, primal_plus_, primal_minus_, layer, x, lambda);
}

std::complex<double> ClosedTwoLayerPairProvider::dual(int layer, double xi,
                                                      double lambda) const {
    return two_layer_value(a_, dual_plus_, dual_minus_, layer, xi, lambda);
}

SpectralTwoLayerPairProvider::SpectralTwoLayerPairProvider(
    const TwoLayerIdealParams& params) {
    const double d0 = params.delta0();
    const double sigma = std::sqrt(2.0 / (1.0 + d0));
    fill_two_layer_amplitudes(params, sigma / (1.0 + d0), a_, primal_plus_,
                              primal_minus_, dual_plus_, dual_minus_);
}

std::complex<double> SpectralTwoLayerPairProvider::primal(
    int layer, double x, double lambda) const {
    return two_layer_value(a_, primal_plus_, primal_minus_, layer, x, lambda);
}

std::complex<double> SpectralTwoLayerPairProvider::dual(int layer, double xi,
                                                        double lambda) const {
    return two_layer_value(a_, dual_plus_, dual_minus_, layer, xi, lambda);
}

std::unique_ptr<PairProvider> make_pair_provider(
    const LayeredMedium& medium, const InterfaceCoupling& coupling) {
    TwoLayerIdealParams params;
    if (is_two_layer_ideal(medium, coupling, &params)) {
        return std::make_unique<SpectralTwoLayerPairProvider>(params);
    }
    return std::make_unique<TransferPairProvider>(medium, coupling);
}

}  // namespace layerheat
