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

#ifndef LAYERHEAT_EIGENFUNCTIONS_HPP_
#define LAYERHEAT_EIGENFUNCTIONS_HPP_

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "layerheat/media.hpp"

namespace layerheat {

enum class WaveKind { primal, dual };

// A continuous-spectrum eigenfunction of the segmented problem, stored per
// layer as the amplitude pair of the oscillatory basis:
//   w_j(x) = plus[j-1] * exp(+i lambda x / a_j)
//          + minus[j-1] * exp(-i lambda x / a_j).
// Each branch satisfies (a_j^2 d^2/dx^2 + lambda^2) w_j = 0 identically.
struct PiecewiseWave {
    LayeredMedium medium;
    WaveKind kind = WaveKind::primal;
    double lambda = 0.0;
    std::vector<std::complex<double>> plus;
    std::vector<std::complex<double>> minus;

    // Evaluates the branch of the layer containing x; throws on interface
    // points (use the explicit-layer overload for one-sided limits).
    std::complex<double> value(double x) const;
    // Evaluates the analytic continuation of layer j's branch at any x.
    std::complex<double> value(double x, int layer) const;
    std::complex<double> derivative(double x, int layer) const;
};

// Convenience alias for PiecewiseWave::value(x).
std::complex<double> eval(const PiecewiseWave& wave, double x);

// Builds the forward-family eigenfunction for the given lambda != 0 by
// backward propagation: the outermost layer n+1 is seeded with the
// normalization amplitudes (1, 0), then each interface k = n..1 yields a
// 2x2 linear solve of the matching conditions
//   [alpha_m1 d/dx + beta_m1] w_k = [alpha_m2 d/dx + beta_m2] w_{k+1}
// for the amplitudes of layer k.  The overloads with explicit seed
// amplitudes propagate an arbitrary outermost branch instead.
// Preconditions: validate(medium, coupling) must pass and lambda != 0,
// otherwise std::invalid_argument.  A singular interface solve raises
// std::runtime_error naming the interface and lambda.
PiecewiseWave build_primal(const LayeredMedium& medium,
                           const InterfaceCoupling& coupling, double lambda);
PiecewiseWave build_primal(const LayeredMedium& medium,
                           const InterfaceCoupling& coupling, double lambda,
                           std::complex<double> seed_plus,
                           std::complex<double> seed_minus);

// Builds the adjoint-family eigenfunction: seed (0, 1) in layer n+1 and
// matching conditions reweighted per side by a^2 / delta,
//   (a_k^2/delta_1k) [alpha_m1 d/dx + beta_m1] w_k
//     = (a_{k+1}^2/delta_2k) [alpha_m2 d/dx + beta_m2] w_{k+1},
// which is what makes the pair biorthogonal with a flat spectral measure.
PiecewiseWave build_dual(const LayeredMedium& medium,
                         const InterfaceCoupling& coupling, double lambda);
PiecewiseWave build_dual(const LayeredMedium& medium,
                         const InterfaceCoupling& coupling, double lambda,
                         std::complex<double> seed_plus,
                         std::complex<double> seed_minus);

// The closed-form eigenfunction pair of the two-layer ideal-contact
// configuration with its interface at 0, written with delta0 = a2/(nu a1):
//   primal layer 1: (1 + delta0) (cos(lambda x/a1) + (i/sqrt(delta0)) sin(lambda x/a1))
//   primal layer 2: (1 + delta0) (cos(lambda x/a2) + i sqrt(delta0) sin(lambda x/a2))
//   dual layer k:   r_k * conj(primal layer k)
// returned converted exactly to amplitude pairs.
PiecewiseWave closed_form_two_layer(const TwoLayerIdealParams& params,
                                    WaveKind which, double lambda);

// Uniform access to a primal/dual eigenfunction pair, normalized so that
//   f(x) = c * Integral_0^inf lambda^p 2 Re[ primal(x,lambda) *
//          Integral f(xi) dual(xi,lambda) dxi ] dlambda
// reproduces f with the weights of the transform module.  Layer indices are
// 1-based.  Implementations are safe to share across threads.
class PairProvider {
public:
    virtual ~PairProvider() = default;
    virtual std::complex<double> primal(int layer, double x,
                                        double lambda) const = 0;
    virtual std::complex<double> dual(int layer, double xi,
                                      double lambda) const = 0;
    virtual int layer_count() const = 0;
};

// Pair built by the transfer-matrix constructors, with the adjoint member
// scaled by 1/a_{n+1} so the homogeneous limit is the classical Fourier
// pair exp(+i lambda x/a), (1/a) exp(-i lambda xi/a).  Waves are cached per
// lambda under a mutex; warm() prebuilds a batch of quadrature nodes.
class TransferPairProvider : public PairProvider {
public:
    TransferPairProvider(LayeredMedium medium, InterfaceCoupling coupling);

    std::complex<double> primal(int layer, double x,
                                double lambda) const override;
    std::complex<double> dual(int layer, double xi,
                              double lambda) const override;
    int layer_count() const override;

    void warm(const std::vector<double>& lambdas) const;

private:
    const std::pair<PiecewiseWave, PiecewiseWave>& pair_for(
        double lambda) const;

    LayeredMedium medium_;
    InterfaceCoupling coupling_;
    double dual_scale_;
    mutable std::mutex mutex_;
    mutable std::map<double, std::unique_ptr<std::pair<PiecewiseWave,
                                                       PiecewiseWave>>>
        cache_;
};

// The closed-form two-layer pair with its printed (1 + delta0) amplitude
// convention; used where results must match those printed forms verbatim.
class ClosedTwoLayerPairProvider : public PairProvider {
public:
    explicit ClosedTwoLayerPairProvider(const TwoLayerIdealParams& params);

    std::complex<double> primal(int layer, double x,
                                double lambda) const override;
    std::complex<double> dual(int layer, double xi,
                              double lambda) const override;
    int layer_count() const override { return 2; }

private:
    double a_[2];
    double primal_plus_[2];
    double primal_minus_[2];
    double dual_plus_[2];
    double dual_minus_[2];
};

// The closed-form two-layer pair rescaled to unit spectral density: the
// printed primal is multiplied by sigma/(1 + delta0) with
// sigma = sqrt(2/(1 + delta0)), and the dual is r_k times the conjugated
// rescaled primal.  At delta0 = 1 this is exactly the classical Fourier
// pair of the homogeneous medium.
class SpectralTwoLayerPairProvider : public PairProvider {
public:
    explicit SpectralTwoLayerPairProvider(const TwoLayerIdealParams& params);

    std::complex<double> primal(int layer, double x,
                                double lambda) const override;
    std::complex<double> dual(int layer, double xi,
                              double lambda) const override;
    int layer_count() const override { return 2; }

private:
    double a_[2];
    double primal_plus_[2];
    double primal_minus_[2];
    double dual_plus_[2];
    double dual_minus_[2];
};

// Picks the pair with a verified reconstruction normalization: a medium
// without interfaces or a two-layer ideal-contact medium with its interface
// at 0 gets the closed spectral pair; anything else falls back to the
// transfer-matrix pair.
std::unique_ptr<PairProvider> make_pair_provider(
    const LayeredMedium& medium, const InterfaceCoupling& coupling);

}  // namespace layerheat

#endif  // LAYERHEAT_EIGENFUNCTIONS_HPP_
