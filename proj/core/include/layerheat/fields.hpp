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

#ifndef LAYERHEAT_FIELDS_HPP_
#define LAYERHEAT_FIELDS_HPP_

#include <functional>
#include <vector>

#include "layerheat/media.hpp"

namespace layerheat {

// One compactly supported contribution to the initial data of a single
// layer: a callable f(xi, eta) together with the bounding box outside of
// which it is treated as zero by every quadrature.  The box is stored per
// coordinate: [x_lo, x_hi] axially and [y_lo[i], y_hi[i]] transversally.
struct FieldPiece {
    int layer = 1;
    std::function<double(double, const std::vector<double>&)> f;
    double x_lo = 0.0;
    double x_hi = 0.0;
    std::vector<double> y_lo;
    std::vector<double> y_hi;
};

// Per-layer initial data g_j as a sum of pieces.  Evaluation sums every
// piece belonging to the requested layer (the boxes bound quadrature
// domains; values are defined by the callables everywhere).
struct ScalarField {
    std::vector<FieldPiece> pieces;

    double value(int layer, double xi, const std::vector<double>& eta) const;
};

// An isotropic-by-coordinate Gaussian bump attached to one layer:
//   amplitude * exp(-(xi-center_x)^2/(2 sigma_x^2))
//             * prod_i exp(-(eta_i-center_y[i])^2/(2 sigma_y[i]^2)).
struct GaussianBump {
    int layer = 1;
    double amplitude = 1.0;
    double center_x = 0.0;
    double sigma_x = 1.0;
    std::vector<double> center_y;
    std::vector<double> sigma_y;
};

// Builds the field of the given bumps.  Each piece's axial box is
// center +- 8 sigma clipped to its layer's interval; the transverse box is
// center +- 8 sigma per coordinate.  Bumps must lie in valid layers and
// carry transverse vectors sized to medium.transverse_dim.
ScalarField gaussian_bumps(const LayeredMedium& medium,
                           const std::vector<GaussianBump>& bumps);

// A function of the transverse variables only, with its bounding box; the
// input type of the classical transform.
struct TransverseField {
    std::function<double(const std::vector<double>&)> f;
    std::vector<double> lo;
    std::vector<double> hi;
};

// Per-layer one-dimensional data for the axial transform pair.
struct PiecewiseFunc1d {
    struct Piece {
        int layer = 1;
        std::function<double(double)> f;
        double lo = 0.0;
        double hi = 0.0;
    };
    std::vector<Piece> pieces;

    double value(int layer, double xi) const;
};

}  // namespace layerheat

#endif  // LAYERHEAT_FIELDS_HPP_
