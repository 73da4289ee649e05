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

#include "layerheat/fields.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace layerheat {

double ScalarField::value(int layer, double xi,
                          const std::vector<double>& eta) const {
    double sum = 0.0;
    for (const FieldPiece& piece : pieces) {
        if (piece.layer == layer) {
            sum += piece.f(xi, eta);
        }
    }
    return sum;
}

double PiecewiseFunc1d::value(int layer, double xi) const {
    double sum = 0.0;
    for (const Piece& piece : pieces) {
        if (piece.layer == layer) {
            sum += piece.f(xi);
        }
    }
    return sum;
}

ScalarField gaussian_bumps(const LayeredMedium& medium,
                           const std::vector<GaussianBump>& bumps) {
    const int m = medium.transverse_dim;
    ScalarField field;
    for (std::size_t b = 0; b < bumps.size(); ++b) {
        const GaussianBump& bump = bumps[b];
        if (bump.layer < 1 || bump.layer > medium.layer_count()) {
            throw std::invalid_argument(
                "bump " + std::to_string(b + 1) + ": layer " +
                std::to_string(bump.layer) + " does not exist");
        }
        if (static_cast<int>(bump.center_y.size()) != m ||
            static_cast<int>(bump.sigma_y.size()) != m) {
            throw std::invalid_argument(
                "bump " + std::to_string(b + 1) +
                ": transverse center/sigma must have " + std::to_string(m) +
                " entries");
        }
        if (!(bump.sigma_x > 0.0)) {
            throw std::invalid_argument("bump " + std::to_string(b + 1) +
                                        ": sigma_x must be positive");
        }
        for (double s : bump.sigma_y) {
            if (!(s > 0.0)) {
                throw std::invalid_argument(
                    "bump " + std::to_string(b + 1) +
                    ": sigma_y entries must be positive");
            }
        }

        const double layer_lo =
            bump.layer == 1 ? -std::numeric_limits<double>::infinity()
                            : medium.interfaces[
                                  static_cast<std::size_t>(bump.layer) - 2];
        const double layer_hi =
            bump.layer == medium.layer_count()
                ? std::numeric_limits<double>::infinity()
                : medium.interfaces[static_cast<std::size_t>(bump.layer) - 1];

        FieldPiece piece;
        piece.layer = bump.layer;
        piece.x_lo = std::max(layer_lo, bump.center_x - 8.0 * bump.sigma_x);
        piece.x_hi = std::min(layer_hi, bump.center_x + 8.0 * bump.sigma_x);
        if (!(piece.x_lo < piece.x_hi)) {
            throw std::invalid_argument(
                "bump " + std::to_string(b + 1) +
                ": support does not intersect its layer");
        }
        piece.y_lo.resize(static_cast<std::size_t>(m));
        piece.y_hi.resize(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            piece.y_lo[static_cast<std::size_t>(i)] =
                bump.center_y[static_cast<std::size_t>(i)] -
                8.0 * bump.sigma_y[static_cast<std::size_t>(i)];
            piece.y_hi[static_cast<std::size_t>(i)] =
                bump.center_y[static_cast<std::size_t>(i)] +
                8.0 * bump.sigma_y[static_cast<std::size_t>(i)];
        }
        piece.f = [bump](double xi, const std::vector<double>& eta) {
            double expo = (xi - bump.center_x) * (xi - bump.center_x) /
                          (2.0 * bump.sigma_x * bump.sigma_x);
            for (std::size_t i = 0; i < bump.center_y.size(); ++i) {
                const double d = eta[i] - bump.center_y[i];
                expo += d * d / (2.0 * bump.sigma_y[i] * bump.sigma_y[i]);
            }
            return bump.amplitude * std::exp(-expo);
        };
        field.pieces.push_back(std::move(piece));
    }
    return field;
}

}  // namespace layerheat
