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

#include "layerheat/media.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace layerheat {

namespace {

std::string index_prefix(const char* what, int index) {
    return std::string(what) + " " + std::to_string(index) + ": ";
}

}  // namespace

LayeredMedium TwoLayerIdealParams::medium(int transverse_dim) const {
    LayeredMedium m;
    m.interfaces = {0.0};
    m.diffusivity_coeffs = {a1, a2};
    m.transverse_dim = transverse_dim;
    return m;
}

InterfaceCoupling TwoLayerIdealParams::coupling() const {
    return ideal_contact(nu, 1);
}

int layer_index(const LayeredMedium& medium, double x) {
    const auto& l = medium.interfaces;
    auto it = std::lower_bound(l.begin(), l.end(), x);
    if (it != l.end() && *it == x) {
        throw std::invalid_argument(
            "layer_index: x = " + std::to_string(x) +
            " lies exactly on interface " +
            std::to_string(it - l.begin() + 1) +
            "; evaluate a one-sided limit instead");
    }
    return static_cast<int>(it - l.begin()) + 1;
}

InterfaceCoupling ideal_contact(double nu, int interface_count) {
    if (!(nu > 0.0) || !std::isfinite(nu)) {
        throw std::domain_error("ideal_contact: nu must be positive, got " +
                                std::to_string(nu));
    }
    if (interface_count < 0) {
        throw std::domain_error("ideal_contact: interface_count must be >= 0");
    }
    InterfaceConditions c;
    // Value continuity: 0 * u' + 1 * u on both sides.
    c.alpha[0][0] = 0.0;
    c.beta[0][0] = 1.0;
    c.alpha[0][1] = 0.0;
    c.beta[0][1] = 1.0;
    // Flux condition: 1 * u'_left = nu * u'_right.
    c.alpha[1][0] = 1.0;
    c.beta[1][0] = 0.0;
    c.alpha[1][1] = nu;
    c.beta[1][1] = 0.0;
    InterfaceCoupling coupling;
    coupling.at.assign(static_cast<std::size_t>(interface_count), c);
    return coupling;
}

std::vector<std::string> validate(const LayeredMedium& medium,
                                  const InterfaceCoupling& coupling) {
    std::vector<std::string> violations;

    for (std::size_t i = 0; i + 1 < medium.interfaces.size(); ++i) {
        if (!(medium.interfaces[i] < medium.interfaces[i + 1])) {
            violations.push_back(
                index_prefix("interface", static_cast<int>(i) + 1) +
                "interfaces must be strictly increasing");
        }
    }
    for (std::size_t i = 0; i < medium.interfaces.size(); ++i) {
        if (!std::isfinite(medium.interfaces[i])) {
            violations.push_back(
                index_prefix("interface", static_cast<int>(i) + 1) +
                "interface position must be finite");
        }
    }
    for (std::size_t j = 0; j < medium.diffusivity_coeffs.size(); ++j) {
        const double a = medium.diffusivity_coeffs[j];
        if (!(a > 0.0) || !std::isfinite(a)) {
            violations.push_back(
                index_prefix("layer", static_cast<int>(j) + 1) +
                "diffusivity must be positive");
        }
    }
    if (medium.transverse_dim < 1) {
        violations.push_back("transverse_dim must be a positive integer");
    }
    if (medium.layer_count() != medium.interface_count() + 1) {
        violations.push_back(
            "layer count (" + std::to_string(medium.layer_count()) +
            ") must equal interface count + 1 (" +
            std::to_string(medium.interface_count() + 1) + ")");
    }
    if (coupling.interface_count() != medium.interface_count()) {
        violations.push_back(
            "coupling entries (" + std::to_string(coupling.interface_count()) +
            ") must match interface count (" +
            std::to_string(medium.interface_count()) + ")");
    }

    const int common = std::min(coupling.interface_count(),
                                medium.interface_count());
    for (int k = 0; k < common; ++k) {
        const InterfaceConditions& c = coupling.at[static_cast<std::size_t>(k)];
        for (int side = 0; side < 2; ++side) {
            bool finite = true;
            for (int m = 0; m < 2; ++m) {
                finite = finite && std::isfinite(c.alpha[m][side]) &&
                         std::isfinite(c.beta[m][side]);
            }
            if (!finite) {
                violations.push_back(
                    index_prefix("interface", k + 1) +
                    "coupling coefficients must be finite on side " +
                    std::to_string(side + 1));
                continue;
            }
            if (c.delta(side) == 0.0) {
                violations.push_back(
                    index_prefix("interface", k + 1) +
                    "side " + std::to_string(side + 1) +
                    " coupling determinant alpha_1*beta_2 - alpha_2*beta_1 "
                    "is zero");
            }
        }
    }

    return violations;
}

LayeredMedium homogeneous_medium(double a, int transverse_dim) {
    LayeredMedium m;
    m.diffusivity_coeffs = {a};
    m.transverse_dim = transverse_dim;
    return m;
}

bool is_two_layer_ideal(const LayeredMedium& medium,
                        const InterfaceCoupling& coupling,
                        TwoLayerIdealParams* params) {
    if (medium.interface_count() != 1 || medium.layer_count() != 2 ||
        coupling.interface_count() != 1) {
        return false;
    }
    if (medium.interfaces[0] != 0.0) {
        return false;
    }
    const InterfaceConditions& c = coupling.at[0];
    // Value row: no derivative terms, equal nonzero value coefficients.
    if (c.alpha[0][0] != 0.0 || c.alpha[0][1] != 0.0) {
        return false;
    }
    if (c.beta[0][0] == 0.0 || c.beta[0][0] != c.beta[0][1]) {
        return false;
    }
    // Flux row: no value terms, derivative ratio gives nu.
    if (c.beta[1][0] != 0.0 || c.beta[1][1] != 0.0) {
        return false;
    }
    if (c.alpha[1][0] == 0.0) {
        return false;
    }
    const double nu = c.alpha[1][1] / c.alpha[1][0];
    if (!(nu > 0.0) || !std::isfinite(nu)) {
        return false;
    }
    if (params != nullptr) {
        params->a1 = medium.diffusivity_coeffs[0];
        params->a2 = medium.diffusivity_coeffs[1];
        params->nu = nu;
    }
    return true;
}

}  // namespace layerheat
