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

#ifndef LAYERHEAT_MEDIA_HPP_
#define LAYERHEAT_MEDIA_HPP_

#include <string>
#include <vector>

namespace layerheat {

// A one-dimensional axis split into n + 1 homogeneous layers by the
// interface points l_1 < ... < l_n, together with m transverse directions
// that share a unit diffusivity.  Layer j (1-based) occupies
// (l_{j-1}, l_j) with l_0 = -inf and l_{n+1} = +inf, and conducts along x
// with diffusivity diffusivity_coeffs[j-1]^2.
struct LayeredMedium {
    std::vector<double> interfaces;
    std::vector<double> diffusivity_coeffs;
    int transverse_dim = 1;

    int interface_count() const { return static_cast<int>(interfaces.size()); }
    int layer_count() const {
        return static_cast<int>(diffusivity_coeffs.size());
    }
    // 1-based accessor for the coefficient a_j of layer j.
    double a(int layer) const { return diffusivity_coeffs[layer - 1]; }
};

// Coefficients of the two matching conditions imposed at one interface.
// Condition m (0-based here) reads
//   [alpha[m][0] d/dx + beta[m][0]] u_left = [alpha[m][1] d/dx + beta[m][1]] u_right
// with both sides evaluated at the interface point.
struct InterfaceConditions {
    double alpha[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    double beta[2][2] = {{0.0, 0.0}, {0.0, 0.0}};

    // Determinant alpha_1i * beta_2i - alpha_2i * beta_1i for side i
    // (0 = left, 1 = right).  Both must be nonzero for the dual problem
    // and the backward interface solves to be well posed.
    double delta(int side) const {
        return alpha[0][side] * beta[1][side] - alpha[1][side] * beta[0][side];
    }
};

// One InterfaceConditions entry per interface, ordered like
// LayeredMedium::interfaces.
struct InterfaceCoupling {
    std::vector<InterfaceConditions> at;

    int interface_count() const { return static_cast<int>(at.size()); }
};

// The worked two-layer configuration: interface at x = 0, ideal thermal
// contact with conductivity ratio nu, diffusivity coefficients a1 and a2.
struct TwoLayerIdealParams {
    double a1 = 1.0;
    double a2 = 1.0;
    double nu = 1.0;

    double delta0() const { return a2 / (nu * a1); }
    double r1() const { return a2 / (nu * a1 * a1); }
    double r2() const { return 1.0 / a2; }
    double r(int layer) const { return layer == 1 ? r1() : r2(); }
    double a(int layer) const { return layer == 1 ? a1 : a2; }

    LayeredMedium medium(int transverse_dim = 1) const;
    InterfaceCoupling coupling() const;
};

// Returns the 1-based index j of the layer containing x.  Points exactly
// on an interface are ambiguous (the field may be double-valued there under
// general coupling) and raise std::invalid_argument; callers evaluating
// one-sided limits must pick a side explicitly.
int layer_index(const LayeredMedium& medium, double x);

// Ideal thermal contact at every interface: value continuity
// (u_left = u_right) and the flux condition u'_left = nu * u'_right.
// The side determinants are -1 (left) and -nu (right) at every interface.
// nu <= 0 or a non-finite nu raises std::domain_error.
InterfaceCoupling ideal_contact(double nu, int interface_count);

// Checks every structural invariant of the pair and returns one message per
// violation, each naming the offending index.  An empty result means the
// configuration is usable by the eigenfunction builders.
std::vector<std::string> validate(const LayeredMedium& medium,
                                  const InterfaceCoupling& coupling);

// A medium with no interfaces, coefficient a, and m transverse directions.
LayeredMedium homogeneous_medium(double a, int transverse_dim = 1);

// Recognizes media that match the worked two-layer configuration: exactly
// one interface located at 0 and coupling rows proportional to the ideal
// contact pattern.  On success fills *params (when non-null) with a1, a2,
// and the recovered nu.
bool is_two_layer_ideal(const LayeredMedium& medium,
                        const InterfaceCoupling& coupling,
                        TwoLayerIdealParams* params = nullptr);

}  // namespace layerheat

#endif  // LAYERHEAT_MEDIA_HPP_
