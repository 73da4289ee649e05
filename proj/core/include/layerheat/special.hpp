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

#ifndef LAYERHEAT_SPECIAL_HPP_
#define LAYERHEAT_SPECIAL_HPP_

namespace layerheat {

// Bessel function of the first kind J_order(z) for real order >= -1/2 and
// z >= 0.
//
// Accuracy: half-integer orders (-1/2, 1/2, 3/2) use the closed trigonometric
// forms, integer orders 0 and 1 use Chebyshev expansions ported from the
// SLATEC FNLIB routines DBESJ0/DBESJ1; these are good to ~1e-15 relative for
// z <= 1e3 and are the only orders the transform kernels need for transverse
// dimension m <= 4. Other orders fall back to the ascending series (z <= 12)
// or the large-argument Hankel expansion, which is accurate to ~1e-10 near
// the switch point.
//
// Throws std::domain_error for order < -1/2 or z < 0.
double bessel_j(double order, double z);

// J_order(z) / z^order with the removable singularity at z = 0 filled by the
// series limit 1/(2^order * Gamma(order+1)). Requires order >= 0, z >= 0.
double normalized_bessel(double order, double z);

}  // namespace layerheat

#endif  // LAYERHEAT_SPECIAL_HPP_
