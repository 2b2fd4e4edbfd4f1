// lifi-uplink: physical layer evaluation toolkit for infrared LiFi uplinks
// Copyright (C) 2025-2026 the lifi-uplink contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef LIFI_GEOMETRY_HPP
#define LIFI_GEOMETRY_HPP

#include "lifi/config.hpp"

namespace lifi
{

// Deterministic line-of-sight geometry for one UE-AP pair. The UE sits at
// horizontal distance r from the AP's floor projection, is tilted by
// elevation alpha towards azimuth beta, and theta_hat is the azimuth of the
// AP seen from the UE minus beta. The AP looks straight down.

// Path gain prefactor c0 = (m+1) A_pd F_c z_hat / (2 pi). Collects every
// constant of the LoS link so the gain reads c0 * base^m * (r^2+z^2)^-(m+3)/2.
double path_gain_coeff(const Config& cfg);

// Largest horizontal distance the receiver FoV admits, z_hat * tan(fov).
double fov_radius(const Config& cfg);

// True when the AP lies inside the receiver FoV and in front of the tilted
// LED face (positive radiance angle cosine).
bool visible(const Config& cfg, double r, double alpha, double theta_hat);

// LoS path gain in closed form. Zero when not visible; blockage is handled
// separately by the predicates below.
double path_gain(const Config& cfg, double r, double alpha, double theta_hat);

// Same quantity evaluated from explicit positions and the orientation unit
// vector, with no algebraic reduction. Kept as an independent cross-check of
// path_gain; the two must agree to machine precision.
double path_gain_vector(const Config& cfg, const double p_u[3], double alpha, double beta,
                        const double p_a[3]);

// ----- blockage predicates ---------------------------------------------------

// Half-angle of the shadow cast by the user's own body, arcsin(l_b / r_ub).
double own_body_half_angle(const Config& cfg);

// Radial condition for own-body blockage: close APs are seen over the
// user's head, so only links with r >= z_hat * r_ub / (z_b - z_u) can be cut.
bool own_body_in_range(const Config& cfg, double r);

// The user's own body blocks the link when the AP azimuth falls inside the
// shadow cone behind the user (theta_hat near pi) and the radial condition
// holds. Deterministic given theta_hat.
bool own_body_blocked(const Config& cfg, double r, double theta_hat);

// One bystander at horizontal distance r_ab from the AP, at angle theta1
// between the AP->UE and AP->blocker directions. Blocks the link when it
// stands inside the radial shadow band and within the angular half-width
// arcsin(l_b / r_ab). A blocker closer to the AP's axis than its own radius
// (r_ab < l_b) always blocks once the radial band condition holds.
bool bystander_blocks(const Config& cfg, double r, double r_ab, double theta1);

// Inner edge of the radial band a bystander must reach to matter,
// r * (z_a - z_b) / z_hat.
double bystander_band_inner(const Config& cfg, double r);

// Mean number of shadowing bystanders for a link of length r under a Poisson
// field of density lambda_b: 2 l_b r lambda_b (z_b - z_u) / z_hat.
double bystander_mean_count(const Config& cfg, double r);

// Probability that no bystander cuts the link, exp(-bystander_mean_count).
double bystander_clear_prob(const Config& cfg, double r);

} // namespace lifi

#endif // LIFI_GEOMETRY_HPP
