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

#include "lifi/geometry.hpp"

#include "lifi/numerics.hpp"

#include <cmath>
#include <numbers>

namespace lifi
{

double path_gain_coeff(const Config& cfg)
{
    const double m = cfg.optics.lambertian_order();
    return (m + 1.0) * cfg.optics.pd_area * cfg.optics.concentrator_gain() * cfg.geom.z_hat() /
           (2.0 * std::numbers::pi);
}

double fov_radius(const Config& cfg)
{
    return cfg.geom.z_hat() * std::tan(cfg.optics.fov);
}

bool visible(const Config& cfg, double r, double alpha, double theta_hat)
{
    if (r > fov_radius(cfg))
        return false;
    const double zh = cfg.geom.z_hat();
    // radiance angle cosine times the (positive) link distance
    return zh * std::cos(alpha) - r * std::sin(alpha) * std::cos(theta_hat) > 0.0;
}

double path_gain(const Config& cfg, double r, double alpha, double theta_hat)
{
    if (r > fov_radius(cfg))
        return 0.0;

    const double zh = cfg.geom.z_hat();
    const double base = zh * std::cos(alpha) - r * std::sin(alpha) * std::cos(theta_hat);
    if (base <= 0.0)
        return 0.0; // AP behind the tilted LED face

    const double m = cfg.optics.lambertian_order();
    const double rho = r * r + zh * zh;
    return path_gain_coeff(cfg) * std::pow(base, m) * std::pow(rho, -0.5 * (m + 3.0));
}

double path_gain_vector(const Config& cfg, const double p_u[3], double alpha, double beta,
                        const double p_a[3])
{
    // LED normal for tilt (alpha, beta); the AP normal points straight down.
    const double o_u[3] = {std::cos(beta) * std::sin(alpha), std::sin(beta) * std::sin(alpha),
                           std::cos(alpha)};

    const double d[3] = {p_a[0] - p_u[0], p_a[1] - p_u[1], p_a[2] - p_u[2]};
    const double dist = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
    if (dist <= 0.0)
        return 0.0;

    const double cos_phi = (o_u[0] * d[0] + o_u[1] * d[1] + o_u[2] * d[2]) / dist;
    const double cos_psi = d[2] / dist; // incidence on the downward-facing AP

    if (cos_phi <= 0.0 || cos_psi < std::cos(cfg.optics.fov))
        return 0.0;

    const double m = cfg.optics.lambertian_order();
    return (m + 1.0) * cfg.optics.pd_area * cfg.optics.concentrator_gain() /
           (2.0 * std::numbers::pi * dist * dist) * std::pow(cos_phi, m) * cos_psi;
}

// ----- blockage --------------------------------------------------------------

double own_body_half_angle(const Config& cfg)
{
    return asin_clamped(cfg.geom.l_b / cfg.geom.r_ub);
}

bool own_body_in_range(const Config& cfg, double r)
{
    return r >= cfg.geom.z_hat() * cfg.geom.r_ub / (cfg.geom.z_b - cfg.geom.z_u);
}

bool own_body_blocked(const Config& cfg, double r, double theta_hat)
{
    if (!own_body_in_range(cfg, r))
        return false;
    // the body stands opposite the tilt azimuth, so the shadow is centred on
    // theta_hat = pi
    const double gap = std::numbers::pi - std::abs(theta_hat);
    return std::abs(gap) <= own_body_half_angle(cfg);
}

double bystander_band_inner(const Config& cfg, double r)
{
    return r * (cfg.geom.z_a - cfg.geom.z_b) / cfg.geom.z_hat();
}

bool bystander_blocks(const Config& cfg, double r, double r_ab, double theta1)
{
    if (r_ab < bystander_band_inner(cfg, r) || r_ab > r)
        return false;
    // the angular window saturates at a half plane when the blocker hugs the
    // axis (r_ab < l_b); the true footprint there is wider, but that corner
    // needs the band to start inside l_b and is vanishingly rare
    return std::abs(theta1) <= asin_clamped(cfg.geom.l_b / r_ab);
}

double bystander_mean_count(const Config& cfg, double r)
{
    return 2.0 * cfg.geom.l_b * r * cfg.blockers.lambda_b * (cfg.geom.z_b - cfg.geom.z_u) /
           cfg.geom.z_hat();
}

double bystander_clear_prob(const Config& cfg, double r)
{
    return std::exp(-bystander_mean_count(cfg, r));
}

} // namespace lifi
