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

#include "lifi/pathloss_stats.hpp"

#include "lifi/geometry.hpp"
#include "lifi/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lifi
{

namespace
{

constexpr double R_ZERO_EPS = 1e-9; // below this the r = 0 law applies

// Coefficients of the fitted ramp slope zeta(r). The fit was produced once
// against the exact tilt average and is part of the closed form itself, so
// the constants are used verbatim everywhere.
double ramp_slope_coeff(double r)
{
    return 0.04942 * std::exp(-0.2393 * r) - 0.8925 * std::exp(-5.159 * r) + 0.5718;
}

// Linearization anchor Y0(t): -1/2 below g1, a straight ramp of slope
// (zeta+1/2)/(g2-g1) up to g_th, then 0. The jump at g_th is part of the
// closed form; both sides stay well clear of |Y0| = 1.
double anchor_y0(const PathlossLandmarks& lm, double t)
{
    if (t < 0.0)
        return 0.0;
    if (t <= lm.g1)
        return -0.5;
    if (t < lm.g_th)
        return (lm.zeta + 0.5) * (t - lm.g1) / (lm.g2 - lm.g1) - 0.5;
    return 0.0;
}

// Elevation angles (relative to the Laplace location mu) at which the gain
// level t is crossed, after folding in the blockage indicators. These are the
// integration limits of the tilt average.
struct TiltLimits
{
    double amin;
    double amax;
    double w; // normalized gain level (t/c0)^(1/m) * rho^(3/(2m))
};

TiltLimits tilt_limits(const Config& cfg, double r, double t, bool s1, bool s2)
{
    const double zh = cfg.geom.z_hat();
    const double m = cfg.optics.lambertian_order();
    const double c0 = path_gain_coeff(cfg);
    const double rho = r * r + zh * zh;
    const double w = std::pow(t / c0, 1.0 / m) * std::pow(rho, 3.0 / (2.0 * m));

    const double lr2 = (cfg.geom.l_b * cfg.geom.l_b) / (cfg.geom.r_ub * cfg.geom.r_ub);
    const double i1 = s1 ? 1.0 : 0.0;
    const double i12 = (s1 && s2) ? 1.0 : 0.0;

    TiltLimits out;
    out.w = w;
    out.amin = std::abs(asin_clamped(w / std::sqrt(1.0 - i12 * r * r * lr2 / rho)) -
                        std::atan((zh / r) / std::sqrt(1.0 - i12 * lr2))) -
               cfg.orient.mu;
    out.amax = std::numbers::pi - asin_clamped(w / std::sqrt(1.0 - i1 * r * r * lr2 / rho)) -
               std::atan((zh / r) / std::sqrt(1.0 - i1 * lr2)) - cfg.orient.mu;
    return out;
}

// Laplace-weighted integrals over [amin, amax]: A1 of the plain density and
// A2 of the density against 1/(angle + tan mu). A2 is where the exponential
// integral enters; its arguments are bounded away from zero because
// tan(mu) > mu keeps the pole outside the reachable angle range.
struct LaplaceIntegrals
{
    double a1;
    double a2;
};

LaplaceIntegrals laplace_integrals(const Config& cfg, double amin, double amax)
{
    const double b = cfg.orient.scale_b();
    const double tm = std::tan(cfg.orient.mu);
    const RampPair rmin = split_ramp(amin);
    const RampPair rmax = split_ramp(amax);

    LaplaceIntegrals out;
    out.a1 = std::exp(rmax.minus / b) - std::exp(rmin.minus / b) - std::exp(-rmax.plus / b) +
             std::exp(-rmin.plus / b);
    out.a2 = std::exp(tm / b) * (expint_ei(-(rmax.plus + tm) / b) - expint_ei(-(rmin.plus + tm) / b)) +
             std::exp(-tm / b) * (expint_ei((rmax.minus + tm) / b) - expint_ei((rmin.minus + tm) / b));
    return out;
}

} // namespace

PathlossLandmarks pathloss_landmarks(const Config& cfg, double r)
{
    const double zh = cfg.geom.z_hat();
    const double m = cfg.optics.lambertian_order();
    const double c0 = path_gain_coeff(cfg);
    const double mu = cfg.orient.mu;
    const double rho = r * r + zh * zh;
    const double env = std::pow(rho, -0.5 * (m + 3.0));

    PathlossLandmarks lm;
    lm.g0 = c0 * std::pow(zh, m) * env;
    lm.g1 = c0 * std::pow(std::max(zh * std::cos(mu) - r * std::sin(mu), 0.0), m) * env;
    lm.g2 = c0 * std::pow(zh * std::cos(mu) + r * std::sin(mu), m) * env;
    lm.zeta = ramp_slope_coeff(r);
    lm.g_th = 1.45 * (lm.g2 - lm.g1) / (lm.zeta + 0.5) + lm.g1;
    lm.s1 = own_body_in_range(cfg, r);

    if (lm.s1)
    {
        const double lr2 = (cfg.geom.l_b * cfg.geom.l_b) / (cfg.geom.r_ub * cfg.geom.r_ub);
        lm.g_max = c0 * std::pow(zh * std::cos(mu) + r * std::sin(mu) * std::sqrt(1.0 - lr2), m) * env;
    }
    else
    {
        lm.g_max = c0 * std::pow(rho, -1.5); // t at the unconstrained optimum tilt
    }
    return lm;
}

double pathloss_cdf(const Config& cfg, double r, double t)
{
    if (t < 0.0)
        return 0.0;
    if (r > fov_radius(cfg))
        return 1.0; // gain is identically zero outside the FoV disc
    if (r < R_ZERO_EPS)
        return pathloss_cdf_r0(cfg, t);

    const PathlossLandmarks lm = pathloss_landmarks(cfg, r);
    if (t >= lm.g_max)
        return 1.0;

    const double zh = cfg.geom.z_hat();
    const double mu = cfg.orient.mu;
    const double b = cfg.orient.scale_b();
    const double rho = r * r + zh * zh;

    const bool s2 = t > lm.g0;
    const TiltLimits tl = tilt_limits(cfg, r, t, lm.s1, s2);
    const LaplaceIntegrals li = laplace_integrals(cfg, tl.amin, tl.amax);

    const double y0 = anchor_y0(lm, t);
    const double sq = std::sqrt(1.0 - y0 * y0);
    const double x = tl.w * std::sqrt(rho);
    const double two_pi = 2.0 * std::numbers::pi;

    const double p1 = std::acos(y0) / two_pi + (y0 + (zh / r) * std::tan(mu)) / (two_pi * sq);
    const double p2 = (zh / std::cos(mu) - x) / (two_pi * b * r * std::cos(mu) * sq);

    const double ub = lm.s1 ? own_body_half_angle(cfg) / std::numbers::pi : 0.0;
    const double i2 = s2 ? 1.0 : 0.0;
    const double j = 0.5 * (i2 + 1.0) +
                     0.5 * i2 * sgn(tl.amin) * (1.0 - std::exp(-std::abs(tl.amin) / b)) -
                     0.5 * sgn(tl.amax) * (1.0 - std::exp(-std::abs(tl.amax) / b));

    const double clear = bystander_clear_prob(cfg, r);
    const double f = (p1 * li.a1 - p2 * li.a2 + ub + j * (1.0 - ub)) * clear + 1.0 - clear;
    return std::clamp(f, 0.0, 1.0);
}

double pathloss_pdf(const Config& cfg, double r, double t)
{
    if (t <= 0.0)
        return 0.0;
    if (r > fov_radius(cfg))
        return 0.0; // all mass sits in the atom at zero
    if (r < R_ZERO_EPS)
        return pathloss_pdf_r0(cfg, t);

    const PathlossLandmarks lm = pathloss_landmarks(cfg, r);
    if (t >= lm.g_max)
        return 0.0;
    // At far radii the cdf can pin to one a little below the nominal top of
    // the support (the clamped tilt limits close the admissible cone early).
    // Density reported past that point would be phantom mass the cdf never
    // moves through, so stay consistent with the cdf instead of the nominal
    // landmark.
    if (pathloss_cdf(cfg, r, t) >= 1.0)
        return 0.0;

    const double zh = cfg.geom.z_hat();
    const double m = cfg.optics.lambertian_order();
    const double mu = cfg.orient.mu;
    const double b = cfg.orient.scale_b();
    const double rho = r * r + zh * zh;
    const double lr2 = (cfg.geom.l_b * cfg.geom.l_b) / (cfg.geom.r_ub * cfg.geom.r_ub);

    const bool s2 = t > lm.g0;
    const double i1 = lm.s1 ? 1.0 : 0.0;
    const double i12 = (lm.s1 && s2) ? 1.0 : 0.0;
    const TiltLimits tl = tilt_limits(cfg, r, t, lm.s1, s2);
    const LaplaceIntegrals li = laplace_integrals(cfg, tl.amin, tl.amax);

    const double y0 = anchor_y0(lm, t);
    const double sq = std::sqrt(1.0 - y0 * y0);
    const double x = tl.w * std::sqrt(rho);
    const double two_pi = 2.0 * std::numbers::pi;
    const double ub_angle = i1 * own_body_half_angle(cfg);
    const double tm = std::tan(mu);

    // level-crossing speeds of the two tilt limits; the inner square roots
    // vanish at the support edge, which is the integrable edge singularity
    const double tiny = 1e-300;
    const double damax =
        -(tl.w / (m * t)) /
        std::sqrt(std::max(1.0 - tl.w * tl.w - i1 * r * r * lr2 / rho, tiny));
    // sign flips when t crosses the untilted gain g0: the lower limit stops
    // shrinking and starts growing again
    const double damin =
        sgn(t - lm.g0) * (tl.w / (m * t)) /
        std::sqrt(std::max(1.0 - tl.w * tl.w - i12 * r * r * lr2 / rho, tiny));
    const double dy0 =
        (lm.g1 <= t && t <= lm.g_th) ? (lm.zeta + 0.5) / (lm.g2 - lm.g1) : 0.0;

    const double frac_max = (zh * (tl.amax * std::sin(mu) - std::cos(mu)) + x) /
                            (r * (tl.amax * std::cos(mu) + std::sin(mu)) * sq);
    const double frac_min = (zh * (tl.amin * std::sin(mu) - std::cos(mu)) + x) /
                            (r * (tl.amin * std::cos(mu) + std::sin(mu)) * sq);

    const double grp_max = std::exp(-std::abs(tl.amax) / b) / (two_pi * b) *
                           (frac_max + ub_angle + y0 / sq - std::numbers::pi + std::acos(y0)) *
                           damax;
    const double grp_min = -std::exp(-std::abs(tl.amin) / b) / (two_pi * b) *
                           (y0 / sq - (s2 ? 1.0 : 0.0) * (std::numbers::pi - ub_angle) +
                            frac_min + std::acos(y0)) *
                           damin;
    const double grp_y0 = y0 / (two_pi * std::pow(1.0 - y0 * y0, 1.5)) *
                          ((y0 + (zh / r) * tm) * li.a1 -
                           (zh - x * std::cos(mu)) / (b * r * std::cos(mu) * std::cos(mu)) * li.a2) *
                          dy0;
    const double grp_tail = x * li.a2 / (two_pi * b * r * m * t * sq * std::cos(mu));

    const double pdf = (grp_max + grp_min + grp_y0 + grp_tail) * bystander_clear_prob(cfg, r);
    return std::max(pdf, 0.0);
}

double pathloss_atom(const Config& cfg, double r)
{
    return pathloss_cdf(cfg, r, 0.0);
}

// ----- directly under the AP -------------------------------------------------

double pathloss_cdf_r0(const Config& cfg, double t)
{
    if (t < 0.0)
        return 0.0;

    const double zh = cfg.geom.z_hat();
    const double m = cfg.optics.lambertian_order();
    const double c0 = path_gain_coeff(cfg);
    const double t_max = c0 / (zh * zh * zh);
    if (t >= t_max)
        return 1.0;

    const double b = cfg.orient.scale_b();
    const double u = std::acos(std::pow(t / t_max, 1.0 / m)) - cfg.orient.mu;
    return 0.5 - 0.5 * sgn(u) * (1.0 - std::exp(-std::abs(u) / b));
}

double pathloss_pdf_r0(const Config& cfg, double t)
{
    const double zh = cfg.geom.z_hat();
    const double m = cfg.optics.lambertian_order();
    const double c0 = path_gain_coeff(cfg);
    const double t_max = c0 / (zh * zh * zh);
    if (t <= 0.0 || t >= t_max)
        return 0.0;

    const double b = cfg.orient.scale_b();
    const double u = std::acos(std::pow(t / t_max, 1.0 / m)) - cfg.orient.mu;
    const double inv_root = std::pow(t_max / t, 2.0 / m) - 1.0;
    return std::exp(-std::abs(u) / b) / (2.0 * b * m * t * std::sqrt(std::max(inv_root, 1e-300)));
}

} // namespace lifi
