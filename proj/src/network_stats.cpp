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

#include "lifi/network_stats.hpp"

#include "lifi/geometry.hpp"
#include "lifi/modulation.hpp"
#include "lifi/numerics.hpp"
#include "lifi/pathloss_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace lifi
{

namespace
{

// Largest radius whose conditional law still has mass above level t, probed
// through the cdf itself so it honours both kinds of support edge: radii
// where the cdf jumps to one at the nominal top, and far radii where it pins
// to one a little early. The edge falls monotonically with distance
// (including the drop where own-body shadowing switches on), so this is a
// bisection on a decreasing predicate. Both radial integrals stop here:
// splitting at the edge instead of stepping over it is what keeps the CDF
// and PDF quadratures consistent with each other.
double support_radius(const Config& cfg, double t)
{
    const double r_max = fov_radius(cfg);
    if (t <= 0.0)
        return r_max;
    if (t >= pathloss_landmarks(cfg, 0.0).g_max)
        return 0.0;
    if (pathloss_cdf(cfg, r_max, t) < 1.0)
        return r_max;

    double lo = 0.0, hi = r_max;
    for (int i = 0; i < 80; ++i)
    {
        const double mid = 0.5 * (lo + hi);
        (pathloss_cdf(cfg, mid, t) < 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Root of landmark(r) = t in (0, r_edge), for landmarks that fall with
// distance. Pushes nothing when the level is never crossed.
template <typename L>
void append_locus(std::vector<double>& cuts, double t, double r_edge, L&& landmark)
{
    double lo = 0.0, hi = r_edge;
    if (!(landmark(lo) > t) || !(landmark(hi) < t))
        return;
    for (int i = 0; i < 60; ++i)
    {
        const double mid = 0.5 * (lo + hi);
        (landmark(mid) > t ? lo : hi) = mid;
    }
    cuts.push_back(0.5 * (lo + hi));
}

// Quadrature panels for the radial integrals, pinned to every radius where
// the conditional law changes branch: the onset of own-body shadowing and
// the loci where the threshold crosses a per-radius landmark. The panel ends
// move smoothly with t and the integrand is smooth inside each panel, so the
// quadrature error is itself a smooth function of the threshold. That
// matters: a grid that drifts across the shadow-onset jump as t varies
// injects sawtooth noise into the cdf that finite differences amplify, and
// refining the grid does not shrink it.
std::vector<double> quad_panels(const Config& cfg, double t, double r_edge)
{
    std::vector<double> cuts{0.0, r_edge};
    const auto& g = cfg.geom;
    const double r_shadow = g.z_hat() * g.r_ub / (g.z_b - g.z_u);
    if (r_shadow > 0.0 && r_shadow < r_edge)
        cuts.push_back(r_shadow);
    append_locus(cuts, t, r_edge,
                 [&](double r) { return pathloss_landmarks(cfg, r).g0; });
    append_locus(cuts, t, r_edge,
                 [&](double r) { return pathloss_landmarks(cfg, r).g1; });
    append_locus(cuts, t, r_edge,
                 [&](double r) { return pathloss_landmarks(cfg, r).g_th; });
    std::sort(cuts.begin(), cuts.end());
    return cuts;
}

// Composite midpoint over the panels; discontinuities sit exactly on panel
// ends so they are never sampled. The top panel is mapped through
// r = r_edge - w u^2, which turns both the square-root cusp of the
// complement cdf and the integrable inverse square-root blowup of the
// density at the support edge into smooth integrands. Node counts follow
// panel lengths deterministically, keeping CSV output byte-reproducible.
template <typename F>
double panel_integral(F&& f, const std::vector<double>& cuts)
{
    constexpr double TOTAL_POINTS = 512.0;
    constexpr std::size_t MIN_POINTS = 24;

    const double r_edge = cuts.back();
    double total = 0.0;
    for (std::size_t p = 0; p + 1 < cuts.size(); ++p)
    {
        const double a = cuts[p];
        const double b = cuts[p + 1];
        if (!(b > a))
            continue;
        const std::size_t n = std::max<std::size_t>(
            MIN_POINTS,
            static_cast<std::size_t>(std::lround(TOTAL_POINTS * (b - a) / r_edge)));
        if (p + 2 < cuts.size())
        {
            const double h = (b - a) / static_cast<double>(n);
            for (std::size_t k = 0; k < n; ++k)
                total += f(a + (static_cast<double>(k) + 0.5) * h) * h;
        }
        else
        {
            const double w = b - a;
            const double du = 1.0 / static_cast<double>(n);
            for (std::size_t k = 0; k < n; ++k)
            {
                const double u = (static_cast<double>(k) + 0.5) * du;
                total += f(b - w * u * u) * 2.0 * w * u * du;
            }
        }
    }
    return total;
}

} // namespace

double noise_psd(const Config& cfg)
{
    return cfg.link.noise_psd();
}

double factor_from_gain(const Config& cfg, double gain)
{
    const double amp = cfg.link.delta_p * cfg.link.responsivity * gain;
    return amp * amp / (2.0 * noise_psd(cfg));
}

double gain_from_factor(const Config& cfg, double xi)
{
    return std::sqrt(2.0 * xi * noise_psd(cfg)) / (cfg.link.delta_p * cfg.link.responsivity);
}

double net_gain_cdf(const Config& cfg, double t)
{
    if (t < 0.0)
        return 0.0;

    const double lam = cfg.net.lambda_a;
    // void-probability form: exp(-Lambda_a * integral of 2 pi r (1 - F(t|r)));
    // the complement keeps the exponent small and well conditioned. Radii
    // whose conditional support tops out below t contribute nothing, so the
    // integral stops at the support radius instead of stepping over the kink.
    const double r_edge = support_radius(cfg, t);
    if (r_edge <= 0.0)
        return 1.0;
    const double integral = panel_integral(
        [&](double r) {
            return 2.0 * std::numbers::pi * r * (1.0 - pathloss_cdf(cfg, r, t));
        },
        quad_panels(cfg, t, r_edge));
    return std::exp(-lam * integral);
}

double factor_cdf(const Config& cfg, double xi)
{
    if (xi < 0.0)
        return 0.0;
    return net_gain_cdf(cfg, gain_from_factor(cfg, xi));
}

double factor_pdf(const Config& cfg, double xi)
{
    if (xi <= 0.0)
        return 0.0;

    const double g = gain_from_factor(cfg, xi);
    const double r_max = fov_radius(cfg);
    const double lam = cfg.net.lambda_a;

    const double r_edge = support_radius(cfg, g);
    if (r_edge <= 0.0)
        return 0.0;

    double density_integral = panel_integral(
        [&](double r) {
            return 2.0 * std::numbers::pi * r * pathloss_pdf(cfg, r, g);
        },
        quad_panels(cfg, g, r_edge));

    // Leibniz term from the shrinking support boundary. Conditional laws can
    // leave a small mass defect right at their upper edge (the own-body
    // shadow clips the peak of the tilt response); as the edge radius moves
    // with the threshold this defect shows up as a genuine density
    // contribution, and dropping it would make the pdf disagree with the
    // derivative of the cdf reported next door.
    if (r_edge < r_max * (1.0 - 1e-12))
    {
        const double defect = 1.0 - pathloss_cdf(cfg, r_edge, g * (1.0 - 1e-9));
        const double h = 1e-6 * r_max;
        const double slope = (pathloss_landmarks(cfg, r_edge - h).g_max -
                              pathloss_landmarks(cfg, r_edge + h).g_max) /
                             (2.0 * h);
        if (slope > 0.0 && defect > 0.0)
            density_integral += 2.0 * std::numbers::pi * r_edge * defect / slope;
    }

    // chain rule of the square map: dG/dxi = G / (2 xi)
    return factor_cdf(cfg, xi) * lam * density_integral * g / (2.0 * xi);
}

double factor_outage(const Config& cfg)
{
    return net_gain_cdf(cfg, 0.0);
}

double factor_quantile_db(const Config& cfg, double p)
{
    const double atom = factor_outage(cfg);
    if (!(p > atom) || !(p < 1.0))
        throw std::invalid_argument("factor_quantile_db: p must lie in (outage, 1)");

    double lo_db = 20.0;
    double hi_db = 200.0;
    const auto gap = [&](double db) { return factor_cdf(cfg, std::pow(10.0, db / 10.0)) - p; };
    return bisection_root(gap, lo_db, hi_db, 1e-7);
}

double average_rate(const Config& cfg, RateMode mode)
{
    // integration window in dB: start below any usable link and extend the
    // top until the CDF is within 1e-4 of one
    const double lo_db = 30.0;
    double hi_db = 120.0;
    while (factor_cdf(cfg, std::pow(10.0, hi_db / 10.0)) < 1.0 - 1e-4 && hi_db < 200.0)
        hi_db += 5.0;

    const std::size_t n = 481;
    std::vector<double> xi(n), integrand(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        const double db = lo_db + (hi_db - lo_db) * double(i) / double(n - 1);
        xi[i] = std::pow(10.0, db / 10.0);
        const double rate =
            (mode == RateMode::adaptive) ? adaptive_rate(cfg, xi[i]).rate : fixed_rate(cfg, xi[i]).rate;
        integrand[i] = factor_pdf(cfg, xi[i]) * rate;
    }

    // trapezoid on the non-uniform (logarithmic) grid
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i)
        acc += 0.5 * (integrand[i] + integrand[i + 1]) * (xi[i + 1] - xi[i]);
    return acc;
}

} // namespace lifi
