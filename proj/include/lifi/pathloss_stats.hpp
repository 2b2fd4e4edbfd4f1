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

#ifndef LIFI_PATHLOSS_STATS_HPP
#define LIFI_PATHLOSS_STATS_HPP

#include "lifi/config.hpp"

namespace lifi
{

// Closed-form distribution of the LoS path gain G for one UE-AP link at
// horizontal distance r, averaged over the random device tilt (Laplace
// elevation, uniform azimuth) and over both blockage mechanisms (the user's
// own body and a Poisson field of bystanders).
//
// The law is mixed: a point mass at G = 0 (outage of the single link) plus a
// density on (0, g_max). pathloss_cdf covers both; pathloss_pdf returns only
// the continuous part, with the atom reported by pathloss_atom.

// Landmark gains of the conditional law at distance r. All carry the same
// (r^2 + z^2)^-(m+3)/2 envelope and differ in the tilt that generates them.
struct PathlossLandmarks
{
    double g0;    // gain of an untilted device (alpha = 0)
    double g1;    // gain at the mean tilt, AP on the far side (theta_hat = pi)
    double g2;    // gain at the mean tilt, AP on the tilt side (theta_hat = 0)
    double g_th;  // upper edge of the linearization ramp between g1 and g2
    double g_max; // upper support edge used by the closed form (see note)
    double zeta;  // distance-dependent slope coefficient of the ramp
    bool s1;      // own-body blockage radially possible at this r
};

PathlossLandmarks pathloss_landmarks(const Config& cfg, double r);

// P[G <= t] for a link at distance r > 0. Exact in the geometry and blockage
// terms; the tilt average linearizes one arccos around a distance-tuned
// anchor, which is what creates the ramp between g1 and g_th.
//
// Note on the upper edge: for r inside the own-body radial range, g_max
// anchors the shadowed maximum at the mean tilt instead of the true argmax,
// and sits up to a few percent below the true supremum. The CDF clamps to 1
// there; Monte Carlo comparisons see this as part of the approximation error.
double pathloss_cdf(const Config& cfg, double r, double t);

// Continuous part of the density dF/dt on (0, g_max); zero outside. The atom
// at zero is *not* included.
double pathloss_pdf(const Config& cfg, double r, double t);

// P[G = 0]: blocked, outside the FoV, or facing away.
double pathloss_atom(const Config& cfg, double r);

// Distribution directly under the AP (r = 0). The azimuth drops out and the
// law is a pure Laplace image with no blockage; support (0, c0/z_hat^3).
double pathloss_cdf_r0(const Config& cfg, double t);
double pathloss_pdf_r0(const Config& cfg, double t);

} // namespace lifi

#endif // LIFI_PATHLOSS_STATS_HPP
