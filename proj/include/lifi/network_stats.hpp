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

#ifndef LIFI_NETWORK_STATS_HPP
#define LIFI_NETWORK_STATS_HPP

#include "lifi/config.hpp"

namespace lifi
{

// Statistics of the serving link over a homogeneous PPP of ceiling APs: the
// UE connects to the AP with the largest path gain, every link at distance r
// carries the conditional law from pathloss_stats, and links are treated as
// independent given the AP positions. All integrals run over the FoV disc of
// radius fov_radius, the only region where the gain can be positive.

// Thermal noise PSD shortcut, N0 = 8 k_B T / R_L.
double noise_psd(const Config& cfg);

// Channel factor of one link: xi = (delta_p * responsivity * G)^2 / (2 N0).
double factor_from_gain(const Config& cfg, double gain);

// Inverse map, G = sqrt(2 xi N0) / (delta_p * responsivity).
double gain_from_factor(const Config& cfg, double xi);

// P[G* <= t] for the best-AP gain G*, the void-probability exponential of
// the radial integral of 1 - pathloss_cdf.
double net_gain_cdf(const Config& cfg, double t);

// CDF / continuous PDF of the serving channel factor. The PDF carries the
// chain rule of the xi <-> gain square map; the point mass at zero (network
// outage) is factor_outage.
double factor_cdf(const Config& cfg, double xi);
double factor_pdf(const Config& cfg, double xi);

// P[no usable AP]: every AP in the FoV disc blocked or facing away.
double factor_outage(const Config& cfg);

// Smallest xi (in dB-Hz) with factor_cdf >= p. p must exceed the outage
// mass; throws std::invalid_argument otherwise.
double factor_quantile_db(const Config& cfg, double p);

enum class RateMode
{
    fixed,
    adaptive
};

// Mean achievable uplink rate E[R(xi)], integrating the rate curve against
// the factor density on a logarithmic xi grid plus nothing for the outage
// atom (rate zero there).
double average_rate(const Config& cfg, RateMode mode);

} // namespace lifi

#endif // LIFI_NETWORK_STATS_HPP
