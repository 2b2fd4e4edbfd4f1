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

#ifndef LIFI_MODULATION_HPP
#define LIFI_MODULATION_HPP

#include "lifi/config.hpp"

namespace lifi
{

// M-PAM single-carrier transmission with cyclic prefix and frequency-domain
// LMMSE equalization over the first-order LED and photodiode low-pass chain.
// Everything is parameterized by the channel factor xi (signal energy over
// noise PSD, in Hz) so link statistics and modulation stay decoupled.

// Squared crest factor 3(M-1)/(M+1) of unipolar M-PAM: converts electrical
// signal power into the square of the minimum level spacing.
double crest_factor_sq(int m_order);

// |H(f)|^2 of the LED * photodiode low-pass chain at subcarrier k for
// sampling rate fs. Subcarriers above fft_size/2 alias to negative
// frequencies, mirroring the real DFT layout.
double lowpass_gain_sq(const Config& cfg, int k, double fs);

// Pre-equalization SNR of subcarrier k.
double subcarrier_snr(const Config& cfg, double xi, double fs, int k, int m_order);

// Post-equalization decision SNR of LMMSE single-carrier FDE: the harmonic
// style average 1/mean(1/(1+snr_k)) - 1 over all fft_size subcarriers.
double pam_post_snr(const Config& cfg, double xi, double fs, int m_order);

// Pre-FEC symbol-mapped bit error rate of M-PAM at the post-equalization SNR.
double pam_ber(const Config& cfg, double xi, double fs, int m_order);

struct RatePoint
{
    double rate;    // net bit rate [bit/s], cyclic prefix overhead included
    int m_order;    // chosen PAM order (0 when no order meets the BER target)
    double fs;      // sampling rate the rate was achieved at [Hz]
};

// Fixed-bandwidth link adaptation: keep fs = fixed_bandwidth and pick the
// largest PAM order that meets the BER target. Rate 0 when none does.
RatePoint fixed_rate(const Config& cfg, double xi);

// Adaptive link adaptation: for every PAM order, push fs up by bisection to
// the point where the BER meets the target exactly, then keep the best
// rate * order combination. BER grows monotonically with fs, which makes the
// bisection well posed.
RatePoint adaptive_rate(const Config& cfg, double xi);

// Net symbol-rate fraction fft_size / (fft_size + cp_length).
double cp_efficiency(const Config& cfg);

} // namespace lifi

#endif // LIFI_MODULATION_HPP
