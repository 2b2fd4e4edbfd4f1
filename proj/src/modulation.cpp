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

#include "lifi/modulation.hpp"

#include "lifi/numerics.hpp"

#include <cmath>

namespace lifi
{

double crest_factor_sq(int m_order)
{
    return 3.0 * double(m_order - 1) / double(m_order + 1);
}

double lowpass_gain_sq(const Config& cfg, int k, double fs)
{
    const int K = cfg.mod.fft_size;
    const int k_signed = (k < K / 2) ? k : k - K;
    const double f = double(k_signed) * fs / double(K);
    const double a = f / cfg.mod.f_led;
    const double b = f / cfg.mod.f_pd;
    return 1.0 / ((1.0 + a * a) * (1.0 + b * b));
}

double subcarrier_snr(const Config& cfg, double xi, double fs, int k, int m_order)
{
    return xi * lowpass_gain_sq(cfg, k, fs) / (crest_factor_sq(m_order) * fs);
}

double pam_post_snr(const Config& cfg, double xi, double fs, int m_order)
{
    const int K = cfg.mod.fft_size;
    double acc = 0.0;
    for (int k = 0; k < K; ++k)
        acc += 1.0 / (1.0 + subcarrier_snr(cfg, xi, fs, k, m_order));
    return double(K) / acc - 1.0;
}

double pam_ber(const Config& cfg, double xi, double fs, int m_order)
{
    const double M = double(m_order);
    const double snr = pam_post_snr(cfg, xi, fs, m_order);
    return 2.0 * (M - 1.0) / (M * std::log2(M)) * q_function(std::sqrt(3.0 * snr / (M * M - 1.0)));
}

double cp_efficiency(const Config& cfg)
{
    return double(cfg.mod.fft_size) / double(cfg.mod.fft_size + cfg.mod.cp_length);
}

RatePoint fixed_rate(const Config& cfg, double xi)
{
    const double fs = cfg.mod.fixed_bandwidth;
    int best_m = 0;
    for (int m = 2; m <= cfg.mod.m_max; m *= 2)
    {
        if (pam_ber(cfg, xi, fs, m) <= cfg.mod.target_ber)
            best_m = m; // BER grows with M, but scan all orders anyway
    }
    if (best_m == 0)
        return RatePoint{0.0, 0, fs};
    return RatePoint{fs * cp_efficiency(cfg) * std::log2(double(best_m)), best_m, fs};
}

RatePoint adaptive_rate(const Config& cfg, double xi)
{
    // Search window for the sampling rate. BER -> 0.5-ish as fs -> infinity
    // (SNR per subcarrier collapses), so the upper bracket always closes; the
    // lower edge declares orders infeasible for very weak links.
    constexpr double FS_LO = 1.0e3;
    constexpr double FS_HI_START = 1.0e10;
    constexpr double FS_HI_CAP = 1.0e11;

    RatePoint best{0.0, 0, FS_LO};
    for (int m = 2; m <= cfg.mod.m_max; m *= 2)
    {
        if (pam_ber(cfg, xi, FS_LO, m) > cfg.mod.target_ber)
            continue; // this order misses the target even at the slowest rate

        double hi = FS_HI_START;
        while (pam_ber(cfg, xi, hi, m) <= cfg.mod.target_ber && hi < FS_HI_CAP)
            hi *= 2.0;

        const auto gap = [&](double fs) { return pam_ber(cfg, xi, fs, m) - cfg.mod.target_ber; };
        const double fs_star = bisection_root(gap, FS_LO, hi, 1e-6 * FS_LO);
        const double rate = fs_star * cp_efficiency(cfg) * std::log2(double(m));
        if (rate > best.rate)
            best = RatePoint{rate, m, fs_star};
    }
    return best;
}

} // namespace lifi
