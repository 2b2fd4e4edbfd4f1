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

#include "lifi/config.hpp"
#include "lifi/modulation.hpp"
#include "lifi/numerics.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace lifi;

TEST_CASE("crest factor of unipolar PAM")
{
    CHECK(crest_factor_sq(2) == Catch::Approx(1.0).epsilon(1e-15));
    CHECK(crest_factor_sq(4) == Catch::Approx(9.0 / 5.0).epsilon(1e-15));
    CHECK(crest_factor_sq(32) == Catch::Approx(93.0 / 33.0).epsilon(1e-15));
}

TEST_CASE("low-pass chain gain and aliasing layout")
{
    Config cfg = preset_config("table3-sitting");
    // k = K/2 at fs = 2 f_led puts the subcarrier exactly on the LED corner;
    // the photodiode corner contributes its own factor
    const double fs = 2.0 * cfg.mod.f_led;
    const int k = cfg.mod.fft_size / 2;
    const double f = cfg.mod.f_led; // |k - K| * fs / K at the fold point
    const double expect = 1.0 / ((1.0 + 1.0) * (1.0 + std::pow(f / cfg.mod.f_pd, 2)));
    CHECK(lowpass_gain_sq(cfg, k, fs) == Catch::Approx(expect).epsilon(1e-12));

    // DC passes untouched
    CHECK(lowpass_gain_sq(cfg, 0, fs) == Catch::Approx(1.0).epsilon(1e-15));
    // mirrored subcarriers see the same magnitude
    CHECK(lowpass_gain_sq(cfg, 1, fs) ==
          Catch::Approx(lowpass_gain_sq(cfg, cfg.mod.fft_size - 1, fs)).epsilon(1e-13));
}

TEST_CASE("subcarrier snr at DC")
{
    const Config cfg = preset_config("table3-sitting");
    // at k = 0 the chain gain is 1, so snr = xi / (eta^2 fs)
    const double xi = 1e9;
    const double fs = 1e8;
    CHECK(subcarrier_snr(cfg, xi, fs, 0, 4) ==
          Catch::Approx(xi / (crest_factor_sq(4) * fs)).epsilon(1e-12));
}

TEST_CASE("post-equalization snr, frozen value")
{
    const Config cfg = preset_config("table3-sitting");
    // independently computed with a direct 512-line evaluation of the
    // equalizer average
    CHECK(pam_post_snr(cfg, 1e9, 1e8, 2) ==
          Catch::Approx(5.949685622787873).epsilon(1e-12));
    CHECK(pam_ber(cfg, 1e9, 1e8, 2) ==
          Catch::Approx(0.007359955519614507).epsilon(1e-10));
}

TEST_CASE("flat channel collapses to the closed-form snr")
{
    Config cfg = preset_config("table3-sitting");
    cfg.mod.f_led = 1e18;
    cfg.mod.f_pd = 1e18;
    for (int m : {2, 4, 8})
    {
        const double xi = 3.7e8;
        const double fs = 5e7;
        const double expect = xi / (crest_factor_sq(m) * fs);
        CHECK(pam_post_snr(cfg, xi, fs, m) == Catch::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("ber grows with sampling rate and with order")
{
    const Config cfg = preset_config("table3-sitting");
    const double xi = 5e8;
    double prev = 0.0;
    for (double fs = 1e7; fs < 3e9; fs *= 1.7)
    {
        const double ber = pam_ber(cfg, xi, fs, 4);
        CHECK(ber >= prev - 1e-15);
        prev = ber;
    }
    CHECK(pam_ber(cfg, xi, 1e8, 2) < pam_ber(cfg, xi, 1e8, 4));
    CHECK(pam_ber(cfg, xi, 1e8, 4) < pam_ber(cfg, xi, 1e8, 8));
}

TEST_CASE("cyclic prefix efficiency")
{
    const Config cfg = preset_config("table3-sitting"); // 512 / (512+16)
    CHECK(cp_efficiency(cfg) == Catch::Approx(512.0 / 528.0).epsilon(1e-15));
}

TEST_CASE("adaptive rate, frozen operating point")
{
    const Config cfg = preset_config("table3-sitting");
    const double xi = std::pow(10.0, 9.16); // 91.6 dB
    const RatePoint rp = adaptive_rate(cfg, xi);
    CHECK(rp.m_order == 2);
    CHECK(rp.rate == Catch::Approx(107097354.25).epsilon(1e-6));
    CHECK(rp.fs == Catch::Approx(110444146.57).epsilon(1e-6));
    // the chosen point sits on the BER target
    CHECK(pam_ber(cfg, xi, rp.fs, rp.m_order) ==
          Catch::Approx(cfg.mod.target_ber).margin(1e-6));
    // net rate accounting
    CHECK(rp.rate == Catch::Approx(rp.fs * cp_efficiency(cfg) *
                                   std::log2(double(rp.m_order))).epsilon(1e-12));
}

TEST_CASE("adaptive rate dominates fixed-bandwidth adaptation")
{
    const Config cfg = preset_config("table3-sitting");
    for (double db : {85.0, 95.0, 105.0, 115.0})
    {
        const double xi = std::pow(10.0, db / 10.0);
        CHECK(adaptive_rate(cfg, xi).rate >= fixed_rate(cfg, xi).rate - 1e-6);
    }
}

TEST_CASE("fixed-bandwidth adaptation switches orders at thresholds")
{
    const Config cfg = preset_config("table3-sitting");
    // frozen threshold: the smallest factor where 2-PAM at 1e8 Hz meets the
    // 3.8e-3 target
    const double xi_thr = 1.2011169978e9;
    CHECK(fixed_rate(cfg, xi_thr * 0.98).m_order == 0);
    CHECK(fixed_rate(cfg, xi_thr * 1.02).m_order == 2);
    const RatePoint rp = fixed_rate(cfg, xi_thr * 1.02);
    CHECK(rp.fs == cfg.mod.fixed_bandwidth);
    CHECK(rp.rate == Catch::Approx(1e8 * cp_efficiency(cfg)).epsilon(1e-12));

    // far above every threshold the cap order wins
    const RatePoint top = fixed_rate(cfg, 1e15);
    CHECK(top.m_order == cfg.mod.m_max);
}

TEST_CASE("infeasible link reports zero rate")
{
    const Config cfg = preset_config("table3-sitting");
    const RatePoint rp = fixed_rate(cfg, 1.0);
    CHECK(rp.rate == 0.0);
    CHECK(rp.m_order == 0);
    CHECK(adaptive_rate(cfg, 1e2).rate >= 0.0);
}
