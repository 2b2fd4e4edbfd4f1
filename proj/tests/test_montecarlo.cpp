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
#include "lifi/montecarlo.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

using namespace lifi;

TEST_CASE("substreams are reproducible and index-keyed")
{
    TrialRng a(1234, 7);
    TrialRng b(1234, 7);
    for (int i = 0; i < 64; ++i)
        CHECK(a.next_u64() == b.next_u64());

    // different stream index, different sequence
    TrialRng c(1234, 8);
    int same = 0;
    TrialRng a2(1234, 7);
    for (int i = 0; i < 64; ++i)
        same += (a2.next_u64() == c.next_u64());
    CHECK(same == 0);

    // different seed, different sequence
    TrialRng d(1235, 7);
    TrialRng a3(1234, 7);
    same = 0;
    for (int i = 0; i < 64; ++i)
        same += (a3.next_u64() == d.next_u64());
    CHECK(same == 0);
}

TEST_CASE("uniform01 stays inside the half-open interval")
{
    TrialRng rng(99, 0);
    for (int i = 0; i < 10000; ++i)
    {
        const double u = rng.uniform01();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const double v = rng.uniform01_open();
        CHECK(v > 0.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("laplace sampler moments")
{
    TrialRng rng(2718, 3);
    const double loc = 0.7;
    const double scale = 0.13;
    const int n = 200000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i)
    {
        const double x = rng.laplace(loc, scale);
        sum += x;
        sumsq += (x - loc) * (x - loc);
    }
    const double mean = sum / n;
    const double var = sumsq / n;
    // Var = 2 b^2; loose 5 sigma style bands for a fixed seed
    CHECK(mean == Catch::Approx(loc).margin(5.0 * scale * std::sqrt(2.0 / n) * 1.5));
    CHECK(var == Catch::Approx(2.0 * scale * scale).epsilon(0.05));
}

TEST_CASE("poisson sampler mean, small and large")
{
    TrialRng rng(31415, 11);
    for (double mean : {0.3, 2.26, 40.0, 130.0})
    {
        const int n = 40000;
        double sum = 0.0;
        for (int i = 0; i < n; ++i)
            sum += double(rng.poisson(mean));
        const double est = sum / n;
        CHECK(est == Catch::Approx(mean).margin(5.0 * std::sqrt(mean / n) + 0.01));
    }
    CHECK(rng.poisson(0.0) == 0);
}

TEST_CASE("elevation sampling respects the quarter-circle truncation")
{
    TrialRng rng(555, 2);
    const OrientationModel orient = OrientationModel::preset(Pose::sitting);
    int below = 0;
    for (int i = 0; i < 50000; ++i)
    {
        const double a = sample_elevation(rng, orient);
        CHECK(a >= 0.0);
        CHECK(a <= 0.5 * std::numbers::pi);
        below += (a < orient.mu);
    }
    // median of the untruncated law is mu and the truncation is mild
    CHECK(double(below) / 50000.0 == Catch::Approx(0.5).margin(0.02));
}

TEST_CASE("path gain samples are identical for any thread count")
{
    const Config cfg = preset_config("table3-sitting");
    const auto one = mc_path_gain(cfg, 0.9, 4000, 42, 1);
    const auto four = mc_path_gain(cfg, 0.9, 4000, 42, 4);
    const auto three = mc_path_gain(cfg, 0.9, 4000, 42, 3);
    REQUIRE(one.size() == four.size());
    REQUIRE(one.size() == three.size());
    for (std::size_t i = 0; i < one.size(); ++i)
    {
        CHECK(one[i] == four[i]);
        CHECK(one[i] == three[i]);
    }
}

TEST_CASE("channel factor samples are identical for any thread count")
{
    Config cfg = preset_config("table3-sitting");
    cfg.run.trials = 3000;
    const auto a = mc_channel_factor(cfg, 3000, 7, 1);
    const auto b = mc_channel_factor(cfg, 3000, 7, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i] == b[i]);
}

TEST_CASE("different seeds decorrelate the sample sets")
{
    const Config cfg = preset_config("table3-sitting");
    const auto a = mc_path_gain(cfg, 0.9, 2000, 1, 1);
    const auto b = mc_path_gain(cfg, 0.9, 2000, 2, 1);
    int identical = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        identical += (a[i] == b[i] && a[i] != 0.0);
    CHECK(identical == 0);
}

TEST_CASE("empirical cdf semantics")
{
    EmpiricalCdf cdf({3.0, 1.0, 2.0, 2.0});
    CHECK(cdf.size() == 4);
    CHECK(cdf(0.5) == 0.0);
    CHECK(cdf(1.0) == Catch::Approx(0.25));
    CHECK(cdf(2.0) == Catch::Approx(0.75));
    CHECK(cdf(2.5) == Catch::Approx(0.75));
    CHECK(cdf(3.0) == 1.0);
    CHECK(cdf(9.0) == 1.0);

    CHECK(cdf.quantile(0.25) == 1.0);
    CHECK(cdf.quantile(0.26) == 2.0);
    CHECK(cdf.quantile(0.75) == 2.0);
    CHECK(cdf.quantile(1.0) == 3.0);
}

TEST_CASE("finite layouts produce only in-room links")
{
    // square-grid layout: every trial must see the same deterministic AP set,
    // so two runs with different seeds share the support of the factor law
    Config cfg = preset_config("table3-sitting");
    cfg.net.layout = Layout::finite_square;
    cfg.net.room_side = 8.0;
    const auto s = mc_channel_factor(cfg, 500, 3, 1);
    CHECK(s.size() == 500);
    for (double v : s)
        CHECK(v >= 0.0);
}

TEST_CASE("mean rate estimator agrees between modes of computation")
{
    Config cfg = preset_config("table3-sitting");
    cfg.net.lambda_a = 0.5;
    const MeanStderr adaptive = mc_average_rate(cfg, RateMode::adaptive, 4000, 11, 1);
    const MeanStderr fixed = mc_average_rate(cfg, RateMode::fixed, 4000, 11, 1);
    CHECK(adaptive.mean > 0.0);
    CHECK(fixed.mean > 0.0);
    CHECK(adaptive.mean >= fixed.mean);
    CHECK(adaptive.stderr_mean > 0.0);
    CHECK(adaptive.stderr_mean < adaptive.mean);
}
