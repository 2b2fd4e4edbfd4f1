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

#ifndef LIFI_MONTECARLO_HPP
#define LIFI_MONTECARLO_HPP

#include "lifi/config.hpp"
#include "lifi/network_stats.hpp"

#include <cstdint>
#include <vector>

namespace lifi
{

// Monte Carlo oracles for the analytical modules. Every sampler draws each
// trial from its own counter-based substream keyed by (seed, trial index), so
// results are bit-identical for any thread count and any partition of the
// trial range. Do not swap in std:: distributions here: their sequences are
// implementation-defined and would break that guarantee.

// xoshiro256++ with splitmix64 state expansion. Self-contained so every
// platform draws the same sequence.
class TrialRng
{
public:
    TrialRng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();

    // uniform on [0,1) with 53-bit resolution
    double uniform01();
    // uniform on (0,1), both ends excluded; safe under log()
    double uniform01_open();
    double uniform(double lo, double hi);

    // Laplace(location, scale) by inverse CDF
    double laplace(double location, double scale);

    // Poisson(mean) by inversion of exponential gaps; mean capped in chunks
    // so the running product never underflows
    std::int64_t poisson(double mean);

private:
    std::uint64_t s_[4];
};

// Device elevation: Laplace(mu, b) restricted to [0, pi/2] by rejection.
double sample_elevation(TrialRng& rng, const OrientationModel& orient);

// One-link path gain samples at fixed horizontal distance r. Zeros encode
// blockage, facing away, or an AP outside the FoV.
std::vector<double> mc_path_gain(const Config& cfg, double r, std::int64_t trials,
                                 std::uint64_t seed, int threads);

// Serving-link channel factor samples under the layout in cfg.net. The UE
// tilt is drawn once per trial and shared by every candidate AP; with
// cfg.run.shared_blockers the bystander field is also drawn once per trial
// and tested against every link, otherwise each link sees an independent
// field with the matching marginal law.
std::vector<double> mc_channel_factor(const Config& cfg, std::int64_t trials,
                                      std::uint64_t seed, int threads);

struct MeanStderr
{
    double mean;
    double stderr_mean;
};

// Mean achievable rate over channel factor samples. Adaptive mode evaluates
// the rate curve through a dense precomputed table (0.05 dB steps); fixed
// mode compares against exact per-order factor thresholds.
MeanStderr mc_average_rate(const Config& cfg, RateMode mode, std::int64_t trials,
                           std::uint64_t seed, int threads);

// Sorted-sample view of an empirical distribution.
class EmpiricalCdf
{
public:
    explicit EmpiricalCdf(std::vector<double> samples);

    double operator()(double x) const; // fraction of samples <= x
    double quantile(double p) const;   // smallest sample with CDF >= p
    std::size_t size() const { return xs_.size(); }

private:
    std::vector<double> xs_;
};

} // namespace lifi

#endif // LIFI_MONTECARLO_HPP
