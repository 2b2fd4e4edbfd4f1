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

#include "lifi/montecarlo.hpp"

#include "lifi/geometry.hpp"
#include "lifi/modulation.hpp"
#include "lifi/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace lifi
{

// ----- deterministic RNG -----------------------------------------------------

namespace
{

constexpr std::uint64_t GOLDEN = 0x9E3779B97F4A7C15ULL;

std::uint64_t splitmix64(std::uint64_t& state)
{
    state += GOLDEN;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t rotl(std::uint64_t x, int k)
{
    return (x << k) | (x >> (64 - k));
}

} // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t stream)
{
    // hash the seed once, then offset by the stream index; splitmix64 is a
    // bijection of its state, so distinct streams get distinct, well-mixed
    // initial states
    std::uint64_t st = seed;
    st = splitmix64(st) + stream * GOLDEN;
    s_[0] = splitmix64(st);
    s_[1] = splitmix64(st);
    s_[2] = splitmix64(st);
    s_[3] = splitmix64(st);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0)
        s_[0] = 1; // all-zero state is the one fixed point of xoshiro
}

std::uint64_t TrialRng::next_u64()
{
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double TrialRng::uniform01()
{
    return double(next_u64() >> 11) * 0x1.0p-53;
}

double TrialRng::uniform01_open()
{
    return (double(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double TrialRng::uniform(double lo, double hi)
{
    return lo + (hi - lo) * uniform01();
}

double TrialRng::laplace(double location, double scale)
{
    const double u = uniform01_open() - 0.5;
    return location - scale * sgn(u) * std::log1p(-2.0 * std::abs(u));
}

std::int64_t TrialRng::poisson(double mean)
{
    std::int64_t total = 0;
    // product-of-uniforms inversion; chunked so exp(-mean) stays away from
    // the underflow edge for large means
    while (mean > 0.0)
    {
        const double chunk = std::min(mean, 60.0);
        mean -= chunk;
        const double limit = std::exp(-chunk);
        double prod = uniform01_open();
        std::int64_t k = 0;
        while (prod > limit)
        {
            ++k;
            prod *= uniform01_open();
        }
        total += k;
    }
    return total;
}

double sample_elevation(TrialRng& rng, const OrientationModel& orient)
{
    const double b = orient.scale_b();
    for (int i = 0; i < 100000; ++i)
    {
        const double a = rng.laplace(orient.mu, b);
        if (a >= 0.0 && a <= 0.5 * std::numbers::pi)
            return a;
    }
    throw std::runtime_error("sample_elevation: rejection loop failed to terminate");
}

// ----- trial partitioning ----------------------------------------------------

namespace
{

int resolve_threads(int requested)
{
    if (requested > 0)
        return requested;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? int(hc) : 1;
}

// Run fn(trial_index) for every trial, split across threads in contiguous
// blocks. Each trial derives everything from its own substream and writes to
// its own slot, so the partition cannot influence the result.
template <typename Fn>
void parallel_trials(std::int64_t trials, int threads, Fn&& fn)
{
    const int n_threads = std::min<std::int64_t>(resolve_threads(threads), trials);
    if (n_threads <= 1)
    {
        for (std::int64_t i = 0; i < trials; ++i)
            fn(i);
        return;
    }

    std::vector<std::thread> pool;
    pool.reserve(std::size_t(n_threads));
    const std::int64_t block = (trials + n_threads - 1) / n_threads;
    for (int t = 0; t < n_threads; ++t)
    {
        const std::int64_t lo = std::int64_t(t) * block;
        const std::int64_t hi = std::min(lo + block, trials);
        if (lo >= hi)
            break;
        pool.emplace_back([lo, hi, &fn]() {
            for (std::int64_t i = lo; i < hi; ++i)
                fn(i);
        });
    }
    for (auto& th : pool)
        th.join();
}

double wrap_pi(double a)
{
    a = std::fmod(a + std::numbers::pi, 2.0 * std::numbers::pi);
    if (a < 0.0)
        a += 2.0 * std::numbers::pi;
    return a - std::numbers::pi;
}

// Bystanders seen by one link, drawn on demand: Poisson count over the disc
// of radius r around the AP, uniform positions expressed as (distance from
// the AP, angle off the AP->UE direction).
bool link_blocked_by_field(const Config& cfg, TrialRng& rng, double r)
{
    if (cfg.blockers.lambda_b <= 0.0 || r <= 0.0)
        return false;
    const std::int64_t n = rng.poisson(cfg.blockers.lambda_b * std::numbers::pi * r * r);
    bool blocked = false;
    for (std::int64_t i = 0; i < n; ++i)
    {
        // keep consuming draws after a hit so the stream layout stays fixed
        const double r_ab = r * std::sqrt(rng.uniform01());
        const double theta1 = rng.uniform(-std::numbers::pi, std::numbers::pi);
        if (!blocked && bystander_blocks(cfg, r, r_ab, theta1))
            blocked = true;
    }
    return blocked;
}

struct SharedField
{
    std::vector<double> x, y; // blocker positions relative to the UE
};

SharedField draw_shared_field(const Config& cfg, TrialRng& rng, double radius)
{
    SharedField f;
    if (cfg.blockers.lambda_b <= 0.0)
        return f;
    const std::int64_t n = rng.poisson(cfg.blockers.lambda_b * std::numbers::pi * radius * radius);
    f.x.reserve(std::size_t(n));
    f.y.reserve(std::size_t(n));
    for (std::int64_t i = 0; i < n; ++i)
    {
        const double rr = radius * std::sqrt(rng.uniform01());
        const double aa = rng.uniform(-std::numbers::pi, std::numbers::pi);
        f.x.push_back(rr * std::cos(aa));
        f.y.push_back(rr * std::sin(aa));
    }
    return f;
}

// Same predicate against a pre-drawn field. ap_x/ap_y are AP coordinates
// relative to the UE; only blockers inside the disc of radius r around the
// AP can matter, matching the on-demand sampler's geometry.
bool link_blocked_by_shared(const Config& cfg, const SharedField& field, double ap_x, double ap_y,
                            double r)
{
    if (r <= 0.0)
        return false;
    for (std::size_t i = 0; i < field.x.size(); ++i)
    {
        const double dx = field.x[i] - ap_x;
        const double dy = field.y[i] - ap_y;
        const double d = std::hypot(dx, dy);
        if (d > r)
            continue;
        // angle at the AP between the AP->UE direction (-ap_x, -ap_y) and
        // the AP->blocker direction
        const double dot = -ap_x * dx - ap_y * dy;
        const double cross = -ap_x * dy + ap_y * dx;
        const double theta1 = std::atan2(cross, dot);
        if (bystander_blocks(cfg, r, d, theta1))
            return true;
    }
    return false;
}

} // namespace

// ----- one-link path gain ----------------------------------------------------

std::vector<double> mc_path_gain(const Config& cfg, double r, std::int64_t trials,
                                 std::uint64_t seed, int threads)
{
    std::vector<double> out(static_cast<std::size_t>(trials));
    parallel_trials(trials, threads, [&](std::int64_t i) {
        TrialRng rng(seed, std::uint64_t(i));
        // fixed draw order per trial: elevation, azimuth, then blockers
        const double alpha = sample_elevation(rng, cfg.orient);
        const double theta_hat = rng.uniform(-std::numbers::pi, std::numbers::pi);

        double g = path_gain(cfg, r, alpha, theta_hat);
        if (g > 0.0 && own_body_blocked(cfg, r, theta_hat))
            g = 0.0;
        if (g > 0.0 && link_blocked_by_field(cfg, rng, r))
            g = 0.0;
        out[std::size_t(i)] = g;
    });
    return out;
}

// ----- serving-link channel factor -------------------------------------------

namespace
{

// Candidate AP positions for one trial, relative to the UE.
struct ApSet
{
    std::vector<double> x, y;
};

ApSet draw_aps(const Config& cfg, TrialRng& rng, double r_fov)
{
    ApSet aps;
    switch (cfg.net.layout)
    {
    case Layout::infinite_ppp:
    {
        // only the FoV disc can contribute, so the PPP is drawn there directly
        const std::int64_t n = rng.poisson(cfg.net.lambda_a * std::numbers::pi * r_fov * r_fov);
        aps.x.reserve(std::size_t(n));
        aps.y.reserve(std::size_t(n));
        for (std::int64_t i = 0; i < n; ++i)
        {
            const double rr = r_fov * std::sqrt(rng.uniform01());
            const double aa = rng.uniform(-std::numbers::pi, std::numbers::pi);
            aps.x.push_back(rr * std::cos(aa));
            aps.y.push_back(rr * std::sin(aa));
        }
        break;
    }
    case Layout::finite_ppp:
    {
        const double side = cfg.net.room_side;
        const std::int64_t n = rng.poisson(cfg.net.lambda_a * side * side);
        const double ux = rng.uniform(-0.5 * side, 0.5 * side);
        const double uy = rng.uniform(-0.5 * side, 0.5 * side);
        aps.x.reserve(std::size_t(n));
        aps.y.reserve(std::size_t(n));
        for (std::int64_t i = 0; i < n; ++i)
        {
            aps.x.push_back(rng.uniform(-0.5 * side, 0.5 * side) - ux);
            aps.y.push_back(rng.uniform(-0.5 * side, 0.5 * side) - uy);
        }
        break;
    }
    case Layout::finite_square:
    {
        const double side = cfg.net.room_side;
        const auto count = std::int64_t(std::llround(cfg.net.lambda_a * side * side));
        const auto n_side = std::max<std::int64_t>(1, std::int64_t(std::llround(std::sqrt(double(count)))));
        const double pitch = side / double(n_side);
        const double ux = rng.uniform(-0.5 * side, 0.5 * side);
        const double uy = rng.uniform(-0.5 * side, 0.5 * side);
        aps.x.reserve(std::size_t(n_side * n_side));
        aps.y.reserve(std::size_t(n_side * n_side));
        for (std::int64_t ix = 0; ix < n_side; ++ix)
        {
            for (std::int64_t iy = 0; iy < n_side; ++iy)
            {
                const double ax = (double(ix) + 0.5) * pitch - 0.5 * side;
                const double ay = (double(iy) + 0.5) * pitch - 0.5 * side;
                aps.x.push_back(ax - ux);
                aps.y.push_back(ay - uy);
            }
        }
        break;
    }
    }
    return aps;
}

} // namespace

std::vector<double> mc_channel_factor(const Config& cfg, std::int64_t trials,
                                      std::uint64_t seed, int threads)
{
    const double r_fov = fov_radius(cfg);
    std::vector<double> out(static_cast<std::size_t>(trials));

    parallel_trials(trials, threads, [&](std::int64_t i) {
        TrialRng rng(seed, std::uint64_t(i));
        // fixed draw order per trial: tilt, AP set, shared field, per-AP blockers
        const double alpha = sample_elevation(rng, cfg.orient);
        const double beta = rng.uniform(-std::numbers::pi, std::numbers::pi);
        const ApSet aps = draw_aps(cfg, rng, r_fov);

        SharedField field;
        if (cfg.run.shared_blockers)
        {
            // radius 2 r_fov covers the blocker disc of every AP that can
            // possibly serve the UE
            field = draw_shared_field(cfg, rng, 2.0 * r_fov);
        }

        double best = 0.0;
        for (std::size_t a = 0; a < aps.x.size(); ++a)
        {
            const double r = std::hypot(aps.x[a], aps.y[a]);
            const double theta = std::atan2(aps.y[a], aps.x[a]);
            const double theta_hat = wrap_pi(theta - beta);

            double g = path_gain(cfg, r, alpha, theta_hat);
            if (g > 0.0 && own_body_blocked(cfg, r, theta_hat))
                g = 0.0;
            if (g > 0.0)
            {
                const bool blocked = cfg.run.shared_blockers
                                         ? link_blocked_by_shared(cfg, field, aps.x[a], aps.y[a], r)
                                         : link_blocked_by_field(cfg, rng, r);
                if (blocked)
                    g = 0.0;
            }
            best = std::max(best, g);
        }
        out[std::size_t(i)] = factor_from_gain(cfg, best);
    });
    return out;
}

// ----- mean achievable rate --------------------------------------------------

namespace
{

// Dense rate-vs-factor table for adaptive mode, 0.05 dB pitch. Linear
// interpolation error is far below the Monte Carlo standard error; exact
// per-sample bisection would cost five root searches per trial.
struct RateTable
{
    double db_lo = 30.0;
    double db_hi = 140.0;
    double step = 0.05;
    std::vector<double> rate;

    void build(const Config& cfg)
    {
        const auto n = std::size_t(std::llround((db_hi - db_lo) / step)) + 1;
        rate.resize(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            const double xi = std::pow(10.0, (db_lo + double(i) * step) / 10.0);
            rate[i] = adaptive_rate(cfg, xi).rate;
        }
    }

    double eval(double xi) const
    {
        if (xi <= 0.0)
            return 0.0;
        const double db = 10.0 * std::log10(xi);
        if (db <= db_lo)
            return 0.0; // no order is feasible this far down
        const double pos = (std::min(db, db_hi) - db_lo) / step;
        const auto i0 = std::min(std::size_t(pos), rate.size() - 2);
        const double w = pos - double(i0);
        return (1.0 - w) * rate[i0] + w * rate[i0 + 1];
    }
};

} // namespace

MeanStderr mc_average_rate(const Config& cfg, RateMode mode, std::int64_t trials,
                           std::uint64_t seed, int threads)
{
    const std::vector<double> factors = mc_channel_factor(cfg, trials, seed, threads);

    std::vector<double> rates(factors.size());
    if (mode == RateMode::adaptive)
    {
        RateTable table;
        table.build(cfg);
        for (std::size_t i = 0; i < factors.size(); ++i)
            rates[i] = table.eval(factors[i]);
    }
    else
    {
        // exact per-order factor thresholds: BER falls monotonically in xi
        std::vector<double> threshold;
        std::vector<int> order;
        for (int m = 2; m <= cfg.mod.m_max; m *= 2)
        {
            const auto gap = [&](double xi) {
                return cfg.mod.target_ber - pam_ber(cfg, xi, cfg.mod.fixed_bandwidth, m);
            };
            threshold.push_back(bisection_root(gap, 1.0, 1.0e16, 1e-9));
            order.push_back(m);
        }
        const double base = cfg.mod.fixed_bandwidth * cp_efficiency(cfg);
        for (std::size_t i = 0; i < factors.size(); ++i)
        {
            double rate = 0.0;
            for (std::size_t j = 0; j < threshold.size(); ++j)
            {
                if (factors[i] >= threshold[j])
                    rate = base * std::log2(double(order[j]));
            }
            rates[i] = rate;
        }
    }

    double sum = 0.0;
    for (double v : rates)
        sum += v;
    const double mean = sum / double(rates.size());

    double var = 0.0;
    for (double v : rates)
        var += (v - mean) * (v - mean);
    var /= double(rates.size() > 1 ? rates.size() - 1 : 1);

    return MeanStderr{mean, std::sqrt(var / double(rates.size()))};
}

// ----- empirical CDF ---------------------------------------------------------

EmpiricalCdf::EmpiricalCdf(std::vector<double> samples) : xs_(std::move(samples))
{
    std::sort(xs_.begin(), xs_.end());
}

double EmpiricalCdf::operator()(double x) const
{
    const auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    return double(it - xs_.begin()) / double(xs_.size());
}

double EmpiricalCdf::quantile(double p) const
{
    if (xs_.empty())
        throw std::invalid_argument("EmpiricalCdf::quantile: no samples");
    const double clamped = std::clamp(p, 0.0, 1.0);
    const auto idx = std::size_t(std::ceil(clamped * double(xs_.size())));
    return xs_[std::min(idx > 0 ? idx - 1 : 0, xs_.size() - 1)];
}

} // namespace lifi
