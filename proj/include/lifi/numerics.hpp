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

#ifndef LIFI_NUMERICS_HPP
#define LIFI_NUMERICS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>

namespace lifi
{

// Positive and negative part of a real number, [x]+ = max(x,0) and
// [x]- = min(x,0). Both parts are carried together because the orientation
// statistics use them side by side in the same expression.
struct RampPair
{
    double plus;  // max(x, 0)
    double minus; // min(x, 0)
};

inline RampPair split_ramp(double x)
{
    return RampPair{std::max(x, 0.0), std::min(x, 0.0)};
}

// Sign function with sgn(0) = 0
inline double sgn(double x)
{
    return (x > 0.0) - (x < 0.0);
}

// Inverse trig wrappers that clamp the argument to the closed unit interval.
// The closed-form CDF evaluates arcsin/arccos of expressions that can
// overshoot 1 by a few ulp (and, close to the upper support edge, by more
// than that, where the bound itself is approximate). Saturating is the
// intended reading in both situations.
inline double asin_clamped(double x)
{
    return std::asin(std::clamp(x, -1.0, 1.0));
}

inline double acos_clamped(double x)
{
    return std::acos(std::clamp(x, -1.0, 1.0));
}

// Gaussian tail probability Q(u) = P[N(0,1) > u]
double q_function(double u);

// Exponential integral Ei(x), principal value for x > 0. Throws
// std::domain_error for x = 0 (logarithmic singularity).
double expint_ei(double x);

// Root of f on [lo,hi] by bisection. f(lo) and f(hi) must have opposite
// signs, otherwise std::invalid_argument is thrown. Iterates until the
// bracket width drops below tol (at most max_iter halvings), then returns
// the bracket midpoint.
double bisection_root(const std::function<double(double)>& f, double lo, double hi,
                      double tol, int max_iter = 200);

// Composite trapezoid rule with n_points >= 2 equally spaced nodes on [a,b].
// Fixed-grid on purpose: output must be reproducible across platforms and
// thread counts, which rules out adaptive error control.
template <typename F>
double trapezoid_integral(F&& f, double a, double b, std::size_t n_points)
{
    if (n_points < 2 || !(b > a))
        return 0.0;

    const double h = (b - a) / double(n_points - 1);
    double acc = 0.5 * (f(a) + f(b));
    for (std::size_t i = 1; i + 1 < n_points; ++i)
        acc += f(a + double(i) * h);
    return acc * h;
}

} // namespace lifi

#endif // LIFI_NUMERICS_HPP
