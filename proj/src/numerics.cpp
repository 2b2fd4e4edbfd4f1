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

#include "lifi/numerics.hpp"

#include <limits>
#include <stdexcept>

namespace lifi
{

double q_function(double u)
{
    // Q(u) = erfc(u/sqrt(2))/2; erfc keeps full relative accuracy deep into
    // the tail, where 1 - Phi(u) via erf would lose everything.
    return 0.5 * std::erfc(u / std::sqrt(2.0));
}

// ----- exponential integral --------------------------------------------------

static constexpr double EULER_GAMMA = 0.57721566490153286060651209008240243;
static constexpr int EI_MAX_ITER = 200;

// Power series Ei(x) = gamma + ln|x| + sum_{k>=1} x^k/(k*k!). Fine for
// moderate |x|; for x below about -6 the alternating terms grow large enough
// that cancellation starts eating digits, so the series is not used there.
static double ei_series(double x)
{
    double sum = 0.0;
    double term = 1.0;
    for (int k = 1; k <= EI_MAX_ITER; ++k)
    {
        term *= x / double(k);
        const double add = term / double(k);
        sum += add;
        if (std::abs(add) < std::abs(sum) * std::numeric_limits<double>::epsilon())
            break;
    }
    return EULER_GAMMA + std::log(std::abs(x)) + sum;
}

// Asymptotic expansion Ei(x) ~ e^x/x * sum_{k>=0} k!/x^k, truncated at the
// smallest term. Only used for large |x| where the smallest term is below
// double precision anyway.
static double ei_asymptotic(double x)
{
    double sum = 1.0;
    double term = 1.0;
    for (int k = 1; k <= EI_MAX_ITER; ++k)
    {
        const double next = term * double(k) / x;
        if (std::abs(next) >= std::abs(term))
            break;
        term = next;
        sum += term;
    }
    return std::exp(x) / x * sum;
}

// Ei(x) = -E1(-x) for x < 0, with E1 evaluated by the standard continued
// fraction (modified Lentz). Converges quickly for arguments above 1 and has
// no cancellation, which the series cannot offer on this half-line.
static double ei_continued_fraction(double x)
{
    const double y = -x; // y > 0, E1(y)
    const double tiny = 1e-300;

    double b = y + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int k = 1; k <= EI_MAX_ITER; ++k)
    {
        const double a = -double(k) * double(k);
        b += 2.0;
        d = a * d + b;
        if (std::abs(d) < tiny)
            d = tiny;
        c = b + a / c;
        if (std::abs(c) < tiny)
            c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < 4.0 * std::numeric_limits<double>::epsilon())
            break;
    }
    return -std::exp(-y) * h; // Ei(x) = -E1(y)
}

double expint_ei(double x)
{
    if (x == 0.0)
        throw std::domain_error("expint_ei: argument must be nonzero");

    if (x > 30.0)
        return ei_asymptotic(x);
    if (x >= -6.0)
        return ei_series(x);
    return ei_continued_fraction(x);
}

// ----- root finding ----------------------------------------------------------

double bisection_root(const std::function<double(double)>& f, double lo, double hi,
                      double tol, int max_iter)
{
    double flo = f(lo);
    double fhi = f(hi);

    if (flo == 0.0)
        return lo;
    if (fhi == 0.0)
        return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw std::invalid_argument("bisection_root: f(lo) and f(hi) do not bracket a root");

    for (int i = 0; i < max_iter && (hi - lo) > tol; ++i)
    {
        const double mid = 0.5 * (lo + hi);
        const double fmid = f(mid);
        if (fmid == 0.0)
            return mid;
        if ((fmid > 0.0) == (flo > 0.0))
        {
            lo = mid;
            flo = fmid;
        }
        else
        {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace lifi
