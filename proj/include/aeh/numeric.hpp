#pragma once

#include <cstddef>

namespace aeh::detail {

// Composite Simpson's rule over [a, b] with `points` samples; `points` is
// forced odd (and at least 3). Degenerate intervals integrate to zero.
template <typename F>
double simpson(F&& f, double a, double b, std::size_t points) {
    if (b == a) return 0.0;
    if (points < 3) points = 3;
    if (points % 2 == 0) ++points;
    const std::size_t n = points - 1;  // even number of intervals
    const double h = (b - a) / static_cast<double>(n);
    double odd = 0.0, even = 0.0;
    for (std::size_t i = 1; i < n; i += 2) odd += f(a + h * static_cast<double>(i));
    for (std::size_t i = 2; i < n; i += 2) even += f(a + h * static_cast<double>(i));
    return (f(a) + f(b) + 4.0 * odd + 2.0 * even) * h / 3.0;
}

}  // namespace aeh::detail
