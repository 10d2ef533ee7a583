#include <algorithm>
#include <cmath>
#include <limits>

#include "wgmsense/errors.hpp"
#include "wgmsense/spectra.hpp"

namespace wgmsense {

std::vector<double> gradient(const Spectrum& spec) {
    const std::size_t n = spec.size();
    if (n < 3) throw InvalidArgument("gradient needs at least 3 samples");
    const auto& y = spec.values;
    const double h = spec.step();
    std::vector<double> g(n);
    g.front() = (y[1] - y[0]) / h;
    g.back() = (y[n - 1] - y[n - 2]) / h;
    for (std::size_t i = 1; i + 1 < n; ++i) g[i] = (y[i + 1] - y[i - 1]) / (2.0 * h);
    return g;
}

std::vector<double> stationary_points(const Spectrum& spec) {
    const std::vector<double> g = gradient(spec);
    const auto& d = spec.detunings;
    const auto flat = [](double v) { return std::abs(v) < kStationaryGradientThreshold; };
    std::vector<double> points;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (flat(g[i])) {
            points.push_back(d[i]);
            continue;
        }
        if (i + 1 < g.size() && !flat(g[i + 1]) && (g[i] > 0.0) != (g[i + 1] > 0.0)) {
            const double frac = g[i] / (g[i] - g[i + 1]);
            points.push_back(d[i] + frac * (d[i + 1] - d[i]));
        }
    }
    return points;
}

OperatingPoint find_operating_point(const Spectrum& spec) {
    const std::vector<double> g = gradient(spec);
    const auto& d = spec.detunings;

    std::size_t best = 1;
    double best_abs = std::abs(g[1]);
    for (std::size_t i = 2; i + 1 < g.size(); ++i) {
        const double mag = std::abs(g[i]);
        if (mag > best_abs * (1.0 + 1e-9)) {
            best = i;
            best_abs = mag;
        } else if (mag >= best_abs * (1.0 - 1e-9) && std::abs(d[i]) < std::abs(d[best]) - 1e-12) {
            best = i;
            best_abs = std::max(best_abs, mag);
        }
    }
    if (best_abs < kFlatGradientThreshold)
        throw FlatSpectrumError("spectrum is flat: no maximum-gradient operating point");

    double range = std::numeric_limits<double>::infinity();
    for (double s : stationary_points(spec)) range = std::min(range, std::abs(d[best] - s));
    return {best, d[best], g[best], range};
}

std::size_t count_strict_local_minima(const Spectrum& spec) {
    const auto& y = spec.values;
    std::size_t count = 0;
    for (std::size_t i = 1; i + 1 < y.size(); ++i)
        if (y[i] < y[i - 1] && y[i] < y[i + 1]) ++count;
    return count;
}

double measure_dip_fwhm(const Spectrum& spec) {
    const auto& y = spec.values;
    const auto& d = spec.detunings;
    const auto lowest = static_cast<std::size_t>(std::min_element(y.begin(), y.end()) - y.begin());
    const double top = *std::max_element(y.begin(), y.end());
    const double half = 0.5 * (y[lowest] + top);
    if (!(top > y[lowest])) throw ComputationError("spectrum has no dip");

    const auto crossing = [&](std::size_t inside, std::size_t outside) {
        const double frac = (half - y[inside]) / (y[outside] - y[inside]);
        return d[inside] + frac * (d[outside] - d[inside]);
    };
    std::size_t left = lowest;
    while (left > 0 && y[left - 1] < half) --left;
    std::size_t right = lowest;
    while (right + 1 < y.size() && y[right + 1] < half) ++right;
    if (left == 0 || right + 1 == y.size())
        throw ComputationError("dip half-depth crossing lies outside the grid");
    return crossing(right, right + 1) - crossing(left, left - 1);
}

}  // namespace wgmsense
