#include <algorithm>
#include <cmath>
#include <sstream>

#include "lineshape_eval.hpp"
#include "wgmsense/errors.hpp"
#include "wgmsense/spectra.hpp"

namespace wgmsense {

std::string_view to_string(MeasurementCase c) noexcept {
    switch (c) {
        case MeasurementCase::ClassicalWgm: return "classical_wgm";
        case MeasurementCase::ClassicalWgmMzi: return "classical_wgm_mzi";
        case MeasurementCase::EntangledWgmMzi: return "entangled_wgm_mzi";
        case MeasurementCase::ClassicalWgmMziSingle: return "classical_wgm_mzi_single";
    }
    return "unknown";
}

std::optional<MeasurementCase> parse_measurement_case(std::string_view name) noexcept {
    for (auto c : {MeasurementCase::ClassicalWgm, MeasurementCase::ClassicalWgmMzi,
                   MeasurementCase::EntangledWgmMzi, MeasurementCase::ClassicalWgmMziSingle}) {
        if (name == to_string(c)) return c;
    }
    if (name == "classical") return MeasurementCase::ClassicalWgm;
    if (name == "mzi") return MeasurementCase::ClassicalWgmMzi;
    if (name == "entangled") return MeasurementCase::EntangledWgmMzi;
    if (name == "single") return MeasurementCase::ClassicalWgmMziSingle;
    return std::nullopt;
}

void DetuningGrid::validate() const {
    std::ostringstream msg;
    if (count < kMinPoints) {
        msg << "grid needs at least " << kMinPoints << " points (got " << count << ")";
    } else if (!std::isfinite(min) || !std::isfinite(max) || !(max > min)) {
        msg << "grid span must be finite and non-empty (got [" << min << ", " << max << "])";
    } else if (min > -kMinHalfSpan || max < kMinHalfSpan) {
        msg << "grid must cover at least +-" << kMinHalfSpan << " linewidths (got [" << min << ", "
            << max << "])";
    } else {
        return;
    }
    throw InvalidArgument(msg.str());
}

std::vector<double> DetuningGrid::points() const {
    // Built from the centre with integer offsets so a symmetric grid is
    // exactly antisymmetric and contains 0.
    const double centre = 0.5 * (min + max);
    const double half = 0.5 * (max - min);
    const auto last = static_cast<double>(count - 1);
    std::vector<double> pts(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double k = 2.0 * static_cast<double>(i) - last;
        pts[i] = centre + half * (k / last);
    }
    return pts;
}

namespace detail {

void LineshapeSamples::resize(std::size_t n) {
    intensity.resize(n);
    re_t.resize(n);
    i7.resize(n);
    i8.resize(n);
    coincidence.resize(n);
}

kernels::LineshapeOut LineshapeSamples::view() {
    return {intensity, re_t, i7, i8, coincidence};
}

const std::vector<double>& LineshapeSamples::channel(MeasurementCase c) const {
    switch (c) {
        case MeasurementCase::ClassicalWgm: return intensity;
        case MeasurementCase::ClassicalWgmMzi: return re_t;
        case MeasurementCase::EntangledWgmMzi: return coincidence;
        case MeasurementCase::ClassicalWgmMziSingle: return i7;
    }
    return intensity;
}

void evaluate_all(const ResonatorConfig& cfg, std::span<const double> detunings,
                  LineshapeSamples& out) {
    const std::size_t n = detunings.size();
    const double unit = cfg.linewidth_phase();
    std::vector<double> cos_theta(n);
    std::vector<double> sin_theta(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double theta = detunings[i] * unit;
        cos_theta[i] = std::cos(theta);
        sin_theta[i] = std::sin(theta);
    }
    out.resize(n);
    kernels::evaluate_lineshape({cfg.r(), cfg.alpha()}, cos_theta, sin_theta, out.view());
}

}  // namespace detail

void evaluate_case(const ResonatorConfig& cfg, MeasurementCase c,
                   std::span<const double> detunings, std::span<double> out) {
    if (out.size() != detunings.size()) throw InvalidArgument("evaluate_case: length mismatch");
    detail::LineshapeSamples samples;
    detail::evaluate_all(cfg, detunings, samples);
    const auto& values = samples.channel(c);
    std::copy(values.begin(), values.end(), out.begin());
}

Spectrum sample_spectrum(const ResonatorConfig& cfg, MeasurementCase c, const DetuningGrid& grid) {
    grid.validate();
    Spectrum spec{c, grid.points(), {}, cfg, 0.0};
    spec.values.resize(spec.detunings.size());
    evaluate_case(cfg, c, spec.detunings, spec.values);
    return spec;
}

}  // namespace wgmsense
