#include "wgmsense/transmission.hpp"

#include <cmath>

namespace wgmsense {

ComplexAmplitude transmission(const ResonatorConfig& cfg, Detuning theta) noexcept {
    const ComplexAmplitude phasor = std::polar(1.0, theta.phase());
    const double r = cfg.r();
    const double a = cfg.alpha();
    // r is real, so r* = r.
    return (r - a * phasor) / (1.0 - r * a * phasor);
}

double classical_wgm_intensity(const ResonatorConfig& cfg, Detuning theta) noexcept {
    return std::norm(transmission(cfg, theta));
}

MziOutputs classical_mzi_outputs(ComplexAmplitude t) noexcept {
    return {0.25 * std::norm(1.0 + t), 0.25 * std::norm(1.0 - t)};
}

MziOutputs classical_mzi_outputs(const ResonatorConfig& cfg, Detuning theta) noexcept {
    return classical_mzi_outputs(transmission(cfg, theta));
}

double classical_mzi_difference(const ResonatorConfig& cfg, Detuning theta) noexcept {
    const auto [i7, i8] = classical_mzi_outputs(cfg, theta);
    return i7 - i8;
}

}  // namespace wgmsense
