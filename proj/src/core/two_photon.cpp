#include <cmath>
#include <numbers>

#include "wgmsense/transmission.hpp"

namespace wgmsense {

namespace {

constexpr ComplexAmplitude kI{0.0, 1.0};
constexpr double kSqrt2 = std::numbers::sqrt2;

}  // namespace

double normalization_bracket(double t_abs_sq) noexcept {
    const double x = 1.0 - t_abs_sq;
    const double x2 = x * x;
    return 1.0 / std::sqrt(1.0 + 2.0 * x2 + 2.0 * x2 * x2);
}

double normalization_A(double t_abs_sq) noexcept {
    return t_abs_sq * normalization_bracket(t_abs_sq);
}

double normalization_A(const ResonatorConfig& cfg, Detuning theta) noexcept {
    return normalization_A(std::norm(transmission(cfg, theta)));
}

NoiseNorms noise_norms(double t_abs_sq) noexcept {
    const double x = 1.0 - t_abs_sq;
    return {x, 2.0 * x * x};
}

ComplexAmplitude pair_phase_factor(ComplexAmplitude t) noexcept {
    const double t_abs_sq = std::norm(t);
    const double g = normalization_bracket(t_abs_sq);
    // t vanishes only at exact critical coupling on resonance, where it
    // approaches zero along the imaginary axis as detuning is swept.
    if (t_abs_sq == 0.0) return {-g, 0.0};
    // |t|^2 / (t*)^2 = (t / |t|)^2
    const ComplexAmplitude unit = t / std::sqrt(t_abs_sq);
    return g * unit * unit;
}

double coincidence_probability(ComplexAmplitude t) noexcept {
    return 0.25 * std::norm(pair_phase_factor(t) + 1.0);
}

double coincidence_probability(const ResonatorConfig& cfg, Detuning theta) noexcept {
    return coincidence_probability(transmission(cfg, theta));
}

MidState mid_state_amplitudes(ComplexAmplitude t) noexcept {
    const ComplexAmplitude f = pair_phase_factor(t);
    return {
        .two_zero = kSqrt2 * kI / 2.0 * f,
        .zero_two = kSqrt2 * kI / 2.0,
        .one_zero_env = -kI * f,
        .zero_zero_env2 = kI / 2.0 * f,
    };
}

MidState mid_state_amplitudes(const ResonatorConfig& cfg, Detuning theta) noexcept {
    return mid_state_amplitudes(transmission(cfg, theta));
}

OutputState output_state_amplitudes(ComplexAmplitude t) noexcept {
    const ComplexAmplitude f = pair_phase_factor(t);
    return {
        .two_zero = kI * kSqrt2 / 4.0 * (f - 1.0),
        .zero_two = kI * kSqrt2 / 4.0 * (1.0 - f),
        .one_one = 0.5 * (f + 1.0),
        .one_zero_env = -kI * f / kSqrt2,
        .zero_one_env = -f / kSqrt2,
        .zero_zero_env2 = kI * f / 2.0,
    };
}

OutputState output_state_amplitudes(const ResonatorConfig& cfg, Detuning theta) noexcept {
    return output_state_amplitudes(transmission(cfg, theta));
}

double state_norm(const MidState& s, double t_abs_sq) noexcept {
    const auto [single, pair] = noise_norms(t_abs_sq);
    return std::norm(s.two_zero) + std::norm(s.zero_two) +
           std::norm(s.one_zero_env) * single * single +
           std::norm(s.zero_zero_env2) * pair * pair;
}

double state_norm(const OutputState& s, double t_abs_sq) noexcept {
    const auto [single, pair] = noise_norms(t_abs_sq);
    return std::norm(s.two_zero) + std::norm(s.zero_two) + std::norm(s.one_one) +
           (std::norm(s.one_zero_env) + std::norm(s.zero_one_env)) * single * single +
           std::norm(s.zero_zero_env2) * pair * pair;
}

}  // namespace wgmsense
