#pragma once

#include <array>

#include "wgmsense/resonator.hpp"

namespace wgmsense {

// Closed-form single-resonance optics. Every function here is pure and safe
// to call concurrently.

/// Complex amplitude transmission past the resonator,
/// t = (r - alpha e^{i theta}) / (1 - r alpha e^{i theta}).
ComplexAmplitude transmission(const ResonatorConfig& cfg, Detuning theta) noexcept;

/// I1 = |t|^2, the single-waveguide transmission.
double classical_wgm_intensity(const ResonatorConfig& cfg, Detuning theta) noexcept;

struct MziOutputs {
    double i7;
    double i8;
};

/// Output intensities of the coherent-state interferometer for |beta|^2 = 1:
/// I7,8 = |1 +- t|^2 / 4.
MziOutputs classical_mzi_outputs(const ResonatorConfig& cfg, Detuning theta) noexcept;
MziOutputs classical_mzi_outputs(ComplexAmplitude t) noexcept;

/// I2 = I7 - I8. Algebraically equal to Re t.
double classical_mzi_difference(const ResonatorConfig& cfg, Detuning theta) noexcept;

// ---------------------------------------------------------------------------
// Two-photon (indistinguishable pair) interferometer
// ---------------------------------------------------------------------------

/// Bracket factor g(|t|^2) = [1 + 2(1-|t|^2)^2 + 2(1-|t|^2)^4]^{-1/2}, so that
/// A = |t|^2 g.
double normalization_bracket(double t_abs_sq) noexcept;

/// A(omega) from |t|^2.
double normalization_A(double t_abs_sq) noexcept;
double normalization_A(const ResonatorConfig& cfg, Detuning theta) noexcept;

/// Effective vacuum expectation values <F F^dag> and <F^2 F^dag^2> as
/// functions of |t|^2.
struct NoiseNorms {
    double single;  ///< <F F^dag> = 1 - |t|^2
    double pair;    ///< <F^2 F^dag^2> = 2 (1 - |t|^2)^2
};

NoiseNorms noise_norms(double t_abs_sq) noexcept;

/// The ratio A / (t*)^2 carried by every mode-5 term of the two-photon state.
/// Evaluated as g(|t|^2) e^{2 i arg t}. At t == 0 it takes the limit along a
/// detuning sweep, -1/sqrt(5), so critically coupled spectra stay continuous.
ComplexAmplitude pair_phase_factor(ComplexAmplitude t) noexcept;

/// P_coinc = |A/(t*)^2 + 1|^2 / 4.
double coincidence_probability(ComplexAmplitude t) noexcept;
double coincidence_probability(const ResonatorConfig& cfg, Detuning theta) noexcept;

/// Coefficients of the state after the resonator arm and before the output
/// beamsplitter.
struct MidState {
    ComplexAmplitude two_zero;       ///< |2,0>_{5,6} (x) |0>_env
    ComplexAmplitude zero_two;       ///< |0,2>_{5,6} (x) |0>_env
    ComplexAmplitude one_zero_env;   ///< |1,0>_{5,6} (x) F^dag |0>_env
    ComplexAmplitude zero_zero_env2; ///< |0,0>_{5,6} (x) F^dag^2 |0>_env
};

/// Coefficients of the state at the interferometer outputs 7 and 8.
struct OutputState {
    ComplexAmplitude two_zero;       ///< |2,0>_{7,8}
    ComplexAmplitude zero_two;       ///< |0,2>_{7,8}
    ComplexAmplitude one_one;        ///< |1,1>_{7,8}
    ComplexAmplitude one_zero_env;   ///< |1,0>_{7,8} (x) F^dag |0>_env
    ComplexAmplitude zero_one_env;   ///< |0,1>_{7,8} (x) F^dag |0>_env
    ComplexAmplitude zero_zero_env2; ///< |0,0>_{7,8} (x) F^dag^2 |0>_env
};

MidState mid_state_amplitudes(ComplexAmplitude t) noexcept;
MidState mid_state_amplitudes(const ResonatorConfig& cfg, Detuning theta) noexcept;

OutputState output_state_amplitudes(ComplexAmplitude t) noexcept;
OutputState output_state_amplitudes(const ResonatorConfig& cfg, Detuning theta) noexcept;

/// Squared norm of a state. Environment-excited terms are weighted by the
/// squared expectation values from noise_norms, the same weights that fix A.
double state_norm(const MidState& state, double t_abs_sq) noexcept;
double state_norm(const OutputState& state, double t_abs_sq) noexcept;

/// Probability of the |1,1> (coincidence) term of an output state.
inline double coincidence_of(const OutputState& s) noexcept { return std::norm(s.one_one); }

}  // namespace wgmsense
