#pragma once

#include <complex>
#include <string_view>

namespace wgmsense {

using ComplexAmplitude = std::complex<double>;

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s

/// Physical and coupling parameters of one whispering-gallery resonance.
///
/// `r` is the waveguide-resonator amplitude reflection (through) coefficient
/// and `alpha` the round-trip amplitude transmission. The coupling amplitude
/// kappa follows from |kappa|^2 + r^2 = 1 and is never stored.
class ResonatorConfig {
public:
    static constexpr double kDefaultRadius = 40e-6;       // m
    static constexpr double kDefaultRefIndex = 1.45;
    static constexpr double kDefaultLambda0 = 780e-9;     // m

    /// Throws InvalidArgument unless 0 <= r < 1, 0 < alpha < 1, radius > 0,
    /// ref_index >= 1 and lambda0 > 0.
    ResonatorConfig(double r, double alpha, double radius = kDefaultRadius,
                    double ref_index = kDefaultRefIndex, double lambda0 = kDefaultLambda0);

    double r() const noexcept { return r_; }
    double alpha() const noexcept { return alpha_; }
    double radius() const noexcept { return radius_; }
    double ref_index() const noexcept { return ref_index_; }
    double lambda0() const noexcept { return lambda0_; }

    /// |kappa|, derived.
    double kappa() const noexcept;

    /// Round-trip phase corresponding to one linewidth unit: -ln(alpha r).
    /// Spectra use this as the detuning unit gamma; the I1 dip spans two of
    /// these units at half depth.
    double linewidth_phase() const noexcept;

    ResonatorConfig with_coupling(double r, double alpha) const;

    friend bool operator==(const ResonatorConfig&, const ResonatorConfig&) = default;

private:
    double r_;
    double alpha_;
    double radius_;
    double ref_index_;
    double lambda0_;
};

enum class CouplingRegime { Undercoupled, Critical, Overcoupled };

inline constexpr double kCriticalCouplingTolerance = 1e-12;

/// Undercoupled for r > alpha, overcoupled for r < alpha, critical when the
/// two agree to kCriticalCouplingTolerance relative.
CouplingRegime classify_coupling(const ResonatorConfig& cfg) noexcept;
std::string_view to_string(CouplingRegime regime) noexcept;

/// Linewidth of the resonance in wavelength units and the loaded Q.
struct LinewidthQ {
    double linewidth_m;  ///< Delta-lambda, meters; +0 only if ln(alpha r) underflows
    double q;            ///< lambda0 / Delta-lambda; +inf when the linewidth is 0
};

LinewidthQ linewidth_and_q(const ResonatorConfig& cfg) noexcept;

/// Detuning from the resonance. Stored canonically as round-trip phase theta;
/// the named constructors convert from the other unit systems.
class Detuning {
public:
    constexpr Detuning() = default;

    static constexpr Detuning from_phase(double theta) noexcept { return Detuning{theta}; }
    /// theta = 2 pi R n delta / c with delta an angular-frequency detuning (rad/s).
    static Detuning from_angular_frequency(const ResonatorConfig& cfg, double delta) noexcept;
    /// Detuning in linewidth units gamma (see ResonatorConfig::linewidth_phase).
    static Detuning from_linewidths(const ResonatorConfig& cfg, double delta_gamma) noexcept;
    /// Detuning in femtometers of resonance wavelength; one gamma is Delta-lambda.
    static Detuning from_femtometers(const ResonatorConfig& cfg, double delta_fm) noexcept;

    constexpr double phase() const noexcept { return theta_; }
    double angular_frequency(const ResonatorConfig& cfg) const noexcept;
    double linewidths(const ResonatorConfig& cfg) const noexcept;
    double femtometers(const ResonatorConfig& cfg) const noexcept;

private:
    constexpr explicit Detuning(double theta) noexcept : theta_{theta} {}
    double theta_ = 0.0;
};

/// Femtometers per linewidth unit for this resonator.
double femtometers_per_linewidth(const ResonatorConfig& cfg) noexcept;

}  // namespace wgmsense
