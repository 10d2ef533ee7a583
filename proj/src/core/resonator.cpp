#include "wgmsense/resonator.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "wgmsense/errors.hpp"

namespace wgmsense {

namespace {

void require(bool ok, const char* what, double value) {
    if (ok) return;
    std::ostringstream msg;
    msg << what << " (got " << value << ")";
    throw InvalidArgument(msg.str());
}

}  // namespace

ResonatorConfig::ResonatorConfig(double r, double alpha, double radius, double ref_index,
                                 double lambda0)
    : r_{r}, alpha_{alpha}, radius_{radius}, ref_index_{ref_index}, lambda0_{lambda0} {
    require(std::isfinite(r) && r >= 0.0 && r < 1.0, "r must satisfy 0 <= r < 1", r);
    require(std::isfinite(alpha) && alpha > 0.0 && alpha < 1.0,
            "alpha must satisfy 0 < alpha < 1", alpha);
    require(std::isfinite(radius) && radius > 0.0, "radius must be positive", radius);
    require(std::isfinite(ref_index) && ref_index >= 1.0, "ref_index must be >= 1", ref_index);
    require(std::isfinite(lambda0) && lambda0 > 0.0, "lambda0 must be positive", lambda0);
}

double ResonatorConfig::kappa() const noexcept { return std::sqrt(1.0 - r_ * r_); }

double ResonatorConfig::linewidth_phase() const noexcept {
    // log1p keeps precision for alpha r close to 1.
    return -std::log1p(alpha_ * r_ - 1.0);
}

ResonatorConfig ResonatorConfig::with_coupling(double r, double alpha) const {
    return ResonatorConfig{r, alpha, radius_, ref_index_, lambda0_};
}

CouplingRegime classify_coupling(const ResonatorConfig& cfg) noexcept {
    const double diff = cfg.r() - cfg.alpha();
    if (std::abs(diff) <= kCriticalCouplingTolerance * cfg.alpha()) return CouplingRegime::Critical;
    return diff > 0.0 ? CouplingRegime::Undercoupled : CouplingRegime::Overcoupled;
}

std::string_view to_string(CouplingRegime regime) noexcept {
    switch (regime) {
        case CouplingRegime::Undercoupled: return "undercoupled";
        case CouplingRegime::Critical: return "critical";
        case CouplingRegime::Overcoupled: return "overcoupled";
    }
    return "unknown";
}

LinewidthQ linewidth_and_q(const ResonatorConfig& cfg) noexcept {
    using std::numbers::pi;
    const double lambda = cfg.lambda0();
    const double width = lambda * lambda * cfg.linewidth_phase() / (4.0 * pi * pi * cfg.radius());
    const double q = width > 0.0 ? lambda / width : std::numeric_limits<double>::infinity();
    return {width, q};
}

double femtometers_per_linewidth(const ResonatorConfig& cfg) noexcept {
    return linewidth_and_q(cfg).linewidth_m * 1e15;
}

Detuning Detuning::from_angular_frequency(const ResonatorConfig& cfg, double delta) noexcept {
    using std::numbers::pi;
    return Detuning{2.0 * pi * cfg.radius() * cfg.ref_index() * delta / kSpeedOfLight};
}

double Detuning::angular_frequency(const ResonatorConfig& cfg) const noexcept {
    using std::numbers::pi;
    return theta_ * kSpeedOfLight / (2.0 * pi * cfg.radius() * cfg.ref_index());
}

Detuning Detuning::from_linewidths(const ResonatorConfig& cfg, double delta_gamma) noexcept {
    return Detuning{delta_gamma * cfg.linewidth_phase()};
}

double Detuning::linewidths(const ResonatorConfig& cfg) const noexcept {
    return theta_ / cfg.linewidth_phase();
}

Detuning Detuning::from_femtometers(const ResonatorConfig& cfg, double delta_fm) noexcept {
    return from_linewidths(cfg, delta_fm / femtometers_per_linewidth(cfg));
}

double Detuning::femtometers(const ResonatorConfig& cfg) const noexcept {
    return linewidths(cfg) * femtometers_per_linewidth(cfg);
}

}  // namespace wgmsense
