#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wgmsense/resonator.hpp"
#include "wgmsense/spectra.hpp"

namespace wgmsense {

/// Monte Carlo settings for one noise run.
struct NoiseRunConfig {
    double photons_per_bin = 380.0;  ///< N: mean photons (coincidences) per bin
    std::size_t n_steps = 1000;      ///< time bins
    double jitter_sigma_fm = 1.0;    ///< 1-sigma Gaussian resonance jitter
    std::uint64_t seed = 1;
    double width_ratio = 0.0;        ///< source linewidth / resonance linewidth
    double true_shift = 0.0;         ///< imposed resonance shift, linewidth units
    bool common_random_numbers = true;  ///< share jitter draws across cases
    DetuningGrid grid{};

    /// Throws InvalidArgument unless photons_per_bin > 0, n_steps >= 100,
    /// jitter_sigma_fm >= 0, width_ratio >= 0 and the grid is valid.
    void validate() const;
};

struct NoiseResult {
    MeasurementCase measurement;
    double delta_omega_3sigma_fm = 0.0;  ///< 3 x std of the shift estimate
    double delta_omega_3sigma_gamma = 0.0;
    OperatingPoint operating_point{};
    double mean_counts = 0.0;            ///< realized mean detected counts per bin
    double mean_estimate_gamma = 0.0;    ///< mean of the shift estimate
    bool dynamic_range_violation = false;  ///< 3 sigma exceeds the dynamic range
};

/// A case's lineshape, optionally convolved with the source Gaussian, that can
/// be evaluated at arbitrary detuning. Detector channels are exposed
/// separately because the MZI difference readout draws shot noise on each
/// output.
class LineshapeModel {
public:
    struct Channels {
        double signal;  ///< the case's readout value
        double first;   ///< mean-rate fraction on the first detector (I1, I7 or P)
        double second;  ///< second detector (I8) for the difference readout, else 0
    };

    LineshapeModel(const ResonatorConfig& cfg, MeasurementCase c, double width_ratio,
                   double step);

    Channels channels(double detuning) const;
    double value(double detuning) const { return channels(detuning).signal; }

    /// Batched evaluation, one entry per detuning.
    void channels(std::span<const double> detunings, std::span<Channels> out) const;

    MeasurementCase measurement() const noexcept { return case_; }
    double width_ratio() const noexcept { return width_ratio_; }

private:
    ResonatorConfig cfg_;
    MeasurementCase case_;
    double width_ratio_;
    double step_;
    std::vector<double> offsets_;
    std::vector<double> weights_;
};

/// Detector photon budget for a case at N photons per bin: N for the single
/// waveguide and coincidence cases, 2N per output for the MZI readouts.
double detection_scale(MeasurementCase c, double photons_per_bin) noexcept;

/// Simulates resonance jitter plus shot noise at the case's maximum-gradient
/// operating point and returns the 3-sigma uncertainty of the linearized
/// shift estimate. `stream` selects an independent RNG stream (sweeps pass
/// the cell index). Throws FlatSpectrumError if no operating point exists.
NoiseResult simulate_case(const ResonatorConfig& cfg, MeasurementCase c,
                          const NoiseRunConfig& run, std::uint64_t stream = 0);

/// Delta-Omega(baseline) / Delta-Omega(candidate) with common jitter draws.
double snr_enhancement(const ResonatorConfig& cfg, const NoiseRunConfig& run,
                       MeasurementCase baseline, MeasurementCase candidate,
                       std::uint64_t stream = 0);

// ---------------------------------------------------------------------------
// Sweeps. Cells run in parallel; each cell owns the RNG stream derived from
// (seed, cell index), so tables do not depend on scheduling.
// ---------------------------------------------------------------------------

struct PhotonSweepRow {
    MeasurementCase measurement;
    double photons_per_bin;
    NoiseResult result;
};

/// One row per (case, N). Rows are ordered by case, then N.
std::vector<PhotonSweepRow> sweep_photon_number(
    const ResonatorConfig& cfg, const NoiseRunConfig& run, std::span<const double> n_values,
    std::span<const MeasurementCase> cases = kHeadlineCases);

struct CouplingMapCell {
    double r;
    double alpha;
    double snr_vs_classical_wgm;
    double snr_vs_classical_mzi;
    bool dynamic_range_violation;
    NoiseResult entangled;
};

/// Row-major over alpha (outer) and r (inner). `base` supplies the physical
/// dimensions; r and alpha come from the ranges.
std::vector<CouplingMapCell> sweep_coupling_map(const ResonatorConfig& base,
                                                std::span<const double> alpha_values,
                                                std::span<const double> r_values,
                                                const NoiseRunConfig& run);

struct LinewidthSweepRow {
    double width_ratio;
    double r;
    double snr_vs_classical_mzi;
    bool dynamic_range_violation;
};

/// Ordered by ratio, then r.
std::vector<LinewidthSweepRow> sweep_linewidth(const ResonatorConfig& cfg,
                                               const NoiseRunConfig& run,
                                               std::span<const double> ratios,
                                               std::span<const double> r_values);

struct DynamicRangeRow {
    double r;
    double dynamic_range_gamma;
    double noise_3sigma_gamma;
    /// Strictest fraction f in the requested list with noise <= f x dynamic
    /// range; 0 when none is satisfied.
    double max_fraction_satisfied;
    double snr_vs_classical_mzi;
};

std::vector<DynamicRangeRow> dynamic_range_exclusion(const ResonatorConfig& cfg,
                                                     const NoiseRunConfig& run,
                                                     std::span<const double> r_values,
                                                     std::span<const double> fractions);

/// Evenly spaced values, inclusive of both ends; a single value when count is 1.
std::vector<double> linspace(double lo, double hi, std::size_t count);
/// Logarithmically spaced values, inclusive.
std::vector<double> logspace(double lo, double hi, std::size_t count);

/// Worker count used by the sweeps (hardware concurrency, at least 1).
/// WGMSENSE_THREADS overrides.
std::size_t sweep_threads() noexcept;

}  // namespace wgmsense
