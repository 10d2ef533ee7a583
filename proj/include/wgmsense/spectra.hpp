#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wgmsense/resonator.hpp"

namespace wgmsense {

enum class MeasurementCase {
    ClassicalWgm,           ///< I1 = |t|^2, single waveguide
    ClassicalWgmMzi,        ///< I2 = I7 - I8, difference of both MZI outputs
    EntangledWgmMzi,        ///< P_coinc, photon pairs with coincidence detection
    ClassicalWgmMziSingle,  ///< I7 alone; only used to compare MZI readouts
};

/// The three cases compared throughout (excludes the single-output variant).
inline constexpr MeasurementCase kHeadlineCases[] = {
    MeasurementCase::ClassicalWgm, MeasurementCase::ClassicalWgmMzi,
    MeasurementCase::EntangledWgmMzi};

std::string_view to_string(MeasurementCase c) noexcept;
std::optional<MeasurementCase> parse_measurement_case(std::string_view name) noexcept;

/// Uniform detuning grid in linewidth units.
struct DetuningGrid {
    static constexpr std::size_t kMinPoints = 64;
    static constexpr double kMinHalfSpan = 3.0;

    double min = -5.0;
    double max = 5.0;
    std::size_t count = 4001;

    /// Throws InvalidArgument for fewer than kMinPoints points, non-finite or
    /// empty span, or a span not covering [-3, 3].
    void validate() const;
    double step() const noexcept { return (max - min) / static_cast<double>(count - 1); }
    std::vector<double> points() const;
};

/// A sampled lineshape on a uniform detuning grid (linewidth units).
struct Spectrum {
    MeasurementCase measurement;
    std::vector<double> detunings;
    std::vector<double> values;
    ResonatorConfig config;
    double width_ratio = 0.0;  ///< effective FWHM of all applied Gaussians, 0 when monochromatic

    std::size_t size() const noexcept { return values.size(); }
    double step() const noexcept { return detunings[1] - detunings[0]; }
};

/// Samples the case's monochromatic lineshape on the grid.
Spectrum sample_spectrum(const ResonatorConfig& cfg, MeasurementCase c,
                         const DetuningGrid& grid = {});

/// Evaluates a case's monochromatic value at arbitrary detunings (linewidth
/// units). Uses the same kernel path as sample_spectrum.
void evaluate_case(const ResonatorConfig& cfg, MeasurementCase c,
                   std::span<const double> detunings, std::span<double> out);

// ---------------------------------------------------------------------------
// Gaussian linewidth convolution
// ---------------------------------------------------------------------------

inline constexpr double kMinSamplesPerFwhm = 8.0;
inline constexpr double kKernelHalfWidthSigmas = 5.0;

/// Discrete unit-sum Gaussian with the given FWHM, sampled at `step` over
/// +-kKernelHalfWidthSigmas standard deviations. Throws GridResolutionError
/// when the FWHM spans fewer than kMinSamplesPerFwhm samples.
std::vector<double> gaussian_kernel(double fwhm, double step);

/// Convolves with a unit-area Gaussian of FWHM `width_ratio` linewidths.
/// Edges are extended by holding the boundary values. width_ratio == 0
/// returns the input unchanged.
Spectrum convolve_gaussian(const Spectrum& spec, double width_ratio);

// ---------------------------------------------------------------------------
// Analysis
// ---------------------------------------------------------------------------

inline constexpr double kStationaryGradientThreshold = 1e-12;
inline constexpr double kFlatGradientThreshold = 1e-15;

struct OperatingPoint {
    std::size_t index;     ///< grid index of the operating point
    double detuning;       ///< linewidth units
    double gradient;       ///< d value / d detuning at the operating point
    double dynamic_range;  ///< distance to the nearest stationary point; +inf if none
};

/// Central-difference gradient (one-sided at the ends).
std::vector<double> gradient(const Spectrum& spec);

/// Detunings of stationary points: samples with |gradient| below
/// kStationaryGradientThreshold and interpolated zero crossings between
/// samples whose gradients change sign.
std::vector<double> stationary_points(const Spectrum& spec);

/// Global maximum |gradient| over interior samples. Near-ties (relative 1e-9)
/// go to the smaller |detuning|, then to the negative side. Throws
/// FlatSpectrumError when every gradient is below kFlatGradientThreshold.
OperatingPoint find_operating_point(const Spectrum& spec);

std::size_t count_strict_local_minima(const Spectrum& spec);

/// Full width of the dip at half depth between its minimum and the largest
/// value on the grid, with linear interpolation between samples. Throws
/// ComputationError when the dip is not bracketed by the grid.
double measure_dip_fwhm(const Spectrum& spec);

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

/// Header `detuning_gamma,value`, 9 significant digits.
void write_spectrum_csv(std::ostream& os, const Spectrum& spec);
void write_spectrum_csv(const std::string& path, const Spectrum& spec);

struct SpectrumTable {
    std::vector<double> detunings;
    std::vector<double> values;
};

/// Reads a file produced by write_spectrum_csv. Throws InvalidArgument on a
/// missing or mismatched header or malformed rows.
SpectrumTable read_spectrum_csv(std::istream& is);

/// Formats with 9 significant digits, the precision used by every CSV writer.
std::string format_number(double v);

}  // namespace wgmsense
