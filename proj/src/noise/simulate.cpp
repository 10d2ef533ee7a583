#include <cmath>
#include <random>
#include <sstream>

#include "wgmsense/errors.hpp"
#include "wgmsense/noise.hpp"

namespace wgmsense {

namespace {

enum class StreamTag : std::uint32_t { Jitter = 0x6a17, Shot = 0x5407 };

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream, StreamTag tag,
                            std::uint32_t lane) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32),
                      static_cast<std::uint32_t>(tag), lane};
    return std::mt19937_64{seq};
}

std::uint32_t case_lane(MeasurementCase c) { return static_cast<std::uint32_t>(c) + 1; }

double draw_counts(std::mt19937_64& engine, double mean) {
    if (!(mean > 0.0)) return 0.0;
    std::poisson_distribution<long long> dist(mean);
    return static_cast<double>(dist(engine));
}

}  // namespace

void NoiseRunConfig::validate() const {
    std::ostringstream msg;
    if (!(photons_per_bin > 0.0) || !std::isfinite(photons_per_bin))
        msg << "photons_per_bin must be positive (got " << photons_per_bin << ")";
    else if (n_steps < 100)
        msg << "n_steps must be >= 100 (got " << n_steps << ")";
    else if (!(jitter_sigma_fm >= 0.0) || !std::isfinite(jitter_sigma_fm))
        msg << "jitter_sigma_fm must be >= 0 (got " << jitter_sigma_fm << ")";
    else if (!(width_ratio >= 0.0) || !std::isfinite(width_ratio))
        msg << "width_ratio must be >= 0 (got " << width_ratio << ")";
    else if (!std::isfinite(true_shift))
        msg << "true_shift must be finite";
    else {
        grid.validate();
        return;
    }
    throw InvalidArgument(msg.str());
}

NoiseResult simulate_case(const ResonatorConfig& cfg, MeasurementCase c, const NoiseRunConfig& run,
                          std::uint64_t stream) {
    run.validate();

    Spectrum spec = sample_spectrum(cfg, c, run.grid);
    if (run.width_ratio > 0.0) spec = convolve_gaussian(spec, run.width_ratio);
    const OperatingPoint op = find_operating_point(spec);

    const LineshapeModel model(cfg, c, run.width_ratio, spec.step());
    const double reference = model.value(op.detuning);
    const double fm_per_gamma = femtometers_per_linewidth(cfg);
    const double jitter = run.jitter_sigma_fm / fm_per_gamma;
    const double scale = detection_scale(c, run.photons_per_bin);

    auto jitter_engine = make_engine(run.seed, stream, StreamTag::Jitter,
                                     run.common_random_numbers ? 0 : case_lane(c));
    auto shot_engine = make_engine(run.seed, stream, StreamTag::Shot, case_lane(c));
    std::normal_distribution<double> normal(0.0, 1.0);

    // A resonance shift s moves the lineshape, so the fixed probe sits at
    // op - s relative to the shifted resonance.
    std::vector<double> probe(run.n_steps);
    for (double& p : probe) p = op.detuning - (jitter * normal(jitter_engine) + run.true_shift);
    std::vector<LineshapeModel::Channels> channels(run.n_steps);
    model.channels(probe, channels);

    const bool difference = c == MeasurementCase::ClassicalWgmMzi;
    std::vector<double> estimates;
    estimates.reserve(run.n_steps);
    double total_counts = 0.0;
    for (const auto& ch : channels) {
        const double first = draw_counts(shot_engine, scale * ch.first);
        const double second = difference ? draw_counts(shot_engine, scale * ch.second) : 0.0;
        const double reading = (first - second) / scale;
        estimates.push_back((reference - reading) / op.gradient);
        total_counts += first + second;
    }

    const auto n = static_cast<double>(run.n_steps);
    double mean = 0.0;
    for (double e : estimates) mean += e;
    mean /= n;
    double squares = 0.0;
    for (double e : estimates) squares += (e - mean) * (e - mean);
    const double variance = squares / (n - 1.0);
    const double three_sigma = 3.0 * std::sqrt(variance);

    NoiseResult result;
    result.measurement = c;
    result.delta_omega_3sigma_gamma = three_sigma;
    result.delta_omega_3sigma_fm = three_sigma * fm_per_gamma;
    result.operating_point = op;
    result.mean_counts = total_counts / n;
    result.mean_estimate_gamma = mean;
    result.dynamic_range_violation = three_sigma > op.dynamic_range;
    return result;
}

double snr_enhancement(const ResonatorConfig& cfg, const NoiseRunConfig& run,
                       MeasurementCase baseline, MeasurementCase candidate, std::uint64_t stream) {
    const NoiseResult base = simulate_case(cfg, baseline, run, stream);
    const NoiseResult cand = simulate_case(cfg, candidate, run, stream);
    return base.delta_omega_3sigma_fm / cand.delta_omega_3sigma_fm;
}

}  // namespace wgmsense
