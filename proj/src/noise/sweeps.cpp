#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "parallel.hpp"
#include "wgmsense/errors.hpp"
#include "wgmsense/noise.hpp"

namespace wgmsense {

namespace {

void require_unit_interval(std::span<const double> values, const char* name) {
    for (double v : values)
        if (!(v > 0.0 && v < 1.0))
            throw InvalidArgument(std::string(name) + " values must lie in (0, 1), got " +
                                  std::to_string(v));
}

NoiseRunConfig with_photons(NoiseRunConfig run, double n) {
    run.photons_per_bin = n;
    return run;
}

NoiseRunConfig with_width(NoiseRunConfig run, double w) {
    run.width_ratio = w;
    return run;
}

}  // namespace

std::size_t sweep_threads() noexcept {
    if (const char* env = std::getenv("WGMSENSE_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    if (count == 0) return {};
    if (count == 1) return {lo};
    std::vector<double> v(count);
    for (std::size_t i = 0; i < count; ++i)
        v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    v.back() = hi;
    return v;
}

std::vector<double> logspace(double lo, double hi, std::size_t count) {
    if (!(lo > 0.0) || !(hi > 0.0)) throw InvalidArgument("logspace bounds must be positive");
    std::vector<double> v = linspace(std::log10(lo), std::log10(hi), count);
    for (double& x : v) x = std::pow(10.0, x);
    if (!v.empty()) {
        v.front() = lo;
        v.back() = hi;
    }
    return v;
}

std::vector<PhotonSweepRow> sweep_photon_number(const ResonatorConfig& cfg,
                                                const NoiseRunConfig& run,
                                                std::span<const double> n_values,
                                                std::span<const MeasurementCase> cases) {
    run.validate();
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        if (!(n_values[i] > 0.0) || !std::isfinite(n_values[i]))
            throw InvalidArgument("photon numbers must be positive");
        if (i > 0 && !(n_values[i] > n_values[i - 1]))
            throw InvalidArgument("photon numbers must be strictly increasing");
    }

    const std::size_t n_count = n_values.size();
    std::vector<PhotonSweepRow> rows(cases.size() * n_count);
    detail::parallel_for(n_count, [&](std::size_t j) {
        const NoiseRunConfig cell = with_photons(run, n_values[j]);
        for (std::size_t c = 0; c < cases.size(); ++c)
            rows[c * n_count + j] = {cases[c], n_values[j], simulate_case(cfg, cases[c], cell, j)};
    });
    return rows;
}

std::vector<CouplingMapCell> sweep_coupling_map(const ResonatorConfig& base,
                                                std::span<const double> alpha_values,
                                                std::span<const double> r_values,
                                                const NoiseRunConfig& run) {
    run.validate();
    require_unit_interval(alpha_values, "alpha");
    require_unit_interval(r_values, "r");

    const std::size_t nr = r_values.size();
    std::vector<CouplingMapCell> cells(alpha_values.size() * nr);
    detail::parallel_for(cells.size(), [&](std::size_t i) {
        const double alpha = alpha_values[i / nr];
        const double r = r_values[i % nr];
        const ResonatorConfig cfg = base.with_coupling(r, alpha);
        const NoiseResult wgm = simulate_case(cfg, MeasurementCase::ClassicalWgm, run, i);
        const NoiseResult mzi = simulate_case(cfg, MeasurementCase::ClassicalWgmMzi, run, i);
        const NoiseResult ent = simulate_case(cfg, MeasurementCase::EntangledWgmMzi, run, i);
        cells[i] = {r,
                    alpha,
                    wgm.delta_omega_3sigma_fm / ent.delta_omega_3sigma_fm,
                    mzi.delta_omega_3sigma_fm / ent.delta_omega_3sigma_fm,
                    ent.dynamic_range_violation,
                    ent};
    });
    return cells;
}

std::vector<LinewidthSweepRow> sweep_linewidth(const ResonatorConfig& cfg,
                                               const NoiseRunConfig& run,
                                               std::span<const double> ratios,
                                               std::span<const double> r_values) {
    run.validate();
    for (double w : ratios)
        if (!(w >= 0.0 && w <= 1.0))
            throw InvalidArgument("linewidth ratios must lie in [0, 1], got " + std::to_string(w));
    require_unit_interval(r_values, "r");

    const std::size_t nr = r_values.size();
    std::vector<LinewidthSweepRow> rows(ratios.size() * nr);
    detail::parallel_for(rows.size(), [&](std::size_t i) {
        const double ratio = ratios[i / nr];
        const double r = r_values[i % nr];
        const ResonatorConfig cell_cfg = cfg.with_coupling(r, cfg.alpha());
        const NoiseRunConfig cell = with_width(run, ratio);
        const NoiseResult mzi = simulate_case(cell_cfg, MeasurementCase::ClassicalWgmMzi, cell, i);
        const NoiseResult ent = simulate_case(cell_cfg, MeasurementCase::EntangledWgmMzi, cell, i);
        rows[i] = {ratio, r, mzi.delta_omega_3sigma_fm / ent.delta_omega_3sigma_fm,
                   ent.dynamic_range_violation};
    });
    return rows;
}

std::vector<DynamicRangeRow> dynamic_range_exclusion(const ResonatorConfig& cfg,
                                                     const NoiseRunConfig& run,
                                                     std::span<const double> r_values,
                                                     std::span<const double> fractions) {
    run.validate();
    require_unit_interval(r_values, "r");
    std::vector<double> sorted(fractions.begin(), fractions.end());
    for (double f : sorted)
        if (!(f > 0.0 && f <= 1.0))
            throw InvalidArgument("fractions must lie in (0, 1], got " + std::to_string(f));
    std::sort(sorted.begin(), sorted.end());

    std::vector<DynamicRangeRow> rows(r_values.size());
    detail::parallel_for(rows.size(), [&](std::size_t i) {
        const ResonatorConfig cell_cfg = cfg.with_coupling(r_values[i], cfg.alpha());
        const NoiseResult mzi = simulate_case(cell_cfg, MeasurementCase::ClassicalWgmMzi, run, i);
        const NoiseResult ent = simulate_case(cell_cfg, MeasurementCase::EntangledWgmMzi, run, i);
        const double range = ent.operating_point.dynamic_range;
        const double noise = ent.delta_omega_3sigma_gamma;
        double strictest = 0.0;
        for (double f : sorted) {
            if (noise <= f * range) {
                strictest = f;
                break;
            }
        }
        rows[i] = {r_values[i], range, noise, strictest,
                   mzi.delta_omega_3sigma_fm / ent.delta_omega_3sigma_fm};
    });
    return rows;
}

}  // namespace wgmsense
