#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>

#include "manifest.hpp"
#include "options.hpp"
#include "wgmsense/cli.hpp"
#include "wgmsense/errors.hpp"
#include "wgmsense/noise.hpp"
#include "wgmsense/spectra.hpp"

namespace wgmsense::cli {

namespace fs = std::filesystem;
using detail::RunManifest;

namespace {

constexpr double kDefaultRangeLo = 0.999;
constexpr double kDefaultRangeHi = 0.9999;
constexpr std::size_t kDefaultMapCells = 20;
constexpr std::size_t kDefaultSweepPoints = 91;  // 1e-5 steps in r
const std::vector<double> kDefaultRatios{0.1, 0.2, 0.3, 0.5, 1.0};
const std::vector<double> kDefaultFractions{0.2, 0.4, 0.6, 0.8};

// Flag values are parsed into a staging copy and only copied onto the
// resolved parameters when the flag was actually given, so flags override
// the config file without defaults clobbering it.
struct Staged {
    Params values;
    std::vector<std::pair<CLI::Option*, std::function<void(Params&)>>> appliers;

    template <class T>
    CLI::Option* bind(CLI::App& app, const std::string& name, T Params::*member,
                      const std::string& desc) {
        CLI::Option* opt = app.add_option(name, values.*member, desc);
        appliers.emplace_back(opt, [this, member](Params& p) { p.*member = values.*member; });
        return opt;
    }

    void apply(Params& p) const {
        for (const auto& [opt, fn] : appliers)
            if (opt->count() > 0) fn(p);
    }
};

// --<stem>-min/--<stem>-max/--<stem>-count, expanded to a list when any is given.
struct RangeFlags {
    double lo;
    double hi;
    std::size_t count;
    bool logarithmic = false;
    std::vector<CLI::Option*> options;

    void add(CLI::App& app, const std::string& stem, const std::string& what) {
        options.push_back(app.add_option("--" + stem + "-min", lo, "lowest " + what));
        options.push_back(app.add_option("--" + stem + "-max", hi, "highest " + what));
        options.push_back(app.add_option("--" + stem + "-count", count, "number of " + what + " values"));
    }

    bool given() const {
        return std::any_of(options.begin(), options.end(),
                           [](const CLI::Option* o) { return o->count() > 0; });
    }

    std::vector<double> values() const {
        if (count == 0) throw InvalidArgument("range count must be at least 1");
        if (!(lo <= hi)) throw InvalidArgument("range minimum exceeds maximum");
        return logarithmic ? logspace(lo, hi, count) : linspace(lo, hi, count);
    }
};

struct Outcome {
    std::vector<std::string> outputs;
    std::size_t dynamic_range_violations = 0;
};

std::string fmt(double v) { return format_number(v); }

std::ofstream open_csv(const fs::path& path) {
    std::ofstream os(path);
    if (!os) throw ComputationError("cannot open '" + path.string() + "' for writing");
    return os;
}

void finish_csv(std::ofstream& os, const fs::path& path) {
    os.close();
    if (!os) throw ComputationError("failed writing '" + path.string() + "'");
}

double single_width_ratio(const Params& p) {
    if (p.width_ratios.size() > 1)
        throw InvalidArgument("this command takes a single --width-ratio");
    return p.width_ratios.empty() ? 0.0 : p.width_ratios.front();
}

Outcome run_spectrum(Params& p, const fs::path& dir, std::ostream& out) {
    if (p.cases.empty()) p.cases = {"all"};
    if (p.width_ratios.empty()) p.width_ratios = {0.0};
    const auto cases = detail::resolve_cases(p.cases);
    const ResonatorConfig cfg = detail::resonator_config(p);
    const DetuningGrid grid = detail::detuning_grid(p);

    Outcome outcome;
    for (MeasurementCase c : cases) {
        const Spectrum base = sample_spectrum(cfg, c, grid);
        for (double w : p.width_ratios) {
            const Spectrum spec = w > 0.0 ? convolve_gaussian(base, w) : base;
            const std::string name =
                "spectrum_" + std::string(to_string(c)) + "_w" + fmt(w) + ".csv";
            write_spectrum_csv((dir / name).string(), spec);
            outcome.outputs.push_back(name);

            const OperatingPoint op = find_operating_point(spec);
            out << to_string(c) << " width_ratio=" << fmt(w) << ": operating point "
                << fmt(op.detuning) << " gamma, gradient " << fmt(op.gradient)
                << " per gamma, dynamic range "
                << (std::isinf(op.dynamic_range) ? std::string("unbounded")
                                                 : fmt(op.dynamic_range) + " gamma")
                << ", " << count_strict_local_minima(spec) << " local minima -> " << name
                << '\n';
        }
    }
    return outcome;
}

Outcome run_noise_sweep(Params& p, const fs::path& dir, std::ostream& out) {
    if (p.cases.empty()) p.cases = {"all"};
    if (p.n_values.empty()) p.n_values = logspace(10.0, 1e6, 21);
    single_width_ratio(p);
    const auto cases = detail::resolve_cases(p.cases);
    const auto rows = sweep_photon_number(detail::resonator_config(p), detail::noise_run_config(p),
                                          p.n_values, cases);

    const std::string name = "noise_sweep.csv";
    auto os = open_csv(dir / name);
    os << "case,N,delta_omega_3sigma_fm\n";
    Outcome outcome{{name}, 0};
    for (const auto& row : rows) {
        os << to_string(row.measurement) << ',' << fmt(row.photons_per_bin) << ','
           << fmt(row.result.delta_omega_3sigma_fm) << '\n';
        outcome.dynamic_range_violations += row.result.dynamic_range_violation;
    }
    finish_csv(os, dir / name);

    for (MeasurementCase c : cases) {
        for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
            if (it->measurement != c) continue;
            out << to_string(c) << ": delta_omega_3sigma " << fmt(it->result.delta_omega_3sigma_fm)
                << " fm at N=" << fmt(it->photons_per_bin) << '\n';
            break;
        }
    }
    return outcome;
}

Outcome run_map(Params& p, const fs::path& dir, std::ostream& out) {
    if (p.alpha_values.empty())
        p.alpha_values = linspace(kDefaultRangeLo, kDefaultRangeHi, kDefaultMapCells);
    if (p.r_values.empty()) p.r_values = linspace(kDefaultRangeLo, kDefaultRangeHi, kDefaultMapCells);
    single_width_ratio(p);
    const auto cells = sweep_coupling_map(detail::resonator_config(p), p.alpha_values, p.r_values,
                                          detail::noise_run_config(p));

    const std::string name = "coupling_map.csv";
    auto os = open_csv(dir / name);
    os << "r,alpha,snr_vs_classical_wgm,snr_vs_classical_mzi,dr_violation_flag\n";
    Outcome outcome{{name}, 0};
    const CouplingMapCell* best = nullptr;
    for (const auto& cell : cells) {
        os << fmt(cell.r) << ',' << fmt(cell.alpha) << ',' << fmt(cell.snr_vs_classical_wgm) << ','
           << fmt(cell.snr_vs_classical_mzi) << ',' << (cell.dynamic_range_violation ? 1 : 0)
           << '\n';
        outcome.dynamic_range_violations += cell.dynamic_range_violation;
        if (!best || cell.snr_vs_classical_mzi > best->snr_vs_classical_mzi) best = &cell;
    }
    finish_csv(os, dir / name);
    if (best)
        out << "peak enhancement vs classical_wgm_mzi " << fmt(best->snr_vs_classical_mzi)
            << " at r=" << fmt(best->r) << " alpha=" << fmt(best->alpha) << '\n';
    out << outcome.dynamic_range_violations << " of " << cells.size()
        << " cells violate the dynamic range\n";
    return outcome;
}

Outcome run_linewidth(Params& p, const fs::path& dir, std::ostream& out) {
    if (p.width_ratios.empty()) p.width_ratios = kDefaultRatios;
    if (p.r_values.empty()) p.r_values = linspace(kDefaultRangeLo, kDefaultRangeHi, kDefaultSweepPoints);
    const ResonatorConfig cfg = detail::resonator_config(p);
    const auto rows = sweep_linewidth(cfg, detail::noise_run_config(p), p.width_ratios, p.r_values);

    const std::string name = "linewidth_sweep.csv";
    auto os = open_csv(dir / name);
    os << "width_ratio,r,snr_vs_classical_mzi\n";
    Outcome outcome{{name}, 0};
    for (const auto& row : rows) {
        os << fmt(row.width_ratio) << ',' << fmt(row.r) << ',' << fmt(row.snr_vs_classical_mzi)
           << '\n';
        outcome.dynamic_range_violations += row.dynamic_range_violation;
    }
    finish_csv(os, dir / name);

    const std::size_t nr = p.r_values.size();
    for (std::size_t i = 0; i < p.width_ratios.size(); ++i) {
        const auto first = rows.begin() + static_cast<std::ptrdiff_t>(i * nr);
        const auto peak = std::max_element(first, first + static_cast<std::ptrdiff_t>(nr),
                                           [](const auto& a, const auto& b) {
                                               return a.snr_vs_classical_mzi < b.snr_vs_classical_mzi;
                                           });
        out << "width_ratio " << fmt(p.width_ratios[i]) << ": peak enhancement "
            << fmt(peak->snr_vs_classical_mzi) << " at r=" << fmt(peak->r)
            << (peak->dynamic_range_violation ? " (dynamic range violated)" : "") << '\n';
    }
    return outcome;
}

Outcome run_dynrange(Params& p, const fs::path& dir, std::ostream& out) {
    if (p.r_values.empty()) p.r_values = linspace(kDefaultRangeLo, kDefaultRangeHi, kDefaultSweepPoints);
    if (p.fractions.empty()) p.fractions = kDefaultFractions;
    single_width_ratio(p);
    const auto rows = dynamic_range_exclusion(detail::resonator_config(p),
                                              detail::noise_run_config(p), p.r_values, p.fractions);

    const std::string name = "dynamic_range.csv";
    auto os = open_csv(dir / name);
    os << "r,dynamic_range_gamma,noise_3sigma_gamma,max_fraction_satisfied\n";
    Outcome outcome{{name}, 0};
    for (const auto& row : rows) {
        os << fmt(row.r) << ',' << fmt(row.dynamic_range_gamma) << ','
           << fmt(row.noise_3sigma_gamma) << ',' << fmt(row.max_fraction_satisfied) << '\n';
        outcome.dynamic_range_violations += row.noise_3sigma_gamma > row.dynamic_range_gamma;
    }
    finish_csv(os, dir / name);
    out << outcome.dynamic_range_violations << " of " << rows.size()
        << " r values have 3-sigma noise beyond the dynamic range\n";
    return outcome;
}

fs::path resolve_out_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("WGMSENSE_OUT_DIR"); env && *env) return env;
    return ".";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Whispering-gallery-mode sensing simulator", "wgmsense"};
    app.set_version_flag("--version", version());
    app.require_subcommand(1);

    Staged staged;
    std::string config_path;
    std::string out_dir_flag;
    bool independent_streams = false;

    struct Entry {
        CLI::App* app;
        std::function<Outcome(Params&, const fs::path&, std::ostream&)> execute;
        CLI::Option* list_flag = nullptr;  // explicit list that beats the range flags
        RangeFlags* range = nullptr;
        std::vector<double> Params::*range_target = nullptr;
        CLI::Option* alpha_list_flag = nullptr;
        RangeFlags* alpha_range = nullptr;
    };

    RangeFlags n_range{10.0, 1e6, 21, true, {}};
    RangeFlags map_r{kDefaultRangeLo, kDefaultRangeHi, kDefaultMapCells, false, {}};
    RangeFlags map_alpha{kDefaultRangeLo, kDefaultRangeHi, kDefaultMapCells, false, {}};
    RangeFlags lw_r{kDefaultRangeLo, kDefaultRangeHi, kDefaultSweepPoints, false, {}};
    RangeFlags dr_r{kDefaultRangeLo, kDefaultRangeHi, kDefaultSweepPoints, false, {}};

    auto add_common = [&](CLI::App& sub) {
        sub.add_option("--config", config_path, "JSON config or a previous run manifest");
        sub.add_option("--out-dir", out_dir_flag, "output directory (default $WGMSENSE_OUT_DIR or .)");
        staged.bind(sub, "--alpha", &Params::alpha, "round-trip amplitude transmission");
        staged.bind(sub, "--r", &Params::r, "waveguide-resonator through coefficient");
        staged.bind(sub, "--radius-um", &Params::radius_um, "resonator radius in micrometres");
        staged.bind(sub, "--ref-index", &Params::ref_index, "effective refractive index");
        staged.bind(sub, "--lambda0-nm", &Params::lambda0_nm, "resonance wavelength in nm");
        staged.bind(sub, "--n-photons", &Params::n_photons, "photons (pairs) per time bin");
        staged.bind(sub, "--n-steps", &Params::n_steps, "time bins per Monte Carlo run");
        staged.bind(sub, "--jitter-fm", &Params::jitter_fm, "1-sigma resonance jitter in fm");
        staged.bind(sub, "--width-ratio", &Params::width_ratios,
                    "source linewidth over resonance linewidth (repeatable)");
        staged.bind(sub, "--seed", &Params::seed, "RNG seed");
        staged.bind(sub, "--grid-points", &Params::grid_points, "detuning grid points");
        staged.bind(sub, "--grid-span-gamma", &Params::grid_span_gamma,
                    "grid covers [-span, span] linewidths");
        auto* indep = sub.add_flag("--independent-streams", independent_streams,
                                   "draw jitter independently for each case");
        staged.appliers.emplace_back(indep, [&independent_streams](Params& p) {
            p.common_random_numbers = !independent_streams;
        });
    };

    std::vector<Entry> entries;

    auto* spectrum = app.add_subcommand("spectrum", "write closed-form spectra");
    add_common(*spectrum);
    staged.bind(*spectrum, "--case", &Params::cases,
                "classical, mzi, entangled, single or all (repeatable)");
    entries.push_back({spectrum, run_spectrum});

    auto* noise = app.add_subcommand("noise-sweep", "3-sigma shift uncertainty against N");
    add_common(*noise);
    staged.bind(*noise, "--case", &Params::cases, "cases to simulate (repeatable)");
    auto* n_list = staged.bind(*noise, "--n-values", &Params::n_values, "explicit photon numbers");
    n_range.add(*noise, "n", "photon numbers (log spaced)");
    for (auto* o : n_range.options) n_list->excludes(o);
    entries.push_back({noise, run_noise_sweep, n_list, &n_range, &Params::n_values});

    auto* map = app.add_subcommand("map", "enhancement over an (r, alpha) grid");
    add_common(*map);
    auto* map_r_list = staged.bind(*map, "--r-values", &Params::r_values, "explicit r values");
    auto* map_a_list =
        staged.bind(*map, "--alpha-values", &Params::alpha_values, "explicit alpha values");
    map_r.add(*map, "r", "r");
    map_alpha.add(*map, "alpha", "alpha");
    for (auto* o : map_r.options) map_r_list->excludes(o);
    for (auto* o : map_alpha.options) map_a_list->excludes(o);
    entries.push_back({map, run_map, map_r_list, &map_r, &Params::r_values, map_a_list, &map_alpha});

    auto* linewidth = app.add_subcommand("linewidth", "enhancement against r per source linewidth");
    add_common(*linewidth);
    auto* lw_list = staged.bind(*linewidth, "--r-values", &Params::r_values, "explicit r values");
    lw_r.add(*linewidth, "r", "r");
    for (auto* o : lw_r.options) lw_list->excludes(o);
    entries.push_back({linewidth, run_linewidth, lw_list, &lw_r, &Params::r_values});

    auto* dynrange = app.add_subcommand("dynrange", "noise against dynamic range over r");
    add_common(*dynrange);
    auto* dr_list = staged.bind(*dynrange, "--r-values", &Params::r_values, "explicit r values");
    staged.bind(*dynrange, "--fractions", &Params::fractions, "dynamic-range fractions to test");
    dr_r.add(*dynrange, "r", "r");
    for (auto* o : dr_r.options) dr_list->excludes(o);
    entries.push_back({dynrange, run_dynrange, dr_list, &dr_r, &Params::r_values});

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidArguments;
    }

    const Entry* chosen = nullptr;
    for (const Entry& e : entries)
        if (e.app->parsed()) chosen = &e;

    try {
        const auto start = std::chrono::steady_clock::now();
        Params params;
        if (!config_path.empty()) detail::apply_config_file(params, config_path);
        staged.apply(params);
        if (chosen->range && chosen->range->given()) params.*(chosen->range_target) = chosen->range->values();
        if (chosen->alpha_range && chosen->alpha_range->given())
            params.alpha_values = chosen->alpha_range->values();
        detail::validate(params);

        const fs::path dir = resolve_out_dir(out_dir_flag);
        fs::create_directories(dir);

        RunManifest manifest;
        manifest.command = chosen->app->get_name();
        const Outcome outcome = chosen->execute(params, dir, out);
        manifest.params = params;
        manifest.outputs = outcome.outputs;
        manifest.dynamic_range_violations = outcome.dynamic_range_violations;
        manifest.duration_s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const fs::path written = detail::write_manifest(dir, manifest);
        for (const auto& name : outcome.outputs) out << "wrote " << (dir / name).string() << '\n';
        out << "wrote " << written.string() << '\n';
        return kExitOk;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalidArguments;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
}

}  // namespace wgmsense::cli
