#include "options.hpp"

#include <cmath>
#include <fstream>

#include "wgmsense/errors.hpp"

namespace wgmsense::cli::detail {

namespace {

using nlohmann::json;

double as_double(const json& v, const std::string& key) {
    if (!v.is_number()) throw InvalidArgument("config key '" + key + "' must be a number");
    return v.get<double>();
}

std::uint64_t as_unsigned(const json& v, const std::string& key) {
    if (!v.is_number_unsigned())
        throw InvalidArgument("config key '" + key + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
}

std::vector<double> as_doubles(const json& v, const std::string& key) {
    if (v.is_number()) return {v.get<double>()};
    if (!v.is_array()) throw InvalidArgument("config key '" + key + "' must be a number list");
    std::vector<double> out;
    for (const auto& item : v) out.push_back(as_double(item, key));
    return out;
}

std::vector<std::string> as_strings(const json& v, const std::string& key) {
    if (v.is_string()) return {v.get<std::string>()};
    if (!v.is_array()) throw InvalidArgument("config key '" + key + "' must be a string list");
    std::vector<std::string> out;
    for (const auto& item : v) {
        if (!item.is_string()) throw InvalidArgument("config key '" + key + "' must hold strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw InvalidArgument(message);
}

}  // namespace

void apply_config(Params& p, const json& config) {
    if (!config.is_object()) throw InvalidArgument("config must be a JSON object");
    const json& src = config.contains("params") ? config.at("params") : config;
    if (!src.is_object()) throw InvalidArgument("config 'params' must be a JSON object");

    for (const auto& [key, v] : src.items()) {
        if (key == "alpha") p.alpha = as_double(v, key);
        else if (key == "r") p.r = as_double(v, key);
        else if (key == "radius_um") p.radius_um = as_double(v, key);
        else if (key == "ref_index") p.ref_index = as_double(v, key);
        else if (key == "lambda0_nm") p.lambda0_nm = as_double(v, key);
        else if (key == "n_photons") p.n_photons = as_double(v, key);
        else if (key == "n_steps") p.n_steps = as_unsigned(v, key);
        else if (key == "jitter_fm") p.jitter_fm = as_double(v, key);
        else if (key == "width_ratio") p.width_ratios = as_doubles(v, key);
        else if (key == "seed") p.seed = as_unsigned(v, key);
        else if (key == "grid_points") p.grid_points = as_unsigned(v, key);
        else if (key == "grid_span_gamma") p.grid_span_gamma = as_double(v, key);
        else if (key == "common_random_numbers") {
            if (!v.is_boolean()) throw InvalidArgument("config key '" + key + "' must be a boolean");
            p.common_random_numbers = v.get<bool>();
        } else if (key == "cases") p.cases = as_strings(v, key);
        else if (key == "n_values") p.n_values = as_doubles(v, key);
        else if (key == "r_values") p.r_values = as_doubles(v, key);
        else if (key == "alpha_values") p.alpha_values = as_doubles(v, key);
        else if (key == "fractions") p.fractions = as_doubles(v, key);
        else throw InvalidArgument("unknown config key '" + key + "'");
    }
}

void apply_config_file(Params& params, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read config file '" + path + "'");
    json config;
    try {
        config = json::parse(in);
    } catch (const json::exception& e) {
        throw InvalidArgument("config file '" + path + "': " + e.what());
    }
    apply_config(params, config);
}

json to_json(const Params& p) {
    return json{
        {"alpha", p.alpha},
        {"r", p.r},
        {"radius_um", p.radius_um},
        {"ref_index", p.ref_index},
        {"lambda0_nm", p.lambda0_nm},
        {"n_photons", p.n_photons},
        {"n_steps", p.n_steps},
        {"jitter_fm", p.jitter_fm},
        {"width_ratio", p.width_ratios},
        {"seed", p.seed},
        {"grid_points", p.grid_points},
        {"grid_span_gamma", p.grid_span_gamma},
        {"common_random_numbers", p.common_random_numbers},
        {"cases", p.cases},
        {"n_values", p.n_values},
        {"r_values", p.r_values},
        {"alpha_values", p.alpha_values},
        {"fractions", p.fractions},
    };
}

void validate(const Params& p) {
    require(p.alpha > 0.0 && p.alpha < 1.0, "--alpha must lie in (0, 1)");
    require(p.r >= 0.0 && p.r < 1.0, "--r must lie in [0, 1)");
    require(p.radius_um > 0.0 && std::isfinite(p.radius_um), "--radius-um must be positive");
    require(p.ref_index >= 1.0 && std::isfinite(p.ref_index), "--ref-index must be >= 1");
    require(p.lambda0_nm > 0.0 && std::isfinite(p.lambda0_nm), "--lambda0-nm must be positive");
    require(p.n_photons > 0.0 && std::isfinite(p.n_photons), "--n-photons must be positive");
    require(p.n_steps >= 100, "--n-steps must be at least 100");
    require(p.jitter_fm >= 0.0 && std::isfinite(p.jitter_fm), "--jitter-fm must be >= 0");
    for (double w : p.width_ratios)
        require(w >= 0.0 && std::isfinite(w), "--width-ratio values must be >= 0");
    require(p.grid_points >= DetuningGrid::kMinPoints,
            "--grid-points must be at least " + std::to_string(DetuningGrid::kMinPoints));
    require(p.grid_span_gamma >= DetuningGrid::kMinHalfSpan && std::isfinite(p.grid_span_gamma),
            "--grid-span-gamma must be at least 3");
    for (double n : p.n_values) require(n > 0.0 && std::isfinite(n), "photon numbers must be positive");
    for (double r : p.r_values) require(r > 0.0 && r < 1.0, "r values must lie in (0, 1)");
    for (double a : p.alpha_values) require(a > 0.0 && a < 1.0, "alpha values must lie in (0, 1)");
    for (double f : p.fractions) require(f > 0.0 && f <= 1.0, "fractions must lie in (0, 1]");
    resolve_cases(p.cases);
}

ResonatorConfig resonator_config(const Params& p) {
    return ResonatorConfig(p.r, p.alpha, p.radius_um * 1e-6, p.ref_index, p.lambda0_nm * 1e-9);
}

DetuningGrid detuning_grid(const Params& p) {
    DetuningGrid grid{-p.grid_span_gamma, p.grid_span_gamma, p.grid_points};
    grid.validate();
    return grid;
}

NoiseRunConfig noise_run_config(const Params& p) {
    NoiseRunConfig run;
    run.photons_per_bin = p.n_photons;
    run.n_steps = p.n_steps;
    run.jitter_sigma_fm = p.jitter_fm;
    run.seed = p.seed;
    run.width_ratio = p.width_ratios.empty() ? 0.0 : p.width_ratios.front();
    run.common_random_numbers = p.common_random_numbers;
    run.grid = detuning_grid(p);
    run.validate();
    return run;
}

std::vector<MeasurementCase> resolve_cases(const std::vector<std::string>& names) {
    std::vector<MeasurementCase> out;
    auto add = [&out](MeasurementCase c) {
        for (MeasurementCase seen : out)
            if (seen == c) return;
        out.push_back(c);
    };
    for (const std::string& name : names) {
        if (name == "all") {
            for (MeasurementCase c : kHeadlineCases) add(c);
            continue;
        }
        const auto c = parse_measurement_case(name);
        if (!c) throw InvalidArgument("unknown case '" + name + "'");
        add(*c);
    }
    return out;
}

}  // namespace wgmsense::cli::detail
