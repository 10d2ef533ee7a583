#pragma once

#include <json.hpp>
#include <string>

#include "wgmsense/cli.hpp"
#include "wgmsense/noise.hpp"
#include "wgmsense/resonator.hpp"
#include "wgmsense/spectra.hpp"

namespace wgmsense::cli::detail {

/// Overlays the keys present in `config` onto `params`. Accepts either a bare
/// parameter object or a run manifest (its "params" member). Unknown keys and
/// mistyped values throw InvalidArgument.
void apply_config(Params& params, const nlohmann::json& config);
void apply_config_file(Params& params, const std::string& path);

nlohmann::json to_json(const Params& params);

/// Range checks that are not already enforced by the library types.
void validate(const Params& params);

ResonatorConfig resonator_config(const Params& params);
DetuningGrid detuning_grid(const Params& params);
NoiseRunConfig noise_run_config(const Params& params);

std::vector<MeasurementCase> resolve_cases(const std::vector<std::string>& names);

}  // namespace wgmsense::cli::detail
