#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "wgmsense/cli.hpp"

namespace wgmsense::cli::detail {

/// Record written next to every run's outputs. Its "params" member can be fed
/// back through --config to reproduce the CSVs byte for byte.
struct RunManifest {
    std::string command;
    Params params;
    std::vector<std::string> outputs;  ///< file names relative to the manifest
    double duration_s = 0.0;
    std::size_t dynamic_range_violations = 0;
};

std::string manifest_file_name(const std::string& command);

/// Writes <out_dir>/<command>_manifest.json and returns its path.
std::filesystem::path write_manifest(const std::filesystem::path& out_dir,
                                     const RunManifest& manifest);

}  // namespace wgmsense::cli::detail
