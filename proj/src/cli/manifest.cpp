#include "manifest.hpp"

#include <algorithm>
#include <fstream>

#include "options.hpp"
#include "wgmsense/errors.hpp"

namespace wgmsense::cli {

std::string version() { return WGMSENSE_VERSION; }

namespace detail {

std::string manifest_file_name(const std::string& command) {
    std::string stem = command;
    std::replace(stem.begin(), stem.end(), '-', '_');
    return stem + "_manifest.json";
}

std::filesystem::path write_manifest(const std::filesystem::path& out_dir,
                                     const RunManifest& m) {
    const nlohmann::json doc{
        {"command", m.command},
        {"params", to_json(m.params)},
        {"seed", m.params.seed},
        {"version", version()},
        {"outputs", m.outputs},
        {"duration_s", m.duration_s},
        {"dynamic_range_violations", m.dynamic_range_violations},
    };
    const auto path = out_dir / manifest_file_name(m.command);
    std::ofstream os(path);
    if (!os) throw ComputationError("cannot open '" + path.string() + "' for writing");
    os << doc.dump(2) << '\n';
    if (!os) throw ComputationError("failed writing '" + path.string() + "'");
    return path;
}

}  // namespace detail
}  // namespace wgmsense::cli
