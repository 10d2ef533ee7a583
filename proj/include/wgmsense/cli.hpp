#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wgmsense::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidArguments = 2;
inline constexpr int kExitRuntime = 3;

/// Fully resolved parameters for one command. Defaults are the headline
/// device: alpha 0.9997, r 0.9996, N 380, 1 fm jitter, 1000 bins.
///
/// Empty lists mean "use the command's default"; the resolved copy written to
/// the manifest always carries explicit lists so a manifest can be replayed.
struct Params {
    double alpha = 0.9997;
    double r = 0.9996;
    double radius_um = 40.0;
    double ref_index = 1.45;
    double lambda0_nm = 780.0;
    double n_photons = 380.0;
    std::size_t n_steps = 1000;
    double jitter_fm = 1.0;
    std::vector<double> width_ratios;
    std::uint64_t seed = 1;
    std::size_t grid_points = 4001;
    double grid_span_gamma = 5.0;  ///< grid covers [-span, +span]
    bool common_random_numbers = true;

    std::vector<std::string> cases;
    std::vector<double> n_values;
    std::vector<double> r_values;
    std::vector<double> alpha_values;
    std::vector<double> fractions;
};

/// Runs one command line (args excludes the program name). Output files go
/// to --out-dir, else $WGMSENSE_OUT_DIR, else the working directory.
/// Returns one of the kExit codes; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string version();

}  // namespace wgmsense::cli
