#pragma once

#include <span>
#include <vector>

#include "wgmsense/kernels.hpp"
#include "wgmsense/resonator.hpp"
#include "wgmsense/spectra.hpp"

namespace wgmsense::detail {

/// All detector channels at a set of detunings (linewidth units).
struct LineshapeSamples {
    std::vector<double> intensity;
    std::vector<double> re_t;
    std::vector<double> i7;
    std::vector<double> i8;
    std::vector<double> coincidence;

    void resize(std::size_t n);
    kernels::LineshapeOut view();
    const std::vector<double>& channel(MeasurementCase c) const;
};

void evaluate_all(const ResonatorConfig& cfg, std::span<const double> detunings,
                  LineshapeSamples& out);

}  // namespace wgmsense::detail
