#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Data-parallel inner loops behind spectrum sampling, convolution and the
// Monte Carlo lineshape evaluator. Each kernel has a portable scalar reference
// implementation and, where the build and CPU allow, an AVX2 variant selected
// once at runtime. Variants are required to agree with the scalar reference to
// within a few ulp; tests/unit/test_kernels.cpp checks this.

namespace wgmsense::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

/// True if the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa) noexcept;

/// Variant used by the dispatching entry points below. Defaults to the best
/// available; WGMSENSE_FORCE_SCALAR=1 in the environment pins Scalar.
Isa active_isa() noexcept;

/// Overrides the dispatch choice (tests, benchmarks). Throws InvalidArgument
/// if the requested variant is unavailable.
void set_active_isa(Isa isa);

/// Per-point optical quantities for a batch of round-trip phases. Every span
/// must have the same length as the cos/sin inputs.
struct LineshapeOut {
    std::span<double> intensity;    ///< |t|^2
    std::span<double> re_t;         ///< Re t  (= I7 - I8)
    std::span<double> i7;           ///< |1 + t|^2 / 4
    std::span<double> i8;           ///< |1 - t|^2 / 4
    std::span<double> coincidence;  ///< |A/(t*)^2 + 1|^2 / 4
};

struct LineshapeParams {
    double r;
    double alpha;
};

void evaluate_lineshape(LineshapeParams p, std::span<const double> cos_theta,
                        std::span<const double> sin_theta, LineshapeOut out);

/// out[i] = sum_k weights[k] * padded[i + k] for i in [0, out.size()).
/// Requires padded.size() >= out.size() + weights.size() - 1.
void correlate(std::span<const double> padded, std::span<const double> weights,
               std::span<double> out);

/// sum_k a[k] * b[k].
double dot(std::span<const double> a, std::span<const double> b);

}  // namespace wgmsense::kernels
