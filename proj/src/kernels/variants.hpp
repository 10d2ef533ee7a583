#pragma once

#include "wgmsense/kernels.hpp"

namespace wgmsense::kernels {

namespace scalar {
void evaluate_lineshape(LineshapeParams p, std::span<const double> cos_theta,
                        std::span<const double> sin_theta, LineshapeOut out) noexcept;
void correlate(std::span<const double> padded, std::span<const double> weights,
               std::span<double> out) noexcept;
double dot(std::span<const double> a, std::span<const double> b) noexcept;
}  // namespace scalar

#if defined(WGMSENSE_HAVE_AVX2)
namespace avx2 {
void evaluate_lineshape(LineshapeParams p, std::span<const double> cos_theta,
                        std::span<const double> sin_theta, LineshapeOut out) noexcept;
void correlate(std::span<const double> padded, std::span<const double> weights,
               std::span<double> out) noexcept;
double dot(std::span<const double> a, std::span<const double> b) noexcept;
}  // namespace avx2
#endif

}  // namespace wgmsense::kernels
