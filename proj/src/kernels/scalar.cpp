#include <cmath>

#include "variants.hpp"

namespace wgmsense::kernels::scalar {

void evaluate_lineshape(LineshapeParams p, std::span<const double> cos_theta,
                        std::span<const double> sin_theta, LineshapeOut out) noexcept {
    const double r = p.r;
    const double a = p.alpha;
    const double ra = r * a;
    for (std::size_t i = 0; i < cos_theta.size(); ++i) {
        const double c = cos_theta[i];
        const double s = sin_theta[i];
        const double num_re = r - a * c;
        const double num_im = -(a * s);
        const double den_re = 1.0 - ra * c;
        const double den_im = -(ra * s);
        const double den_sq = den_re * den_re + den_im * den_im;
        const double t_re = (num_re * den_re + num_im * den_im) / den_sq;
        const double t_im = (num_im * den_re - num_re * den_im) / den_sq;
        const double t_re_sq = t_re * t_re;
        const double t_im_sq = t_im * t_im;
        const double t_sq = t_re_sq + t_im_sq;

        const double plus = 1.0 + t_re;
        const double minus = 1.0 - t_re;
        out.intensity[i] = t_sq;
        out.re_t[i] = t_re;
        out.i7[i] = 0.25 * (plus * plus + t_im_sq);
        out.i8[i] = 0.25 * (minus * minus + t_im_sq);

        // A/(t*)^2 = g e^{2i arg t}; only cos(2 arg t) enters the coincidence rate.
        const double x = 1.0 - t_sq;
        const double x2 = x * x;
        const double g = 1.0 / std::sqrt(1.0 + 2.0 * x2 + 2.0 * (x2 * x2));
        const double cos2 = t_sq > 0.0 ? (t_re_sq - t_im_sq) / t_sq : -1.0;
        out.coincidence[i] = 0.25 * (1.0 + g * g + 2.0 * g * cos2);
    }
}

void correlate(std::span<const double> padded, std::span<const double> weights,
               std::span<double> out) noexcept {
    const std::size_t taps = weights.size();
    for (std::size_t i = 0; i < out.size(); ++i) {
        double acc = 0.0;
        for (std::size_t k = 0; k < taps; ++k) acc += weights[k] * padded[i + k];
        out[i] = acc;
    }
}

double dot(std::span<const double> a, std::span<const double> b) noexcept {
    double acc = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
    return acc;
}

}  // namespace wgmsense::kernels::scalar
