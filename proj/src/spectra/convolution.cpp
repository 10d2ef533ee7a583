#include <cmath>
#include <numbers>
#include <sstream>

#include "wgmsense/errors.hpp"
#include "wgmsense/kernels.hpp"
#include "wgmsense/spectra.hpp"

namespace wgmsense {

namespace {

const double kFwhmPerSigma = 2.0 * std::sqrt(2.0 * std::numbers::ln2);

void require_uniform(const Spectrum& spec) {
    if (spec.size() < 3 || spec.detunings.size() != spec.values.size())
        throw InvalidArgument("spectrum must have at least 3 samples and matching axes");
    const double step = spec.step();
    for (std::size_t i = 1; i < spec.size(); ++i) {
        const double d = spec.detunings[i] - spec.detunings[i - 1];
        if (!(d > 0.0) || std::abs(d - step) > 1e-9 * step)
            throw InvalidArgument("spectrum grid is not uniform and increasing");
    }
}

}  // namespace

std::vector<double> gaussian_kernel(double fwhm, double step) {
    if (!(fwhm > 0.0) || !(step > 0.0) || !std::isfinite(fwhm))
        throw InvalidArgument("gaussian_kernel: fwhm and step must be positive");
    if (fwhm / step < kMinSamplesPerFwhm) {
        std::ostringstream msg;
        msg << "grid step " << step << " resolves a Gaussian of FWHM " << fwhm << " with only "
            << fwhm / step << " samples (need " << kMinSamplesPerFwhm << ")";
        throw GridResolutionError(msg.str());
    }
    const double sigma = fwhm / kFwhmPerSigma;
    const auto half = static_cast<std::size_t>(std::ceil(kKernelHalfWidthSigmas * sigma / step));
    std::vector<double> w(2 * half + 1);
    double total = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        const double x = (static_cast<double>(k) - static_cast<double>(half)) * step / sigma;
        w[k] = std::exp(-0.5 * x * x);
        total += w[k];
    }
    for (double& v : w) v /= total;
    return w;
}

Spectrum convolve_gaussian(const Spectrum& spec, double width_ratio) {
    if (!std::isfinite(width_ratio) || width_ratio < 0.0)
        throw InvalidArgument("width_ratio must be finite and >= 0");
    if (width_ratio == 0.0) return spec;
    require_uniform(spec);

    const std::vector<double> weights = gaussian_kernel(width_ratio, spec.step());
    const std::size_t half = weights.size() / 2;
    const std::size_t n = spec.size();

    std::vector<double> padded;
    padded.reserve(n + 2 * half);
    padded.insert(padded.end(), half, spec.values.front());
    padded.insert(padded.end(), spec.values.begin(), spec.values.end());
    padded.insert(padded.end(), half, spec.values.back());

    Spectrum out = spec;
    out.width_ratio = std::hypot(spec.width_ratio, width_ratio);
    kernels::correlate(padded, weights, out.values);
    return out;
}

}  // namespace wgmsense
