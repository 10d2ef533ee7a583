#include <algorithm>
#include <cmath>

#include "../spectra/lineshape_eval.hpp"
#include "wgmsense/errors.hpp"
#include "wgmsense/kernels.hpp"
#include "wgmsense/noise.hpp"

namespace wgmsense {

namespace {

// Bounds scratch memory for wide kernels: nodes evaluated per batch.
constexpr std::size_t kMaxBatchNodes = 1 << 16;

}  // namespace

LineshapeModel::LineshapeModel(const ResonatorConfig& cfg, MeasurementCase c, double width_ratio,
                               double step)
    : cfg_{cfg}, case_{c}, width_ratio_{width_ratio}, step_{step} {
    if (!std::isfinite(width_ratio) || width_ratio < 0.0)
        throw InvalidArgument("width_ratio must be finite and >= 0");
    if (width_ratio == 0.0) {
        offsets_ = {0.0};
        weights_ = {1.0};
        return;
    }
    // Same taps as convolve_gaussian, so values agree with the sampled and
    // convolved spectrum at grid points.
    weights_ = gaussian_kernel(width_ratio, step);
    const auto half = static_cast<double>(weights_.size() / 2);
    offsets_.resize(weights_.size());
    for (std::size_t k = 0; k < weights_.size(); ++k)
        offsets_[k] = (static_cast<double>(k) - half) * step;
}

LineshapeModel::Channels LineshapeModel::channels(double detuning) const {
    Channels out{};
    channels(std::span<const double>(&detuning, 1), std::span<Channels>(&out, 1));
    return out;
}

void LineshapeModel::channels(std::span<const double> detunings, std::span<Channels> out) const {
    if (out.size() != detunings.size()) throw InvalidArgument("channels: length mismatch");
    const std::size_t taps = weights_.size();
    const std::size_t per_batch = std::max<std::size_t>(1, kMaxBatchNodes / taps);

    std::vector<double> nodes;
    detail::LineshapeSamples samples;
    for (std::size_t begin = 0; begin < detunings.size(); begin += per_batch) {
        const std::size_t end = std::min(detunings.size(), begin + per_batch);
        nodes.resize((end - begin) * taps);
        for (std::size_t j = begin; j < end; ++j)
            for (std::size_t k = 0; k < taps; ++k)
                nodes[(j - begin) * taps + k] = detunings[j] + offsets_[k];
        detail::evaluate_all(cfg_, nodes, samples);

        const auto average = [&](const std::vector<double>& channel, std::size_t j) {
            return kernels::dot(weights_, std::span(channel).subspan((j - begin) * taps, taps));
        };
        for (std::size_t j = begin; j < end; ++j) {
            Channels& ch = out[j];
            switch (case_) {
                case MeasurementCase::ClassicalWgm:
                    ch.signal = ch.first = average(samples.intensity, j);
                    ch.second = 0.0;
                    break;
                case MeasurementCase::ClassicalWgmMzi:
                    ch.signal = average(samples.re_t, j);
                    ch.first = average(samples.i7, j);
                    ch.second = average(samples.i8, j);
                    break;
                case MeasurementCase::EntangledWgmMzi:
                    ch.signal = ch.first = average(samples.coincidence, j);
                    ch.second = 0.0;
                    break;
                case MeasurementCase::ClassicalWgmMziSingle:
                    ch.signal = ch.first = average(samples.i7, j);
                    ch.second = 0.0;
                    break;
            }
        }
    }
}

double detection_scale(MeasurementCase c, double photons_per_bin) noexcept {
    switch (c) {
        case MeasurementCase::ClassicalWgmMzi:
        case MeasurementCase::ClassicalWgmMziSingle:
            return 2.0 * photons_per_bin;
        case MeasurementCase::ClassicalWgm:
        case MeasurementCase::EntangledWgmMzi:
            break;
    }
    return photons_per_bin;
}

}  // namespace wgmsense
