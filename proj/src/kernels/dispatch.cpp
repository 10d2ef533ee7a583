#include <atomic>
#include <cstdlib>
#include <cstring>
#include <string>

#include "variants.hpp"
#include "wgmsense/errors.hpp"

namespace wgmsense::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(WGMSENSE_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa detect() noexcept {
    if (const char* env = std::getenv("WGMSENSE_FORCE_SCALAR"); env && std::strcmp(env, "0") != 0)
        return Isa::Scalar;
    return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& selected() noexcept {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

void check_lengths(std::span<const double> c, std::span<const double> s, const LineshapeOut& o) {
    const std::size_t n = c.size();
    if (s.size() != n || o.intensity.size() != n || o.re_t.size() != n || o.i7.size() != n ||
        o.i8.size() != n || o.coincidence.size() != n)
        throw InvalidArgument("evaluate_lineshape: span lengths differ");
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
    }
    return "unknown";
}

bool isa_available(Isa isa) noexcept {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2: return cpu_has_avx2();
    }
    return false;
}

Isa active_isa() noexcept { return selected().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
    if (!isa_available(isa))
        throw InvalidArgument("kernel variant '" + std::string(to_string(isa)) + "' is unavailable");
    selected().store(isa, std::memory_order_relaxed);
}

void evaluate_lineshape(LineshapeParams p, std::span<const double> cos_theta,
                        std::span<const double> sin_theta, LineshapeOut out) {
    check_lengths(cos_theta, sin_theta, out);
#if defined(WGMSENSE_HAVE_AVX2)
    if (active_isa() == Isa::Avx2) return avx2::evaluate_lineshape(p, cos_theta, sin_theta, out);
#endif
    scalar::evaluate_lineshape(p, cos_theta, sin_theta, out);
}

void correlate(std::span<const double> padded, std::span<const double> weights,
               std::span<double> out) {
    if (weights.empty() || padded.size() + 1 < out.size() + weights.size())
        throw InvalidArgument("correlate: padded input shorter than output + taps - 1");
#if defined(WGMSENSE_HAVE_AVX2)
    if (active_isa() == Isa::Avx2) return avx2::correlate(padded, weights, out);
#endif
    scalar::correlate(padded, weights, out);
}

double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw InvalidArgument("dot: length mismatch");
#if defined(WGMSENSE_HAVE_AVX2)
    if (active_isa() == Isa::Avx2) return avx2::dot(a, b);
#endif
    return scalar::dot(a, b);
}

}  // namespace wgmsense::kernels
