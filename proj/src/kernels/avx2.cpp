#include <immintrin.h>

#include <cmath>

#include "variants.hpp"

namespace wgmsense::kernels::avx2 {

void evaluate_lineshape(LineshapeParams p, std::span<const double> cos_theta,
                        std::span<const double> sin_theta, LineshapeOut out) noexcept {
    const std::size_t n = cos_theta.size();
    const __m256d r = _mm256_set1_pd(p.r);
    const __m256d a = _mm256_set1_pd(p.alpha);
    const __m256d ra = _mm256_set1_pd(p.r * p.alpha);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d quarter = _mm256_set1_pd(0.25);
    const __m256d minus_one = _mm256_set1_pd(-1.0);

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d c = _mm256_loadu_pd(cos_theta.data() + i);
        const __m256d s = _mm256_loadu_pd(sin_theta.data() + i);
        const __m256d num_re = _mm256_sub_pd(r, _mm256_mul_pd(a, c));
        const __m256d num_im = _mm256_sub_pd(zero, _mm256_mul_pd(a, s));
        const __m256d den_re = _mm256_sub_pd(one, _mm256_mul_pd(ra, c));
        const __m256d den_im = _mm256_sub_pd(zero, _mm256_mul_pd(ra, s));
        const __m256d den_sq =
            _mm256_add_pd(_mm256_mul_pd(den_re, den_re), _mm256_mul_pd(den_im, den_im));
        const __m256d t_re = _mm256_div_pd(
            _mm256_add_pd(_mm256_mul_pd(num_re, den_re), _mm256_mul_pd(num_im, den_im)), den_sq);
        const __m256d t_im = _mm256_div_pd(
            _mm256_sub_pd(_mm256_mul_pd(num_im, den_re), _mm256_mul_pd(num_re, den_im)), den_sq);
        const __m256d t_re_sq = _mm256_mul_pd(t_re, t_re);
        const __m256d t_im_sq = _mm256_mul_pd(t_im, t_im);
        const __m256d t_sq = _mm256_add_pd(t_re_sq, t_im_sq);

        const __m256d plus = _mm256_add_pd(one, t_re);
        const __m256d minus = _mm256_sub_pd(one, t_re);
        _mm256_storeu_pd(out.intensity.data() + i, t_sq);
        _mm256_storeu_pd(out.re_t.data() + i, t_re);
        _mm256_storeu_pd(out.i7.data() + i,
                         _mm256_mul_pd(quarter, _mm256_add_pd(_mm256_mul_pd(plus, plus), t_im_sq)));
        _mm256_storeu_pd(out.i8.data() + i,
                         _mm256_mul_pd(quarter, _mm256_add_pd(_mm256_mul_pd(minus, minus), t_im_sq)));

        const __m256d x = _mm256_sub_pd(one, t_sq);
        const __m256d x2 = _mm256_mul_pd(x, x);
        const __m256d bracket = _mm256_add_pd(
            _mm256_add_pd(one, _mm256_mul_pd(two, x2)), _mm256_mul_pd(two, _mm256_mul_pd(x2, x2)));
        const __m256d g = _mm256_div_pd(one, _mm256_sqrt_pd(bracket));
        const __m256d positive = _mm256_cmp_pd(t_sq, zero, _CMP_GT_OQ);
        // Guard the division so masked-off lanes never produce NaN.
        const __m256d safe_sq = _mm256_blendv_pd(one, t_sq, positive);
        const __m256d cos2 = _mm256_blendv_pd(
            minus_one, _mm256_div_pd(_mm256_sub_pd(t_re_sq, t_im_sq), safe_sq), positive);
        const __m256d coinc = _mm256_mul_pd(
            quarter, _mm256_add_pd(_mm256_add_pd(one, _mm256_mul_pd(g, g)),
                                   _mm256_mul_pd(_mm256_mul_pd(two, g), cos2)));
        _mm256_storeu_pd(out.coincidence.data() + i, coinc);
    }

    if (i < n) {
        const std::size_t rest = n - i;
        scalar::evaluate_lineshape(
            p, cos_theta.subspan(i), sin_theta.subspan(i),
            LineshapeOut{out.intensity.subspan(i, rest), out.re_t.subspan(i, rest),
                         out.i7.subspan(i, rest), out.i8.subspan(i, rest),
                         out.coincidence.subspan(i, rest)});
    }
}

void correlate(std::span<const double> padded, std::span<const double> weights,
               std::span<double> out) noexcept {
    // Vectorized over outputs so each lane accumulates taps in the same order
    // as the scalar loop.
    const std::size_t n = out.size();
    const std::size_t taps = weights.size();
    const double* src = padded.data();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256d acc0 = _mm256_setzero_pd();
        __m256d acc1 = _mm256_setzero_pd();
        for (std::size_t k = 0; k < taps; ++k) {
            const __m256d w = _mm256_set1_pd(weights[k]);
            acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(w, _mm256_loadu_pd(src + i + k)));
            acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(w, _mm256_loadu_pd(src + i + k + 4)));
        }
        _mm256_storeu_pd(out.data() + i, acc0);
        _mm256_storeu_pd(out.data() + i + 4, acc1);
    }
    if (i < n) scalar::correlate(padded.subspan(i), weights, out.subspan(i));
}

double dot(std::span<const double> a, std::span<const double> b) noexcept {
    const std::size_t n = a.size();
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 8 <= n; k += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + k), _mm256_loadu_pd(b.data() + k), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + k + 4),
                               _mm256_loadu_pd(b.data() + k + 4), acc1);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
    double acc = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; k < n; ++k) acc += a[k] * b[k];
    return acc;
}

}  // namespace wgmsense::kernels::avx2
