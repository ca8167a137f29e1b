// SPDX-License-Identifier: Apache-2.0
//
// AVX2 kernels. This translation unit is the only one compiled with -mavx2;
// callers must check backend availability before dispatching here. No FMA:
// mul followed by add keeps the rounding identical to the scalar reference.

#include "rislink/kernels.hpp"

#if defined(RISLINK_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>

namespace rislink::kernels::detail {

namespace {

inline double reduce_lanes(__m256d acc) {
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    return (lane[0] + lane[2]) + (lane[1] + lane[3]);
}

}  // namespace

double sum_abs_products_avx2(const double* re_a, const double* im_a,
                             const double* re_b, const double* im_b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    const std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        const __m256d ar = _mm256_loadu_pd(re_a + i);
        const __m256d ai = _mm256_loadu_pd(im_a + i);
        const __m256d br = _mm256_loadu_pd(re_b + i);
        const __m256d bi = _mm256_loadu_pd(im_b + i);
        const __m256d a2 = _mm256_add_pd(_mm256_mul_pd(ar, ar), _mm256_mul_pd(ai, ai));
        const __m256d b2 = _mm256_add_pd(_mm256_mul_pd(br, br), _mm256_mul_pd(bi, bi));
        const __m256d term = _mm256_mul_pd(_mm256_sqrt_pd(a2), _mm256_sqrt_pd(b2));
        acc = _mm256_add_pd(acc, term);
    }
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    for (std::size_t i = n4; i < n; ++i) {
        const double ar = re_a[i], ai = im_a[i];
        const double br = re_b[i], bi = im_b[i];
        lane[i - n4] += std::sqrt(ar * ar + ai * ai) * std::sqrt(br * br + bi * bi);
    }
    return (lane[0] + lane[2]) + (lane[1] + lane[3]);
}

double sum_power_avx2(const double* re, const double* im, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    const std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        const __m256d r = _mm256_loadu_pd(re + i);
        const __m256d m = _mm256_loadu_pd(im + i);
        acc = _mm256_add_pd(acc, _mm256_add_pd(_mm256_mul_pd(r, r), _mm256_mul_pd(m, m)));
    }
    alignas(32) double lane[4];
    _mm256_store_pd(lane, acc);
    for (std::size_t i = n4; i < n; ++i) {
        const double r = re[i], m = im[i];
        lane[i - n4] += r * r + m * m;
    }
    return (lane[0] + lane[2]) + (lane[1] + lane[3]);
}

std::complex<double> rotated_sum_avx2(const double* re, const double* im,
                                      const double* cos_t, const double* sin_t,
                                      std::size_t n) {
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    const std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        const __m256d r = _mm256_loadu_pd(re + i);
        const __m256d m = _mm256_loadu_pd(im + i);
        const __m256d c = _mm256_loadu_pd(cos_t + i);
        const __m256d s = _mm256_loadu_pd(sin_t + i);
        acc_re = _mm256_add_pd(acc_re, _mm256_sub_pd(_mm256_mul_pd(r, c), _mm256_mul_pd(m, s)));
        acc_im = _mm256_add_pd(acc_im, _mm256_add_pd(_mm256_mul_pd(r, s), _mm256_mul_pd(m, c)));
    }
    alignas(32) double lane_re[4];
    alignas(32) double lane_im[4];
    _mm256_store_pd(lane_re, acc_re);
    _mm256_store_pd(lane_im, acc_im);
    for (std::size_t i = n4; i < n; ++i) {
        const double r = re[i], m = im[i];
        const double c = cos_t[i], s = sin_t[i];
        lane_re[i - n4] += r * c - m * s;
        lane_im[i - n4] += r * s + m * c;
    }
    return {(lane_re[0] + lane_re[2]) + (lane_re[1] + lane_re[3]),
            (lane_im[0] + lane_im[2]) + (lane_im[1] + lane_im[3])};
}

}  // namespace rislink::kernels::detail

#endif  // RISLINK_HAVE_AVX2
