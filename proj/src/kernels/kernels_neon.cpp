// SPDX-License-Identifier: Apache-2.0
//
// NEON kernels for aarch64. Two 128-bit registers emulate the four
// accumulator lanes of the contract; vmul/vadd only (no vfma), so results
// stay bit-identical to the scalar reference.

#include "rislink/kernels.hpp"

#if defined(RISLINK_HAVE_NEON)

#include <arm_neon.h>

#include <cmath>

namespace rislink::kernels::detail {

double sum_abs_products_neon(const double* re_a, const double* im_a,
                             const double* re_b, const double* im_b, std::size_t n) {
    float64x2_t acc01 = vdupq_n_f64(0.0);  // lanes 0,1
    float64x2_t acc23 = vdupq_n_f64(0.0);  // lanes 2,3
    const std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        const float64x2_t ar0 = vld1q_f64(re_a + i), ar1 = vld1q_f64(re_a + i + 2);
        const float64x2_t ai0 = vld1q_f64(im_a + i), ai1 = vld1q_f64(im_a + i + 2);
        const float64x2_t br0 = vld1q_f64(re_b + i), br1 = vld1q_f64(re_b + i + 2);
        const float64x2_t bi0 = vld1q_f64(im_b + i), bi1 = vld1q_f64(im_b + i + 2);
        const float64x2_t a20 = vaddq_f64(vmulq_f64(ar0, ar0), vmulq_f64(ai0, ai0));
        const float64x2_t a21 = vaddq_f64(vmulq_f64(ar1, ar1), vmulq_f64(ai1, ai1));
        const float64x2_t b20 = vaddq_f64(vmulq_f64(br0, br0), vmulq_f64(bi0, bi0));
        const float64x2_t b21 = vaddq_f64(vmulq_f64(br1, br1), vmulq_f64(bi1, bi1));
        acc01 = vaddq_f64(acc01, vmulq_f64(vsqrtq_f64(a20), vsqrtq_f64(b20)));
        acc23 = vaddq_f64(acc23, vmulq_f64(vsqrtq_f64(a21), vsqrtq_f64(b21)));
    }
    double lane[4];
    vst1q_f64(lane, acc01);
    vst1q_f64(lane + 2, acc23);
    for (std::size_t i = n4; i < n; ++i) {
        const double ar = re_a[i], ai = im_a[i];
        const double br = re_b[i], bi = im_b[i];
        lane[i - n4] += std::sqrt(ar * ar + ai * ai) * std::sqrt(br * br + bi * bi);
    }
    return (lane[0] + lane[2]) + (lane[1] + lane[3]);
}

double sum_power_neon(const double* re, const double* im, std::size_t n) {
    float64x2_t acc01 = vdupq_n_f64(0.0);
    float64x2_t acc23 = vdupq_n_f64(0.0);
    const std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        const float64x2_t r0 = vld1q_f64(re + i), r1 = vld1q_f64(re + i + 2);
        const float64x2_t m0 = vld1q_f64(im + i), m1 = vld1q_f64(im + i + 2);
        acc01 = vaddq_f64(acc01, vaddq_f64(vmulq_f64(r0, r0), vmulq_f64(m0, m0)));
        acc23 = vaddq_f64(acc23, vaddq_f64(vmulq_f64(r1, r1), vmulq_f64(m1, m1)));
    }
    double lane[4];
    vst1q_f64(lane, acc01);
    vst1q_f64(lane + 2, acc23);
    for (std::size_t i = n4; i < n; ++i) {
        const double r = re[i], m = im[i];
        lane[i - n4] += r * r + m * m;
    }
    return (lane[0] + lane[2]) + (lane[1] + lane[3]);
}

std::complex<double> rotated_sum_neon(const double* re, const double* im,
                                      const double* cos_t, const double* sin_t,
                                      std::size_t n) {
    float64x2_t acc_re01 = vdupq_n_f64(0.0), acc_re23 = vdupq_n_f64(0.0);
    float64x2_t acc_im01 = vdupq_n_f64(0.0), acc_im23 = vdupq_n_f64(0.0);
    const std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        const float64x2_t r0 = vld1q_f64(re + i), r1 = vld1q_f64(re + i + 2);
        const float64x2_t m0 = vld1q_f64(im + i), m1 = vld1q_f64(im + i + 2);
        const float64x2_t c0 = vld1q_f64(cos_t + i), c1 = vld1q_f64(cos_t + i + 2);
        const float64x2_t s0 = vld1q_f64(sin_t + i), s1 = vld1q_f64(sin_t + i + 2);
        acc_re01 = vaddq_f64(acc_re01, vsubq_f64(vmulq_f64(r0, c0), vmulq_f64(m0, s0)));
        acc_re23 = vaddq_f64(acc_re23, vsubq_f64(vmulq_f64(r1, c1), vmulq_f64(m1, s1)));
        acc_im01 = vaddq_f64(acc_im01, vaddq_f64(vmulq_f64(r0, s0), vmulq_f64(m0, c0)));
        acc_im23 = vaddq_f64(acc_im23, vaddq_f64(vmulq_f64(r1, s1), vmulq_f64(m1, c1)));
    }
    double lane_re[4];
    double lane_im[4];
    vst1q_f64(lane_re, acc_re01);
    vst1q_f64(lane_re + 2, acc_re23);
    vst1q_f64(lane_im, acc_im01);
    vst1q_f64(lane_im + 2, acc_im23);
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

#endif  // RISLINK_HAVE_NEON
