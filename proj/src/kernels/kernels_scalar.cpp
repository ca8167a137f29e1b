// SPDX-License-Identifier: Apache-2.0
//
// Reference kernels. These define the numeric contract; the SIMD variants
// must match them bit for bit. Built with -ffp-contract=off.

#include "rislink/kernels.hpp"

#include <cmath>

namespace rislink::kernels {

double abs_product_term(double re_a, double im_a, double re_b, double im_b) {
    return std::sqrt(re_a * re_a + im_a * im_a) * std::sqrt(re_b * re_b + im_b * im_b);
}

}  // namespace rislink::kernels

namespace rislink::kernels::detail {

double sum_abs_products_scalar(const double* re_a, const double* im_a,
                               const double* re_b, const double* im_b, std::size_t n) {
    double lane[4] = {0.0, 0.0, 0.0, 0.0};
    const std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        for (std::size_t j = 0; j < 4; ++j) {
            const double ar = re_a[i + j], ai = im_a[i + j];
            const double br = re_b[i + j], bi = im_b[i + j];
            lane[j] += std::sqrt(ar * ar + ai * ai) * std::sqrt(br * br + bi * bi);
        }
    }
    for (std::size_t i = n4; i < n; ++i) {
        const double ar = re_a[i], ai = im_a[i];
        const double br = re_b[i], bi = im_b[i];
        lane[i - n4] += std::sqrt(ar * ar + ai * ai) * std::sqrt(br * br + bi * bi);
    }
    return (lane[0] + lane[2]) + (lane[1] + lane[3]);
}

double sum_power_scalar(const double* re, const double* im, std::size_t n) {
    double lane[4] = {0.0, 0.0, 0.0, 0.0};
    const std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        for (std::size_t j = 0; j < 4; ++j) {
            const double r = re[i + j], m = im[i + j];
            lane[j] += r * r + m * m;
        }
    }
    for (std::size_t i = n4; i < n; ++i) {
        const double r = re[i], m = im[i];
        lane[i - n4] += r * r + m * m;
    }
    return (lane[0] + lane[2]) + (lane[1] + lane[3]);
}

std::complex<double> rotated_sum_scalar(const double* re, const double* im,
                                        const double* cos_t, const double* sin_t,
                                        std::size_t n) {
    double lane_re[4] = {0.0, 0.0, 0.0, 0.0};
    double lane_im[4] = {0.0, 0.0, 0.0, 0.0};
    const std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        for (std::size_t j = 0; j < 4; ++j) {
            const double r = re[i + j], m = im[i + j];
            const double c = cos_t[i + j], s = sin_t[i + j];
            lane_re[j] += r * c - m * s;
            lane_im[j] += r * s + m * c;
        }
    }
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
