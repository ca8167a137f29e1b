// SPDX-License-Identifier: Apache-2.0

#include "rislink/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace rislink::kernels {

namespace {

Backend detect_best() {
#if defined(RISLINK_HAVE_AVX2)
    if (__builtin_cpu_supports("avx2")) return Backend::Avx2;
#endif
#if defined(RISLINK_HAVE_NEON)
    return Backend::Neon;
#endif
    return Backend::Scalar;
}

std::atomic<Backend> g_backend{detect_best()};

}  // namespace

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "unknown";
}

bool backend_available(Backend b) {
    switch (b) {
        case Backend::Scalar:
            return true;
        case Backend::Avx2:
#if defined(RISLINK_HAVE_AVX2)
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
        case Backend::Neon:
#if defined(RISLINK_HAVE_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

void force_backend(Backend b) {
    if (!backend_available(b))
        throw std::invalid_argument(std::string("kernel backend not available: ") + backend_name(b));
    g_backend.store(b, std::memory_order_relaxed);
}

void reset_backend() { g_backend.store(detect_best(), std::memory_order_relaxed); }

double sum_abs_products(const double* re_a, const double* im_a,
                        const double* re_b, const double* im_b, std::size_t n) {
    switch (active_backend()) {
#if defined(RISLINK_HAVE_AVX2)
        case Backend::Avx2: return detail::sum_abs_products_avx2(re_a, im_a, re_b, im_b, n);
#endif
#if defined(RISLINK_HAVE_NEON)
        case Backend::Neon: return detail::sum_abs_products_neon(re_a, im_a, re_b, im_b, n);
#endif
        default: return detail::sum_abs_products_scalar(re_a, im_a, re_b, im_b, n);
    }
}

double sum_power(const double* re, const double* im, std::size_t n) {
    switch (active_backend()) {
#if defined(RISLINK_HAVE_AVX2)
        case Backend::Avx2: return detail::sum_power_avx2(re, im, n);
#endif
#if defined(RISLINK_HAVE_NEON)
        case Backend::Neon: return detail::sum_power_neon(re, im, n);
#endif
        default: return detail::sum_power_scalar(re, im, n);
    }
}

std::complex<double> rotated_sum(const double* re, const double* im,
                                 const double* cos_t, const double* sin_t, std::size_t n) {
    switch (active_backend()) {
#if defined(RISLINK_HAVE_AVX2)
        case Backend::Avx2: return detail::rotated_sum_avx2(re, im, cos_t, sin_t, n);
#endif
#if defined(RISLINK_HAVE_NEON)
        case Backend::Neon: return detail::rotated_sum_neon(re, im, cos_t, sin_t, n);
#endif
        default: return detail::rotated_sum_scalar(re, im, cos_t, sin_t, n);
    }
}

}  // namespace rislink::kernels
