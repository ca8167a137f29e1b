// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>

namespace rislink::kernels {

enum class Backend { Scalar, Avx2, Neon };

const char* backend_name(Backend b);
bool backend_available(Backend b);

/// Backend currently used by the kernel entry points. Defaults to the best
/// one the CPU supports.
Backend active_backend();

/// Select a backend explicitly (tests, benchmarking). Throws
/// std::invalid_argument if the backend is not available on this CPU.
/// Not safe to call while kernels are running on other threads.
void force_backend(Backend b);

/// Restore the default (auto-detected) backend.
void reset_backend();

// Every kernel follows one fixed accumulation contract so that all backends
// produce bit-identical results:
//   * four accumulator lanes; block k contributes element 4k+j to lane j,
//     tail element n4+j (j < n mod 4) also goes to lane j;
//   * per element: plain multiplies and adds, no FMA contraction
//     (translation units are built with -ffp-contract=off);
//   * final reduction is (lane0 + lane2) + (lane1 + lane3).
// Equivalence between backends is asserted bitwise in the test suite, which
// also makes simulator output independent of the machine's SIMD level.

/// Sum over k of |a_k| * |b_k| for complex sequences given as split
/// real/imag arrays.
double sum_abs_products(const double* re_a, const double* im_a,
                        const double* re_b, const double* im_b, std::size_t n);

/// One |a| * |b| term exactly as the kernels compute it. Streaming these
/// into four lanes by index mod 4 and reducing (l0+l2)+(l1+l3) reproduces
/// sum_abs_products bit for bit at every prefix length, which is what the
/// element-count profile in the engine relies on.
double abs_product_term(double re_a, double im_a, double re_b, double im_b);

/// Sum over k of re_k^2 + im_k^2.
double sum_power(const double* re, const double* im, std::size_t n);

/// Sum over k of (re_k + i*im_k) * (cos_k + i*sin_k).
std::complex<double> rotated_sum(const double* re, const double* im,
                                 const double* cos_t, const double* sin_t,
                                 std::size_t n);

namespace detail {
double sum_abs_products_scalar(const double*, const double*, const double*, const double*, std::size_t);
double sum_power_scalar(const double*, const double*, std::size_t);
std::complex<double> rotated_sum_scalar(const double*, const double*, const double*, const double*, std::size_t);
#if defined(RISLINK_HAVE_AVX2)
double sum_abs_products_avx2(const double*, const double*, const double*, const double*, std::size_t);
double sum_power_avx2(const double*, const double*, std::size_t);
std::complex<double> rotated_sum_avx2(const double*, const double*, const double*, const double*, std::size_t);
#endif
#if defined(RISLINK_HAVE_NEON)
double sum_abs_products_neon(const double*, const double*, const double*, const double*, std::size_t);
double sum_power_neon(const double*, const double*, std::size_t);
std::complex<double> rotated_sum_neon(const double*, const double*, const double*, const double*, std::size_t);
#endif
}  // namespace detail

}  // namespace rislink::kernels
