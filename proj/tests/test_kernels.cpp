// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <complex>
#include <cstring>
#include <vector>

#include "rislink/kernels.hpp"
#include "rislink/rng.hpp"

using namespace rislink;

namespace {

struct Arrays {
    std::vector<double> re_a, im_a, re_b, im_b;
};

Arrays random_arrays(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    Arrays a;
    a.re_a.resize(n);
    a.im_a.resize(n);
    a.re_b.resize(n);
    a.im_b.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        a.re_a[i] = rng.gaussian();
        a.im_a[i] = rng.gaussian();
        a.re_b[i] = rng.gaussian();
        a.im_b[i] = rng.gaussian();
    }
    return a;
}

bool bit_equal(double x, double y) { return std::memcmp(&x, &y, sizeof(double)) == 0; }

}  // namespace

TEST_CASE("kernel backends agree bit for bit") {
    std::vector<kernels::Backend> others;
    for (auto b : {kernels::Backend::Avx2, kernels::Backend::Neon})
        if (kernels::backend_available(b)) others.push_back(b);
    // On a machine without SIMD this test degenerates to scalar-vs-scalar.
    for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 13u, 64u, 65u, 1000u, 2048u}) {
        const Arrays a = random_arrays(n, 0xC0FFEE + n);
        std::vector<double> cos_t(n), sin_t(n);
        for (std::size_t i = 0; i < n; ++i) {
            cos_t[i] = std::cos(0.1 * static_cast<double>(i));
            sin_t[i] = std::sin(0.1 * static_cast<double>(i));
        }
        kernels::force_backend(kernels::Backend::Scalar);
        const double sum_ref =
            kernels::sum_abs_products(a.re_a.data(), a.im_a.data(), a.re_b.data(), a.im_b.data(), n);
        const double pow_ref = kernels::sum_power(a.re_a.data(), a.im_a.data(), n);
        const auto rot_ref =
            kernels::rotated_sum(a.re_a.data(), a.im_a.data(), cos_t.data(), sin_t.data(), n);
        for (auto b : others) {
            kernels::force_backend(b);
            CAPTURE(kernels::backend_name(b));
            CAPTURE(n);
            const double sum =
                kernels::sum_abs_products(a.re_a.data(), a.im_a.data(), a.re_b.data(), a.im_b.data(), n);
            const double pow = kernels::sum_power(a.re_a.data(), a.im_a.data(), n);
            const auto rot =
                kernels::rotated_sum(a.re_a.data(), a.im_a.data(), cos_t.data(), sin_t.data(), n);
            CHECK(bit_equal(sum, sum_ref));
            CHECK(bit_equal(pow, pow_ref));
            CHECK(bit_equal(rot.real(), rot_ref.real()));
            CHECK(bit_equal(rot.imag(), rot_ref.imag()));
        }
        kernels::reset_backend();
    }
}

TEST_CASE("sum_abs_products matches a long-double reference") {
    for (std::size_t n : {1u, 3u, 17u, 500u}) {
        const Arrays a = random_arrays(n, 7 + n);
        long double expect = 0.0L;
        for (std::size_t i = 0; i < n; ++i) {
            const long double ma =
                sqrtl(static_cast<long double>(a.re_a[i]) * a.re_a[i] +
                      static_cast<long double>(a.im_a[i]) * a.im_a[i]);
            const long double mb =
                sqrtl(static_cast<long double>(a.re_b[i]) * a.re_b[i] +
                      static_cast<long double>(a.im_b[i]) * a.im_b[i]);
            expect += ma * mb;
        }
        const double got =
            kernels::sum_abs_products(a.re_a.data(), a.im_a.data(), a.re_b.data(), a.im_b.data(), n);
        CHECK(got == doctest::Approx(static_cast<double>(expect)).epsilon(1e-13));
    }
}

TEST_CASE("rotated_sum matches complex arithmetic") {
    const std::size_t n = 257;
    const Arrays a = random_arrays(n, 99);
    std::vector<double> cos_t(n), sin_t(n);
    Rng rng(4);
    std::complex<double> expect{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const double theta = (rng.uniform() - 0.5) * 6.0;
        cos_t[i] = std::cos(theta);
        sin_t[i] = std::sin(theta);
        expect += std::complex<double>(a.re_a[i], a.im_a[i]) *
                  std::complex<double>(cos_t[i], sin_t[i]);
    }
    const auto got = kernels::rotated_sum(a.re_a.data(), a.im_a.data(), cos_t.data(), sin_t.data(), n);
    CHECK(got.real() == doctest::Approx(expect.real()).epsilon(1e-11));
    CHECK(got.imag() == doctest::Approx(expect.imag()).epsilon(1e-11));
}

TEST_CASE("sum_power matches norm accumulation") {
    const std::size_t n = 100;
    const Arrays a = random_arrays(n, 5);
    double expect = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        expect += std::norm(std::complex<double>(a.re_a[i], a.im_a[i]));
    CHECK(kernels::sum_power(a.re_a.data(), a.im_a.data(), n) ==
          doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("forcing an unavailable backend throws") {
#if !defined(RISLINK_HAVE_NEON)
    CHECK_THROWS_AS(kernels::force_backend(kernels::Backend::Neon), std::invalid_argument);
#endif
    kernels::reset_backend();
    CHECK(kernels::backend_available(kernels::active_backend()));
}
