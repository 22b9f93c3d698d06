#include <doctest.h>

#include <cmath>

#include "dmu/errors.hpp"
#include "dmu/quadrature.hpp"
#include "test_util.hpp"

using dmu::Complex;
using testutil::kPi;

TEST_CASE("gauss legendre exactness") {
    const dmu::Quad1D q = dmu::gauss_legendre(8);
    double wsum = 0.0;
    for (double w : q.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    for (int p = 0; p <= 15; ++p) {
        double s = 0.0;
        for (std::size_t i = 0; i < q.nodes.size(); ++i)
            s += q.weights[i] * std::pow(q.nodes[i], p);
        const double exact = (p % 2 == 0) ? 2.0 / (p + 1.0) : 0.0;
        CHECK(std::abs(s - exact) <= 1e-13);
    }
    const dmu::Quad1D shifted = dmu::gauss_legendre(8, 0.0, 1.0);
    double s3 = 0.0;
    for (std::size_t i = 0; i < shifted.nodes.size(); ++i)
        s3 += shifted.weights[i] * shifted.nodes[i] * shifted.nodes[i] * shifted.nodes[i];
    CHECK(s3 == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("adaptive integration") {
    const auto res = dmu::integrate_adaptive([](double x) { return std::exp(x); }, 0.0, 1.0,
                                             1e-12, 1e-14, 4096);
    CHECK(res.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-13));

    const auto singular = dmu::integrate_adaptive(
        [](double x) { return 1.0 / std::sqrt(x); }, 1e-12, 1.0, 1e-10, 1e-12, 4096);
    CHECK(singular.value == doctest::Approx(2.0).epsilon(1e-5));

    CHECK_THROWS_AS((void)dmu::integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); },
                                                  1e-12, 1.0, 1e-10, 1e-12, 2),
                    dmu::QuadratureNotConverged);
}

TEST_CASE("disk quadrature basics") {
    const dmu::DiskQuadrature quad = dmu::disk_quadrature(32, 64);
    double wsum = 0.0;
    for (double w : quad.weights) wsum += w;
    CHECK(wsum == doctest::Approx(1.0).epsilon(1e-13));

    CHECK(quad.integrate([](Complex) { return 1.0; }) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(quad.integrate([](Complex z) { return z.real(); })) <= 1e-12);
    CHECK(quad.integrate([](Complex z) { return std::pow(std::abs(z), 4.0); }) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-10));
    CHECK(quad.integrate([](Complex z) { return std::norm(z); }) ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS((void)dmu::disk_quadrature(2, 64), dmu::InputError);
}

TEST_CASE("disk quadrature refinement order") {
    double exact = 0.0;
    double term = 1.0;
    for (int k = 0; term > 1e-18; ++k) {
        exact += term / (k + 1.0);
        term *= 0.25 / ((k + 1.0) * (k + 1.0));
    }
    const auto f = [](Complex z) { return std::exp(z.real()); };
    const double e4 = std::abs(dmu::disk_quadrature(4, 64).integrate(f) - exact);
    const double e8 = std::abs(dmu::disk_quadrature(8, 64).integrate(f) - exact);
    CHECK((e8 <= 1e-13 || e4 / e8 >= 16.0));
}
