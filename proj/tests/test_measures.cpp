#include <doctest.h>

#include <cmath>
#include <random>

#include "dmu/errors.hpp"
#include "dmu/measures.hpp"
#include "test_util.hpp"

using dmu::Complex;
using dmu::PlanarMeasure;
using testutil::delta;
using testutil::kPi;

TEST_CASE("poisson extension") {
    CHECK(dmu::poisson_extension(delta(0.0), {0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(dmu::poisson_extension(delta(0.0), {0.5, 0.0}) == doctest::Approx(3.0).epsilon(1e-15));
    const auto mu = testutil::two_atoms(0.0, 2.0, kPi, 1.0);
    CHECK(dmu::poisson_extension(mu, {0.0, 0.0}) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK_THROWS_AS((void)dmu::poisson_extension(mu, {1.0, 0.0}), dmu::OutsideDisk);
}

TEST_CASE("radial power box mass closed form") {
    const auto nu = PlanarMeasure::make_radial_power(0.5, 0.0);
    for (int k = 1; k <= 16; ++k) {
        const double h = std::ldexp(1.0, -k);
        CHECK(dmu::box_mass(nu, dmu::CarlesonBox(dmu::BoundaryPoint(0.0), h)) ==
              doctest::Approx(2.0 * std::sqrt(h)).epsilon(1e-13));
    }
    CHECK(dmu::box_mass(nu, dmu::CarlesonBox(dmu::BoundaryPoint(2.0), 0.25)) == 0.0);
}

TEST_CASE("atom box membership") {
    const auto origin = PlanarMeasure::make_atoms({{Complex{0.0, 0.0}, 1.0}});
    CHECK(dmu::box_mass(origin, dmu::CarlesonBox(dmu::BoundaryPoint(0.0), 0.5)) == 0.0);
    const auto near = PlanarMeasure::make_atoms({{Complex{0.9, 0.0}, 0.7}});
    CHECK(dmu::box_mass(near, dmu::CarlesonBox(dmu::BoundaryPoint(0.0), 0.2)) ==
          doctest::Approx(0.7));
    CHECK(dmu::box_mass(near, dmu::CarlesonBox(dmu::BoundaryPoint(kPi), 0.2)) == 0.0);
}

TEST_CASE("area box mass against monte carlo") {
    const auto nu = PlanarMeasure::make_area(1.0);
    const dmu::CarlesonBox box(dmu::BoundaryPoint(0.7), 0.3);
    const double mass = dmu::box_mass(nu, box);

    std::mt19937_64 gen(20240817);
    const auto unit = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
    const int trials = 2000000;
    int hits = 0;
    int kept = 0;
    while (kept < trials) {
        const Complex z{2.0 * unit() - 1.0, 2.0 * unit() - 1.0};
        if (std::abs(z) >= 1.0) continue;
        ++kept;
        if (box.contains(z)) ++hits;
    }
    const double p = static_cast<double>(hits) / trials;
    const double sigma = std::sqrt(p * (1.0 - p) / trials);
    CHECK(std::abs(mass - p) <= 3.0 * sigma + 1e-9);
}

TEST_CASE("weight by product") {
    const auto origin = PlanarMeasure::make_atoms({{Complex{0.0, 0.0}, 1.0}});
    const auto w1 = dmu::weight_by_product(origin, {dmu::BoundaryPoint(0.0)});
    CHECK(w1.atoms[0].mass == doctest::Approx(1.0).epsilon(1e-15));

    const auto half = PlanarMeasure::make_atoms({{Complex{0.5, 0.0}, 2.0}});
    const auto w2 = dmu::weight_by_product(half, {dmu::BoundaryPoint(0.0)});
    CHECK(w2.atoms[0].mass == doctest::Approx(0.5).epsilon(1e-15));

    const auto one = PlanarMeasure::make_atoms({{Complex{0.5, 0.0}, 1.0}});
    const auto w3 = dmu::weight_by_product(one, {dmu::BoundaryPoint(0.0), dmu::BoundaryPoint(kPi)});
    CHECK(w3.atoms[0].mass == doctest::Approx(0.5625).epsilon(1e-15));

    const auto area = dmu::weight_by_product(PlanarMeasure::make_area(1.0),
                                             {dmu::BoundaryPoint(1.0)});
    CHECK(area.weight_points.size() == 1);
    CHECK(area.weight_at({0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-15));
    const auto stacked = dmu::weight_by_product(area, {dmu::BoundaryPoint(2.5)});
    CHECK(stacked.weight_points.size() == 2);

    CHECK_THROWS_AS((void)dmu::weight_by_product(
                        PlanarMeasure::make_area(1.0),
                        {dmu::BoundaryPoint(1.0), dmu::BoundaryPoint(1.0)}),
                    dmu::DuplicateNodes);
}

TEST_CASE("integrate families") {
    const auto atoms = PlanarMeasure::make_atoms({{Complex{0.5, 0.0}, 2.0}});
    CHECK(dmu::integrate(atoms, [](Complex) { return 1.0; }) == doctest::Approx(2.0));

    const auto area = PlanarMeasure::make_area(1.0);
    CHECK(dmu::integrate(area, [](Complex) { return 1.0; }) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(dmu::integrate(area, [](Complex z) { return std::norm(z); }) ==
          doctest::Approx(0.5).epsilon(1e-10));

    const auto ray = PlanarMeasure::make_radial_power(0.5, 1.2);
    CHECK(dmu::integrate(ray, [](Complex) { return 1.0; }) ==
          doctest::Approx(2.0).epsilon(1e-9));
    CHECK(ray.total_mass() == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("integrate_abs2_poly matches quadrature") {
    testutil::Sampler rng(11);
    const dmu::Poly p = rng.poly(6);
    const auto families = {PlanarMeasure::make_area(1.3),
                           PlanarMeasure::make_radial_power(0.6, 0.9),
                           PlanarMeasure::make_atoms({{Complex{0.4, 0.2}, 0.8}})};
    for (const auto& nu : families) {
        const double closed = dmu::integrate_abs2_poly(nu, p);
        const double quad =
            dmu::integrate(nu, [&p](Complex z) { return std::norm(p.eval(z)); });
        CHECK(closed == doctest::Approx(quad).epsilon(1e-8));
        const auto weighted = dmu::weight_by_product(nu, {dmu::BoundaryPoint(2.2)});
        const double closed_w = dmu::integrate_abs2_poly(weighted, p);
        const double quad_w =
            dmu::integrate(weighted, [&p](Complex z) { return std::norm(p.eval(z)); });
        CHECK(closed_w == doctest::Approx(quad_w).epsilon(1e-8));
    }
}

TEST_CASE("total mass closed forms") {
    CHECK(PlanarMeasure::make_area(2.5).total_mass() == doctest::Approx(2.5).epsilon(1e-14));
    const auto weighted_area = dmu::weight_by_product(PlanarMeasure::make_area(1.0),
                                                      {dmu::BoundaryPoint(0.4)});
    const double direct = dmu::integrate(weighted_area, [](Complex) { return 1.0; });
    CHECK(weighted_area.total_mass() == doctest::Approx(direct).epsilon(1e-10));
}

TEST_CASE("rotation pushforward") {
    const auto nu = PlanarMeasure::make_atoms({{Complex{0.5, 0.1}, 0.8}});
    const auto rotated = dmu::rotate(nu, 0.9);
    CHECK(std::abs(rotated.atoms[0].z - Complex{0.5, 0.1} * std::polar(1.0, 0.9)) <= 1e-15);
    const auto mu = testutil::two_atoms(0.0, 1.0, kPi, 0.5);
    const auto mur = dmu::rotate(mu, 0.9);
    CHECK(mur.atoms[0].point.angle == doctest::Approx(0.9).epsilon(1e-15));
}

TEST_CASE("measure validation") {
    CHECK_THROWS_AS(dmu::AtomicBoundaryMeasure(std::vector<dmu::AtomicBoundaryMeasure::Atom>{}),
                    dmu::InputError);
    CHECK_THROWS_AS(dmu::AtomicBoundaryMeasure({{dmu::BoundaryPoint(0.0), 0.0}}),
                    dmu::InputError);
    CHECK_THROWS_AS((void)PlanarMeasure::make_radial_power(-0.1, 0.0), dmu::InputError);
    CHECK_THROWS_AS((void)PlanarMeasure::make_radial_power(1.0, 0.0), dmu::InputError);
    CHECK_THROWS_AS((void)PlanarMeasure::make_area(-1.0), dmu::InputError);
    CHECK_THROWS_AS((void)PlanarMeasure::make_atoms({{Complex{0.2, 0.0}, -1.0}}),
                    dmu::InputError);
    CHECK_THROWS_AS((void)PlanarMeasure::make_atoms({{Complex{1.0, 0.0}, 1.0}}),
                    dmu::OutsideDisk);
    CHECK_THROWS_AS(dmu::CarlesonBox(dmu::BoundaryPoint(0.0), 0.0), dmu::InputError);
    CHECK_THROWS_AS(dmu::CarlesonBox(dmu::BoundaryPoint(0.0), 1.0), dmu::InputError);
}
