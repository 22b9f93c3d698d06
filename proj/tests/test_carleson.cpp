#include <doctest.h>

#include <cmath>
#include <vector>

#include "dmu/carleson.hpp"
#include "dmu/errors.hpp"
#include "test_util.hpp"

using dmu::BoxScanConfig;
using dmu::Complex;
using dmu::PlanarMeasure;
using dmu::Verdict;
using testutil::delta;
using testutil::kPi;

namespace {

BoxScanConfig quick_cfg() {
    BoxScanConfig cfg;
    cfg.n_zeta = 16;
    cfg.k_min = 1;
    cfg.k_max = 10;
    return cfg;
}

} // namespace

TEST_CASE("level classifier") {
    CHECK(dmu::classify_levels({1.0, 1.0, 1.0, 1.0}, 1.5) == Verdict::Bounded);
    CHECK(dmu::classify_levels({1.0, 0.9, 0.8, 0.7}, 1.5) == Verdict::Bounded);
    CHECK(dmu::classify_levels({1.0, 1.005, 1.002, 1.004}, 1.5) == Verdict::Bounded);
    CHECK(dmu::classify_levels({1.0, 1.5, 2.25, 3.375}, 1.5) == Verdict::Diverging);
    std::vector<double> doubling;
    for (int k = 0; k < 10; ++k) doubling.push_back(std::ldexp(1.0, k));
    CHECK(dmu::classify_levels(doubling, 1.5) == Verdict::Diverging);
    CHECK(dmu::classify_levels({1.0, 2.0, 4.0, 4.2, 4.41, 4.5}, 1.5) == Verdict::Inconclusive);
    CHECK(dmu::classify_levels({1.0, 1.1, 1.21, 1.33}, 1.5) == Verdict::Bounded);
    CHECK(dmu::classify_levels({1.0, 1.0, 1.0, 1.6}, 1.5) == Verdict::Inconclusive);
    CHECK(dmu::classify_levels({2.0}, 1.5) == Verdict::Inconclusive);
}

TEST_CASE("scan angles include distinguished directions") {
    const auto ray = PlanarMeasure::make_radial_power(0.5, 2.0);
    const auto angles = dmu::scan_angles(ray, 8, 0.0);
    bool has_ray = false;
    for (const double a : angles)
        if (std::abs(a - 2.0) <= 1e-12) has_ray = true;
    CHECK(has_ray);
    CHECK(angles.size() >= 8);
}

TEST_CASE("hardy box scan verdicts") {
    const auto area = dmu::h2_box_sup(PlanarMeasure::make_area(1.0), quick_cfg());
    CHECK(area.verdict == Verdict::Bounded);
    CHECK(area.sup_ratio > 0.0);
    CHECK(area.sup_ratio <= 1.0);

    const auto ray = dmu::h2_box_sup(PlanarMeasure::make_radial_power(0.5, 0.0), quick_cfg());
    CHECK(ray.verdict == Verdict::Diverging);
    for (std::size_t i = 0; i < ray.levels.size(); ++i) {
        const double h = std::ldexp(1.0, -ray.levels[i]);
        CHECK(ray.level_sups[i] == doctest::Approx(2.0 / std::sqrt(h)).epsilon(1e-10));
    }

    const auto atoms = dmu::h2_box_sup(
        PlanarMeasure::make_atoms({{Complex{0.5, 0.0}, 1.0}}), quick_cfg());
    CHECK(atoms.verdict == Verdict::Bounded);
    CHECK(atoms.sup_ratio == 0.0);

    const auto deep = dmu::h2_box_sup(
        PlanarMeasure::make_atoms({{Complex{0.9, 0.0}, 1.0}}), quick_cfg());
    CHECK(deep.verdict == Verdict::Bounded);
    CHECK(deep.sup_ratio == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("reduced scan verdicts") {
    const auto ray = PlanarMeasure::make_radial_power(0.5, 0.0);
    const auto at_atom = dmu::dmu_carleson_test(ray, delta(0.0), quick_cfg());
    CHECK(at_atom.verdict == Verdict::Bounded);
    const auto away = dmu::dmu_carleson_test(ray, delta(kPi), quick_cfg());
    CHECK(away.verdict == Verdict::Diverging);

    const auto atoms = PlanarMeasure::make_atoms({{Complex{0.5, 0.0}, 1.0}});
    CHECK(dmu::dmu_carleson_test(atoms, delta(0.0), quick_cfg()).verdict == Verdict::Bounded);
}

TEST_CASE("alpha scan verdicts") {
    CHECK(dmu::alpha_carleson_sup(PlanarMeasure::make_area(1.0), 0.5, quick_cfg()).verdict ==
          Verdict::Bounded);
    CHECK(dmu::alpha_carleson_sup(PlanarMeasure::make_radial_power(0.5, 0.0), 0.25,
                                  quick_cfg()).verdict == Verdict::Bounded);
    CHECK_THROWS_AS((void)dmu::alpha_carleson_sup(PlanarMeasure::make_area(1.0), 1.5, quick_cfg()),
                    dmu::InputError);
}

TEST_CASE("kernel ratio on atom measures") {
    for (const double m : {0.5, 1.0, 2.0}) {
        const auto nu = PlanarMeasure::make_atoms({{Complex{0.0, 0.0}, m}});
        const dmu::RktEngine engine(delta(0.9), 0);
        const double r = engine.ratio(nu, {0.4, 0.3});
        CHECK(r > 0.0);
        CHECK(r <= m + 1e-12);
        const dmu::RktEngine multi(testutil::two_atoms(0.0, 1.0, kPi, 0.5), 60);
        const double rm = multi.ratio(nu, {0.4, 0.3});
        CHECK(rm > 0.0);
        CHECK(rm <= m + 1e-12);
    }
}

TEST_CASE("rkt level scans agree with box scans") {
    BoxScanConfig cfg;
    cfg.n_zeta = 8;
    cfg.k_min = 1;
    cfg.k_max = 12;

    const dmu::RktEngine engine(delta(0.0), 0);
    const auto bounded = engine.levels(PlanarMeasure::make_radial_power(0.5, 0.0), cfg);
    CHECK(bounded.verdict == Verdict::Bounded);
    CHECK(bounded.sup > 0.0);

    const auto diverging = engine.levels(PlanarMeasure::make_radial_power(0.5, 2.0), cfg);
    CHECK(diverging.verdict == Verdict::Diverging);

    const auto one_shot = dmu::rkt_sup(PlanarMeasure::make_area(1.0), delta(0.0),
                                       {Complex{0.0, 0.0}, Complex{0.5, 0.5}}, 0);
    CHECK(one_shot > 0.0);
}

TEST_CASE("compactness profile") {
    std::vector<double> h_levels;
    for (int k = 1; k <= 10; ++k) h_levels.push_back(std::ldexp(1.0, -k));

    const auto profile = dmu::compactness_profile(PlanarMeasure::make_area(1.0), delta(0.0),
                                                  dmu::BoundaryPoint(kPi), h_levels);
    REQUIRE(profile.size() == h_levels.size());
    for (std::size_t i = 0; i < profile.size(); ++i) {
        CHECK(profile[i] > 0.0);
        if (i > 0) CHECK(profile[i] < profile[i - 1]);
    }

    CHECK_THROWS_AS((void)dmu::compactness_profile(PlanarMeasure::make_area(1.0), delta(0.0),
                                                   dmu::BoundaryPoint(0.0), h_levels),
                    dmu::AtomDirection);
}

TEST_CASE("trivial box bound") {
    CHECK(dmu::trivial_box_bound(1, 0.5, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(dmu::trivial_box_bound(3, 0.25, 1.0) == doctest::Approx(1.0).epsilon(1e-15));

    const auto mu = testutil::two_atoms(0.0, 1.0, 1.0, 0.5);
    const auto nu = PlanarMeasure::make_area(1.0);
    const auto weighted = dmu::weight_by_product(nu, mu.points());
    for (int k = 2; k <= 8; ++k) {
        const double h = std::ldexp(1.0, -k);
        for (const auto& atom : mu.atoms) {
            const double mass = dmu::box_mass(weighted, dmu::CarlesonBox(atom.point, h));
            CHECK(mass <= dmu::trivial_box_bound(mu.size(), h, nu.total_mass()));
        }
    }
}
