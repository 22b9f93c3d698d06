#include <doctest.h>

#include <cmath>
#include <complex>

#include "dmu/dirichlet.hpp"
#include "dmu/errors.hpp"
#include "test_util.hpp"

using dmu::BoundaryPoint;
using dmu::Complex;
using dmu::Poly;
using testutil::delta;
using testutil::kPi;
using testutil::poly;

TEST_CASE("local dirichlet integral") {
    const BoundaryPoint one(0.0);
    CHECK(dmu::local_dirichlet(poly({0.0, 1.0}), one) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(dmu::local_dirichlet(poly({0.0, 0.0, 1.0}), one) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(dmu::local_dirichlet(poly({5.0}), one) == 0.0);
    for (int n = 1; n <= 12; ++n) {
        const BoundaryPoint lam(1.7);
        CHECK(dmu::local_dirichlet(Poly::monomial(n), lam) ==
              doctest::Approx(static_cast<double>(n)).epsilon(1e-13));
    }
}

TEST_CASE("local dirichlet form") {
    const BoundaryPoint lam(2.4);
    const Complex val = dmu::local_dirichlet_form(poly({0.0, 0.0, 1.0}), poly({0.0, 0.0, 0.0, 1.0}), lam);
    const Complex expected = 2.0 * std::conj(lam.point());
    CHECK(std::abs(val - expected) <= 1e-13);
    CHECK(std::abs(dmu::local_dirichlet_form(poly({3.0}), poly({0.0, 1.0}), lam)) == 0.0);
    for (int n = 1; n <= 8; ++n) {
        const Complex diag = dmu::local_dirichlet_form(Poly::monomial(n), Poly::monomial(n), lam);
        CHECK(std::abs(diag - Complex{static_cast<double>(n), 0.0}) <= 1e-13);
    }
}

TEST_CASE("dirichlet integral against atomic measures") {
    CHECK(dmu::dirichlet_mu(poly({0.0, 1.0}), testutil::two_atoms(0.0, 1.0, kPi, 1.0)) ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK(dmu::dirichlet_mu(poly({7.0}), delta(1.3, 2.5)) == 0.0);
    CHECK(dmu::dirichlet_mu(poly({0.0, 0.0, 1.0}), delta(0.0, 2.0)) ==
          doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("area form of the dirichlet integral") {
    const auto quad = dmu::disk_quadrature(256, 256);
    CHECK(dmu::dirichlet_mu_area(poly({0.0, 1.0}), delta(0.0), quad) ==
          doctest::Approx(1.0).epsilon(1e-8));
    CHECK(dmu::dirichlet_mu_area(poly({4.0}), delta(2.0, 0.7), quad) == 0.0);

    testutil::Sampler rng(23);
    std::vector<Complex> coeffs;
    for (int k = 0; k <= 8; ++k) coeffs.push_back(rng.coeff());
    const Poly f{std::move(coeffs)};
    const auto mu = rng.measure_n(3);
    const double exact = dmu::dirichlet_mu(f, mu);
    const double area = dmu::dirichlet_mu_area(f, mu, quad);
    CHECK(std::abs(area - exact) <= 1e-4 * (1.0 + exact));
}

TEST_CASE("norm and inner product") {
    CHECK(dmu::dmu_norm_sq(poly({0.0, 1.0}), delta(0.0)) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(dmu::dmu_norm_sq(poly({1.0}), delta(0.0)) == doctest::Approx(1.0).epsilon(1e-15));

    testutil::Sampler rng(31);
    const auto mu = rng.measure(2);
    for (int trial = 0; trial < 10; ++trial) {
        const Poly f = rng.poly(6);
        const Poly g = rng.poly(5);
        const Complex ff = dmu::dmu_inner(f, f, mu);
        CHECK(std::abs(ff.imag()) <= 1e-12 * (1.0 + std::abs(ff)));
        CHECK(ff.real() == doctest::Approx(dmu::dmu_norm_sq(f, mu)).epsilon(1e-12));
        const Complex fg = dmu::dmu_inner(f, g, mu);
        const Complex gf = dmu::dmu_inner(g, f, mu);
        CHECK(std::abs(fg - std::conj(gf)) <= 1e-12 * (1.0 + std::abs(fg)));
    }
}

TEST_CASE("decomposition fixed cases") {
    const auto pm = testutil::two_atoms(0.0, 1.0, kPi, 1.0);
    const auto d1 = dmu::decompose(poly({-1.0, 0.0, 1.0}), pm);
    CHECK(d1.p.h2_norm() <= 1e-14);
    CHECK(d1.g.degree() == 0);
    CHECK(std::abs(d1.g.coeff(0) - Complex{1.0, 0.0}) <= 1e-14);

    const auto d2 = dmu::decompose(poly({1.0}), testutil::Sampler(5).measure(3));
    CHECK(d2.g.is_zero());
    CHECK(std::abs(d2.p.coeff(0) - Complex{1.0, 0.0}) <= 1e-14);

    const auto d3 = dmu::decompose(poly({0.0, 0.0, 0.0, 1.0}), delta(0.0));
    CHECK(d3.p.degree() == 0);
    CHECK(std::abs(d3.p.coeff(0) - Complex{1.0, 0.0}) <= 1e-14);
    CHECK(d3.g.degree() == 2);
    for (int k = 0; k <= 2; ++k) CHECK(std::abs(d3.g.coeff(k) - Complex{1.0, 0.0}) <= 1e-13);
}

TEST_CASE("decomposition round trip") {
    testutil::Sampler rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        const auto mu = rng.measure(1 + rng.index(4));
        const Poly f = rng.poly(2 + rng.index(9));
        const auto dec = dmu::decompose(f, mu);
        const Poly back = dec.p + dmu::product_of_linear_factors(mu.points()) * dec.g;
        CHECK((f - back).h2_norm() <= 1e-10 * (1.0 + f.h2_norm()));
        for (const auto& atom : mu.atoms)
            CHECK(std::abs(dec.p.eval(atom.point.point()) - f.eval(atom.point.point())) <= 1e-10);
    }
}

TEST_CASE("gram matrix closed form") {
    const auto g1 = dmu::gram_matrix(delta(0.0), 8);
    REQUIRE(g1.size == 9);
    for (int m = 0; m <= 8; ++m)
        CHECK(std::abs(g1.at(m, m) - Complex{1.0 + m, 0.0}) <= 1e-14);
    for (int m = 1; m <= 8; ++m) {
        CHECK(std::abs(g1.at(0, m)) == 0.0);
        CHECK(std::abs(g1.at(m, 0)) == 0.0);
    }

    const auto gi = dmu::gram_matrix(delta(kPi / 2.0), 4);
    CHECK(std::abs(gi.at(3, 2) - Complex{0.0, 2.0}) <= 1e-14);
    CHECK(std::abs(gi.at(2, 3) - Complex{0.0, -2.0}) <= 1e-14);

    testutil::Sampler rng(53);
    const auto mu = rng.measure(3);
    const auto G = dmu::gram_matrix(mu, 12);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = rng.index(13);
        const int k = rng.index(13);
        const Complex direct = dmu::dmu_inner(Poly::monomial(m), Poly::monomial(k), mu);
        CHECK(std::abs(G.at(m, k) - direct) <= 1e-12 * (1.0 + std::abs(direct)));
        CHECK(std::abs(G.at(m, k) - std::conj(G.at(k, m))) <= 1e-14);
    }
}
