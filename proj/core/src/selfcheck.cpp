#include "dmu/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <utility>

#include "dmu/dirichlet.hpp"
#include "dmu/errors.hpp"
#include "dmu/json_io.hpp"
#include "dmu/kernels.hpp"

namespace dmu {
namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double range(double a, double b) { return a + (b - a) * unit(); }
    Complex coeff() { return {range(-1.0, 1.0), range(-1.0, 1.0)}; }

    Complex in_disk(double r_max) {
        for (;;) {
            const Complex z{range(-1.0, 1.0), range(-1.0, 1.0)};
            if (std::abs(z) < 1.0) return r_max * z;
        }
    }

    int index(int n) { return std::min(n - 1, static_cast<int>(unit() * static_cast<double>(n))); }

    Poly poly(int max_deg) {
        const int d = index(max_deg + 1);
        std::vector<Complex> c(static_cast<std::size_t>(d) + 1);
        for (auto& x : c) x = coeff();
        Poly p{std::move(c)};
        p.normalize();
        return p;
    }

    std::vector<double> separated_angles(int count, double min_chord) {
        std::vector<double> out;
        while (static_cast<int>(out.size()) < count) {
            const double a = range(0.0, 2.0 * kPi);
            bool ok = true;
            for (double b : out)
                ok = ok && std::abs(std::polar(1.0, a) - std::polar(1.0, b)) > min_chord;
            if (ok) out.push_back(a);
        }
        return out;
    }

    AtomicBoundaryMeasure measure(int max_atoms) {
        const int n = 1 + index(max_atoms);
        std::vector<AtomicBoundaryMeasure::Atom> atoms;
        for (double a : separated_angles(n, 0.1))
            atoms.push_back({BoundaryPoint(a), range(0.2, 2.0)});
        return AtomicBoundaryMeasure(std::move(atoms));
    }

private:
    std::mt19937_64 gen_;
};

using PropertyBody = std::function<std::pair<bool, std::string>(Rng&)>;

struct Suite {
    std::uint64_t seed;
    std::vector<PropertyResult> results;

    void run(const std::string& name, const PropertyBody& body) {
        Rng rng(seed + 0x9e3779b97f4a7c15ull * (results.size() + 1));
        PropertyResult r;
        r.name = name;
        try {
            auto [ok, detail] = body(rng);
            r.passed = ok;
            r.detail = std::move(detail);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("unexpected exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
};

double coeff_distance(const Poly& a, const Poly& b) {
    const int n = std::max(a.degree(), b.degree());
    double m = 0.0;
    for (int k = 0; k <= n; ++k) m = std::max(m, std::abs(a.coeff(k) - b.coeff(k)));
    return m;
}

template <class E, class F>
bool throws_exactly(F&& fn) {
    try {
        fn();
    } catch (const E&) {
        return true;
    } catch (...) {
        return false;
    }
    return false;
}

bool same_measure(const AtomicBoundaryMeasure& a, const AtomicBoundaryMeasure& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.atoms[i].point.angle != b.atoms[i].point.angle || a.atoms[i].mass != b.atoms[i].mass)
            return false;
    return true;
}

std::pair<bool, std::string> check_division_identity(Rng& rng) {
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
        const Poly p = rng.poly(30);
        const BoundaryPoint lam(rng.range(0.0, 2.0 * kPi));
        const Poly q = divided_quotient(p, lam);
        const Poly recon =
            Poly{{-lam.point(), Complex{1.0, 0.0}}} * q + Poly{{p.eval(lam.point())}};
        worst = std::max(worst, coeff_distance(p, recon));
    }
    return {worst <= 1e-12, "max coefficient defect " + fmt(worst)};
}

std::pair<bool, std::string> check_monomial_dirichlet(Rng& rng) {
    std::vector<double> angles = {0.0, 0.5 * kPi};
    for (int t = 0; t < 4; ++t) angles.push_back(rng.range(0.0, 2.0 * kPi));
    double worst = 0.0;
    for (double a : angles) {
        const BoundaryPoint lam(a);
        for (int n = 1; n <= 50; ++n)
            worst = std::max(worst,
                             std::abs(local_dirichlet(Poly::monomial(n), lam) - double(n)));
    }
    return {worst <= 1e-12, "max |D_lambda(z^n) - n| = " + fmt(worst)};
}

std::pair<bool, std::string> check_interpolation(Rng& rng) {
    double worst = 0.0;
    for (int t = 0; t < 40; ++t) {
        const int n = 1 + rng.index(5);
        std::vector<BoundaryPoint> nodes;
        for (double a : rng.separated_angles(n, 0.1)) nodes.emplace_back(a);
        std::vector<Complex> values(static_cast<std::size_t>(n));
        for (auto& v : values) v = rng.coeff();
        const Poly p = lagrange_interp(nodes, values);
        for (int i = 0; i < n; ++i)
            worst = std::max(worst, std::abs(p.eval(nodes[static_cast<std::size_t>(i)].point()) -
                                             values[static_cast<std::size_t>(i)]));
    }
    return {worst <= 1e-10, "max node defect " + fmt(worst)};
}

std::pair<bool, std::string> check_h2_form(Rng& rng) {
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
        const Poly p = rng.poly(20);
        const Poly q = rng.poly(20);
        const Complex ip = h2_inner(p, q);
        worst = std::max(worst, std::abs(ip - std::conj(h2_inner(q, p))));
        worst = std::max(worst, std::abs(h2_inner(p, p).imag()));
        if (h2_norm_sq(p) < 0.0) worst = std::max(worst, 1.0);
        worst = std::max(worst, std::abs(h2_inner(p, p).real() - h2_norm_sq(p)));
    }
    return {worst <= 1e-13, "max Hermitian defect " + fmt(worst)};
}

std::pair<bool, std::string> check_poisson_positive(Rng& rng) {
    double min_val = 1e300;
    for (int m = 0; m < 10; ++m) {
        const AtomicBoundaryMeasure mu = rng.measure(4);
        for (int t = 0; t < 1000; ++t)
            min_val = std::min(min_val, poisson_extension(mu, rng.in_disk(0.999)));
    }
    return {min_val > 0.0, "min sampled value " + fmt(min_val)};
}

std::pair<bool, std::string> check_poisson_mean(Rng& rng) {
    double worst = 0.0;
    const int M = 8192;
    for (int m = 0; m < 5; ++m) {
        const AtomicBoundaryMeasure mu = rng.measure(4);
        for (double r : {0.3, 0.7, 0.95}) {
            double s = 0.0;
            for (int i = 0; i < M; ++i)
                s += poisson_extension(mu, std::polar(r, 2.0 * kPi * i / M));
            worst = std::max(worst, std::abs(s / M / mu.total_mass() - 1.0));
        }
    }
    return {worst <= 1e-8, "max circular-mean defect " + fmt(worst)};
}

std::pair<bool, std::string> check_box_nesting(Rng& rng) {
    std::vector<PlanarMeasure> nus;
    {
        std::vector<PlanarMeasure::Atom> cloud;
        for (int i = 0; i < 5; ++i) cloud.push_back({rng.in_disk(0.9), rng.range(0.1, 1.0)});
        nus.push_back(PlanarMeasure::make_atoms(cloud));
    }
    nus.push_back(PlanarMeasure::make_radial_power(0.5, 1.0));
    nus.push_back(PlanarMeasure::make_radial_power(0.9, 2.0));
    nus.push_back(PlanarMeasure::make_area(1.0));
    nus.push_back(weight_by_product(PlanarMeasure::make_area(1.0),
                                    {BoundaryPoint(0.3), BoundaryPoint(2.4)}));
    nus.push_back(weight_by_product(PlanarMeasure::make_radial_power(0.5, 1.0),
                                    {BoundaryPoint(1.0)}));
    double worst = -1e300;
    for (const auto& nu : nus) {
        for (int t = 0; t < 12; ++t) {
            const BoundaryPoint zeta(rng.range(0.0, 2.0 * kPi));
            const int k_outer = 1 + rng.index(8);
            const int k_inner = k_outer + 1 + rng.index(3);
            const double inner = box_mass(nu, CarlesonBox(zeta, std::ldexp(1.0, -k_inner)));
            const double outer = box_mass(nu, CarlesonBox(zeta, std::ldexp(1.0, -k_outer)));
            worst = std::max(worst, inner - outer);
            if (inner - outer > 1e-9 * (1.0 + outer)) return {false, "nesting violated by " + fmt(inner - outer)};
        }
    }
    return {true, "max signed excess " + fmt(worst)};
}

std::pair<bool, std::string> check_radial_box_closed_form(Rng&) {
    const auto nu = PlanarMeasure::make_radial_power(0.5, 2.0);
    double worst = 0.0;
    for (int k = 1; k <= 20; ++k) {
        const double h = std::ldexp(1.0, -k);
        const double mass = box_mass(nu, CarlesonBox(BoundaryPoint(2.0), h));
        worst = std::max(worst, std::abs(mass - 2.0 * std::sqrt(h)));
        if (box_mass(nu, CarlesonBox(BoundaryPoint(2.0 + kPi), h)) != 0.0)
            return {false, "off-ray box mass nonzero"};
    }
    return {worst <= 1e-12, "max |mass - 2 sqrt(h)| = " + fmt(worst)};
}

std::pair<bool, std::string> check_quadrature_order(Rng&) {
    double exact = 0.0;
    double term = 1.0;
    for (int k = 0; term > 1e-18; ++k) {
        exact += term / (k + 1.0);
        term *= 0.25 / ((k + 1.0) * (k + 1.0));
    }
    const auto f = [](Complex z) { return std::exp(z.real()); };
    const double e4 = std::abs(disk_quadrature(4, 64).integrate(f) - exact);
    const double e8 = std::abs(disk_quadrature(8, 64).integrate(f) - exact);
    const bool ok = e8 <= 1e-13 || e4 / e8 >= 16.0;
    return {ok, "radial refinement error " + fmt(e4) + " -> " + fmt(e8)};
}

std::pair<bool, std::string> check_fubini(Rng& rng) {
    const DiskQuadrature quad = disk_quadrature(256, 256);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const Poly f = rng.poly(10);
        const AtomicBoundaryMeasure mu = rng.measure(4);
        const double exact = dirichlet_mu(f, mu);
        const double area = dirichlet_mu_area(f, mu, quad);
        worst = std::max(worst, std::abs(area - exact) / (1.0 + exact));
    }
    return {worst <= 1e-4, "max relative defect " + fmt(worst)};
}

std::pair<bool, std::string> check_decomposition(Rng& rng) {
    double worst = 0.0;
    double max_ratio = 0.0;
    for (int t = 0; t < 200; ++t) {
        const Poly f = rng.poly(12);
        const AtomicBoundaryMeasure mu = rng.measure(4);
        const Decomposition d = decompose(f, mu);
        const Poly recon = d.p + product_of_linear_factors(mu.points()) * d.g;
        worst = std::max(worst, coeff_distance(f, recon));
        const Decomposition d2 = decompose(recon, mu);
        worst = std::max(worst, coeff_distance(d2.p, d.p));
        worst = std::max(worst, coeff_distance(d2.g, d.g));
        if (!f.is_zero())
            max_ratio = std::max(max_ratio, d.g.h2_norm() / std::sqrt(dmu_norm_sq(f, mu)));
    }
    return {worst <= 1e-10,
            "max round-trip defect " + fmt(worst) + ", max |g|_2/|f|_mu = " + fmt(max_ratio)};
}

std::pair<bool, std::string> check_gram_closed_form(Rng& rng) {
    const int N = 50;
    double worst = 0.0;
    for (int t = 0; t < 3; ++t) {
        const AtomicBoundaryMeasure mu = rng.measure(3);
        const GramMatrix G = gram_matrix(mu, N);
        for (int m = 0; m <= N; ++m)
            for (int k = 0; k <= N; ++k) {
                const Complex direct = dmu_inner(Poly::monomial(m), Poly::monomial(k), mu);
                worst = std::max(worst, std::abs(G.at(m, k) - direct));
            }
    }
    return {worst <= 1e-12, "max entry defect " + fmt(worst)};
}

std::pair<bool, std::string> check_norm_domination(Rng& rng) {
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const Poly f = rng.poly(15);
        const AtomicBoundaryMeasure mu = rng.measure(4);
        worst = std::min(worst, dmu_norm_sq(f, mu) - h2_norm_sq(f));
    }
    return {worst >= -1e-12, "min (|f|_mu^2 - |f|_2^2) = " + fmt(worst)};
}

std::pair<bool, std::string> check_one_atom_agreement(Rng& rng) {
    double worst = 0.0;
    double a0_res = 0.0;
    const std::vector<double> radii = {0.3, 0.6, 0.9};
    const std::vector<double> args = {0.1, 2.3, 4.5};
    for (double alpha : {0.25, 1.0, 4.0}) {
        const double a0 = solve_a0(alpha);
        a0_res = std::max(a0_res, std::abs(a0 * a0 - (2.0 + alpha) * a0 + 1.0));
        if (!(a0 > 0.0 && a0 < 1.0)) return {false, "a0 outside (0, 1)"};
        for (double lam_angle : {0.0, rng.range(0.0, 2.0 * kPi)}) {
            const BoundaryPoint lam(lam_angle);
            const OneAtomKernelModel model(lam, alpha);
            const AtomicBoundaryMeasure mu({{lam, alpha}});
            const TruncatedKernelSolver solver(mu, 120);
            for (double rw : radii)
                for (double aw : args) {
                    const Complex w = std::polar(rw, aw);
                    const TruncatedKernel kernel = solver.solve(w);
                    for (double rz : radii)
                        for (double az : args) {
                            const Complex z = std::polar(rz, az + 0.7);
                            worst = std::max(worst, std::abs(one_atom_kernel(model, w, z) -
                                                             kernel.eval(z)));
                        }
                }
        }
    }
    return {worst <= 1e-6 && a0_res <= 1e-14,
            "max kernel deviation " + fmt(worst) + ", max a0 residual " + fmt(a0_res)};
}

std::pair<bool, std::string> check_reproducing(Rng& rng) {
    const int N = 60;
    double worst = 0.0;
    for (int atoms : {2, 3}) {
        std::vector<AtomicBoundaryMeasure::Atom> list;
        for (double a : rng.separated_angles(atoms, 0.15))
            list.push_back({BoundaryPoint(a), rng.range(0.3, 1.5)});
        const AtomicBoundaryMeasure mu(std::move(list));
        const TruncatedKernelSolver solver(mu, N);
        for (int t = 0; t < 50; ++t) {
            const Poly f = rng.poly(N);
            const Complex w = rng.in_disk(0.9);
            const TruncatedKernel kernel = solver.solve(w);
            worst = std::max(worst,
                             std::abs(dmu_inner(f, kernel.coeffs, mu) - f.eval(w)) /
                                 (1.0 + std::abs(f.eval(w))));
        }
    }
    return {worst <= 1e-8, "max reproduction defect " + fmt(worst)};
}

std::pair<bool, std::string> check_kernel_hermitian(Rng& rng) {
    double worst = 0.0;
    const OneAtomKernelModel model(BoundaryPoint(0.8), 1.0);
    for (int t = 0; t < 50; ++t) {
        const Complex w = rng.in_disk(0.95);
        const Complex z = rng.in_disk(0.95);
        worst = std::max(worst, std::abs(one_atom_kernel(model, w, z) -
                                         std::conj(one_atom_kernel(model, z, w))));
    }
    std::vector<AtomicBoundaryMeasure::Atom> list;
    for (double a : rng.separated_angles(2, 0.2)) list.push_back({BoundaryPoint(a), 1.0});
    const AtomicBoundaryMeasure mu(std::move(list));
    const TruncatedKernelSolver solver(mu, 80);
    for (int t = 0; t < 20; ++t) {
        const Complex w = rng.in_disk(0.85);
        const Complex z = rng.in_disk(0.85);
        worst = std::max(worst, std::abs(solver.solve(w).eval(z) -
                                         std::conj(solver.solve(z).eval(w))));
    }
    return {worst <= 1e-10, "max Hermitian defect " + fmt(worst)};
}

std::pair<bool, std::string> check_margin(Rng& rng) {
    double worst = 1e300;
    for (double alpha : {0.25, 1.0, 4.0}) {
        const OneAtomKernelModel model(BoundaryPoint(rng.range(0.0, 2.0 * kPi)), alpha);
        for (int t = 0; t < 10000; ++t) {
            Complex z;
            if (t % 5 == 0)
                z = (1.0 - std::pow(10.0, rng.range(-8.0, -1.0))) *
                    std::polar(1.0, model.lambda.angle + rng.range(-0.3, 0.3));
            else
                z = rng.in_disk(0.999);
            worst = std::min(worst, kernel_bound_margin(model, z));
        }
    }
    return {worst >= -1e-12, "min margin " + fmt(worst)};
}

std::pair<bool, std::string> check_kernel_domination(Rng& rng) {
    double min_slack = 1e300;
    for (int rep = 0; rep < 2; ++rep) {
        const AtomicBoundaryMeasure mu = [&] {
            std::vector<AtomicBoundaryMeasure::Atom> list;
            for (double a : rng.separated_angles(2 + rep, 0.3))
                list.push_back({BoundaryPoint(a), rng.range(0.3, 1.2)});
            return AtomicBoundaryMeasure(std::move(list));
        }();
        const TruncatedKernelSolver solver(mu, 160);
        for (const auto& atom : mu.atoms) {
            const OneAtomKernelModel part(atom.point, atom.mass);
            for (int t = 0; t < 20; ++t) {
                const Complex z = rng.in_disk(0.85);
                const Complex w = rng.in_disk(0.85);
                const double lhs = std::norm(one_atom_kernel(part, z, w)) /
                                   (std::real(one_atom_kernel(part, z, z)) *
                                    std::real(one_atom_kernel(part, w, w)));
                const TruncatedKernel kz = solver.solve(z);
                const TruncatedKernel kw = solver.solve(w);
                const double rhs =
                    std::norm(kz.eval(w)) / (kz.norm_sq() * kw.norm_sq());
                min_slack = std::min(min_slack, rhs - lhs);
            }
        }
    }
    return {min_slack >= -1e-6, "min normalized-kernel slack " + fmt(min_slack)};
}

std::pair<bool, std::string> check_weighted_kernel(Rng& rng) {
    double worst = 0.0;
    for (double alpha : {0.0, 0.3, 0.5, 1.0}) {
        for (int t = 0; t < 20; ++t) {
            const Complex w = rng.in_disk(0.9);
            const Complex z = rng.in_disk(0.9);
            const Complex u = std::conj(w) * z;
            Complex ref{0.0, 0.0};
            Complex up{1.0, 0.0};
            double c = 1.0;
            for (int n = 0; n < 400; ++n) {
                ref += c * up;
                up *= u;
                c = alpha > 0.0 ? c * (alpha + n) / (n + 1.0) : 1.0 / (n + 2.0);
            }
            worst = std::max(worst,
                             std::abs(weighted_dirichlet_kernel(alpha, w, z) - ref) /
                                 (1.0 + std::abs(ref)));
        }
    }
    return {worst <= 1e-12, "max series deviation " + fmt(worst)};
}

std::pair<bool, std::string> check_mass_monotonicity(Rng&) {
    BoxScanConfig cfg;
    cfg.n_zeta = 16;
    cfg.k_min = 1;
    cfg.k_max = 10;
    const auto base = PlanarMeasure::make_atoms(
        {{0.55 * std::polar(1.0, 0.4), 0.5}, {0.75 * std::polar(1.0, 2.9), 0.7}});
    auto extended_atoms = base.atoms;
    extended_atoms.push_back({0.9 * std::polar(1.0, 5.1), 0.4});
    const auto extended = PlanarMeasure::make_atoms(extended_atoms);
    const double s_base = h2_box_sup(base, cfg).sup_ratio;
    const double s_ext = h2_box_sup(extended, cfg).sup_ratio;
    if (s_base > s_ext + 1e-12) return {false, "atom extension lowered the box sup"};
    const double a1 = h2_box_sup(PlanarMeasure::make_area(1.0), cfg).sup_ratio;
    const double a2 = h2_box_sup(PlanarMeasure::make_area(2.0), cfg).sup_ratio;
    if (std::abs(a2 - 2.0 * a1) > 1e-9 * (1.0 + a2))
        return {false, "area sup not linear in scale"};
    const RktEngine engine(AtomicBoundaryMeasure({{BoundaryPoint(0.0), 1.0}}), 0);
    double min_gap = 1e300;
    for (const Complex w : {Complex{0.3, 0.0}, std::polar(0.5, 2.0), std::polar(0.9, 4.0)})
        min_gap = std::min(min_gap, engine.ratio(extended, w) - engine.ratio(base, w));
    return {min_gap >= -1e-12, "box sups " + fmt(s_base) + " <= " + fmt(s_ext) +
                                   ", min kernel-ratio gap " + fmt(min_gap)};
}

std::pair<bool, std::string> check_rotation_equivariance(Rng&) {
    const double gamma = 1.1;
    const double offset = 0.05;
    BoxScanConfig cfg;
    cfg.n_zeta = 12;
    cfg.k_min = 1;
    cfg.k_max = 8;
    cfg.angle_offset = offset;
    BoxScanConfig cfg_rot = cfg;
    cfg_rot.angle_offset = offset + gamma;

    const auto nu_atoms = PlanarMeasure::make_atoms(
        {{0.6 * std::polar(1.0, 0.3), 0.8}, {0.8 * std::polar(1.0, 3.7), 0.4}});
    const auto nu_ray = PlanarMeasure::make_radial_power(0.5, 0.7);
    const AtomicBoundaryMeasure mu(
        {{BoundaryPoint(0.0), 1.0}, {BoundaryPoint(kPi), 0.5}});

    double worst = 0.0;
    for (const auto* nu : {&nu_atoms, &nu_ray}) {
        const ScanReport a = h2_box_sup(*nu, cfg);
        const ScanReport b = h2_box_sup(rotate(*nu, gamma), cfg_rot);
        worst = std::max(worst, std::abs(a.sup_ratio - b.sup_ratio) / (1.0 + a.sup_ratio));
        const ScanReport c = dmu_carleson_test(*nu, mu, cfg);
        const ScanReport d = dmu_carleson_test(rotate(*nu, gamma), rotate(mu, gamma), cfg_rot);
        worst = std::max(worst, std::abs(c.sup_ratio - d.sup_ratio) / (1.0 + c.sup_ratio));
    }

    BoxScanConfig rkt_cfg = cfg;
    rkt_cfg.n_zeta = 8;
    rkt_cfg.k_max = 6;
    BoxScanConfig rkt_rot = rkt_cfg;
    rkt_rot.angle_offset = offset + gamma;
    const int deg = default_kernel_degree(1.0 - std::ldexp(1.0, -6), 1e-4);
    const RktEngine engine(mu, deg);
    const RktEngine engine_rot(rotate(mu, gamma), deg);
    const RktLevelReport r1 = engine.levels(nu_ray, rkt_cfg);
    const RktLevelReport r2 = engine_rot.levels(rotate(nu_ray, gamma), rkt_rot);
    for (std::size_t i = 0; i < r1.level_sups.size(); ++i)
        worst = std::max(worst, std::abs(r1.level_sups[i] - r2.level_sups[i]) /
                                    (1.0 + r1.level_sups[i]));
    return {worst <= 1e-8, "max rotation defect " + fmt(worst)};
}

std::pair<bool, std::string> check_trivial_estimate(Rng&) {
    const AtomicBoundaryMeasure mu2(
        {{BoundaryPoint(0.0), 1.0}, {BoundaryPoint(kPi), 0.5}});
    const AtomicBoundaryMeasure mu3(
        {{BoundaryPoint(0.0), 0.7}, {BoundaryPoint(1.0), 0.4}, {BoundaryPoint(kPi), 0.9}});
    std::vector<PlanarMeasure> nus;
    nus.push_back(PlanarMeasure::make_atoms({{0.6 * std::polar(1.0, 1.2), 0.2},
                                             {0.97 * std::polar(1.0, 1.01), 0.3}}));
    nus.push_back(PlanarMeasure::make_area(1.0));
    nus.push_back(PlanarMeasure::make_radial_power(0.5, 2.0));
    double max_ratio = 0.0;
    for (const auto& nu : nus)
        for (const auto* mu : {&mu2, &mu3}) {
            const PlanarMeasure sigma = weight_by_product(nu, mu->points());
            for (const auto& atom : mu->atoms)
                for (int k = 2; k <= 10; ++k) {
                    const double h = std::ldexp(1.0, -k);
                    const double mass = box_mass(sigma, CarlesonBox(atom.point, h));
                    const double bound = trivial_box_bound(mu->size(), h, nu.total_mass());
                    max_ratio = std::max(max_ratio, mass / bound);
                }
        }
    return {max_ratio <= 1.0, "max mass/bound ratio " + fmt(max_ratio)};
}

std::pair<bool, std::string> check_compactness_guard(Rng&) {
    const AtomicBoundaryMeasure mu2(
        {{BoundaryPoint(0.0), 1.0}, {BoundaryPoint(kPi), 0.5}});
    const bool guarded = throws_exactly<AtomDirection>([&] {
        compactness_profile(PlanarMeasure::make_area(1.0), mu2, BoundaryPoint(kPi), {0.5, 0.25});
    });
    if (!guarded) return {false, "atom-direction guard missing"};
    const AtomicBoundaryMeasure mu1({{BoundaryPoint(0.0), 1.0}});
    std::vector<double> hs;
    for (int k = 1; k <= 6; ++k) hs.push_back(std::ldexp(1.0, -k));
    const auto prof =
        compactness_profile(PlanarMeasure::make_area(1.0), mu1, BoundaryPoint(2.0), hs);
    for (double v : prof)
        if (!(v > 0.0) || !std::isfinite(v)) return {false, "profile value not positive finite"};
    return {prof.back() < prof.front(),
            "profile " + fmt(prof.front()) + " -> " + fmt(prof.back())};
}

std::pair<bool, std::string> check_json_round_trip(Rng&) {
    const AtomicBoundaryMeasure mu3(
        {{BoundaryPoint(0.0), 0.7}, {BoundaryPoint(1.0), 0.4}, {BoundaryPoint(kPi), 0.9}});
    {
        const auto j1 = atomic_measure_to_json(mu3);
        const auto j2 = atomic_measure_to_json(atomic_measure_from_json(j1));
        if (j1.dump() != j2.dump()) return {false, "atomic measure round trip differs"};
    }
    std::vector<PlanarMeasure> nus;
    nus.push_back(PlanarMeasure::make_atoms({{0.5 * std::polar(1.0, 0.8), 0.4}}));
    nus.push_back(PlanarMeasure::make_radial_power(0.5, 1.2));
    nus.push_back(weight_by_product(PlanarMeasure::make_area(2.0),
                                    {BoundaryPoint(0.3), BoundaryPoint(2.0)}));
    for (const auto& nu : nus) {
        const auto j1 = planar_measure_to_json(nu);
        const auto j2 = planar_measure_to_json(planar_measure_from_json(j1));
        if (j1.dump() != j2.dump()) return {false, "planar measure round trip differs"};
    }
    return {true, "4 measures round trip byte-identically"};
}

std::pair<bool, std::string> check_validation_errors(Rng&) {
    std::vector<std::string> missed;
    const auto expect = [&](const char* label, bool ok) {
        if (!ok) missed.push_back(label);
    };
    expect("empty measure", throws_exactly<InputError>([] {
               AtomicBoundaryMeasure m(std::vector<AtomicBoundaryMeasure::Atom>{});
               (void)m;
           }));
    expect("nonpositive mass", throws_exactly<InputError>([] {
               AtomicBoundaryMeasure m({{BoundaryPoint(0.0), -1.0}});
               (void)m;
           }));
    expect("atom separation", throws_exactly<DuplicateNodes>([] {
               AtomicBoundaryMeasure m({{BoundaryPoint(0.0), 1.0}, {BoundaryPoint(1e-12), 1.0}});
               (void)m;
           }));
    expect("radial exponent", throws_exactly<InputError>(
                                  [] { (void)PlanarMeasure::make_radial_power(1.0, 0.0); }));
    expect("area scale", throws_exactly<InputError>([] { (void)PlanarMeasure::make_area(0.0); }));
    expect("planar atom on circle", throws_exactly<OutsideDisk>([] {
               (void)PlanarMeasure::make_atoms({{Complex{1.0, 0.0}, 1.0}});
           }));
    expect("box height", throws_exactly<InputError>([] {
               CarlesonBox b(BoundaryPoint(0.0), 1.5);
               (void)b;
           }));
    expect("not a root", throws_exactly<NotARoot>([] {
               (void)divide_out_roots(Poly{{Complex{1.0, 0.0}}}, {BoundaryPoint(0.0)});
           }));
    expect("duplicate nodes", throws_exactly<DuplicateNodes>([] {
               (void)lagrange_interp({BoundaryPoint(0.0), BoundaryPoint(0.0)},
                                     {Complex{1.0, 0.0}, Complex{2.0, 0.0}});
           }));
    expect("nonpositive alpha", throws_exactly<NonPositiveAlpha>([] { (void)solve_a0(0.0); }));
    expect("kernel arg on circle", throws_exactly<OutsideDisk>([] {
               const OneAtomKernelModel model(BoundaryPoint(0.0), 1.0);
               (void)one_atom_kernel(model, Complex{1.0, 0.0}, Complex{0.0, 0.0});
           }));
    expect("weighted kernel exponent", throws_exactly<InputError>(
                                           [] { (void)weighted_dirichlet_kernel(1.5, 0.0, 0.0); }));
    if (!missed.empty()) {
        std::string d = "missing throws:";
        for (const auto& m : missed) d += " " + m;
        return {false, d};
    }
    return {true, "12 invalid inputs rejected with the documented types"};
}

} // namespace

std::vector<AgreementCase> agreement_cases() {
    const AtomicBoundaryMeasure mu1({{BoundaryPoint(0.0), 1.0}});
    const AtomicBoundaryMeasure mu2(
        {{BoundaryPoint(0.0), 1.0}, {BoundaryPoint(kPi), 0.5}});
    const AtomicBoundaryMeasure mu3(
        {{BoundaryPoint(0.0), 0.7}, {BoundaryPoint(1.0), 0.4}, {BoundaryPoint(kPi), 0.9}});

    constexpr Verdict B = Verdict::Bounded;
    constexpr Verdict D = Verdict::Diverging;

    struct NuEntry {
        const char* tag;
        PlanarMeasure nu;
        Verdict expect[3];
    };
    std::vector<NuEntry> nus;
    nus.push_back({"atoms-center", PlanarMeasure::make_atoms({{Complex{0.3, 0.0}, 1.0}}),
                   {B, B, B}});
    nus.push_back({"atoms-ring",
                   PlanarMeasure::make_atoms({{0.6 * std::polar(1.0, 0.3), 0.2},
                                              {0.6 * std::polar(1.0, 1.2), 0.2},
                                              {0.6 * std::polar(1.0, 2.5), 0.2},
                                              {0.6 * std::polar(1.0, 3.9), 0.2},
                                              {0.6 * std::polar(1.0, 5.5), 0.2}}),
                   {B, B, B}});
    nus.push_back({"atoms-cluster",
                   PlanarMeasure::make_atoms({{0.95 * std::polar(1.0, 0.7), 0.05},
                                              {0.95 * std::polar(1.0, 0.75), 0.05},
                                              {0.95 * std::polar(1.0, 0.8), 0.05}}),
                   {B, B, B}});
    nus.push_back({"atoms-axis",
                   PlanarMeasure::make_atoms({{Complex{0.0, 0.8}, 0.3}, {Complex{0.0, -0.8}, 0.6}}),
                   {B, B, B}});
    nus.push_back({"radial-025-on-ray", PlanarMeasure::make_radial_power(0.25, 0.0), {B, B, B}});
    nus.push_back({"radial-05-off-ray", PlanarMeasure::make_radial_power(0.5, 2.0), {D, D, D}});
    nus.push_back({"radial-075-pi", PlanarMeasure::make_radial_power(0.75, kPi), {D, B, B}});
    nus.push_back({"radial-09-inner", PlanarMeasure::make_radial_power(0.9, 1.0), {D, D, B}});
    nus.push_back({"area-unit", PlanarMeasure::make_area(1.0), {B, B, B}});
    nus.push_back({"area-half", PlanarMeasure::make_area(0.5), {B, B, B}});
    nus.push_back({"area-double", PlanarMeasure::make_area(2.0), {B, B, B}});
    nus.push_back({"area-five", PlanarMeasure::make_area(5.0), {B, B, B}});

    const std::pair<const char*, const AtomicBoundaryMeasure*> mus[] = {
        {"mu1", &mu1}, {"mu2", &mu2}, {"mu3", &mu3}};

    std::vector<AgreementCase> out;
    out.reserve(36);
    for (int m = 0; m < 3; ++m)
        for (const auto& e : nus)
            out.push_back({std::string(e.tag) + " x " + mus[m].first, e.nu, *mus[m].second,
                           e.expect[m]});
    return out;
}

std::vector<AgreementOutcome> run_agreement(const std::vector<AgreementCase>& cases) {
    BoxScanConfig box_cfg;
    box_cfg.n_zeta = 16;
    box_cfg.k_min = 1;
    box_cfg.k_max = 12;

    std::vector<AgreementOutcome> out;
    out.reserve(cases.size());
    std::optional<RktEngine> engine;
    for (const auto& c : cases) {
        if (!engine || !same_measure(engine->measure(), c.mu)) {
            const int deg = c.mu.size() == 1
                                ? 0
                                : default_kernel_degree(1.0 - std::ldexp(1.0, -8), 1e-4);
            engine.emplace(c.mu, deg);
        }
        BoxScanConfig rkt_cfg;
        rkt_cfg.n_zeta = 8;
        rkt_cfg.k_min = 1;
        rkt_cfg.k_max = c.mu.size() == 1 ? 12 : 8;
        const ScanReport box = dmu_carleson_test(c.nu, c.mu, box_cfg);
        const RktLevelReport kernel = engine->levels(c.nu, rkt_cfg);
        out.push_back({c.label, c.expected, box.verdict, kernel.verdict});
    }
    return out;
}

std::vector<PropertyResult> verify_suite(const VerifyOptions& opts) {
    Suite suite{opts.seed, {}};
    suite.run("division-identity", check_division_identity);
    suite.run("monomial-dirichlet", check_monomial_dirichlet);
    suite.run("interpolation-nodes", check_interpolation);
    suite.run("hardy-form", check_h2_form);
    suite.run("poisson-positivity", check_poisson_positive);
    suite.run("poisson-mean-value", check_poisson_mean);
    suite.run("box-nesting", check_box_nesting);
    suite.run("radial-box-closed-form", check_radial_box_closed_form);
    suite.run("disk-quadrature-order", check_quadrature_order);
    suite.run("fubini-area-identity", check_fubini);
    suite.run("decomposition-round-trip", check_decomposition);
    suite.run("gram-closed-form", check_gram_closed_form);
    suite.run("norm-dominates-hardy", check_norm_domination);
    suite.run("one-atom-truncated-agreement", check_one_atom_agreement);
    suite.run("reproducing-property", check_reproducing);
    suite.run("kernel-hermitian", check_kernel_hermitian);
    suite.run("kernel-bound-margin", check_margin);
    suite.run("normalized-kernel-domination", check_kernel_domination);
    suite.run("weighted-kernel-series", check_weighted_kernel);
    suite.run("mass-monotonicity", check_mass_monotonicity);
    suite.run("rotation-equivariance", check_rotation_equivariance);
    suite.run("trivial-box-estimate", check_trivial_estimate);
    suite.run("compactness-guard", check_compactness_guard);
    suite.run("json-round-trip", check_json_round_trip);
    suite.run("validation-errors", check_validation_errors);
    suite.run("embedding-agreement", [&opts](Rng&) -> std::pair<bool, std::string> {
        std::vector<AgreementCase> cases = agreement_cases();
        if (!opts.full) {
            const std::vector<std::string> keep = {
                "radial-05-off-ray x mu1", "area-unit x mu1",     "radial-075-pi x mu2",
                "atoms-cluster x mu2",     "radial-09-inner x mu3", "radial-05-off-ray x mu3",
                "area-five x mu3"};
            std::vector<AgreementCase> subset;
            for (auto& c : cases)
                if (std::find(keep.begin(), keep.end(), c.label) != keep.end())
                    subset.push_back(std::move(c));
            cases = std::move(subset);
        }
        const auto outcomes = run_agreement(cases);
        std::string mismatches;
        for (const auto& o : outcomes)
            if (o.box != o.expected || o.rkt != o.expected)
                mismatches += " [" + o.label + ": expected " + to_string(o.expected) +
                              ", box " + to_string(o.box) + ", kernel " + to_string(o.rkt) + "]";
        if (!mismatches.empty()) return {false, "mismatches:" + mismatches};
        return {true, std::to_string(outcomes.size()) +
                          " cases agree on box and kernel verdicts"};
    });
    return suite.results;
}

} // namespace dmu
