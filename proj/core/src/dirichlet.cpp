#include "dmu/dirichlet.hpp"

#include <cmath>
#include <numbers>

#include "dmu/errors.hpp"

namespace dmu {

double local_dirichlet(const Poly& f, const BoundaryPoint& lambda) {
    return divided_quotient(f, lambda).h2_norm_sq();
}

Complex local_dirichlet_form(const Poly& f, const Poly& g, const BoundaryPoint& lambda) {
    return h2_inner(divided_quotient(f, lambda), divided_quotient(g, lambda));
}

double dirichlet_mu(const Poly& f, const AtomicBoundaryMeasure& mu) {
    double s = 0.0;
    for (const auto& a : mu.atoms) s += a.mass * local_dirichlet(f, a.point);
    return s;
}

double dirichlet_mu_area(const Poly& f, const AtomicBoundaryMeasure& mu, const DiskQuadrature& quad) {
    const Poly d1 = f.derivative();
    if (d1.is_zero()) return 0.0;
    const Poly d2 = d1.derivative();
    const Poly d3 = d2.derivative();

    const Quad1D radial = gauss_legendre(quad.n_radial, 0.0, 1.0);
    const int n_theta = quad.n_angular;
    const double dtheta = 2.0 * std::numbers::pi / n_theta;
    const std::size_t n_atoms = mu.atoms.size();

    std::vector<Complex> lam(n_atoms);
    for (std::size_t j = 0; j < n_atoms; ++j) lam[j] = mu.atoms[j].point.point();

    std::vector<double> g0(n_atoms), g1(n_atoms), g2(n_atoms);
    double total = 0.0;
    for (int i = 0; i < quad.n_radial; ++i) {
        const double r = radial.nodes[static_cast<std::size_t>(i)];
        const double wr = radial.weights[static_cast<std::size_t>(i)] * 2.0 * r;
        const double one_minus_r2 = 1.0 - r * r;

        // Angular template of |f'|² to second order around each atom direction.
        for (std::size_t j = 0; j < n_atoms; ++j) {
            const Complex u = r * lam[j];
            const Complex F = d1.eval(u);
            const Complex Fp = d2.eval(u);
            const Complex Fpp = d3.eval(u);
            g0[j] = std::norm(F);
            g1[j] = 2.0 * std::real(std::conj(F) * Fp * Complex{0.0, 1.0} * u);
            g2[j] = 2.0 * r * r * std::norm(Fp) +
                    2.0 * std::real(std::conj(F) * (-u * u * Fpp - u * Fp));
        }

        // Remainder after subtracting each template, sampled on the circle.
        double circle = 0.0;
        for (int k = 0; k < n_theta; ++k) {
            const double theta = dtheta * k;
            const Complex z = std::polar(r, theta);
            const double G = std::norm(d1.eval(z));
            for (std::size_t j = 0; j < n_atoms; ++j) {
                const double t = theta - mu.atoms[j].point.angle;
                const double tmpl = g0[j] + g1[j] * std::sin(t) + g2[j] * (1.0 - std::cos(t));
                const double poisson = mu.atoms[j].mass * one_minus_r2 / std::norm(lam[j] - z);
                circle += (G - tmpl) * poisson;
            }
        }
        total += wr * circle / n_theta;

        // The template itself, integrated against the kernel exactly: the
        // angular moments of the Poisson kernel are 1 for the constant term,
        // r for cos, and 0 for sin.
        for (std::size_t j = 0; j < n_atoms; ++j)
            total += wr * mu.atoms[j].mass * (g0[j] + g2[j] * (1.0 - r));
    }
    return total;
}

double dmu_norm_sq(const Poly& f, const AtomicBoundaryMeasure& mu) {
    return f.h2_norm_sq() + dirichlet_mu(f, mu);
}

Complex dmu_inner(const Poly& f, const Poly& g, const AtomicBoundaryMeasure& mu) {
    Complex s = h2_inner(f, g);
    for (const auto& a : mu.atoms) s += a.mass * local_dirichlet_form(f, g, a.point);
    return s;
}

Decomposition decompose(const Poly& f, const AtomicBoundaryMeasure& mu) {
    const auto nodes = mu.points();
    std::vector<Complex> values(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j) values[j] = f.eval(nodes[j].point());
    Decomposition d;
    d.p = lagrange_interp(nodes, values);
    d.g = divide_out_roots(f - d.p, nodes);
    return d;
}

GramMatrix gram_matrix(const AtomicBoundaryMeasure& mu, int N) {
    if (N < 0) throw InputError("gram_matrix: N must be nonnegative");
    GramMatrix G;
    G.size = N + 1;
    G.entries.assign(static_cast<std::size_t>(G.size) * G.size, Complex{0.0, 0.0});
    std::vector<std::vector<Complex>> powers(mu.atoms.size());
    for (std::size_t j = 0; j < mu.atoms.size(); ++j) {
        auto& p = powers[j];
        p.resize(static_cast<std::size_t>(N) + 1);
        p[0] = Complex{1.0, 0.0};
        const Complex lam = mu.atoms[j].point.point();
        for (int d = 1; d <= N; ++d) p[static_cast<std::size_t>(d)] = p[static_cast<std::size_t>(d - 1)] * lam;
    }
    for (int m = 0; m <= N; ++m) {
        for (int k = 0; k <= m; ++k) {
            Complex v = (m == k) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            for (std::size_t j = 0; j < mu.atoms.size(); ++j)
                v += mu.atoms[j].mass * static_cast<double>(k) * powers[j][static_cast<std::size_t>(m - k)];
            G.entries[static_cast<std::size_t>(m) * G.size + k] = v;
            G.entries[static_cast<std::size_t>(k) * G.size + m] = std::conj(v);
        }
    }
    return G;
}

} // namespace dmu
