#include "dmu/complex_poly.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dmu/errors.hpp"
#include "dmu/tolerances.hpp"

namespace dmu {

Poly& Poly::normalize() {
    while (!coeffs.empty() && coeffs.back() == Complex{0.0, 0.0}) coeffs.pop_back();
    return *this;
}

Complex Poly::eval(Complex z) const {
    Complex acc{0.0, 0.0};
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs.size() <= 1) return Poly{};
    std::vector<Complex> d(coeffs.size() - 1);
    for (std::size_t k = 1; k < coeffs.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs[k];
    Poly out{std::move(d)};
    return out.normalize();
}

double Poly::h2_norm_sq() const {
    double s = 0.0;
    for (const auto& c : coeffs) s += std::norm(c);
    return s;
}

double Poly::h2_norm() const { return std::sqrt(h2_norm_sq()); }

Poly Poly::monomial(int n, Complex scale) {
    if (n < 0) throw InputError("monomial degree must be nonnegative");
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1, Complex{0.0, 0.0});
    c.back() = scale;
    Poly out{std::move(c)};
    return out.normalize();
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Complex> c(std::max(a.coeffs.size(), b.coeffs.size()), Complex{0.0, 0.0});
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) c[k] += a.coeffs[k];
    for (std::size_t k = 0; k < b.coeffs.size(); ++k) c[k] += b.coeffs[k];
    Poly out{std::move(c)};
    return out.normalize();
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Complex> c(std::max(a.coeffs.size(), b.coeffs.size()), Complex{0.0, 0.0});
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) c[k] += a.coeffs[k];
    for (std::size_t k = 0; k < b.coeffs.size(); ++k) c[k] -= b.coeffs[k];
    Poly out{std::move(c)};
    return out.normalize();
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    std::vector<Complex> c(a.coeffs.size() + b.coeffs.size() - 1, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
    Poly out{std::move(c)};
    return out.normalize();
}

Poly operator*(Complex s, const Poly& p) {
    std::vector<Complex> c(p.coeffs);
    for (auto& x : c) x *= s;
    Poly out{std::move(c)};
    return out.normalize();
}

BoundaryPoint::BoundaryPoint(double a) {
    const double two_pi = 2.0 * std::numbers::pi;
    angle = std::fmod(a, two_pi);
    if (angle < 0.0) angle += two_pi;
}

Complex poly_eval(const Poly& p, Complex z) { return p.eval(z); }

Complex h2_inner(const Poly& p, const Poly& q) {
    Complex s{0.0, 0.0};
    const std::size_t n = std::min(p.coeffs.size(), q.coeffs.size());
    for (std::size_t k = 0; k < n; ++k) s += p.coeffs[k] * std::conj(q.coeffs[k]);
    return s;
}

double h2_norm_sq(const Poly& p) { return p.h2_norm_sq(); }

Poly divided_quotient(const Poly& p, const BoundaryPoint& lambda) {
    const int d = p.degree();
    if (d <= 0) return Poly{};
    const Complex lam = lambda.point();
    std::vector<Complex> q(static_cast<std::size_t>(d), Complex{0.0, 0.0});
    q[static_cast<std::size_t>(d - 1)] = p.coeffs[static_cast<std::size_t>(d)];
    for (int k = d - 1; k >= 1; --k)
        q[static_cast<std::size_t>(k - 1)] = p.coeffs[static_cast<std::size_t>(k)] + lam * q[static_cast<std::size_t>(k)];
    Poly out{std::move(q)};
    return out.normalize();
}

Poly divide_out_roots(const Poly& p, const std::vector<BoundaryPoint>& roots) {
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (std::abs(roots[i].point() - roots[j].point()) < tol::node_separation)
                throw DuplicateNodes("divide_out_roots: coincident roots at angle " +
                                     std::to_string(roots[i].angle));

    const double tau = tol::root_residual_scale * (1.0 + p.h2_norm());
    Poly g = p;
    for (const auto& lam : roots) {
        const Complex val = g.eval(lam.point());
        if (std::abs(val) > tau) throw NotARoot(lam.point(), std::abs(val));
        g = divided_quotient(g, lam);
    }
    return g;
}

Poly lagrange_interp(const std::vector<BoundaryPoint>& nodes, const std::vector<Complex>& values) {
    if (nodes.size() != values.size()) throw InputError("lagrange_interp: node and value counts differ");
    if (nodes.empty()) return Poly{};
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (std::abs(nodes[i].point() - nodes[j].point()) < tol::node_separation)
                throw DuplicateNodes("lagrange_interp: coincident nodes at angle " +
                                     std::to_string(nodes[i].angle));

    Poly acc;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        Poly basis{{Complex{1.0, 0.0}}};
        Complex denom{1.0, 0.0};
        const Complex xi = nodes[i].point();
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            if (j == i) continue;
            const Complex xj = nodes[j].point();
            basis = basis * Poly{{-xj, Complex{1.0, 0.0}}};
            denom *= xi - xj;
        }
        acc = acc + (values[i] / denom) * basis;
    }
    return acc.normalize();
}

Complex szego_kernel(Complex w, Complex z) {
    if (std::abs(w) >= 1.0) throw OutsideDisk(w);
    if (std::abs(z) >= 1.0) throw OutsideDisk(z);
    return 1.0 / (1.0 - std::conj(w) * z);
}

Poly product_of_linear_factors(const std::vector<BoundaryPoint>& roots) {
    Poly acc{{Complex{1.0, 0.0}}};
    for (const auto& lam : roots) acc = acc * Poly{{-lam.point(), Complex{1.0, 0.0}}};
    return acc.normalize();
}

} // namespace dmu
