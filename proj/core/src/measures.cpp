#include "dmu/measures.hpp"

#include <cmath>
#include <numbers>

#include "dmu/errors.hpp"
#include "dmu/tolerances.hpp"

namespace dmu {

namespace {

/// Coefficients of r ↦ |q(r e^{iθ})|² as a real polynomial in r.
std::vector<double> abs2_along_ray(const Poly& q, double theta) {
    if (q.is_zero()) return {};
    const std::size_t n = q.coeffs.size();
    std::vector<Complex> c(n);
    for (std::size_t k = 0; k < n; ++k)
        c[k] = q.coeffs[k] * std::polar(1.0, theta * static_cast<double>(k));
    std::vector<double> out(2 * n - 1, 0.0);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) out[k + l] += std::real(c[k] * std::conj(c[l]));
    return out;
}

/// Radial density polynomial of the symbolic weight along the measure's ray.
std::vector<double> radial_weight_poly(const PlanarMeasure& nu) {
    return abs2_along_ray(nu.weight_poly(), nu.ray_angle);
}

/// Rewrite Σ c_m r^m as a polynomial in t = 1 - r.
std::vector<double> shift_to_one_minus(const std::vector<double>& c) {
    std::vector<double> acc;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        std::vector<double> next(acc.size() + 1, 0.0);
        for (std::size_t m = 0; m < acc.size(); ++m) {
            next[m] += acc[m];
            next[m + 1] -= acc[m];
        }
        next[0] += *it;
        acc = std::move(next);
    }
    while (!acc.empty() && acc.back() == 0.0) acc.pop_back();
    return acc;
}

/// Moments ∫₀¹ r^M (1-r)^{-α} dr for M = 0..max_m.
std::vector<double> beta_moments(std::size_t max_m, double alpha) {
    std::vector<double> out(max_m + 1);
    out[0] = 1.0 / (1.0 - alpha);
    for (std::size_t m = 1; m <= max_m; ++m)
        out[m] = out[m - 1] * static_cast<double>(m) / (static_cast<double>(m) + 1.0 - alpha);
    return out;
}

double area_moment_sum(const Poly& q, double scale) {
    double s = 0.0;
    for (std::size_t a = 0; a < q.coeffs.size(); ++a)
        s += std::norm(q.coeffs[a]) / (static_cast<double>(a) + 1.0);
    return scale * s;
}

} // namespace

AtomicBoundaryMeasure::AtomicBoundaryMeasure(std::vector<Atom> atoms_) : atoms(std::move(atoms_)) {
    if (atoms.empty()) throw InputError("atomic measure needs at least one atom");
    for (const auto& a : atoms)
        if (!(a.mass > 0.0)) throw InputError("atomic measure masses must be positive");
    for (std::size_t i = 0; i < atoms.size(); ++i)
        for (std::size_t j = i + 1; j < atoms.size(); ++j)
            if (std::abs(atoms[i].point.point() - atoms[j].point.point()) < tol::node_separation)
                throw DuplicateNodes("atomic measure: coincident atoms at angle " +
                                     std::to_string(atoms[i].point.angle));
}

double AtomicBoundaryMeasure::total_mass() const {
    double s = 0.0;
    for (const auto& a : atoms) s += a.mass;
    return s;
}

std::vector<BoundaryPoint> AtomicBoundaryMeasure::points() const {
    std::vector<BoundaryPoint> out;
    out.reserve(atoms.size());
    for (const auto& a : atoms) out.push_back(a.point);
    return out;
}

PlanarMeasure PlanarMeasure::make_atoms(std::vector<Atom> atoms) {
    for (const auto& a : atoms) {
        if (std::abs(a.z) >= 1.0) throw OutsideDisk(a.z);
        if (!(a.mass > 0.0)) throw InputError("planar atom masses must be positive");
    }
    PlanarMeasure nu;
    nu.family = PlanarFamily::Atoms;
    nu.atoms = std::move(atoms);
    return nu;
}

PlanarMeasure PlanarMeasure::make_radial_power(double exponent, double ray_angle) {
    if (!(exponent >= 0.0 && exponent < 1.0))
        throw InputError("radial power exponent must lie in [0, 1)");
    PlanarMeasure nu;
    nu.family = PlanarFamily::RadialPower;
    nu.exponent = exponent;
    nu.ray_angle = BoundaryPoint(ray_angle).angle;
    return nu;
}

PlanarMeasure PlanarMeasure::make_area(double scale) {
    if (!(scale > 0.0)) throw InputError("area scale must be positive");
    PlanarMeasure nu;
    nu.family = PlanarFamily::Area;
    nu.scale = scale;
    return nu;
}

double PlanarMeasure::weight_at(Complex z) const {
    double w = 1.0;
    for (const auto& lam : weight_points) w *= std::norm(z - lam.point());
    return w;
}

Poly PlanarMeasure::weight_poly() const { return product_of_linear_factors(weight_points); }

double PlanarMeasure::total_mass() const {
    switch (family) {
        case PlanarFamily::Atoms: {
            double s = 0.0;
            for (const auto& a : atoms) s += a.mass;
            return s;
        }
        case PlanarFamily::RadialPower: {
            const auto q = radial_weight_poly(*this);
            const auto mom = beta_moments(q.size() - 1, exponent);
            double s = 0.0;
            for (std::size_t m = 0; m < q.size(); ++m) s += q[m] * mom[m];
            return s;
        }
        case PlanarFamily::Area:
            return area_moment_sum(weight_poly(), scale);
    }
    throw InputError("unknown planar measure family");
}

CarlesonBox::CarlesonBox(BoundaryPoint center_, double h_) : center(center_), h(h_) {
    if (!(h > 0.0 && h < 1.0)) throw InputError("Carleson box height must lie in (0, 1)");
}

bool CarlesonBox::contains(Complex z) const {
    const double r = std::abs(z);
    if (!(r > 1.0 - h && r < 1.0)) return false;
    return std::abs(z / r - center.point()) < 0.5 * h;
}

double poisson_extension(const AtomicBoundaryMeasure& mu, Complex z) {
    if (std::abs(z) >= 1.0) throw OutsideDisk(z);
    const double num = 1.0 - std::norm(z);
    double s = 0.0;
    for (const auto& a : mu.atoms) s += a.mass * num / std::norm(a.point.point() - z);
    return s;
}

double box_mass(const PlanarMeasure& nu, const CarlesonBox& box) {
    switch (nu.family) {
        case PlanarFamily::Atoms: {
            double s = 0.0;
            for (const auto& a : nu.atoms)
                if (box.contains(a.z)) s += a.mass;
            return s;
        }
        case PlanarFamily::RadialPower: {
            const Complex dir = std::polar(1.0, nu.ray_angle);
            if (!(std::abs(dir - box.center.point()) < 0.5 * box.h)) return 0.0;
            const auto q = shift_to_one_minus(radial_weight_poly(nu));
            double s = 0.0;
            for (std::size_t m = 0; m < q.size(); ++m) {
                const double p = static_cast<double>(m) + 1.0 - nu.exponent;
                s += q[m] * std::pow(box.h, p) / p;
            }
            return s;
        }
        case PlanarFamily::Area: {
            const double half_angle = 2.0 * std::asin(0.25 * box.h);
            const double theta0 = box.center.angle;
            double prev = 0.0;
            for (int n = 16; n <= 256; n *= 2) {
                const Quad1D rad = gauss_legendre(n, 1.0 - box.h, 1.0);
                const Quad1D ang = gauss_legendre(n, theta0 - half_angle, theta0 + half_angle);
                double s = 0.0;
                for (int i = 0; i < n; ++i) {
                    const double r = rad.nodes[static_cast<std::size_t>(i)];
                    double inner = 0.0;
                    for (int j = 0; j < n; ++j)
                        inner += ang.weights[static_cast<std::size_t>(j)] *
                                 nu.weight_at(std::polar(r, ang.nodes[static_cast<std::size_t>(j)]));
                    s += rad.weights[static_cast<std::size_t>(i)] * r * inner;
                }
                s *= nu.scale / std::numbers::pi;
                if (n > 16 && std::abs(s - prev) <= 1e-12 * (1.0 + std::abs(s))) return s;
                prev = s;
            }
            return prev;
        }
    }
    throw InputError("unknown planar measure family");
}

PlanarMeasure weight_by_product(const PlanarMeasure& nu, const std::vector<BoundaryPoint>& lambdas) {
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        for (std::size_t j = i + 1; j < lambdas.size(); ++j)
            if (std::abs(lambdas[i].point() - lambdas[j].point()) < tol::node_separation)
                throw DuplicateNodes("weight_by_product: coincident weight points at angle " +
                                     std::to_string(lambdas[i].angle));
    PlanarMeasure out = nu;
    if (nu.family == PlanarFamily::Atoms) {
        for (auto& a : out.atoms) {
            double w = 1.0;
            for (const auto& lam : lambdas) w *= std::norm(a.z - lam.point());
            a.mass *= w;
        }
        return out;
    }
    out.weight_points.insert(out.weight_points.end(), lambdas.begin(), lambdas.end());
    return out;
}

IntegralResult integrate_reported(const PlanarMeasure& nu, const std::function<double(Complex)>& f,
                                  double abs_tol) {
    switch (nu.family) {
        case PlanarFamily::Atoms: {
            double s = 0.0;
            for (const auto& a : nu.atoms) s += a.mass * f(a.z);
            return {s, 0.0};
        }
        case PlanarFamily::RadialPower: {
            const double beta = 1.0 - nu.exponent;
            const Complex dir = std::polar(1.0, nu.ray_angle);
            const auto g = [&](double u) {
                const double t = std::max(std::pow(u, 1.0 / beta), 1e-15);
                const Complex z = (1.0 - t) * dir;
                return f(z) * nu.weight_at(z);
            };
            IntegralResult res =
                integrate_adaptive(g, 0.0, 1.0, tol::ray_quadrature, abs_tol * beta);
            res.value /= beta;
            res.error /= beta;
            return res;
        }
        case PlanarFamily::Area: {
            const auto integrand = [&](Complex z) { return f(z) * nu.weight_at(z); };
            double prev = 0.0;
            double err = 0.0;
            for (int n = 32; n <= 512; n *= 2) {
                const double cur = nu.scale * disk_quadrature(n, 2 * n).integrate(integrand);
                if (n > 32) {
                    err = std::abs(cur - prev);
                    if (err <= abs_tol) return {cur, err};
                }
                prev = cur;
            }
            throw QuadratureNotConverged(prev, err);
        }
    }
    throw InputError("unknown planar measure family");
}

double integrate(const PlanarMeasure& nu, const std::function<double(Complex)>& f, double abs_tol) {
    return integrate_reported(nu, f, abs_tol).value;
}

AtomicBoundaryMeasure rotate(const AtomicBoundaryMeasure& mu, double gamma) {
    std::vector<AtomicBoundaryMeasure::Atom> atoms;
    atoms.reserve(mu.atoms.size());
    for (const auto& a : mu.atoms) atoms.push_back({BoundaryPoint(a.point.angle + gamma), a.mass});
    return AtomicBoundaryMeasure(std::move(atoms));
}

PlanarMeasure rotate(const PlanarMeasure& nu, double gamma) {
    PlanarMeasure out = nu;
    const Complex phase = std::polar(1.0, gamma);
    for (auto& a : out.atoms) a.z *= phase;
    if (out.family == PlanarFamily::RadialPower)
        out.ray_angle = BoundaryPoint(out.ray_angle + gamma).angle;
    for (auto& lam : out.weight_points) lam = BoundaryPoint(lam.angle + gamma);
    return out;
}

double integrate_abs2_poly(const PlanarMeasure& nu, const Poly& p) {
    switch (nu.family) {
        case PlanarFamily::Atoms: {
            double s = 0.0;
            for (const auto& a : nu.atoms) s += a.mass * std::norm(p.eval(a.z));
            return s;
        }
        case PlanarFamily::RadialPower: {
            const auto pr = abs2_along_ray(p, nu.ray_angle);
            if (pr.empty()) return 0.0;
            const auto qr = radial_weight_poly(nu);
            std::vector<double> full(pr.size() + qr.size() - 1, 0.0);
            for (std::size_t i = 0; i < pr.size(); ++i)
                for (std::size_t j = 0; j < qr.size(); ++j) full[i + j] += pr[i] * qr[j];
            const auto mom = beta_moments(full.size() - 1, nu.exponent);
            double s = 0.0;
            for (std::size_t m = 0; m < full.size(); ++m) s += full[m] * mom[m];
            return s;
        }
        case PlanarFamily::Area:
            return area_moment_sum(p * nu.weight_poly(), nu.scale);
    }
    throw InputError("unknown planar measure family");
}

} // namespace dmu
