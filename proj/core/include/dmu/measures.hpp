#pragma once

#include <functional>
#include <vector>

#include "dmu/complex_poly.hpp"
#include "dmu/quadrature.hpp"

namespace dmu {

/// Finitely atomic positive measure on the unit circle.
struct AtomicBoundaryMeasure {
    struct Atom {
        BoundaryPoint point;
        double mass;
    };

    std::vector<Atom> atoms;

    AtomicBoundaryMeasure() = default;
    explicit AtomicBoundaryMeasure(std::vector<Atom> atoms_);

    std::size_t size() const { return atoms.size(); }
    double total_mass() const;
    std::vector<BoundaryPoint> points() const;
};

enum class PlanarFamily { Atoms, RadialPower, Area };

/// Positive test measure on the open unit disk. Three parametric families:
///   Atoms        point masses strictly inside the disk;
///   RadialPower  (1-|z|)^{-exponent} times length on the ray [0, e^{i ray_angle});
///   Area         scale times the normalized area measure.
/// weight_points carries an optional density factor Π |z - λ_j|² symbolically,
/// so weighted integrals stay reducible to closed forms of the base family.
struct PlanarMeasure {
    struct Atom {
        Complex z;
        double mass;
    };

    PlanarFamily family = PlanarFamily::Area;
    std::vector<Atom> atoms;
    double exponent = 0.0;
    double ray_angle = 0.0;
    double scale = 1.0;
    std::vector<BoundaryPoint> weight_points;

    static PlanarMeasure make_atoms(std::vector<Atom> atoms);
    static PlanarMeasure make_radial_power(double exponent, double ray_angle);
    static PlanarMeasure make_area(double scale);

    /// Density factor Π |z - λ_j|² over weight_points (1 when unweighted).
    double weight_at(Complex z) const;

    /// Π (z - λ_j) over weight_points as a polynomial (constant 1 when empty).
    Poly weight_poly() const;

    double total_mass() const;
};

/// Carleson window S(ζ, h) = { 1-h < |z| < 1, |z/|z| - ζ| < h/2 };
/// both inequalities strict, so boundary ties are excluded.
struct CarlesonBox {
    BoundaryPoint center;
    double h = 0.0;

    CarlesonBox() = default;
    CarlesonBox(BoundaryPoint center_, double h_);

    bool contains(Complex z) const;
};

/// Poisson integral of μ at z: Σ_j α_j (1-|z|²)/|λ_j - z|².
double poisson_extension(const AtomicBoundaryMeasure& mu, Complex z);

/// ν(S(ζ,h)): exact for Atoms, closed form along the ray for RadialPower,
/// polar-rectangle quadrature for Area.
double box_mass(const PlanarMeasure& nu, const CarlesonBox& box);

/// The measure Π |z - λ_j|² dν: atom masses are reweighted in place, the
/// continuous families gain symbolic weight points.
PlanarMeasure weight_by_product(const PlanarMeasure& nu, const std::vector<BoundaryPoint>& lambdas);

/// ∫ f dν with an error estimate. Exact for Atoms; adaptive quadrature after
/// the substitution u = (1-r)^{1-α} for RadialPower; polar tensor quadrature
/// with refinement for Area. f must be nonnegative on the support of ν.
IntegralResult integrate_reported(const PlanarMeasure& nu, const std::function<double(Complex)>& f,
                                  double abs_tol = 1e-8);

double integrate(const PlanarMeasure& nu, const std::function<double(Complex)>& f,
                 double abs_tol = 1e-8);

/// ∫ |p|² dν in closed form for every family (beta moments on the ray,
/// diagonal monomial sums for area, direct evaluation on atoms).
double integrate_abs2_poly(const PlanarMeasure& nu, const Poly& p);

/// Pushforward under z ↦ e^{iγ} z.
AtomicBoundaryMeasure rotate(const AtomicBoundaryMeasure& mu, double gamma);
PlanarMeasure rotate(const PlanarMeasure& nu, double gamma);

} // namespace dmu
