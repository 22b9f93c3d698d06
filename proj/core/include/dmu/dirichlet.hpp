#pragma once

#include "dmu/complex_poly.hpp"
#include "dmu/measures.hpp"
#include "dmu/quadrature.hpp"

namespace dmu {

/// Squared Hardy norm of (f - f(λ))/(z - λ); exact through synthetic division.
double local_dirichlet(const Poly& f, const BoundaryPoint& lambda);

/// Sesquilinear polarization of the local integral: the Hardy pairing of the
/// two divided quotients at λ. Linear in f, conjugate-linear in g.
Complex local_dirichlet_form(const Poly& f, const Poly& g, const BoundaryPoint& lambda);

/// Dirichlet integral against μ as the mass-weighted sum of local integrals.
double dirichlet_mu(const Poly& f, const AtomicBoundaryMeasure& mu);

/// The same Dirichlet integral as the area integral of |f'|² against the
/// Poisson extension of μ, over the given tensor rule. The Poisson peak each
/// atom contributes is removed before quadrature: a second-order angular
/// template around the atom direction is integrated against the kernel
/// exactly (its angular moments are 1, r, and 0) and only the remainder is
/// sampled, so the boundary concentration never meets the grid.
double dirichlet_mu_area(const Poly& f, const AtomicBoundaryMeasure& mu, const DiskQuadrature& quad);

/// ‖f‖²_μ = ‖f‖²_2 + D_μ(f).
double dmu_norm_sq(const Poly& f, const AtomicBoundaryMeasure& mu);

/// Polarized inner product: Hardy pairing plus the Dirichlet form.
Complex dmu_inner(const Poly& f, const Poly& g, const AtomicBoundaryMeasure& mu);

/// f = p + Π (z - λ_j) g with p the interpolant of f at the atoms of μ.
struct Decomposition {
    Poly p;
    Poly g;
};

Decomposition decompose(const Poly& f, const AtomicBoundaryMeasure& mu);

/// Matrix of monomial inner products ⟨z^m, z^k⟩_μ for m, k = 0..N. Hermitian,
/// positive definite, with the closed form
///   G[m][k] = δ_{mk} + Σ_j α_j · min(m,k) · λ_j^{m-k}.
struct GramMatrix {
    int size = 0;
    std::vector<Complex> entries;

    Complex at(int m, int k) const { return entries[static_cast<std::size_t>(m) * size + k]; }
};

GramMatrix gram_matrix(const AtomicBoundaryMeasure& mu, int N);

/// Convenience bundle of a measure with its norm and inner product.
struct DirichletSpace {
    AtomicBoundaryMeasure mu;

    double norm_sq(const Poly& f) const { return dmu_norm_sq(f, mu); }
    Complex inner(const Poly& f, const Poly& g) const { return dmu_inner(f, g, mu); }
};

} // namespace dmu
