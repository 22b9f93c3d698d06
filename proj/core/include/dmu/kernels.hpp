#pragma once

#include <memory>

#include "dmu/complex_poly.hpp"
#include "dmu/dirichlet.hpp"
#include "dmu/measures.hpp"
#include "dmu/tolerances.hpp"

namespace dmu {

/// Smaller root of (a0 - 1)² = α a0, always in (0, 1).
double solve_a0(double alpha);

/// One-atom measure α δ_λ together with the parameter a0 that pins down the
/// extremal multiplier b_λ; the space then carries an explicit kernel.
struct OneAtomKernelModel {
    BoundaryPoint lambda;
    double alpha = 0.0;
    double a0 = 0.0;

    OneAtomKernelModel(BoundaryPoint lambda_, double alpha_);
};

/// b_λ(z) = (1 - a0) conj(λ) z / (1 - a0 conj(λ) z); unimodular at the atom,
/// a strict contraction inside the disk.
Complex b_lambda(const OneAtomKernelModel& model, Complex z);

/// Explicit kernel (1 - conj(b(w)) b(z)) / (1 - conj(w) z).
Complex one_atom_kernel(const OneAtomKernelModel& model, Complex w, Complex z);

/// Taylor section of the explicit kernel through the stated degree. The
/// coefficients obey c_0 = 1, c_k = conj(w)^k - conj(b(w)) (1 - a0) s_k with
/// s_1 = conj(λ), s_{k+1} = conj(w) s_k + a0^k conj(λ)^{k+1}.
Poly one_atom_kernel_poly(const OneAtomKernelModel& model, Complex w, int degree);

/// Degree-N kernel section at w: the unique polynomial with
/// ⟨z^m, k_w⟩_μ = w^m for m = 0..N.
struct TruncatedKernel {
    Complex w;
    int degree = 0;
    Poly coeffs;

    Complex eval(Complex z) const { return coeffs.eval(z); }
    double norm_sq() const { return std::real(coeffs.eval(w)); }
};

/// Shared Cholesky factorization of the monomial Gram matrix of (μ, N);
/// immutable after construction, so kernels for many w can be solved
/// concurrently from one factorization.
class TruncatedKernelSolver {
public:
    TruncatedKernelSolver(const AtomicBoundaryMeasure& mu, int N);

    int degree() const;
    TruncatedKernel solve(Complex w) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

TruncatedKernel truncated_kernel(const AtomicBoundaryMeasure& mu, Complex w, int N);

/// Truncation degree for which the geometric coefficient tail at radius r_max
/// drops below tol.
int default_kernel_degree(double r_max, double tol = tol::kernel_truncation);

/// Slack of the kernel contraction bound:
/// (1 - |b_λ(z)|²) - a0 |z - λ|² / |λ - a0 z|², nonnegative on the disk.
double kernel_bound_margin(const OneAtomKernelModel& model, Complex z);

/// (1 - |w|²) / (1 - |b_λ(w)|²); tends to 0 along every boundary direction
/// except the atom's, where it stays bounded below.
double angular_ratio(const OneAtomKernelModel& model, Complex w);

/// Kernel of the standard weighted Dirichlet space: (1 - conj(w) z)^{-α} for
/// α in (0, 1], and log(1/(1-u))/u at u = conj(w) z for α = 0, with the
/// removable singularity at u = 0 filled by the series value.
Complex weighted_dirichlet_kernel(double alpha, Complex w, Complex z);

} // namespace dmu
