#pragma once

#include <complex>
#include <vector>

namespace dmu {

using Complex = std::complex<double>;

/// Analytic polynomial with coefficients in ascending degree order.
/// The empty coefficient list is the zero function. Viewed as an element of
/// the Hardy space, the squared norm is the sum of squared coefficient moduli.
struct Poly {
    std::vector<Complex> coeffs;

    Poly() = default;
    explicit Poly(std::vector<Complex> c) : coeffs(std::move(c)) {}

    bool is_zero() const { return coeffs.empty(); }

    /// Degree of the stored representation; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    Complex coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coeffs.size())) ? coeffs[k] : Complex{0.0, 0.0};
    }

    /// Strip exact-zero trailing coefficients in place and return *this.
    Poly& normalize();

    /// Horner evaluation at z.
    Complex eval(Complex z) const;

    Poly derivative() const;

    double h2_norm_sq() const;
    double h2_norm() const;

    static Poly monomial(int n, Complex scale = {1.0, 0.0});
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(Complex s, const Poly& p);

/// A point of the unit circle stored by its angle; the derived point
/// exp(i*angle) has unit modulus by construction.
struct BoundaryPoint {
    double angle = 0.0;

    BoundaryPoint() = default;
    explicit BoundaryPoint(double a);

    Complex point() const { return {std::cos(angle), std::sin(angle)}; }
};

/// Σ coeffs[k] z^k (Horner).
Complex poly_eval(const Poly& p, Complex z);

/// Hardy-space pairing Σ_k p_k conj(q_k); linear in p, conjugate-linear in q.
Complex h2_inner(const Poly& p, const Poly& q);

double h2_norm_sq(const Poly& p);

/// The quotient q with (z - λ) q(z) = p(z) - p(λ) identically, by synthetic
/// division; a constant (or zero) input yields the zero polynomial.
Poly divided_quotient(const Poly& p, const BoundaryPoint& lambda);

/// Divide out the listed boundary roots: returns g with p = Π (z - λ_j) g.
/// Throws NotARoot if |p(λ_j)| exceeds the relative residual tolerance, and
/// DuplicateNodes if two roots coincide.
Poly divide_out_roots(const Poly& p, const std::vector<BoundaryPoint>& roots);

/// Unique polynomial of degree <= n-1 through the n prescribed values.
/// Throws DuplicateNodes if two nodes coincide, InputError on length mismatch.
Poly lagrange_interp(const std::vector<BoundaryPoint>& nodes, const std::vector<Complex>& values);

/// Hardy reproducing kernel 1 / (1 - conj(w) z).
Complex szego_kernel(Complex w, Complex z);

/// Π (z - λ_j) as a polynomial.
Poly product_of_linear_factors(const std::vector<BoundaryPoint>& roots);

} // namespace dmu
