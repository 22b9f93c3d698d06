#pragma once

#include <functional>
#include <vector>

#include "dmu/complex_poly.hpp"

namespace dmu {

/// One-dimensional quadrature rule: paired nodes and weights.
struct Quad1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1], nodes ascending.
Quad1D gauss_legendre(int n);

/// n-point Gauss-Legendre rule mapped to [a, b].
Quad1D gauss_legendre(int n, double a, double b);

/// Value of a definite integral together with the estimate of its error.
struct IntegralResult {
    double value = 0.0;
    double error = 0.0;
};

/// Adaptive Gauss-Legendre on [a, b] by interval bisection. Each interval is
/// accepted when the defect between its whole-interval rule and the sum of the
/// two half-interval rules meets the local tolerance; accepted defects
/// accumulate into the reported error. Throws QuadratureNotConverged when the
/// interval budget is exhausted.
IntegralResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  double rel_tol, double abs_tol, int max_intervals = 4096);

/// Tensor rule for the normalized area measure on the unit disk.
struct DiskQuadrature {
    int n_radial = 0;
    int n_angular = 0;
    std::vector<Complex> nodes;
    std::vector<double> weights;

    double integrate(const std::function<double(Complex)>& f) const;
};

/// Gauss-Legendre radial nodes mapped to [0, 1] with the area weight 2r,
/// crossed with uniform angular nodes; weights sum to 1.
DiskQuadrature disk_quadrature(int n_r, int n_theta);

} // namespace dmu
