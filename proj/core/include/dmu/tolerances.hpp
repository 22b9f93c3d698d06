#pragma once

#include <cstdint>

namespace dmu::tol {

/// Minimum angular separation between boundary nodes / measure atoms (radians).
inline constexpr double node_separation = 1e-9;

/// Relative scale for the "p vanishes at λ" check in root division:
/// the residual bound is root_residual_scale * (1 + ||p||_2).
inline constexpr double root_residual_scale = 1e-9;

/// Default absolute tolerance for area-family quadrature refinement.
inline constexpr double area_quadrature = 1e-8;

/// Default relative tolerance for adaptive 1-D ray quadrature.
inline constexpr double ray_quadrature = 1e-10;

/// Truncation tolerance used when choosing a default kernel degree.
inline constexpr double kernel_truncation = 1e-8;

/// Relative tie tolerance for scan verdicts: a per-level increase below this
/// factor counts as a plateau, not growth.
inline constexpr double scan_tie = 1e-2;

/// Fixed default seed for every randomized property suite.
inline constexpr std::uint64_t default_seed = 424242;

} // namespace dmu::tol
