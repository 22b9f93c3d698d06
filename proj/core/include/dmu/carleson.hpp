#pragma once

#include <memory>
#include <vector>

#include "dmu/kernels.hpp"
#include "dmu/measures.hpp"

namespace dmu {

/// Dyadic box-scan parameters: boxes S(ζ, 2^{-k}) for k = k_min..k_max over
/// n_zeta uniform boundary angles (shifted by angle_offset) plus the measure's
/// own distinguished directions; rho is the divergence growth factor.
struct BoxScanConfig {
    int n_zeta = 64;
    int k_min = 1;
    int k_max = 12;
    double rho = 1.5;
    double angle_offset = 0.0;
};

enum class Verdict { Bounded, Diverging, Inconclusive };

const char* to_string(Verdict v);

struct ScanWitness {
    double zeta_angle = 0.0;
    double h = 0.0;
    double ratio = 0.0;
};

struct ScanReport {
    double sup_ratio = 0.0;
    std::vector<int> levels;
    std::vector<double> level_sups;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<ScanWitness> witnesses;
};

/// Deterministic verdict over a per-level sup sequence. A step counts as an
/// increase only when it exceeds the relative tie tolerance. With L the
/// number of trailing consecutive increases: Diverging when L ≥ 3 and the
/// last three steps compound to at least rho; Bounded when the trail is empty
/// or its total growth stays below rho; Inconclusive otherwise.
Verdict classify_levels(const std::vector<double>& level_sups, double rho);

/// Uniform scan angles joined with the measure's distinguished directions
/// (ray angle, planar atom arguments, weight-point angles); sorted, deduped.
std::vector<double> scan_angles(const PlanarMeasure& nu, int n_zeta, double angle_offset);

/// Embedding test for the Hardy space: scans ν(S(ζ,h))/h.
ScanReport h2_box_sup(const PlanarMeasure& nu, const BoxScanConfig& cfg);

/// Embedding test for D(μ) by reduction: the same scan applied to the measure
/// Π |z - λ_j|² dν over the atoms of μ.
ScanReport dmu_carleson_test(const PlanarMeasure& nu, const AtomicBoundaryMeasure& mu,
                             const BoxScanConfig& cfg);

/// Box scan normalized by h^α for α in (0, 1], and by 1/log(e/h) for α = 0.
ScanReport alpha_carleson_sup(const PlanarMeasure& nu, double alpha, const BoxScanConfig& cfg);

struct RktSample {
    Complex w;
    double ratio = 0.0;
};

struct RktResult {
    double sup = 0.0;
    std::vector<RktSample> samples;
};

struct RktLevelReport {
    double sup = 0.0;
    std::vector<int> levels;
    std::vector<double> level_sups;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<RktSample> witnesses;
};

/// Ratio engine for ∫ |k_w|² dν / ‖k_w‖²_μ: closed-form kernels for one-atom
/// μ, Gram-truncated kernels otherwise. One Cholesky factorization and one
/// kernel solve per distinct w are shared across measures and scans; queries
/// after construction are safe from concurrent threads.
class RktEngine {
public:
    RktEngine(const AtomicBoundaryMeasure& mu, int truncation_degree);

    const AtomicBoundaryMeasure& measure() const;
    int truncation_degree() const;

    double ratio(const PlanarMeasure& nu, Complex w) const;
    RktResult scan(const PlanarMeasure& nu, const std::vector<Complex>& w_grid) const;

    /// Radial grid w = (1 - 2^{-k}) e^{iθ} over scan angles of ν joined with
    /// the atom directions of μ; per-level sups classified like a box scan.
    RktLevelReport levels(const PlanarMeasure& nu, const BoxScanConfig& cfg) const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

/// Max over the grid of the kernel embedding ratio, one-shot.
RktResult rkt_scan(const PlanarMeasure& nu, const AtomicBoundaryMeasure& mu,
                   const std::vector<Complex>& w_grid, int N);

double rkt_sup(const PlanarMeasure& nu, const AtomicBoundaryMeasure& mu,
               const std::vector<Complex>& w_grid, int N);

/// Kernel embedding ratio along w = (1 - h) ζ for each listed h; ζ must avoid
/// every atom direction of μ (AtomDirection otherwise).
std::vector<double> compactness_profile(const PlanarMeasure& nu, const AtomicBoundaryMeasure& mu,
                                        const BoundaryPoint& zeta, const std::vector<double>& h_levels);

/// 4^{n-1} h² ‖ν‖: upper bound for the Π-weighted box mass at an atom
/// direction, n being the atom count.
double trivial_box_bound(std::size_t n_atoms, double h, double nu_total_mass);

} // namespace dmu
