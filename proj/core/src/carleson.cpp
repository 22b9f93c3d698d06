#include "dmu/carleson.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>

#include "dmu/errors.hpp"
#include "dmu/tolerances.hpp"

namespace dmu {

namespace {

void validate_config(const BoxScanConfig& cfg) {
    if (cfg.n_zeta < 8) throw InputError("scan config: n_zeta must be at least 8");
    if (cfg.k_min < 1 || cfg.k_max > 40 || cfg.k_min > cfg.k_max)
        throw InputError("scan config: need 1 <= k_min <= k_max <= 40");
    if (!(cfg.rho > 1.0)) throw InputError("scan config: rho must exceed 1");
}

void sort_dedupe_angles(std::vector<double>& angles) {
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end(),
                             [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                 angles.end());
}

ScanReport box_scan(const PlanarMeasure& nu, const BoxScanConfig& cfg,
                    const std::function<double(double)>& normalizer) {
    validate_config(cfg);
    const auto angles = scan_angles(nu, cfg.n_zeta, cfg.angle_offset);
    ScanReport rep;
    for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
        const double h = std::ldexp(1.0, -k);
        double best = -1.0;
        double best_angle = 0.0;
        for (const double th : angles) {
            const double mass = box_mass(nu, CarlesonBox(BoundaryPoint(th), h));
            const double ratio = mass / normalizer(h);
            if (ratio > best) {
                best = ratio;
                best_angle = th;
            }
        }
        rep.levels.push_back(k);
        rep.level_sups.push_back(best);
        rep.witnesses.push_back({best_angle, h, best});
    }
    rep.sup_ratio = *std::max_element(rep.level_sups.begin(), rep.level_sups.end());
    rep.verdict = classify_levels(rep.level_sups, cfg.rho);
    return rep;
}

Poly truncate_poly(const Poly& p, int degree) {
    if (p.degree() <= degree) return p;
    std::vector<Complex> c(p.coeffs.begin(), p.coeffs.begin() + degree + 1);
    Poly out{std::move(c)};
    return out.normalize();
}

/// ∫ |k_w|² against an area-family ν for the explicit one-atom kernel, by
/// streaming the kernel coefficient recurrence through the diagonal monomial
/// moments; the symbolic weight polynomial rides along as a convolution.
double area_abs2_one_atom(const PlanarMeasure& nu, const OneAtomKernelModel& model, Complex w) {
    const Poly A = nu.weight_poly();
    const std::size_t d = A.coeffs.size();
    const Complex tau = std::conj(model.lambda.point());
    const Complex wb = std::conj(w);
    const Complex bw = std::conj(b_lambda(model, w)) * (1.0 - model.a0);

    std::vector<Complex> ring(d, Complex{0.0, 0.0});
    Complex s = tau;
    Complex wb_pow = wb;
    double a0_pow = model.a0;
    Complex tau_pow = tau * tau;

    double sum = 0.0;
    double recent_max = 0.0;
    constexpr std::size_t check_every = 256;
    constexpr std::size_t cap = 3000000;
    for (std::size_t a = 0; a < cap; ++a) {
        Complex c;
        if (a == 0) {
            c = Complex{1.0, 0.0};
        } else {
            c = wb_pow - bw * s;
            s = wb * s + a0_pow * tau_pow;
            wb_pow *= wb;
            a0_pow *= model.a0;
            tau_pow *= tau;
        }
        ring[a % d] = c;
        Complex q{0.0, 0.0};
        const std::size_t reach = std::min(a + 1, d);
        for (std::size_t j = 0; j < reach; ++j) q += A.coeffs[j] * ring[(a - j) % d];
        const double term = std::norm(q) / (static_cast<double>(a) + 1.0);
        sum += term;
        recent_max = std::max(recent_max, term);
        if ((a + 1) % check_every == 0) {
            if (a + 1 >= 2 * d + 64 && recent_max <= 1e-17 * (1.0 + sum)) break;
            recent_max = 0.0;
        }
    }
    return nu.scale * sum;
}

} // namespace

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Bounded: return "bounded";
        case Verdict::Diverging: return "diverging";
        case Verdict::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Verdict classify_levels(const std::vector<double>& level_sups, double rho) {
    const std::size_t m = level_sups.size();
    if (m < 2) return Verdict::Inconclusive;
    const auto increased = [&](std::size_t k) {
        return level_sups[k + 1] > level_sups[k] * (1.0 + tol::scan_tie);
    };
    std::size_t trail = 0;
    while (trail < m - 1 && increased(m - 2 - trail)) ++trail;
    if (trail >= 3 && level_sups[m - 1] >= rho * level_sups[m - 4]) return Verdict::Diverging;
    if (trail == 0) return Verdict::Bounded;
    if (level_sups[m - 1] < rho * level_sups[m - 1 - trail]) return Verdict::Bounded;
    return Verdict::Inconclusive;
}

std::vector<double> scan_angles(const PlanarMeasure& nu, int n_zeta, double angle_offset) {
    if (n_zeta < 8) throw InputError("scan grid: n_zeta must be at least 8");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n_zeta) + nu.atoms.size() + nu.weight_points.size() + 1);
    const double step = 2.0 * std::numbers::pi / n_zeta;
    for (int i = 0; i < n_zeta; ++i) out.push_back(BoundaryPoint(angle_offset + step * i).angle);
    if (nu.family == PlanarFamily::RadialPower) out.push_back(nu.ray_angle);
    if (nu.family == PlanarFamily::Atoms)
        for (const auto& a : nu.atoms)
            if (std::abs(a.z) > 0.0) out.push_back(BoundaryPoint(std::arg(a.z)).angle);
    for (const auto& lam : nu.weight_points) out.push_back(lam.angle);
    sort_dedupe_angles(out);
    return out;
}

ScanReport h2_box_sup(const PlanarMeasure& nu, const BoxScanConfig& cfg) {
    return box_scan(nu, cfg, [](double h) { return h; });
}

ScanReport dmu_carleson_test(const PlanarMeasure& nu, const AtomicBoundaryMeasure& mu,
                             const BoxScanConfig& cfg) {
    return h2_box_sup(weight_by_product(nu, mu.points()), cfg);
}

ScanReport alpha_carleson_sup(const PlanarMeasure& nu, double alpha, const BoxScanConfig& cfg) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw InputError("alpha-Carleson scan: alpha must lie in [0, 1]");
    if (alpha == 0.0)
        return box_scan(nu, cfg, [](double h) { return 1.0 / std::log(std::numbers::e / h); });
    return box_scan(nu, cfg, [alpha](double h) { return std::pow(h, alpha); });
}

struct RktEngine::Impl {
    AtomicBoundaryMeasure mu;
    int degree = 0;
    std::optional<OneAtomKernelModel> one_atom;
    std::optional<TruncatedKernelSolver> solver;
    mutable std::mutex cache_mutex;
    mutable std::map<std::pair<double, double>, TruncatedKernel> cache;

    explicit Impl(const AtomicBoundaryMeasure& mu_) : mu(mu_) {}

    TruncatedKernel kernel_at(Complex w) const {
        const std::pair<double, double> key{w.real(), w.imag()};
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, solver->solve(w)).first;
        return it->second;
    }
};

RktEngine::RktEngine(const AtomicBoundaryMeasure& mu, int truncation_degree)
    : impl_(std::make_shared<Impl>(mu)) {
    impl_->degree = truncation_degree;
    if (mu.size() == 1) {
        impl_->one_atom.emplace(mu.atoms[0].point, mu.atoms[0].mass);
    } else {
        impl_->solver.emplace(mu, truncation_degree);
    }
}

const AtomicBoundaryMeasure& RktEngine::measure() const { return impl_->mu; }

int RktEngine::truncation_degree() const { return impl_->degree; }

double RktEngine::ratio(const PlanarMeasure& nu, Complex w) const {
    if (impl_->one_atom) {
        const auto& model = *impl_->one_atom;
        const double denom = std::real(one_atom_kernel(model, w, w));
        double num = 0.0;
        switch (nu.family) {
            case PlanarFamily::Atoms:
                for (const auto& a : nu.atoms)
                    num += a.mass * nu.weight_at(a.z) * std::norm(one_atom_kernel(model, w, a.z));
                break;
            case PlanarFamily::RadialPower:
                num = integrate(nu, [&](Complex z) { return std::norm(one_atom_kernel(model, w, z)); });
                break;
            case PlanarFamily::Area:
                num = area_abs2_one_atom(nu, model, w);
                break;
        }
        return num / denom;
    }
    const TruncatedKernel kernel = impl_->kernel_at(w);
    const double denom = kernel.norm_sq();
    double num = 0.0;
    if (nu.family == PlanarFamily::Atoms) {
        for (const auto& a : nu.atoms)
            num += a.mass * nu.weight_at(a.z) * std::norm(kernel.coeffs.eval(a.z));
    } else {
        const int effective = std::min(impl_->degree, default_kernel_degree(std::abs(w), 1e-6));
        num = integrate_abs2_poly(nu, truncate_poly(kernel.coeffs, effective));
    }
    return num / denom;
}

RktResult RktEngine::scan(const PlanarMeasure& nu, const std::vector<Complex>& w_grid) const {
    RktResult res;
    res.samples.reserve(w_grid.size());
    for (const Complex w : w_grid) {
        const double r = ratio(nu, w);
        res.samples.push_back({w, r});
        res.sup = std::max(res.sup, r);
    }
    return res;
}

RktLevelReport RktEngine::levels(const PlanarMeasure& nu, const BoxScanConfig& cfg) const {
    validate_config(cfg);
    std::vector<double> angles = scan_angles(nu, cfg.n_zeta, cfg.angle_offset);
    for (const auto& a : impl_->mu.atoms) angles.push_back(a.point.angle);
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end(),
                             [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                 angles.end());

    RktLevelReport rep;
    for (int k = cfg.k_min; k <= cfg.k_max; ++k) {
        const double r = 1.0 - std::ldexp(1.0, -k);
        double best = -1.0;
        Complex best_w{0.0, 0.0};
        for (const double th : angles) {
            const Complex w = std::polar(r, th);
            const double value = ratio(nu, w);
            if (value > best) {
                best = value;
                best_w = w;
            }
        }
        rep.levels.push_back(k);
        rep.level_sups.push_back(best);
        rep.witnesses.push_back({best_w, best});
    }
    rep.sup = *std::max_element(rep.level_sups.begin(), rep.level_sups.end());
    rep.verdict = classify_levels(rep.level_sups, cfg.rho);
    return rep;
}

RktResult rkt_scan(const PlanarMeasure& nu, const AtomicBoundaryMeasure& mu,
                   const std::vector<Complex>& w_grid, int N) {
    return RktEngine(mu, N).scan(nu, w_grid);
}

double rkt_sup(const PlanarMeasure& nu, const AtomicBoundaryMeasure& mu,
               const std::vector<Complex>& w_grid, int N) {
    return rkt_scan(nu, mu, w_grid, N).sup;
}

std::vector<double> compactness_profile(const PlanarMeasure& nu, const AtomicBoundaryMeasure& mu,
                                        const BoundaryPoint& zeta, const std::vector<double>& h_levels) {
    for (const auto& a : mu.atoms)
        if (std::abs(zeta.point() - a.point.point()) < tol::node_separation)
            throw AtomDirection(zeta.angle);
    if (h_levels.empty()) throw InputError("compactness profile: need at least one h level");
    double h_min = 1.0;
    for (const double h : h_levels) {
        if (!(h > 0.0 && h < 1.0)) throw InputError("compactness profile: h levels must lie in (0, 1)");
        h_min = std::min(h_min, h);
    }
    int degree = 0;
    if (mu.size() > 1)
        degree = std::min(default_kernel_degree(1.0 - h_min, 1e-4), 3000);
    const RktEngine engine(mu, degree);
    std::vector<double> profile;
    profile.reserve(h_levels.size());
    for (const double h : h_levels) profile.push_back(engine.ratio(nu, (1.0 - h) * zeta.point()));
    return profile;
}

double trivial_box_bound(std::size_t n_atoms, double h, double nu_total_mass) {
    if (n_atoms == 0) throw InputError("trivial box bound: need at least one atom");
    return std::pow(4.0, static_cast<double>(n_atoms - 1)) * h * h * nu_total_mass;
}

} // namespace dmu
