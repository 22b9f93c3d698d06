#pragma once

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "dmu/measures.hpp"

namespace testutil {

constexpr double kPi = std::numbers::pi;

inline dmu::Poly poly(std::vector<dmu::Complex> c) { return dmu::Poly{std::move(c)}; }

inline dmu::AtomicBoundaryMeasure delta(double angle, double mass = 1.0) {
    return dmu::AtomicBoundaryMeasure({{dmu::BoundaryPoint(angle), mass}});
}

inline dmu::AtomicBoundaryMeasure two_atoms(double a1, double m1, double a2, double m2) {
    return dmu::AtomicBoundaryMeasure(
        {{dmu::BoundaryPoint(a1), m1}, {dmu::BoundaryPoint(a2), m2}});
}

/// Portable deterministic sampler: identical streams on every platform.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : gen_(seed) {}

    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
    double range(double a, double b) { return a + (b - a) * unit(); }
    dmu::Complex coeff() { return {range(-1.0, 1.0), range(-1.0, 1.0)}; }

    dmu::Complex in_disk(double r_max) {
        for (;;) {
            const dmu::Complex z{range(-1.0, 1.0), range(-1.0, 1.0)};
            if (std::abs(z) < 1.0) return r_max * z;
        }
    }

    int index(int n) { return std::min(n - 1, static_cast<int>(unit() * static_cast<double>(n))); }

    dmu::Poly poly(int max_deg) {
        const int d = index(max_deg + 1);
        std::vector<dmu::Complex> c(static_cast<std::size_t>(d) + 1);
        for (auto& x : c) x = coeff();
        return dmu::Poly{std::move(c)};
    }

    dmu::AtomicBoundaryMeasure measure(int max_atoms) { return measure_n(1 + index(max_atoms)); }

    dmu::AtomicBoundaryMeasure measure_n(int n) {
        std::vector<double> angles;
        while (static_cast<int>(angles.size()) < n) {
            const double a = range(0.0, 2.0 * kPi);
            bool ok = true;
            for (double b : angles)
                ok = ok && std::abs(std::polar(1.0, a) - std::polar(1.0, b)) > 0.1;
            if (ok) angles.push_back(a);
        }
        std::vector<dmu::AtomicBoundaryMeasure::Atom> atoms;
        for (double a : angles) atoms.push_back({dmu::BoundaryPoint(a), range(0.2, 2.0)});
        return dmu::AtomicBoundaryMeasure(std::move(atoms));
    }

private:
    std::mt19937_64 gen_;
};

} // namespace testutil
