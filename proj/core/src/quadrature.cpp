#include "dmu/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stack>

#include "dmu/errors.hpp"

namespace dmu {

Quad1D gauss_legendre(int n) {
    if (n < 1) throw InputError("gauss_legendre: need at least one node");
    Quad1D q;
    q.nodes.resize(static_cast<std::size_t>(n));
    q.weights.resize(static_cast<std::size_t>(n));
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double deriv = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p_cur = 1.0;
            double p_prev = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p_old = p_prev;
                p_prev = p_cur;
                p_cur = ((2.0 * j + 1.0) * x * p_prev - j * p_old) / (j + 1.0);
            }
            deriv = n * (x * p_cur - p_prev) / (x * x - 1.0);
            const double dx = p_cur / deriv;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        q.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        q.nodes[static_cast<std::size_t>(i)] = -x;
        const double w = 2.0 / ((1.0 - x * x) * deriv * deriv);
        q.weights[static_cast<std::size_t>(i)] = w;
        q.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return q;
}

Quad1D gauss_legendre(int n, double a, double b) {
    Quad1D q = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (std::size_t k = 0; k < q.nodes.size(); ++k) {
        q.nodes[k] = mid + half * q.nodes[k];
        q.weights[k] *= half;
    }
    return q;
}

namespace {

double apply_rule(const Quad1D& rule, const std::function<double(double)>& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k)
        s += rule.weights[k] * f(mid + half * rule.nodes[k]);
    return s * half;
}

} // namespace

IntegralResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  double rel_tol, double abs_tol, int max_intervals) {
    const Quad1D rule = gauss_legendre(15);

    struct Interval {
        double a, b, whole, tol;
    };
    const double coarse = apply_rule(rule, f, a, b);
    const double scale = std::max(std::abs(coarse), 1.0);
    std::stack<Interval> work;
    work.push({a, b, coarse, std::max(abs_tol, rel_tol * scale)});

    double total = 0.0;
    double err = 0.0;
    int used = 1;
    while (!work.empty()) {
        const Interval iv = work.top();
        work.pop();
        const double mid = 0.5 * (iv.a + iv.b);
        const double left = apply_rule(rule, f, iv.a, mid);
        const double right = apply_rule(rule, f, mid, iv.b);
        const double refined = left + right;
        const double defect = std::abs(refined - iv.whole);
        if (defect <= iv.tol || (iv.b - iv.a) < 1e-14 * (b - a)) {
            total += refined;
            err += defect;
            continue;
        }
        used += 2;
        if (used > max_intervals)
            throw QuadratureNotConverged(total + refined, defect);
        work.push({iv.a, mid, left, 0.5 * iv.tol});
        work.push({mid, iv.b, right, 0.5 * iv.tol});
    }
    return {total, err};
}

double DiskQuadrature::integrate(const std::function<double(Complex)>& f) const {
    double s = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) s += weights[k] * f(nodes[k]);
    return s;
}

DiskQuadrature disk_quadrature(int n_r, int n_theta) {
    if (n_r < 4 || n_theta < 4) throw InputError("disk_quadrature: need n_r, n_theta >= 4");
    const Quad1D radial = gauss_legendre(n_r, 0.0, 1.0);
    DiskQuadrature q;
    q.n_radial = n_r;
    q.n_angular = n_theta;
    q.nodes.reserve(static_cast<std::size_t>(n_r) * static_cast<std::size_t>(n_theta));
    q.weights.reserve(q.nodes.capacity());
    const double dtheta = 2.0 * std::numbers::pi / n_theta;
    for (int i = 0; i < n_r; ++i) {
        const double r = radial.nodes[static_cast<std::size_t>(i)];
        const double wr = radial.weights[static_cast<std::size_t>(i)] * 2.0 * r / n_theta;
        for (int j = 0; j < n_theta; ++j) {
            const double th = dtheta * j;
            q.nodes.push_back(Complex{r * std::cos(th), r * std::sin(th)});
            q.weights.push_back(wr);
        }
    }
    return q;
}

} // namespace dmu
