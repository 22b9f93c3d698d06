#include "dmu/kernels.hpp"

#include <cmath>

#include <Eigen/Dense>

#include "dmu/errors.hpp"

namespace dmu {

double solve_a0(double alpha) {
    if (!(alpha > 0.0)) throw NonPositiveAlpha(alpha);
    const double s = 2.0 + alpha;
    return 0.5 * (s - std::sqrt(s * s - 4.0));
}

OneAtomKernelModel::OneAtomKernelModel(BoundaryPoint lambda_, double alpha_)
    : lambda(lambda_), alpha(alpha_), a0(solve_a0(alpha_)) {}

Complex b_lambda(const OneAtomKernelModel& model, Complex z) {
    if (std::abs(z) > 1.0 + 1e-12) throw OutsideDisk(z);
    const Complex u = std::conj(model.lambda.point()) * z;
    return (1.0 - model.a0) * u / (1.0 - model.a0 * u);
}

Complex one_atom_kernel(const OneAtomKernelModel& model, Complex w, Complex z) {
    if (std::abs(w) >= 1.0) throw OutsideDisk(w);
    if (std::abs(z) >= 1.0) throw OutsideDisk(z);
    return (1.0 - std::conj(b_lambda(model, w)) * b_lambda(model, z)) / (1.0 - std::conj(w) * z);
}

Poly one_atom_kernel_poly(const OneAtomKernelModel& model, Complex w, int degree) {
    if (std::abs(w) >= 1.0) throw OutsideDisk(w);
    if (degree < 0) throw InputError("one_atom_kernel_poly: degree must be nonnegative");
    const Complex tau = std::conj(model.lambda.point());
    const Complex wb = std::conj(w);
    const Complex bw = std::conj(b_lambda(model, w)) * (1.0 - model.a0);
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1);
    c[0] = Complex{1.0, 0.0};
    Complex s = tau;
    Complex wb_pow = wb;
    double a0_pow = model.a0;
    Complex tau_pow = tau * tau;
    for (int k = 1; k <= degree; ++k) {
        c[static_cast<std::size_t>(k)] = wb_pow - bw * s;
        s = wb * s + a0_pow * tau_pow;
        wb_pow *= wb;
        a0_pow *= model.a0;
        tau_pow *= tau;
    }
    Poly out{std::move(c)};
    return out.normalize();
}

struct TruncatedKernelSolver::Impl {
    int N = 0;
    Eigen::LLT<Eigen::MatrixXcd> llt;
};

TruncatedKernelSolver::TruncatedKernelSolver(const AtomicBoundaryMeasure& mu, int N) {
    if (N < 0) throw InputError("truncated kernel degree must be nonnegative");
    auto impl = std::make_shared<Impl>();
    impl->N = N;
    {
        const GramMatrix G = gram_matrix(mu, N);
        Eigen::MatrixXcd M(N + 1, N + 1);
        for (int m = 0; m <= N; ++m)
            for (int k = 0; k <= N; ++k) M(m, k) = G.at(m, k);
        impl->llt.compute(M);
    }
    if (impl->llt.info() != Eigen::Success)
        throw SolveFailed("Gram factorization failed at degree " + std::to_string(N));
    impl_ = std::move(impl);
}

int TruncatedKernelSolver::degree() const { return impl_->N; }

TruncatedKernel TruncatedKernelSolver::solve(Complex w) const {
    if (std::abs(w) >= 1.0) throw OutsideDisk(w);
    const int N = impl_->N;
    Eigen::VectorXcd t(N + 1);
    Complex p{1.0, 0.0};
    for (int m = 0; m <= N; ++m) {
        t(m) = p;
        p *= w;
    }
    const Eigen::VectorXcd x = impl_->llt.solve(t);
    std::vector<Complex> c(static_cast<std::size_t>(N) + 1);
    for (int k = 0; k <= N; ++k) c[static_cast<std::size_t>(k)] = std::conj(x(k));
    TruncatedKernel out;
    out.w = w;
    out.degree = N;
    out.coeffs = Poly{std::move(c)}.normalize();
    return out;
}

TruncatedKernel truncated_kernel(const AtomicBoundaryMeasure& mu, Complex w, int N) {
    return TruncatedKernelSolver(mu, N).solve(w);
}

int default_kernel_degree(double r_max, double tol) {
    if (!(r_max >= 0.0 && r_max < 1.0)) throw InputError("kernel radius must lie in [0, 1)");
    if (r_max < 1e-8) return 20;
    return static_cast<int>(std::ceil(std::log(tol) / std::log(r_max))) + 20;
}

double kernel_bound_margin(const OneAtomKernelModel& model, Complex z) {
    if (std::abs(z) >= 1.0) throw OutsideDisk(z);
    const Complex lam = model.lambda.point();
    const double contraction = 1.0 - std::norm(b_lambda(model, z));
    return contraction - model.a0 * std::norm(z - lam) / std::norm(lam - model.a0 * z);
}

double angular_ratio(const OneAtomKernelModel& model, Complex w) {
    if (std::abs(w) >= 1.0) throw OutsideDisk(w);
    return (1.0 - std::norm(w)) / (1.0 - std::norm(b_lambda(model, w)));
}

Complex weighted_dirichlet_kernel(double alpha, Complex w, Complex z) {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw InputError("weighted kernel exponent must lie in [0, 1]");
    if (std::abs(w) >= 1.0) throw OutsideDisk(w);
    if (std::abs(z) >= 1.0) throw OutsideDisk(z);
    const Complex u = std::conj(w) * z;
    if (alpha > 0.0) return std::pow(1.0 - u, -alpha);
    if (std::abs(u) < 0.25) {
        Complex s{0.0, 0.0};
        Complex up{1.0, 0.0};
        for (int n = 0; n < 20; ++n) {
            s += up / (static_cast<double>(n) + 1.0);
            up *= u;
        }
        return s;
    }
    return -std::log(1.0 - u) / u;
}

} // namespace dmu
