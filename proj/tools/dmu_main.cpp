#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dmu/carleson.hpp"
#include "dmu/dirichlet.hpp"
#include "dmu/errors.hpp"
#include "dmu/json_io.hpp"
#include "dmu/kernels.hpp"
#include "dmu/selfcheck.hpp"

namespace {

using dmu::Complex;
using nlohmann::json;

std::string fmt6(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string fmt6(Complex z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
    return buf;
}

Complex parse_complex_arg(const std::string& s) {
    double re = 0.0;
    double im = 0.0;
    char tail = 0;
    if (std::sscanf(s.c_str(), " %lf , %lf %c", &re, &im, &tail) == 2) return {re, im};
    if (std::sscanf(s.c_str(), " %lf %c", &re, &tail) == 1) return {re, 0.0};
    throw dmu::InputError("cannot parse complex value '" + s + "'; expected re or re,im");
}

dmu::AtomicBoundaryMeasure load_mu(const std::string& path) {
    return dmu::atomic_measure_from_json(dmu::load_json_file(path));
}

dmu::PlanarMeasure load_nu(const std::string& path) {
    return dmu::planar_measure_from_json(dmu::load_json_file(path));
}

dmu::Poly load_poly(const std::string& path) {
    return dmu::poly_from_json(dmu::load_json_file(path));
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

struct ScanFlags {
    int n_zeta = 64;
    int k_min = 1;
    int k_max = 12;
    double rho = 1.5;
    double angle_offset = 0.0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--n-zeta", n_zeta, "Number of uniform scan directions");
        cmd->add_option("--k-min", k_min, "Smallest dyadic level (h = 2^-k)");
        cmd->add_option("--k-max", k_max, "Largest dyadic level");
        cmd->add_option("--rho", rho, "Divergence growth factor");
        cmd->add_option("--angle-offset", angle_offset, "Rotation of the uniform angle grid");
    }

    dmu::BoxScanConfig config() const { return {n_zeta, k_min, k_max, rho, angle_offset}; }
};

void print_scan_text(const dmu::ScanReport& rep) {
    std::cout << "verdict   " << dmu::to_string(rep.verdict) << "\n";
    std::cout << "sup ratio " << fmt6(rep.sup_ratio) << "\n";
    std::cout << "level  h            sup_ratio\n";
    for (std::size_t i = 0; i < rep.levels.size(); ++i)
        std::printf("%-6d %-12.6g %.6g\n", rep.levels[i], std::ldexp(1.0, -rep.levels[i]),
                    rep.level_sups[i]);
    for (std::size_t i = 0; i < rep.witnesses.size() && i < 3; ++i)
        std::cout << "witness   zeta_angle " << fmt6(rep.witnesses[i].zeta_angle) << "  h "
                  << fmt6(rep.witnesses[i].h) << "  ratio " << fmt6(rep.witnesses[i].ratio)
                  << "\n";
}

void print_rkt_text(const dmu::RktLevelReport& rep) {
    std::cout << "verdict   " << dmu::to_string(rep.verdict) << "\n";
    std::cout << "sup ratio " << fmt6(rep.sup) << "\n";
    std::cout << "level  h            sup_ratio\n";
    for (std::size_t i = 0; i < rep.levels.size(); ++i)
        std::printf("%-6d %-12.6g %.6g\n", rep.levels[i], std::ldexp(1.0, -rep.levels[i]),
                    rep.level_sups[i]);
    for (std::size_t i = 0; i < rep.witnesses.size() && i < 3; ++i)
        std::cout << "witness   w " << fmt6(rep.witnesses[i].w) << "  ratio "
                  << fmt6(rep.witnesses[i].ratio) << "\n";
}

int run_norm(const std::string& mu_path, const std::string& f_path, const std::string& format) {
    const auto mu = load_mu(mu_path);
    const auto f = load_poly(f_path);
    const double h2 = dmu::h2_norm_sq(f);
    const double d = dmu::dirichlet_mu(f, mu);
    json per_atom = json::array();
    for (const auto& a : mu.atoms)
        per_atom.push_back({{"angle", a.point.angle},
                            {"mass", a.mass},
                            {"local_dirichlet", dmu::local_dirichlet(f, a.point)}});
    if (format == "json") {
        emit_json({{"hardy_norm_sq", h2},
                   {"dirichlet_integral", d},
                   {"norm_sq", h2 + d},
                   {"per_atom", per_atom}});
    } else {
        std::cout << "hardy norm^2        " << fmt6(h2) << "\n";
        std::cout << "Dirichlet integral  " << fmt6(d) << "\n";
        std::cout << "norm^2 in D(mu)     " << fmt6(h2 + d) << "\n";
        for (const auto& a : mu.atoms)
            std::cout << "atom angle " << fmt6(a.point.angle) << " mass " << fmt6(a.mass)
                      << "  local integral "
                      << fmt6(dmu::local_dirichlet(f, a.point)) << "\n";
    }
    return 0;
}

int run_decompose(const std::string& mu_path, const std::string& f_path,
                  const std::string& format) {
    const auto mu = load_mu(mu_path);
    const auto f = load_poly(f_path);
    const auto d = dmu::decompose(f, mu);
    const dmu::Poly recon = d.p + dmu::product_of_linear_factors(mu.points()) * d.g;
    double defect = 0.0;
    for (int k = 0; k <= std::max(f.degree(), recon.degree()); ++k)
        defect = std::max(defect, std::abs(f.coeff(k) - recon.coeff(k)));
    if (format == "json") {
        emit_json({{"p", dmu::poly_to_json(d.p)},
                   {"g", dmu::poly_to_json(d.g)},
                   {"g_hardy_norm", d.g.h2_norm()},
                   {"reconstruction_error", defect}});
    } else {
        std::cout << "p degree " << d.p.degree() << "\n";
        for (int k = 0; k <= d.p.degree(); ++k)
            std::cout << "  p[" << k << "] = " << fmt6(d.p.coeff(k)) << "\n";
        std::cout << "g degree " << d.g.degree() << "\n";
        for (int k = 0; k <= d.g.degree(); ++k)
            std::cout << "  g[" << k << "] = " << fmt6(d.g.coeff(k)) << "\n";
        std::cout << "|g|_H2               " << fmt6(d.g.h2_norm()) << "\n";
        std::cout << "reconstruction error " << fmt6(defect) << "\n";
    }
    return 0;
}

int run_gram(const std::string& mu_path, int degree, const std::string& format) {
    const auto mu = load_mu(mu_path);
    const auto G = dmu::gram_matrix(mu, degree);
    if (format == "json") {
        json entries = json::array();
        for (const auto& e : G.entries) entries.push_back(dmu::complex_to_json(e));
        emit_json({{"size", G.size}, {"entries", entries}});
    } else if (format == "csv") {
        std::cout << "m,k,re,im\n";
        for (int m = 0; m < G.size; ++m)
            for (int k = 0; k < G.size; ++k) {
                const Complex e = G.at(m, k);
                std::printf("%d,%d,%.17g,%.17g\n", m, k, e.real() + 0.0, e.imag() + 0.0);
            }
    } else {
        std::cout << "Gram matrix " << G.size << " x " << G.size << " for degrees 0.."
                  << degree << "\n";
        if (G.size <= 16) {
            for (int m = 0; m < G.size; ++m) {
                for (int k = 0; k < G.size; ++k) std::cout << fmt6(G.at(m, k)) << "  ";
                std::cout << "\n";
            }
        } else {
            std::cout << "(matrix too large for text mode; use --format json or csv)\n";
        }
    }
    return 0;
}

int run_kernel_eval(const std::string& mu_path, std::optional<double> alpha,
                    const std::string& w_arg, const std::vector<std::string>& z_args,
                    int degree, int margin_grid, const std::string& format) {
    const Complex w = parse_complex_arg(w_arg);
    std::vector<Complex> zs;
    for (const auto& s : z_args) zs.push_back(parse_complex_arg(s));

    if (alpha) {
        if (!mu_path.empty())
            throw dmu::InputError("--alpha and --mu are mutually exclusive");
        json evals = json::array();
        for (const Complex z : zs) {
            const Complex v = dmu::weighted_dirichlet_kernel(*alpha, w, z);
            evals.push_back({{"z", dmu::complex_to_json(z)}, {"value", dmu::complex_to_json(v)}});
        }
        const double norm_sq = std::real(dmu::weighted_dirichlet_kernel(*alpha, w, w));
        if (format == "json") {
            emit_json({{"alpha", *alpha},
                       {"w", dmu::complex_to_json(w)},
                       {"norm_sq", norm_sq},
                       {"evaluations", evals}});
        } else {
            std::cout << "weighted kernel, alpha " << fmt6(*alpha) << "\n";
            std::cout << "|k_w|^2 " << fmt6(norm_sq) << "\n";
            for (const Complex z : zs)
                std::cout << "k_w(" << fmt6(z)
                          << ") = " << fmt6(dmu::weighted_dirichlet_kernel(*alpha, w, z)) << "\n";
        }
        return 0;
    }

    if (mu_path.empty()) throw dmu::InputError("kernel-eval needs --mu or --alpha");
    const auto mu = load_mu(mu_path);

    if (mu.size() == 1) {
        const dmu::OneAtomKernelModel model(mu.atoms[0].point, mu.atoms[0].mass);
        if (margin_grid > 0) {
            std::cout << "x,y,margin\n";
            for (int i = 0; i < margin_grid; ++i)
                for (int j = 0; j < margin_grid; ++j) {
                    const double x = -0.995 + 1.99 * i / (margin_grid - 1.0);
                    const double y = -0.995 + 1.99 * j / (margin_grid - 1.0);
                    const Complex z{x, y};
                    if (std::abs(z) >= 0.999) continue;
                    std::printf("%.17g,%.17g,%.17g\n", x, y,
                                dmu::kernel_bound_margin(model, z));
                }
            return 0;
        }
        json evals = json::array();
        for (const Complex z : zs) {
            const Complex v = dmu::one_atom_kernel(model, w, z);
            evals.push_back({{"z", dmu::complex_to_json(z)}, {"value", dmu::complex_to_json(v)}});
        }
        if (format == "json") {
            emit_json({{"model", "one-atom"},
                       {"a0", model.a0},
                       {"b_w", dmu::complex_to_json(dmu::b_lambda(model, w))},
                       {"w", dmu::complex_to_json(w)},
                       {"norm_sq", std::real(dmu::one_atom_kernel(model, w, w))},
                       {"angular_ratio", dmu::angular_ratio(model, w)},
                       {"evaluations", evals}});
        } else {
            std::cout << "one-atom kernel, a0 " << fmt6(model.a0) << "\n";
            std::cout << "b(w)          " << fmt6(dmu::b_lambda(model, w)) << "\n";
            std::cout << "|k_w|^2       " << fmt6(std::real(dmu::one_atom_kernel(model, w, w)))
                      << "\n";
            std::cout << "angular ratio " << fmt6(dmu::angular_ratio(model, w)) << "\n";
            for (const Complex z : zs)
                std::cout << "k_w(" << fmt6(z) << ") = " << fmt6(dmu::one_atom_kernel(model, w, z))
                          << "\n";
        }
        return 0;
    }

    if (margin_grid > 0)
        throw dmu::InputError("--margin-grid needs a one-atom boundary measure");
    double r_max = std::abs(w);
    for (const Complex z : zs) r_max = std::max(r_max, std::abs(z));
    const int N = degree >= 0
                      ? degree
                      : std::min(dmu::default_kernel_degree(std::min(r_max, 0.999)), 3000);
    const dmu::TruncatedKernel kernel = dmu::truncated_kernel(mu, w, N);
    json evals = json::array();
    for (const Complex z : zs) {
        const Complex v = kernel.eval(z);
        evals.push_back({{"z", dmu::complex_to_json(z)}, {"value", dmu::complex_to_json(v)}});
    }
    if (format == "json") {
        emit_json({{"model", "gram-truncated"},
                   {"degree", N},
                   {"w", dmu::complex_to_json(w)},
                   {"norm_sq", kernel.norm_sq()},
                   {"evaluations", evals}});
    } else {
        std::cout << "Gram-truncated kernel, degree " << N << "\n";
        std::cout << "|k_w|^2 " << fmt6(kernel.norm_sq()) << "\n";
        for (const Complex z : zs)
            std::cout << "k_w(" << fmt6(z) << ") = " << fmt6(kernel.eval(z)) << "\n";
    }
    return 0;
}

int run_carleson(const std::string& nu_path, const std::string& mu_path, const ScanFlags& flags,
                 const std::string& format) {
    const auto nu = load_nu(nu_path);
    const dmu::ScanReport rep = mu_path.empty()
                                    ? dmu::h2_box_sup(nu, flags.config())
                                    : dmu::dmu_carleson_test(nu, load_mu(mu_path), flags.config());
    if (format == "json")
        emit_json(dmu::scan_report_to_json(rep));
    else if (format == "csv")
        std::cout << dmu::scan_report_to_csv(rep);
    else
        print_scan_text(rep);
    return 0;
}

int run_alpha_carleson(const std::string& nu_path, double alpha, const ScanFlags& flags,
                       const std::string& format) {
    const auto nu = load_nu(nu_path);
    const dmu::ScanReport rep = dmu::alpha_carleson_sup(nu, alpha, flags.config());
    if (format == "json")
        emit_json(dmu::scan_report_to_json(rep));
    else if (format == "csv")
        std::cout << dmu::scan_report_to_csv(rep);
    else
        print_scan_text(rep);
    return 0;
}

int run_rkt(const std::string& nu_path, const std::string& mu_path, int degree,
            const ScanFlags& flags, const std::string& format) {
    const auto nu = load_nu(nu_path);
    const auto mu = load_mu(mu_path);
    int N = degree;
    if (N < 0) {
        N = mu.size() == 1 ? 0
                           : std::min(dmu::default_kernel_degree(
                                          1.0 - std::ldexp(1.0, -flags.k_max), 1e-4),
                                      3000);
    }
    const dmu::RktEngine engine(mu, N);
    const dmu::RktLevelReport rep = engine.levels(nu, flags.config());
    if (format == "json") {
        json j = dmu::rkt_report_to_json(rep);
        j["truncation_degree"] = engine.truncation_degree();
        emit_json(j);
    } else if (format == "csv") {
        std::cout << dmu::rkt_report_to_csv(rep);
    } else {
        std::cout << "truncation degree " << engine.truncation_degree()
                  << (mu.size() == 1 ? " (closed form)" : "") << "\n";
        print_rkt_text(rep);
    }
    return 0;
}

int run_compactness(const std::string& nu_path, const std::string& mu_path, double zeta_angle,
                    int k_min, int k_max, const std::string& format) {
    const auto nu = load_nu(nu_path);
    const auto mu = load_mu(mu_path);
    std::vector<double> hs;
    for (int k = k_min; k <= k_max; ++k) hs.push_back(std::ldexp(1.0, -k));
    const auto profile =
        dmu::compactness_profile(nu, mu, dmu::BoundaryPoint(zeta_angle), hs);

    json estimate = json::array();
    bool holds = true;
    for (const auto& atom : mu.atoms) {
        json rows = json::array();
        const auto sigma = dmu::weight_by_product(nu, mu.points());
        for (const double h : hs) {
            const double mass = dmu::box_mass(sigma, dmu::CarlesonBox(atom.point, h));
            const double bound = dmu::trivial_box_bound(mu.size(), h, nu.total_mass());
            holds = holds && mass <= bound;
            rows.push_back({{"h", h}, {"mass", mass}, {"bound", bound}});
        }
        estimate.push_back({{"atom_angle", atom.point.angle}, {"rows", rows}});
    }

    if (format == "json") {
        emit_json({{"zeta_angle", zeta_angle},
                   {"h", hs},
                   {"profile", profile},
                   {"decay_ratio", profile.back() / profile.front()},
                   {"trivial_estimate_holds", holds},
                   {"trivial_estimate", estimate}});
    } else if (format == "csv") {
        std::cout << "h,ratio\n";
        for (std::size_t i = 0; i < hs.size(); ++i)
            std::printf("%.17g,%.17g\n", hs[i], profile[i]);
    } else {
        std::cout << "profile at zeta angle " << fmt6(zeta_angle) << "\n";
        std::cout << "h            ratio\n";
        for (std::size_t i = 0; i < hs.size(); ++i)
            std::printf("%-12.6g %.6g\n", hs[i], profile[i]);
        std::cout << "decay ratio (last/first) " << fmt6(profile.back() / profile.front())
                  << "\n";
        std::cout << "trivial box estimate at atom directions: "
                  << (holds ? "holds" : "VIOLATED") << "\n";
    }
    return 0;
}

int run_verify(std::uint64_t seed, bool full, const std::string& format) {
    dmu::VerifyOptions opts;
    opts.seed = seed;
    opts.full = full;
    const auto results = dmu::verify_suite(opts);
    bool all = true;
    for (const auto& r : results) all = all && r.passed;
    if (format == "json") {
        json list = json::array();
        for (const auto& r : results)
            list.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        emit_json({{"seed", seed}, {"full", full}, {"all_passed", all}, {"results", list}});
    } else {
        for (const auto& r : results)
            std::printf("%s  %-32s %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(),
                        r.detail.c_str());
        std::size_t passed = 0;
        for (const auto& r : results) passed += r.passed ? 1 : 0;
        std::cout << passed << "/" << results.size() << " properties passed, seed " << seed
                  << (full ? ", full agreement sweep" : "") << "\n";
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dirichlet-type space toolkit: norms, decompositions, reproducing kernels, "
                 "and Carleson embedding tests for finitely atomic boundary measures"};
    app.require_subcommand(1);

    std::string mu_path;
    std::string nu_path;
    std::string f_path;
    std::string format = "text";
    std::string w_arg;
    std::vector<std::string> z_args;
    std::optional<double> alpha_opt;
    double alpha_value = 0.0;
    double zeta_angle = 0.0;
    int degree = -1;
    int gram_degree = 8;
    int margin_grid = 0;
    int k_min = 1;
    int k_max = 14;
    std::uint64_t seed = dmu::tol::default_seed;
    bool full = false;
    ScanFlags box_flags;
    ScanFlags alpha_flags;
    ScanFlags rkt_flags;
    rkt_flags.n_zeta = 16;
    rkt_flags.k_max = 8;

    const auto add_format = [&format](CLI::App* cmd, bool with_csv) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember(with_csv ? std::vector<std::string>{"text", "json", "csv"}
                                           : std::vector<std::string>{"text", "json"}));
    };

    auto* norm = app.add_subcommand("norm", "Norm and Dirichlet integral of a polynomial");
    norm->add_option("--mu", mu_path, "Boundary measure JSON file")->required();
    norm->add_option("--f", f_path, "Polynomial JSON file")->required();
    add_format(norm, false);

    auto* dec = app.add_subcommand("decompose", "Split f into interpolant plus divisible part");
    dec->add_option("--mu", mu_path, "Boundary measure JSON file")->required();
    dec->add_option("--f", f_path, "Polynomial JSON file")->required();
    add_format(dec, false);

    auto* gram = app.add_subcommand("gram", "Monomial Gram matrix of D(mu)");
    gram->add_option("--mu", mu_path, "Boundary measure JSON file")->required();
    gram->add_option("--degree", gram_degree, "Largest monomial degree")->check(CLI::Range(0, 4000));
    add_format(gram, true);

    auto* kernel = app.add_subcommand("kernel-eval", "Evaluate reproducing kernels");
    kernel->add_option("--mu", mu_path, "Boundary measure JSON file");
    kernel->add_option("--alpha", alpha_value, "Weighted-space exponent in [0, 1] instead of --mu");
    kernel->add_option("--w", w_arg, "Kernel base point (re or re,im)")->required();
    kernel->add_option("--z", z_args, "Evaluation points (repeatable)");
    kernel->add_option("--degree", degree, "Truncation degree override for multi-atom measures");
    kernel->add_option("--margin-grid", margin_grid,
                       "Emit CSV x,y,margin over an n-by-n disk grid (one-atom measures)");
    add_format(kernel, true);

    auto* car = app.add_subcommand("carleson", "Dyadic Carleson box scan");
    car->add_option("--nu", nu_path, "Planar measure JSON file")->required();
    car->add_option("--mu", mu_path, "Optional boundary measure: test the D(mu) embedding");
    box_flags.attach(car);
    add_format(car, true);

    auto* acar = app.add_subcommand("alpha-carleson", "Box scan normalized by h^alpha");
    acar->add_option("--nu", nu_path, "Planar measure JSON file")->required();
    acar->add_option("--alpha", alpha_value, "Normalization exponent in [0, 1]")->required();
    alpha_flags.attach(acar);
    add_format(acar, true);

    auto* rkt = app.add_subcommand("rkt", "Reproducing-kernel embedding ratio scan");
    rkt->add_option("--nu", nu_path, "Planar measure JSON file")->required();
    rkt->add_option("--mu", mu_path, "Boundary measure JSON file")->required();
    rkt->add_option("--degree", degree, "Truncation degree override");
    rkt_flags.attach(rkt);
    add_format(rkt, true);

    auto* comp = app.add_subcommand("compactness", "Kernel ratio profile along a radius");
    comp->add_option("--nu", nu_path, "Planar measure JSON file")->required();
    comp->add_option("--mu", mu_path, "Boundary measure JSON file")->required();
    comp->add_option("--zeta", zeta_angle, "Boundary direction angle (radians)")->required();
    comp->add_option("--k-min", k_min, "Smallest dyadic level");
    comp->add_option("--k-max", k_max, "Largest dyadic level");
    add_format(comp, true);

    auto* verify = app.add_subcommand("verify", "Run the property suite");
    verify->add_option("--seed", seed, "Sampling seed");
    verify->add_flag("--full", full, "Run the full 36-pair embedding agreement sweep");
    add_format(verify, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (kernel->parsed() || acar->parsed()) {
        if (kernel->parsed() && kernel->count("--alpha") > 0) alpha_opt = alpha_value;
    }

    try {
        if (norm->parsed()) return run_norm(mu_path, f_path, format);
        if (dec->parsed()) return run_decompose(mu_path, f_path, format);
        if (gram->parsed()) return run_gram(mu_path, gram_degree, format);
        if (kernel->parsed())
            return run_kernel_eval(mu_path, alpha_opt, w_arg, z_args, degree, margin_grid, format);
        if (car->parsed()) return run_carleson(nu_path, mu_path, box_flags, format);
        if (acar->parsed()) return run_alpha_carleson(nu_path, alpha_value, alpha_flags, format);
        if (rkt->parsed()) return run_rkt(nu_path, mu_path, degree, rkt_flags, format);
        if (comp->parsed())
            return run_compactness(nu_path, mu_path, zeta_angle, k_min, k_max, format);
        if (verify->parsed()) return run_verify(seed, full, format);
    } catch (const dmu::QuadratureNotConverged& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const dmu::SolveFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const dmu::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
