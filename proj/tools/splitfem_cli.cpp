// Command-line driver: convergence studies, benchmarks, modal analysis, mesh utilities.
#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "splitfem/splitfem.hpp"

using namespace splitfem;
using namespace splitfem::harness;
namespace fs = std::filesystem;

namespace {

struct Common {
    int order = 1;
    std::string bc = "wabe";
    std::optional<double> cd;
    double dt_safety = 0.25;
    std::string out = "out";
    std::string strategy = "factorized";
};

SolveStrategy parse_strategy(const std::string& s) {
    if (s == "factorized") return SolveStrategy::Factorized;
    if (s == "iterative") return SolveStrategy::Iterative;
    throw InvalidArgument("unknown strategy '" + s + "'");
}

void progress_line(const FlowState& s) { std::fprintf(stderr, "  t=%.4f step=%ld\n", s.t, s.step_index); }

// ---------------------------------------------------------------------------

struct ConvergeArgs {
    std::vector<std::string> cases{"iv"};
    std::vector<int> orders;
    std::vector<int> meshes{10, 20, 40};
    double t_final = 0.1;
    double mu = 0.1;
    bool periodic = false;
};

int run_converge(const Common& c, const ConvergeArgs& a) {
    RunOptions ro;
    ro.mu = a.mu;
    ro.t_final = a.t_final;
    ro.dt_safety = c.dt_safety;
    ro.periodic_x = a.periodic;
    ro.strategy = parse_strategy(c.strategy);
    for (const auto& cs : a.cases)
        for (int order : a.orders) {
            ManufacturedCase mc;
            mc.id = parse_case(cs);
            ro.order = order;
            const RateTable tab = convergence_study(mc, a.meshes, ro);
            std::printf("case %s, P%d, t=%g%s\n", cs.c_str(), order, a.t_final, a.periodic ? ", periodic x" : "");
            std::printf("%8s %10s %10s %10s %10s %10s %10s %10s %10s\n", "h", "u_l2", "v_l2", "p_l2", "div_l2", "u_inf",
                        "v_inf", "p_inf", "div_inf");
            std::vector<std::vector<double>> rows;
            for (const auto& r : tab.runs) {
                if (r.failed) {
                    std::printf("%8.5f  failed: %s\n", r.h, r.failure.c_str());
                    continue;
                }
                std::printf("%8.5f %10.3e %10.3e %10.3e %10.3e %10.3e %10.3e %10.3e %10.3e\n", r.h, r.u.l2, r.v.l2,
                            r.p.l2, r.div.l2, r.u.linf, r.v.linf, r.p.linf, r.div.linf);
                rows.push_back({r.h, r.u.l2, r.v.l2, r.p.l2, r.div.l2, r.u.linf, r.v.linf, r.p.linf, r.div.linf});
            }
            std::printf("%8s", "rate");
            for (int i = 0; i < 4; ++i) std::printf(" %10.3f", tab.l2[i]);
            for (int i = 0; i < 4; ++i) std::printf(" %10.3f", tab.linf[i]);
            std::printf("\n");
            const fs::path p = fs::path(c.out) / ("converge_case_" + cs + "_P" + std::to_string(order) + ".csv");
            write_csv(p, {"h", "u_l2", "v_l2", "p_l2", "div_l2", "u_linf", "v_linf", "p_linf", "div_linf"}, rows);
            std::printf("wrote %s\n\n", p.string().c_str());
        }
    return 0;
}

// ---------------------------------------------------------------------------

struct CavityArgs {
    int m = 64;
    double nu = 1e-3;
    double t_final = 50.0;
    double ratio = 2.389;
    bool quiet = false;
};

int run_cavity_cmd(const Common& c, const CavityArgs& a) {
    CavityConfig cfg;
    cfg.m = a.m;
    cfg.nu = a.nu;
    cfg.t_final = a.t_final;
    cfg.spacing_ratio = a.ratio;
    cfg.order = c.order;
    cfg.bc = parse_boundary_mode(c.bc);
    if (c.cd) cfg.C_d = *c.cd;
    cfg.dt_safety = c.dt_safety;
    cfg.strategy = parse_strategy(c.strategy);
    cfg.steady_window = std::min(cfg.steady_window, 0.5 * a.t_final);
    cfg.sample_interval = std::min(cfg.sample_interval, a.t_final / 10.0);
    if (!a.quiet) cfg.progress = progress_line;
    const CavityResult r = run_cavity(cfg);
    const fs::path dir(c.out);
    write_csv(dir / "cavity_u_profiles.csv", r.u_profiles);
    write_csv(dir / "cavity_v_profiles.csv", r.v_profiles);
    const Mesh mesh = cavity_mesh(cfg);
    const FiniteElementSpace Q(mesh, cfg.order, 1);
    write_vtk(dir / "cavity_final.vtk", Q, r.final_state.u_curr, r.final_state.p_curr, r.final_state.t);
    std::printf("dt=%.4g steps=%ld alpha=%.6g h_min=%.6g\n", r.dt, r.steps, r.alpha, r.h_min);
    std::printf("u(0.5, y) minimum %.4f at y=%.3f, interior minima %d, relative change over last %.3g: %.4f\n", r.u_min,
                r.y_at_min, r.interior_minima, cfg.steady_window, r.steady_change);
    std::printf("wrote %s\n", dir.string().c_str());
    return 0;
}

// ---------------------------------------------------------------------------

struct CylinderArgs {
    int refine = 4;
    double t_final = 8.0;
    double mu = 1e-3;
    double alpha = 5521.08;
    bool quiet = false;
};

int run_cylinder_cmd(const Common& c, const CylinderArgs& a) {
    CylinderConfig cfg;
    cfg.refine = a.refine;
    cfg.order = c.order;
    cfg.bc = parse_boundary_mode(c.bc);
    cfg.mu = a.mu;
    cfg.alpha = a.alpha;
    cfg.C_d = c.cd;
    cfg.t_final = a.t_final;
    cfg.dt_safety = c.dt_safety;
    cfg.strategy = parse_strategy(c.strategy);
    long n = 0;
    if (!a.quiet)
        cfg.progress = [&n](const FlowState& s) {
            if (n++ % 50 == 0) progress_line(s);
        };
    const CylinderResult r = run_cylinder(cfg);
    const fs::path dir(c.out);
    write_csv(dir / "cylinder_functionals.csv", r.series);
    const Mesh mesh = cylinder_mesh(cfg.refine);
    const FiniteElementSpace Q(mesh, cfg.order, 1);
    write_vtk(dir / "cylinder_final.vtk", Q, r.final_state.u_curr, r.final_state.p_curr, r.final_state.t);
    std::printf("dofs: velocity %d, pressure %d; h_min=%.6g alpha=%.6g C_d=%.6g dt=%.4g steps=%ld\n", r.velocity_dofs,
                r.pressure_dofs, r.h_min, r.alpha, r.C_d_coefficient, r.dt, r.steps);
    std::printf("C_d,max=%.4f at t=%.3f  C_l,max=%.4f at t=%.3f  dp(t_final)=%.4f\n", r.C_d_max, r.t_C_d_max, r.C_l_max,
                r.t_C_l_max, r.dp_final);
    std::printf("wrote %s\n", dir.string().c_str());
    return 0;
}

// ---------------------------------------------------------------------------

struct ModalArgs {
    double h = 0.1;
    double nu = 1.0;
    std::string alpha = "auto";
    std::vector<double> k{1, 5, 10, 100};
    int kmin = 1, kmax = 10;
    double smax = 100.0;
    int ns = 1000;
    double s_re = 1.0, s_im = 0.0;
    std::vector<double> hs{1e-1, 1e-2, 1e-3};
    int r = 2;
    double g0 = 1.0;
    int n_re = 400, n_im = 600;
};

double modal_alpha(const ModalArgs& a) { return a.alpha == "auto" ? 1.0 / (a.h * a.h) : std::stod(a.alpha); }

int run_qscan(const Common& c, const ModalArgs& a) {
    const auto rep = modal::verify_q_lemmas(a.h, a.nu, a.kmin, a.kmax, a.smax, a.ns);
    std::vector<std::vector<double>> rows;
    for (int k = a.kmin; k <= a.kmax; ++k)
        for (int i = 0; i <= a.ns; ++i) {
            const double s = a.smax * i / a.ns;
            const modal::ModalCase mc{a.h, static_cast<double>(k), a.nu, 0.0, s};
            rows.push_back({static_cast<double>(k), s, modal::q1(mc).real(), modal::q(mc).real(),
                            i == 0 ? std::nan("") : modal::q1_derivative(a.h, k, a.nu, s)});
        }
    const fs::path p = fs::path(c.out) / "qscan.csv";
    write_csv(p, {"k", "s", "q1", "q", "dq1_ds"}, rows);
    std::printf("samples=%ld violations=%ld max N1/N2 identity error=%.3e\n", rep.samples, rep.violations,
                rep.max_identity_error);
    for (const auto& d : rep.details) std::printf("  %s\n", d.c_str());
    std::printf("wrote %s\n", p.string().c_str());
    return rep.violations == 0 ? 0 : 1;
}

int run_detz(const Common& c, const ModalArgs& a) {
    modal::ScanGrid g;
    g.n_re = a.n_re;
    g.n_im = a.n_im;
    const double alpha = modal_alpha(a);
    int bad_total = 0;
    for (double k : a.k) {
        const modal::ModalCase mc{a.h, k, a.nu, alpha, 1.0};
        const auto sc = modal::detZ_scan(mc, g);
        const auto bad = sc.right_half_intersections();
        bad_total += static_cast<int>(bad.size());
        char tag[64];
        std::snprintf(tag, sizeof tag, "k%g", k);
        fs::create_directories(c.out);
        modal::write_scan_csv(sc, (fs::path(c.out) / (std::string("detz_") + tag + ".csv")).string());
        modal::write_contours_csv(sc, (fs::path(c.out) / (std::string("detz_contours_") + tag + ".csv")).string());
        std::printf("k=%g alpha=%g: %zu contour segments, %zu intersection cells, %zu with Re(s) > 0\n", k, alpha,
                    sc.segments.size(), sc.intersections.size(), bad.size());
    }
    return bad_total == 0 ? 0 : 1;
}

int run_limit(const ModalArgs& a, double k) {
    const modal::cplx s(a.s_re, a.s_im);
    const double alpha = modal_alpha(a);
    const modal::cplx L = modal::limit_detZ(k, a.nu, alpha, s);
    std::printf("limit det Z (k=%g, nu=%g, alpha=%g, s=%g%+gi) = %.6f%+.6fi\n", k, a.nu, alpha, s.real(), s.imag(),
                L.real(), L.imag());
    for (double h : a.hs) {
        const modal::cplx d = modal::det_Z({h, k, a.nu, alpha, s});
        std::printf("  h=%-8g det Z = %.6f%+.6fi  |det Z - limit| = %.4e\n", h, d.real(), d.imag(), std::abs(d - L));
    }
    return 0;
}

int run_sigma(const ModalArgs& a, double k) {
    const modal::cplx s(a.s_re, a.s_im);
    const double alpha = modal_alpha(a);
    const auto sig = modal::leading_sigma(k, a.nu, alpha, s, a.h, a.r, a.g0);
    for (int n = 0; n < 3; ++n)
        std::printf("sigma_%d = %.6e%+.6ei  |sigma_%d| = %.6e\n", n + 1, sig[n].real(), sig[n].imag(), n + 1,
                    std::abs(sig[n]));
    return 0;
}

// ---------------------------------------------------------------------------

struct MeshArgs {
    std::string kind = "square";
    int m = 10;
    double ratio = 1.0;
    std::string in;
    std::string file = "mesh.txt";
    int factor = 2;
};

void print_info(const Mesh& m) {
    std::printf("vertices %d, triangles %d, edges %d, boundary edges %zu\n", m.num_vertices(), m.num_triangles(),
                m.num_edges(), m.boundary_edges().size());
    std::printf("h_min %.6g, h_max %.6g\n", m.h_min(), m.h_max());
    std::map<int, int> per_tag;
    for (const auto& be : m.boundary_edges()) ++per_tag[be.tag];
    for (const auto& [tag, n] : per_tag) std::printf("  tag %d: %d edges\n", tag, n);
}

int run_mesh_gen(const MeshArgs& a) {
    Mesh m;
    if (a.kind == "square")
        m = a.ratio == 1.0 ? gen_unit_square(a.m) : gen_stretched_square(a.m, stretch_beta_for_ratio(a.m, a.ratio));
    else if (a.kind == "cylinder")
        m = gen_cylinder_channel();
    else
        throw InvalidArgument("unknown mesh kind '" + a.kind + "' (use square or cylinder)");
    save_mesh(m, a.file);
    print_info(m);
    std::printf("wrote %s\n", a.file.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Split-step finite element solver for 2D incompressible flow"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Read options from a key = value file");

    Common common;
    app.add_option("--order", common.order, "Lagrange element order")->check(CLI::IsMember({1, 2, 4}));
    app.add_option("--bc", common.bc, "Pressure boundary condition")->check(CLI::IsMember({"tn", "wabe"}));
    app.add_option("--cd", common.cd, "Damping coefficient, alpha = C_d / h_min^2 (0 disables)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--dt-safety", common.dt_safety, "Time step safety factor")->check(CLI::PositiveNumber);
    app.add_option("--out", common.out, "Output directory");
    app.add_option("--strategy", common.strategy, "Linear solves")->check(CLI::IsMember({"factorized", "iterative"}));

    ConvergeArgs ca;
    auto* conv = app.add_subcommand("converge", "Manufactured-solution convergence study");
    conv->add_option("--case", ca.cases, "Cases i, ii, iii, iv")->delimiter(',');
    conv->add_option("--orders", ca.orders, "Element orders (default: --order)")->delimiter(',');
    conv->add_option("--meshes", ca.meshes, "Cells per side")->delimiter(',');
    conv->add_option("--tfinal", ca.t_final, "Final time")->check(CLI::PositiveNumber);
    conv->add_option("--mu", ca.mu, "Viscosity")->check(CLI::PositiveNumber);
    conv->add_flag("--periodic", ca.periodic, "Periodic in x");

    CavityArgs cav;
    auto* cavity = app.add_subcommand("cavity", "Regularized lid-driven cavity");
    cavity->add_option("--m", cav.m, "Cells per side")->check(CLI::PositiveNumber);
    cavity->add_option("--nu", cav.nu, "Viscosity")->check(CLI::PositiveNumber);
    cavity->add_option("--tfinal", cav.t_final, "Final time")->check(CLI::PositiveNumber);
    cavity->add_option("--ratio", cav.ratio, "Largest to smallest spacing")->check(CLI::Range(1.0, 100.0));
    cavity->add_flag("--quiet", cav.quiet, "No progress output");

    CylinderArgs cyl;
    auto* cylinder = app.add_subcommand("cylinder", "Flow past a cylinder in a channel");
    cylinder->add_option("--refine", cyl.refine, "Uniform refinement factor of the base mesh")->check(CLI::PositiveNumber);
    cylinder->add_option("--tfinal", cyl.t_final, "Final time")->check(CLI::PositiveNumber);
    cylinder->add_option("--mu", cyl.mu, "Viscosity")->check(CLI::PositiveNumber);
    cylinder->add_option("--alpha", cyl.alpha, "Damping alpha when --cd is not given")->check(CLI::NonNegativeNumber);
    cylinder->add_flag("--quiet", cyl.quiet, "No progress output");

    ModalArgs ma;
    auto* modal = app.add_subcommand("modal", "Normal-mode analysis of the model problem");
    modal->require_subcommand(1);
    auto add_case = [&ma](CLI::App* s) {
        s->add_option("--h", ma.h, "Grid spacing")->check(CLI::PositiveNumber);
        s->add_option("--nu", ma.nu, "Viscosity")->check(CLI::PositiveNumber);
        s->add_option("--alpha", ma.alpha, "Damping alpha or 'auto' for 1/h^2");
    };
    auto* qscan = modal->add_subcommand("qscan", "Sample q(s) and q1'(s) on the positive real axis");
    add_case(qscan);
    qscan->add_option("--kmin", ma.kmin)->check(CLI::PositiveNumber);
    qscan->add_option("--kmax", ma.kmax)->check(CLI::PositiveNumber);
    qscan->add_option("--smax", ma.smax)->check(CLI::PositiveNumber);
    qscan->add_option("--ns", ma.ns, "Samples per wavenumber")->check(CLI::PositiveNumber);
    auto* detz = modal->add_subcommand("detz", "Zero contours of det Z over a complex s grid");
    add_case(detz);
    detz->add_option("--k", ma.k, "Wavenumbers")->delimiter(',');
    detz->add_option("--n-re", ma.n_re)->check(CLI::Range(2, 100000));
    detz->add_option("--n-im", ma.n_im)->check(CLI::Range(2, 100000));
    double k_single = 1.0;
    auto* limit = modal->add_subcommand("limit", "det Z against its h -> 0 limit");
    add_case(limit);
    limit->add_option("--k", k_single);
    limit->add_option("--s-re", ma.s_re);
    limit->add_option("--s-im", ma.s_im);
    limit->add_option("--hs", ma.hs, "Grid spacings")->delimiter(',');
    auto* sigma = modal->add_subcommand("sigma", "Leading boundary-layer amplitudes");
    add_case(sigma);
    sigma->add_option("--k", k_single);
    sigma->add_option("--s-re", ma.s_re);
    sigma->add_option("--s-im", ma.s_im);
    sigma->add_option("--r", ma.r, "Order of the boundary data")->check(CLI::IsMember({1, 2}));
    sigma->add_option("--g0", ma.g0, "Boundary data amplitude");

    MeshArgs mg;
    auto* mesh = app.add_subcommand("mesh", "Mesh utilities");
    mesh->require_subcommand(1);
    auto* gen = mesh->add_subcommand("gen", "Generate a mesh");
    gen->add_option("--kind", mg.kind, "square or cylinder")->check(CLI::IsMember({"square", "cylinder"}));
    gen->add_option("--m", mg.m, "Cells per side")->check(CLI::PositiveNumber);
    gen->add_option("--ratio", mg.ratio, "Stretching: largest to smallest spacing")->check(CLI::Range(1.0, 100.0));
    gen->add_option("--file", mg.file, "Output mesh file");
    auto* refine = mesh->add_subcommand("refine", "Uniformly refine a mesh");
    refine->add_option("--in", mg.in, "Input mesh file")->required();
    refine->add_option("--factor", mg.factor, "Subdivisions per edge")->check(CLI::PositiveNumber);
    refine->add_option("--file", mg.file, "Output mesh file");
    auto* info = mesh->add_subcommand("info", "Print mesh statistics");
    info->add_option("--in", mg.in, "Input mesh file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        fs::create_directories(common.out);
        if (*conv) {
            if (conv->count("--orders") == 0) ca.orders = {common.order};
            return run_converge(common, ca);
        }
        if (*cavity) return run_cavity_cmd(common, cav);
        if (*cylinder) return run_cylinder_cmd(common, cyl);
        if (*qscan) return run_qscan(common, ma);
        if (*detz) return run_detz(common, ma);
        if (*limit) return run_limit(ma, k_single);
        if (*sigma) return run_sigma(ma, k_single);
        if (*gen) return run_mesh_gen(mg);
        if (*refine) {
            const Mesh m = refine_uniform(load_mesh(mg.in), mg.factor);
            save_mesh(m, mg.file);
            print_info(m);
            std::printf("wrote %s\n", mg.file.c_str());
            return 0;
        }
        if (*info) {
            print_info(load_mesh(mg.in));
            return 0;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 2;
}
