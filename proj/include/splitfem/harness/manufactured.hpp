#pragma once

// Trigonometric manufactured solution, forcing, error norms, and mesh
// refinement studies on the unit square.

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "splitfem/assembly.hpp"
#include "splitfem/mesh.hpp"
#include "splitfem/splitstep.hpp"

namespace splitfem::harness {

/// Damping / pressure-boundary combinations of the refinement study.
enum class CaseId { I, II, III, IV };

inline CaseId parse_case(const std::string& s) {
    if (s == "i" || s == "1") return CaseId::I;
    if (s == "ii" || s == "2") return CaseId::II;
    if (s == "iii" || s == "3") return CaseId::III;
    if (s == "iv" || s == "4") return CaseId::IV;
    throw InvalidArgument("unknown case '" + s + "' (use i, ii, iii or iv)");
}

inline std::string to_string(CaseId c) {
    switch (c) {
    case CaseId::I: return "i";
    case CaseId::II: return "ii";
    case CaseId::III: return "iii";
    default: return "iv";
    }
}

/// (i) no damping, TN; (ii) damping, TN; (iii) no damping, WABE; (iv) damping, WABE.
inline bool damped(CaseId c) { return c == CaseId::II || c == CaseId::IV; }
inline BoundaryMode boundary_mode(CaseId c) {
    return (c == CaseId::I || c == CaseId::II) ? BoundaryMode::TN : BoundaryMode::WABE;
}

/// u = a sin(fx pi x) sin(fy pi y) cos(ft pi t), v = a cos(.) cos(.) cos(.),
/// p = a sin(.) cos(.) cos(.). Divergence-free when fx = fy.
struct ManufacturedCase {
    double a = 0.5;
    double fx = 2.0, fy = 2.0, ft = 2.0;
    CaseId id = CaseId::IV;
};

struct ExactFields {
    double u, v, p;
};

inline ExactFields manufactured_fields(const ManufacturedCase& c, double x, double y, double t) {
    const double A = c.fx * std::numbers::pi, B = c.fy * std::numbers::pi, W = c.ft * std::numbers::pi;
    const double ct = c.a * std::cos(W * t);
    return {ct * std::sin(A * x) * std::sin(B * y), ct * std::cos(A * x) * std::cos(B * y),
            ct * std::sin(A * x) * std::cos(B * y)};
}

inline Eigen::Vector2d manufactured_velocity_dt(const ManufacturedCase& c, double x, double y, double t) {
    const double A = c.fx * std::numbers::pi, B = c.fy * std::numbers::pi, W = c.ft * std::numbers::pi;
    const double dct = -c.a * W * std::sin(W * t);
    return {dct * std::sin(A * x) * std::sin(B * y), dct * std::cos(A * x) * std::cos(B * y)};
}

struct ForcingValue {
    double F1, F2, divF;
};

/// F = rho (u_t + u.grad u) + grad p - mu lap u and its divergence.
inline ForcingValue eval_forcing(const ManufacturedCase& c, double rho, double mu, double x, double y, double t) {
    const double A = c.fx * std::numbers::pi, B = c.fy * std::numbers::pi, W = c.ft * std::numbers::pi;
    const double ct = c.a * std::cos(W * t), dct = -c.a * W * std::sin(W * t);
    const double sx = std::sin(A * x), cx = std::cos(A * x), sy = std::sin(B * y), cy = std::cos(B * y);
    const double u = ct * sx * sy, v = ct * cx * cy;
    const double ut = dct * sx * sy, vt = dct * cx * cy;
    const double ux = ct * A * cx * sy, uy = ct * B * sx * cy;
    const double vx = -ct * A * sx * cy, vy = -ct * B * cx * sy;
    const double px = ct * A * cx * cy, py = -ct * B * sx * sy;
    const double k2 = A * A + B * B;
    const double F1 = rho * (ut + u * ux + v * uy) + px + mu * k2 * u;
    const double F2 = rho * (vt + u * vx + v * vy) + py + mu * k2 * v;
    // div(u_t) = div(lap u) = 0 for this field; div(u.grad u) = grad u : (grad u)^T.
    const double p = ct * sx * cy;
    const double divF = rho * (ux * ux + 2.0 * uy * vx + vy * vy) - (A * A + B * B) * p;
    return {F1, F2, divF};
}

/// Solver configuration with forcing and exact boundary data for case c.
inline SolverConfig manufactured_config(const ManufacturedCase& c, double rho, double mu, int order,
                                        bool periodic_x = false) {
    SolverConfig cfg;
    cfg.rho = rho;
    cfg.mu = mu;
    cfg.order = order;
    cfg.C_d = damped(c.id) ? 1.0 : 0.0;
    cfg.bc = boundary_mode(c.id);
    cfg.periodic_x = periodic_x;
    cfg.F = [c, rho, mu](const Point& x, double t) {
        const auto f = eval_forcing(c, rho, mu, x.x(), x.y(), t);
        return Eigen::Vector2d(f.F1, f.F2);
    };
    cfg.divF = [c, rho, mu](const Point& x, double t) { return eval_forcing(c, rho, mu, x.x(), x.y(), t).divF; };
    cfg.g = [c](const Point& x, double t) {
        const auto e = manufactured_fields(c, x.x(), x.y(), t);
        return Eigen::Vector2d(e.u, e.v);
    };
    cfg.g_t = [c](const Point& x, double t) { return manufactured_velocity_dt(c, x.x(), x.y(), t); };
    return cfg;
}

struct ErrorNorms {
    double linf = 0.0;
    double l2 = 0.0;
};

/// Norms of E = |v_h - I v_e| (nodal interpolant of the exact field); the L2
/// norm integrates the interpolated E with the mass rule.
inline ErrorNorms error_norms(const Assembler& assembler, const Vector& coeffs, int component,
                              const std::function<double(const Point&)>& exact) {
    const auto& space = assembler.space();
    const int N = space.num_scalar_dofs();
    Vector e(N);
    for (int j = 0; j < N; ++j) e(j) = std::abs(coeffs(component * N + j) - exact(space.dof_coords()[j]));
    return {e.lpNorm<Eigen::Infinity>(), assembler.l2_norm(e)};
}

/// Errors of one manufactured run at its final time.
struct CaseErrors {
    double h = 0.0;
    int m = 0;
    long steps = 0;
    double dt = 0.0;
    ErrorNorms u, v, p, div;
    bool failed = false;
    std::string failure;
};

struct RunOptions {
    double rho = 1.0;
    double mu = 0.1;
    int order = 1;
    double t_final = 0.1;
    double dt_safety = 0.25;
    bool periodic_x = false;
    SolveStrategy strategy = SolveStrategy::Factorized;
};

inline CaseErrors run_manufactured(const ManufacturedCase& c, int m, const RunOptions& opt) {
    CaseErrors out;
    out.m = m;
    out.h = 1.0 / m;
    try {
        SolverConfig cfg = manufactured_config(c, opt.rho, opt.mu, opt.order, opt.periodic_x);
        cfg.dt_safety = opt.dt_safety;
        cfg.strategy = opt.strategy;
        const Mesh mesh = gen_unit_square(m);
        SplitStepIntegrator integ(mesh, cfg);
        const double dt_max = select_dt(integ.h_min(), cfg, c.a);
        out.dt = fit_dt(opt.t_final, dt_max);
        FlowState s = integ.initialize([&](const Point& x) {
            const auto e = manufactured_fields(c, x.x(), x.y(), 0.0);
            return Eigen::Vector2d(e.u, e.v);
        });
        s = integ.run(s, opt.t_final, out.dt);
        out.steps = s.step_index;
        const double t = s.t;
        const auto& A = integ.assembler();
        out.u = error_norms(A, s.u_curr, 0, [&](const Point& x) { return manufactured_fields(c, x.x(), x.y(), t).u; });
        out.v = error_norms(A, s.u_curr, 1, [&](const Point& x) { return manufactured_fields(c, x.x(), x.y(), t).v; });
        out.p = error_norms(A, s.p_curr, 0, [&](const Point& x) { return manufactured_fields(c, x.x(), x.y(), t).p; });
        const auto d = A.divergence(s.u_curr);
        out.div = {d.linf, d.l2};
    } catch (const Error& e) {
        out.failed = true;
        out.failure = e.what();
    }
    return out;
}

/// Least-squares slope of log(e) against log(h).
inline double convergence_rate(const std::vector<double>& h, const std::vector<double>& e) {
    if (h.size() != e.size() || h.size() < 2) throw InvalidArgument("convergence_rate: need >= 2 matching samples");
    const std::size_t n = h.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double x = std::log(h[i]), y = std::log(e[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

struct RateTable {
    std::vector<CaseErrors> runs;
    // Rates ordered u, v, p, div; NaN when any run failed.
    std::array<double, 4> l2{}, linf{};
};

/// Runs case c on gen_unit_square(m) for each m and fits convergence rates.
inline RateTable convergence_study(const ManufacturedCase& c, const std::vector<int>& meshes, const RunOptions& opt) {
    if (meshes.size() < 3) throw InvalidArgument("convergence_study: need at least three meshes");
    RateTable tab;
    bool ok = true;
    for (int m : meshes) {
        tab.runs.push_back(run_manufactured(c, m, opt));
        ok = ok && !tab.runs.back().failed;
    }
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> h;
    for (const auto& r : tab.runs) h.push_back(r.h);
    auto rate = [&](auto pick) {
        if (!ok) return nan;
        std::vector<double> e;
        for (const auto& r : tab.runs) e.push_back(pick(r));
        return convergence_rate(h, e);
    };
    tab.l2 = {rate([](const CaseErrors& r) { return r.u.l2; }), rate([](const CaseErrors& r) { return r.v.l2; }),
              rate([](const CaseErrors& r) { return r.p.l2; }), rate([](const CaseErrors& r) { return r.div.l2; })};
    tab.linf = {rate([](const CaseErrors& r) { return r.u.linf; }), rate([](const CaseErrors& r) { return r.v.linf; }),
                rate([](const CaseErrors& r) { return r.p.linf; }), rate([](const CaseErrors& r) { return r.div.linf; })};
    return tab;
}

}  // namespace splitfem::harness
