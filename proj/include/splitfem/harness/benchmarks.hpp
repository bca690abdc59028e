#pragma once

// Driven cavity with a smoothed lid, and channel flow past a cylinder.

#include <cmath>
#include <numbers>
#include <optional>

#include "splitfem/harness/output.hpp"
#include "splitfem/mesh.hpp"
#include "splitfem/splitstep.hpp"

namespace splitfem::harness {

/// Precomputed point evaluation at a fixed location.
class Probe {
public:
    Probe(const FiniteElementSpace& space, const Point& x) : x_(x) {
        const auto loc = locate(space.mesh(), x);
        if (!loc)
            throw EvaluationError("probe (" + std::to_string(x.x()) + ", " + std::to_string(x.y()) +
                                  ") lies outside the mesh");
        phi_ = space.reference().basis(loc->ref);
        const int* cd = space.cell_dofs(loc->triangle);
        dofs_.assign(cd, cd + space.nodes_per_cell());
        n_ = space.num_scalar_dofs();
    }

    double operator()(const Vector& coeffs, int comp = 0) const {
        double v = 0.0;
        for (std::size_t i = 0; i < dofs_.size(); ++i) v += phi_(i) * coeffs(comp * n_ + dofs_[i]);
        return v;
    }

    const Point& point() const { return x_; }

private:
    Point x_;
    Eigen::VectorXd phi_;
    std::vector<int> dofs_;
    int n_ = 0;
};

// ---------------------------------------------------------------------------
// Cavity

/// Lid profile, equal to 1 except in a thin layer near x = 0 and x = 1.
inline double cavity_boundary_u0(double x) { return 0.5 * (1.0 - std::tanh((std::abs(x - 0.5) - 0.495) / 0.01)); }

struct CavityConfig {
    int m = 64;
    double spacing_ratio = 2.389;  // max/min lattice spacing
    double nu = 1e-3;
    double t_final = 50.0;
    BoundaryMode bc = BoundaryMode::WABE;
    int order = 1;
    double C_d = 1.0;
    double dt_safety = 0.25;
    double sample_interval = 1.0;
    double steady_window = 10.0;
    int profile_points = 101;
    SolveStrategy strategy = SolveStrategy::Factorized;
    Observer progress;
};

struct CavityResult {
    std::vector<double> y, x;  // profile abscissae
    FunctionalSeries u_profiles, v_profiles;  // u(0.5, y_k), v(x_k, 0.5)
    FlowState final_state;
    double dt = 0.0, alpha = 0.0, h_min = 0.0;
    long steps = 0;
    double u_min = 0.0, y_at_min = 0.0;
    int interior_minima = 0;
    double steady_change = 0.0;  // max |u(t_f) - u(t_f - window)| / max |u(t_f)|
};

inline Mesh cavity_mesh(const CavityConfig& cfg) {
    return gen_stretched_square(cfg.m, stretch_beta_for_ratio(cfg.m, cfg.spacing_ratio));
}

inline SolverConfig cavity_solver_config(const CavityConfig& cfg) {
    SolverConfig s;
    s.rho = 1.0;
    s.mu = cfg.nu;
    s.C_d = cfg.C_d;
    s.bc = cfg.bc;
    s.order = cfg.order;
    s.dt_safety = cfg.dt_safety;
    s.strategy = cfg.strategy;
    s.g = [](const Point& x, double) {
        return Eigen::Vector2d(x.y() > 1.0 - 1e-12 ? cavity_boundary_u0(x.x()) : 0.0, 0.0);
    };
    s.g_t = [](const Point&, double) { return Eigen::Vector2d::Zero().eval(); };
    return s;
}

/// Number of strict interior local minima of a sampled profile.
inline int count_interior_minima(const std::vector<double>& f) {
    int n = 0;
    for (std::size_t i = 1; i + 1 < f.size(); ++i)
        if (f[i] < f[i - 1] && f[i] <= f[i + 1]) ++n;
    return n;
}

inline CavityResult run_cavity(const CavityConfig& cfg) {
    if (cfg.profile_points < 3) throw InvalidArgument("run_cavity: need at least three profile points");
    const Mesh mesh = cavity_mesh(cfg);
    SplitStepIntegrator integ(mesh, cavity_solver_config(cfg));
    CavityResult res;
    res.alpha = integ.alpha();
    res.h_min = integ.h_min();
    res.dt = fit_dt(cfg.t_final, select_dt(integ.h_min(), integ.config(), 1.0));
    std::vector<Probe> pu, pv;
    std::vector<std::string> cu, cv;
    for (int k = 0; k < cfg.profile_points; ++k) {
        const double s = static_cast<double>(k) / (cfg.profile_points - 1);
        res.y.push_back(s);
        res.x.push_back(s);
        pu.emplace_back(integ.space(), Point(0.5, s));
        pv.emplace_back(integ.space(), Point(s, 0.5));
        cu.push_back("y=" + std::to_string(s));
        cv.push_back("x=" + std::to_string(s));
    }
    res.u_profiles = FunctionalSeries(cu);
    res.v_profiles = FunctionalSeries(cv);
    auto sample = [&](const FlowState& s) {
        std::vector<double> ru, rv;
        for (const auto& p : pu) ru.push_back(p(s.u_curr, 0));
        for (const auto& p : pv) rv.push_back(p(s.u_curr, 1));
        res.u_profiles.push(s.t, std::move(ru));
        res.v_profiles.push(s.t, std::move(rv));
        if (cfg.progress) cfg.progress(s);
    };
    const int stride = std::max(1, static_cast<int>(std::lround(cfg.sample_interval / res.dt)));
    FlowState s = integ.initialize({});
    s = integ.run(s, cfg.t_final, res.dt, {sample}, stride);
    res.steps = s.step_index;
    res.final_state = s;

    // Minimum of the final centerline profile, refined on a finer sampling.
    const int fine = 10 * (cfg.profile_points - 1) + 1;
    std::vector<double> uf(fine);
    res.u_min = std::numeric_limits<double>::infinity();
    for (int k = 0; k < fine; ++k) {
        const double y = static_cast<double>(k) / (fine - 1);
        uf[k] = Probe(integ.space(), Point(0.5, y))(s.u_curr, 0);
        if (uf[k] < res.u_min) {
            res.u_min = uf[k];
            res.y_at_min = y;
        }
    }
    res.interior_minima = count_interior_minima(res.u_profiles.rows().back());

    const auto& times = res.u_profiles.times();
    std::size_t ref = 0;
    for (std::size_t i = 0; i < times.size(); ++i)
        if (std::abs(times[i] - (cfg.t_final - cfg.steady_window)) < std::abs(times[ref] - (cfg.t_final - cfg.steady_window)))
            ref = i;
    const auto& a = res.u_profiles.rows()[ref];
    const auto& b = res.u_profiles.rows().back();
    double diff = 0.0, scale = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        diff = std::max(diff, std::abs(a[k] - b[k]));
        scale = std::max(scale, std::abs(b[k]));
    }
    res.steady_change = scale > 0.0 ? diff / scale : diff;
    return res;
}

// ---------------------------------------------------------------------------
// Cylinder

inline constexpr double channel_height = 0.41;
inline constexpr double cylinder_diameter = 0.1;

/// Parabolic inflow with amplitude sin(pi t / 8) and peak 1.5.
inline Eigen::Vector2d cylinder_inflow(double y, double t) {
    const double H = channel_height;
    return {std::sin(std::numbers::pi * t / 8.0) * 6.0 * y * (H - y) / (H * H), 0.0};
}

inline Eigen::Vector2d cylinder_inflow_dt(double y, double t) {
    const double H = channel_height;
    return {std::numbers::pi / 8.0 * std::cos(std::numbers::pi * t / 8.0) * 6.0 * y * (H - y) / (H * H), 0.0};
}

struct Functionals {
    double C_d = 0.0, C_l = 0.0, dp = 0.0;
};

/// Force on the cylinder from the boundary stress, normalized with mean
/// velocity 1 and diameter 0.1, plus the front-back pressure difference.
class CylinderFunctionals {
public:
    CylinderFunctionals(const FiniteElementSpace& space, double rho, double mu)
        : space_(space), rho_(rho), mu_(mu), front_(space, Point(0.15, 0.2)), back_(space, Point(0.25, 0.2)) {
        const Mesh& m = space.mesh();
        for (int i : space.active_boundary_edges())
            if (m.boundary_edges()[i].tag == tags::cylinder) edges_.push_back(i);
        if (edges_.empty()) throw PreconditionFailure("mesh has no cylinder boundary edges");
        std::tie(ls_, lw_) = make_line_quadrature(2 * space.order());
    }

    Eigen::Vector2d force(const Vector& u, const Vector& p) const {
        const Mesh& m = space_.mesh();
        const int N = space_.num_scalar_dofs();
        const auto& ref = space_.reference();
        const std::array<Point, 3> rv{Point(0, 0), Point(1, 0), Point(0, 1)};
        Eigen::Vector2d F = Eigen::Vector2d::Zero();
        for (int i : edges_) {
            const auto& be = m.boundary_edges()[i];
            const int t = m.boundary_owner(i);
            const auto& tri = m.triangles()[t];
            int k = 0;
            while (tri[k] != be.v[0]) ++k;
            const int* cd = space_.cell_dofs(t);
            const Eigen::Matrix2d& jt = space_.inv_jacobian_t(t);
            const Point n = m.boundary_edge_normal(i);  // out of the fluid
            const double len = (m.vertices()[be.v[1]] - m.vertices()[be.v[0]]).norm();
            for (std::size_t q = 0; q < ls_.size(); ++q) {
                const Point r = rv[k] + ls_[q] * (rv[(k + 1) % 3] - rv[k]);
                const Eigen::VectorXd phi = ref.basis(r);
                const Eigen::MatrixX2d g = ref.grad(r);
                double pq = 0.0;
                Eigen::Matrix2d G = Eigen::Matrix2d::Zero();  // G(a, b) = d u_a / d x_b
                for (int j = 0; j < space_.nodes_per_cell(); ++j) {
                    pq += phi(j) * p(cd[j]);
                    G.row(0) += u(cd[j]) * g.row(j);
                    G.row(1) += u(N + cd[j]) * g.row(j);
                }
                G = (G * jt.transpose()).eval();
                const Eigen::Matrix2d sigma = -pq * Eigen::Matrix2d::Identity() + mu_ * (G + G.transpose());
                F -= lw_[q] * len * (sigma * n);
            }
        }
        return F;
    }

    Functionals operator()(const Vector& u, const Vector& p) const {
        const Eigen::Vector2d F = force(u, p);
        const double scale = 2.0 / (rho_ * cylinder_diameter);
        return {scale * F.x(), scale * F.y(), front_(p) - back_(p)};
    }

private:
    const FiniteElementSpace& space_;
    double rho_, mu_;
    Probe front_, back_;
    std::vector<int> edges_;
    std::vector<double> ls_, lw_;
};

inline Functionals drag_lift_dp(const FiniteElementSpace& space, const Vector& u, const Vector& p, double mu,
                                double rho = 1.0) {
    return CylinderFunctionals(space, rho, mu)(u, p);
}

struct CylinderConfig {
    int refine = 4;
    int order = 1;
    BoundaryMode bc = BoundaryMode::WABE;
    double mu = 1e-3;
    double alpha = 5521.08;              // used when C_d is not set
    std::optional<double> C_d;           // overrides alpha
    double t_final = 8.0;
    double dt_safety = 0.25;
    double u_max = 2.0;
    double sample_interval = 0.01;
    SolveStrategy strategy = SolveStrategy::Factorized;
    Observer progress;
};

struct CylinderResult {
    FunctionalSeries series{{"C_d", "C_l", "dp"}};
    FlowState final_state;
    double dt = 0.0, alpha = 0.0, C_d_coefficient = 0.0, h_min = 0.0;
    long steps = 0;
    int velocity_dofs = 0, pressure_dofs = 0;
    double C_d_max = 0.0, C_l_max = 0.0, dp_final = 0.0;
    double t_C_d_max = 0.0, t_C_l_max = 0.0;
};

inline Mesh cylinder_mesh(int refine) {
    const Mesh g1 = gen_cylinder_channel();
    return refine > 1 ? refine_uniform(g1, refine) : g1;
}

inline CylinderResult run_cylinder(const CylinderConfig& cfg) {
    const Mesh mesh = cylinder_mesh(cfg.refine);
    const double h = mesh.h_min();
    SolverConfig s;
    s.rho = 1.0;
    s.mu = cfg.mu;
    s.C_d = cfg.C_d ? *cfg.C_d : cfg.alpha * h * h;
    s.bc = cfg.bc;
    s.order = cfg.order;
    s.dt_safety = cfg.dt_safety;
    s.strategy = cfg.strategy;
    auto on_flow_boundary = [](const Point& x) { return x.x() < 1e-9 || x.x() > 2.2 - 1e-9; };
    s.g = [on_flow_boundary](const Point& x, double t) {
        return on_flow_boundary(x) ? cylinder_inflow(x.y(), t) : Eigen::Vector2d::Zero().eval();
    };
    s.g_t = [on_flow_boundary](const Point& x, double t) {
        return on_flow_boundary(x) ? cylinder_inflow_dt(x.y(), t) : Eigen::Vector2d::Zero().eval();
    };
    SplitStepIntegrator integ(mesh, s);
    CylinderResult res;
    res.h_min = integ.h_min();
    res.alpha = integ.alpha();
    res.C_d_coefficient = s.C_d;
    res.velocity_dofs = integ.velocity_space().size();
    res.pressure_dofs = integ.space().num_scalar_dofs();
    res.dt = fit_dt(cfg.t_final, select_dt(integ.h_min(), integ.config(), cfg.u_max));
    CylinderFunctionals fun(integ.space(), s.rho, s.mu);
    res.C_d_max = res.C_l_max = -std::numeric_limits<double>::infinity();
    auto sample = [&](const FlowState& st) {
        const Functionals f = fun(st.u_curr, st.p_curr);
        res.series.push(st.t, {f.C_d, f.C_l, f.dp});
        if (f.C_d > res.C_d_max) {
            res.C_d_max = f.C_d;
            res.t_C_d_max = st.t;
        }
        if (f.C_l > res.C_l_max) {
            res.C_l_max = f.C_l;
            res.t_C_l_max = st.t;
        }
        res.dp_final = f.dp;
        if (cfg.progress) cfg.progress(st);
    };
    const int stride = std::max(1, static_cast<int>(std::lround(cfg.sample_interval / res.dt)));
    FlowState st = integ.initialize({});
    st = integ.run(st, cfg.t_final, res.dt, {sample}, stride);
    res.steps = st.step_index;
    res.final_state = st;
    return res;
}

}  // namespace splitfem::harness
