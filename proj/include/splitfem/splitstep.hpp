#pragma once

// Split-step integrator: AB2 velocity predictor, pressure solve, modified AM2
// velocity corrector, pressure solve.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "splitfem/assembly.hpp"
#include "splitfem/elements.hpp"
#include "splitfem/linsolve.hpp"
#include "splitfem/mesh.hpp"

namespace splitfem {

enum class BoundaryMode { TN, WABE };

inline std::string to_string(BoundaryMode m) { return m == BoundaryMode::TN ? "tn" : "wabe"; }

inline BoundaryMode parse_boundary_mode(const std::string& s) {
    if (s == "tn" || s == "TN") return BoundaryMode::TN;
    if (s == "wabe" || s == "WABE") return BoundaryMode::WABE;
    throw InvalidArgument("unknown boundary mode '" + s + "' (use tn or wabe)");
}

/// Factorized: cached LDL^T / LU factorizations. Iterative: CG for mass
/// solves and bordered CG (TN) or GMRES (replaced rows) for the pressure.
enum class SolveStrategy { Factorized, Iterative };

struct SolverConfig {
    double rho = 1.0;
    double mu = 1.0;
    double C_d = 1.0;  // alpha = C_d / h_min^2
    BoundaryMode bc = BoundaryMode::WABE;
    int order = 1;
    double dt_safety = 0.25;
    bool periodic_x = false;
    VectorField F;    // body force; empty means zero
    ScalarField divF; // its divergence
    VectorField g;    // boundary velocity; empty means no-slip
    VectorField g_t;  // time derivative of g; empty means forward difference
    SolveStrategy strategy = SolveStrategy::Factorized;
    double ppe_tol = 1e-10;
    double mass_tol = 1e-12;

    void validate() const {
        if (!(rho > 0.0)) throw InvalidArgument("rho must be positive");
        if (!(mu >= 0.0)) throw InvalidArgument("mu must be non-negative");
        if (!(C_d >= 0.0)) throw InvalidArgument("C_d must be non-negative");
        if (!(dt_safety > 0.0)) throw InvalidArgument("dt_safety must be positive");
        if (order != 1 && order != 2 && order != 4) throw InvalidArgument("order must be 1, 2 or 4");
    }
};

/// Velocity (component-major, 2N) and pressure (N) coefficients at two time
/// levels. `r_prev` caches the momentum residual at the previous level.
struct FlowState {
    Vector u_prev, u_curr;
    Vector p_prev, p_curr;
    Vector r_prev;
    double t = 0.0;
    long step_index = 0;
};

/// Effective spacing divisor for order n elements: 1, 2 and 6 for P1, P2, P4.
inline double spacing_divisor(int order) { return order >= 4 ? 6.0 : static_cast<double>(order); }

/// Fixed time step: safety * min(rho h^2 / (4 mu), h / u_max, 4 rho / alpha)
/// with h = h_min / spacing_divisor(order). Terms with mu = 0 or alpha = 0
/// drop out.
inline double select_dt(double h_min, const SolverConfig& cfg, double u_max_estimate) {
    if (!(h_min > 0.0)) throw InvalidArgument("select_dt: h_min must be positive");
    const double h = h_min / spacing_divisor(cfg.order);
    double dt = h / std::max(u_max_estimate, 1e-12);
    if (cfg.mu > 0.0) dt = std::min(dt, cfg.rho * h * h / (4.0 * cfg.mu));
    const double alpha = cfg.C_d / (h_min * h_min);
    if (alpha > 0.0) dt = std::min(dt, 4.0 * cfg.rho / alpha);
    return cfg.dt_safety * dt;
}

inline double select_dt(const Mesh& mesh, const SolverConfig& cfg, double u_max_estimate) {
    return select_dt(mesh.h_min(), cfg, u_max_estimate);
}

/// Largest step not above dt_max that divides `interval` into whole steps.
inline double fit_dt(double interval, double dt_max) {
    if (!(interval > 0.0) || !(dt_max > 0.0)) throw InvalidArgument("fit_dt: interval and dt_max must be positive");
    return interval / std::ceil(interval / dt_max - 1e-9);
}

using Observer = std::function<void(const FlowState&)>;

class SplitStepIntegrator {
public:
    SplitStepIntegrator(const Mesh& mesh, SolverConfig cfg) : cfg_(std::move(cfg)) {
        cfg_.validate();
        Mesh m = mesh;
        if (cfg_.bc == BoundaryMode::WABE && !m.has_node_normals()) m = compute_node_normals(m);
        space_ = std::make_unique<FiniteElementSpace>(m, cfg_.order, 1, cfg_.periodic_x);
        vspace_ = std::make_unique<FiniteElementSpace>(m, cfg_.order, 2, cfg_.periodic_x);
        asm_ = std::make_unique<Assembler>(*space_);
        h_min_ = m.h_min();
        alpha_ = cfg_.C_d / (h_min_ * h_min_);
        setup_velocity();
        setup_pressure();
    }

    SplitStepIntegrator(const SplitStepIntegrator&) = delete;
    SplitStepIntegrator& operator=(const SplitStepIntegrator&) = delete;

    const SolverConfig& config() const { return cfg_; }
    const FiniteElementSpace& space() const { return *space_; }
    const FiniteElementSpace& velocity_space() const { return *vspace_; }
    const Assembler& assembler() const { return *asm_; }
    const Mesh& mesh() const { return space_->mesh(); }
    double alpha() const { return alpha_; }
    double h_min() const { return h_min_; }
    int num_scalar_dofs() const { return space_->num_scalar_dofs(); }

    /// Interpolates f (boundary dofs overridden by g at t0), solves the
    /// pressure equation with the natural boundary functional, and seeds the
    /// history so the first predictor reduces to forward Euler.
    FlowState initialize(const std::function<Eigen::Vector2d(const Point&)>& f, double t0 = 0.0) const {
        FlowState s;
        s.t = t0;
        s.u_curr = f ? vspace_->interpolate(f) : Vector::Zero(vspace_->size());
        impose_boundary(s.u_curr, t0);
        s.p_curr = initial_pressure(s.u_curr, t0);
        s.u_prev = s.u_curr;
        s.p_prev = s.p_curr;
        s.r_prev = residual(s.u_curr, s.p_curr, t0);
        return s;
    }

    FlowState step(const FlowState& s, double dt) const {
        if (!(dt > 0.0)) throw InvalidArgument("step: dt must be positive");
        const double t1 = s.t + dt;
        const Vector r_n = residual(s.u_curr, s.p_curr, s.t);

        Vector u_p = velocity_update(s.u_curr, 1.5 * r_n - 0.5 * s.r_prev, dt, t1, "stage I");
        Vector p_p = pressure(u_p, s.u_curr, dt, t1, "stage II");

        const Vector r_p = residual(u_p, p_p, t1);
        FlowState out;
        out.u_curr = velocity_update(s.u_curr, 0.5 * (r_n + r_p), dt, t1, "stage III");
        out.p_curr = pressure(out.u_curr, s.u_curr, dt, t1, "stage IV");
        out.u_prev = s.u_curr;
        out.p_prev = s.p_curr;
        out.r_prev = r_n;
        out.t = t1;
        out.step_index = s.step_index + 1;
        return out;
    }

    /// Advances to t_final with a fixed step no larger than dt. Observers run
    /// on the initial state, every `stride` steps, and on the final state.
    FlowState run(FlowState s, double t_final, double dt, const std::vector<Observer>& observers = {},
                  int stride = 1) const {
        if (t_final < s.t) throw InvalidArgument("run: t_final precedes the current time");
        if (stride < 1) throw InvalidArgument("run: stride must be >= 1");
        for (const auto& o : observers) o(s);
        if (t_final == s.t) return s;
        const double h = fit_dt(t_final - s.t, dt);
        const long n = std::lround((t_final - s.t) / h);
        const double t0 = s.t;
        for (long k = 1; k <= n; ++k) {
            s = step(s, h);
            s.t = (k == n) ? t_final : t0 + k * h;
            if (!s.u_curr.allFinite() || !s.p_curr.allFinite())
                throw NumericalBlowup("non-finite velocity or pressure (t = " + std::to_string(s.t) + ")",
                                      s.step_index);
            if (k % stride == 0 || k == n)
                for (const auto& o : observers) o(s);
        }
        return s;
    }

    /// Momentum residual (L u + F, phi) at time t.
    Vector residual(const Vector& u, const Vector& p, double t) const {
        return asm_->momentum_rhs(u, p, cfg_.rho, cfg_.mu, cfg_.F, t);
    }

    /// Pressure from velocity u at time t; u_old and dt define u_t for the
    /// replaced boundary rows.
    Vector pressure(const Vector& u, const Vector& u_old, double dt, double t, const std::string& stage = "pressure") const {
        try {
            Vector f = asm_->ppe_rhs(u, cfg_.rho, alpha_, cfg_.divF, t);
            if (cfg_.bc == BoundaryMode::TN) {
                f -= asm_->tn_boundary(u, cfg_.rho, cfg_.mu, cfg_.g, cfg_.g_t, cfg_.F, t);
                return solve_tn(f);
            }
            const Vector w = asm_->wabe_rhs(u, u_old, dt, cfg_.rho, cfg_.mu, cfg_.F, t);
            const auto& rows = asm_->wabe_dofs();
            for (std::size_t r = 0; r < rows.size(); ++r) f(rows[r]) = w(static_cast<int>(r));
            if (cfg_.strategy == SolveStrategy::Factorized) return wabe_lu_.solve(f).p;
            Vector rhs = Vector::Zero(f.size() + 1);
            rhs.head(f.size()) = f;
            return solve_general(wabe_bordered_, rhs, cfg_.ppe_tol).x.head(f.size());
        } catch (const IterationLimit& e) {
            throw IterationLimit(stage + ": " + e.what(), e.residual());
        } catch (const Breakdown& e) {
            throw Breakdown(stage + ": " + e.what());
        }
    }

    /// Sets boundary velocity dofs to g(., t).
    void impose_boundary(Vector& u, double t) const {
        const int N = num_scalar_dofs();
        for (int j : bnd_) {
            const Eigen::Vector2d g = cfg_.g ? cfg_.g(space_->dof_coords()[j], t) : Eigen::Vector2d::Zero();
            u(j) = g.x();
            u(N + j) = g.y();
        }
    }

private:
    void setup_velocity() {
        const int N = num_scalar_dofs();
        bnd_ = space_->boundary_dofs();
        std::vector<int> pos(N, -1);
        for (int j = 0; j < N; ++j)
            if (!space_->is_boundary(j)) {
                pos[j] = static_cast<int>(interior_.size());
                interior_.push_back(j);
            }
        std::vector<int> bpos(N, -1);
        for (std::size_t k = 0; k < bnd_.size(); ++k) bpos[bnd_[k]] = static_cast<int>(k);
        const SparseOperator M = asm_->mass();
        std::vector<Eigen::Triplet<double>> tii, tib;
        for (int r = 0; r < N; ++r) {
            if (pos[r] < 0) continue;
            for (SparseOperator::InnerIterator it(M, r); it; ++it) {
                if (pos[it.col()] >= 0) tii.emplace_back(pos[r], pos[it.col()], it.value());
                else tib.emplace_back(pos[r], bpos[it.col()], it.value());
            }
        }
        m_ii_.resize(static_cast<int>(interior_.size()), static_cast<int>(interior_.size()));
        m_ii_.setFromTriplets(tii.begin(), tii.end());
        m_ib_.resize(static_cast<int>(interior_.size()), static_cast<int>(bnd_.size()));
        m_ib_.setFromTriplets(tib.begin(), tib.end());
        if (cfg_.strategy == SolveStrategy::Factorized && !interior_.empty()) m_ii_lu_ = SpdFactorization(m_ii_);
    }

    void setup_pressure() {
        const int N = num_scalar_dofs();
        b_ = asm_->basis_integrals();
        neg_k_ = -asm_->stiffness();
        // The natural-boundary form is also used for the initial pressure.
        if (cfg_.strategy == SolveStrategy::Factorized) tn_lu_ = BorderedFactorization(neg_k_, b_, b_);
        if (cfg_.bc == BoundaryMode::TN) return;
        const SparseOperator W = asm_->wabe_matrix();
        const auto& rows = asm_->wabe_dofs();
        std::vector<int> wrow(N, -1);
        for (std::size_t r = 0; r < rows.size(); ++r) wrow[rows[r]] = static_cast<int>(r);
        std::vector<Eigen::Triplet<double>> trip;
        Vector bc = b_;
        for (int r = 0; r < N; ++r) {
            if (wrow[r] >= 0) {
                bc(r) = 0.0;
                for (SparseOperator::InnerIterator it(W, wrow[r]); it; ++it) trip.emplace_back(r, it.col(), it.value());
            } else {
                for (SparseOperator::InnerIterator it(neg_k_, r); it; ++it) trip.emplace_back(r, it.col(), it.value());
            }
        }
        SparseOperator A(N, N);
        A.setFromTriplets(trip.begin(), trip.end());
        if (cfg_.strategy == SolveStrategy::Factorized) {
            wabe_lu_ = BorderedFactorization(A, bc, b_);
        } else {
            const auto B = detail::bordered_matrix(A, bc, b_);
            wabe_bordered_ = SparseOperator(B);
        }
    }

    Vector solve_tn(const Vector& f) const {
        if (cfg_.strategy == SolveStrategy::Factorized) return tn_lu_.solve(f).p;
        return solve_bordered({neg_k_, b_, f}, cfg_.ppe_tol, BorderedRoute::Iterative).p;
    }

    Vector initial_pressure(const Vector& u, double t) const {
        Vector f = asm_->ppe_rhs(u, cfg_.rho, alpha_, cfg_.divF, t);
        f -= asm_->tn_boundary(u, cfg_.rho, cfg_.mu, cfg_.g, cfg_.g_t, cfg_.F, t);
        try {
            return solve_tn(f);
        } catch (const Breakdown& e) {
            throw Breakdown(std::string("initial pressure: ") + e.what());
        }
    }

    /// u_new = u_n + delta with rho/dt M delta = rhs in the interior and
    /// u_new = g(t1) on the boundary.
    Vector velocity_update(const Vector& u_n, const Vector& rhs, double dt, double t1, const std::string& stage) const {
        const int N = num_scalar_dofs();
        const int ni = static_cast<int>(interior_.size()), nbd = static_cast<int>(bnd_.size());
        Vector out = u_n;
        impose_boundary(out, t1);
        for (int c = 0; c < 2; ++c) {
            Vector db(nbd);
            for (int k = 0; k < nbd; ++k) db(k) = out(c * N + bnd_[k]) - u_n(c * N + bnd_[k]);
            Vector r(ni);
            for (int k = 0; k < ni; ++k) r(k) = (dt / cfg_.rho) * rhs(c * N + interior_[k]);
            if (nbd > 0) r -= m_ib_ * db;
            Vector d;
            if (ni == 0) continue;
            if (cfg_.strategy == SolveStrategy::Factorized) {
                d = m_ii_lu_.solve(r);
            } else {
                try {
                    d = solve_spd(m_ii_, r, cfg_.mass_tol).x;
                } catch (const IterationLimit& e) {
                    throw IterationLimit(stage + ": " + e.what(), e.residual());
                }
            }
            for (int k = 0; k < ni; ++k) out(c * N + interior_[k]) += d(k);
        }
        return out;
    }

    SolverConfig cfg_;
    std::unique_ptr<FiniteElementSpace> space_, vspace_;
    std::unique_ptr<Assembler> asm_;
    double h_min_ = 0.0, alpha_ = 0.0;

    std::vector<int> interior_, bnd_;
    SparseOperator m_ii_, m_ib_;
    SpdFactorization m_ii_lu_;

    Vector b_;
    SparseOperator neg_k_;
    BorderedFactorization tn_lu_;
    BorderedFactorization wabe_lu_;
    SparseOperator wabe_bordered_;
};

}  // namespace splitfem
