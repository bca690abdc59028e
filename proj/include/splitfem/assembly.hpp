#pragma once

// Sparse operators and right-hand-side functionals for the velocity and
// pressure stages, plus point evaluation of finite-element fields.

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "splitfem/elements.hpp"
#include "splitfem/errors.hpp"
#include "splitfem/mesh.hpp"

namespace splitfem {

using SparseOperator = Eigen::SparseMatrix<double, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;
using ScalarField = std::function<double(const Point&, double)>;
using VectorField = std::function<Eigen::Vector2d(const Point&, double)>;

/// Body force F and its divergence; empty callables mean zero.
struct Forcing {
    VectorField F;
    ScalarField div;
};

/// 2D scalar curl of a gradient pair: dv/dx - du/dy.
inline double curl2d(double uy, double vx) { return vx - uy; }

/// Precomputed quadrature data over one scalar Lagrange layout.
///
/// Velocity vectors use the layout of the scalar space, component-major.
/// The mass rule has degree 2n+1; the residual rule has degree 3n.
class Assembler {
public:
    explicit Assembler(const FiniteElementSpace& space)
        : space_(space),
          mass_tab_(tabulate(space.reference(), make_quadrature(2 * space.order() + 1))),
          res_tab_(tabulate(space.reference(), make_quadrature(3 * space.order()))) {
        const Mesh& m = space.mesh();
        const int nq = res_tab_.rule.size();
        res_points_.resize(static_cast<std::size_t>(m.num_triangles()) * nq);
        for (int t = 0; t < m.num_triangles(); ++t) {
            const auto& tri = m.triangles()[t];
            const Point& a = m.vertices()[tri[0]];
            const Point& b = m.vertices()[tri[1]];
            const Point& c = m.vertices()[tri[2]];
            for (int q = 0; q < nq; ++q) {
                const Point& r = res_tab_.rule.points[q];
                res_points_[static_cast<std::size_t>(t) * nq + q] = a + r.x() * (b - a) + r.y() * (c - a);
            }
        }
        const auto [ls, lw] = make_line_quadrature(3 * space.order() + 1);
        line_s_ = ls;
        line_w_ = lw;
        const std::array<Point, 3> rv{Point(0, 0), Point(1, 0), Point(0, 1)};
        for (int k = 0; k < 3; ++k) {
            QuadratureRule r;
            for (std::size_t q = 0; q < ls.size(); ++q) {
                r.points.push_back(rv[k] + ls[q] * (rv[(k + 1) % 3] - rv[k]));
                r.weights.push_back(lw[q]);
            }
            edge_tab_[k] = tabulate(space.reference(), r);
        }
        build_boundary_cells();
    }

    const FiniteElementSpace& space() const { return space_; }
    int num_scalar_dofs() const { return space_.num_scalar_dofs(); }

    /// M_ij = (phi_j, phi_i) on the scalar layout.
    SparseOperator mass() const {
        return assemble_bilinear([](const Eigen::MatrixXd& phi, const Eigen::MatrixXd&, const Eigen::MatrixXd&,
                                    const Eigen::VectorXd& w) { return Eigen::MatrixXd(phi.transpose() * w.asDiagonal() * phi); });
    }

    /// K_ij = (grad phi_j, grad phi_i) on the scalar layout.
    SparseOperator stiffness() const {
        return assemble_bilinear([](const Eigen::MatrixXd&, const Eigen::MatrixXd& gx, const Eigen::MatrixXd& gy,
                                    const Eigen::VectorXd& w) {
            return Eigen::MatrixXd(gx.transpose() * w.asDiagonal() * gx + gy.transpose() * w.asDiagonal() * gy);
        });
    }

    /// b_i = (1, phi_i).
    Vector basis_integrals() const {
        const int N = num_scalar_dofs();
        Vector b = Vector::Zero(N);
        const auto& tab = mass_tab_;
        const Eigen::VectorXd col = tab.phi.transpose() * Eigen::Map<const Eigen::VectorXd>(tab.rule.weights.data(), tab.rule.size());
        for (int t = 0; t < space_.mesh().num_triangles(); ++t) {
            const int* cd = space_.cell_dofs(t);
            const double det = std::abs(space_.jacobian_det(t));
            for (int i = 0; i < space_.nodes_per_cell(); ++i) b(cd[i]) += det * col(i);
        }
        return b;
    }

    /// Momentum residual (-rho u.grad u - grad p + F, phi_i) - mu (grad u, grad phi_i),
    /// returned component-major (length 2N).
    Vector momentum_rhs(const Vector& u, const Vector& p, double rho, double mu, const VectorField& F, double t) const {
        const int N = num_scalar_dofs();
        check_sizes(u, p);
        Vector R = Vector::Zero(2 * N);
        const auto& tab = res_tab_;
        const int nb = space_.nodes_per_cell(), nq = tab.rule.size();
        std::vector<double> ul(nb), vl(nb), pl(nb), gx(nb), gy(nb), r0(nb), r1(nb);
        for (int c = 0; c < space_.mesh().num_triangles(); ++c) {
            const int* cd = space_.cell_dofs(c);
            for (int i = 0; i < nb; ++i) {
                ul[i] = u(cd[i]);
                vl[i] = u(N + cd[i]);
                pl[i] = p(cd[i]);
                r0[i] = r1[i] = 0.0;
            }
            const Eigen::Matrix2d& J = space_.inv_jacobian_t(c);
            const double det = std::abs(space_.jacobian_det(c));
            for (int q = 0; q < nq; ++q) {
                double uq = 0, vq = 0, ux = 0, uy = 0, vx = 0, vy = 0, px = 0, py = 0;
                for (int i = 0; i < nb; ++i) {
                    const double a = tab.dxi(q, i), b = tab.deta(q, i), ph = tab.phi(q, i);
                    gx[i] = J(0, 0) * a + J(0, 1) * b;
                    gy[i] = J(1, 0) * a + J(1, 1) * b;
                    uq += ph * ul[i];
                    vq += ph * vl[i];
                    ux += gx[i] * ul[i];
                    uy += gy[i] * ul[i];
                    vx += gx[i] * vl[i];
                    vy += gy[i] * vl[i];
                    px += gx[i] * pl[i];
                    py += gy[i] * pl[i];
                }
                const double w = tab.rule.weights[q] * det;
                Eigen::Vector2d f = F ? F(res_points_[static_cast<std::size_t>(c) * nq + q], t) : Eigen::Vector2d::Zero();
                const double a0 = w * (-rho * (uq * ux + vq * uy) - px + f.x());
                const double a1 = w * (-rho * (uq * vx + vq * vy) - py + f.y());
                const double mw = w * mu;
                for (int i = 0; i < nb; ++i) {
                    const double ph = tab.phi(q, i);
                    r0[i] += ph * a0 - mw * (gx[i] * ux + gy[i] * uy);
                    r1[i] += ph * a1 - mw * (gx[i] * vx + gy[i] * vy);
                }
            }
            for (int i = 0; i < nb; ++i) {
                R(cd[i]) += r0[i];
                R(N + cd[i]) += r1[i];
            }
        }
        return R;
    }

    /// Volume part of the pressure equation:
    /// (-rho grad u : (grad u)^T + div F + alpha div u, phi_i).
    Vector ppe_rhs(const Vector& u, double rho, double alpha, const ScalarField& divF, double t) const {
        const int N = num_scalar_dofs();
        check_velocity(u);
        Vector f = Vector::Zero(N);
        const auto& tab = res_tab_;
        const int nb = space_.nodes_per_cell(), nq = tab.rule.size();
        std::vector<double> ul(nb), vl(nb), loc(nb);
        for (int c = 0; c < space_.mesh().num_triangles(); ++c) {
            const int* cd = space_.cell_dofs(c);
            for (int i = 0; i < nb; ++i) {
                ul[i] = u(cd[i]);
                vl[i] = u(N + cd[i]);
                loc[i] = 0.0;
            }
            const Eigen::Matrix2d& J = space_.inv_jacobian_t(c);
            const double det = std::abs(space_.jacobian_det(c));
            for (int q = 0; q < nq; ++q) {
                double ux = 0, uy = 0, vx = 0, vy = 0;
                for (int i = 0; i < nb; ++i) {
                    const double a = tab.dxi(q, i), b = tab.deta(q, i);
                    const double gx = J(0, 0) * a + J(0, 1) * b, gy = J(1, 0) * a + J(1, 1) * b;
                    ux += gx * ul[i];
                    uy += gy * ul[i];
                    vx += gx * vl[i];
                    vy += gy * vl[i];
                }
                double v = -rho * (ux * ux + 2.0 * uy * vx + vy * vy) + alpha * (ux + vy);
                if (divF) v += divF(res_points_[static_cast<std::size_t>(c) * nq + q], t);
                const double s = tab.rule.weights[q] * det * v;
                for (int i = 0; i < nb; ++i) loc[i] += tab.phi(q, i) * s;
            }
            for (int i = 0; i < nb; ++i) f(cd[i]) += loc[i];
        }
        return f;
    }

    /// Natural boundary functional of the pressure equation:
    /// <n.(-rho g_t - rho g.grad u + F), phi_i> + mu <curl u, n x grad phi_i>.
    /// When g_t is empty it is approximated by a forward difference of g.
    Vector tn_boundary(const Vector& u, double rho, double mu, const VectorField& g, const VectorField& g_t,
                       const VectorField& F, double t) const {
        const int N = num_scalar_dofs();
        check_velocity(u);
        Vector out = Vector::Zero(N);
        const Mesh& m = space_.mesh();
        const int nb = space_.nodes_per_cell(), nq = static_cast<int>(line_s_.size());
        Eigen::MatrixXd ul(nb, 2), gx(nq, nb), gy(nq, nb), ux(nq, 2), uy(nq, 2);
        const double delta = std::sqrt(std::numeric_limits<double>::epsilon()) * std::max(1.0, std::abs(t));
        for (int i : space_.active_boundary_edges()) {
            const auto& be = m.boundary_edges()[i];
            const int c = m.boundary_owner(i);
            const int k = local_vertex(c, be.v[0]);
            const int* cd = space_.cell_dofs(c);
            for (int j = 0; j < nb; ++j) {
                ul(j, 0) = u(cd[j]);
                ul(j, 1) = u(N + cd[j]);
            }
            const auto& tab = edge_tab_[k];
            physical_gradients(c, tab, gx, gy);
            ux.noalias() = gx * ul;
            uy.noalias() = gy * ul;
            const Point a = m.vertices()[be.v[0]], b = m.vertices()[be.v[1]];
            const double L = (b - a).norm();
            const Point n = m.boundary_edge_normal(i);
            for (int q = 0; q < nq; ++q) {
                const Point x = a + line_s_[q] * (b - a);
                Eigen::Vector2d gv = g ? g(x, t) : Eigen::Vector2d::Zero();
                Eigen::Vector2d gtv = Eigen::Vector2d::Zero();
                if (g_t) gtv = g_t(x, t);
                else if (g) gtv = (g(x, t + delta) - gv) / delta;
                Eigen::Vector2d fv = F ? F(x, t) : Eigen::Vector2d::Zero();
                Eigen::Vector2d conv(gv.x() * ux(q, 0) + gv.y() * uy(q, 0), gv.x() * ux(q, 1) + gv.y() * uy(q, 1));
                const double sn = n.dot(-rho * gtv - rho * conv + fv);
                const double om = curl2d(uy(q, 0), ux(q, 1));
                const double w = line_w_[q] * L;
                for (int j = 0; j < nb; ++j)
                    out(cd[j]) += w * (sn * tab.phi(q, j) + mu * om * (n.x() * gy(q, j) - n.y() * gx(q, j)));
            }
        }
        return out;
    }

    /// Boundary dofs receiving replacement pressure rows, in ascending order.
    const std::vector<int>& wabe_dofs() const { return space_.boundary_dofs(); }

    /// Row scale 2/h_local for each wabe dof; h_local is the mean length of the
    /// active boundary edges through the dof.
    const std::vector<double>& wabe_scale() const { return wabe_scale_; }

    /// Scaled rows (n_ib . grad p, phi_ib) as a (boundary dofs) x N operator.
    SparseOperator wabe_matrix() const {
        require_normals();
        const int N = num_scalar_dofs();
        const auto& tab = mass_tab_;
        const int nb = space_.nodes_per_cell(), nq = tab.rule.size();
        Eigen::MatrixXd gx(nq, nb), gy(nq, nb);
        std::vector<Eigen::Triplet<double>> trip;
        for (const auto& bc : boundary_cells_) {
            physical_gradients(bc.cell, tab, gx, gy);
            const int* cd = space_.cell_dofs(bc.cell);
            const double det = std::abs(space_.jacobian_det(bc.cell));
            for (const auto& [li, row] : bc.locals) {
                const Point& n = wabe_normals_[row];
                for (int j = 0; j < nb; ++j) {
                    double v = 0.0;
                    for (int q = 0; q < nq; ++q)
                        v += tab.rule.weights[q] * tab.phi(q, li) * (n.x() * gx(q, j) + n.y() * gy(q, j));
                    trip.emplace_back(row, cd[j], wabe_scale_[row] * det * v);
                }
            }
        }
        SparseOperator W(static_cast<int>(wabe_dofs().size()), N);
        W.setFromTriplets(trip.begin(), trip.end());
        return W;
    }

    /// Scaled right sides of the replacement rows:
    /// -rho (n.(u_t + u.grad u), phi) + mu (curl u, n x grad phi) + (n.F, phi),
    /// with u_t = (u_new - u_old)/dt and u = u_new.
    Vector wabe_rhs(const Vector& u_new, const Vector& u_old, double dt, double rho, double mu, const VectorField& F,
                    double t) const {
        require_normals();
        check_velocity(u_new);
        check_velocity(u_old);
        if (!(dt > 0.0)) throw InvalidArgument("wabe_rhs: dt must be positive");
        const int N = num_scalar_dofs();
        const auto& tab = res_tab_;
        const int nb = space_.nodes_per_cell(), nq = tab.rule.size();
        Eigen::MatrixXd ul(nb, 2), dl(nb, 2), gx(nq, nb), gy(nq, nb), uq(nq, 2), dq(nq, 2), ux(nq, 2), uy(nq, 2);
        Vector out = Vector::Zero(static_cast<int>(wabe_dofs().size()));
        for (const auto& bc : boundary_cells_) {
            const int c = bc.cell;
            const int* cd = space_.cell_dofs(c);
            for (int j = 0; j < nb; ++j) {
                ul(j, 0) = u_new(cd[j]);
                ul(j, 1) = u_new(N + cd[j]);
                dl(j, 0) = (u_new(cd[j]) - u_old(cd[j])) / dt;
                dl(j, 1) = (u_new(N + cd[j]) - u_old(N + cd[j])) / dt;
            }
            physical_gradients(c, tab, gx, gy);
            uq.noalias() = tab.phi * ul;
            dq.noalias() = tab.phi * dl;
            ux.noalias() = gx * ul;
            uy.noalias() = gy * ul;
            const double det = std::abs(space_.jacobian_det(c));
            for (int q = 0; q < nq; ++q) {
                const double w = tab.rule.weights[q] * det;
                Eigen::Vector2d f = F ? F(res_points_[static_cast<std::size_t>(c) * nq + q], t) : Eigen::Vector2d::Zero();
                Eigen::Vector2d a(dq(q, 0) + uq(q, 0) * ux(q, 0) + uq(q, 1) * uy(q, 0),
                                  dq(q, 1) + uq(q, 0) * ux(q, 1) + uq(q, 1) * uy(q, 1));
                const Eigen::Vector2d body = -rho * a + f;
                const double om = curl2d(uy(q, 0), ux(q, 1));
                for (const auto& [li, row] : bc.locals) {
                    const Point& n = wabe_normals_[row];
                    out(row) += w * (n.dot(body) * tab.phi(q, li) + mu * om * (n.x() * gy(q, li) - n.y() * gx(q, li)));
                }
            }
        }
        for (int r = 0; r < out.size(); ++r) out(r) *= wabe_scale_[r];
        return out;
    }

    struct DivergenceNorms {
        double linf = 0.0;
        double l2 = 0.0;
    };

    /// Norms of the piecewise-polynomial divergence of u over mass-rule points.
    DivergenceNorms divergence(const Vector& u) const {
        check_velocity(u);
        const int N = num_scalar_dofs();
        const auto& tab = mass_tab_;
        const int nb = space_.nodes_per_cell(), nq = tab.rule.size();
        Eigen::MatrixXd ul(nb, 2), gx(nq, nb), gy(nq, nb);
        DivergenceNorms d;
        double sum = 0.0;
        for (int c = 0; c < space_.mesh().num_triangles(); ++c) {
            const int* cd = space_.cell_dofs(c);
            for (int i = 0; i < nb; ++i) {
                ul(i, 0) = u(cd[i]);
                ul(i, 1) = u(N + cd[i]);
            }
            physical_gradients(c, tab, gx, gy);
            const Eigen::VectorXd div = gx * ul.col(0) + gy * ul.col(1);
            const double det = std::abs(space_.jacobian_det(c));
            for (int q = 0; q < nq; ++q) {
                d.linf = std::max(d.linf, std::abs(div(q)));
                sum += tab.rule.weights[q] * det * div(q) * div(q);
            }
        }
        d.l2 = std::sqrt(sum);
        return d;
    }

    /// sqrt(integral of e^2) for a scalar coefficient vector, mass-rule quadrature.
    double l2_norm(const Vector& e) const {
        const auto& tab = mass_tab_;
        const int nb = space_.nodes_per_cell(), nq = tab.rule.size();
        Eigen::VectorXd el(nb);
        double sum = 0.0;
        for (int c = 0; c < space_.mesh().num_triangles(); ++c) {
            const int* cd = space_.cell_dofs(c);
            for (int i = 0; i < nb; ++i) el(i) = e(cd[i]);
            const Eigen::VectorXd v = tab.phi * el;
            const double det = std::abs(space_.jacobian_det(c));
            for (int q = 0; q < nq; ++q) sum += tab.rule.weights[q] * det * v(q) * v(q);
        }
        return std::sqrt(sum);
    }

    /// Physical gradients of all basis functions at the points of `tab` on cell c.
    void physical_gradients(int c, const Tabulation& tab, Eigen::MatrixXd& gx, Eigen::MatrixXd& gy) const {
        const Eigen::Matrix2d& J = space_.inv_jacobian_t(c);
        gx.noalias() = J(0, 0) * tab.dxi + J(0, 1) * tab.deta;
        gy.noalias() = J(1, 0) * tab.dxi + J(1, 1) * tab.deta;
    }

    const Tabulation& mass_tabulation() const { return mass_tab_; }
    const Tabulation& residual_tabulation() const { return res_tab_; }

private:
    struct BoundaryCell {
        int cell;
        std::vector<std::pair<int, int>> locals;  // (local node, wabe row)
    };

    template <typename ElementMatrix>
    SparseOperator assemble_bilinear(ElementMatrix em) const {
        const int N = num_scalar_dofs();
        const auto& tab = mass_tab_;
        const int nb = space_.nodes_per_cell(), nq = tab.rule.size();
        Eigen::MatrixXd gx(nq, nb), gy(nq, nb);
        const Eigen::VectorXd wref = Eigen::Map<const Eigen::VectorXd>(tab.rule.weights.data(), nq);
        std::vector<Eigen::Triplet<double>> trip;
        trip.reserve(static_cast<std::size_t>(space_.mesh().num_triangles()) * nb * nb);
        for (int c = 0; c < space_.mesh().num_triangles(); ++c) {
            physical_gradients(c, tab, gx, gy);
            const Eigen::VectorXd w = wref * std::abs(space_.jacobian_det(c));
            const Eigen::MatrixXd loc = em(tab.phi, gx, gy, w);
            const int* cd = space_.cell_dofs(c);
            for (int i = 0; i < nb; ++i)
                for (int j = 0; j < nb; ++j) trip.emplace_back(cd[i], cd[j], i <= j ? loc(i, j) : loc(j, i));
        }
        SparseOperator A(N, N);
        A.setFromTriplets(trip.begin(), trip.end());
        return A;
    }

    int local_vertex(int c, int v) const {
        const auto& tri = space_.mesh().triangles()[c];
        for (int k = 0; k < 3; ++k)
            if (tri[k] == v) return k;
        throw MalformedMesh("boundary edge vertex not found in its owning triangle");
    }

    void build_boundary_cells() {
        const auto& dofs = space_.boundary_dofs();
        std::vector<int> row_of(num_scalar_dofs(), -1);
        for (int r = 0; r < static_cast<int>(dofs.size()); ++r) row_of[dofs[r]] = r;
        for (int c = 0; c < space_.mesh().num_triangles(); ++c) {
            const int* cd = space_.cell_dofs(c);
            BoundaryCell bc{c, {}};
            for (int i = 0; i < space_.nodes_per_cell(); ++i)
                if (row_of[cd[i]] >= 0) bc.locals.emplace_back(i, row_of[cd[i]]);
            if (!bc.locals.empty()) boundary_cells_.push_back(std::move(bc));
        }
        std::vector<double> hsum(dofs.size(), 0.0);
        std::vector<int> hcount(dofs.size(), 0);
        for (int i : space_.active_boundary_edges()) {
            const auto& be = space_.mesh().boundary_edges()[i];
            const double L = (space_.mesh().vertices()[be.v[1]] - space_.mesh().vertices()[be.v[0]]).norm();
            for (int d : space_.boundary_edge_dofs(i)) {
                hsum[row_of[d]] += L;
                ++hcount[row_of[d]];
            }
        }
        wabe_scale_.resize(dofs.size());
        for (std::size_t r = 0; r < dofs.size(); ++r) wabe_scale_[r] = 2.0 * hcount[r] / hsum[r];
        const auto& normals = space_.boundary_normals();
        if (!normals.empty()) {
            wabe_normals_.resize(dofs.size());
            for (std::size_t r = 0; r < dofs.size(); ++r) wabe_normals_[r] = normals.at(dofs[r]);
        }
    }

    void require_normals() const {
        if (wabe_normals_.empty())
            throw PreconditionFailure("replacement pressure rows need node normals (call compute_node_normals)");
    }

    void check_velocity(const Vector& u) const {
        if (u.size() != 2 * num_scalar_dofs())
            throw InvalidArgument("velocity vector has length " + std::to_string(u.size()) + ", expected " +
                                  std::to_string(2 * num_scalar_dofs()));
    }

    void check_sizes(const Vector& u, const Vector& p) const {
        check_velocity(u);
        if (p.size() != num_scalar_dofs())
            throw InvalidArgument("pressure vector has length " + std::to_string(p.size()) + ", expected " +
                                  std::to_string(num_scalar_dofs()));
    }

    const FiniteElementSpace& space_;
    Tabulation mass_tab_;
    Tabulation res_tab_;
    std::array<Tabulation, 3> edge_tab_;
    std::vector<double> line_s_, line_w_;
    std::vector<Point> res_points_;
    std::vector<BoundaryCell> boundary_cells_;
    std::vector<double> wabe_scale_;
    std::vector<Point> wabe_normals_;
};

// ---------------------------------------------------------------------------
// Free-function entry points

namespace detail {

inline SparseOperator block_diagonal(const SparseOperator& A) {
    std::vector<Eigen::Triplet<double>> trip;
    const int N = static_cast<int>(A.rows());
    for (int r = 0; r < N; ++r)
        for (SparseOperator::InnerIterator it(A, r); it; ++it) {
            trip.emplace_back(r, it.col(), it.value());
            trip.emplace_back(N + r, N + it.col(), it.value());
        }
    SparseOperator B(2 * N, 2 * N);
    B.setFromTriplets(trip.begin(), trip.end());
    return B;
}

}  // namespace detail

/// Mass matrix; block diagonal over components for a vector space.
inline SparseOperator assemble_mass(const FiniteElementSpace& space) {
    SparseOperator M = Assembler(space).mass();
    return space.components() == 2 ? detail::block_diagonal(M) : M;
}

inline SparseOperator assemble_stiffness(const FiniteElementSpace& space) {
    SparseOperator K = Assembler(space).stiffness();
    return space.components() == 2 ? detail::block_diagonal(K) : K;
}

inline Vector apply_momentum_rhs(const FiniteElementSpace& space, const Vector& u, const Vector& p, double rho,
                                 double mu, const VectorField& F, double t) {
    return Assembler(space).momentum_rhs(u, p, rho, mu, F, t);
}

inline Vector assemble_ppe_rhs(const FiniteElementSpace& space, const Vector& u, double rho, double alpha,
                               const ScalarField& divF, double t) {
    return Assembler(space).ppe_rhs(u, rho, alpha, divF, t);
}

inline Vector assemble_tn_boundary(const FiniteElementSpace& space, const Vector& u, double rho, double mu,
                                   const VectorField& g, const VectorField& g_t, const VectorField& F, double t) {
    return Assembler(space).tn_boundary(u, rho, mu, g, g_t, F, t);
}

struct WabeRows {
    std::vector<int> rows;  // scalar boundary dofs
    SparseOperator coeffs;  // rows.size() x N, scaled by 2/h_local
    Vector rhs;             // scaled identically
};

inline WabeRows assemble_wabe_rows(const FiniteElementSpace& space, const Vector& u_new, const Vector& u_old,
                                   double dt, double rho, double mu, const VectorField& F, double t) {
    Assembler a(space);
    return {a.wabe_dofs(), a.wabe_matrix(), a.wabe_rhs(u_new, u_old, dt, rho, mu, F, t)};
}

inline Assembler::DivergenceNorms eval_divergence(const FiniteElementSpace& space, const Vector& u) {
    return Assembler(space).divergence(u);
}

/// Row-sum lumped copy of a matrix (diagonal).
inline SparseOperator lump(const SparseOperator& M) {
    SparseOperator L(M.rows(), M.cols());
    std::vector<Eigen::Triplet<double>> trip;
    for (int r = 0; r < M.outerSize(); ++r) {
        double s = 0.0;
        for (SparseOperator::InnerIterator it(M, r); it; ++it) s += it.value();
        trip.emplace_back(r, r, s);
    }
    L.setFromTriplets(trip.begin(), trip.end());
    return L;
}

// ---------------------------------------------------------------------------
// Dirichlet conditions

/// Constrained dofs (in the space's full vector indexing) and their values.
struct DirichletData {
    std::vector<int> dofs;
    std::vector<double> values;
};

/// Nodal values of g on the boundary dofs of the given tags (all active tags if empty).
inline DirichletData dirichlet_data(const FiniteElementSpace& space, const std::set<int>& tags, const VectorField& g,
                                    double t) {
    std::set<int> scalar;
    if (tags.empty()) {
        scalar.insert(space.boundary_dofs().begin(), space.boundary_dofs().end());
    } else {
        for (int tag : tags) scalar.insert(space.boundary_dofs(tag).begin(), space.boundary_dofs(tag).end());
    }
    const int N = space.num_scalar_dofs();
    DirichletData d;
    std::vector<Eigen::Vector2d> vals;
    for (int j : scalar) vals.push_back(g ? g(space.dof_coords()[j], t) : Eigen::Vector2d::Zero());
    for (int c = 0; c < space.components(); ++c) {
        int k = 0;
        for (int j : scalar) {
            d.dofs.push_back(c * N + j);
            d.values.push_back(vals[k++](c));
        }
    }
    return d;
}

enum class DirichletMode { RowReplacement, SymmetricElimination };

/// Imposes constrained values on A x = rhs. Row replacement swaps each
/// constrained row for an identity row; symmetric elimination additionally
/// moves the constrained columns to the right side.
inline void apply_dirichlet(SparseOperator& A, Vector& rhs, const DirichletData& bc,
                            DirichletMode mode = DirichletMode::RowReplacement) {
    const int n = static_cast<int>(A.rows());
    std::vector<char> fixed(n, 0);
    Vector g = Vector::Zero(n);
    for (std::size_t k = 0; k < bc.dofs.size(); ++k) {
        fixed[bc.dofs[k]] = 1;
        g(bc.dofs[k]) = bc.values[k];
    }
    if (mode == DirichletMode::SymmetricElimination) rhs -= A * g;
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(A.nonZeros());
    for (int r = 0; r < n; ++r) {
        if (fixed[r]) {
            trip.emplace_back(r, r, 1.0);
            continue;
        }
        for (SparseOperator::InnerIterator it(A, r); it; ++it)
            if (mode == DirichletMode::RowReplacement || !fixed[it.col()]) trip.emplace_back(r, it.col(), it.value());
    }
    A.setZero();
    A.setFromTriplets(trip.begin(), trip.end());
    for (std::size_t k = 0; k < bc.dofs.size(); ++k) rhs(bc.dofs[k]) = bc.values[k];
}

// ---------------------------------------------------------------------------
// Point evaluation

/// Triangle containing x (lowest index on ties) and the reference coordinates.
struct Location {
    int triangle;
    Point ref;
};

inline std::optional<Location> locate(const Mesh& mesh, const Point& x, double tol = 1e-12) {
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto& tri = mesh.triangles()[t];
        const Point& a = mesh.vertices()[tri[0]];
        Eigen::Matrix2d J;
        J.col(0) = mesh.vertices()[tri[1]] - a;
        J.col(1) = mesh.vertices()[tri[2]] - a;
        const Point r = J.inverse() * (x - a);
        if (r.x() >= -tol && r.y() >= -tol && r.x() + r.y() <= 1.0 + tol) return Location{t, r};
    }
    return std::nullopt;
}

/// Value of component `comp` of a finite-element field at x.
inline double evaluate(const FiniteElementSpace& space, const Vector& coeffs, const Point& x, int comp = 0) {
    const auto loc = locate(space.mesh(), x);
    if (!loc)
        throw EvaluationError("point (" + std::to_string(x.x()) + ", " + std::to_string(x.y()) +
                              ") lies outside the mesh");
    const Eigen::VectorXd phi = space.reference().basis(loc->ref);
    const int* cd = space.cell_dofs(loc->triangle);
    const int off = comp * space.num_scalar_dofs();
    double v = 0.0;
    for (int i = 0; i < space.nodes_per_cell(); ++i) v += phi(i) * coeffs(off + cd[i]);
    return v;
}

/// Gradient of component `comp` at x.
inline Eigen::Vector2d evaluate_gradient(const FiniteElementSpace& space, const Vector& coeffs, const Point& x,
                                         int comp = 0) {
    const auto loc = locate(space.mesh(), x);
    if (!loc) throw EvaluationError("point lies outside the mesh");
    const Eigen::MatrixX2d g = space.reference().grad(loc->ref);
    const int* cd = space.cell_dofs(loc->triangle);
    const int off = comp * space.num_scalar_dofs();
    Eigen::Vector2d r = Eigen::Vector2d::Zero();
    for (int i = 0; i < space.nodes_per_cell(); ++i) r += coeffs(off + cd[i]) * g.row(i).transpose();
    return space.inv_jacobian_t(loc->triangle) * r;
}

}  // namespace splitfem
