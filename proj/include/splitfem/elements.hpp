#pragma once

// Lagrange P_n reference elements, triangle quadrature, and global dof layout.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <numbers>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "splitfem/errors.hpp"
#include "splitfem/mesh.hpp"

namespace splitfem {

// ---------------------------------------------------------------------------
// Quadrature

/// Points are reference coordinates (xi, eta) on the triangle (0,0), (1,0), (0,1).
struct QuadratureRule {
    int degree = 0;
    std::vector<Point> points;
    std::vector<double> weights;  // sum = 1/2
    int size() const { return static_cast<int>(points.size()); }
};

/// Gauss-Jacobi nodes and weights for (1-x)^a (1+x)^b on [-1, 1] (Golub-Welsch).
inline std::pair<std::vector<double>, std::vector<double>> gauss_jacobi(int m, double a, double b) {
    if (m < 1) throw InvalidArgument("gauss_jacobi: need at least one point");
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(m, m);
    for (int k = 0; k < m; ++k) {
        const double s = 2.0 * k + a + b;
        J(k, k) = (k == 0) ? (b - a) / (a + b + 2.0) : (b * b - a * a) / (s * (s + 2.0));
        if (k + 1 < m) {
            const double n = k + 1.0;
            const double t = 2.0 * n + a + b;
            const double off =
                std::sqrt(4.0 * n * (n + a) * (n + b) * (n + a + b) / (t * t * (t + 1.0) * (t - 1.0)));
            J(k, k + 1) = J(k + 1, k) = off;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    const double mu0 = std::pow(2.0, a + b + 1.0) * std::tgamma(a + 1.0) * std::tgamma(b + 1.0) /
                       std::tgamma(a + b + 2.0);
    std::vector<double> x(m), w(m);
    for (int k = 0; k < m; ++k) {
        x[k] = es.eigenvalues()(k);
        w[k] = mu0 * es.eigenvectors()(0, k) * es.eigenvectors()(0, k);
    }
    return {x, w};
}

/// Gauss-Legendre rule on [0, 1].
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre01(int m) {
    auto [x, w] = gauss_jacobi(m, 0.0, 0.0);
    for (int k = 0; k < m; ++k) {
        x[k] = 0.5 * (x[k] + 1.0);
        w[k] *= 0.5;
    }
    return {x, w};
}

namespace detail {

inline void add_orbit(QuadratureRule& r, double l0, double l1, double l2, double w) {
    std::array<double, 3> l{l0, l1, l2};
    std::sort(l.begin(), l.end());
    do {
        r.points.emplace_back(l[1], l[2]);
        r.weights.push_back(0.5 * w);
    } while (std::next_permutation(l.begin(), l.end()));
}

inline QuadratureRule conical_product(int degree) {
    const int m = (degree + 2) / 2;
    auto [xa, wa] = gauss_legendre01(m);
    auto [xb, wb] = gauss_jacobi(m, 1.0, 0.0);
    QuadratureRule r;
    r.degree = degree;
    for (int j = 0; j < m; ++j) {
        const double b = 0.5 * (xb[j] + 1.0);
        const double wbj = wb[j] / 4.0;  // (1-b) db on [0,1] from (1-x) dx on [-1,1]
        for (int i = 0; i < m; ++i) {
            r.points.emplace_back(xa[i] * (1.0 - b), b);
            r.weights.push_back(wa[i] * wbj);
        }
    }
    return r;
}

}  // namespace detail

/// Quadrature exact for polynomials of total degree <= `degree` (1..12).
///
/// Degrees 1-5 use symmetric Gauss rules with interior points; higher degrees
/// use a collapsed Gauss-Legendre x Gauss-Jacobi product.
inline QuadratureRule make_quadrature(int degree) {
    if (degree < 1 || degree > 12)
        throw InvalidArgument("make_quadrature: degree " + std::to_string(degree) + " outside [1, 12]");
    QuadratureRule r;
    r.degree = degree;
    switch (degree) {
    case 1:
        r.points.emplace_back(1.0 / 3.0, 1.0 / 3.0);
        r.weights.push_back(0.5);
        return r;
    case 2:
        detail::add_orbit(r, 1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0, 1.0 / 3.0);
        return r;
    case 3:
        detail::add_orbit(r, 0.659027622374092, 0.231933368553031, 0.109039009072877, 1.0 / 6.0);
        return r;
    case 4:
        detail::add_orbit(r, 0.108103018168070, 0.445948490915965, 0.445948490915965, 0.223381589678011);
        detail::add_orbit(r, 0.816847572980459, 0.091576213509771, 0.091576213509771, 0.109951743655322);
        return r;
    case 5:
        r.points.emplace_back(1.0 / 3.0, 1.0 / 3.0);
        r.weights.push_back(0.5 * 0.225);
        detail::add_orbit(r, 0.059715871789770, 0.470142064105115, 0.470142064105115, 0.132394152788506);
        detail::add_orbit(r, 0.797426985353087, 0.101286507323456, 0.101286507323456, 0.125939180544827);
        return r;
    default:
        return detail::conical_product(degree);
    }
}

/// Gauss-Legendre rule on [0, 1] exact to `degree`.
inline std::pair<std::vector<double>, std::vector<double>> make_line_quadrature(int degree) {
    return gauss_legendre01(std::max(1, (degree + 2) / 2));
}

// ---------------------------------------------------------------------------
// Reference element

/// Equispaced Lagrange element of order 1, 2, or 4.
///
/// Node order: the three vertices, then the n-1 nodes of each edge
/// (0-1, 1-2, 2-0) walking from the first vertex to the second, then the
/// interior nodes row by row.
class ReferenceElement {
public:
    explicit ReferenceElement(int order) : order_(order) {
        if (order != 1 && order != 2 && order != 4)
            throw InvalidArgument("unsupported element order " + std::to_string(order) + " (use 1, 2 or 4)");
        const int n = order;
        auto lattice = [n](int i, int j) { return Point(static_cast<double>(i) / n, static_cast<double>(j) / n); };
        nodes_ = {lattice(0, 0), lattice(n, 0), lattice(0, n)};
        for (int k = 1; k < n; ++k) nodes_.push_back(lattice(k, 0));
        for (int k = 1; k < n; ++k) nodes_.push_back(lattice(n - k, k));
        for (int k = 1; k < n; ++k) nodes_.push_back(lattice(0, n - k));
        for (int j = 1; j < n; ++j)
            for (int i = 1; i + j < n; ++i) nodes_.push_back(lattice(i, j));

        for (int d = 0; d <= n; ++d)
            for (int b = 0; b <= d; ++b) exps_.push_back({d - b, b});
        const int nb = node_count();
        Eigen::MatrixXd V(nb, nb);
        for (int i = 0; i < nb; ++i)
            for (int m = 0; m < nb; ++m) V(i, m) = monomial(m, nodes_[i]);
        coeffs_ = V.inverse();  // column i: monomial coefficients of basis i
    }

    int order() const { return order_; }
    int node_count() const { return (order_ + 1) * (order_ + 2) / 2; }
    const std::vector<Point>& nodes() const { return nodes_; }

    /// Basis values at reference point x.
    Eigen::VectorXd basis(const Point& x) const {
        Eigen::VectorXd mono(node_count());
        for (int m = 0; m < node_count(); ++m) mono(m) = monomial(m, x);
        return coeffs_.transpose() * mono;
    }

    /// Reference gradients at x; row i holds (d/dxi, d/deta) of basis i.
    Eigen::MatrixX2d grad(const Point& x) const {
        Eigen::MatrixX2d dm(node_count(), 2);
        for (int m = 0; m < node_count(); ++m) {
            const auto [a, b] = exps_[m];
            dm(m, 0) = a == 0 ? 0.0 : a * ipow(x.x(), a - 1) * ipow(x.y(), b);
            dm(m, 1) = b == 0 ? 0.0 : b * ipow(x.x(), a) * ipow(x.y(), b - 1);
        }
        return coeffs_.transpose() * dm;
    }

private:
    static double ipow(double v, int e) {
        double r = 1.0;
        for (int i = 0; i < e; ++i) r *= v;
        return r;
    }
    double monomial(int m, const Point& x) const { return ipow(x.x(), exps_[m][0]) * ipow(x.y(), exps_[m][1]); }

    int order_;
    std::vector<Point> nodes_;
    std::vector<std::array<int, 2>> exps_;
    Eigen::MatrixXd coeffs_;
};

inline ReferenceElement make_reference_element(int n) { return ReferenceElement(n); }

/// Basis values and reference gradients tabulated at the points of a rule.
struct Tabulation {
    QuadratureRule rule;
    Eigen::MatrixXd phi;   // (points x basis)
    Eigen::MatrixXd dxi;   // (points x basis)
    Eigen::MatrixXd deta;  // (points x basis)
};

inline Tabulation tabulate(const ReferenceElement& ref, const QuadratureRule& rule) {
    Tabulation t{rule, Eigen::MatrixXd(rule.size(), ref.node_count()), Eigen::MatrixXd(rule.size(), ref.node_count()),
                 Eigen::MatrixXd(rule.size(), ref.node_count())};
    for (int q = 0; q < rule.size(); ++q) {
        t.phi.row(q) = ref.basis(rule.points[q]).transpose();
        const Eigen::MatrixX2d g = ref.grad(rule.points[q]);
        t.dxi.row(q) = g.col(0).transpose();
        t.deta.row(q) = g.col(1).transpose();
    }
    return t;
}

// ---------------------------------------------------------------------------
// Global dof layout

/// Lagrange P_n dof layout over a mesh.
///
/// Scalar dofs: vertices first (same index as the vertex), then edge nodes
/// (n-1 per edge, ordered from the lower to the higher vertex index), then
/// triangle-interior nodes. A vector-valued space stores component c of
/// scalar dof j at c * num_scalar_dofs() + j.
///
/// With periodic_x, nodes on x = 1 are identified with the nodes on x = 0 at
/// the same height and the left/right boundary tags become inactive.
class FiniteElementSpace {
public:
    FiniteElementSpace(const Mesh& mesh, int order, int components, bool periodic_x = false)
        : mesh_(std::make_shared<const Mesh>(mesh)), ref_(order), components_(components), periodic_x_(periodic_x) {
        if (components != 1 && components != 2) throw InvalidArgument("components must be 1 or 2");
        build();
    }

    const Mesh& mesh() const { return *mesh_; }
    const ReferenceElement& reference() const { return ref_; }
    int order() const { return ref_.order(); }
    int components() const { return components_; }
    bool periodic_x() const { return periodic_x_; }
    int num_scalar_dofs() const { return num_dofs_; }
    int size() const { return num_dofs_ * components_; }
    int nodes_per_cell() const { return ref_.node_count(); }

    /// Global scalar dofs of triangle t in reference node order.
    const int* cell_dofs(int t) const { return cell_dofs_.data() + static_cast<std::size_t>(t) * nodes_per_cell(); }

    const std::vector<Point>& dof_coords() const { return coords_; }

    /// Sorted scalar dofs on edges carrying `tag`; empty for inactive tags.
    const std::vector<int>& boundary_dofs(int tag) const {
        static const std::vector<int> none;
        auto it = tag_dofs_.find(tag);
        return it == tag_dofs_.end() ? none : it->second;
    }
    /// Sorted scalar dofs on any active boundary edge.
    const std::vector<int>& boundary_dofs() const { return all_boundary_; }
    bool is_boundary(int dof) const { return on_boundary_[dof] != 0; }

    /// Indices into mesh().boundary_edges() that remain boundaries of this space.
    const std::vector<int>& active_boundary_edges() const { return active_edges_; }

    /// Scalar dofs along boundary edge i, in reference order from be.v[0] to be.v[1].
    std::vector<int> boundary_edge_dofs(int i) const {
        const auto& be = mesh_->boundary_edges()[i];
        const int t = mesh_->boundary_owner(i);
        const auto& tri = mesh_->triangles()[t];
        int k = 0;
        while (tri[k] != be.v[0]) ++k;
        const int n = order();
        const int* cd = cell_dofs(t);
        std::vector<int> out{cd[k]};
        for (int j = 1; j < n; ++j) out.push_back(cd[3 + k * (n - 1) + (j - 1)]);
        out.push_back(cd[(k + 1) % 3]);
        return out;
    }

    /// Unit outward normal per boundary dof. Vertex dofs take the mesh node
    /// normal (or, in periodic mode, the normalized sum of the active adjacent
    /// edge normals); edge nodes take their edge normal. Empty when the mesh
    /// carries no node normals.
    const std::map<int, Point>& boundary_normals() const { return normals_; }

    /// Affine map data of triangle t.
    const Eigen::Matrix2d& inv_jacobian_t(int t) const { return jinv_t_[t]; }
    double jacobian_det(int t) const { return det_[t]; }

    Eigen::VectorXd interpolate(const std::function<double(const Point&)>& f) const {
        if (components_ != 1) throw InvalidArgument("interpolate: scalar function on a vector space");
        Eigen::VectorXd v(num_dofs_);
        for (int j = 0; j < num_dofs_; ++j) v(j) = f(coords_[j]);
        return v;
    }

    Eigen::VectorXd interpolate(const std::function<Eigen::Vector2d(const Point&)>& f) const {
        if (components_ != 2) throw InvalidArgument("interpolate: vector function on a scalar space");
        Eigen::VectorXd v(size());
        for (int j = 0; j < num_dofs_; ++j) {
            const Eigen::Vector2d w = f(coords_[j]);
            v(j) = w.x();
            v(num_dofs_ + j) = w.y();
        }
        return v;
    }

private:
    void build() {
        const Mesh& m = *mesh_;
        const int n = order();
        const int nb = nodes_per_cell();
        const int nv = m.num_vertices();
        const int ne = m.num_edges();
        const int ni = (n - 1) * (n - 2) / 2;
        int count = nv + ne * (n - 1) + m.num_triangles() * ni;

        cell_dofs_.assign(static_cast<std::size_t>(m.num_triangles()) * nb, -1);
        coords_.assign(count, Point::Zero());
        jinv_t_.resize(m.num_triangles());
        det_.resize(m.num_triangles());
        for (int t = 0; t < m.num_triangles(); ++t) {
            const auto& tri = m.triangles()[t];
            const Point& a = m.vertices()[tri[0]];
            Eigen::Matrix2d J;
            J.col(0) = m.vertices()[tri[1]] - a;
            J.col(1) = m.vertices()[tri[2]] - a;
            det_[t] = J.determinant();
            jinv_t_[t] = J.inverse().transpose();

            int* cd = cell_dofs_.data() + static_cast<std::size_t>(t) * nb;
            for (int k = 0; k < 3; ++k) cd[k] = tri[k];
            for (int k = 0; k < 3; ++k) {
                const int va = tri[k], vb = tri[(k + 1) % 3];
                const int e = m.triangle_edges(t)[k];
                for (int j = 1; j < n; ++j) {
                    const int pos = (va < vb) ? j : n - j;
                    cd[3 + k * (n - 1) + (j - 1)] = nv + e * (n - 1) + (pos - 1);
                }
            }
            for (int j = 0; j < ni; ++j) cd[3 + 3 * (n - 1) + j] = nv + ne * (n - 1) + t * ni + j;
            for (int i = 0; i < nb; ++i) coords_[cd[i]] = a + J * ref_.nodes()[i];
        }
        for (int v = 0; v < nv; ++v) coords_[v] = m.vertices()[v];

        std::set<int> inactive;
        std::vector<int> remap(count);
        for (int i = 0; i < count; ++i) remap[i] = i;
        if (periodic_x_) {
            inactive = {tags::left, tags::right};
            identify_periodic(remap);
        }
        // Compress numbering after identification.
        std::vector<int> newid(count, -1);
        num_dofs_ = 0;
        for (int i = 0; i < count; ++i)
            if (remap[i] == i) newid[i] = num_dofs_++;
        std::vector<Point> c(num_dofs_);
        for (int i = 0; i < count; ++i)
            if (remap[i] == i) c[newid[i]] = coords_[i];
        for (auto& d : cell_dofs_) d = newid[remap[d]];
        coords_ = std::move(c);

        on_boundary_.assign(num_dofs_, 0);
        std::map<int, std::set<int>> per_tag;
        std::map<int, Point> accumulated;
        for (int i = 0; i < static_cast<int>(m.boundary_edges().size()); ++i) {
            const int tag = m.boundary_edges()[i].tag;
            if (inactive.count(tag)) continue;
            active_edges_.push_back(i);
            const Point nrm = m.boundary_edge_normal(i);
            const auto dofs = boundary_edge_dofs(i);
            for (int d : dofs) {
                per_tag[tag].insert(d);
                on_boundary_[d] = 1;
                accumulated.try_emplace(d, Point::Zero()).first->second += nrm;
            }
        }
        for (auto& [tag, s] : per_tag) tag_dofs_[tag] = std::vector<int>(s.begin(), s.end());
        for (int d = 0; d < num_dofs_; ++d)
            if (on_boundary_[d]) all_boundary_.push_back(d);

        if (m.has_node_normals()) {
            for (auto& [d, v] : accumulated) {
                const bool vertex = d < nv && !periodic_x_;
                if (vertex) {
                    auto it = m.node_normals().find(d);
                    normals_[d] = it != m.node_normals().end() ? it->second : v.normalized();
                } else {
                    normals_[d] = v.normalized();
                }
            }
        }
    }

    void identify_periodic(std::vector<int>& remap) const {
        const double tol = 1e-10;
        std::vector<std::pair<double, int>> left, right;
        for (int i = 0; i < static_cast<int>(coords_.size()); ++i) {
            if (std::abs(coords_[i].x()) < tol) left.emplace_back(coords_[i].y(), i);
            if (std::abs(coords_[i].x() - 1.0) < tol) right.emplace_back(coords_[i].y(), i);
        }
        if (left.empty() || left.size() != right.size())
            throw InvalidArgument("periodic_x requires matching nodes on x = 0 and x = 1");
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        for (std::size_t k = 0; k < left.size(); ++k) {
            if (std::abs(left[k].first - right[k].first) > tol)
                throw InvalidArgument("periodic_x: nodes on x = 0 and x = 1 do not match");
            remap[right[k].second] = left[k].second;
        }
    }

    std::shared_ptr<const Mesh> mesh_;
    ReferenceElement ref_;
    int components_;
    bool periodic_x_;
    int num_dofs_ = 0;
    std::vector<int> cell_dofs_;
    std::vector<Point> coords_;
    std::vector<Eigen::Matrix2d> jinv_t_;
    std::vector<double> det_;
    std::map<int, std::vector<int>> tag_dofs_;
    std::vector<int> all_boundary_;
    std::vector<char> on_boundary_;
    std::vector<int> active_edges_;
    std::map<int, Point> normals_;
};

inline FiniteElementSpace build_dof_map(const Mesh& mesh, int order, int components, bool periodic_x = false) {
    return FiniteElementSpace(mesh, order, components, periodic_x);
}

}  // namespace splitfem
