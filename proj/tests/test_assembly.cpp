#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "splitfem/assembly.hpp"
#include "splitfem/linsolve.hpp"

using namespace splitfem;

namespace {

using Scalar = std::function<double(const Point&)>;
using Vec2 = std::function<Eigen::Vector2d(const Point&)>;

Vector interp(const FiniteElementSpace& V, Scalar f) { return V.interpolate(f); }
Vector interp2(const FiniteElementSpace& V, Vec2 f) {
    const FiniteElementSpace W(V.mesh(), V.order(), 2, V.periodic_x());
    return W.interpolate(f);
}

Mesh two_triangles() {
    return compute_node_normals(Mesh({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1, 2}, {0, 2, 3}},
                                     {{{0, 1}, 1}, {{1, 2}, 2}, {{2, 3}, 3}, {{3, 0}, 4}}));
}

Mesh with_normals(const Mesh& m) { return compute_node_normals(m); }

double dense(const SparseOperator& A, int i, int j) { return A.coeff(i, j); }

}  // namespace

TEST(Mass, TotalIsArea) {
    for (int n : {1, 2, 4}) {
        const FiniteElementSpace V(gen_unit_square(5), n, 1);
        const SparseOperator M = assemble_mass(V);
        EXPECT_NEAR(Eigen::MatrixXd(M).sum(), 1.0, 1e-12) << "order " << n;
    }
}

TEST(Mass, ReferenceElementMatrix) {
    const Mesh m = compute_node_normals(Mesh({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 2}}, {{{0, 1}, 1}, {{1, 2}, 2}, {{2, 0}, 3}}));
    const FiniteElementSpace V(m, 1, 1);
    const SparseOperator M = assemble_mass(V);
    const double area = 0.5;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) EXPECT_NEAR(dense(M, i, j), i == j ? area / 6 : area / 12, 1e-15);
}

TEST(Mass, SymmetricPositiveDefinite) {
    const FiniteElementSpace V(gen_cylinder_channel(), 2, 1);
    const SparseOperator M = assemble_mass(V);
    const SparseOperator D = SparseOperator(M.transpose()) - M;
    EXPECT_EQ(D.norm(), 0.0);
    const Eigen::SparseMatrix<double> Mc(M);
    Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt(Mc);
    EXPECT_EQ(llt.info(), Eigen::Success);
}

TEST(Mass, VectorSpaceIsBlockDiagonal) {
    const FiniteElementSpace V(gen_unit_square(3), 1, 2);
    const SparseOperator M = assemble_mass(V);
    EXPECT_EQ(M.rows(), 32);
    const int N = 16;
    for (int r = 0; r < N; ++r)
        for (SparseOperator::InnerIterator it(M, r); it; ++it) EXPECT_LT(it.col(), N);
    EXPECT_NEAR(Eigen::MatrixXd(M).sum(), 2.0, 1e-12);
}

TEST(Stiffness, ConstantsInNullSpace) {
    for (int n : {1, 2, 4}) {
        const FiniteElementSpace V(gen_cylinder_channel(), n, 1);
        const SparseOperator K = assemble_stiffness(V);
        const Vector ones = Vector::Ones(K.cols());
        double kmax = 0.0;
        for (int k = 0; k < K.outerSize(); ++k)
            for (SparseOperator::InnerIterator it(K, k); it; ++it) kmax = std::max(kmax, std::abs(it.value()));
        EXPECT_LT((K * ones).lpNorm<Eigen::Infinity>(), 1e-12 * kmax) << "order " << n;
    }
}

TEST(Stiffness, QuadraticEnergy) {
    const FiniteElementSpace V(gen_unit_square(4), 2, 1);
    const Vector u = interp(V, [](const Point& x) { return x.x() * x.x(); });
    EXPECT_NEAR(u.dot(assemble_stiffness(V) * u), 4.0 / 3.0, 1e-12);
}

TEST(Stiffness, PositiveSemidefinite) {
    const FiniteElementSpace V(gen_stretched_square(6, 0.6), 2, 1);
    const Eigen::MatrixXd K(assemble_stiffness(V));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(K);
    EXPECT_GT(es.eigenvalues().minCoeff(), -1e-12);
    EXPECT_LT(std::abs(es.eigenvalues()(0)), 1e-10);
    EXPECT_GT(es.eigenvalues()(1), 1e-6);
}

TEST(Stiffness, LumpedP1MatchesFivePointStencil) {
    const int m = 10;
    const double h = 1.0 / m;
    const FiniteElementSpace V(gen_unit_square(m), 1, 1);
    const SparseOperator K = assemble_stiffness(V);
    const SparseOperator L = lump(assemble_mass(V));
    std::map<std::pair<long, long>, int> index;
    for (int j = 0; j < V.num_scalar_dofs(); ++j) {
        const Point& x = V.dof_coords()[j];
        index[{std::lround(x.x() / h), std::lround(x.y() / h)}] = j;
    }
    int checked = 0;
    for (int i = 1; i < m; ++i)
        for (int k = 1; k < m; ++k) {
            const int r = index.at({i, k});
            // Lumped FD form: (K u)_r / L_rr equals the 5-point Laplacian over h^2.
            EXPECT_NEAR(L.coeff(r, r), h * h, 1e-15);
            std::map<int, double> expect{{r, 4.0},
                                         {index.at({i + 1, k}), -1.0},
                                         {index.at({i - 1, k}), -1.0},
                                         {index.at({i, k + 1}), -1.0},
                                         {index.at({i, k - 1}), -1.0}};
            for (SparseOperator::InnerIterator it(K, r); it; ++it) {
                const auto e = expect.find(static_cast<int>(it.col()));
                EXPECT_NEAR(it.value(), e == expect.end() ? 0.0 : e->second, 1e-12);
            }
            for (const auto& [c, v] : expect) EXPECT_NEAR(K.coeff(r, c), v, 1e-12);
            for (SparseOperator::InnerIterator it(L, r); it; ++it)
                if (it.col() != r) EXPECT_EQ(it.value(), 0.0);
            ++checked;
        }
    EXPECT_EQ(checked, 81);
}

TEST(Bilinear, AgreesWithDirectIntegrationOnTwoTriangles) {
    // Brute force: high-order quadrature of products of the basis evaluated through the
    // affine map, independent of the tabulation used by the assembler.
    const Mesh mesh = two_triangles();
    for (int n : {1, 2, 4}) {
        const FiniteElementSpace V(mesh, n, 1);
        const SparseOperator M = assemble_mass(V), K = assemble_stiffness(V);
        const auto rule = make_quadrature(12);
        Eigen::MatrixXd Md = Eigen::MatrixXd::Zero(V.num_scalar_dofs(), V.num_scalar_dofs()), Kd = Md;
        for (int t = 0; t < mesh.num_triangles(); ++t) {
            const auto& tri = mesh.triangles()[t];
            const Point a = mesh.vertices()[tri[0]], b = mesh.vertices()[tri[1]], c = mesh.vertices()[tri[2]];
            Eigen::Matrix2d J;
            J.col(0) = b - a;
            J.col(1) = c - a;
            const Eigen::Matrix2d Jit = J.inverse().transpose();
            const double det = std::abs(J.determinant());
            const int* cd = V.cell_dofs(t);
            for (int q = 0; q < rule.size(); ++q) {
                const auto phi = V.reference().basis(rule.points[q]);
                const Eigen::MatrixX2d g = V.reference().grad(rule.points[q]) * Jit.transpose();
                for (int i = 0; i < phi.size(); ++i)
                    for (int j = 0; j < phi.size(); ++j) {
                        Md(cd[i], cd[j]) += rule.weights[q] * det * phi(i) * phi(j);
                        Kd(cd[i], cd[j]) += rule.weights[q] * det * g.row(i).dot(g.row(j));
                    }
            }
        }
        EXPECT_LT((Eigen::MatrixXd(M) - Md).cwiseAbs().maxCoeff(), 1e-12) << "order " << n;
        EXPECT_LT((Eigen::MatrixXd(K) - Kd).cwiseAbs().maxCoeff(), 1e-12) << "order " << n;
    }
}

TEST(MomentumRhs, ZeroInputs) {
    const FiniteElementSpace V(gen_unit_square(4), 2, 1);
    const Vector r = apply_momentum_rhs(V, Vector::Zero(2 * V.num_scalar_dofs()), Vector::Zero(V.num_scalar_dofs()),
                                        1.0, 0.1, nullptr, 0.0);
    EXPECT_EQ(r.lpNorm<Eigen::Infinity>(), 0.0);
}

TEST(MomentumRhs, LinearPressureGivesBasisIntegrals) {
    const FiniteElementSpace V(gen_unit_square(5), 2, 1);
    const int N = V.num_scalar_dofs();
    const Vector p = interp(V, [](const Point& x) { return x.x(); });
    const Vector r = apply_momentum_rhs(V, Vector::Zero(2 * N), p, 1.0, 0.3, nullptr, 0.0);
    const Vector b = Assembler(V).basis_integrals();
    EXPECT_LT((r.head(N) + b).lpNorm<Eigen::Infinity>(), 1e-13);
    EXPECT_LT(r.tail(N).lpNorm<Eigen::Infinity>(), 1e-13);
    EXPECT_NEAR(r.head(N).sum(), -1.0, 1e-12);
}

TEST(MomentumRhs, ConstantFlowIsInert) {
    const FiniteElementSpace V(gen_unit_square(4), 1, 1);
    const int N = V.num_scalar_dofs();
    Vector u = Vector::Zero(2 * N);
    u.head(N).setOnes();
    const Vector r = apply_momentum_rhs(V, u, Vector::Zero(N), 1.0, 0.0, nullptr, 0.0);
    EXPECT_LT(r.lpNorm<Eigen::Infinity>(), 1e-14);
}

TEST(MomentumRhs, ForcingIsTestedAgainstBasis) {
    const FiniteElementSpace V(gen_unit_square(3), 1, 1);
    const int N = V.num_scalar_dofs();
    const VectorField F = [](const Point&, double t) { return Eigen::Vector2d(2.0 * t, -1.0); };
    const Vector r = apply_momentum_rhs(V, Vector::Zero(2 * N), Vector::Zero(N), 1.0, 0.0, F, 1.5);
    const Vector b = Assembler(V).basis_integrals();
    EXPECT_LT((r.head(N) - 3.0 * b).norm(), 1e-13);
    EXPECT_LT((r.tail(N) + b).norm(), 1e-13);
}

TEST(MomentumRhs, ViscousTermMatchesStiffness) {
    const FiniteElementSpace V(gen_unit_square(4), 2, 1);
    const int N = V.num_scalar_dofs();
    Vector u(2 * N);
    u.head(N) = interp(V, [](const Point& x) { return std::sin(x.x()) * x.y(); });
    u.tail(N).setZero();
    const Vector r = apply_momentum_rhs(V, u, Vector::Zero(N), 0.0, 0.7, nullptr, 0.0);
    EXPECT_LT((r.head(N) + 0.7 * (assemble_stiffness(V) * u.head(N))).norm(), 1e-12);
}

TEST(PpeRhs, ZeroForZeroVelocity) {
    const FiniteElementSpace V(gen_unit_square(4), 1, 1);
    EXPECT_EQ(assemble_ppe_rhs(V, Vector::Zero(2 * V.num_scalar_dofs()), 1.0, 100.0, nullptr, 0.0).norm(), 0.0);
}

TEST(PpeRhs, ShearHasNoSelfProduct) {
    const FiniteElementSpace V(gen_unit_square(4), 1, 1);
    const Vector u = interp2(V, [](const Point& x) { return Eigen::Vector2d(x.y(), 0.0); });
    EXPECT_LT(assemble_ppe_rhs(V, u, 1.0, 0.0, nullptr, 0.0).lpNorm<Eigen::Infinity>(), 1e-14);
}

TEST(PpeRhs, StrainField) {
    const FiniteElementSpace V(gen_unit_square(4), 1, 1);
    const double h = 0.25, rho = 1.3;
    const Vector u = interp2(V, [](const Point& x) { return Eigen::Vector2d(x.x(), -x.y()); });
    const Vector f = assemble_ppe_rhs(V, u, rho, 1.0 / (h * h), nullptr, 0.0);
    EXPECT_LT((f + 2.0 * rho * Assembler(V).basis_integrals()).lpNorm<Eigen::Infinity>(), 1e-13);
}

TEST(PpeRhs, DampingTermTestsDivergence) {
    const FiniteElementSpace V(gen_unit_square(4), 2, 1);
    const Vector u = interp2(V, [](const Point& x) { return Eigen::Vector2d(x.x(), 0.0); });
    const double alpha = 5.0;
    const Vector f = assemble_ppe_rhs(V, u, 0.0, alpha, nullptr, 0.0);
    EXPECT_LT((f - alpha * Assembler(V).basis_integrals()).lpNorm<Eigen::Infinity>(), 1e-13);
}

TEST(TnBoundary, ZeroContribution) {
    const FiniteElementSpace V(gen_unit_square(4), 1, 1);
    EXPECT_EQ(assemble_tn_boundary(V, Vector::Zero(2 * V.num_scalar_dofs()), 1.0, 1.0, nullptr, nullptr, nullptr, 0.0)
                  .norm(),
              0.0);
}

TEST(TnBoundary, ConstantCurlOnClosedLoop) {
    // u = (-y, x) has curl 2; around a closed boundary the tangential
    // derivative of each basis function integrates to zero.
    const FiniteElementSpace V(gen_unit_square(4), 1, 1);
    const Vector u = interp2(V, [](const Point& x) { return Eigen::Vector2d(-x.y(), x.x()); });
    const Vector b = assemble_tn_boundary(V, u, 0.0, 1.0, nullptr, nullptr, nullptr, 0.0);
    EXPECT_LT(b.lpNorm<Eigen::Infinity>(), 1e-13);
}

TEST(TnBoundary, OpenSegmentEndpoints) {
    // u = ((1-y)^2 / 2, 0): curl = 1 - y, zero on the top edge.
    const FiniteElementSpace V(gen_unit_square(4), 2, 1);
    const Vector u = interp2(V, [](const Point& x) { return Eigen::Vector2d(0.5 * (1 - x.y()) * (1 - x.y()), 0.0); });
    const Vector b = assemble_tn_boundary(V, u, 0.0, 1.0, nullptr, nullptr, nullptr, 0.0);
    // q = 1 sees nothing.
    EXPECT_NEAR(b.sum(), 0.0, 1e-13);
    // q = x: on y = 0, n x grad q = dq/dx = 1 and curl = 1 over unit length.
    const Vector qx = interp(V, [](const Point& x) { return x.x(); });
    EXPECT_NEAR(b.dot(qx), 1.0, 1e-13);
    // q = y: the x = 1 and x = 0 edges give +1/2 and -1/2.
    const Vector qy = interp(V, [](const Point& x) { return x.y(); });
    EXPECT_NEAR(b.dot(qy), 0.0, 1e-13);
}

TEST(TnBoundary, NormalMomentumTerm) {
    // F = (1, 0), no flow: <n.F, q>; with q = x only x = 1 contributes |edge| = 1, x = 0 gives -0.
    const FiniteElementSpace V(gen_unit_square(3), 1, 1);
    const VectorField F = [](const Point&, double) { return Eigen::Vector2d(1.0, 0.0); };
    const Vector b = assemble_tn_boundary(V, Vector::Zero(2 * V.num_scalar_dofs()), 1.0, 0.0, nullptr, nullptr, F, 0.0);
    const Vector qx = interp(V, [](const Point& x) { return x.x(); });
    EXPECT_NEAR(b.dot(qx), 1.0, 1e-13);
    EXPECT_NEAR(b.sum(), 0.0, 1e-13);
}

TEST(TnBoundary, ForwardDifferenceForMissingTimeDerivative) {
    const FiniteElementSpace V(gen_unit_square(3), 1, 1);
    const int N = V.num_scalar_dofs();
    const VectorField g = [](const Point& x, double t) { return Eigen::Vector2d(t * t * x.x(), 0.0); };
    const VectorField gt = [](const Point& x, double t) { return Eigen::Vector2d(2 * t * x.x(), 0.0); };
    const Vector a = assemble_tn_boundary(V, Vector::Zero(2 * N), 1.0, 0.0, g, gt, nullptr, 0.5);
    const Vector b = assemble_tn_boundary(V, Vector::Zero(2 * N), 1.0, 0.0, g, nullptr, nullptr, 0.5);
    EXPECT_LT((a - b).lpNorm<Eigen::Infinity>(), 1e-6);
}

TEST(Wabe, ZeroRightSide) {
    const FiniteElementSpace V(with_normals(gen_unit_square(4)), 1, 1);
    const Vector z = Vector::Zero(2 * V.num_scalar_dofs());
    const WabeRows w = assemble_wabe_rows(V, z, z, 0.1, 1.0, 1.0, nullptr, 0.0);
    EXPECT_EQ(w.rhs.norm(), 0.0);
    EXPECT_EQ(w.rows.size(), 16u);
    EXPECT_EQ(w.coeffs.rows(), 16);
}

TEST(Wabe, AffinePressureExactness) {
    for (int n : {1, 2, 4}) {
        const FiniteElementSpace V(with_normals(gen_cylinder_channel()), n, 1);
        const Assembler A(V);
        const double a = 0.3, b = -1.2, c = 0.7;
        const Vector p = interp(V, [&](const Point& x) { return a + b * x.x() + c * x.y(); });
        const Vector got = A.wabe_matrix() * p;
        const Vector phi_int = A.basis_integrals();
        const auto& dofs = A.wabe_dofs();
        for (std::size_t r = 0; r < dofs.size(); ++r) {
            const Point nrm = V.boundary_normals().at(dofs[r]);
            const double expect = A.wabe_scale()[r] * nrm.dot(Point(b, c)) * phi_int(dofs[r]);
            EXPECT_NEAR(got(r), expect, 1e-11 * std::max(1.0, std::abs(expect))) << "order " << n << " dof " << dofs[r];
        }
    }
}

TEST(Wabe, RightEdgeNodeGivesSupportMeasure) {
    const FiniteElementSpace V(with_normals(gen_unit_square(4)), 1, 1);
    const Assembler A(V);
    const Vector p = interp(V, [](const Point& x) { return x.x(); });
    const Vector got = A.wabe_matrix() * p;
    const Vector phi_int = A.basis_integrals();
    const auto& dofs = A.wabe_dofs();
    int hits = 0;
    for (std::size_t r = 0; r < dofs.size(); ++r) {
        const Point& x = V.dof_coords()[dofs[r]];
        if (x.x() != 1.0 || x.y() == 0.0 || x.y() == 1.0) continue;
        EXPECT_NEAR(got(r) / A.wabe_scale()[r], phi_int(dofs[r]), 1e-14);
        EXPECT_NEAR(A.wabe_scale()[r], 2.0 / 0.25, 1e-12);
        ++hits;
    }
    EXPECT_EQ(hits, 3);
}

TEST(Wabe, RigidRotationCurlTerm) {
    const FiniteElementSpace V(with_normals(gen_unit_square(4)), 1, 1);
    const Assembler A(V);
    const Vector u = interp2(V, [](const Point& x) { return Eigen::Vector2d(-x.y(), x.x()); });
    // With rho = 0 only mu (curl u, n x grad phi) survives: curl = 2 constant.
    const Vector r = A.wabe_rhs(u, u, 1.0, 0.0, 1.0, nullptr, 0.0);
    // Closed form: sum over the support of 2 * area_T * (n1 dphi/dy - n2 dphi/dx).
    const Mesh& m = V.mesh();
    const auto& dofs = A.wabe_dofs();
    for (std::size_t k = 0; k < dofs.size(); ++k) {
        const int j = dofs[k];
        const Point n = V.boundary_normals().at(j);
        double expect = 0.0;
        for (int t = 0; t < m.num_triangles(); ++t) {
            const auto& tri = m.triangles()[t];
            for (int l = 0; l < 3; ++l) {
                if (V.cell_dofs(t)[l] != j) continue;
                const Point a = m.vertices()[tri[0]], b = m.vertices()[tri[1]], c = m.vertices()[tri[2]];
                const double det = (b - a).x() * (c - a).y() - (b - a).y() * (c - a).x();
                // Gradient of the P1 hat at local vertex l.
                const Point p1 = m.vertices()[tri[(l + 1) % 3]], p2 = m.vertices()[tri[(l + 2) % 3]];
                const Point g = Point(p1.y() - p2.y(), p2.x() - p1.x()) / det;
                expect += 2.0 * 0.5 * std::abs(det) * (n.x() * g.y() - n.y() * g.x());
            }
        }
        EXPECT_NEAR(r(k), A.wabe_scale()[k] * expect, 1e-12);
    }
}

TEST(Wabe, TimeDerivativeUsesForwardDifference) {
    const FiniteElementSpace V(with_normals(gen_unit_square(3)), 1, 1);
    const Assembler A(V);
    const int N = V.num_scalar_dofs();
    Vector u_old = Vector::Zero(2 * N), u_new = Vector::Zero(2 * N);
    u_new.head(N).setConstant(0.2);
    // du/dt = (2, 0); u.grad u = 0. Row = -rho n.(2,0) (1, phi).
    const Vector r = A.wabe_rhs(u_new, u_old, 0.1, 1.5, 0.0, nullptr, 0.0);
    const Vector phi_int = A.basis_integrals();
    for (std::size_t k = 0; k < A.wabe_dofs().size(); ++k) {
        const int j = A.wabe_dofs()[k];
        const Point n = V.boundary_normals().at(j);
        EXPECT_NEAR(r(k), A.wabe_scale()[k] * (-1.5 * 2.0 * n.x() * phi_int(j)), 1e-12);
    }
    EXPECT_THROW(A.wabe_rhs(u_new, u_old, 0.0, 1.0, 0.0, nullptr, 0.0), InvalidArgument);
}

TEST(Divergence, SolenoidalAndUnit) {
    const FiniteElementSpace V(gen_stretched_square(5, 0.5), 2, 1);
    const Assembler A(V);
    const auto d0 = A.divergence(interp2(V, [](const Point& x) { return Eigen::Vector2d(x.x(), -x.y()); }));
    EXPECT_LT(d0.linf, 1e-12);
    EXPECT_LT(d0.l2, 1e-12);
    const auto d1 = A.divergence(interp2(V, [](const Point& x) { return Eigen::Vector2d(x.x(), 0.0); }));
    EXPECT_NEAR(d1.linf, 1.0, 1e-12);
    EXPECT_NEAR(d1.l2, 1.0, 1e-12);
}

TEST(Divergence, FirstOrderForSineOnP1) {
    // div_h I(sin x - x) is elementwise (sin x_{i+1} - sin x_i)/h - 1, whose
    // maximum modulus approaches 1 - cos 1 at rate h.
    std::vector<double> err;
    for (int m : {8, 16, 32}) {
        const FiniteElementSpace V(gen_unit_square(m), 1, 1);
        const Vector w = interp2(V, [](const Point& x) { return Eigen::Vector2d(std::sin(x.x()) - x.x(), 0.0); });
        err.push_back(std::abs(Assembler(V).divergence(w).linf - (1.0 - std::cos(1.0))));
    }
    EXPECT_LT(err[2], err[1]);
    EXPECT_LT(err[1], err[0]);
    EXPECT_NEAR(std::log2(err[1] / err[2]), 1.0, 0.2);
}

TEST(Dirichlet, RowReplacementAndSymmetricEliminationAgree) {
    const FiniteElementSpace V(gen_unit_square(10), 1, 2);
    SparseOperator A1 = assemble_mass(V) + 0.01 * assemble_stiffness(V);
    SparseOperator A2 = A1;
    Vector b1 = Vector::Ones(V.size()), b2 = b1;
    const VectorField g = [](const Point& x, double t) { return Eigen::Vector2d(x.x() + t, x.y() * x.y()); };
    const DirichletData bc = dirichlet_data(V, {}, g, 0.5);
    apply_dirichlet(A1, b1, bc, DirichletMode::RowReplacement);
    apply_dirichlet(A2, b2, bc, DirichletMode::SymmetricElimination);
    EXPECT_EQ(SparseOperator(SparseOperator(A2.transpose()) - A2).norm(), 0.0);
    const Vector x1 = solve_direct(A1, b1).x;
    const Vector x2 = solve_spd(A2, b2, 1e-14).x;
    EXPECT_LT((x1 - x2).lpNorm<Eigen::Infinity>(), 1e-10);
    for (std::size_t k = 0; k < bc.dofs.size(); ++k) {
        EXPECT_NEAR(x1(bc.dofs[k]), bc.values[k], 1e-13);
        const int N = V.num_scalar_dofs();
        const Point& x = V.dof_coords()[bc.dofs[k] % N];
        EXPECT_EQ(bc.values[k], g(x, 0.5)(bc.dofs[k] / N));
    }
}

TEST(Dirichlet, HomogeneousGivesZeroBoundary) {
    const FiniteElementSpace V(gen_unit_square(6), 2, 1);
    SparseOperator A = assemble_stiffness(V) + assemble_mass(V);
    Vector b = Assembler(V).basis_integrals();
    DirichletData bc;
    for (int j : V.boundary_dofs()) {
        bc.dofs.push_back(j);
        bc.values.push_back(0.0);
    }
    apply_dirichlet(A, b, bc, DirichletMode::SymmetricElimination);
    const Vector x = solve_direct(A, b).x;
    for (int j : V.boundary_dofs()) EXPECT_EQ(x(j), 0.0);
    EXPECT_GT(x.maxCoeff(), 0.0);
}

TEST(Dirichlet, TagSelection) {
    const FiniteElementSpace V(gen_unit_square(4), 1, 2);
    const DirichletData d = dirichlet_data(V, {tags::top}, nullptr, 0.0);
    EXPECT_EQ(d.dofs.size(), 10u);
}

TEST(Evaluation, PointValuesAndGradients) {
    const FiniteElementSpace V(gen_stretched_square(7, 0.5), 2, 1);
    const Vector c = interp(V, [](const Point& x) { return 1 + 2 * x.x() - x.y() + x.x() * x.y(); });
    const Point x(0.37, 0.81);
    EXPECT_NEAR(evaluate(V, c, x), 1 + 0.74 - 0.81 + 0.37 * 0.81, 1e-13);
    const auto g = evaluate_gradient(V, c, x);
    EXPECT_NEAR(g.x(), 2 + 0.81, 1e-12);
    EXPECT_NEAR(g.y(), -1 + 0.37, 1e-12);
    EXPECT_THROW(evaluate(V, c, Point(1.5, 0.5)), EvaluationError);
    EXPECT_FALSE(locate(V.mesh(), Point(-0.1, 0.2)).has_value());
}
