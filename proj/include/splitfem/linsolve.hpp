#pragma once

// Linear solvers for mass systems, the mean-zero bordered pressure system,
// and nonsymmetric pressure systems with replaced boundary rows.

#include <cmath>
#include <memory>
#include <vector>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>
#include <unsupported/Eigen/IterativeSolvers>

#include "splitfem/assembly.hpp"
#include "splitfem/errors.hpp"

namespace splitfem {

struct SolveResult {
    Vector x;
    int iterations = 0;
    double residual = 0.0;  // |A x - rhs| / |rhs| (absolute when rhs = 0)
};

inline double relative_residual(const SparseOperator& A, const Vector& x, const Vector& rhs) {
    const double r = (A * x - rhs).norm();
    const double b = rhs.norm();
    return b > 0.0 ? r / b : r;
}

namespace detail {

inline void check_square(const SparseOperator& A, const Vector& rhs, const char* who) {
    if (A.rows() != A.cols()) throw InvalidArgument(std::string(who) + ": matrix is not square");
    if (A.rows() != rhs.size()) throw InvalidArgument(std::string(who) + ": right side length mismatch");
}

using ColMatrix = Eigen::SparseMatrix<double, Eigen::ColMajor>;

}  // namespace detail

/// Jacobi-preconditioned conjugate gradients.
inline SolveResult solve_spd(const SparseOperator& A, const Vector& rhs, double tol = 1e-12, int maxiter = 0) {
    detail::check_square(A, rhs, "solve_spd");
    SolveResult out;
    if (rhs.norm() == 0.0) {
        out.x = Vector::Zero(rhs.size());
        return out;
    }
    Eigen::ConjugateGradient<SparseOperator, Eigen::Lower | Eigen::Upper, Eigen::DiagonalPreconditioner<double>> cg;
    cg.setTolerance(tol);
    cg.setMaxIterations(maxiter > 0 ? maxiter : std::max<int>(100, 10 * static_cast<int>(A.rows())));
    cg.compute(A);
    out.x = cg.solve(rhs);
    out.iterations = static_cast<int>(cg.iterations());
    out.residual = relative_residual(A, out.x, rhs);
    if (!out.x.allFinite()) throw Breakdown("solve_spd: conjugate gradients produced non-finite values");
    if (out.residual > tol * (1.0 + 1e-6) && cg.info() != Eigen::Success)
        throw IterationLimit("solve_spd: no convergence after " + std::to_string(out.iterations) + " iterations",
                             out.residual);
    return out;
}

/// Sparse LU solve; throws Breakdown if the matrix is numerically singular.
inline SolveResult solve_direct(const SparseOperator& A, const Vector& rhs) {
    detail::check_square(A, rhs, "solve_direct");
    Eigen::SparseLU<detail::ColMatrix, Eigen::COLAMDOrdering<int>> lu;
    detail::ColMatrix C = A;
    C.makeCompressed();
    lu.compute(C);
    if (lu.info() != Eigen::Success) throw Breakdown("sparse LU failed: matrix is singular to working precision");
    SolveResult out;
    out.x = lu.solve(rhs);
    if (!out.x.allFinite()) throw Breakdown("sparse LU produced non-finite values");
    out.residual = relative_residual(A, out.x, rhs);
    return out;
}

/// Restarted GMRES(50) with diagonal preconditioning. If the iteration
/// stalls and `direct_fallback` is set, a sparse LU solve is attempted.
inline SolveResult solve_general(const SparseOperator& A, const Vector& rhs, double tol = 1e-10, int maxiter = 0,
                                 bool direct_fallback = true) {
    detail::check_square(A, rhs, "solve_general");
    SolveResult out;
    if (rhs.norm() == 0.0) {
        out.x = Vector::Zero(rhs.size());
        return out;
    }
    for (int r = 0; r < A.outerSize(); ++r) {
        bool diag = false;
        for (SparseOperator::InnerIterator it(A, r); it; ++it) diag = diag || (it.col() == r && it.value() != 0.0);
        if (!diag) {
            if (direct_fallback) return solve_direct(A, rhs);
            throw Breakdown("solve_general: zero diagonal in row " + std::to_string(r));
        }
    }
    Eigen::GMRES<SparseOperator, Eigen::DiagonalPreconditioner<double>> gmres;
    gmres.set_restart(50);
    gmres.setTolerance(tol);
    gmres.setMaxIterations(maxiter > 0 ? maxiter : std::max<int>(500, 4 * static_cast<int>(A.rows())));
    gmres.compute(A);
    out.x = gmres.solve(rhs);
    out.iterations = static_cast<int>(gmres.iterations());
    const bool finite = out.x.allFinite();
    out.residual = finite ? relative_residual(A, out.x, rhs) : std::numeric_limits<double>::infinity();
    if (finite && out.residual <= tol * (1.0 + 1e-6)) return out;
    if (direct_fallback) {
        SolveResult d = solve_direct(A, rhs);
        if (d.residual > std::max(tol, 1e-8))
            throw Breakdown("solve_general: direct fallback residual " + std::to_string(d.residual) +
                            " indicates a singular system");
        d.iterations = out.iterations;
        return d;
    }
    if (!finite) throw Breakdown("solve_general: GMRES produced non-finite values");
    throw IterationLimit("solve_general: GMRES did not converge", out.residual);
}

// ---------------------------------------------------------------------------
// Bordered system

/// [A b; b^T 0] [p; lambda] = [f; 0] with b_i = (1, phi_i).
struct BorderedSystem {
    SparseOperator A;  // typically -K
    Vector b;
    Vector f;
};

struct BorderedSolution {
    Vector p;
    double lambda = 0.0;
};

enum class BorderedRoute { Iterative, Direct };

namespace detail {

/// Assembles the (N+1)-square bordered matrix with column border bc and row border br.
inline ColMatrix bordered_matrix(const SparseOperator& A, const Vector& bc, const Vector& br) {
    const int N = static_cast<int>(A.rows());
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(A.nonZeros() + 2 * N);
    for (int r = 0; r < N; ++r)
        for (SparseOperator::InnerIterator it(A, r); it; ++it) trip.emplace_back(r, it.col(), it.value());
    for (int i = 0; i < N; ++i) {
        if (bc(i) != 0.0) trip.emplace_back(i, N, bc(i));
        if (br(i) != 0.0) trip.emplace_back(N, i, br(i));
    }
    ColMatrix B(N + 1, N + 1);
    B.setFromTriplets(trip.begin(), trip.end());
    B.makeCompressed();
    return B;
}

}  // namespace detail

/// Solves the bordered system. The iterative route requires A symmetric with
/// A 1 = 0 (pure Neumann) and eliminates lambda via 1^T A = 0; the direct
/// route factors the bordered matrix.
inline BorderedSolution solve_bordered(const BorderedSystem& sys, double tol = 1e-10,
                                       BorderedRoute route = BorderedRoute::Iterative) {
    const int N = static_cast<int>(sys.A.rows());
    if (sys.A.cols() != N || sys.b.size() != N || sys.f.size() != N)
        throw InvalidArgument("solve_bordered: inconsistent dimensions");
    const double bsum = sys.b.sum();
    if (sys.b.norm() == 0.0 || bsum == 0.0) throw InvalidSystem("solve_bordered: border vector is zero");
    BorderedSolution out;
    if (route == BorderedRoute::Direct) {
        detail::ColMatrix B = detail::bordered_matrix(sys.A, sys.b, sys.b);
        Eigen::SparseLU<detail::ColMatrix, Eigen::COLAMDOrdering<int>> lu(B);
        if (lu.info() != Eigen::Success) throw Breakdown("solve_bordered: bordered matrix is singular");
        Vector rhs = Vector::Zero(N + 1);
        rhs.head(N) = sys.f;
        const Vector x = lu.solve(rhs);
        out.p = x.head(N);
        out.lambda = x(N);
        return out;
    }
    out.lambda = sys.f.sum() / bsum;
    const Vector rhs = out.lambda * sys.b - sys.f;
    if (rhs.norm() <= 1e-300) {
        out.p = Vector::Zero(N);
        return out;
    }
    const SparseOperator K = -sys.A;
    Eigen::ConjugateGradient<SparseOperator, Eigen::Lower | Eigen::Upper, Eigen::DiagonalPreconditioner<double>> cg;
    cg.setTolerance(tol);
    cg.setMaxIterations(std::max(200, 10 * N));
    cg.compute(K);
    out.p = cg.solve(rhs);
    if (!out.p.allFinite()) throw Breakdown("solve_bordered: conjugate gradients produced non-finite values");
    out.p.array() -= sys.b.dot(out.p) / bsum;
    const double res = relative_residual(K, out.p, rhs);
    if (res > 10.0 * tol) throw IterationLimit("solve_bordered: no convergence", res);
    return out;
}

/// Factored bordered operator [A bc; br^T 0] reused across many right sides.
class BorderedFactorization {
public:
    BorderedFactorization() = default;

    BorderedFactorization(const SparseOperator& A, const Vector& bc, const Vector& br) : n_(static_cast<int>(A.rows())) {
        if (bc.norm() == 0.0 || br.norm() == 0.0) throw InvalidSystem("bordered factorization: border vector is zero");
        lu_ = std::make_shared<Eigen::SparseLU<detail::ColMatrix, Eigen::COLAMDOrdering<int>>>();
        lu_->compute(detail::bordered_matrix(A, bc, br));
        if (lu_->info() != Eigen::Success) throw Breakdown("bordered factorization: matrix is singular");
    }

    BorderedSolution solve(const Vector& f) const {
        if (!lu_) throw PreconditionFailure("bordered factorization is empty");
        Vector rhs = Vector::Zero(n_ + 1);
        rhs.head(n_) = f;
        const Vector x = lu_->solve(rhs);
        if (!x.allFinite()) throw Breakdown("bordered solve produced non-finite values");
        return {x.head(n_), x(n_)};
    }

private:
    int n_ = 0;
    std::shared_ptr<Eigen::SparseLU<detail::ColMatrix, Eigen::COLAMDOrdering<int>>> lu_;
};

/// Cached Cholesky (LDL^T) factorization of an SPD operator.
class SpdFactorization {
public:
    SpdFactorization() = default;

    explicit SpdFactorization(const SparseOperator& A) {
        ldlt_ = std::make_shared<Eigen::SimplicialLDLT<detail::ColMatrix>>();
        ldlt_->compute(detail::ColMatrix(A));
        if (ldlt_->info() != Eigen::Success) throw Breakdown("LDL^T factorization failed: matrix is not SPD");
    }

    Vector solve(const Vector& rhs) const {
        if (!ldlt_) throw PreconditionFailure("SPD factorization is empty");
        return ldlt_->solve(rhs);
    }

private:
    std::shared_ptr<Eigen::SimplicialLDLT<detail::ColMatrix>> ldlt_;
};

}  // namespace splitfem
