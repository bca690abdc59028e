#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "splitfem/modal.hpp"

using namespace splitfem::modal;
using splitfem::DegenerateQuadratic;
using splitfem::DomainError;
using splitfem::InvalidArgument;
using splitfem::MarginalRoot;

namespace {

const cplx I(0.0, 1.0);

ModalCase base(cplx s = 1.0) { return ModalCase{0.1, 1.0, 1.0, 100.0, s}; }

/// Residuals of the semi-discrete interior equations for (U, V, P)_j = vec * lambda^j.
std::array<cplx, 3> interior_residual(const ModalCase& c, const Eigen::Vector3cd& vec, cplx lambda) {
    const cplx d2 = lambda - 2.0 + 1.0 / lambda;  // h^2 D+D-
    const cplx d1 = 0.5 * (lambda - 1.0 / lambda);  // h D0
    const double h = c.h, k2 = c.k * c.k;
    const cplx ik = I * c.k;
    const cplx U = vec(0), V = vec(1), P = vec(2);
    const cplx r1 = c.s * U + ik * P + c.nu * k2 * U - c.nu * d2 / (h * h) * U;
    const cplx r2 = c.s * V + d1 / h * P + c.nu * k2 * V - c.nu * d2 / (h * h) * V;
    const cplx r3 = -k2 * P + d2 / (h * h) * P - c.alpha * ik * U - c.alpha * d1 / h * V;
    return {r1, r2, r3};
}

}  // namespace

TEST(Xi, ReferenceValue) {
    EXPECT_NEAR(exp_xi(0.1, 1.0), 0.9048751, 5e-8);
    EXPECT_NEAR(std::exp(-solve_xi(0.1, 1.0) * 0.1), exp_xi(0.1, 1.0), 1e-14);
    EXPECT_NEAR(solve_xi(0.1, 1.0), 20.0 * std::asinh(0.05), 1e-14);
}

TEST(Xi, Limits) {
    EXPECT_NEAR(solve_xi(1e-5, 3.0), 3.0, 1e-8);
    EXPECT_LT(solve_xi(0.1, 1e-6), 1.1e-6);
    EXPECT_THROW(solve_xi(0.1, 0.0), InvalidArgument);
    EXPECT_THROW(solve_xi(0.0, 1.0), InvalidArgument);
}

TEST(Gamma, ReferenceValue) {
    EXPECT_NEAR(exp_gamma(0.1, 1.0, 1.0, 1.0).real(), 0.868226, 5e-7);
    EXPECT_EQ(exp_gamma(0.1, 1.0, 1.0, 1.0).imag(), 0.0);
    EXPECT_NEAR(std::abs(exp_gamma(0.1, 1.0, 1.0, 0.0) - exp_xi(0.1, 1.0)), 0.0, 1e-14);
    EXPECT_GT(solve_gamma(0.1, 1.0, 1.0, cplx(2.0, 5.0)).real(), 0.0);
}

TEST(Gamma, DecaysForLargeRealS) {
    double prev = 1.0;
    for (double s : {1.0, 10.0, 100.0, 1e3, 1e4, 1e6}) {
        const double e = exp_gamma(0.1, 1.0, 1.0, s).real();
        EXPECT_LT(e, prev);
        prev = e;
    }
    EXPECT_LT(prev, 1e-3);
}

TEST(Gamma, AmbiguousBranchRejected) {
    EXPECT_THROW(exp_gamma(0.1, 1.0, 1.0, cplx(-1.0, 1.0)), DomainError);
    EXPECT_NO_THROW(exp_gamma(0.1, 1.0, 1.0, cplx(-0.5, 0.0)));
}

TEST(Q, ReferenceValues) {
    const auto c = base();
    EXPECT_NEAR(q1(c).real(), 0.0366495, 1e-7);
    EXPECT_NEAR(q(c).real(), -0.0584754, 1e-7);
    EXPECT_EQ(q1(c).imag(), 0.0);
}

TEST(Q, ValueAtZero) {
    const double h = 0.1, k = 1.0, nu = 1.0;
    EXPECT_NEAR(q1_at_zero(h, k, nu), 0.0451873, 5e-8);
    EXPECT_NEAR(q_at_zero(h, k, nu), -0.0499376, 5e-8);
    EXPECT_NEAR(q_at_zero(h, k, nu), -h * h * k * k / std::sqrt(4 * h * h * k * k + std::pow(h, 4) * std::pow(k, 4)), 1e-12);
    // The s -> 0 limit of the definition agrees with the closed form.
    EXPECT_NEAR(q1(ModalCase{h, k, nu, 0.0, 1e-7}).real(), q1_at_zero(h, k, nu), 1e-8);
    EXPECT_NEAR(q(ModalCase{h, k, nu, 0.0, 0.0}).real(), q_at_zero(h, k, nu), 1e-15);
}

TEST(Q, NegativeOnPositiveAxis) {
    for (double s = 0.5; s <= 100.0; s += 0.5) EXPECT_LT(q(base(s)).real(), 0.0) << "s=" << s;
}

TEST(Q, DerivativeMatchesFiniteDifferences) {
    for (int k : {1, 3, 10})
        for (double s : {0.1, 1.0, 7.5, 50.0}) {
            const double d = 1e-3 * s;
            auto f = [&](double x) { return q1(ModalCase{0.1, double(k), 1.0, 0.0, x}).real(); };
            const double fd = (f(s - 2 * d) - 8 * f(s - d) + 8 * f(s + d) - f(s + 2 * d)) / (12 * d);
            EXPECT_NEAR(q1_derivative(0.1, k, 1.0, s) / fd, 1.0, 1e-6) << "k=" << k << " s=" << s;
        }
}

TEST(Q, LemmaReportClean) {
    const auto rep = verify_q_lemmas(0.1, 1.0, 1, 10, 100.0, 200);
    EXPECT_EQ(rep.samples, 2000);
    EXPECT_EQ(rep.violations, 0) << (rep.details.empty() ? "" : rep.details.front());
    EXPECT_LT(rep.max_identity_error, 1e-9);
    EXPECT_THROW(verify_q_lemmas(0.1, 1.0, 0, 10, 1.0, 5), InvalidArgument);
}

TEST(Q, NonRealQ1OffAxis) {
    // q1 real forces s real: sample off-axis points and check a nonzero imaginary part.
    for (double re : {0.1, 1.0, 10.0})
        for (double im : {0.5, 3.0, 20.0}) EXPECT_GT(std::abs(q1(base(cplx(re, im))).imag()), 0.0);
}

TEST(D2, ReferenceRoots) {
    const auto d = d2_roots(base());
    EXPECT_NEAR(d[0].real(), 0.02, 1e-12);
    EXPECT_NEAR(d[1].real(), 1.363358, 5e-7);
    EXPECT_NEAR(d[2].real(), 0.0099754, 1e-7);
    for (int n = 0; n < 3; ++n) {
        EXPECT_LT(d2_residual(base(), n, d[n]), 1e-10);
        EXPECT_EQ(d[n].imag(), 0.0);
    }
}

TEST(D2, RootsSatisfyFactorsForRandomCases) {
    std::mt19937 rng(4);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 200; ++t) {
        ModalCase c{0.01 + 0.2 * u(rng), 1.0 + std::floor(20 * u(rng)), 0.05 + 2 * u(rng), 50 * u(rng),
                    cplx(0.01 + 20 * u(rng), -30 + 60 * u(rng))};
        if (std::abs(c.nu - c.alpha * c.h * c.h / 4) < 1e-6) continue;
        const auto d = d2_roots(c);
        for (int n = 0; n < 3; ++n) {
            EXPECT_LT(d2_residual(c, n, d[n]), 1e-9);
            const cplx l = lambda_inside(d[n]);
            const cplx lo = (2.0 + d[n]) - l;
            EXPECT_LT(std::abs(l * lo - 1.0), 1e-12);
            const cplx d1 = 0.5 * (l - 1.0 / l);
            EXPECT_LT(std::abs(d1 * d1 - d[n] * (d[n] + 4.0) / 4.0), 1e-10 * std::max(1.0, std::norm(d[n])));
        }
    }
}

TEST(D2, Limits) {
    ModalCase c = base();
    c.alpha = 0.0;
    auto d = d2_roots(c);
    EXPECT_NEAR(d[2].real() / (c.h * c.h), c.k * c.k, 1e-12);
    c = base();
    for (double h : {1e-3, 1e-4}) {
        c.h = h;
        d = d2_roots(c);
        const double h2 = h * h;
        EXPECT_NEAR(d[0].real() / h2, (1.0 + 1.0) / 1.0, 1e-9);
        EXPECT_NEAR(d[1].real() / h2, 1.0 + 1.0 + 100.0, 1e-3 * 102 * (h / 1e-3));
        EXPECT_NEAR(d[2].real() / h2, 1.0, 1e-3 * (h / 1e-3) * 10);
    }
}

TEST(D2, Degenerate) {
    ModalCase c = base();
    c.alpha = 4.0 * c.nu / (c.h * c.h);
    try {
        d2_roots(c);
        FAIL() << "expected DegenerateQuadratic";
    } catch (const DegenerateQuadratic& e) {
        EXPECT_TRUE(std::isfinite(e.linear_root()));
    }
}

TEST(Lambda, Values) {
    EXPECT_NEAR(lambda_inside(0.02).real(), 0.868226, 5e-7);
    EXPECT_NEAR(std::abs(lambda_inside(0.02) - exp_gamma(0.1, 1.0, 1.0, 1.0)), 0.0, 1e-14);
    EXPECT_LT(std::abs(lambda_inside(1e8)), 1e-7);
    EXPECT_THROW(lambda_inside(0.0), MarginalRoot);
    EXPECT_THROW(lambda_inside(-2.0), MarginalRoot);
}

TEST(Z, ColumnsSolveInteriorEquations) {
    std::mt19937 rng(12);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 50; ++t) {
        const ModalCase c{0.02 + 0.1 * u(rng), 1.0 + std::floor(10 * u(rng)), 0.5 + u(rng), 1 + 200 * u(rng),
                          cplx(0.1 + 10 * u(rng), -10 + 20 * u(rng))};
        const Modes m = decaying_modes(c);
        for (int n = 0; n < 3; ++n) {
            const auto r = interior_residual(c, m.vec[n], m.lambda[n]);
            const double scale = std::max(1.0, m.vec[n].cwiseAbs().maxCoeff() * (std::abs(c.s) + c.nu / (c.h * c.h) + c.alpha));
            for (int e = 0; e < 3; ++e) EXPECT_LT(std::abs(r[e]) / scale, 1e-9) << "mode " << n << " eq " << e;
        }
    }
}

TEST(Z, ThirdColumnScalesWithInverseAlpha) {
    ModalCase a = base(), b = base();
    a.alpha = 1e6;
    b.alpha = 2e6;
    const auto Za = build_Z(a), Zb = build_Z(b);
    // Entries carry an explicit 1/alpha; the remaining alpha dependence is through d2, lambda.
    EXPECT_NEAR(std::abs(Za(0, 2)) / std::abs(Zb(0, 2)), 2.0, 1e-12);
}

TEST(Z, RegressionDeterminant) {
    const cplx d = det_Z(base());
    EXPECT_GT(std::abs(d), 1.0);
    EXPECT_TRUE(std::isfinite(d.real()));
}

TEST(Z, ConjugateSymmetry) {
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 50; ++t) {
        const cplx s(0.1 + 10 * u(rng), -20 + 40 * u(rng));
        const cplx a = det_Z(base(s)), b = det_Z(base(std::conj(s)));
        EXPECT_LT(std::abs(a - std::conj(b)), 1e-10 * std::max(1.0, std::abs(a)));
    }
}

TEST(Z, AlphaRequired) {
    ModalCase c = base();
    c.alpha = 0.0;
    EXPECT_THROW(build_Z(c), InvalidArgument);
}

TEST(Limit, ReferenceValue) {
    const cplx L = limit_detZ(1.0, 1.0, 100.0, 1.0);
    EXPECT_NEAR(L.real(), -4.2252, 5e-5);
    EXPECT_EQ(L.imag(), 0.0);
}

TEST(Limit, NegativeOnPositiveAxis) {
    for (int k : {1, 5, 10, 100})
        for (double s : {1e-3, 0.1, 1.0, 10.0, 1e3}) {
            const cplx L = limit_detZ(k, 1.0, 100.0, s);
            EXPECT_LT(L.real(), 0.0);
            EXPECT_EQ(L.imag(), 0.0);
        }
}

TEST(Limit, DeterminantConverges) {
    for (cplx s : {cplx(1.0, 0.0), cplx(1.0, 2.0)}) {
        ModalCase c = base(s);
        const cplx L = limit_detZ(c.k, c.nu, c.alpha, s);
        std::vector<double> err;
        for (double h : {1e-1, 1e-2, 1e-3}) {
            c.h = h;
            err.push_back(std::abs(det_Z(c) - L));
        }
        EXPECT_LT(err[1], err[0]);
        EXPECT_LT(err[2], err[1]);
        EXPECT_LT(err[2], 0.05 * std::abs(L));
        // At least first order between the two finest spacings.
        EXPECT_GT(err[1] / err[2], 5.0);
    }
}

TEST(Sigma, ZeroData) {
    for (const cplx v : leading_sigma(1.0, 1.0, 100.0, 1.0, 0.1, 1, 0.0)) EXPECT_EQ(v, cplx(0.0));
}

TEST(Sigma, OrderOfBoundaryLayer) {
    for (int r : {1, 2}) {
        const auto a = leading_sigma(2.0, 1.0, 50.0, cplx(1.0, 0.5), 0.1, r, 1.0);
        const auto b = leading_sigma(2.0, 1.0, 50.0, cplx(1.0, 0.5), 0.05, r, 1.0);
        for (int n = 0; n < 3; ++n) EXPECT_NEAR(std::abs(a[n]) / std::abs(b[n]), std::pow(2.0, r), 1e-12);
    }
    EXPECT_THROW(leading_sigma(1.0, 1.0, 100.0, 1.0, 0.1, 3, 1.0), InvalidArgument);
    EXPECT_THROW(leading_sigma(1.0, 1.0, 0.0, 1.0, 0.1, 1, 1.0), InvalidArgument);
}

TEST(Sigma, SecondAmplitudeDecaysWithAlpha) {
    const double a1 = 1e6, a2 = 4e6;
    const double s1 = std::abs(leading_sigma(1.0, 1.0, a1, 1.0, 0.1, 2, 1.0)[1]);
    const double s2 = std::abs(leading_sigma(1.0, 1.0, a2, 1.0, 0.1, 2, 1.0)[1]);
    EXPECT_NEAR(std::log(s1 / s2) / std::log(a2 / a1), 1.5, 1e-3);
}

TEST(Sigma, MatchesDiscreteSolveAsHVanishes) {
    const double k = 2.0, nu = 0.7, alpha = 30.0;
    const cplx s(1.5, 0.8), g0(0.3, -0.2);
    std::vector<double> err;
    for (double h : {1e-2, 1e-3, 1e-4}) {
        const ModalCase c{h, k, nu, alpha, s};
        const Eigen::Vector3cd rhs(0.0, 0.0, std::pow(h, 2) * g0);
        const Eigen::Vector3cd num = build_Z(c).partialPivLu().solve(rhs);
        const auto lead = leading_sigma(k, nu, alpha, s, h, 2, g0);
        double e = 0.0;
        for (int n = 0; n < 3; ++n) e = std::max(e, std::abs(num(n) - lead[n]) / std::abs(lead[n]));
        err.push_back(e);
    }
    EXPECT_LT(err[2], err[0]);
    EXPECT_LT(err[2], 1e-2);
}

TEST(Scan, NoRightHalfIntersections) {
    ScanGrid g;
    g.n_re = 100;
    g.n_im = 150;
    for (double k : {1.0, 5.0, 10.0, 100.0}) {
        ModalCase c = base();
        c.k = k;
        const auto sc = detZ_scan(c, g);
        EXPECT_TRUE(sc.right_half_intersections().empty()) << "k=" << k;
        EXPECT_FALSE(sc.segments.empty());
    }
}

TEST(Scan, RefinementAddsNoRightHalfIntersections) {
    ScanGrid g;
    g.n_re = 200;
    g.n_im = 300;
    const auto sc = detZ_scan(base(), g);
    EXPECT_TRUE(sc.right_half_intersections().empty());
}

TEST(Scan, ConjugateSymmetricGrid) {
    ScanGrid g;
    g.n_re = 21;
    g.n_im = 31;
    const auto sc = detZ_scan(base(), g);
    for (int j = 0; j < g.n_im; ++j)
        for (int i = 0; i < g.n_re; ++i) {
            const cplx a = sc.at(i, j), b = sc.at(i, g.n_im - 1 - j);
            if (!std::isfinite(a.real()) || !std::isfinite(b.real())) {
                EXPECT_EQ(std::isfinite(a.real()), std::isfinite(b.real()));
                continue;
            }
            EXPECT_LT(std::abs(a - std::conj(b)), 1e-9 * std::max(1.0, std::abs(a)));
        }
}

TEST(Scan, SegmentsLieOnCellEdges) {
    ScanGrid g;
    g.n_re = 40;
    g.n_im = 60;
    const auto sc = detZ_scan(base(), g);
    const double dx = (g.re_max - g.re_min) / (g.n_re - 1), dy = (g.im_max - g.im_min) / (g.n_im - 1);
    auto on_edge = [&](double x, double y) {
        const double fx = (x - g.re_min) / dx, fy = (y - g.im_min) / dy;
        return std::abs(fx - std::round(fx)) < 1e-9 || std::abs(fy - std::round(fy)) < 1e-9;
    };
    for (const auto& s : sc.segments) {
        EXPECT_TRUE(on_edge(s.x0, s.y0));
        EXPECT_TRUE(on_edge(s.x1, s.y1));
    }
}

TEST(Scan, InvalidGrid) {
    ScanGrid g;
    g.n_re = 1;
    EXPECT_THROW(detZ_scan(base(), g), InvalidArgument);
}

TEST(Undamped, EigenSolutionSatisfiesInteriorAndNoSlip) {
    const double h = 0.1, k = 2.0, nu = 0.8;
    const cplx s(0.7, 1.3), Cp(1.0, 0.5);
    const double ex = exp_xi(h, k);
    const cplx eg = exp_gamma(h, k, nu, s);
    const double sinh_xh = std::sinh(solve_xi(h, k) * h);
    auto U = [&](int j) { return -I * k * Cp / s * (std::pow(ex, j) - std::pow(eg, j)); };
    auto V = [&](int j) { return sinh_xh / (h * s) * Cp * (std::pow(ex, j) - std::pow(eg, j)); };
    auto P = [&](int j) { return Cp * std::pow(ex, j); };
    EXPECT_EQ(std::abs(U(0)), 0.0);
    EXPECT_EQ(std::abs(V(0)), 0.0);
    for (int j = 1; j < 30; ++j) {
        auto dpdm = [&](auto f) { return (f(j + 1) - 2.0 * f(j) + f(j - 1)) / (h * h); };
        auto d0 = [&](auto f) { return (f(j + 1) - f(j - 1)) / (2 * h); };
        const cplx r1 = s * U(j) + I * k * P(j) + nu * k * k * U(j) - nu * dpdm(U);
        const cplx r2 = s * V(j) + d0(P) + nu * k * k * V(j) - nu * dpdm(V);
        const cplx r3 = -k * k * P(j) + dpdm(P);
        EXPECT_LT(std::abs(r1), 1e-9);
        EXPECT_LT(std::abs(r2), 1e-9);
        EXPECT_LT(std::abs(r3), 1e-9);
    }
    // Pressure boundary row reduces to Cp q(s) / h, nonzero for Re(s) > 0.
    const cplx bc = (P(1) - P(0)) / h + nu * I * k * (U(1) - U(0)) / h;
    EXPECT_LT(std::abs(bc - Cp * q(ModalCase{h, k, nu, 0.0, s}) / h), 1e-10);
    EXPECT_GT(std::abs(q(ModalCase{h, k, nu, 0.0, s})), 0.0);
}

TEST(Validation, CaseChecks) {
    ModalCase c = base();
    c.k = 0.0;
    EXPECT_THROW(q1(c), InvalidArgument);
    c = base();
    c.nu = 0.0;
    EXPECT_THROW(d2_roots(c), InvalidArgument);
}
