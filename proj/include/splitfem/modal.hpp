#pragma once

// Laplace-space normal-mode analysis of the semi-discrete half-plane model
// problem: root functions, the boundary determinant, and its h -> 0 limit.

#include <array>
#include <cmath>
#include <complex>
#include <fstream>
#include <iomanip>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "splitfem/errors.hpp"

namespace splitfem::modal {

using cplx = std::complex<double>;

/// Grid spacing h, wavenumber k, viscosity nu, damping alpha, Laplace variable s.
struct ModalCase {
    double h = 0.1;
    double k = 1.0;
    double nu = 1.0;
    double alpha = 100.0;
    cplx s = 1.0;

    void validate() const {
        if (!(h > 0.0)) throw InvalidArgument("modal case: h must be positive");
        if (!(nu > 0.0)) throw InvalidArgument("modal case: nu must be positive");
        if (k == 0.0) throw InvalidArgument("modal case: k = 0 is excluded");
    }
};

/// xi > 0 with (4/h^2) sinh^2(xi h / 2) = k^2.
inline double solve_xi(double h, double k) {
    if (!(h > 0.0) || k == 0.0) throw InvalidArgument("solve_xi: need h > 0 and k != 0");
    return (2.0 / h) * std::asinh(std::abs(k) * h / 2.0);
}

/// e^{-xi h} as the root of modulus below one.
inline double exp_xi(double h, double k) {
    if (!(h > 0.0) || k == 0.0) throw InvalidArgument("exp_xi: need h > 0 and k != 0");
    const double a = h * h * k * k;
    return 0.5 * ((2.0 + a) - std::sqrt(4.0 * a + a * a));
}

/// e^{-gamma h} with (4/h^2) sinh^2(gamma h / 2) = s/nu + k^2, chosen by |.| < 1.
inline cplx exp_gamma(double h, double k, double nu, cplx s) {
    if (!(h > 0.0) || !(nu > 0.0)) throw InvalidArgument("exp_gamma: need h > 0 and nu > 0");
    if (s.real() <= 0.0 && s.imag() != 0.0)
        throw DomainError("exp_gamma: root selection is ambiguous for Re(s) <= 0 off the real axis");
    const cplx a = h * h * (s / nu + k * k);
    const cplx r = std::sqrt(4.0 * a + a * a);
    const cplx e1 = 0.5 * ((2.0 + a) - r), e2 = 0.5 * ((2.0 + a) + r);
    return std::abs(e1) <= std::abs(e2) ? e1 : e2;
}

/// gamma with Re(gamma) > 0.
inline cplx solve_gamma(double h, double k, double nu, cplx s) { return -std::log(exp_gamma(h, k, nu, s)) / h; }

/// q1(0) by l'Hospital.
inline double q1_at_zero(double h, double k, double nu) {
    const double r = std::sqrt(4.0 * h * h * k * k + std::pow(h, 4) * std::pow(k, 4));
    return (std::pow(h, 4) * k * k + 2.0 * h * h) / (2.0 * nu * r) - h * h / (2.0 * nu);
}

inline double q_at_zero(double h, double k, double nu) {
    return (exp_xi(h, k) - 1.0) + nu * k * k * q1_at_zero(h, k, nu);
}

/// q1(s) = (e^{-xi h} - e^{-gamma h}) / s; the limit value at s = 0.
inline cplx q1(const ModalCase& c) {
    c.validate();
    if (c.s == cplx(0.0)) return q1_at_zero(c.h, c.k, c.nu);
    return (exp_xi(c.h, c.k) - exp_gamma(c.h, c.k, c.nu, c.s)) / c.s;
}

/// q(s) = (e^{-xi h} - 1) + nu k^2 q1(s).
inline cplx q(const ModalCase& c) { return (exp_xi(c.h, c.k) - 1.0) + c.nu * c.k * c.k * q1(c); }

/// Terms of the closed-form derivative q1'(s) = -(N1 - N2) / N3 for real s > 0.
struct Q1DerivativeTerms {
    double N1, N2, N3;
};

inline Q1DerivativeTerms q1_derivative_terms(double h, double k, double nu, double s) {
    if (!(s > 0.0)) throw InvalidArgument("q1_derivative_terms: need real s > 0");
    const double h2 = h * h, h4 = h2 * h2, k2 = k * k;
    const double a = s / nu + k2;
    const double ra = std::sqrt(4.0 * h2 * a + h4 * a * a);
    const double N1 = 2.0 * h2 * s + 4.0 * h2 * k2 * nu + h4 * k2 * k2 * nu + h4 * k2 * s;
    const double N2 = nu * std::sqrt(4.0 * h2 * k2 + h4 * k2 * k2) * ra;
    const double N3 = 2.0 * nu * s * s * ra;
    return {N1, N2, N3};
}

inline double q1_derivative(double h, double k, double nu, double s) {
    const auto t = q1_derivative_terms(h, k, nu, s);
    return -(t.N1 - t.N2) / t.N3;
}

/// Roots of [h^2(s+nu k^2) - nu d2] {(nu - alpha h^2/4) d2^2 - h^2(s+2nu k^2+alpha) d2 + h^4 k^2(s+nu k^2+alpha)} = 0.
inline std::array<cplx, 3> d2_roots(const ModalCase& c) {
    c.validate();
    const double h2 = c.h * c.h, k2 = c.k * c.k;
    const cplx s = c.s;
    const cplx r1 = h2 * (s + c.nu * k2) / c.nu;
    const double lead = c.nu - c.alpha * h2 / 4.0;
    const cplx b = h2 * (s + 2.0 * c.nu * k2 + c.alpha);
    if (std::abs(lead) <= 1e-14 * std::max(1.0, c.nu)) {
        const cplx root = h2 * h2 * k2 * (s + c.nu * k2 + c.alpha) / b;
        throw DegenerateQuadratic("d2_roots: nu = alpha h^2 / 4 leaves a linear equation", root.real());
    }
    const cplx D = std::sqrt(((c.alpha + s) * (c.alpha + s) + (s + c.alpha + c.nu * k2) * c.alpha * h2 * k2) * h2 * h2);
    return {r1, (b + D) / (2.0 * lead), (b - D) / (2.0 * lead)};
}

/// Residual of the d2 factor polynomial that root n satisfies (relative).
inline double d2_residual(const ModalCase& c, int n, cplx d2) {
    const double h2 = c.h * c.h, k2 = c.k * c.k;
    const cplx s = c.s;
    if (n == 0) {
        const cplx a = h2 * (s + c.nu * k2);
        return std::abs(a - c.nu * d2) / std::max(std::abs(a), std::abs(c.nu * d2));
    }
    const double lead = c.nu - c.alpha * h2 / 4.0;
    const cplx t1 = lead * d2 * d2, t2 = h2 * (s + 2.0 * c.nu * k2 + c.alpha) * d2,
               t3 = h2 * h2 * k2 * (s + c.nu * k2 + c.alpha);
    const double scale = std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
    return std::abs(t1 - t2 + t3) / scale;
}

/// Root of lambda^2 - (2 + d2) lambda + 1 = 0 with |lambda| < 1.
inline cplx lambda_inside(cplx d2) {
    const cplx b = 2.0 + d2;
    const cplx r = std::sqrt(b * b - 4.0);
    // Larger root without cancellation; the roots are reciprocal.
    const cplx l1 = 0.5 * (b - r), l2 = 0.5 * (b + r);
    const cplx big = std::abs(l1) >= std::abs(l2) ? l1 : l2;
    const cplx l = 1.0 / big;
    if (std::abs(std::abs(l) - 1.0) <= 1e-12)
        throw MarginalRoot("lambda_inside: both roots lie on the unit circle (d2 in [-4, 0])");
    return l;
}

/// Decaying modes: lambda_n and (U0, V0, P0) for each d2 root.
struct Modes {
    std::array<cplx, 3> d2;
    std::array<cplx, 3> lambda;
    std::array<cplx, 3> d1;
    std::array<Eigen::Vector3cd, 3> vec;
};

inline Modes decaying_modes(const ModalCase& c) {
    if (c.alpha == 0.0) throw InvalidArgument("decaying_modes: alpha must be nonzero");
    Modes m;
    m.d2 = d2_roots(c);
    const cplx ik(0.0, c.k);
    const cplx s = c.s;
    const double h = c.h, k2 = c.k * c.k;
    for (int n = 0; n < 3; ++n) {
        m.lambda[n] = lambda_inside(m.d2[n]);
        m.d1[n] = 0.5 * (m.lambda[n] - 1.0 / m.lambda[n]);
    }
    m.vec[0] << -m.d1[0] / h, ik, 0.0;
    m.vec[1] << ik, m.d1[1] / h, -(s + c.nu * k2) + c.nu * m.d2[1] / (h * h);
    m.vec[2] << ik / c.alpha, m.d1[2] / (h * c.alpha), (-(s + c.nu * k2) + c.nu * m.d2[2] / (h * h)) / c.alpha;
    return m;
}

/// Boundary matrix Z: no-slip rows for U and V, then the pressure boundary row.
inline Eigen::Matrix3cd build_Z(const ModalCase& c) {
    const Modes m = decaying_modes(c);
    const cplx ik(0.0, c.k);
    const cplx s = c.s;
    const double h = c.h, k2 = c.k * c.k, nu = c.nu, a = c.alpha;
    Eigen::Matrix3cd Z;
    Z(0, 0) = -m.d1[0] / h;
    Z(0, 1) = ik;
    Z(0, 2) = ik / a;
    Z(1, 0) = ik;
    Z(1, 1) = m.d1[1] / h;
    Z(1, 2) = m.d1[2] / (h * a);
    Z(2, 0) = -nu * ik * m.d1[0] * (m.lambda[0] - 1.0) / (h * h);
    Z(2, 1) = (-(s + 2.0 * nu * k2) + nu * m.d2[1] / (h * h)) * (m.lambda[1] - 1.0) / h;
    Z(2, 2) = (-(s + 2.0 * nu * k2) + nu * m.d2[2] / (h * h)) * (m.lambda[2] - 1.0) / (h * a);
    return Z;
}

inline cplx det_Z(const ModalCase& c) { return build_Z(c).determinant(); }

/// Closed-form limit of det Z as h -> 0 (principal square roots).
inline cplx limit_detZ(double k, double nu, double alpha, cplx s) {
    const double ak = std::abs(k), k2 = k * k;
    return -(1.0 / alpha) * (alpha + s) * (ak * std::sqrt((nu * k2 + s) / nu) - k2) *
           std::sqrt((nu * k2 + alpha + s) / nu);
}

/// Leading-order boundary-layer amplitudes for the inhomogeneous pressure
/// boundary row h^r g0 (r = 1 or 2).
inline std::array<cplx, 3> leading_sigma(double k, double nu, double alpha, cplx s, double h, int r, cplx g0) {
    if (!(alpha > 0.0)) throw InvalidArgument("leading_sigma: alpha must be positive");
    if (r != 1 && r != 2) throw InvalidArgument("leading_sigma: r must be 1 or 2");
    const cplx I(0.0, 1.0);
    const double ak = std::abs(k), k2 = k * k;
    const cplx hr = std::pow(h, r) * g0;
    const cplx A = std::sqrt((nu * k2 + s) / nu);
    const cplx B = std::sqrt((nu * k2 + alpha + s) / nu);
    const cplx den = (alpha + s) * (ak * A - k2) * B;
    return {I * hr * k * (ak - B) / den, -hr / ((alpha + s) * B), alpha * hr * (A * B - k2) / den};
}

// ---------------------------------------------------------------------------
// Determinant scans

struct ScanGrid {
    double re_min = -20.0, re_max = 20.0;
    double im_min = -30.0, im_max = 30.0;
    int n_re = 400, n_im = 600;
};

struct ContourSegment {
    int curve;  // 0: Re det Z = 0, 1: Im det Z = 0
    double x0, y0, x1, y1;
};

struct ScanCell {
    double re_lo, re_hi, im_lo, im_hi;
};

struct ComplexScan {
    ScanGrid grid;
    std::vector<double> re, im;
    std::vector<cplx> det;  // row-major over (im, re); NaN where undefined
    std::vector<ContourSegment> segments;
    std::vector<ScanCell> intersections;

    cplx at(int i_re, int j_im) const { return det[static_cast<std::size_t>(j_im) * re.size() + i_re]; }

    /// Candidate cells lying entirely in Re(s) > 0.
    std::vector<ScanCell> right_half_intersections() const {
        std::vector<ScanCell> out;
        for (const auto& c : intersections)
            if (c.re_lo > 0.0) out.push_back(c);
        return out;
    }
};

namespace detail {

inline std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = (n == 1) ? a : a + (b - a) * i / (n - 1);
    return v;
}

inline int sgn(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

/// Marching squares on one cell for corner values ordered (00, 10, 11, 01).
inline void march(int curve, const std::array<double, 4>& v, const std::array<double, 2>& xs,
                  const std::array<double, 2>& ys, std::vector<ContourSegment>& out) {
    const std::array<std::array<double, 2>, 4> P{{{xs[0], ys[0]}, {xs[1], ys[0]}, {xs[1], ys[1]}, {xs[0], ys[1]}}};
    std::vector<std::array<double, 2>> pts;
    for (int e = 0; e < 4; ++e) {
        const double a = v[e], b = v[(e + 1) % 4];
        if ((a > 0.0) != (b > 0.0)) {
            const double t = a / (a - b);
            pts.push_back({P[e][0] + t * (P[(e + 1) % 4][0] - P[e][0]), P[e][1] + t * (P[(e + 1) % 4][1] - P[e][1])});
        }
    }
    if (pts.size() == 2) {
        out.push_back({curve, pts[0][0], pts[0][1], pts[1][0], pts[1][1]});
    } else if (pts.size() == 4) {
        const double centre = 0.25 * (v[0] + v[1] + v[2] + v[3]);
        // Edge crossings are in edge order 0..3; pair them so the centre's side is respected.
        if ((centre > 0.0) == (v[0] > 0.0)) {
            out.push_back({curve, pts[0][0], pts[0][1], pts[1][0], pts[1][1]});
            out.push_back({curve, pts[2][0], pts[2][1], pts[3][0], pts[3][1]});
        } else {
            out.push_back({curve, pts[3][0], pts[3][1], pts[0][0], pts[0][1]});
            out.push_back({curve, pts[1][0], pts[1][1], pts[2][0], pts[2][1]});
        }
    }
}

}  // namespace detail

/// Samples det Z over the grid (h, k, nu, alpha from `tmpl`), extracts the
/// zero contours of its real and imaginary parts, and flags every cell in
/// which both parts change sign.
inline ComplexScan detZ_scan(const ModalCase& tmpl, const ScanGrid& grid = {}) {
    if (grid.n_re < 2 || grid.n_im < 2 || !(grid.re_max > grid.re_min) || !(grid.im_max > grid.im_min))
        throw InvalidArgument("detZ_scan: grid must be strictly ordered with at least 2 points per axis");
    ComplexScan sc;
    sc.grid = grid;
    sc.re = detail::linspace(grid.re_min, grid.re_max, grid.n_re);
    sc.im = detail::linspace(grid.im_min, grid.im_max, grid.n_im);
    sc.det.resize(static_cast<std::size_t>(grid.n_re) * grid.n_im);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    ModalCase c = tmpl;
    for (int j = 0; j < grid.n_im; ++j) {
        for (int i = 0; i < grid.n_re; ++i) {
            c.s = cplx(sc.re[i], sc.im[j]);
            cplx d(nan, nan);
            if (c.s != cplx(0.0)) {
                try {
                    d = det_Z(c);
                } catch (const MarginalRoot&) {
                } catch (const DegenerateQuadratic&) {
                }
            }
            sc.det[static_cast<std::size_t>(j) * grid.n_re + i] = d;
        }
    }
    for (int j = 0; j + 1 < grid.n_im; ++j) {
        for (int i = 0; i + 1 < grid.n_re; ++i) {
            const std::array<cplx, 4> v{sc.at(i, j), sc.at(i + 1, j), sc.at(i + 1, j + 1), sc.at(i, j + 1)};
            bool finite = true;
            for (const auto& z : v) finite = finite && std::isfinite(z.real()) && std::isfinite(z.imag());
            if (!finite) continue;
            const std::array<double, 4> re{v[0].real(), v[1].real(), v[2].real(), v[3].real()};
            const std::array<double, 4> im{v[0].imag(), v[1].imag(), v[2].imag(), v[3].imag()};
            const std::array<double, 2> xs{sc.re[i], sc.re[i + 1]}, ys{sc.im[j], sc.im[j + 1]};
            detail::march(0, re, xs, ys, sc.segments);
            detail::march(1, im, xs, ys, sc.segments);
            auto changes = [](const std::array<double, 4>& a) {
                int lo = 2, hi = -2;
                for (double x : a) {
                    lo = std::min(lo, detail::sgn(x));
                    hi = std::max(hi, detail::sgn(x));
                }
                return lo != hi || lo == 0;
            };
            if (changes(re) && changes(im)) sc.intersections.push_back({xs[0], xs[1], ys[0], ys[1]});
        }
    }
    return sc;
}

inline void write_scan_csv(const ComplexScan& sc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError(path, "cannot open for writing");
    out << "re_s,im_s,re_det,im_det\n" << std::setprecision(12);
    for (std::size_t j = 0; j < sc.im.size(); ++j)
        for (std::size_t i = 0; i < sc.re.size(); ++i) {
            const cplx d = sc.at(static_cast<int>(i), static_cast<int>(j));
            out << sc.re[i] << ',' << sc.im[j] << ',' << d.real() << ',' << d.imag() << '\n';
        }
    if (!out) throw IoError(path, "write failed");
}

inline void write_contours_csv(const ComplexScan& sc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError(path, "cannot open for writing");
    out << "curve,x0,y0,x1,y1\n" << std::setprecision(12);
    for (const auto& s : sc.segments)
        out << (s.curve == 0 ? "re" : "im") << ',' << s.x0 << ',' << s.y0 << ',' << s.x1 << ',' << s.y1 << '\n';
    if (!out) throw IoError(path, "write failed");
}

// ---------------------------------------------------------------------------
// Sign and monotonicity checks for q1 and q

struct QLemmaReport {
    long samples = 0;
    long violations = 0;
    double max_identity_error = 0.0;  // max |N1^2 - N2^2 - 4 h^4 s^2| / (4 h^4 s^2)
    std::vector<std::string> details;
};

/// Samples real s in (0, s_max] at n_s evenly spaced points for each integer
/// k in [k_min, k_max]; checks q1'(s) < 0, q(s) < q(0) < 0, and the N1/N2 identity.
inline QLemmaReport verify_q_lemmas(double h, double nu, int k_min, int k_max, double s_max, int n_s) {
    if (k_min < 1 || k_max < k_min || !(s_max > 0.0) || n_s < 1)
        throw InvalidArgument("verify_q_lemmas: invalid sampling ranges");
    QLemmaReport rep;
    auto flag = [&](const std::string& what, int k, double s, double v) {
        ++rep.violations;
        if (rep.details.size() < 20)
            rep.details.push_back(what + " at k=" + std::to_string(k) + " s=" + std::to_string(s) +
                                  " value=" + std::to_string(v));
    };
    for (int k = k_min; k <= k_max; ++k) {
        const double q0 = q_at_zero(h, k, nu);
        if (!(q0 < 0.0)) flag("q(0) >= 0", k, 0.0, q0);
        for (int i = 1; i <= n_s; ++i) {
            const double s = s_max * i / n_s;
            ++rep.samples;
            const double qs = q(ModalCase{h, static_cast<double>(k), nu, 0.0, s}).real();
            if (!(qs < q0)) flag("q(s) >= q(0)", k, s, qs);
            const auto t = q1_derivative_terms(h, k, nu, s);
            const double d = -(t.N1 - t.N2) / t.N3;
            if (!(d < 0.0)) flag("q1'(s) >= 0", k, s, d);
            const double ref = 4.0 * std::pow(h, 4) * s * s;
            rep.max_identity_error = std::max(rep.max_identity_error, std::abs((t.N1 - t.N2) * (t.N1 + t.N2) - ref) / ref);
        }
    }
    return rep;
}

}  // namespace splitfem::modal
