#pragma once

#include "hardwall/laurent.hpp"
#include "hardwall/potential.hpp"

#include <array>
#include <utility>
#include <vector>

namespace hardwall {

// 1/N-expansion bookkeeping: the series in nu = N sqrt(beta)/t (genus
// counting) and hbar = (t/N)(1 - 1/beta), which vanishes exactly at beta = 1.
struct ExpansionParams {
    int N = 1;
    double beta = 1.0;
    double t = 1.0;

    double nu() const;
    double hbar() const;
};

// One-cut equilibrium data with a hard edge at x = a and a soft endpoint at
// x = b < a, uniformized by x(z) = alpha + gamma (z + 1/z) so the cut [b, a]
// is the image of the unit circle, z = 1 <-> x = a, z = -1 <-> x = b.
//
// Conventions: r = residue of w1 at z = 1 (= -u_0, > 0 while the wall is
// active), M(a) = -r, density rho(x) = -(1/2pi) M(x) sqrt((x-b)/(a-x)).
struct OneCutCurve {
    Potential pot;
    double a = 0.0;
    double b = 0.0;
    double alpha = 0.0;  // (a+b)/2
    double gamma = 0.0;  // (a-b)/4
    double r = 0.0;
    int branch_sign = 1;          // sign of -M fixing rho >= 0
    std::vector<double> u;        // u_0 .. u_{d-1}: V'(x(z)) = u_0 + sum u_k (z^k + z^-k)
    std::vector<double> v;        // v_0 .. v_d:     V(x(z)) = v_0 + sum v_k (z^k + z^-k)
    std::vector<double> m_x;      // M(x) power-basis coefficients, degree d-1
    std::vector<cplx> moment_roots_x;  // zeros x_j of M
    std::vector<cplx> moment_roots_s;  // exterior preimages, |s_j| >= 1

    // Zhukovsky map and derivatives
    double x_of(double z) const { return alpha + gamma * (z + 1.0 / z); }
    cplx x_of(cplx z) const { return alpha + gamma * (z + 1.0 / z); }
    cplx xp(cplx z) const { return gamma * (z - 1.0) * (z + 1.0) / (z * z); }
    cplx xpp(cplx z) const { return 2.0 * gamma / (z * z * z); }

    // moment polynomial and derivatives (power-basis evaluation)
    cplx M_at(cplx x) const;
    cplx Mp_at(cplx x) const;
    cplx Mpp_at(cplx x) const;

    // spectral one-form y(z) = (1/2) ((z+1)/(z-1)) M(x(z)) and its z-derivative
    cplx y_at(cplx z) const;   // throws PoleHit at z = 1
    cplx yp_at(cplx z) const;

    // leading resolvent on the z-plane: w1(z) = r/(z-1) + sum_{k>=1} u_k z^-k
    cplx w1_at(cplx z) const;  // throws PoleHit at z = 1, 0
    cplx w1p_at(cplx z) const;

    // edge moments m_a^(p) = sum k^p u_k, m_b^(p) = sum (-1)^k k^p u_k
    double m_a(int p) const;
    double m_b(int p) const;

    bool wall_active(double tol = 1e-8) const;
    // true if some |s_j| is within tol of the unit circle
    bool near_critical(double tol = 1e-8) const;
    // throws CriticalCurve; guard for every consumer of hard-edge residue data
    void require_noncritical(double tol = 1e-8) const;
};

// Saddle data for the wall at x = a.  The endpoint b solves
// gamma (b_1 - b_0) = t after the Chebyshev decomposition of V'; among the
// bracketed roots the one with rho >= 0 on [b, a] is returned.
// Throws HardEdgeInactive past the soft edge, NoOneCutSolution if the search
// fails, CriticalCurve for an active wall with a moment root on the unit
// circle (the wall exactly at the soft edge is returned, not thrown).
OneCutCurve solve_curve(const Potential& pot, double a);

// Wall-free saddle: b_0 = 0 and gamma b_1 = t solved for (alpha, gamma) by a
// damped Newton iteration.  Returns the curve with a at the soft edge and
// r = 0; its moment set contains the structural root s = 1 (the coincident
// hard/soft edge) plus the d-2 genuinely soft roots.
OneCutCurve solve_unconstrained(const Potential& pot);

// (u, v) Chebyshev data of V' and V on the circle frame
std::pair<std::vector<double>, std::vector<double>>
chebyshev_decompose(const Potential& pot, double alpha, double gamma);

// Zeros of M and their exterior Zhukovsky preimages; strict criticality test
// (throws CriticalCurve whenever some |s_j| is within tol of the unit circle,
// including the wall-at-soft-edge case).
std::pair<std::vector<cplx>, std::vector<cplx>>
moment_roots(const OneCutCurve& curve, double tol_crit = 1e-8);

// equilibrium density at x in [b, a]; throws OutOfSupport outside
double density_at(const OneCutCurve& curve, double x);

// leading resolvent in the z-frame (alias with the naming of the expansion)
cplx w1_00_at(const OneCutCurve& curve, cplx z);

// integral of rho over [b, a] via the theta-substitution x = alpha + 2 gamma cos(theta)
// (smooth integrand; used by the normalization invariant)
double support_mass(const OneCutCurve& curve);

struct CurveReport {
    double a, b, alpha, gamma, r, t;
    std::vector<double> m_coeffs;  // M(x) power basis
    std::vector<cplx> roots_x, roots_s;
    double M_a, M_b, Mp_a, Mp_b;
    std::array<double, 4> ma, mb;  // m^{(0)} .. m^{(3)}
};
CurveReport curve_report(const OneCutCurve& curve);

// Residual of the endpoint equation in caller-chosen precision; lets tests
// certify the double-precision b against a >= 30-digit re-solve.
template <class Real>
Real endpoint_equation(const Potential& pot, Real a, Real b) {
    const Real alpha = (a + b) / Real(2);
    const Real gamma = (a - b) / Real(4);
    const auto bk = vprime_circle_coefficients(pot.coeffs, alpha, gamma);
    return gamma * (bk[1] - bk[0]) - Real(pot.t);
}

// Residuals (b_0, gamma b_1 - t) of the wall-free endpoint equations
template <class Real>
std::pair<Real, Real> soft_edge_equations(const Potential& pot, Real alpha, Real gamma) {
    const auto bk = vprime_circle_coefficients(pot.coeffs, alpha, gamma);
    return {bk[0], gamma * bk[1] - Real(pot.t)};
}

} // namespace hardwall
