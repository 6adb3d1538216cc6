#include "hardwall/curve.hpp"
#include "hardwall/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace hardwall {

double ExpansionParams::nu() const { return N * std::sqrt(beta) / t; }
double ExpansionParams::hbar() const { return (t / N) * (1.0 - 1.0 / beta); }

namespace {

// evaluate a power-basis polynomial
cplx horner(const std::vector<double>& c, cplx x) {
    cplx v = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        v = v * x + *it;
    return v;
}

std::vector<double> poly_derivative(const std::vector<double>& c) {
    std::vector<double> d;
    for (std::size_t j = 1; j < c.size(); ++j)
        d.push_back(double(j) * c[j]);
    return d;
}

// Q(w) = sum_{k>=1} u_k p_{k-1}(w) with p_0 = 1, p_1 = w, p_k = w p_{k-1} - p_{k-2}
std::vector<double> q_poly_w(const std::vector<double>& u) {
    std::vector<double> q(1, 0.0);
    std::vector<double> p_prev;         // p_{-1} = 0
    std::vector<double> p{1.0};          // p_0
    for (std::size_t k = 1; k < u.size(); ++k) {
        if (q.size() < p.size())
            q.resize(p.size(), 0.0);
        for (std::size_t j = 0; j < p.size(); ++j)
            q[j] += u[k] * p[j];
        // advance p_{k-1} -> p_k
        std::vector<double> p_next(p.size() + 1, 0.0);
        for (std::size_t j = 0; j < p.size(); ++j)
            p_next[j + 1] += p[j];
        for (std::size_t j = 0; j < p_prev.size(); ++j)
            p_next[j] -= p_prev[j];
        p_prev = std::move(p);
        p = std::move(p_next);
    }
    return q;
}

// M(w) = -r + (w - 2) Q(w)
std::vector<double> m_poly_w(const std::vector<double>& q, double r) {
    std::vector<double> m(q.size() + 1, 0.0);
    for (std::size_t j = 0; j < q.size(); ++j) {
        m[j + 1] += q[j];
        m[j] -= 2.0 * q[j];
    }
    m[0] -= r;
    return m;
}

// substitute w = (x - alpha)/gamma into a w-polynomial
std::vector<double> w_poly_to_x(const std::vector<double>& cw, double alpha, double gamma) {
    // Horner: result = ((c_n (x-a)/g + c_{n-1}) (x-a)/g + ...)
    std::vector<double> acc{cw.back()};
    for (int j = static_cast<int>(cw.size()) - 2; j >= 0; --j) {
        std::vector<double> next(acc.size() + 1, 0.0);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            next[i + 1] += acc[i] / gamma;
            next[i] -= acc[i] * alpha / gamma;
        }
        next[0] += cw[j];
        acc = std::move(next);
    }
    return acc;
}

std::vector<cplx> companion_roots(const std::vector<double>& c) {
    // strip negligible leading coefficients
    int deg = static_cast<int>(c.size()) - 1;
    double scale = 0.0;
    for (double x : c)
        scale = std::max(scale, std::abs(x));
    while (deg > 0 && std::abs(c[deg]) < 1e-14 * scale)
        --deg;
    if (deg < 1)
        return {};
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i)
        comp(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i)
        comp(i, deg - 1) = -c[i] / c[deg];
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, /*computeEigenvectors=*/false);
    std::vector<cplx> roots(deg);
    for (int i = 0; i < deg; ++i)
        roots[i] = es.eigenvalues()(i);
    return roots;
}

// real-coefficient polynomials: snap near-real eigenvalues and average
// conjugate partners so pairs are exact
void symmetrize_conjugates(std::vector<cplx>& roots) {
    double scale = 1.0;
    for (const auto& z : roots)
        scale = std::max(scale, std::abs(z));
    for (auto& z : roots)
        if (std::abs(z.imag()) < 1e-10 * scale)
            z = cplx(z.real(), 0.0);
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (used[i] || roots[i].imag() <= 0.0)
            continue;
        std::size_t best = i;
        double dist = 1e300;
        for (std::size_t j = 0; j < roots.size(); ++j) {
            if (j == i || used[j] || roots[j].imag() >= 0.0)
                continue;
            const double d = std::abs(roots[j] - std::conj(roots[i]));
            if (d < dist) {
                dist = d;
                best = j;
            }
        }
        if (best != i && dist < 1e-8 * scale) {
            const cplx avg = 0.5 * (roots[i] + std::conj(roots[best]));
            roots[i] = avg;
            roots[best] = std::conj(avg);
            used[i] = used[best] = true;
        }
    }
    std::sort(roots.begin(), roots.end(), [](cplx x, cplx y) {
        if (x.real() != y.real())
            return x.real() < y.real();
        return x.imag() < y.imag();
    });
}

// exterior solution of s + 1/s = w
cplx exterior_branch(cplx w) {
    const cplx root = std::sqrt(w * w - 4.0);
    const cplx s1 = 0.5 * (w + root);
    const cplx s2 = 0.5 * (w - root);
    return std::abs(s1) >= std::abs(s2) ? s1 : s2;
}

// fill u, v, r, M data and moment roots for given endpoints (no criticality
// policy applied here)
void fill_curve_data(OneCutCurve& c) {
    c.alpha = 0.5 * (c.a + c.b);
    c.gamma = 0.25 * (c.a - c.b);
    c.u = vprime_circle_coefficients(c.pot.coeffs, c.alpha, c.gamma);
    c.v = v_circle_coefficients(c.pot.coeffs, c.alpha, c.gamma);
    c.r = -c.u[0];
    c.branch_sign = 1;
    const std::vector<double> q = q_poly_w(c.u);
    c.m_x = w_poly_to_x(m_poly_w(q, c.r), c.alpha, c.gamma);
    std::vector<cplx> ws;
    double uscale = 1e-300;
    for (double uk : c.u)
        uscale = std::max(uscale, std::abs(uk));
    if (std::abs(c.r) <= 1e-12 * uscale) {
        // the (w - 2) factor is structural when r = 0; deflating it keeps the
        // coincident-edge root exactly on s = 1 instead of smearing the
        // eigenvalue error through the branch point of sqrt(w^2 - 4)
        ws = companion_roots(q);
        ws.push_back(cplx(2.0));
    } else {
        ws = companion_roots(m_poly_w(q, c.r));
    }
    symmetrize_conjugates(ws);
    c.moment_roots_x.clear();
    c.moment_roots_s.clear();
    for (const cplx& w : ws) {
        c.moment_roots_x.push_back(c.alpha + c.gamma * w);
        c.moment_roots_s.push_back(exterior_branch(w));
    }
}

double u_scale(const OneCutCurve& c) {
    double s = 1e-300;
    for (double uk : c.u)
        s = std::max(s, std::abs(uk));
    return s;
}

// rho >= 0 on (b, a) is equivalent to M <= 0 there
bool density_admissible(const OneCutCurve& c) {
    double mmax = -1e300, mscale = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double theta = std::numbers::pi * (i + 0.5) / 200.0;
        const double x = c.alpha + 2.0 * c.gamma * std::cos(theta);
        const double m = c.M_at(cplx(x)).real();
        mmax = std::max(mmax, m);
        mscale = std::max(mscale, std::abs(m));
    }
    return mmax <= 1e-10 * std::max(mscale, 1e-300) && c.r >= -1e-8 * u_scale(c);
}

} // namespace

cplx OneCutCurve::M_at(cplx x) const { return horner(m_x, x); }
cplx OneCutCurve::Mp_at(cplx x) const { return horner(poly_derivative(m_x), x); }
cplx OneCutCurve::Mpp_at(cplx x) const { return horner(poly_derivative(poly_derivative(m_x)), x); }

cplx OneCutCurve::y_at(cplx z) const {
    if (std::abs(z - 1.0) < 1e-13)
        throw PoleHit("y_at: z = 1 is the hard-edge pole");
    if (std::abs(z) < 1e-13)
        throw PoleHit("y_at: z = 0");
    return 0.5 * (z + 1.0) / (z - 1.0) * M_at(x_of(z));
}

cplx OneCutCurve::yp_at(cplx z) const {
    if (std::abs(z - 1.0) < 1e-13)
        throw PoleHit("yp_at: z = 1 is the hard-edge pole");
    if (std::abs(z) < 1e-13)
        throw PoleHit("yp_at: z = 0");
    const cplx x = x_of(z);
    return -M_at(x) / ((z - 1.0) * (z - 1.0))
         + 0.5 * (z + 1.0) / (z - 1.0) * Mp_at(x) * xp(z);
}

cplx OneCutCurve::w1_at(cplx z) const {
    if (std::abs(z - 1.0) < 1e-13 || std::abs(z) < 1e-13)
        throw PoleHit("w1_at: z on a pole of w1");
    cplx tail = 0.0;
    for (std::size_t k = u.size() - 1; k >= 1; --k)
        tail = (tail + u[k]) / z;
    return r / (z - 1.0) + tail;
}

cplx OneCutCurve::w1p_at(cplx z) const {
    if (std::abs(z - 1.0) < 1e-13 || std::abs(z) < 1e-13)
        throw PoleHit("w1p_at: z on a pole of w1");
    cplx tail = 0.0;
    for (std::size_t k = u.size() - 1; k >= 1; --k)
        tail = (tail - double(k) * u[k]) / z;
    return -r / ((z - 1.0) * (z - 1.0)) + tail / z;
}

double OneCutCurve::m_a(int p) const {
    double s = 0.0;
    for (std::size_t k = 1; k < u.size(); ++k)
        s += std::pow(double(k), p) * u[k];
    return s;
}

double OneCutCurve::m_b(int p) const {
    double s = 0.0;
    for (std::size_t k = 1; k < u.size(); ++k)
        s += ((k % 2 == 0) ? 1.0 : -1.0) * std::pow(double(k), p) * u[k];
    return s;
}

bool OneCutCurve::wall_active(double tol) const { return r > tol * u_scale(*this); }

bool OneCutCurve::near_critical(double tol) const {
    for (const cplx& s : moment_roots_s)
        if (std::abs(std::abs(s) - 1.0) < tol)
            return true;
    return false;
}

void OneCutCurve::require_noncritical(double tol) const {
    if (near_critical(tol))
        throw CriticalCurve("moment root on the unit circle: hard-edge residue data degenerate");
}

std::pair<std::vector<double>, std::vector<double>>
chebyshev_decompose(const Potential& pot, double alpha, double gamma) {
    if (!(gamma > 0.0))
        throw DomainError("chebyshev_decompose: gamma must be positive");
    return {vprime_circle_coefficients(pot.coeffs, alpha, gamma),
            v_circle_coefficients(pot.coeffs, alpha, gamma)};
}

std::pair<std::vector<cplx>, std::vector<cplx>>
moment_roots(const OneCutCurve& curve, double tol_crit) {
    for (const cplx& s : curve.moment_roots_s)
        if (std::abs(std::abs(s) - 1.0) < tol_crit)
            throw CriticalCurve("moment root s = " + std::to_string(s.real()) + " + "
                                + std::to_string(s.imag()) + "i on the unit circle");
    return {curve.moment_roots_x, curve.moment_roots_s};
}

OneCutCurve solve_unconstrained(const Potential& pot) {
    pot.validate();
    const int d = pot.degree();
    auto residual = [&](double alpha, double gamma) {
        return soft_edge_equations(pot, alpha, gamma);
    };
    auto norm2 = [](const std::pair<double, double>& f) {
        return f.first * f.first + f.second * f.second;
    };
    // leading-order guess: gamma b_1 ~ binom(d-1, floor((d-1)/2)) t_d gamma^d
    double binom = 1.0;
    for (int j = 1; j <= (d - 1) / 2; ++j)
        binom *= double(d - j) / j;
    const double g0 = std::pow(std::abs(pot.t / (binom * pot.td())), 1.0 / d);

    const double ftol = 1e-13 * std::max(1.0, std::abs(pot.t));
    for (int attempt = 0; attempt < 7; ++attempt) {
        double alpha = (attempt < 4) ? 0.0 : 0.3 * g0 * (attempt - 4.5);
        double gamma = g0 * std::pow(2.0, (attempt % 4) - 1);
        auto f = residual(alpha, gamma);
        bool ok = false;
        for (int it = 0; it < 200; ++it) {
            if (std::sqrt(norm2(f)) < ftol) {
                ok = true;
                break;
            }
            const double ha = 1e-6 * std::max(1.0, std::abs(alpha));
            const double hg = 1e-6 * std::max(1.0, std::abs(gamma));
            const auto fa1 = residual(alpha + ha, gamma), fa0 = residual(alpha - ha, gamma);
            const auto fg1 = residual(alpha, gamma + hg), fg0 = residual(alpha, gamma - hg);
            const double j00 = (fa1.first - fa0.first) / (2 * ha);
            const double j01 = (fg1.first - fg0.first) / (2 * hg);
            const double j10 = (fa1.second - fa0.second) / (2 * ha);
            const double j11 = (fg1.second - fg0.second) / (2 * hg);
            const double det = j00 * j11 - j01 * j10;
            if (!(std::abs(det) > 1e-300))
                break;
            double da = -(j11 * f.first - j01 * f.second) / det;
            double dg = -(-j10 * f.first + j00 * f.second) / det;
            // dampen: keep gamma positive and demand decrease
            double lam = 1.0;
            bool moved = false;
            for (int h = 0; h < 40; ++h) {
                const double na = alpha + lam * da, ng = gamma + lam * dg;
                if (ng > 1e-12) {
                    const auto nf = residual(na, ng);
                    if (norm2(nf) < norm2(f)) {
                        alpha = na;
                        gamma = ng;
                        f = nf;
                        moved = true;
                        break;
                    }
                }
                lam *= 0.5;
            }
            if (!moved)
                break;
        }
        if (ok) {
            OneCutCurve c;
            c.pot = pot;
            c.a = alpha + 2.0 * gamma;
            c.b = alpha - 2.0 * gamma;
            fill_curve_data(c);
            if (!density_admissible(c))
                continue;  // converged to an inadmissible branch; retry
            return c;
        }
    }
    throw NoOneCutSolution("solve_unconstrained: endpoint iteration failed for degree "
                           + std::to_string(d) + " potential");
}

OneCutCurve solve_curve(const Potential& pot, double a) {
    pot.validate();
    const OneCutCurve soft = solve_unconstrained(pot);
    const double edge_scale = std::max({1.0, std::abs(soft.a), soft.gamma});
    if (a > soft.a + 1e-9 * edge_scale)
        throw HardEdgeInactive("wall a = " + std::to_string(a) + " beyond the soft edge "
                               + std::to_string(soft.a));
    if (a >= soft.a - 1e-12 * edge_scale)
        return soft;  // wall exactly at the soft edge: the wall-free curve

    auto g = [&](double b) { return endpoint_equation(pot, a, b); };
    auto refine = [&](double lo, double hi) {
        double flo = g(lo), fhi = g(hi);
        for (int it = 0; it < 200 && hi - lo > 1e-16 * std::max(1.0, std::abs(lo)); ++it) {
            // secant proposal clipped into the bracket, else bisect
            double mid = hi - fhi * (hi - lo) / (fhi - flo);
            if (!(mid > lo && mid < hi))
                mid = 0.5 * (lo + hi);
            const double fm = g(mid);
            if ((flo < 0) == (fm < 0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
                fhi = fm;
            }
        }
        return 0.5 * (lo + hi);
    };

    const double w0 = std::max(1.0, 2.0 * (a - soft.b));
    std::vector<OneCutCurve> admissible;
    for (int grow = 0; grow < 34 && admissible.empty(); ++grow) {
        const double width = w0 * std::pow(2.0, grow);
        const int n_grid = 1024;
        double prev_b = a - width;
        double prev_g = g(prev_b);
        for (int i = 1; i <= n_grid; ++i) {
            // keep clear of b = a where gamma degenerates
            const double bb = a - width + width * (1.0 - 2e-7) * i / n_grid;
            const double gg = g(bb);
            if ((prev_g < 0) != (gg < 0)) {
                const double b = refine(prev_b, bb);
                OneCutCurve c;
                c.pot = pot;
                c.a = a;
                c.b = b;
                fill_curve_data(c);
                if (density_admissible(c))
                    admissible.push_back(std::move(c));
            }
            prev_b = bb;
            prev_g = gg;
        }
    }
    if (admissible.empty())
        throw NoOneCutSolution("solve_curve: no admissible endpoint for a = " + std::to_string(a));
    // generic potentials have a unique admissible root; if numerics offer
    // several, take the smallest support
    OneCutCurve best = admissible.front();
    for (const auto& c : admissible)
        if (c.b > best.b)
            best = c;
    if (best.wall_active() && best.near_critical())
        throw CriticalCurve("solve_curve: active wall with a moment root on the unit circle");
    return best;
}

double density_at(const OneCutCurve& curve, double x) {
    const double tol = 1e-12 * (curve.a - curve.b);
    if (x < curve.b - tol || x > curve.a + tol)
        throw OutOfSupport("density_at: x = " + std::to_string(x) + " outside ["
                           + std::to_string(curve.b) + ", " + std::to_string(curve.a) + "]");
    x = std::clamp(x, curve.b, curve.a);
    const double m = curve.M_at(cplx(x)).real();
    if (x == curve.a)
        return m == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    const double ratio = (x - curve.b) / (curve.a - x);
    return -curve.branch_sign * m * std::sqrt(ratio) / (2.0 * std::numbers::pi);
}

cplx w1_00_at(const OneCutCurve& curve, cplx z) { return curve.w1_at(z); }

double support_mass(const OneCutCurve& curve) {
    // int rho dx = -(gamma/pi) int_0^pi M(alpha + 2 gamma cos t)(1 + cos t) dt:
    // a trigonometric polynomial, so the trapezoid rule is spectrally exact
    const int n = 1024;
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double theta = std::numbers::pi * (i + 0.5) / n;
        const double x = curve.alpha + 2.0 * curve.gamma * std::cos(theta);
        s += curve.M_at(cplx(x)).real() * (1.0 + std::cos(theta));
    }
    return -curve.branch_sign * curve.gamma * s / n;
}

CurveReport curve_report(const OneCutCurve& curve) {
    CurveReport rep;
    rep.a = curve.a;
    rep.b = curve.b;
    rep.alpha = curve.alpha;
    rep.gamma = curve.gamma;
    rep.r = curve.r;
    rep.t = curve.pot.t;
    rep.m_coeffs = curve.m_x;
    rep.roots_x = curve.moment_roots_x;
    rep.roots_s = curve.moment_roots_s;
    rep.M_a = curve.M_at(cplx(curve.a)).real();
    rep.M_b = curve.M_at(cplx(curve.b)).real();
    rep.Mp_a = curve.Mp_at(cplx(curve.a)).real();
    rep.Mp_b = curve.Mp_at(cplx(curve.b)).real();
    for (int p = 0; p < 4; ++p) {
        rep.ma[p] = curve.m_a(p);
        rep.mb[p] = curve.m_b(p);
    }
    return rep;
}

} // namespace hardwall
