#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace hardwall {

using cplx = std::complex<double>;

// Truncated Laurent expansion around a point of the z-plane.  Coefficients
// cover powers order_min .. order_min + coeffs.size() - 1; nothing beyond
// trunc is ever claimed (coeff() throws TruncationTooShort there).
struct LocalSeries {
    cplx center{0.0, 0.0};
    int order_min = 0;
    std::vector<cplx> coeffs;
    int trunc = -1;

    int order_max() const { return order_min + static_cast<int>(coeffs.size()) - 1; }

    // coefficient of (z - center)^power; 0 if inside the reliable window but
    // not stored, TruncationTooShort beyond it
    cplx coeff(int power) const;
    cplx residue() const;  // alias for coeff(-1), certified window required

    cplx eval(cplx z) const;

    LocalSeries derivative() const;
    // antiderivative; a nonzero 1/(z-center) term has no Laurent primitive
    LocalSeries integrate() const;  // throws LogTermRequired
    // 1/f, with as many terms as the input window certifies
    LocalSeries reciprocal() const;  // throws DivisionByZeroSeries
    // Taylor re-expansion around new_center (converges for
    // |z - new_center| < |new_center - center|), powers 0 .. n_powers-1
    LocalSeries recenter(cplx new_center, int n_powers) const;

    void trim(double tol);  // drop leading/trailing coefficients below tol
};

// same-center arithmetic; throws DomainError on center mismatch
LocalSeries add(const LocalSeries& f, const LocalSeries& g);
LocalSeries mul(const LocalSeries& f, const LocalSeries& g);
LocalSeries div(const LocalSeries& f, const LocalSeries& g);

// coefficient of power -1; TruncationTooShort unless the window certifies it
cplx residue_from_series(const LocalSeries& f);

// Sum of principal parts at distinct poles plus an optional entire
// (polynomial-in-z) part: the canonical storage of one-variable correlators.
struct PoleSum {
    struct Pole {
        cplx position;
        std::vector<cplx> part;  // part[m] = coefficient of (z - position)^{-(m+1)}
    };
    std::vector<Pole> poles;
    std::vector<cplx> entire;  // polynomial coefficients in z (power 0, 1, ...)

    // coefficient of (z - pole)^{-order}, order >= 1; merges positions within
    // matching tolerance
    void add_term(cplx pole, int order, cplx coefficient);
    void merge(const PoleSum& other, cplx scale = 1.0);

    cplx eval(cplx z) const;        // throws PoleHit on top of a pole
    cplx eval_derivative(cplx z) const;

    cplx residue_at(cplx pole) const;  // 0 if no pole there
    cplx residue_sum() const;          // = -residue at infinity when entire is empty

    // exact Laurent window at any center: the principal part there (if any)
    // plus the binomially re-expanded contributions of every other term,
    // powers up to max_power
    LocalSeries local_at(cplx center, int max_power) const;

    void trim(double tol = 1e-13);
    bool empty() const { return poles.empty() && entire.empty(); }
};

// Laurent coefficients c_{order_lo} .. c_{order_hi} of f around center from
// m_fft samples on the circle |z - center| = rho (half-offset nodes, so the
// real axis is never sampled).  f must be analytic in an annulus containing
// the circle.
std::vector<cplx> circle_coefficients(const std::function<cplx(cplx)>& f, cplx center,
                                      double rho, int order_lo, int order_hi, int m_fft);

// Shrink a trial radius until the sampling circle stays clear of every listed
// singularity (relative clearance 7%, geometric backoff).
double guard_rho(double rho, cplx center, const std::vector<cplx>& singularities);

// (1/2 pi i) contour integral of f on |z - pole| = radius by the trapezoidal
// rule, doubling nodes from 16 until two refinements agree to 1e-12 (absolute
// or relative); throws NoConvergence past 2^14 nodes.
cplx residue_quadrature(const std::function<cplx(cplx)>& f, cplx pole, double radius);

} // namespace hardwall
