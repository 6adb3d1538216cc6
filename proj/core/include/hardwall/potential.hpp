#pragma once
#include <vector>

namespace hardwall {

// Confining polynomial potential
//
//     V(x) = t_0 + sum_{j>=1} (t_j / j) x^j ,    deg V = d >= 2,  t_d != 0,
//
// entering the eigenvalue measure as exp(-(N beta / t) sum_i V(lambda_i)).
// The coefficient convention makes V'(x) = sum_{j>=1} t_j x^{j-1}, which is
// the object the one-cut solver actually consumes.
struct Potential {
    double t = 1.0;               // 't Hooft scale, > 0
    std::vector<double> coeffs;   // t_0 .. t_d

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double td() const { return coeffs.back(); }

    double V(double x) const;
    double Vp(double x) const;

    // throws DomainError unless t > 0, d >= 2, t_d != 0
    void validate() const;

    static Potential gaussian(double t);                 // V = x^2 / 2
    static Potential quartic(double t, double c4 = 1.0); // V = c4 x^4 / 4
};

// Symmetric Zhukovsky coefficients of a polynomial P (given by x-coefficients
// p_0..p_m) evaluated on the circle x(z) = alpha + gamma (z + 1/z):
//
//     P(x(z)) = c_0 + sum_{k>=1} c_k (z^k + z^{-k}).
//
// Templated on the scalar so the curve equations can be re-checked in
// extended precision; only the double instantiation is compiled here.
template <class Real>
std::vector<Real> zhukovsky_symmetric(const std::vector<Real>& poly, Real alpha, Real gamma)
{
    const int m = static_cast<int>(poly.size()) - 1;
    std::vector<Real> acc(1, poly.back());          // Horner from the top coefficient
    for (int j = m - 1; j >= 0; --j) {
        std::vector<Real> next(acc.size() + 1, Real(0));
        // multiply acc by alpha + gamma (z + 1/z) in the symmetric basis
        // e_0 = 1, e_k = z^k + z^{-k}:  (z+1/z) e_0 = e_1, (z+1/z) e_1 = e_2 + 2 e_0,
        // (z+1/z) e_k = e_{k+1} + e_{k-1}.
        for (std::size_t k = 0; k < acc.size(); ++k) {
            next[k] += alpha * acc[k];
            next[k + 1] += gamma * acc[k];
            if (k == 1) next[0] += Real(2) * gamma * acc[k];
            else if (k > 1) next[k - 1] += gamma * acc[k];
        }
        next[0] += poly[j];
        acc = std::move(next);
    }
    acc.resize(static_cast<std::size_t>(m) + 1, Real(0)); // degree-m polynomial: orders 0..m
    return acc;
}

// Coefficients b_k of V'(x(z)) = b_0 + sum b_k (z^k + z^{-k}), k = 0..d-1.
template <class Real>
std::vector<Real> vprime_circle_coefficients(const std::vector<double>& tj, Real alpha, Real gamma)
{
    std::vector<Real> dp; // V' x-coefficients: t_{j+1}
    for (std::size_t j = 1; j < tj.size(); ++j) dp.push_back(Real(tj[j]));
    return zhukovsky_symmetric(dp, alpha, gamma);
}

// Coefficients v_k of V(x(z)) = v_0 + sum v_k (z^k + z^{-k}), k = 0..d.
template <class Real>
std::vector<Real> v_circle_coefficients(const std::vector<double>& tj, Real alpha, Real gamma)
{
    std::vector<Real> p;
    p.push_back(Real(tj[0]));
    for (std::size_t j = 1; j < tj.size(); ++j) p.push_back(Real(tj[j]) / Real(static_cast<double>(j)));
    return zhukovsky_symmetric(p, alpha, gamma);
}

} // namespace hardwall
