#include "hardwall/special.hpp"
#include "hardwall/errors.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace hardwall::special {

namespace {
constexpr double ln_2pi = 1.8378770664093454836;  // ln(2 pi)
constexpr double ln_2 = std::numbers::ln2;
}

double ln_gamma(double x) {
    if (!(x > 0.0))
        throw DomainError("ln_gamma: argument must be positive, got " + std::to_string(x));
    return std::lgamma(x);
}

double ln_barnes_g(double x) {
    if (!(x > 0.0))
        throw DomainError("ln_barnes_g: argument must be positive, got " + std::to_string(x));
    // Push the argument up with G(z+1) = Gamma(z) G(z) until the asymptotic
    // series converges to full double precision (w >= 30 keeps the dropped
    // B_12 tail below 1e-18).
    int m = 0;
    if (x < 31.0)
        m = static_cast<int>(std::ceil(31.0 - x));
    const double w = x + m - 1.0;  // ln G(x + m) = ln G(w + 1)
    const double lw = std::log(w);
    const double w2 = w * w;
    const double w4 = w2 * w2;
    // tail sum_{g>=2} B_2g / (2g (2g-2) w^{2g-2}); the dropped g = 6 term is
    // below 4e-18 at w = 30
    double lng = 0.5 * w2 * lw - 0.75 * w2 + 0.5 * w * ln_2pi - lw / 12.0 + zeta_prime_m1
               - 1.0 / (240.0 * w2) + 1.0 / (1008.0 * w4)
               - 1.0 / (1440.0 * w4 * w2) + 1.0 / (1056.0 * w4 * w4);
    for (int i = 0; i < m; ++i)
        lng -= ln_gamma(x + i);
    return lng;
}

namespace {

// f(s) = (6 s coth(s/2) - 12 - s^2) / (12 s^2 (e^{beta s} - 1)), the
// correction integrand of kappa.  The numerator is 12 sum_{n>=2} B_2n s^2n/(2n)!,
// so for s <= 1 we evaluate the series (B_4..B_20 already reach ~1e-17 there)
// and dodge the catastrophic cancellation of the closed form near 0.
double kappa_integrand(double s, double beta) {
    const double es = std::expm1(beta * s);
    if (std::isinf(es))
        return 0.0;  // numerator is polynomially bounded
    if (s <= 1.0) {
        static const double c[] = {
            -1.0 / 720.0,                           // B_4  / 4!
            1.0 / 30240.0,                          // B_6  / 6!
            -1.0 / 1209600.0,                       // B_8  / 8!
            1.0 / 47900160.0,                       // B_10 / 10!
            (-691.0 / 2730.0) / 479001600.0,        // B_12 / 12!
            (7.0 / 6.0) / 87178291200.0,            // B_14 / 14!
            (-3617.0 / 510.0) / 20922789888000.0,   // B_16 / 16!
            (43867.0 / 798.0) / 6402373705728000.0, // B_18 / 18!
            (-174611.0 / 330.0) / 2432902008176640000.0, // B_20 / 20!
        };
        const double s2 = s * s;
        double num = 0.0;
        for (int n = 8; n >= 0; --n)
            num = num * s2 + c[n];
        num *= s2;  // sum_{n>=2} B_2n s^{2n-2} / (2n)!
        return num / es;
    }
    const double coth = 1.0 / std::tanh(0.5 * s);
    return (6.0 * s * coth - 12.0 - s * s) / (12.0 * s * s * es);
}

} // namespace

double kappa_integral(double beta) {
    if (!(beta > 0.0))
        throw DomainError("kappa_integral: beta must be positive, got " + std::to_string(beta));
    boost::math::quadrature::exp_sinh<double> integrator;
    double error = 0.0, l1 = 0.0;
    double integral;
    try {
        integral = integrator.integrate(
            [beta](double s) { return kappa_integrand(s, beta); },
            1e-12, &error, &l1);
    } catch (const std::exception& e) {
        throw QuadratureFailure(std::string("kappa_integral: ") + e.what());
    }
    if (!std::isfinite(integral) || (l1 > 0.0 && error > 1e-9 * l1))
        throw QuadratureFailure("kappa_integral: quadrature did not converge, error estimate "
                                + std::to_string(error));
    return 0.25 * ln_2pi + beta * (1.0 / 12.0 - zeta_prime_m1)
         + euler_gamma / (12.0 * beta) + integral;
}

double kappa_rational(int p, int q) {
    if (p <= 0 || q <= 0)
        throw DomainError("kappa_rational: p and q must be positive integers");
    const int g = std::gcd(p, q);
    p /= g;
    q /= g;
    const double beta = static_cast<double>(p) / q;
    double barnes_sum = 0.0;
    for (int m = 0; m < p; ++m)
        for (int r = 1; r <= q; ++r)
            barnes_sum += ln_barnes_g(static_cast<double>(r) / q + static_cast<double>(m) / p);
    return (3.0 - beta - 1.0 / beta) / 12.0 * std::log(static_cast<double>(q))
         + 0.25 * (p - q + 2) * ln_2pi + p * q * zeta_prime_m1 - barnes_sum;
}

double ln_gamma_sum(int N, double beta) {
    double s = 0.0;
    for (int j = 1; j <= N; ++j)
        s += ln_gamma(1.0 + j * beta);
    return s;
}

double ln_I_exact(int N, double beta, double t) {
    if (N < 1)
        throw DomainError("ln_I_exact: N must be >= 1");
    if (!(beta > 0.0) || !(t > 0.0))
        throw DomainError("ln_I_exact: beta and t must be positive");
    const double n = N;
    return 0.5 * n * ln_2pi
         + (0.5 * beta * n * n - 0.5 * (beta - 1.0) * n) * std::log(t / (n * beta))
         + ln_gamma_sum(N, beta) - n * ln_gamma(1.0 + beta);
}

double ln_C_exact(int N, double beta) {
    if (N < 1)
        throw DomainError("ln_C_exact: N must be >= 1");
    if (!(beta > 0.0))
        throw DomainError("ln_C_exact: beta must be positive");
    const double n = N;
    const double ln_n = std::log(n);
    return -beta * n * n * ln_n + beta * n * n * (1.5 - std::log(beta))
         + (beta - 1.0) * n * ln_n + (beta - 1.0) * n * (-1.0 + ln_2pi + std::log(beta))
         + (5.0 / 6.0 - (beta + 1.0 / beta) / 3.0) * ln_2
         + 2.0 * ln_gamma_sum(N, beta) - n * ln_gamma(1.0 + beta) - ln_gamma(1.0 + n * beta);
}

double norm_shift(int N, double beta, double t) {
    return ln_C_exact(N, beta) - ln_I_exact(N, beta, t);
}

double norm_shift_asymptotic(int N, double beta, double t) {
    const double n = N;
    const double bi = beta + 1.0 / beta;
    return beta * n * n * (0.75 - 0.5 * std::log(t))
         + n * (beta - 1.0) * (-0.5 + ln_2pi + 0.5 * std::log(t))
         + std::log(n) * (bi - 3.0) / 12.0
         + (5.0 - 2.0 * bi) / 6.0 * ln_2
         - 0.5 * ln_2pi - 0.5 * std::log(beta) + kappa_integral(beta);
}

double ln_tau(double beta) {
    const double bi = beta + 1.0 / beta;
    return (17.0 / 8.0 - 25.0 * bi / 24.0) * ln_2
         - 0.5 * ln_2pi - 0.5 * std::log(beta) + kappa_integral(beta);
}

NormalizationConstants normalization(int N, double beta, double t) {
    NormalizationConstants c;
    c.ln_C = ln_C_exact(N, beta);
    c.ln_I = ln_I_exact(N, beta, t);
    c.shift = c.ln_C - c.ln_I;
    c.kappa = kappa_integral(beta);
    c.N = N;
    c.beta = beta;
    c.t = t;
    return c;
}

} // namespace hardwall::special
