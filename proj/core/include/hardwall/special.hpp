#pragma once

namespace hardwall::special {

// zeta'(-1) = 1/12 - ln A  (A the Glaisher-Kinkelin constant)
inline constexpr double zeta_prime_m1 = -0.16542114370045092921;
inline constexpr double euler_gamma   = 0.57721566490153286061;

// log Gamma / log Barnes G for real positive arguments.  ln_barnes_g uses the
// Voros asymptotic series at shifted argument >= 30 plus downward recursion
// ln G(z) = ln G(z+1) - ln Gamma(z).
double ln_gamma(double x);     // throws DomainError for x <= 0
double ln_barnes_g(double x);  // throws DomainError for x <= 0

// Finite part kappa_beta of the Sum ln Gamma(1 + j beta) asymptotics.
//
// Integral form, valid for every beta > 0:
//   kappa = ln(2 pi)/4 + beta (1/12 - zeta'(-1)) + gamma_E / (12 beta)
//         + int_0^inf [6 s coth(s/2) - 12 - s^2] / [12 s^2 (e^{beta s} - 1)] ds
// Rational closed form for beta = p/q in lowest terms, built from Barnes G
// values at the rationals r/q + m/p.
double kappa_integral(double beta);       // throws QuadratureFailure
double kappa_rational(int p, int q);      // throws DomainError

// sum_{j=1}^N ln Gamma(1 + j beta)
double ln_gamma_sum(int N, double beta);

// Selberg block:
//   I_{N,beta}(t) = (2 pi)^{N/2} (t/(N beta))^{beta N^2/2 - (beta-1) N/2}
//                   prod_j Gamma(1 + j beta) / Gamma(1 + beta)^N
// and the t-free normalization constant C_{N,beta} of the cumulative law,
// both as exact finite-N logs.
double ln_I_exact(int N, double beta, double t);
double ln_C_exact(int N, double beta);

// shift = ln C - ln I, exact, and its large-N closed asymptotic
//   beta N^2 (3/4 - ln t / 2) + N (beta - 1)(-1/2 + ln 2pi + ln t / 2)
//   + ln N (beta + 1/beta - 3)/12 + (5 - 2(beta + 1/beta))/6 ln 2
//   - ln 2pi / 2 - ln beta / 2 + kappa_beta
double norm_shift(int N, double beta, double t);
double norm_shift_asymptotic(int N, double beta, double t);

// Tracy-Widom left-tail prefactor:
//   ln tau_beta = (17/8 - 25 (beta + 1/beta)/24) ln 2 - ln 2pi / 2 - ln beta / 2 + kappa_beta
double ln_tau(double beta);

struct NormalizationConstants {
    double ln_C;
    double ln_I;
    double shift;   // ln_C - ln_I
    double kappa;
    int N;
    double beta;
    double t;
};
NormalizationConstants normalization(int N, double beta, double t);

} // namespace hardwall::special
