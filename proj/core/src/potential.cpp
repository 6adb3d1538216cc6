#include "hardwall/potential.hpp"
#include "hardwall/errors.hpp"

#include <cmath>

namespace hardwall {

double Potential::V(double x) const
{
    // Horner over t_0 + sum (t_j/j) x^j
    const int d = degree();
    double acc = coeffs[d] / d;
    for (int j = d - 1; j >= 1; --j) acc = acc * x + coeffs[j] / j;
    return acc * x + coeffs[0];
}

double Potential::Vp(double x) const
{
    const int d = degree();
    double acc = coeffs[d];
    for (int j = d - 1; j >= 1; --j) acc = acc * x + coeffs[j];
    return acc;
}

void Potential::validate() const
{
    if (!(t > 0.0)) throw DomainError("potential scale t must be positive");
    if (degree() < 2) throw DomainError("potential degree must be at least 2");
    if (coeffs.back() == 0.0) throw DomainError("leading coefficient t_d vanishes");
}

Potential Potential::gaussian(double t)
{
    return Potential{t, {0.0, 0.0, 1.0}};
}

Potential Potential::quartic(double t, double c4)
{
    return Potential{t, {0.0, 0.0, 0.0, 0.0, c4}};
}

} // namespace hardwall
