#include "hardwall/laurent.hpp"
#include "hardwall/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace hardwall {

namespace {
constexpr double pole_match_tol = 1e-10;
std::string fmt_cplx(cplx z) {
    return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}
}

cplx LocalSeries::coeff(int power) const {
    if (power > trunc)
        throw TruncationTooShort("LocalSeries::coeff: power " + std::to_string(power)
                                 + " beyond reliable window (trunc = " + std::to_string(trunc) + ")");
    const int i = power - order_min;
    if (i < 0 || i >= static_cast<int>(coeffs.size()))
        return 0.0;
    return coeffs[i];
}

cplx LocalSeries::residue() const { return coeff(-1); }

cplx LocalSeries::eval(cplx z) const {
    const cplx u = z - center;
    cplx v = 0.0;
    // Horner over the stored window, then shift by u^{order_min}
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        v = v * u + *it;
    if (order_min == 0)
        return v;
    return v * std::pow(u, order_min);
}

LocalSeries LocalSeries::derivative() const {
    LocalSeries d;
    d.center = center;
    d.order_min = order_min - 1;
    d.trunc = trunc - 1;
    d.coeffs.resize(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        d.coeffs[i] = coeffs[i] * double(order_min + static_cast<int>(i));
    return d;
}

LocalSeries LocalSeries::integrate() const {
    if (std::abs(coeff(-1)) != 0.0)
        throw LogTermRequired("LocalSeries::integrate: residue "
                              + fmt_cplx(coeff(-1)) + " has no Laurent primitive");
    LocalSeries p;
    p.center = center;
    p.order_min = order_min + 1;
    p.trunc = trunc + 1;
    p.coeffs.resize(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const int power = order_min + static_cast<int>(i);
        p.coeffs[i] = (power == -1) ? 0.0 : coeffs[i] / double(power + 1);
    }
    return p;
}

LocalSeries LocalSeries::reciprocal() const {
    // locate the true leading coefficient
    int lead = -1;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0.0) {
            lead = static_cast<int>(i);
            break;
        }
    if (lead < 0)
        throw DivisionByZeroSeries("LocalSeries::reciprocal: identically zero series");
    const int L = order_min + lead;                 // leading power of f
    const int n_terms = trunc - L + 1;              // certified coefficients of f past the lead
    if (n_terms <= 0)
        throw TruncationTooShort("LocalSeries::reciprocal: no certified coefficients");
    const cplx a0 = coeffs[lead];
    LocalSeries r;
    r.center = center;
    r.order_min = -L;
    r.trunc = -L + n_terms - 1;
    r.coeffs.resize(n_terms);
    r.coeffs[0] = 1.0 / a0;
    for (int m = 1; m < n_terms; ++m) {
        cplx s = 0.0;
        for (int j = 1; j <= m; ++j) {
            const int i = lead + j;
            const cplx aj = (i < static_cast<int>(coeffs.size())) ? coeffs[i] : cplx(0.0);
            s += aj * r.coeffs[m - j];
        }
        r.coeffs[m] = -s / a0;
    }
    return r;
}

LocalSeries LocalSeries::recenter(cplx new_center, int n_powers) const {
    const cplx delta = new_center - center;
    LocalSeries out;
    out.center = new_center;
    out.order_min = 0;
    out.trunc = n_powers - 1;
    out.coeffs.assign(n_powers, 0.0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const int m = order_min + static_cast<int>(i);
        const cplx c = coeffs[i];
        if (c == 0.0)
            continue;
        if (m >= 0) {
            // (z - center)^m = ((z - new_center) + delta)^m
            if (delta == 0.0) {
                if (m < n_powers)
                    out.coeffs[m] += c;
                continue;
            }
            double binom = 1.0;
            for (int j = 0; j <= std::min(m, n_powers - 1); ++j) {
                out.coeffs[j] += c * binom * std::pow(delta, m - j);
                binom = binom * double(m - j) / double(j + 1);
            }
        } else {
            const int q = -m;
            if (delta == 0.0)
                throw PoleHit("LocalSeries::recenter: pole sits at the new center");
            // (z - center)^{-q} = sum_j C(q+j-1, j) delta^{-q} (-1/delta)^j (z - new_center)^j
            const cplx factor = c / std::pow(delta, q);
            double binom = 1.0;
            cplx ratio = -1.0 / delta;
            cplx powr = 1.0;
            for (int j = 0; j < n_powers; ++j) {
                out.coeffs[j] += factor * binom * powr;
                binom = binom * double(q + j) / double(j + 1);
                powr *= ratio;
            }
        }
    }
    return out;
}

void LocalSeries::trim(double tol) {
    std::size_t lo = 0, hi = coeffs.size();
    while (lo < hi && std::abs(coeffs[lo]) < tol)
        ++lo;
    while (hi > lo && std::abs(coeffs[hi - 1]) < tol)
        --hi;
    order_min += static_cast<int>(lo);
    coeffs.assign(coeffs.begin() + lo, coeffs.begin() + hi);
}

namespace {
void require_same_center(const LocalSeries& f, const LocalSeries& g, const char* op) {
    if (std::abs(f.center - g.center) > 1e-14)
        throw DomainError(std::string(op) + ": series centers differ");
}
}

LocalSeries add(const LocalSeries& f, const LocalSeries& g) {
    require_same_center(f, g, "add");
    LocalSeries s;
    s.center = f.center;
    s.order_min = std::min(f.order_min, g.order_min);
    s.trunc = std::min(f.trunc, g.trunc);
    const int hi = std::min(std::max(f.order_max(), g.order_max()), s.trunc);
    if (hi >= s.order_min) {
        s.coeffs.assign(hi - s.order_min + 1, 0.0);
        for (int p = s.order_min; p <= hi; ++p) {
            cplx v = 0.0;
            if (p >= f.order_min && p <= std::min(f.order_max(), f.trunc))
                v += f.coeffs[p - f.order_min];
            if (p >= g.order_min && p <= std::min(g.order_max(), g.trunc))
                v += g.coeffs[p - g.order_min];
            s.coeffs[p - s.order_min] = v;
        }
    }
    return s;
}

LocalSeries mul(const LocalSeries& f, const LocalSeries& g) {
    require_same_center(f, g, "mul");
    LocalSeries s;
    s.center = f.center;
    s.order_min = f.order_min + g.order_min;
    // a coefficient of the product is reliable while every contributing pair is
    s.trunc = std::min(f.trunc + g.order_min, g.trunc + f.order_min);
    const int n = std::min(static_cast<int>(f.coeffs.size() + g.coeffs.size()) - 1,
                           s.trunc - s.order_min + 1);
    if (n > 0) {
        s.coeffs.assign(n, 0.0);
        for (std::size_t i = 0; i < f.coeffs.size(); ++i)
            for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
                const int p = static_cast<int>(i + j);
                if (p < n)
                    s.coeffs[p] += f.coeffs[i] * g.coeffs[j];
            }
    }
    return s;
}

LocalSeries div(const LocalSeries& f, const LocalSeries& g) { return mul(f, g.reciprocal()); }

cplx residue_from_series(const LocalSeries& f) {
    if (f.trunc < -1)
        throw TruncationTooShort("residue_from_series: window does not certify power -1");
    return f.coeff(-1);
}

void PoleSum::add_term(cplx pole, int order, cplx coefficient) {
    if (order < 1)
        throw DomainError("PoleSum::add_term: order must be >= 1");
    for (auto& p : poles)
        if (std::abs(p.position - pole) < pole_match_tol) {
            if (static_cast<int>(p.part.size()) < order)
                p.part.resize(order, 0.0);
            p.part[order - 1] += coefficient;
            return;
        }
    Pole p;
    p.position = pole;
    p.part.assign(order, 0.0);
    p.part[order - 1] = coefficient;
    poles.push_back(std::move(p));
}

void PoleSum::merge(const PoleSum& other, cplx scale) {
    for (const auto& p : other.poles)
        for (std::size_t m = 0; m < p.part.size(); ++m)
            if (p.part[m] != 0.0)
                add_term(p.position, static_cast<int>(m) + 1, scale * p.part[m]);
    if (!other.entire.empty()) {
        if (entire.size() < other.entire.size())
            entire.resize(other.entire.size(), 0.0);
        for (std::size_t i = 0; i < other.entire.size(); ++i)
            entire[i] += scale * other.entire[i];
    }
}

cplx PoleSum::eval(cplx z) const {
    cplx v = 0.0;
    for (const auto& p : poles) {
        const cplx u = z - p.position;
        if (std::abs(u) < 1e-13)
            throw PoleHit("PoleSum::eval at pole " + fmt_cplx(p.position));
        cplx s = 0.0;
        const cplx inv = 1.0 / u;
        for (auto it = p.part.rbegin(); it != p.part.rend(); ++it)
            s = (s + *it) * inv;
        v += s;
    }
    if (!entire.empty()) {
        cplx s = 0.0;
        for (auto it = entire.rbegin(); it != entire.rend(); ++it)
            s = s * z + *it;
        v += s;
    }
    return v;
}

cplx PoleSum::eval_derivative(cplx z) const {
    cplx v = 0.0;
    for (const auto& p : poles) {
        const cplx u = z - p.position;
        if (std::abs(u) < 1e-13)
            throw PoleHit("PoleSum::eval_derivative at pole " + fmt_cplx(p.position));
        cplx upow = u * u;  // (z-p)^{m+2} with m = 0 first
        for (std::size_t m = 0; m < p.part.size(); ++m) {
            v -= double(m + 1) * p.part[m] / upow;
            upow *= u;
        }
    }
    for (std::size_t i = 1; i < entire.size(); ++i)
        v += double(i) * entire[i] * std::pow(z, static_cast<int>(i) - 1);
    return v;
}

cplx PoleSum::residue_at(cplx pole) const {
    for (const auto& p : poles)
        if (std::abs(p.position - pole) < pole_match_tol)
            return p.part.empty() ? cplx(0.0) : p.part[0];
    return 0.0;
}

cplx PoleSum::residue_sum() const {
    cplx s = 0.0;
    for (const auto& p : poles)
        if (!p.part.empty())
            s += p.part[0];
    return s;
}

LocalSeries PoleSum::local_at(cplx center, int max_power) const {
    int q_here = 0;
    for (const auto& p : poles)
        if (std::abs(p.position - center) < pole_match_tol)
            q_here = static_cast<int>(p.part.size());
    LocalSeries s;
    s.center = center;
    s.order_min = -q_here;
    s.trunc = max_power;
    s.coeffs.assign(max_power + q_here + 1, 0.0);
    for (const auto& p : poles) {
        if (std::abs(p.position - center) < pole_match_tol) {
            for (std::size_t m = 0; m < p.part.size(); ++m)
                s.coeffs[q_here - 1 - static_cast<int>(m)] += p.part[m];
            continue;
        }
        const cplx delta = center - p.position;
        for (std::size_t m = 0; m < p.part.size(); ++m) {
            const cplx c = p.part[m];
            if (c == 0.0)
                continue;
            const int q = static_cast<int>(m) + 1;
            // (z-p)^{-q} = sum_j C(q+j-1, j) (-delta)^{-q} (-1/delta)^j (z-center)^j
            cplx factor = c / std::pow(delta, q);
            double binom = 1.0;
            const cplx ratio = -1.0 / delta;
            cplx powr = 1.0;
            for (int j = 0; j <= max_power; ++j) {
                s.coeffs[q_here + j] += factor * binom * powr;
                binom = binom * double(q + j) / double(j + 1);
                powr *= ratio;
            }
        }
    }
    for (std::size_t i = 0; i < entire.size(); ++i) {
        const cplx c = entire[i];
        if (c == 0.0)
            continue;
        const int m = static_cast<int>(i);
        if (center == 0.0) {
            if (m <= max_power)
                s.coeffs[q_here + m] += c;
            continue;
        }
        double binom = 1.0;
        for (int j = 0; j <= std::min(m, max_power); ++j) {
            s.coeffs[q_here + j] += c * binom * std::pow(center, m - j);
            binom = binom * double(m - j) / double(j + 1);
        }
    }
    return s;
}

void PoleSum::trim(double tol) {
    std::vector<Pole> kept;
    for (auto& p : poles) {
        while (!p.part.empty() && std::abs(p.part.back()) < tol)
            p.part.pop_back();
        bool any = false;
        for (auto& c : p.part) {
            if (std::abs(c) < tol)
                c = 0.0;
            else
                any = true;
        }
        if (any)
            kept.push_back(std::move(p));
    }
    poles = std::move(kept);
}

std::vector<cplx> circle_coefficients(const std::function<cplx(cplx)>& f, cplx center,
                                      double rho, int order_lo, int order_hi, int m_fft) {
    if (!(rho > 0.0) || order_hi < order_lo)
        throw DomainError("circle_coefficients: bad radius or order window");
    const double step = 2.0 * std::numbers::pi / m_fft;
    std::vector<cplx> vals(m_fft);
    std::vector<double> theta(m_fft);
    for (int j = 0; j < m_fft; ++j) {
        theta[j] = step * (j + 0.5);  // half-offset: never on the real axis
        vals[j] = f(center + rho * std::polar(1.0, theta[j]));
    }
    std::vector<cplx> out(order_hi - order_lo + 1);
    for (int m = order_lo; m <= order_hi; ++m) {
        cplx s = 0.0;
        for (int j = 0; j < m_fft; ++j)
            s += vals[j] * std::polar(1.0, -m * theta[j]);
        out[m - order_lo] = s / double(m_fft) * std::pow(rho, -m);
    }
    return out;
}

double guard_rho(double rho, cplx center, const std::vector<cplx>& singularities) {
    bool clear = false;
    while (!clear) {
        clear = true;
        for (const cplx& s : singularities) {
            const double d = std::abs(s - center);
            if (std::abs(d - rho) < 0.07 * rho) {
                rho *= 0.81;
                clear = false;
                break;
            }
        }
    }
    return rho;
}

cplx residue_quadrature(const std::function<cplx(cplx)>& f, cplx pole, double radius) {
    if (!(radius > 0.0))
        throw DomainError("residue_quadrature: radius must be positive");
    auto estimate = [&](int m) {
        cplx s = 0.0;
        const double step = 2.0 * std::numbers::pi / m;
        for (int j = 0; j < m; ++j) {
            const cplx u = radius * std::polar(1.0, step * (j + 0.5));
            s += f(pole + u) * u;
        }
        return s / double(m);
    };
    cplx prev = estimate(16);
    for (int m = 32; m <= (1 << 14); m *= 2) {
        const cplx cur = estimate(m);
        if (std::abs(cur - prev) <= 1e-12 * std::max(1.0, std::abs(cur)))
            return cur;
        prev = cur;
    }
    const cplx cur = estimate(1 << 15);
    throw NoConvergence("residue_quadrature: best value " + fmt_cplx(cur)
                        + ", error estimate " + std::to_string(std::abs(cur - prev)));
}

} // namespace hardwall
