#include <doctest.h>

#include "hardwall/curve.hpp"
#include "hardwall/errors.hpp"
#include "hardwall/recursion.hpp"

#include <cmath>
#include <memory>
#include <random>
#include <vector>

using namespace hardwall;

namespace {

Potential gaussian_pot(double t) { return Potential::gaussian(t); }

std::shared_ptr<ZhukovskyFrame> gaussian_frame(double a, double t) {
    return std::make_shared<ZhukovskyFrame>(solve_curve(gaussian_pot(t), a));
}

bool close(cplx got, cplx want, double tol) {
    return std::abs(got - want) <= tol * std::max(1.0, std::abs(want));
}

// principal-part coefficient of (z - p)^{-m}, 0 when the pole is absent
cplx pp_coeff(const PoleSum& ps, cplx p, int m) {
    for (const auto& pole : ps.poles)
        if (std::abs(pole.position - p) < 1e-9)
            return m <= static_cast<int>(pole.part.size()) ? pole.part[m - 1] : cplx(0.0);
    return cplx(0.0);
}

cplx random_z(std::mt19937& rng, const std::vector<cplx>& avoid, double clearance = 0.3) {
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    for (;;) {
        cplx z(d(rng), d(rng));
        if (std::abs(z) < 0.2) continue;
        bool ok = true;
        for (cplx q : avoid)
            if (std::abs(z - q) < clearance) ok = false;
        if (ok) return z;
    }
}

// closed form of the one-loop one-point term
PoleSum w110_explicit(const OneCutCurve& c) {
    const double ga = c.gamma;
    const cplx Ma = c.M_at(cplx(c.a));
    const cplx Mb = c.M_at(cplx(c.b));
    const cplx Mpb = c.Mp_at(cplx(c.b));
    PoleSum w;
    w.add_term(cplx(1.0), 2, 1.0 / (16.0 * ga * Ma));
    w.add_term(cplx(-1.0), 4, 1.0 / (4.0 * ga * Mb));
    w.add_term(cplx(-1.0), 3, -1.0 / (4.0 * ga * Mb));
    w.add_term(cplx(-1.0), 2, (-Mb + 4.0 * ga * Mpb) / (16.0 * ga * Mb * Mb));
    return w;
}

// two-hbar term of the one-point correlator for a curve with a single moment
// root and linear M.  The coefficients are the exact partial fractions of the
// assembled numerator, computed once by computer algebra over the rationals
// in s; every simple pole cancels identically in this family, and the whole
// sum carries the prefactor 1/(gamma^2 M'(x_1)).
PoleSum w102_explicit(const OneCutCurve& c) {
    const double ga = c.gamma;
    const cplx s = c.moment_roots_s[0];
    const cplx Mp = c.Mp_at(c.moment_roots_x[0]);
    const cplx pref = 1.0 / (ga * ga * Mp);
    const cplx sm = s - 1.0, sp = s + 1.0;
    auto sq = [](cplx v) { return v * v; };
    auto cube = [](cplx v) { return v * v * v; };

    PoleSum w;
    w.add_term(cplx(1.0), 2, pref * 3.0 * s / (16.0 * sq(sm)));
    w.add_term(cplx(-1.0), 4, -pref * 5.0 * s / (4.0 * sq(sp)));
    w.add_term(cplx(-1.0), 3, pref * s * (5.0 * s - 3.0) / (4.0 * cube(sp)));
    w.add_term(cplx(-1.0), 2,
               -pref * s * (3.0 * s * s - 14.0 * s + 3.0) / (16.0 * sq(sq(sp))));
    w.add_term(1.0 / s, 3, -pref * 2.0 / (sm * cube(sp)));
    w.add_term(1.0 / s, 2,
               -pref * 2.0 * s * (s * s - s + 1.0) / (sq(sm) * sq(sq(sp))));
    return w;
}

// independent route to dF^{g,k}/da: half the residue at z = 1 of the
// one-point loop-equation combination
double dA_residue_oracle(Engine& eng, const OneCutCurve& cur, int g, int k) {
    const PoleSum& om1 = eng.omega({1, g, k});
    auto f = [&](cplx z) {
        cplx v = -2.0 * cur.y_at(z) * om1.eval(z);
        for (int g1 = 0; g1 <= g; ++g1)
            for (int k1 = 0; k1 <= k; ++k1) {
                const int g2 = g - g1, k2 = k - k1;
                if ((g1 == 0 && k1 == 0) || (g2 == 0 && k2 == 0)) continue;
                v += eng.omega({1, g1, k1}).eval(z) * eng.omega({1, g2, k2}).eval(z) /
                     cur.xp(z);
            }
        if (g >= 1) v += eng.omega({2, g - 1, k}, {z}).eval(z) / cur.xp(z);
        return v;
    };
    return 0.5 * circle_coefficients(f, cplx(1.0), 0.15, -1, -1, 96)[0].real();
}

} // namespace

TEST_CASE("recursion: pair correlator closed forms and frame conventions") {
    // t chosen so gamma = 1: the x-frame values below become simple rationals
    const OneCutCurve cur = solve_curve(gaussian_pot(3.0), 0.0);
    REQUIRE(cur.gamma == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(close(omega_2_00(cur, cplx(2.0), cplx(3.0)), cplx(3.0 / 50.0), 1e-13));
    CHECK(close(omega_2_00(cur, cplx(2.0), cplx(2.0)), cplx(16.0 / 81.0), 1e-13));

    std::mt19937 rng(913);
    const std::vector<cplx> avoid = {cplx(1.0), cplx(-1.0), cplx(0.0)};
    for (int i = 0; i < 20; ++i) {
        const cplx z1 = random_z(rng, avoid);
        const cplx z2 = random_z(rng, avoid);
        if (std::abs(z1 * z2 - 1.0) < 0.1 || std::abs(z1 * z2) < 0.1) continue;
        // symmetry
        CHECK(close(omega_2_00(cur, z1, z2), omega_2_00(cur, z2, z1), 1e-13));
        // linearized loop equation for the pair correlator
        const cplx lhs = omega_2_00(cur, z1, z2) + omega_2_00(cur, 1.0 / z1, z2);
        const cplx dxx = cur.x_of(z1) - cur.x_of(z2);
        CHECK(close(lhs, -1.0 / (dxx * dxx), 1e-12));
        // explicit partial fractions agree with the direct value
        const PoleSum ps = omega_2_00_pole_sum(cur, z2);
        CHECK(ps.entire.empty());
        CHECK(close(ps.eval(z1), omega_2_00(cur, z1, z2), 1e-12));
    }

    CHECK_THROWS_AS((void)omega_2_00(cur, cplx(0.5), cplx(2.0)), PoleHit);
    CHECK_THROWS_AS((void)omega_2_00(cur, cplx(1.0), cplx(2.5)), PoleHit);
    CHECK_THROWS_AS((void)omega_2_00(cur, cplx(2.5), cplx(-1.0)), PoleHit);
    CHECK_THROWS_AS((void)omega_2_00_pole_sum(cur, cplx(1e-14)), PoleHit);

    // engine view: differential normalization is universal in z
    auto fr = std::make_shared<ZhukovskyFrame>(cur);
    Engine eng(fr);
    const cplx w = cplx(1.7, 0.6);
    const PoleSum& pair = eng.omega({2, 0, 0}, {w});
    for (int i = 0; i < 5; ++i) {
        const cplx z = random_z(rng, {1.0 / w});
        const cplx d = z * w - 1.0;
        CHECK(close(pair.eval(z), 1.0 / (d * d), 1e-13));
        CHECK(close(pair.eval(z),
                    cur.xp(z) * cur.xp(w) * omega_2_00(cur, z, w), 1e-12));
    }
}

TEST_CASE("recursion: one-point hbar correction") {
    const OneCutCurve cur = solve_curve(gaussian_pot(0.5), 0.0);
    const cplx s1 = cur.moment_roots_s[0];
    REQUIRE(s1.real() == doctest::Approx(2.0 + std::sqrt(3.0)).epsilon(1e-12));

    const PoleSum om = omega_1_01(cur);
    CHECK(close(om.residue_at(cplx(1.0)), cplx(0.5), 1e-14));
    CHECK(close(om.residue_at(cplx(-1.0)), cplx(-0.5), 1e-14));
    CHECK(close(om.residue_at(1.0 / s1), cplx(-1.0), 1e-14));
    CHECK(close(om.residue_at(cplx(0.0)), cplx(1.0), 1e-14));
    CHECK(std::abs(om.residue_sum()) < 1e-14);
    CHECK(close(om.eval(cplx(2.0)), cplx(5.0 / 6.0 - 1.0 / std::sqrt(3.0)), 1e-13));

    auto fr = std::make_shared<ZhukovskyFrame>(cur);
    Engine eng(fr);
    std::mt19937 rng(77);
    const std::vector<cplx> avoid = {cplx(1.0), cplx(-1.0), 1.0 / s1, s1};
    for (int i = 0; i < 10; ++i) {
        const cplx z = random_z(rng, avoid);
        CHECK(close(eng.omega({1, 0, 1}).eval(z), om.eval(z), 1e-14));
    }

    // the wall-free saddle carries a moment root on the unit circle
    CHECK_THROWS_AS((void)omega_1_01(solve_unconstrained(gaussian_pot(0.5))), CriticalCurve);
    CHECK_THROWS_AS(ZhukovskyFrame(solve_unconstrained(gaussian_pot(0.5))), CriticalCurve);
}

TEST_CASE("recursion: loop-equation numerator assembly") {
    const OneCutCurve gamma1 = solve_curve(gaussian_pot(3.0), 0.0);
    auto fr = std::make_shared<ZhukovskyFrame>(gamma1);
    Engine eng(fr);

    // diagonal of the pair correlator is universal in the z-frame
    CHECK(close(eng.E_at({1, 1, 0}, cplx(2.0)), cplx(1.0 / 9.0), 1e-13));

    LocalSeries reg = eng.assemble_E({1, 1, 0}, cplx(2.0), {}, 4);
    CHECK(close(reg.coeff(0), cplx(1.0 / 9.0), 1e-12));
    CHECK(close(reg.coeff(1), cplx(-8.0 / 27.0), 1e-11));  // -4 z/(z^2-1)^3 at z = 2

    LocalSeries sing = eng.assemble_E({1, 1, 0}, cplx(1.0), {}, 4);
    CHECK(close(sing.coeff(-2), cplx(0.25), 1e-12));
    CHECK(close(sing.coeff(-1), cplx(-0.25), 1e-12));

    // the hbar ladder bottoms out on the resolvent derivative
    std::mt19937 rng(5150);
    for (int i = 0; i < 10; ++i) {
        const cplx z = random_z(rng, {cplx(1.0), cplx(-1.0)});
        CHECK(close(eng.E_at({1, 0, 1}, z), gamma1.xp(z) * gamma1.w1p_at(z), 1e-13));
    }

    CHECK_THROWS_AS((void)eng.E_at({1, 0, 0}, cplx(2.0)), MissingPrerequisite);
    CHECK_THROWS_AS((void)eng.E_at({2, 0, 0}, cplx(2.0), {cplx(0.5, 0.5)}),
                    MissingPrerequisite);
    CHECK_THROWS_AS((void)eng.assemble_E({1, 0, 0}, cplx(2.0)), MissingPrerequisite);

    CHECK_THROWS_AS((void)eng.omega({1, 0, 0}), UnstableKey);
    CHECK_THROWS_AS((void)eng.omega({1, 3, 1}), UnimplementedOrder);
    CHECK_THROWS_AS((void)eng.omega({4, 0, 0},
                                    {cplx(2.0), cplx(3.0), cplx(4.0)}),
                    UnimplementedOrder);
    CHECK_THROWS_AS((void)eng.omega({2, 1, 0}), DomainError);
    CHECK_THROWS_AS((void)eng.omega({1, -1, 0}), DomainError);
}

TEST_CASE("recursion: one-loop correction matches its closed form") {
    const OneCutCurve cur = solve_curve(gaussian_pot(0.5), 0.0);
    auto fr = std::make_shared<ZhukovskyFrame>(cur);
    Engine eng(fr);

    const PoleSum& om = eng.omega({1, 1, 0});
    const PoleSum ref = w110_explicit(cur);

    std::mt19937 rng(2026);
    std::vector<cplx> avoid = {cplx(1.0), cplx(-1.0), cplx(0.0)};
    for (cplx s : cur.moment_roots_s) {
        avoid.push_back(s);
        avoid.push_back(1.0 / s);
    }
    for (int i = 0; i < 20; ++i) {
        const cplx z = random_z(rng, avoid);
        CHECK(close(om.eval(z), ref.eval(z), 1e-10));
    }

    // principal parts, term by term
    CHECK(close(pp_coeff(om, cplx(1.0), 2), pp_coeff(ref, cplx(1.0), 2), 1e-11));
    CHECK(close(pp_coeff(om, cplx(-1.0), 4), pp_coeff(ref, cplx(-1.0), 4), 1e-11));
    CHECK(close(pp_coeff(om, cplx(-1.0), 3), pp_coeff(ref, cplx(-1.0), 3), 1e-11));
    CHECK(close(pp_coeff(om, cplx(-1.0), 2), pp_coeff(ref, cplx(-1.0), 2), 1e-11));

    // no remainder pole and no branch residues at this order
    const cplx s1 = cur.moment_roots_s[0];
    for (int m = 1; m <= 3; ++m) CHECK(std::abs(pp_coeff(om, 1.0 / s1, m)) < 1e-11);
    CHECK(std::abs(pp_coeff(om, cplx(1.0), 1)) < 1e-11);
    CHECK(std::abs(pp_coeff(om, cplx(-1.0), 1)) < 1e-11);

    // deck symmetry of the hbar-free sector
    for (int i = 0; i < 8; ++i) {
        const cplx z = random_z(rng, avoid);
        CHECK(close(om.eval(1.0 / z), z * z * om.eval(z), 1e-11));
    }

    // quadratic decay at infinity
    const cplx big = om.eval(cplx(1e6)) * 1e12;
    const cplx bigger = om.eval(cplx(1e7)) * 1e14;
    CHECK(close(big, bigger, 1e-5));
}

TEST_CASE("recursion: two-hbar correction matches its closed form") {
    const OneCutCurve cur = solve_curve(gaussian_pot(0.5), 0.0);
    auto fr = std::make_shared<ZhukovskyFrame>(cur);
    Engine eng(fr);

    const PoleSum& om = eng.omega({1, 0, 2});
    const PoleSum ref = w102_explicit(cur);
    const cplx s1 = cur.moment_roots_s[0];

    std::mt19937 rng(424242);
    std::vector<cplx> avoid = {cplx(1.0), cplx(-1.0), cplx(0.0), s1, 1.0 / s1};
    for (int i = 0; i < 20; ++i) {
        const cplx z = random_z(rng, avoid);
        CHECK(close(om.eval(z), ref.eval(z), 1e-8));
    }

    CHECK(close(pp_coeff(om, cplx(1.0), 2), pp_coeff(ref, cplx(1.0), 2), 1e-9));
    CHECK(close(pp_coeff(om, cplx(-1.0), 4), pp_coeff(ref, cplx(-1.0), 4), 1e-9));
    CHECK(close(pp_coeff(om, cplx(-1.0), 3), pp_coeff(ref, cplx(-1.0), 3), 1e-9));
    CHECK(close(pp_coeff(om, cplx(-1.0), 2), pp_coeff(ref, cplx(-1.0), 2), 1e-8));
    CHECK(close(pp_coeff(om, 1.0 / s1, 3), pp_coeff(ref, 1.0 / s1, 3), 1e-8));
    CHECK(close(pp_coeff(om, 1.0 / s1, 2), pp_coeff(ref, 1.0 / s1, 2), 1e-8));

    // every simple pole vanishes here, including the compensating one at z = 0
    for (cplx p : {cplx(1.0), cplx(-1.0), cplx(0.0), 1.0 / s1})
        CHECK(std::abs(pp_coeff(om, p, 1)) < 1e-9);

    const cplx big = om.eval(cplx(1e6)) * 1e12;
    const cplx bigger = om.eval(cplx(1e7)) * 1e14;
    CHECK(close(big, bigger, 1e-5));
}

TEST_CASE("recursion: spectator symmetry of two-point corrections") {
    auto fr = gaussian_frame(0.0, 0.5);
    Engine eng(fr);
    const cplx z1(1.9, 0.4), z2(-1.7, 0.8);

    CHECK(close(eng.omega({2, 0, 1}, {z2}).eval(z1),
                eng.omega({2, 0, 1}, {z1}).eval(z2), 1e-8));
    CHECK(close(eng.omega({2, 1, 0}, {z2}).eval(z1),
                eng.omega({2, 1, 0}, {z1}).eval(z2), 1e-7));
}

TEST_CASE("recursion: branchpoint-only path agrees with the general assembly") {
    auto fr = gaussian_frame(0.0, 0.5);
    Engine eng(fr);
    const cplx s1 = fr->curve().moment_roots_s[0];
    std::mt19937 rng(31);
    const std::vector<cplx> avoid = {cplx(1.0), cplx(-1.0), cplx(0.0), s1, 1.0 / s1};

    for (CorrelatorKey key : {CorrelatorKey{1, 1, 0}, CorrelatorKey{1, 2, 0}}) {
        const PoleSum& fast = eng.omega(key);
        const PoleSum general = eng.omega_general(key);
        for (int i = 0; i < 6; ++i) {
            const cplx z = random_z(rng, avoid);
            CHECK(close(fast.eval(z), general.eval(z), 1e-10));
            // deck symmetry holds at every hbar-free order
            CHECK(close(fast.eval(1.0 / z), z * z * fast.eval(z), 1e-9));
        }
        // no branch residues in the hbar-free sector
        CHECK(std::abs(pp_coeff(fast, cplx(1.0), 1)) < 1e-9);
        CHECK(std::abs(pp_coeff(fast, cplx(-1.0), 1)) < 1e-9);
    }

    // two-point check, active-variable deck symmetry included
    const cplx w(1.6, 0.7);
    const PoleSum& two = eng.omega({2, 1, 0}, {w});
    const PoleSum two_gen = eng.omega_general({2, 1, 0}, {w});
    for (int i = 0; i < 4; ++i) {
        const cplx z = random_z(rng, avoid);
        if (std::abs(z - w) < 0.3 || std::abs(z - 1.0 / w) < 0.3) continue;
        CHECK(close(two.eval(z), two_gen.eval(z), 1e-8));
        CHECK(close(two.eval(1.0 / z), z * z * two.eval(z), 1e-8));
    }
}

TEST_CASE("recursion: remainder data and wall derivatives") {
    const OneCutCurve cur = solve_curve(gaussian_pot(0.5), 0.0);
    auto fr = std::make_shared<ZhukovskyFrame>(cur);
    Engine eng(fr);
    const double ga = cur.gamma, al = cur.alpha, r = cur.r;
    const double s1 = cur.moment_roots_s[0].real();

    RemainderData rd = eng.remainder_coeffs({1, 1, 0});
    REQUIRE(rd.R.size() == 1);  // degree-2 potential: one moment root
    REQUIRE(rd.dA.has_value());
    REQUIRE(rd.c.has_value());
    CHECK(*rd.c == doctest::Approx(-*rd.dA).epsilon(1e-14));

    // remainder form has the deck symmetry of a hbar-free piece
    std::mt19937 rng(8);
    for (int i = 0; i < 6; ++i) {
        const cplx z = random_z(rng, {cplx(s1), cplx(1.0 / s1)});
        CHECK(close(rd.eval(1.0 / z), z * z * rd.eval(z), 1e-12));
    }

    const double da10 = r / (ga * ga) * std::pow(s1, 4) /
                        (std::pow(s1 - 1.0, 4) * std::pow(s1 + 1.0, 4));
    CHECK(*rd.dA == doctest::Approx(da10).epsilon(1e-10));
    CHECK(eng.dA_F(1, 0) == doctest::Approx(da10).epsilon(1e-10));
    CHECK(da10 == doctest::Approx(-ga * ga / (al * (al - 4.0 * ga) * (al - 4.0 * ga)))
                      .epsilon(1e-12));

    // ladder-order derivative: simple closed form from the resolvent data
    CHECK(eng.dA_F(0, 1) == doctest::Approx(-r / (s1 - 1.0)).epsilon(1e-10));

    // two-hbar derivative (sign fixed against finite differences of the
    // closed-form free energy; the alpha prefactor, not the wall residue)
    const double da02 = al / (ga * ga) * s1 * s1 /
                        ((s1 - 1.0) * (s1 - 1.0) * (s1 + 1.0) * (s1 + 1.0)) *
                        ((2.0 * s1 * s1 * s1 - 3.0 * s1 * s1 + 4.0 * s1 - 2.0) /
                         ((s1 - 1.0) * (s1 - 1.0) * (s1 + 1.0) * (s1 + 1.0)));
    CHECK(eng.dA_F(0, 2) == doctest::Approx(da02).epsilon(1e-8));

    // independent residue-at-one representation
    CHECK(dA_residue_oracle(eng, cur, 1, 0) == doctest::Approx(da10).epsilon(1e-7));
    CHECK(dA_residue_oracle(eng, cur, 0, 2) == doctest::Approx(da02).epsilon(1e-7));
    CHECK(dA_residue_oracle(eng, cur, 1, 1) ==
          doctest::Approx(eng.dA_F(1, 1)).epsilon(1e-7));

    CHECK_THROWS_AS((void)eng.dA_F(0, 0), DomainError);
}

TEST_CASE("recursion: blown-up frame and kernels") {
    auto tw = std::make_shared<TwFrame>();
    Engine eng(tw);

    // one-loop term on the blown-up curve
    const PoleSum& om = eng.omega({1, 1, 0});
    for (cplx z : {cplx(0.7, 0.2), cplx(-0.4, 0.9)})
        CHECK(close(om.eval(z), -1.0 / (16.0 * z * z), 1e-9));
    CHECK(close(pp_coeff(om, cplx(0.0), 2), cplx(-1.0 / 16.0), 1e-9));
    CHECK(std::abs(pp_coeff(om, cplx(-1.0), 2)) < 1e-10);

    // initial data of the frame
    const PoleSum& base = eng.omega({1, 0, 1});
    CHECK(close(base.eval(cplx(2.0)), cplx(0.25 - 1.0 / 3.0), 1e-14));

    // remainder exists, but there is no wall weight to contract with
    RemainderData rd = eng.remainder_coeffs({1, 1, 0});
    CHECK(!rd.dA.has_value());
    CHECK_THROWS_AS((void)eng.dA_F(1, 0), DomainError);

    // scaled kernel: value, antisymmetry, pole
    CHECK(close(kernel_K_tw(cplx(9.0), cplx(2.0)), cplx(-1.0 / 120.0), 1e-14));
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> d(0.3, 2.0);
    for (int i = 0; i < 8; ++i) {
        const cplx s0(d(rng), d(rng));
        const cplx s(d(rng), d(rng));
        CHECK(close(kernel_K_tw(s0, -s), -kernel_K_tw(s0, s), 1e-13));
        CHECK(close(kernel_K(*tw, s0, -s), -kernel_K(*tw, s0, s), 1e-13));
    }
    CHECK_THROWS_AS((void)kernel_K_tw(cplx(4.0), cplx(2.0)), PoleHit);

    // finite-curve kernel carries the deck Jacobian instead
    auto fr = gaussian_frame(0.0, 0.5);
    const cplx z0(2.2, 0.3);
    for (int i = 0; i < 8; ++i) {
        const cplx z(d(rng), d(rng));
        CHECK(close(kernel_K(*fr, z0, 1.0 / z), -z * z * kernel_K(*fr, z0, z), 1e-12));
    }
    CHECK_THROWS_AS((void)kernel_K(*fr, cplx(1.5), cplx(1.5)), PoleHit);
    CHECK_THROWS_AS((void)kernel_K(*fr, cplx(2.0), cplx(1.0)), PoleHit);
}

TEST_CASE("recursion: memoization and resolution guards") {
    auto fr = gaussian_frame(0.0, 0.5);
    Engine eng(fr);

    const PoleSum* first = &eng.omega({1, 1, 0});
    CHECK(first == &eng.omega({1, 1, 0}));

    // spectators are snapped to a fixed grid before keying
    const cplx w(1.5, 0.5);
    const PoleSum* pw = &eng.omega({2, 0, 1}, {w});
    CHECK(pw == &eng.omega({2, 0, 1}, {w + cplx(1e-15, -1e-15)}));

    // a window too small for the pole depth is reported, not truncated
    EngineOptions tiny;
    tiny.m_fft = 32;
    tiny.pmax = 4;
    Engine cramped(fr, tiny);
    CHECK_THROWS_AS((void)cramped.omega({1, 0, 2}), TruncationTooShort);

    EngineOptions bad;
    bad.pmax = 40;
    bad.m_fft = 64;
    CHECK_THROWS_AS(Engine(fr, bad), DomainError);
}
