#include "hardwall/recursion.hpp"

#include "hardwall/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace hardwall {

namespace {

constexpr double kDedupTol = 1e-12;
constexpr double kTrimTol = 1e-13;

void push_unique(std::vector<cplx>& pts, cplx q) {
    for (cplx p : pts)
        if (std::abs(p - q) < kDedupTol) return;
    pts.push_back(q);
}

double min_dist(cplx c, const std::vector<cplx>& pts) {
    double d = std::numeric_limits<double>::infinity();
    for (cplx q : pts) {
        double dd = std::abs(c - q);
        if (dd > kDedupTol) d = std::min(d, dd);
    }
    return d;
}

// A principal part that fills the whole extraction window with a coefficient
// of full size was probably cut off.
void check_window(const PoleSum& ps, int pmax_used) {
    for (const auto& p : ps.poles) {
        if (static_cast<int>(p.part.size()) < pmax_used) continue;
        double big = 0.0;
        for (cplx c : p.part) big = std::max(big, std::abs(c));
        if (std::abs(p.part.back()) > 1e-6 * big)
            throw TruncationTooShort(
                "recursion: a principal part fills the whole extraction window; "
                "raise pmax in EngineOptions");
    }
}

} // namespace

cplx RemainderData::eval(cplx z) const {
    cplx tot = 0.0;
    for (std::size_t j = 0; j < R.size(); ++j)
        tot += R[j] * (1.0 / (z - s_img[j]) - 1.0 / (z - s[j]));
    return tot;
}

// ---------------------------------------------------------------------------
// frames

ZhukovskyFrame::ZhukovskyFrame(OneCutCurve curve) : cur_(std::move(curve)) {
    cur_.require_noncritical();
    // A wall-free curve passes the check above but carries a moment root on
    // the unit circle; the recursion degenerates there as well.
    if (cur_.near_critical())
        throw CriticalCurve(
            "recursion frame: a moment-root preimage sits on the unit circle; "
            "use the blown-up frame for the touching edge");
}

cplx ZhukovskyFrame::w2(cplx z, cplx w) const {
    cplx d = z * w - 1.0;
    return 1.0 / (d * d);
}

cplx ZhukovskyFrame::w2_dz(cplx z, cplx w) const {
    cplx d = z * w - 1.0;
    return -2.0 * w / (d * d * d);
}

PoleSum ZhukovskyFrame::w2_pole(cplx w) const {
    // 1/(z w - 1)^2 = (1/w^2) / (z - 1/w)^2
    PoleSum ps;
    ps.add_term(1.0 / w, 2, 1.0 / (w * w));
    return ps;
}

PoleSum ZhukovskyFrame::w1_01() const { return omega_1_01(cur_); }

cplx ZhukovskyFrame::dw1_00(cplx z) const { return cur_.xp(z) * cur_.w1p_at(z); }

PoleSum TwFrame::w2_pole(cplx w) const {
    PoleSum ps;
    ps.add_term(-w, 2, 1.0);
    return ps;
}

PoleSum TwFrame::w1_01() const {
    PoleSum ps;
    ps.add_term(cplx(0.0), 1, 0.5);
    ps.add_term(cplx(-1.0), 1, -1.0);
    return ps;
}

cplx TwFrame::dw1_00(cplx) const {
    throw DomainError("the blown-up frame carries no leading resolvent");
}

// ---------------------------------------------------------------------------
// engine

Engine::Engine(std::shared_ptr<const CurveFrame> frame, EngineOptions opt)
    : frame_(std::move(frame)), opt_(opt) {
    if (!frame_) throw DomainError("recursion engine needs a curve frame");
    if (opt_.m_fft < 16 || opt_.m_fft_inner < 16 || opt_.pmax < 2 || opt_.pmax_inner < 2)
        throw DomainError("engine resolution options out of range");
    if (opt_.pmax >= opt_.m_fft / 2 || opt_.pmax_inner >= opt_.m_fft_inner / 2)
        throw DomainError("engine needs m_fft > 2 pmax per tier");
    if (opt_.max_2gk < 0 || opt_.max_n < 1)
        throw DomainError("engine order bounds out of range");
    for (cplx c : frame_->branch_centers()) push_unique(sing_fixed_, c);
    for (cplx s : frame_->s_points()) push_unique(sing_fixed_, frame_->image(s));
    push_unique(sing_fixed_, cplx(0.0));
    for (cplx s : frame_->s_points()) push_unique(sing_fixed_, s);
}

Engine::MemoKey Engine::make_key(CorrelatorKey key, const std::vector<cplx>& spect) const {
    // spectators snapped to a fixed grid so that re-derived values of the
    // same point hit the same entry
    std::vector<std::pair<double, double>> pts;
    pts.reserve(spect.size());
    for (cplx z : spect)
        pts.emplace_back(std::round(z.real() * 1e14) / 1e14,
                         std::round(z.imag() * 1e14) / 1e14);
    std::sort(pts.begin(), pts.end());
    return {key.n, key.g, key.k, std::move(pts)};
}

void Engine::check_public(CorrelatorKey key, const std::vector<cplx>& spect) const {
    if (key.n < 1 || key.g < 0 || key.k < 0)
        throw DomainError("correlator indices must satisfy n >= 1, g >= 0, k >= 0");
    if (static_cast<int>(spect.size()) != key.n - 1)
        throw DomainError("a correlator with n marked points pins n - 1 spectators");
    if (key.n > opt_.max_n)
        throw UnimplementedOrder("correlator has more marked points than the engine serves");
    if (2 * key.g + key.k > opt_.max_2gk)
        throw UnimplementedOrder("correlator order 2g + k beyond the implemented bound");
}

const PoleSum& Engine::omega(CorrelatorKey key, const std::vector<cplx>& spect) {
    check_public(key, spect);
    const bool initial = key == CorrelatorKey{2, 0, 0} || key == CorrelatorKey{1, 0, 1};
    if (!key.stable() && !initial)
        throw UnstableKey(
            "only correlators with negative Euler weight recurse; the leading "
            "data (1,0,0), (2,0,0), (1,0,1) comes from dedicated formulas");
    return omega_internal(key, spect);
}

PoleSum Engine::omega_general(CorrelatorKey key, const std::vector<cplx>& spect) {
    check_public(key, spect);
    if (!key.stable())
        throw UnstableKey("the general assembly starts at negative Euler weight");
    return sweep(key, spect, /*branch_only=*/false);
}

Correlator Engine::correlator(CorrelatorKey key, const std::vector<cplx>& spect) {
    return Correlator{key, spect, omega(key, spect)};
}

const PoleSum& Engine::omega_internal(CorrelatorKey key, const std::vector<cplx>& spect) {
    if (key == CorrelatorKey{1, 0, 0})
        throw MissingPrerequisite(
            "the leading resolvent has no recursive form; its data enters "
            "through the curve frame");
    MemoKey mk = make_key(key, spect);
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = memo_.find(mk);
        if (it != memo_.end()) return it->second;
    }
    PoleSum val;
    if (key == CorrelatorKey{2, 0, 0})
        val = frame_->w2_pole(spect[0]);
    else if (key == CorrelatorKey{1, 0, 1})
        val = frame_->w1_01();
    else
        val = sweep(key, spect, /*branch_only=*/key.k == 0);
    std::lock_guard<std::mutex> lk(mu_);
    return memo_.emplace(std::move(mk), std::move(val)).first->second;
}

// Divergent-part extraction.  branch_only runs the simplified form valid for
// k = 0: poles live at the branch centers alone and the wall-dependent
// spectator pieces drop out under those residues.  Otherwise: principal parts
// at branch centers and at the images of moment roots and spectators, the
// moment-root residues transferred to their images, and (on frames that ask
// for it) a compensating simple pole at z = 0 closing the residue count.
PoleSum Engine::sweep(CorrelatorKey key, const std::vector<cplx>& spect, bool branch_only) {
    const CurveFrame& fr = *frame_;
    const bool inner = !spect.empty();
    const int M = inner ? opt_.m_fft_inner : opt_.m_fft;
    const int P = inner ? opt_.pmax_inner : opt_.pmax;
    const bool hat = branch_only;

    auto Sfn = [&](cplx z) {
        return E_worker(key, z, spect, hat) / fr.two_y_xp(z);
    };

    std::vector<cplx> centers = fr.branch_centers();
    const std::size_t n_branch = centers.size();
    if (!branch_only) {
        for (cplx s : fr.s_points()) push_unique(centers, fr.image(s));
        for (cplx zi : spect) push_unique(centers, fr.image(zi));
    }

    std::vector<cplx> sing_all = sing_fixed_;
    for (cplx zi : spect) {
        sing_all.push_back(fr.image(zi));
        sing_all.push_back(zi);
    }

    // Without the wall power the differential is odd under the sheet
    // involution, so its residue at a self-conjugate branch center vanishes
    // identically; dropping that slot removes pure extraction noise that
    // otherwise gets amplified by nested evaluations close to the center.
    const bool branch_res_vanishes = key.k == 0;

    PoleSum out;
    cplx res_sum = 0.0;
    for (std::size_t ci = 0; ci < centers.size(); ++ci) {
        const cplx c = centers[ci];
        const bool skip_res = branch_res_vanishes && ci < n_branch;
        double rho = guard_rho(0.3 * min_dist(c, sing_all), c, sing_all);
        auto cs = circle_coefficients(Sfn, c, rho, -P, -1, M);
        for (int m = skip_res ? 2 : 1; m <= P; ++m) out.add_term(c, m, cs[P - m]);
        if (!skip_res) res_sum += cs[P - 1];
    }

    if (!branch_only) {
        // transfer the moment-root residues to the other sheet
        std::vector<cplx> sing_res = sing_fixed_;
        for (cplx zi : spect) sing_res.push_back(fr.image(zi));
        std::vector<cplx> guard_pts = sing_res;
        guard_pts.insert(guard_pts.end(), spect.begin(), spect.end());
        for (cplx sj : fr.s_points()) {
            double rho = guard_rho(0.3 * min_dist(sj, sing_res), sj, guard_pts);
            cplx Rj = circle_coefficients(Sfn, sj, rho, -1, -1, M)[0];
            out.add_term(fr.image(sj), 1, Rj);
            res_sum += Rj;
        }
        if (fr.zero_correction()) out.add_term(cplx(0.0), 1, -res_sum);
    }

    out.trim(kTrimTol);
    check_window(out, P);
    if (fr.zero_correction()) {
        for (const auto& p : out.poles)
            if (std::abs(p.position) < 1e-10 && p.part.size() > 1)
                throw std::logic_error(
                    "recursion invariant broken: the compensating pole at "
                    "z = 0 must stay simple");
    }
    return out;
}

cplx Engine::E_worker(CorrelatorKey key, cplx z, const std::vector<cplx>& spect, bool hat) {
    if (key.n <= 2 && key.g == 0 && key.k == 0)
        throw MissingPrerequisite(
            "the loop-equation numerator is defined only above the initial data");

    const CurveFrame& fr = *frame_;
    const int n = key.n, g = key.g, k = key.k;
    const int nsp = static_cast<int>(spect.size());

    // evaluate a lower correlator, routing the pair correlator to its
    // closed form
    auto factor = [&](CorrelatorKey fk, const std::vector<cplx>& pinned, cplx at) {
        if (fk == CorrelatorKey{2, 0, 0}) return fr.w2(at, pinned[0]);
        return omega_internal(fk, pinned).eval(at);
    };

    cplx val = 0.0;

    // one genus down, the active point doubled
    if (g >= 1) {
        std::vector<cplx> sp2 = spect;
        sp2.push_back(z);
        val += factor({n + 1, g - 1, k}, sp2, z);
    }

    // ordered products of two lower correlators
    for (int mask = 0; mask < (1 << nsp); ++mask) {
        std::vector<cplx> J, Jc;
        for (int i = 0; i < nsp; ++i) ((mask >> i) & 1 ? J : Jc).push_back(spect[i]);
        const int nJ = static_cast<int>(J.size());
        for (int g1 = 0; g1 <= g; ++g1) {
            for (int k1 = 0; k1 <= k; ++k1) {
                if (nJ == 0 && g1 == 0 && k1 == 0) continue;
                if (nsp - nJ == 0 && g1 == g && k1 == k) continue;
                val += factor({nJ + 1, g1, k1}, J, z) *
                       factor({nsp - nJ + 1, g - g1, k - k1}, Jc, z);
            }
        }
    }

    // one hbar power down, differentiated in the covariant combination
    if (k >= 1) {
        CorrelatorKey down{n, g, k - 1};
        if (down == CorrelatorKey{1, 0, 0}) {
            val += fr.dw1_00(z);
        } else if (down == CorrelatorKey{2, 0, 0}) {
            val += fr.w2_dz(z, spect[0]) - fr.xpp(z) / fr.xp(z) * fr.w2(z, spect[0]);
        } else {
            const PoleSum& om = omega_internal(down, spect);
            val += om.eval_derivative(z) - fr.xpp(z) / fr.xp(z) * om.eval(z);
        }
    }

    // spectator couplings
    for (int i = 0; i < nsp; ++i) {
        std::vector<cplx> rest;
        rest.reserve(nsp - 1);
        for (int j = 0; j < nsp; ++j)
            if (j != i) rest.push_back(spect[j]);
        const cplx zi = spect[i];
        const CorrelatorKey down{n - 1, g, k};
        const cplx dx = fr.x_diff(z, zi);

        if (hat) {
            // the piece that survives residues at the branch centers
            val += fr.xp(z) * fr.xp(zi) * factor(down, rest, z) / (dx * dx);
            continue;
        }

        cplx om_z, om_zi, om_zi_d;
        if (down == CorrelatorKey{2, 0, 0}) {
            om_z = fr.w2(z, rest[0]);
            om_zi = fr.w2(zi, rest[0]);
            om_zi_d = fr.w2_dz(zi, rest[0]);
        } else {
            const PoleSum& om = omega_internal(down, rest);
            om_z = om.eval(z);
            om_zi = om.eval(zi);
            om_zi_d = om.eval_derivative(zi);
        }

        const cplx xpz = fr.xp(z);
        const cplx xpi = fr.xp(zi);
        const cplx wi = om_zi / xpi;
        const cplx wip = (om_zi_d * xpi - om_zi * fr.xpp(zi)) / (xpi * xpi);
        const cplx A = om_z / xpz;
        const cplx F = 1.0 / fr.x_minus_a(z);
        const cplx G = 1.0 / dx;
        const cplx C = fr.x_minus_a(zi) * wi;
        const cplx Cp = xpi * wi + fr.x_minus_a(zi) * wip;
        val += xpz * xpz * (-Cp * F * G + (A - C * F) * G * G * xpi);
    }

    return val;
}

cplx Engine::E_at(CorrelatorKey key, cplx z, const std::vector<cplx>& spect, bool hat) {
    check_public(key, spect);
    return E_worker(key, z, spect, hat);
}

cplx Engine::S_at(CorrelatorKey key, cplx z, const std::vector<cplx>& spect, bool hat) {
    check_public(key, spect);
    return E_worker(key, z, spect, hat) / frame_->two_y_xp(z);
}

LocalSeries Engine::assemble_E(CorrelatorKey key, cplx center, const std::vector<cplx>& spect,
                               int n_powers, bool hat) {
    check_public(key, spect);
    if (n_powers < 1) throw DomainError("assemble_E needs at least one regular power");
    const bool inner = !spect.empty();
    const int P = inner ? opt_.pmax_inner : opt_.pmax;
    const int M = std::max(inner ? opt_.m_fft_inner : opt_.m_fft, 2 * (P + n_powers));

    std::vector<cplx> sings = sing_fixed_;
    for (cplx zi : spect) {
        sings.push_back(zi);
        sings.push_back(frame_->image(zi));
    }
    double rho = guard_rho(0.3 * min_dist(center, sings), center, sings);

    auto Efn = [&](cplx z) { return E_worker(key, z, spect, hat); };
    LocalSeries out;
    out.center = center;
    out.order_min = -P;
    out.coeffs = circle_coefficients(Efn, center, rho, -P, n_powers - 1, M);
    out.trunc = n_powers - 1;
    out.trim(kTrimTol);
    return out;
}

RemainderData Engine::remainder_coeffs(CorrelatorKey key, const std::vector<cplx>& spect) {
    check_public(key, spect);
    RemainderData rd;
    rd.key = key;
    for (cplx sj : frame_->s_points()) {
        cplx Rj = E_worker(key, sj, spect, false) /
                  (2.0 * frame_->yp(sj) * frame_->xp(sj));
        rd.s.push_back(sj);
        rd.s_img.push_back(frame_->image(sj));
        rd.R.push_back(Rj);
    }
    if (key.n == 1 && frame_->wall_residue()) {
        // value of the remainder at z = 1, weighted by the wall residue
        cplx acc = 0.0;
        for (std::size_t j = 0; j < rd.R.size(); ++j)
            acc += rd.R[j] * (rd.s[j] + 1.0) / (rd.s[j] - 1.0);
        rd.dA = (*frame_->wall_residue() * acc).real();
        rd.c = -*rd.dA;
    }
    return rd;
}

double Engine::dA_F(int g, int k) {
    if (2 * g + k < 1)
        throw DomainError("dA_F covers 2g + k >= 1; the leading term has its own closed form");
    RemainderData rd = remainder_coeffs({1, g, k}, {});
    if (!rd.dA)
        throw DomainError("dA_F needs a frame with a hard-wall weight");
    return *rd.dA;
}

// ---------------------------------------------------------------------------
// closed forms and kernels

cplx omega_2_00(const OneCutCurve& curve, cplx z1, cplx z2) {
    auto on_node = [](cplx z) {
        return std::abs(z - 1.0) < 1e-12 || std::abs(z + 1.0) < 1e-12 ||
               std::abs(z) < 1e-12;
    };
    if (on_node(z1) || on_node(z2) || std::abs(z1 * z2 - 1.0) < 1e-12)
        throw PoleHit("pair correlator evaluated on a pole of its own frame");
    cplx d = z1 * z2 - 1.0;
    return 1.0 / (curve.xp(z1) * curve.xp(z2) * d * d);
}

PoleSum omega_2_00_pole_sum(const OneCutCurve& curve, cplx z2) {
    if (std::abs(z2 - 1.0) < 1e-12 || std::abs(z2 + 1.0) < 1e-12 || std::abs(z2) < 1e-12)
        throw PoleHit("pair correlator pinned on a pole of its own frame");
    // 1/(x'(z1) x'(z2) (z1 z2 - 1)^2) with x' = gamma (1 - 1/z^2) splits over
    // z1 = 1, -1 and the image point 1/z2
    const cplx g2 = curve.gamma * curve.gamma;
    const cplx k0 = 1.0 / (g2 * (z2 * z2 - 1.0));
    const cplx p = 1.0 / z2;
    const cplx q = p * p - 1.0;
    PoleSum w;
    w.add_term(cplx(1.0), 1, k0 / (2.0 * (1.0 - p) * (1.0 - p)));
    w.add_term(cplx(-1.0), 1, -k0 / (2.0 * (1.0 + p) * (1.0 + p)));
    w.add_term(p, 1, -2.0 * k0 * p / (q * q));
    w.add_term(p, 2, k0 * p * p / q);
    return w;
}

PoleSum omega_1_01(const OneCutCurve& curve) {
    if (curve.near_critical())
        throw CriticalCurve(
            "omega_1^{0,1} needs every moment-root preimage strictly off the unit circle");
    PoleSum w;
    w.add_term(cplx(1.0), 1, 0.5);
    w.add_term(cplx(-1.0), 1, -0.5);
    for (cplx s : curve.moment_roots_s) {
        w.add_term(1.0 / s, 1, -1.0);
        w.add_term(cplx(0.0), 1, 1.0);
    }
    return w;
}

cplx kernel_K(const CurveFrame& frame, cplx z0, cplx z) {
    const cplx img = frame.image(z);
    const cplx yz = frame.y(z);
    const cplx xpi = frame.xp(img);
    const double scale = std::abs(z0) + std::abs(z) + 1.0;
    if (std::abs(yz) < 1e-12 || std::abs(xpi) < 1e-12 ||
        std::abs(z0 - z) < 1e-13 * scale || std::abs(z0 - img) < 1e-13 * scale)
        throw PoleHit("recursion kernel evaluated on a pole");
    return (1.0 / (4.0 * yz * xpi)) * (1.0 / (z0 - z) - 1.0 / (z0 - img));
}

cplx kernel_K_tw(cplx sigma0, cplx sigma) {
    const cplx den =
        4.0 * sigma * (sigma * sigma - 1.0) * (sigma * sigma - sigma0);
    if (std::abs(den) < 1e-12 * (1.0 + std::abs(sigma0)) * (1.0 + std::norm(sigma)))
        throw PoleHit("scaled recursion kernel evaluated on a pole");
    return 1.0 / den;
}

} // namespace hardwall
