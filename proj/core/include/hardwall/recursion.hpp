#pragma once

#include "hardwall/curve.hpp"
#include "hardwall/laurent.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace hardwall {

// Loop-equation recursion for the correlator expansion.
//
// Normalization: every correlator here is the z-plane differential form,
// i.e. it carries one Jacobian x'(z_i) per variable relative to the
// resolvent-style W_n.  In this normalization the pair correlator is
// universal, the recursion coefficients are rational, and the free-energy
// residues need no extra weight.  Divide by x'(z) per variable to convert
// back (see omega_2_00 below, which does exactly that).

// Index (n; g, k) of a correlator: n marked points, genus g, k powers of
// the hbar-like parameter that switches on at beta != 1.
struct CorrelatorKey {
    int n = 1;
    int g = 0;
    int k = 0;

    // Euler-characteristic weight.  Negative: produced by the recursion.
    // Non-negative: initial data with dedicated formulas.
    int chi() const { return 2 - 2 * g - k - n; }
    bool stable() const { return chi() < 0; }

    friend bool operator==(const CorrelatorKey&, const CorrelatorKey&) = default;
};

// A computed correlator: principal parts in the active variable, the other
// points pinned at numeric values.
struct Correlator {
    CorrelatorKey key;
    std::vector<cplx> spectators;
    PoleSum part;
};

// Simple-pole data of the loop-equation remainder: R[j] multiplies
// 1/(z - image(s_j)) - 1/(z - s_j).  For one marked point and a hard wall,
// evaluating at z = 1 gives the a-derivative of the free-energy term:
// dA = r * sum_j R_j (s_j + 1)/(s_j - 1), and c = -dA is the weight of the
// simple pole of the correlator at x = a.
struct RemainderData {
    CorrelatorKey key;
    std::vector<cplx> s;      // moment-root preimages
    std::vector<cplx> s_img;  // their deck images
    std::vector<cplx> R;
    std::optional<double> dA;
    std::optional<double> c;

    cplx eval(cplx z) const;
};

// Geometry the recursion engine needs from a curve: the two-sheeted cover
// x(z), the one-form y, the deck involution, the initial correlators, and
// the bookkeeping points for pole extraction.
class CurveFrame {
public:
    virtual ~CurveFrame() = default;

    virtual cplx x(cplx z) const = 0;
    virtual cplx xp(cplx z) const = 0;
    virtual cplx xpp(cplx z) const = 0;
    virtual cplx y(cplx z) const = 0;
    virtual cplx yp(cplx z) const = 0;

    // Cancellation-safe composites.  Near a branch center x(z) - x(w),
    // x(z) - a and 2 y x' all shrink like squares of z-plane distances while
    // their naive building blocks stay O(1); forming them from factored
    // z-plane expressions keeps the relative error at a few ulp, which the
    // divergent-part extraction relies on when its circles are squeezed by
    // nearby spectators.
    virtual cplx x_diff(cplx z, cplx w) const = 0;   // x(z) - x(w)
    virtual cplx x_minus_a(cplx z) const = 0;        // x(z) - hard_a()
    virtual cplx two_y_xp(cplx z) const = 0;         // 2 y(z) x'(z)

    // simple zeros of x', where the recursion takes residues
    virtual std::vector<cplx> branch_centers() const = 0;
    // the other preimage of x(z)
    virtual cplx image(cplx z) const = 0;

    // preimages of the moment-polynomial roots (zeros of y off the branch
    // points); the remainder transfer runs over these
    virtual std::vector<cplx> s_points() const = 0;
    virtual double hard_a() const = 0;  // wall position in the x-plane
    // residue r of the leading resolvent at z = 1, when the frame has one
    virtual std::optional<double> wall_residue() const = 0;

    // pair correlator omega_2^{0,0}: value, z-derivative, and principal
    // part in the first variable
    virtual cplx w2(cplx z, cplx w) const = 0;
    virtual cplx w2_dz(cplx z, cplx w) const = 0;
    virtual PoleSum w2_pole(cplx w) const = 0;

    // omega_1^{0,1} (the order-hbar one-point term)
    virtual PoleSum w1_01() const = 0;

    // d/dz omega_1^{0,0} - (x''/x') omega_1^{0,0} = x'(z) w_1'(z); seeds the
    // hbar ladder when it bottoms out at the leading resolvent
    virtual cplx dw1_00(cplx z) const = 0;

    // whether assembly must append the compensating simple pole at z = 0
    virtual bool zero_correction() const = 0;
};

// Frame over a solved one-cut curve with an active hard wall, uniformized
// by x(z) = alpha + gamma (z + 1/z); the involution is z -> 1/z.
// Construction demands every |s_j| strictly off the unit circle.
class ZhukovskyFrame : public CurveFrame {
public:
    explicit ZhukovskyFrame(OneCutCurve curve);  // throws CriticalCurve

    const OneCutCurve& curve() const { return cur_; }

    cplx x(cplx z) const override { return cur_.x_of(z); }
    cplx xp(cplx z) const override { return cur_.xp(z); }
    cplx xpp(cplx z) const override { return cur_.xpp(z); }
    cplx y(cplx z) const override { return cur_.y_at(z); }
    cplx yp(cplx z) const override { return cur_.yp_at(z); }

    // x(z) - x(w) = gamma (z - w)(z w - 1)/(z w)
    cplx x_diff(cplx z, cplx w) const override {
        return cur_.gamma * (z - w) * (z * w - 1.0) / (z * w);
    }
    // x(z) - a = gamma (z - 1)^2 / z
    cplx x_minus_a(cplx z) const override {
        const cplx d = z - 1.0;
        return cur_.gamma * d * d / z;
    }
    // 2 y x' = gamma M(x(z)) (z + 1)^2 / z^2: regular and nonzero at the
    // hard edge z = 1, double zero at the free edge z = -1
    cplx two_y_xp(cplx z) const override {
        const cplx p = (z + 1.0) / z;
        return cur_.gamma * cur_.M_at(cur_.x_of(z)) * p * p;
    }

    std::vector<cplx> branch_centers() const override { return {cplx(1.0), cplx(-1.0)}; }
    cplx image(cplx z) const override { return 1.0 / z; }

    std::vector<cplx> s_points() const override { return cur_.moment_roots_s; }
    double hard_a() const override { return cur_.a; }
    std::optional<double> wall_residue() const override { return cur_.r; }

    cplx w2(cplx z, cplx w) const override;
    cplx w2_dz(cplx z, cplx w) const override;
    PoleSum w2_pole(cplx w) const override;
    PoleSum w1_01() const override;
    cplx dw1_00(cplx z) const override;

    bool zero_correction() const override { return true; }

private:
    OneCutCurve cur_;
};

// Frame for the blown-up curve at a touching edge: x = sigma^2,
// y = sigma - 1/sigma, wall at x = 0, involution sigma -> -sigma.  All its
// correlators are curve-independent; free energies computed here are the
// universal tail coefficients.
class TwFrame : public CurveFrame {
public:
    cplx x(cplx z) const override { return z * z; }
    cplx xp(cplx z) const override { return 2.0 * z; }
    cplx xpp(cplx z) const override { return 2.0; }
    cplx y(cplx z) const override { return z - 1.0 / z; }
    cplx yp(cplx z) const override { return 1.0 + 1.0 / (z * z); }

    cplx x_diff(cplx z, cplx w) const override { return (z - w) * (z + w); }
    cplx x_minus_a(cplx z) const override { return z * z; }
    cplx two_y_xp(cplx z) const override { return 4.0 * (z - 1.0) * (z + 1.0); }

    std::vector<cplx> branch_centers() const override { return {cplx(0.0)}; }
    cplx image(cplx z) const override { return -z; }

    std::vector<cplx> s_points() const override { return {cplx(1.0)}; }
    double hard_a() const override { return 0.0; }
    std::optional<double> wall_residue() const override { return std::nullopt; }

    cplx w2(cplx z, cplx w) const override { return 1.0 / ((z + w) * (z + w)); }
    cplx w2_dz(cplx z, cplx w) const override { return -2.0 / ((z + w) * (z + w) * (z + w)); }
    PoleSum w2_pole(cplx w) const override;
    PoleSum w1_01() const override;
    cplx dw1_00(cplx z) const override;  // throws DomainError: no resolvent here

    bool zero_correction() const override { return false; }
};

struct EngineOptions {
    // circle samples / deepest pole order for spectator-free extractions
    int m_fft = 96;
    int pmax = 18;
    // coarser tier for nested sweeps (spectators pinned); their pole data is
    // only ever evaluated well away from the expansion centers
    int m_fft_inner = 64;
    int pmax_inner = 14;
    // implemented orders: 2g + k <= max_2gk and n <= max_n at public entry
    // points (internal recursion goes one marked point deeper per genus)
    int max_2gk = 6;
    int max_n = 3;
};

// The recursion engine: assembles the loop-equation numerator E, normalizes
// to S = E / (2 y x'), and extracts each correlator as the sum of its
// divergent parts plus the remainder transfer.  Keys with k = 0 use the
// branchpoint-only form (their poles sit at the branch centers alone);
// omega_general runs the full hard-edge assembly for any key, which the
// test suite holds against the default path.
class Engine {
public:
    explicit Engine(std::shared_ptr<const CurveFrame> frame, EngineOptions opt = {});

    Engine(const Engine&) = delete;
    Engine& operator=(const Engine&) = delete;

    const CurveFrame& frame() const { return *frame_; }
    const EngineOptions& options() const { return opt_; }
    const std::vector<cplx>& fixed_singularities() const { return sing_fixed_; }

    // omega_n^{g,k} in the active variable; memoized per (key, spectators).
    // Serves the initial-data keys (2,0,0) and (1,0,1) directly; any other
    // key outside the stable range throws UnstableKey.
    const PoleSum& omega(CorrelatorKey key, const std::vector<cplx>& spect = {});

    // full hard-edge assembly regardless of k (not memoized)
    PoleSum omega_general(CorrelatorKey key, const std::vector<cplx>& spect = {});

    Correlator correlator(CorrelatorKey key, const std::vector<cplx>& spect = {});

    // loop-equation numerator at a point; hat = drop the wall-dependent
    // spectator pieces (valid under residues at the branch centers)
    cplx E_at(CorrelatorKey key, cplx z, const std::vector<cplx>& spect = {},
              bool hat = false);
    // E / (2 y x')
    cplx S_at(CorrelatorKey key, cplx z, const std::vector<cplx>& spect = {},
              bool hat = false);

    // Laurent window of E about a center (orders down to the tier's pmax,
    // up to n_powers - 1)
    LocalSeries assemble_E(CorrelatorKey key, cplx center,
                           const std::vector<cplx>& spect = {}, int n_powers = 12,
                           bool hat = false);

    // simple-pole remainder coefficients at the s_j; for n = 1 on a walled
    // frame also the free-energy a-derivative and the wall-pole weight
    RemainderData remainder_coeffs(CorrelatorKey key, const std::vector<cplx>& spect = {});

    // dF^{g,k}/da for 2g + k >= 1 (the n = 1 remainder by-product)
    double dA_F(int g, int k);

private:
    using MemoKey = std::tuple<int, int, int, std::vector<std::pair<double, double>>>;

    MemoKey make_key(CorrelatorKey key, const std::vector<cplx>& spect) const;
    void check_public(CorrelatorKey key, const std::vector<cplx>& spect) const;

    const PoleSum& omega_internal(CorrelatorKey key, const std::vector<cplx>& spect);
    PoleSum sweep(CorrelatorKey key, const std::vector<cplx>& spect, bool branch_only);
    cplx E_worker(CorrelatorKey key, cplx z, const std::vector<cplx>& spect, bool hat);

    std::shared_ptr<const CurveFrame> frame_;
    EngineOptions opt_;
    std::vector<cplx> sing_fixed_;

    // Shared across sweeps; values are deterministic, so concurrent compute
    // of the same key is wasteful but harmless (first insert wins, map nodes
    // stay put).
    std::map<MemoKey, PoleSum> memo_;
    mutable std::mutex mu_;
};

// Pair correlator in the resolvent normalization:
// w_2(z1, z2) = 1 / (x'(z1) x'(z2) (z1 z2 - 1)^2), symmetric, and
// w_2(z1, z2) + w_2(1/z1, z2) = -1/(x(z1) - x(z2))^2.
cplx omega_2_00(const OneCutCurve& curve, cplx z1, cplx z2);
// the same function of z1 with z2 pinned, as explicit partial fractions
PoleSum omega_2_00_pole_sum(const OneCutCurve& curve, cplx z2);

// omega_1^{0,1}(z) = 1/(2(z-1)) - 1/(2(z+1)) - sum_j (1/(z - 1/s_j) - 1/z)
PoleSum omega_1_01(const OneCutCurve& curve);

// recursion kernel K(z0, z) = (1/(4 y(z) x'(image z))) (1/(z0 - z) - 1/(z0 - image z)).
// As a plain function it picks up the involution's Jacobian: on a Zhukovsky
// frame K(z0, 1/z) = -z^2 K(z0, z); in the blow-up frame the Jacobian is -1
// and the kernel is antisymmetric outright.
cplx kernel_K(const CurveFrame& frame, cplx z0, cplx z);

// its touching-edge limit; sigma0 enters linearly as the x-value of the
// external point: K(sigma0, sigma) = 1 / (4 sigma (sigma^2 - 1) (sigma^2 - sigma0))
cplx kernel_K_tw(cplx sigma0, cplx sigma);

} // namespace hardwall
