#pragma once
#include <stdexcept>
#include <string>

// Failure taxonomy. Anything that can escape a public entry point carries a
// stable machine-readable name, so the CLI can print "error: <Name>: ..." and
// scripts can branch on the variant without parsing prose.

namespace hardwall {

class Error : public std::runtime_error {
public:
    Error(const char* name, const std::string& what)
        : std::runtime_error(what), name_(name) {}
    const char* name() const noexcept { return name_; }

private:
    const char* name_;
};

#define HARDWALL_ERROR(Name)                                       \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& what) : Error(#Name, what) {} \
    }

// spectral curve
HARDWALL_ERROR(NoOneCutSolution);      // no admissible one-cut root for b
HARDWALL_ERROR(HardEdgeInactive);      // wall at or beyond the soft edge
HARDWALL_ERROR(CriticalCurve);         // a moment root collides with z = +-1
HARDWALL_ERROR(OutOfSupport);          // x outside [b, a)

// laurent / series algebra
HARDWALL_ERROR(DivisionByZeroSeries);  // reciprocal of an identically-zero series
HARDWALL_ERROR(LogTermRequired);       // primitive of a series with a residue
HARDWALL_ERROR(TruncationTooShort);    // requested order beyond reliable window
HARDWALL_ERROR(NoConvergence);         // quadrature refinement stalled
HARDWALL_ERROR(PoleHit);               // evaluation on top of a pole

// recursion
HARDWALL_ERROR(MissingPrerequisite);   // correlator requested out of order
HARDWALL_ERROR(UnstableKey);           // dedicated formulas exist, recursion refuses

// free energy
HARDWALL_ERROR(LogOfNonpositive);      // branch/convention error in a closed form
HARDWALL_ERROR(OnBranchCut);           // phi evaluated on its log cut

// special functions
HARDWALL_ERROR(DomainError);           // argument outside the function's domain
HARDWALL_ERROR(QuadratureFailure);     // adaptive integration failed

// scaling / tails
HARDWALL_ERROR(UnimplementedOrder);    // beyond the configured (g, k) bound
HARDWALL_ERROR(UnsupportedBeta);       // closed-form tail only for beta in {1/2, 1, 2}

// monte carlo
HARDWALL_ERROR(DegenerateConfiguration); // coincident eigenvalues in the initial state
HARDWALL_ERROR(EmptyWindow);           // too few histogram counts near a_c
HARDWALL_ERROR(CoverageGap);           // derivative table has holes
HARDWALL_ERROR(GridMismatch);          // comparison inputs on different a-grids

// io / cli
HARDWALL_ERROR(IOError);               // filesystem or format failure

#undef HARDWALL_ERROR

} // namespace hardwall
