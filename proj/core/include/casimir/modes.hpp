#pragma once

#include "casimir/cavity.hpp"
#include "casimir/scattering.hpp"

namespace casimir {

enum class CutoffProfile {
    Gaussian,  // weight exp(-(k/k_max)^2); needed for lossless mirrors
    Sharp,     // modes with k <= k_max only
};

/// Periodic box of length `length` (the ring the cavity sits in).
struct BoxSpec {
    double length = 500.0;
    double k_max = 2000.0;
    /// Phase samples per mode spacing 2 pi / length used for branch tracking.
    int resolution = 2;
    CutoffProfile cutoff = CutoffProfile::Gaussian;

    void validate() const;
};

/// The two values of exp(-i k^pm Lbox) allowed by a scatterer in a ring,
/// (t + tbar)/2 +- sqrt((t + tbar)^2/4 - det S). Their product is det S and
/// both have unit modulus for unitary S. Unordered.
struct BranchPair {
    Complex first;
    Complex second;
};
BranchPair eigen_branches(const ScatteringMatrix& s);

/// Delta k+ + Delta k- = (i / Lbox) ln det S on the principal branch.
/// Throws NonUnitaryInput if | |det S| - 1 | > 1e-10.
double wavenumber_shift_total(const ScatteringMatrix& s, double box_length);

struct ModeSum {
    double total = 0.0;          // (1/2) sum_n w(k_n) (Delta k+ + Delta k-)
    double single_mirrors = 0.0; // part from det S1 det S2, independent of L
    double cavity = 0.0;         // part from the round-trip phase factor
    long modes = 0;
};

/// Vacuum energy shift of the cavity in the box, from the phase of the
/// composite det S sampled on the unperturbed grid k_n = 2 pi n / Lbox.
/// The phase is tracked continuously; the branch at each mode is taken from
/// the factorization det S1 det S2 (1 - rho^*)/(1 - rho), whose cavity factor
/// has Re(1 - rho) >= 0 and therefore a principal argument that is
/// continuous for |rho| < 1. Lossless (|rho| = 1) mirrors sampled exactly on
/// a resonance get the mean of the two one-sided limits.
///
/// The single-mirror part diverges with the cutoff; only differences in L
/// converge. Requires Lbox >= 50 L. Throws CutoffTooCoarse when a mirror
/// phase, or the cavity phase of a leaky cavity, moves by more than pi/2
/// between two samples.
ModeSum mode_sum_breakdown(const CavityConfig& config, const BoxSpec& box);

double mode_sum_energy_shift(const CavityConfig& config, const BoxSpec& box);

/// E(L_a) - E(L_b) from two mode sums on the same grid; the L-independent
/// single-mirror parts cancel.
double energy_difference_oracle(const ScattererModel& left, const ScattererModel& right, double la, double lb,
                                const BoxSpec& box);

}  // namespace casimir
