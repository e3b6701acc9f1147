#pragma once

#include "casimir/models.hpp"
#include "casimir/scattering.hpp"

namespace casimir {

/// Two mirrors a distance L apart; `left` is mirror 1, `right` mirror 2.
/// L is measured between the reference points (centres) of the mirrors and
/// must exceed the sum of their half-widths.
class CavityConfig {
public:
    CavityConfig(ScattererModel left, ScattererModel right, double distance);

    const ScattererModel& left() const noexcept { return left_; }
    const ScattererModel& right() const noexcept { return right_; }
    double distance() const noexcept { return distance_; }

    CavityConfig with_distance(double distance) const { return {left_, right_, distance}; }

private:
    ScattererModel left_;
    ScattererModel right_;
    double distance_;
};

/// Below this modulus of 1 - rbar1 r2 e^{2ikL} the cavity is treated as
/// exactly resonant.
inline constexpr double kResonanceThreshold = 1e-12;

/// diag(e^{ikL}, e^{-ikL}). Requires L >= 0.
TransferMatrix free_propagation(double length, Complex k);

/// Closed-form composite of two touching scatterers (s1 on the left).
/// Throws CavityResonance when |1 - rbar1 r2| < kResonanceThreshold.
ScatteringMatrix compose_adjacent(const ScatteringMatrix& s1, const ScatteringMatrix& s2);

/// Composite S of mirror 1, propagation over L, mirror 2 and the inverse
/// propagation that keeps the total length fixed: T = T_L^-1 T2 T_L T1.
/// The compensating factor only adds phases to t and rbar; det S is the same
/// as for the physical two-mirror system (see cavity_det_s). Evaluated by
/// chaining closed-form compositions, so non-transmitting mirrors are
/// allowed. Throws CavityResonance.
ScatteringMatrix cavity_smatrix(const CavityConfig& config, Complex k);

/// det S = [det S1 det S2 - r1 rbar2 e^{-2ikL}] / [1 - rbar1 r2 e^{2ikL}],
/// evaluated directly (no matrix products) so that non-transmitting mirrors
/// are fine. Throws CavityResonance on a vanishing denominator.
Complex cavity_det_s(const CavityConfig& config, Complex k);

/// det S2 det S1 (1 - rho^*) / (1 - rho). Valid only at real k.
Complex cavity_det_s_factorized(const CavityConfig& config, double k);

/// rho(k) = rbar1(k) r2(k) e^{2ikL}, the amplitude of one round trip.
Complex round_trip_factor(const CavityConfig& config, Complex k);

/// The round trip on the rotated axis k = i x / 2L:
/// rho~(x) = rbar1 r2 e^{-x}. Real for every built-in model.
double round_trip(const CavityConfig& config, double x);

/// rho~(x) split as R(x) e^{-x} with R = rbar1 r2 at k = ix/2L, plus
/// 1 - rho~ computed without cancellation when R is close to 1.
struct RotatedRoundTrip {
    double reflect;      // R
    double value;        // R e^{-x}
    double complement;   // 1 - R e^{-x}
};
RotatedRoundTrip rotated_round_trip(const CavityConfig& config, double x);

/// compose_adjacent with each 1/(1 - rbar1 r2) replaced by the first n+1
/// terms of its geometric series, i.e. at most n extra round trips.
ScatteringMatrix round_trip_expansion(const ScatteringMatrix& s1, const ScatteringMatrix& s2, int n);

/// |rbar1 r2|^{n+1} / (1 - |rbar1 r2|): bound on every entry of
/// round_trip_expansion(s1, s2, n) - compose_adjacent(s1, s2) for unitary
/// inputs.
double round_trip_expansion_bound(const ScatteringMatrix& s1, const ScatteringMatrix& s2, int n);

}  // namespace casimir
