#include "casimir/cavity.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

constexpr Complex kI{0.0, 1.0};

Complex checked_denominator(Complex round_trip) {
    const Complex den = 1.0 - round_trip;
    if (std::abs(den) < kResonanceThreshold) {
        std::ostringstream msg;
        msg << "cavity is resonant: |1 - rbar1 r2 exp(2ikL)| = " << std::abs(den);
        throw CavityResonance(msg.str());
    }
    return den;
}

}  // namespace

CavityConfig::CavityConfig(ScattererModel left, ScattererModel right, double distance)
    : left_(std::move(left)), right_(std::move(right)), distance_(distance) {
    if (!(std::isfinite(distance) && distance > 0.0)) {
        std::ostringstream msg;
        msg << "cavity distance must be > 0 (got " << distance << ")";
        throw InvalidParameter(msg.str());
    }
    if (distance <= left_.half_width() + right_.half_width()) {
        std::ostringstream msg;
        msg << "mirrors overlap: distance " << distance << " <= half-widths "
            << left_.half_width() << " + " << right_.half_width();
        throw InvalidParameter(msg.str());
    }
}

TransferMatrix free_propagation(double length, Complex k) {
    if (!(length >= 0.0)) throw InvalidParameter("free propagation length must be >= 0");
    const Complex phase = std::exp(kI * k * length);
    return {ComplexMat2::diagonal(phase, std::exp(-kI * k * length))};
}

ScatteringMatrix compose_adjacent(const ScatteringMatrix& s1, const ScatteringMatrix& s2) {
    const Complex den = checked_denominator(s1.rbar * s2.r);
    return {s1.t * s2.t / den, s2.rbar + s1.rbar * s2.t * s2.tbar / den,
            s1.r + s2.r * s1.t * s1.tbar / den, s1.tbar * s2.tbar / den};
}

ScatteringMatrix cavity_smatrix(const CavityConfig& config, Complex k) {
    const ScatteringMatrix s1 = eval(config.left(), k);
    const ScatteringMatrix s2 = eval(config.right(), k);
    // Same composite as transfer_to_s(T_L^-1 T2 T_L T1), but chained through
    // S-matrices: transfer matrices of strong mirrors have entries ~ 1/t and
    // their products lose unitarity to cancellation. This also keeps
    // non-transmitting mirrors usable.
    const Complex e = std::exp(kI * k * config.distance());
    const ScatteringMatrix forward{e, 0.0, 0.0, e};
    const ScatteringMatrix backward{1.0 / e, 0.0, 0.0, 1.0 / e};
    return compose_adjacent(compose_adjacent(compose_adjacent(s1, forward), s2), backward);
}

Complex cavity_det_s(const CavityConfig& config, Complex k) {
    const ScatteringMatrix s1 = eval(config.left(), k);
    const ScatteringMatrix s2 = eval(config.right(), k);
    const Complex e = std::exp(2.0 * kI * k * config.distance());
    const Complex den = checked_denominator(s1.rbar * s2.r * e);
    return (det_s(s1) * det_s(s2) - s1.r * s2.rbar / e) / den;
}

Complex cavity_det_s_factorized(const CavityConfig& config, double k) {
    const ScatteringMatrix s1 = eval(config.left(), k);
    const ScatteringMatrix s2 = eval(config.right(), k);
    const Complex rho = s1.rbar * s2.r * std::exp(2.0 * kI * k * config.distance());
    const Complex den = checked_denominator(rho);
    return det_s(s2) * det_s(s1) * (1.0 - std::conj(rho)) / den;
}

Complex round_trip_factor(const CavityConfig& config, Complex k) {
    const ScatteringMatrix s1 = eval(config.left(), k);
    const ScatteringMatrix s2 = eval(config.right(), k);
    return s1.rbar * s2.r * std::exp(2.0 * kI * k * config.distance());
}

RotatedRoundTrip rotated_round_trip(const CavityConfig& config, double x) {
    if (!(x >= 0.0)) throw InvalidParameter("round trip requires x >= 0");
    const Complex k{0.0, x / (2.0 * config.distance())};
    const ScatteringMatrix s1 = eval(config.left(), k);
    const ScatteringMatrix s2 = eval(config.right(), k);
    // Both amplitudes are real on the imaginary axis for the built-in
    // models; the imaginary part is rounding noise.
    const double reflect = (s1.rbar * s2.r).real();
    // 1 - R e^{-x} = (1 - R) - R expm1(-x) is exact for R = 1 but cancels
    // when R is large.
    const double value = reflect * std::exp(-x);
    const double complement = std::abs(reflect) <= 2.0 ? (1.0 - reflect) - reflect * std::expm1(-x) : 1.0 - value;
    return {reflect, value, complement};
}

double round_trip(const CavityConfig& config, double x) { return rotated_round_trip(config, x).value; }

ScatteringMatrix round_trip_expansion(const ScatteringMatrix& s1, const ScatteringMatrix& s2, int n) {
    if (n < 0) throw InvalidParameter("round_trip_expansion requires n >= 0");
    const Complex q = s1.rbar * s2.r;
    Complex series{0.0};
    Complex term{1.0};
    for (int j = 0; j <= n; ++j) {
        series += term;
        term *= q;
    }
    return {s1.t * s2.t * series, s2.rbar + s1.rbar * s2.t * s2.tbar * series,
            s1.r + s2.r * s1.t * s1.tbar * series, s1.tbar * s2.tbar * series};
}

double round_trip_expansion_bound(const ScatteringMatrix& s1, const ScatteringMatrix& s2, int n) {
    const double q = std::abs(s1.rbar * s2.r);
    if (q >= 1.0) return std::numeric_limits<double>::infinity();
    return std::pow(q, n + 1) / (1.0 - q);
}

}  // namespace casimir
