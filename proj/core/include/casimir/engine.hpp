#pragma once

#include <string>

#include "casimir/cavity.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

/// Distance-dependent vacuum energy, reduced units (hbar = c = 1).
struct EnergyResult {
    double value = 0.0;
    double error = 0.0;  // estimated absolute error
    long nodes = 0;      // integrand evaluations
    std::string method;
    double tail = 0.0;   // series methods: estimated truncation tail
};

/// Casimir force, reduced units. Negative means attraction.
struct ForceResult {
    double value = 0.0;
    double error = 0.0;
    long nodes = 0;
    std::string method;
    double tail = 0.0;
};

enum class SeriesTail {
    Truncate,    // partial sum only; error carries an N a_N tail estimate
    Richardson,  // extrapolate the partial sums in 1/N
};

/// E(L) = (1/4 pi L) int_0^inf dx ln(1 - rho~(x)), the energy on the
/// imaginary axis k = ix/2L. Both models must be causal unless
/// spec.allow_noncausal. Throws ToleranceNotMet or NonCausalModel.
EnergyResult casimir_energy(const CavityConfig& config, const QuadratureSpec& spec = {});

/// (1/2 pi) Im int_0^{k_max} dk ln(1 - rbar1 r2 e^{2ikL}) on the real axis.
/// A cross-check only: the integrand oscillates, and for perfect mirrors
/// it is the sawtooth of the principal logarithm and never converges. The
/// reported error covers the quadrature, not the cutoff at k_max.
EnergyResult casimir_energy_real_axis(const CavityConfig& config, double k_max, const QuadratureSpec& spec = {});

/// F = -(1/4 pi L^2) int_0^inf dx x rho~/(1 - rho~).
ForceResult casimir_force(const CavityConfig& config, const QuadratureSpec& spec = {});

/// F = -(1/4 pi L^2) sum_{n=1}^{n_max} int_0^inf dx x rho~^n, each term
/// integrated separately.
ForceResult casimir_force_series(const CavityConfig& config, int n_max, const QuadratureSpec& spec = {},
                                 SeriesTail tail = SeriesTail::Richardson);

/// E = -(1/4 pi L) sum_n (1/n) int_0^inf dx rho~^n.
EnergyResult casimir_energy_series(const CavityConfig& config, int n_max, const QuadratureSpec& spec = {},
                                   SeriesTail tail = SeriesTail::Richardson);

/// -pi / 24 L^2.
double perfect_mirror_force(double distance);
/// -pi / 24 L.
double perfect_mirror_energy(double distance);

/// Magnitude of the ideal three-dimensional plate force, pi^2 A / 240 L^4.
double ideal_force_3d(double area, double distance);

/// -[E(L+h) - E(L-h)] / 2h from casimir_energy. Requires 0 < h < L/10.
ForceResult force_from_energy_fd(const CavityConfig& config, double h, const QuadratureSpec& spec = {});

}  // namespace casimir
