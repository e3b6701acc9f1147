#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "casimir/scattering.hpp"

namespace casimir {

// Model parameters, all in reduced units (hbar = c = 1, and hbar^2/2m = 1/2
// for the barrier so that its delta limit has coupling g = 2 v0 a).
namespace model {

struct Delta {
    double g;  // coupling, 1/length
};

struct Perfect {};

struct ConstantReflectivity {
    double rho;  // in [-1, 0]
};

struct RectBarrier {
    double v0;  // barrier height (energy)
    double a;   // width (length)
};

struct LcShunt {
    double z0;  // line impedance
    double l;   // shunt inductance
};

}  // namespace model

/// An immutable mirror model: a closed-form map from a wavenumber in the
/// closed upper half-plane to a ScatteringMatrix.
class ScattererModel {
public:
    using Kind = std::variant<model::Delta, model::Perfect, model::ConstantReflectivity,
                              model::RectBarrier, model::LcShunt>;

    const std::string& name() const noexcept { return name_; }
    const std::vector<std::pair<std::string, double>>& parameters() const noexcept { return params_; }
    const Kind& kind() const noexcept { return kind_; }

    /// r == rbar and t == tbar.
    bool symmetric() const noexcept { return symmetric_; }
    /// No S-matrix poles in the open upper half-plane.
    bool causal() const noexcept { return causal_; }
    /// Distance from the reference point to the outer face of the scatterer.
    /// Amplitudes are referenced to the scatterer's centre, so on the
    /// imaginary axis |r(i kappa)| may grow like exp(2 kappa * half_width).
    double half_width() const noexcept { return half_width_; }

    /// Canonical spec string, e.g. "delta:g=2".
    std::string spec() const;

    friend ScattererModel delta_scatterer(double g);
    friend ScattererModel perfect_mirror();
    friend ScattererModel constant_reflectivity(double rho);
    friend ScattererModel rect_barrier_scatterer(double v0, double a);
    friend ScattererModel lc_shunt_scatterer(double z0, double shunt_l);

private:
    ScattererModel(std::string name, std::vector<std::pair<std::string, double>> params, Kind kind,
                   bool symmetric, bool causal, double half_width)
        : name_(std::move(name)),
          params_(std::move(params)),
          kind_(kind),
          symmetric_(symmetric),
          causal_(causal),
          half_width_(half_width) {}

    std::string name_;
    std::vector<std::pair<std::string, double>> params_;
    Kind kind_;
    bool symmetric_;
    bool causal_;
    double half_width_;
};

/// Point scatterer, r = g / (2ik - g), t = 1 + r. Rejects g < 0: an
/// attractive delta has a bound-state pole on the positive imaginary axis.
ScattererModel delta_scatterer(double g);

/// r = rbar = -1, t = tbar = 0 at every wavenumber.
ScattererModel perfect_mirror();

/// Frequency-independent reflectivity rho in [-1, 0]. Flagged non-causal;
/// it only exists for scaling tests. See models.cpp for the phase choice of t.
ScattererModel constant_reflectivity(double rho);

/// Square barrier of height v0 and width a centred on the origin.
ScattererModel rect_barrier_scatterer(double v0, double a);

/// Transmission line shunted by an inductance; equivalent to a delta
/// scatterer with coupling lc_effective_coupling(z0, shunt_l).
ScattererModel lc_shunt_scatterer(double z0, double shunt_l);

/// g_eff = z0 / l for the shunted line (unit phase velocity).
double lc_effective_coupling(double z0, double shunt_l);

/// Distance between two evaluation points and a model pole below which
/// eval throws PoleEncountered.
inline constexpr double kPoleTolerance = 1e-12;

/// Evaluate the model at complex k with Im k >= 0.
///
/// Throws EvaluationDomain for Im k < 0 and PoleEncountered within
/// kPoleTolerance of a pole of the amplitudes.
ScatteringMatrix eval(const ScattererModel& model, Complex k);

/// Parse `delta:g=<float>`, `perfect`, `const:rho=<float>`,
/// `barrier:v0=<float>,a=<float>` or `lc:z0=<float>,l=<float>`.
/// Throws ParseError for malformed text and InvalidParameter for
/// out-of-range values.
ScattererModel parse_model_spec(std::string_view text);

}  // namespace casimir
