#include "casimir/engine.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/resummation.hpp"

namespace casimir {

namespace {

using std::numbers::pi;

void require_causal(const CavityConfig& config, const QuadratureSpec& spec) {
    if (spec.allow_noncausal) return;
    for (const ScattererModel* m : {&config.left(), &config.right()}) {
        if (!m->causal()) {
            throw NonCausalModel("model '" + m->spec() +
                                 "' is not causal; rotating the integration contour is not justified "
                                 "(set allow_noncausal to override)");
        }
    }
}

// On the rotated axis |rbar1 r2| <= exp(x (d1 + d2) / L), so rho~ decays at
// least like exp(-decay x).
double decay_rate(const CavityConfig& config) {
    return 1.0 - (config.left().half_width() + config.right().half_width()) / config.distance();
}

// dR/dx of R(x) = rbar1 r2 at k = ix/2L by the complex-step rule. R is
// analytic and real for real x, so Im R(x + ih) / h has no cancellation.
double reflect_derivative(const CavityConfig& config, double x) {
    const double h = 1e-20 * std::max(1.0, x);
    const Complex k = Complex(0.0, 1.0) * Complex(x, h) / (2.0 * config.distance());
    const Complex r = eval(config.left(), k).rbar * eval(config.right(), k).r;
    return r.imag() / h;
}

enum class Integral { Energy, Force };

double tail_bound(Integral which, double decay, double cut) {
    const double e = std::exp(-decay * cut);
    const double norm = 1.0 - e;
    if (which == Integral::Force) return e * (cut / decay + 1.0 / (decay * decay)) / norm;
    return e / (decay * norm);
}

// Upper integration limit with the tail beyond it below a tenth of abs_tol.
double cutoff(Integral which, double decay, double abs_tol) {
    double cut = std::log(10.0 / abs_tol) / decay;
    while (tail_bound(which, decay, cut) > 0.1 * abs_tol) cut *= 1.05;
    return cut;
}

// Panels grow geometrically from the decay scale so that no single panel
// spans many e-folds of the integrand (GK21 nodes would all see ~0 there).
std::vector<double> breakpoints(double cut, double scale) {
    std::vector<double> out{0.0};
    for (double b : {0.01, 0.1, 0.5}) {
        if (b * scale < cut) out.push_back(b * scale);
    }
    for (double b = scale; b < cut; b *= 2.0) out.push_back(b);
    out.push_back(cut);
    return out;
}

struct RotatedIntegral {
    double value;
    double error;
    long nodes;
    std::string method;
};

[[noreturn]] void not_met(const char* what, double value, double error, double tol, double scale = 1.0) {
    std::ostringstream msg;
    msg << what << ": estimated error " << error << " exceeds tolerance " << tol;
    throw ToleranceNotMet(msg.str(), value * scale, error * std::abs(scale));
}

// The dimensionless integral over x in [0, inf) behind energy and force.
// `scale` converts the integral to the reported quantity; it is applied to
// the best estimate carried by ToleranceNotMet.
RotatedIntegral rotated_integral(Integral which, const CavityConfig& config, const QuadratureSpec& spec,
                                 double scale) {
    spec.validate();
    require_causal(config, spec);
    const char* label = which == Integral::Force ? "casimir_force" : "casimir_energy";

    if (spec.rule == QuadratureRule::GaussLaguerre) {
        // Integrands divided by the weight e^{-x}. ln(1 - rho~) is singular at
        // x = 0 unless the mirrors are weak, so the energy is integrated by
        // parts: int ln(1 - rho~) = int x (R' - R) e^{-x} / (1 - rho~).
        const Integrand g = [&](double x) {
            const RotatedRoundTrip rt = rotated_round_trip(config, x);
            if (rt.reflect == 0.0) return 0.0;
            if (which == Integral::Force) return x * rt.reflect / rt.complement;
            return x * (reflect_derivative(config, x) - rt.reflect) / rt.complement;
        };
        const QuadratureResult q = integrate_laguerre(g, spec.laguerre_nodes);
        const double tol = spec.tolerance_for(q.value);
        if (q.error > tol) not_met(label, q.value, q.error, tol, scale);
        return {q.value, q.error, q.evaluations, to_string(spec.rule)};
    }

    const Integrand f = [&](double x) {
        const RotatedRoundTrip rt = rotated_round_trip(config, x);
        if (rt.value == 0.0) return 0.0;
        if (which == Integral::Force) return x * rt.value / rt.complement;
        return std::log(rt.complement);
    };
    const double decay = decay_rate(config);
    const double cut = cutoff(which, decay, spec.abs_tol);
    const double tail = tail_bound(which, decay, cut);
    const std::vector<double> breaks = breakpoints(cut, 1.0 / decay);
    const QuadratureResult q = integrate_adaptive(f, breaks, spec.rel_tol, 0.9 * spec.abs_tol, spec.max_intervals);
    const double error = q.error + tail;
    const double tol = spec.tolerance_for(q.value);
    if (!q.converged || error > tol) not_met(label, q.value, error, tol, scale);
    return {q.value, error, q.evaluations, to_string(spec.rule)};
}

// int_0^inf x rho~^n dx (force) or (1/n) int_0^inf rho~^n dx (energy).
double series_term(Integral which, const CavityConfig& config, const QuadratureSpec& spec, int n, double cut,
                   double& error_sum, long& nodes) {
    const Integrand f = [&](double x) {
        const double v = std::pow(round_trip(config, x), n);
        return which == Integral::Force ? x * v : v;
    };
    const std::vector<double> breaks = breakpoints(cut, 1.0 / n);
    const QuadratureResult q =
        integrate_adaptive(f, breaks, 0.1 * spec.rel_tol, 0.1 * spec.abs_tol, spec.max_intervals);
    if (!q.converged) {
        std::ostringstream msg;
        msg << "series term " << n << " did not converge";
        throw ToleranceNotMet(msg.str(), q.value, q.error);
    }
    nodes += q.evaluations;
    const double scale = which == Integral::Force ? 1.0 : 1.0 / n;
    error_sum += q.error * scale;
    return q.value * scale;
}

struct SeriesOutcome {
    SeriesSum sum;
    double quad_error;
    long nodes;
};

SeriesOutcome rotated_series(Integral which, const CavityConfig& config, int n_max, const QuadratureSpec& spec,
                             SeriesTail mode) {
    spec.validate();
    require_causal(config, spec);
    if (n_max < 1) throw InvalidParameter("series needs n_max >= 1");
    const double decay = decay_rate(config);
    const double cut = cutoff(which, decay, spec.abs_tol);
    double quad_error = tail_bound(which, decay, cut);
    long nodes = 0;
    const auto term = [&](int n) { return series_term(which, config, spec, n, cut, quad_error, nodes); };
    SeriesSum sum = mode == SeriesTail::Richardson ? resum_series_richardson(term, n_max)
                                                   : sum_series_truncated(term, n_max);
    return {sum, quad_error, nodes};
}

}  // namespace

EnergyResult casimir_energy(const CavityConfig& config, const QuadratureSpec& spec) {
    const double scale = 1.0 / (4.0 * pi * config.distance());
    const RotatedIntegral r = rotated_integral(Integral::Energy, config, spec, scale);
    return {r.value * scale, r.error * scale, r.nodes, r.method, 0.0};
}

ForceResult casimir_force(const CavityConfig& config, const QuadratureSpec& spec) {
    const double scale = -1.0 / (4.0 * pi * config.distance() * config.distance());
    const RotatedIntegral r = rotated_integral(Integral::Force, config, spec, scale);
    return {r.value * scale, r.error * std::abs(scale), r.nodes, r.method, 0.0};
}

EnergyResult casimir_energy_real_axis(const CavityConfig& config, double k_max, const QuadratureSpec& spec) {
    spec.validate();
    if (!(std::isfinite(k_max) && k_max > 0.0)) throw InvalidParameter("real-axis cutoff k_max must be > 0");
    const Integrand f = [&](double k) { return std::arg(1.0 - round_trip_factor(config, k)); };

    // One panel per quarter period of e^{2ikL}; perfect-mirror resonances at
    // k = m pi / L then sit on panel edges.
    const double step = pi / (2.0 * config.distance());
    std::vector<double> breaks{0.0};
    while (breaks.back() + step < k_max) breaks.push_back(breaks.back() + step);
    breaks.push_back(k_max);
    const int budget = std::max(spec.max_intervals, 8 * static_cast<int>(breaks.size()));
    const QuadratureResult q = integrate_adaptive(f, breaks, spec.rel_tol, spec.abs_tol, budget);
    const double tol = spec.tolerance_for(q.value);
    if (!q.converged || q.error > tol) not_met("casimir_energy_real_axis", q.value, q.error, tol, 1.0 / (2.0 * pi));
    return {q.value / (2.0 * pi), q.error / (2.0 * pi), q.evaluations, "real-axis", 0.0};
}

ForceResult casimir_force_series(const CavityConfig& config, int n_max, const QuadratureSpec& spec,
                                 SeriesTail tail) {
    const SeriesOutcome s = rotated_series(Integral::Force, config, n_max, spec, tail);
    const double scale = 1.0 / (4.0 * pi * config.distance() * config.distance());
    const double error = (s.sum.error + s.quad_error) * scale;
    const char* method = tail == SeriesTail::Richardson ? "series-richardson" : "series-truncated";
    return {-s.sum.value * scale, error, s.nodes, method, -s.sum.tail * scale};
}

EnergyResult casimir_energy_series(const CavityConfig& config, int n_max, const QuadratureSpec& spec,
                                   SeriesTail tail) {
    const SeriesOutcome s = rotated_series(Integral::Energy, config, n_max, spec, tail);
    const double scale = 1.0 / (4.0 * pi * config.distance());
    const double error = (s.sum.error + s.quad_error) * scale;
    const char* method = tail == SeriesTail::Richardson ? "series-richardson" : "series-truncated";
    return {-s.sum.value * scale, error, s.nodes, method, -s.sum.tail * scale};
}

double perfect_mirror_force(double distance) {
    if (!(distance > 0.0)) throw InvalidParameter("perfect_mirror_force requires L > 0");
    return -pi / (24.0 * distance * distance);
}

double perfect_mirror_energy(double distance) {
    if (!(distance > 0.0)) throw InvalidParameter("perfect_mirror_energy requires L > 0");
    return -pi / (24.0 * distance);
}

double ideal_force_3d(double area, double distance) {
    if (!(area > 0.0) || !(distance > 0.0)) throw InvalidParameter("ideal_force_3d requires A > 0 and L > 0");
    const double l2 = distance * distance;
    return pi * pi / 240.0 * area / (l2 * l2);
}

ForceResult force_from_energy_fd(const CavityConfig& config, double h, const QuadratureSpec& spec) {
    const double l = config.distance();
    if (!(h > 0.0 && h < 0.1 * l)) {
        std::ostringstream msg;
        msg << "finite-difference step must satisfy 0 < h < L/10 (h = " << h << ", L = " << l << ")";
        throw InvalidParameter(msg.str());
    }
    const EnergyResult plus = casimir_energy(config.with_distance(l + h), spec);
    const EnergyResult minus = casimir_energy(config.with_distance(l - h), spec);
    return {-(plus.value - minus.value) / (2.0 * h), (plus.error + minus.error) / (2.0 * h),
            plus.nodes + minus.nodes, "finite-difference", 0.0};
}

}  // namespace casimir
