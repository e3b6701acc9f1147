#include "casimir/models.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

constexpr Complex kI{0.0, 1.0};

std::string format_param(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidParameter(what);
}

void check_pole(Complex k, Complex pole, const char* model) {
    if (std::abs(k - pole) < kPoleTolerance) {
        std::ostringstream msg;
        msg << model << " amplitude evaluated at its pole k = " << pole;
        throw PoleEncountered(msg.str());
    }
}

ScatteringMatrix symmetric_s(Complex r, Complex t) { return {t, r, r, t}; }

ScatteringMatrix eval_delta(const model::Delta& m, Complex k) {
    if (m.g == 0.0) return ScatteringMatrix::identity();
    check_pole(k, Complex{0.0, -0.5 * m.g}, "delta");
    const Complex den = 2.0 * kI * k - m.g;
    return symmetric_s(m.g / den, 2.0 * kI * k / den);
}

ScatteringMatrix eval_constant(const model::ConstantReflectivity& m) {
    if (m.rho == 0.0) return ScatteringMatrix::identity();
    // With r = rbar real and t = tbar, unitarity (r tbar^* + t rbar^* = 0)
    // forces t to be purely imaginary.
    return symmetric_s(m.rho, Complex{0.0, std::sqrt((1.0 - m.rho) * (1.0 + m.rho))});
}

// Square barrier on [-a/2, a/2]. With hbar = m = 1 the wave equation reads
// psi'' + (k^2 - U) psi = 0 inside, U = 2 v0. Matching psi and psi' at both
// faces gives, with q^2 = k^2 - U and s = sin(qa)/q,
//
//     D = 2k cos(qa) - i (2k^2 - U) s
//     r = rbar = -i U s e^{-ika} / D
//     t = tbar = 2k e^{-ika} / D
//
// Only even functions of q appear, so the branch of the square root is
// irrelevant. For |Im(qa)| large cos and sin are rescaled by exp(-|Im qa|)
// before they overflow; the factor cancels in r and is applied to t.
ScatteringMatrix eval_barrier(const model::RectBarrier& m, Complex k) {
    const double u = 2.0 * m.v0;
    const Complex q = std::sqrt(k * k - u);
    const Complex z = q * m.a;
    const double im = std::abs(z.imag());

    Complex cos_s, sinc_s;  // cos(z) and sin(z)/q, both times `scale`
    double scale = 1.0;
    if (im < 20.0) {
        cos_s = std::cos(z);
        sinc_s = (q == 0.0) ? Complex{m.a} : std::sin(z) / q;
    } else {
        scale = std::exp(-im);
        const Complex ep = std::exp(kI * z - im);
        const Complex em = std::exp(-kI * z - im);
        cos_s = 0.5 * (ep + em);
        sinc_s = (ep - em) / (2.0 * kI * q);
    }

    const Complex lhs = 2.0 * k * cos_s;
    const Complex rhs = kI * (2.0 * k * k - u) * sinc_s;
    const Complex den = lhs - rhs;
    if (std::abs(den) < kPoleTolerance * std::max(std::abs(lhs), std::abs(rhs))) {
        std::ostringstream msg;
        msg << "barrier amplitude evaluated at a pole near k = " << k;
        throw PoleEncountered(msg.str());
    }
    const Complex phase = std::exp(-kI * k * m.a);
    return symmetric_s(-kI * u * sinc_s * phase / den, 2.0 * k * phase * scale / den);
}

// Shunt inductance across an infinite line of impedance z0. With the
// e^{-i omega t} convention the shunt impedance is Z = -i omega l, the load
// seen by an incoming wave is z0 || Z, and the voltage reflection is
//
//     r = -z0 / (z0 + 2Z) = (z0/l) / (2ik - z0/l),    omega = k.
//
// Voltage is continuous across the shunt, so t = 1 + r. This is the delta
// form with g_eff = z0 / l > 0.
ScatteringMatrix eval_lc(const model::LcShunt& m, Complex k) {
    check_pole(k, Complex{0.0, -0.5 * m.z0 / m.l}, "lc");
    const Complex zs = -kI * k * m.l;
    const Complex den = m.z0 + 2.0 * zs;
    return symmetric_s(-m.z0 / den, 2.0 * zs / den);
}

}  // namespace

std::string ScattererModel::spec() const {
    std::string out = name_;
    for (std::size_t i = 0; i < params_.size(); ++i) {
        out += (i == 0 ? ':' : ',');
        out += params_[i].first + "=" + format_param(params_[i].second);
    }
    return out;
}

ScattererModel delta_scatterer(double g) {
    require(std::isfinite(g) && g >= 0.0, "delta: coupling g must be finite and >= 0 (got " +
                                              format_param(g) + ")");
    return {"delta", {{"g", g}}, model::Delta{g}, true, true, 0.0};
}

ScattererModel perfect_mirror() { return {"perfect", {}, model::Perfect{}, true, true, 0.0}; }

ScattererModel constant_reflectivity(double rho) {
    require(std::isfinite(rho) && rho >= -1.0 && rho <= 0.0,
            "const: rho must lie in [-1, 0] (got " + format_param(rho) + ")");
    return {"const", {{"rho", rho}}, model::ConstantReflectivity{rho}, true, false, 0.0};
}

ScattererModel rect_barrier_scatterer(double v0, double a) {
    require(std::isfinite(v0) && v0 > 0.0, "barrier: v0 must be > 0 (got " + format_param(v0) + ")");
    require(std::isfinite(a) && a > 0.0, "barrier: a must be > 0 (got " + format_param(a) + ")");
    return {"barrier", {{"v0", v0}, {"a", a}}, model::RectBarrier{v0, a}, true, true, 0.5 * a};
}

ScattererModel lc_shunt_scatterer(double z0, double shunt_l) {
    require(std::isfinite(z0) && z0 > 0.0, "lc: z0 must be > 0 (got " + format_param(z0) + ")");
    require(std::isfinite(shunt_l) && shunt_l > 0.0,
            "lc: l must be > 0 (got " + format_param(shunt_l) + ")");
    return {"lc", {{"z0", z0}, {"l", shunt_l}}, model::LcShunt{z0, shunt_l}, true, true, 0.0};
}

double lc_effective_coupling(double z0, double shunt_l) { return z0 / shunt_l; }

ScatteringMatrix eval(const ScattererModel& model, Complex k) {
    if (!(k.imag() >= 0.0)) {
        std::ostringstream msg;
        msg << model.name() << ": evaluation requires Im k >= 0 (got k = " << k << ")";
        throw EvaluationDomain(msg.str());
    }
    return std::visit(
        [&](const auto& m) -> ScatteringMatrix {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, model::Delta>) {
                return eval_delta(m, k);
            } else if constexpr (std::is_same_v<M, model::Perfect>) {
                return {0.0, -1.0, -1.0, 0.0};
            } else if constexpr (std::is_same_v<M, model::ConstantReflectivity>) {
                return eval_constant(m);
            } else if constexpr (std::is_same_v<M, model::RectBarrier>) {
                return eval_barrier(m, k);
            } else {
                return eval_lc(m, k);
            }
        },
        model.kind());
}

}  // namespace casimir
