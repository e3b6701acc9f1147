#include "casimir/modes.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

using std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

// Below this |1 - rho| a lossless cavity is taken to sit on a resonance.
constexpr double kOnResonance = 1e-9;

// Neumaier compensated sum.
class Accumulator {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double wrap(double a) { return std::remainder(a, 2.0 * pi); }

class PhaseTracker {
public:
    double update(double wrapped) {
        if (!started_) {
            started_ = true;
            phase_ = wrapped;
            last_step_ = 0.0;
            return phase_;
        }
        last_step_ = wrap(wrapped - wrap(phase_));
        phase_ += last_step_;
        return phase_;
    }
    double last_step() const { return last_step_; }

private:
    bool started_ = false;
    double phase_ = 0.0;
    double last_step_ = 0.0;
};

[[noreturn]] void too_coarse(double k, double jump) {
    std::ostringstream msg;
    msg << "phase of det S jumps by " << jump << " rad near k = " << k
        << "; increase the box resolution or length";
    throw CutoffTooCoarse(msg.str());
}

}  // namespace

void BoxSpec::validate() const {
    std::ostringstream msg;
    if (!(length > 0.0) || !std::isfinite(length)) {
        msg << "box length must be > 0 (got " << length << ")";
    } else if (!(k_max > 0.0) || !std::isfinite(k_max)) {
        msg << "box cutoff k_max must be > 0 (got " << k_max << ")";
    } else if (resolution < 1) {
        msg << "box resolution must be >= 1 (got " << resolution << ")";
    } else {
        return;
    }
    throw InvalidParameter(msg.str());
}

BranchPair eigen_branches(const ScatteringMatrix& s) {
    const Complex half_trace = 0.5 * (s.t + s.tbar);
    const Complex root = std::sqrt(half_trace * half_trace - det_s(s));
    return {half_trace + root, half_trace - root};
}

double wavenumber_shift_total(const ScatteringMatrix& s, double box_length) {
    if (!(box_length > 0.0)) throw InvalidParameter("box length must be > 0");
    const Complex d = det_s(s);
    if (std::abs(std::abs(d) - 1.0) > 1e-10) {
        std::ostringstream msg;
        msg << "|det S| = " << std::abs(d) << " differs from 1; the wavenumber shift would not be real";
        throw NonUnitaryInput(msg.str());
    }
    // (i / Lbox) ln det S with ln det S = i arg det S.
    return -std::arg(d) / box_length;
}

ModeSum mode_sum_breakdown(const CavityConfig& config, const BoxSpec& box) {
    box.validate();
    const double length = config.distance();
    if (box.length < 50.0 * length) {
        std::ostringstream msg;
        msg << "box length " << box.length << " must be at least 50 L = " << 50.0 * length;
        throw InvalidParameter(msg.str());
    }

    const double spacing = 2.0 * pi / box.length;
    const double step = spacing / box.resolution;
    // exp(-37) < 1e-16: the Gaussian weight is negligible beyond.
    const double k_end = box.cutoff == CutoffProfile::Gaussian ? std::sqrt(37.0) * box.k_max : box.k_max;
    const long samples = static_cast<long>(std::floor(k_end / step));

    PhaseTracker left_phase, right_phase, cavity_phase;
    Accumulator mirrors, cavity;
    ModeSum out;
    for (long j = 1; j <= samples; ++j) {
        const double k = j * step;
        const ScatteringMatrix s1 = eval(config.left(), k);
        const ScatteringMatrix s2 = eval(config.right(), k);
        const Complex d1 = det_s(s1);
        const Complex d2 = det_s(s2);
        const Complex rho = s1.rbar * s2.r * std::exp(2.0 * kI * k * length);
        const Complex w = 1.0 - rho;
        const bool lossless = std::abs(rho) > 1.0 - kOnResonance;
        const bool on_resonance = lossless && std::abs(w) < kOnResonance;
        const double cav_arg = on_resonance ? 0.0 : std::arg(w);

        const double p1 = left_phase.update(std::arg(d1));
        const double p2 = right_phase.update(std::arg(d2));
        cavity_phase.update(cav_arg);
        for (double jump : {left_phase.last_step(), right_phase.last_step()}) {
            if (std::abs(jump) > 0.5 * pi) too_coarse(k, jump);
        }
        // The cavity factor contributes -2 arg(1 - rho); a change of more
        // than pi in it is unresolved unless the mirrors are lossless.
        if (!lossless && std::abs(cavity_phase.last_step()) > 0.5 * pi) {
            too_coarse(k, -2.0 * cavity_phase.last_step());
        }

        if (j % box.resolution != 0) continue;

        // Composite phase: principal arg of det S from the closed-form
        // ratio, lifted onto the branch of the tracked factorization. On a
        // lossless resonance the composite phase sits on the jump itself and
        // the midpoint is kept.
        const double tracked = p1 + p2 - 2.0 * cav_arg;
        double phase = tracked;
        if (!on_resonance) {
            const Complex composite = (d1 * d2 - s1.r * s2.rbar / std::exp(2.0 * kI * k * length)) / w;
            const double principal = std::arg(composite);
            phase = principal + 2.0 * pi * std::round((tracked - principal) / (2.0 * pi));
        }

        const double weight = box.cutoff == CutoffProfile::Gaussian ? std::exp(-(k / box.k_max) * (k / box.k_max)) : 1.0;
        // Delta k+ + Delta k- = (i/Lbox) ln det S = -phase / Lbox; the sum is
        // split into its single-mirror and cavity parts.
        const double mirror_part = -(p1 + p2) / box.length;
        mirrors.add(0.5 * weight * mirror_part);
        cavity.add(0.5 * weight * (-phase / box.length - mirror_part));
        ++out.modes;
    }
    out.single_mirrors = mirrors.value();
    out.cavity = cavity.value();
    out.total = out.single_mirrors + out.cavity;
    return out;
}

double mode_sum_energy_shift(const CavityConfig& config, const BoxSpec& box) {
    return mode_sum_breakdown(config, box).total;
}

double energy_difference_oracle(const ScattererModel& left, const ScattererModel& right, double la, double lb,
                                const BoxSpec& box) {
    const CavityConfig a(left, right, la);
    const CavityConfig b(left, right, lb);
    if (la == lb) return 0.0;
    return mode_sum_energy_shift(a, box) - mode_sum_energy_shift(b, box);
}

}  // namespace casimir
