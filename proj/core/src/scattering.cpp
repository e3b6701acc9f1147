#include "casimir/scattering.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DegenerateConversion: return "DegenerateConversion";
        case ErrorKind::CavityResonance: return "CavityResonance";
        case ErrorKind::InvalidParameter: return "InvalidParameter";
        case ErrorKind::EvaluationDomain: return "EvaluationDomain";
        case ErrorKind::PoleEncountered: return "PoleEncountered";
        case ErrorKind::ToleranceNotMet: return "ToleranceNotMet";
        case ErrorKind::NonCausalModel: return "NonCausalModel";
        case ErrorKind::NonUnitaryInput: return "NonUnitaryInput";
        case ErrorKind::CutoffTooCoarse: return "CutoffTooCoarse";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

bool Error::is_numerical() const noexcept {
    switch (kind_) {
        case ErrorKind::InvalidParameter:
        case ErrorKind::ParseError:
        case ErrorKind::NonCausalModel:
            return false;
        default:
            return true;
    }
}

bool ComplexMat2::is_finite() const { return finite(m11) && finite(m12) && finite(m21) && finite(m22); }

ComplexMat2 ComplexMat2::adjoint() const {
    return {std::conj(m11), std::conj(m21), std::conj(m12), std::conj(m22)};
}

ComplexMat2 ComplexMat2::inverse() const {
    const Complex d = det();
    if (std::abs(d) == 0.0) {
        throw DegenerateConversion("singular 2x2 matrix has no inverse");
    }
    return {m22 / d, -m12 / d, -m21 / d, m11 / d};
}

ComplexMat2 mat2_mul(const ComplexMat2& a, const ComplexMat2& b) {
    return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
}

double max_abs(const ComplexMat2& m) {
    return std::max({std::abs(m.m11), std::abs(m.m12), std::abs(m.m21), std::abs(m.m22)});
}

double max_abs_diff(const ComplexMat2& a, const ComplexMat2& b) {
    return std::max({std::abs(a.m11 - b.m11), std::abs(a.m12 - b.m12), std::abs(a.m21 - b.m21),
                     std::abs(a.m22 - b.m22)});
}

double unitarity_residual(const ScatteringMatrix& s) {
    const ComplexMat2 m = s.matrix();
    return max_abs_diff(m.adjoint() * m, ComplexMat2::identity());
}

Complex det_s(const ScatteringMatrix& s) { return s.t * s.tbar - s.r * s.rbar; }

double det_identity_residual(const ScatteringMatrix& s) {
    return std::abs(det_s(s) + s.r / std::conj(s.rbar));
}

TransferMatrix s_to_transfer(const ScatteringMatrix& s) {
    if (std::abs(s.tbar) < kDegenerateThreshold) {
        std::ostringstream msg;
        msg << "scattering matrix with |tbar| = " << std::abs(s.tbar)
            << " has no transfer-matrix representation";
        throw DegenerateConversion(msg.str());
    }
    const Complex inv = 1.0 / s.tbar;
    return {{det_s(s) * inv, s.rbar * inv, -s.r * inv, inv}};
}

ScatteringMatrix transfer_to_s(const TransferMatrix& t) {
    if (std::abs(t.m.m22) < kDegenerateThreshold) {
        std::ostringstream msg;
        msg << "transfer matrix with |T22| = " << std::abs(t.m.m22) << " cannot be converted";
        throw DegenerateConversion(msg.str());
    }
    const Complex inv = 1.0 / t.m.m22;
    return {t.det() * inv, t.m.m12 * inv, -t.m.m21 * inv, inv};
}

}  // namespace casimir
