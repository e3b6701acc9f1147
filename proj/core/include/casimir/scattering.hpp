#pragma once

#include <complex>

namespace casimir {

using Complex = std::complex<double>;

/// Plain 2x2 complex matrix, row-major.
struct ComplexMat2 {
    Complex m11{1.0}, m12{0.0}, m21{0.0}, m22{1.0};

    static constexpr ComplexMat2 identity() { return {}; }
    static constexpr ComplexMat2 diagonal(Complex a, Complex d) { return {a, 0.0, 0.0, d}; }

    Complex det() const { return m11 * m22 - m12 * m21; }
    bool is_finite() const;
    ComplexMat2 adjoint() const;
    ComplexMat2 inverse() const;

    friend bool operator==(const ComplexMat2&, const ComplexMat2&) = default;
};

ComplexMat2 mat2_mul(const ComplexMat2& a, const ComplexMat2& b);
inline ComplexMat2 operator*(const ComplexMat2& a, const ComplexMat2& b) { return mat2_mul(a, b); }

/// Largest entry modulus.
double max_abs(const ComplexMat2& m);
double max_abs_diff(const ComplexMat2& a, const ComplexMat2& b);

/// Scattering matrix in the field-theory convention: transmission on the
/// diagonal, reflection off the diagonal,
///
///     ( b+ )   ( t   rbar ) ( a+ )
///     ( a- ) = ( r   tbar ) ( b- )
///
/// where a is the region left of the scatterer and b the region to its right.
/// r and t belong to waves incident from the left, rbar and tbar to waves
/// incident from the right.
struct ScatteringMatrix {
    Complex t{1.0};
    Complex rbar{0.0};
    Complex r{0.0};
    Complex tbar{1.0};

    static constexpr ScatteringMatrix identity() { return {}; }
    static ScatteringMatrix from_matrix(const ComplexMat2& m) { return {m.m11, m.m12, m.m21, m.m22}; }
    ComplexMat2 matrix() const { return {t, rbar, r, tbar}; }

    friend bool operator==(const ScatteringMatrix&, const ScatteringMatrix&) = default;
};

/// Maps the amplitudes (a+, a-) left of a scatterer onto (b+, b-) on its
/// right. Scatterers in series compose by left multiplication.
struct TransferMatrix {
    ComplexMat2 m;

    static constexpr TransferMatrix identity() { return {}; }
    Complex det() const { return m.det(); }

    friend bool operator==(const TransferMatrix&, const TransferMatrix&) = default;
};

inline TransferMatrix operator*(const TransferMatrix& a, const TransferMatrix& b) { return {a.m * b.m}; }

/// Below this modulus a transmission amplitude (or T22) is treated as zero.
inline constexpr double kDegenerateThreshold = 1e-12;

/// max-norm of S^dagger S - 1. Only meaningful for S evaluated at real k.
double unitarity_residual(const ScatteringMatrix& s);

/// t*tbar - r*rbar.
Complex det_s(const ScatteringMatrix& s);

/// |det S + r / rbar^*|, the residual of the determinant identity for unitary
/// S. Requires rbar != 0.
double det_identity_residual(const ScatteringMatrix& s);

/// T = (1/tbar) [[det S, rbar], [-r, 1]]. Throws DegenerateConversion when
/// |tbar| < kDegenerateThreshold (a non-transmitting mirror).
TransferMatrix s_to_transfer(const ScatteringMatrix& s);

/// S = (1/T22) [[det T, T12], [-T21, 1]]. Throws DegenerateConversion when
/// |T22| < kDegenerateThreshold.
ScatteringMatrix transfer_to_s(const TransferMatrix& t);

}  // namespace casimir
