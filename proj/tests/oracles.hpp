#pragma once

// Reference computations that share no code with the library: wave matching
// at interfaces with Eigen matrices, brute-force trapezoid sums, and values
// frozen from 40-digit arbitrary-precision quadrature.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::Matrix2cd;

// psi = A e^{i q x} + B e^{-i q x}; rows are psi and psi' at x.
inline Mat wave_basis(cplx q, double x) {
    const cplx i{0.0, 1.0};
    const cplx e = std::exp(i * q * x);
    Mat m;
    m << e, 1.0 / e, i * q * e, -i * q / e;
    return m;
}

// Transfer matrix (amplitudes left -> right) for a potential step sequence:
// regions with wavenumbers q[0..n], interfaces at x[0..n-1].
template <std::size_t N>
Mat layered_transfer(const std::array<cplx, N + 1>& q, const std::array<double, N>& x) {
    Mat t = Mat::Identity();
    for (std::size_t j = 0; j < N; ++j) t = wave_basis(q[j + 1], x[j]).inverse() * wave_basis(q[j], x[j]) * t;
    return t;
}

// Delta potential g delta(x - x0) (psi' jumps by g psi): from the matching
// conditions, in the plane-wave basis about the origin.
inline Mat delta_transfer(double g, cplx k, double x0 = 0.0) {
    const cplx i{0.0, 1.0};
    const cplx e = g / (2.0 * i * k);
    Mat t;
    t << 1.0 + e, e, -e, 1.0 - e;
    Mat shift = Mat::Zero();
    shift(0, 0) = std::exp(i * k * x0);
    shift(1, 1) = std::exp(-i * k * x0);
    return shift.inverse() * t * shift;
}

// Square barrier of height u on [-a/2, a/2] (psi'' = (u - k^2) psi).
inline Mat barrier_transfer(double u, double a, cplx k) {
    const cplx q = std::sqrt(cplx(k * k - u));
    return layered_transfer<2>({k, q, k}, {-0.5 * a, 0.5 * a});
}

struct Amplitudes {
    cplx t, rbar, r, tbar;
};

// Left incidence (1, r) -> (t, 0); right incidence (0, tbar) <- (rbar, 1).
inline Amplitudes amplitudes(const Mat& tm) {
    const cplx r = -tm(1, 0) / tm(1, 1);
    const cplx t = tm(0, 0) + tm(0, 1) * r;
    const cplx tbar = 1.0 / tm(1, 1);
    const cplx rbar = tm(0, 1) * tbar;
    return {t, rbar, r, tbar};
}

inline cplx det_s(const Amplitudes& a) { return a.t * a.tbar - a.r * a.rbar; }

// Two delta mirrors with gamma_j = g_j L on the rotated axis:
// rho~(x) = gamma1 gamma2 e^{-x} / ((x + gamma1)(x + gamma2)).
inline double rho_tilde(double gamma1, double gamma2, double x) {
    return std::exp(-x - std::log1p(x / gamma1) - std::log1p(x / gamma2));
}

// int_0^80 x rho~/(1 - rho~) dx, plain trapezoid with 10^6 panels.
inline double trapezoid_force_integral(double gamma1, double gamma2) {
    constexpr int n = 1'000'000;
    constexpr double b = 80.0;
    const double h = b / n;
    const auto f = [&](double x) {
        if (x == 0.0) return 1.0 / (1.0 + 1.0 / gamma1 + 1.0 / gamma2);
        const double phi = x + std::log1p(x / gamma1) + std::log1p(x / gamma2);
        return x * std::exp(-phi) / -std::expm1(-phi);
    };
    double s = 0.5 * (f(0.0) + f(b));
    for (int i = 1; i < n; ++i) s += f(i * h);
    return s * h;
}

// int_0^80 ln(1 - rho~) dx. ln(1 - rho~) = ln x + ln((1 - rho~)/x); the
// first part is integrated exactly, the smooth remainder by trapezoid.
inline double trapezoid_energy_integral(double gamma1, double gamma2) {
    constexpr int n = 1'000'000;
    constexpr double b = 80.0;
    const double h = b / n;
    const auto smooth = [&](double x) {
        if (x == 0.0) return std::log(1.0 + 1.0 / gamma1 + 1.0 / gamma2);
        const double phi = x + std::log1p(x / gamma1) + std::log1p(x / gamma2);
        return std::log(-std::expm1(-phi) / x);
    };
    double s = 0.5 * (smooth(0.0) + smooth(b));
    for (int i = 1; i < n; ++i) s += smooth(i * h);
    return s * h + (b * std::log(b) - b);
}

// Frozen 40-digit values of I(gamma) = int_0^inf x rho~/(1 - rho~) dx and
// J(gamma) = int_0^inf ln(1 - rho~) dx for equal delta mirrors.
struct Frozen {
    double gamma;
    double force_integral;
    double energy_integral;
};
inline constexpr Frozen kFrozen[] = {
    {0.1, 0.01462486510475403265, -0.11574772516876351671},
    {1.0, 0.28031727075566057027, -0.63342440624099666691},
    {2.0, 0.51559778320751725054, -0.88912361782268140872},
    {10.0, 1.1730497761723737157, -1.3833395294608296469},
};

}  // namespace oracle
