#pragma once

#include <functional>
#include <span>
#include <vector>

namespace casimir {

enum class QuadratureRule {
    Adaptive,       // Gauss-Kronrod 21 with global adaptive bisection
    GaussLaguerre,  // fixed nodes against the weight e^{-x}
};

const char* to_string(QuadratureRule rule) noexcept;

/// Accuracy request for the semi-infinite integrals of the engine.
struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    /// Panel budget for QuadratureRule::Adaptive.
    int max_intervals = 2000;
    /// Node count for QuadratureRule::GaussLaguerre (<= kMaxLaguerreNodes).
    int laguerre_nodes = 96;
    QuadratureRule rule = QuadratureRule::Adaptive;
    /// Permit contour rotation for models flagged non-causal.
    bool allow_noncausal = false;

    /// Throws InvalidParameter unless tolerances are positive and budgets >= 1.
    void validate() const;
    double tolerance_for(double value) const;
};

/// Panels narrower than this are never split. Integrable endpoint
/// singularities (log(x) at 0) are resolved down to this width.
inline constexpr double kMinPanelWidth = 1e-14;
inline constexpr int kMaxLaguerreNodes = 180;

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    long evaluations = 0;
    int intervals = 0;
    bool converged = false;
};

using Integrand = std::function<double(double)>;

/// One Gauss-Kronrod 21 point panel; returns the Kronrod value and sets
/// `error` to the QUADPACK-style estimate.
double gauss_kronrod21(const Integrand& f, double a, double b, double& error);

/// Globally adaptive integration over [breaks.front(), breaks.back()],
/// starting from the given panels. Always bisects the panel with the largest
/// error (ties go to the leftmost), so the result is deterministic. Stops
/// when the summed error is below max(abs_tol, rel_tol |I|), when the budget
/// is spent, or when only panels at kMinPanelWidth remain to be split.
QuadratureResult integrate_adaptive(const Integrand& f, std::span<const double> breaks, double rel_tol,
                                    double abs_tol, int max_intervals);

QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, double rel_tol,
                                    double abs_tol, int max_intervals);

struct LaguerreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Laguerre rule for int_0^inf e^{-x} f(x) dx.
LaguerreRule gauss_laguerre_rule(int n);

/// Applies the n-point rule and the n/2-point rule; the difference is the
/// reported error.
QuadratureResult integrate_laguerre(const Integrand& f_times_exp, int n);

}  // namespace casimir
