#include "casimir/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <queue>
#include <sstream>

#include "casimir/errors.hpp"

namespace casimir {

namespace {

// QUADPACK qk21 abscissae and weights. Odd entries of kXgk are the 10-point
// Gauss nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208067778312, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
    double a, b, value, error;
};

struct LargerError {
    bool operator()(const Panel& x, const Panel& y) const {
        if (x.error != y.error) return x.error < y.error;
        return x.a > y.a;
    }
};

}  // namespace

const char* to_string(QuadratureRule rule) noexcept {
    switch (rule) {
        case QuadratureRule::Adaptive: return "adaptive-gk21";
        case QuadratureRule::GaussLaguerre: return "gauss-laguerre";
    }
    return "unknown";
}

void QuadratureSpec::validate() const {
    std::ostringstream msg;
    if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
        msg << "quadrature tolerances must be positive (rel " << rel_tol << ", abs " << abs_tol << ")";
    } else if (max_intervals < 1) {
        msg << "quadrature panel budget must be >= 1 (got " << max_intervals << ")";
    } else if (laguerre_nodes < 2 || laguerre_nodes > kMaxLaguerreNodes) {
        msg << "laguerre node count must lie in [2, " << kMaxLaguerreNodes << "] (got " << laguerre_nodes << ")";
    } else {
        return;
    }
    throw InvalidParameter(msg.str());
}

double QuadratureSpec::tolerance_for(double value) const { return std::max(abs_tol, rel_tol * std::abs(value)); }

double gauss_kronrod21(const Integrand& f, double a, double b, double& error) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    std::array<double, 21> fv{};
    const double fc = f(centre);
    double resk = fc * kWgk[10];
    double resg = 0.0;
    double resabs = std::abs(resk);
    for (int j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        const double f1 = f(centre - dx);
        const double f2 = f(centre + dx);
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        resk += kWgk[j] * (f1 + f2);
        resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    const double mean = 0.5 * resk;
    double resasc = kWgk[10] * std::abs(fc - mean);
    for (int j = 0; j < 10; ++j) {
        resasc += kWgk[j] * (std::abs(fv[2 * j] - mean) + std::abs(fv[2 * j + 1] - mean));
    }

    const double result = resk * half;
    resabs *= std::abs(half);
    resasc *= std::abs(half);
    error = std::abs((resk - resg) * half);
    if (resasc != 0.0 && error != 0.0) {
        error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
        error = std::max(50.0 * eps * resabs, error);
    }
    return result;
}

QuadratureResult integrate_adaptive(const Integrand& f, std::span<const double> breaks, double rel_tol,
                                    double abs_tol, int max_intervals) {
    QuadratureResult out;
    std::priority_queue<Panel, std::vector<Panel>, LargerError> open;
    std::vector<Panel> frozen;  // at minimum width, never split again
    double total = 0.0;
    double total_err = 0.0;

    auto add = [&](double a, double b) {
        Panel p{a, b, 0.0, 0.0};
        p.value = gauss_kronrod21(f, a, b, p.error);
        out.evaluations += 21;
        total += p.value;
        total_err += p.error;
        if (b - a <= kMinPanelWidth) {
            frozen.push_back(p);
        } else {
            open.push(p);
        }
    };

    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        if (breaks[i + 1] > breaks[i]) add(breaks[i], breaks[i + 1]);
    }

    while (true) {
        const int count = static_cast<int>(open.size() + frozen.size());
        if (total_err <= std::max(abs_tol, rel_tol * std::abs(total))) {
            out.converged = true;
            break;
        }
        if (open.empty() || count >= max_intervals) break;
        const Panel worst = open.top();
        open.pop();
        total -= worst.value;
        total_err -= worst.error;
        const double mid = 0.5 * (worst.a + worst.b);
        add(worst.a, mid);
        add(mid, worst.b);
    }

    // Re-sum from scratch; the running totals drift after many updates.
    total = 0.0;
    total_err = 0.0;
    std::vector<Panel> all(frozen);
    while (!open.empty()) {
        all.push_back(open.top());
        open.pop();
    }
    std::sort(all.begin(), all.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    for (const Panel& p : all) {
        total += p.value;
        total_err += p.error;
    }
    out.value = total;
    out.error = total_err;
    out.intervals = static_cast<int>(all.size());
    if (!out.converged && total_err <= std::max(abs_tol, rel_tol * std::abs(total))) out.converged = true;
    return out;
}

QuadratureResult integrate_adaptive(const Integrand& f, double a, double b, double rel_tol, double abs_tol,
                                    int max_intervals) {
    const std::array<double, 2> breaks{a, b};
    return integrate_adaptive(f, breaks, rel_tol, abs_tol, max_intervals);
}

LaguerreRule gauss_laguerre_rule(int n) {
    if (n < 1 || n > kMaxLaguerreNodes) {
        throw InvalidParameter("gauss_laguerre_rule: n must lie in [1, " + std::to_string(kMaxLaguerreNodes) + "]");
    }
    LaguerreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double dn = n;
    double z = 0.0;
    for (int i = 0; i < n; ++i) {
        // Initial guesses as in the classic gaulag routine.
        if (i == 0) {
            z = 3.0 / (1.0 + 2.4 * dn);
        } else if (i == 1) {
            z += 15.0 / (1.0 + 2.5 * dn);
        } else {
            const double ai = i - 1;
            z += (1.0 + 2.55 * ai) / (1.9 * ai) * (z - rule.nodes[i - 2]);
        }
        // L_n(z) and L_{n-1}(z) by the three-term recurrence, in extended
        // precision: it cancels badly near the smallest roots.
        using Ext = long double;
        const auto laguerre = [n](Ext x, Ext& p1, Ext& p2) {
            p1 = 1.0L;
            p2 = 0.0L;
            for (int j = 1; j <= n; ++j) {
                const Ext p3 = p2;
                p2 = p1;
                p1 = ((2.0L * j - 1.0L - x) * p2 - (j - 1.0L) * p3) / j;
            }
        };
        Ext x = z, p1 = 0.0L, p2 = 0.0L;
        for (int it = 0; it < 100; ++it) {
            laguerre(x, p1, p2);
            const Ext pp = n * (p1 - p2) / x;
            const Ext x1 = x;
            x = x1 - p1 / pp;
            if (std::abs(x - x1) <= 1e-18L * x) break;
        }
        laguerre(x, p1, p2);
        z = static_cast<double>(x);
        rule.nodes[i] = z;
        // w = z / (n L_{n-1}(z))^2 at a root of L_n
        rule.weights[i] = static_cast<double>(x / (n * p2 * n * p2));
    }
    return rule;
}

namespace {

const LaguerreRule& cached_laguerre_rule(int n) {
    static std::mutex lock;
    static std::map<int, LaguerreRule> rules;
    const std::lock_guard<std::mutex> guard(lock);
    auto it = rules.find(n);
    if (it == rules.end()) it = rules.emplace(n, gauss_laguerre_rule(n)).first;
    return it->second;
}

}  // namespace

QuadratureResult integrate_laguerre(const Integrand& f_times_exp, int n) {
    auto apply = [&](const LaguerreRule& rule) {
        double sum = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            if (rule.weights[i] == 0.0) continue;
            sum += rule.weights[i] * f_times_exp(rule.nodes[i]);
        }
        return sum;
    };
    const LaguerreRule& fine = cached_laguerre_rule(n);
    const LaguerreRule& coarse = cached_laguerre_rule(std::max(1, n / 2));
    QuadratureResult out;
    out.value = apply(fine);
    out.error = std::abs(out.value - apply(coarse));
    out.evaluations = n + std::max(1, n / 2);
    out.intervals = 1;
    out.converged = true;
    return out;
}

}  // namespace casimir
