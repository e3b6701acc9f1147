#pragma once

#include <functional>
#include <span>

namespace casimir {

struct Extrapolation {
    double value = 0.0;
    double error = 0.0;
    int order = 0;  // number of eliminated powers of h
};

/// Polynomial (Neville) extrapolation of values(h) to h = 0. The table is
/// built level by level; the estimate is the diagonal entry whose change from
/// the previous level is smallest, and that change is the reported error.
/// Needs at least two points with distinct h.
Extrapolation richardson_limit(std::span<const double> h, std::span<const double> values);

/// Partial sums of a positive series whose terms fall off algebraically.
struct SeriesSum {
    double partial = 0.0;   // sum of the first `terms` terms
    double value = 0.0;     // partial sum plus the tail estimate
    double tail = 0.0;      // value - partial
    double error = 0.0;     // uncertainty of `value` from the tail treatment
    int terms = 0;
};

/// Sums term(1..n_max) and extrapolates the partial sums S_N at
/// N = n_max, n_max/2, n_max/4, ... (N >= 4) in h = 1/N.
SeriesSum resum_series_richardson(const std::function<double(int)>& term, int n_max);

/// Plain truncation. The tail is estimated as N * a_N, the leading
/// behaviour of a series with terms ~ 1/n^2, and reported as the error.
SeriesSum sum_series_truncated(const std::function<double(int)>& term, int n_max);

}  // namespace casimir
