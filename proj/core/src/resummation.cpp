#include "casimir/resummation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "casimir/errors.hpp"

namespace casimir {

Extrapolation richardson_limit(std::span<const double> h, std::span<const double> values) {
    const std::size_t n = h.size();
    if (n < 2 || values.size() != n) {
        throw InvalidParameter("richardson_limit needs at least two (h, value) pairs");
    }
    std::vector<double> row(values.begin(), values.end());
    Extrapolation best{row.back(), std::numeric_limits<double>::infinity(), 0};
    double prev_diag = row[0];
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i) {
            const double h0 = h[i];
            const double h1 = h[i + level];
            if (h0 == h1) throw InvalidParameter("richardson_limit: duplicate h");
            row[i] = (h0 * row[i + 1] - h1 * row[i]) / (h0 - h1);
        }
        const double diag = row[0];
        const double change = std::abs(diag - prev_diag);
        if (change < best.error) best = {diag, change, static_cast<int>(level)};
        prev_diag = diag;
    }
    // Roundoff in the table is never below a few ulps of the result.
    best.error = std::max(best.error, 8.0 * std::numeric_limits<double>::epsilon() * std::abs(best.value));
    return best;
}

SeriesSum resum_series_richardson(const std::function<double(int)>& term, int n_max) {
    if (n_max < 8) throw InvalidParameter("series resummation needs n_max >= 8");
    std::vector<double> partial(static_cast<std::size_t>(n_max) + 1, 0.0);
    for (int n = 1; n <= n_max; ++n) partial[n] = partial[n - 1] + term(n);

    // Finest first: level l of the Neville table then combines the l+1
    // largest partial sums.
    std::vector<double> hs, ss;
    for (int N = n_max; N >= 4; N /= 2) {
        hs.push_back(1.0 / N);
        ss.push_back(partial[N]);
    }
    const Extrapolation ex = richardson_limit(hs, ss);

    SeriesSum out;
    out.terms = n_max;
    out.partial = partial[n_max];
    out.value = ex.value;
    out.tail = ex.value - out.partial;
    out.error = ex.error;
    return out;
}

SeriesSum sum_series_truncated(const std::function<double(int)>& term, int n_max) {
    if (n_max < 1) throw InvalidParameter("series truncation needs n_max >= 1");
    SeriesSum out;
    double last = 0.0;
    for (int n = 1; n <= n_max; ++n) {
        last = term(n);
        out.partial += last;
    }
    out.terms = n_max;
    out.value = out.partial;
    out.tail = 0.0;
    out.error = std::abs(last) * n_max;
    return out;
}

}  // namespace casimir
