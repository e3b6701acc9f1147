#include <doctest.h>

#include <random>

#include "casimir/casimir.hpp"
#include "oracles.hpp"

using namespace casimir;

namespace {

const Complex I{0.0, 1.0};

// det S of two delta mirrors at 0 and L from matching-condition transfer
// matrices.
Complex oracle_det(double g1, double g2, double length, Complex k) {
    const oracle::Mat t = oracle::delta_transfer(g2, k, length) * oracle::delta_transfer(g1, k);
    return oracle::det_s(oracle::amplitudes(t));
}

}  // namespace

TEST_CASE("free_propagation") {
    CHECK(free_propagation(2.0, 0.0).m == ComplexMat2::identity());
    const TransferMatrix p = free_propagation(1.5, I);
    CHECK(std::abs(p.m.m11 - std::exp(-1.5)) < 1e-15);
    CHECK(std::abs(p.m.m22 - std::exp(1.5)) < 1e-14);
    CHECK(p.m.m12 == Complex(0.0));
    CHECK_THROWS_AS(free_propagation(-1.0, 1.0), InvalidParameter);
}

TEST_CASE("compose_adjacent") {
    const ScatteringMatrix s = eval(delta_scatterer(1.3), 0.7);
    CHECK(max_abs_diff(compose_adjacent(s, ScatteringMatrix::identity()).matrix(), s.matrix()) < 1e-15);
    CHECK(max_abs_diff(compose_adjacent(ScatteringMatrix::identity(), s).matrix(), s.matrix()) < 1e-15);

    const ScatteringMatrix d = eval(delta_scatterer(1.0), 1.0);
    const ScatteringMatrix c = compose_adjacent(d, d);
    CHECK(unitarity_residual(c) < 1e-12);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> lg(-1.0, 2.0), lk(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        const double k = std::pow(10.0, lk(rng));
        const ScatteringMatrix a = eval(delta_scatterer(std::pow(10.0, lg(rng))), k);
        const ScatteringMatrix b = eval(rect_barrier_scatterer(std::pow(10.0, lg(rng)), 0.2), k);
        const ScatteringMatrix closed = compose_adjacent(a, b);
        const ScatteringMatrix via_t = transfer_to_s(s_to_transfer(b) * s_to_transfer(a));
        // The transfer route rounds at eps / |tbar1 tbar2|; the closed form
        // does not, so the comparison is loosened only for opaque pairs.
        const double cond = 1.0 / std::abs(a.tbar * b.tbar);
        CAPTURE(k);
        CHECK(max_abs_diff(closed.matrix(), via_t.matrix()) < 1e-12 + 4.0 * std::numeric_limits<double>::epsilon() * cond);
        CHECK(unitarity_residual(closed) < 1e-11);
    }

    const ScatteringMatrix p = eval(perfect_mirror(), 1.0);
    CHECK_THROWS_AS(compose_adjacent(p, p), CavityResonance);
}

TEST_CASE("cavity_smatrix") {
    const ScattererModel d1 = delta_scatterer(1.0);
    const CavityConfig c(d1, d1, 1.0);
    CHECK(unitarity_residual(cavity_smatrix(c, 1.0)) < 1e-12);

    const CavityConfig transparent(delta_scatterer(2.0), delta_scatterer(0.0), 1.7);
    for (double k : {0.3, 1.0, 4.0}) {
        CHECK(std::abs(det_s(cavity_smatrix(transparent, k)) - det_s(eval(delta_scatterer(2.0), k))) < 1e-14);
    }

    // L -> 0 recovers the adjacent composition's determinant.
    const CavityConfig tight(delta_scatterer(2.0), delta_scatterer(0.7), 1e-12);
    const Complex adj = det_s(compose_adjacent(eval(delta_scatterer(2.0), 1.0), eval(delta_scatterer(0.7), 1.0)));
    CHECK(std::abs(det_s(cavity_smatrix(tight, 1.0)) - adj) < 1e-11);

    // Non-transmitting mirrors have no transfer matrix but compose fine.
    const CavityConfig mirrors(perfect_mirror(), delta_scatterer(1.0), 1.0);
    CHECK(std::abs(det_s(cavity_smatrix(mirrors, 1.0)) - cavity_det_s(mirrors, 1.0)) < 1e-14);
    CHECK(unitarity_residual(cavity_smatrix(mirrors, 1.0)) < 1e-15);
    const CavityConfig pp(perfect_mirror(), perfect_mirror(), 1.0);
    CHECK_THROWS_AS(cavity_smatrix(pp, std::numbers::pi), CavityResonance);
}

TEST_CASE("cavity_det_s matches the matching-condition oracle") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> lg(-1.0, 2.0), lk(-2.0, 2.0), ll(0.1, 5.0);
    for (int i = 0; i < 200; ++i) {
        const double g1 = std::pow(10.0, lg(rng)), g2 = std::pow(10.0, lg(rng)), len = ll(rng);
        const Complex k = std::pow(10.0, lk(rng)) * (i % 3 == 0 ? Complex(1.0, 0.3) : Complex(1.0));
        const CavityConfig c(delta_scatterer(g1), delta_scatterer(g2), len);
        const Complex ref = oracle_det(g1, g2, len, k);
        CHECK(std::abs(cavity_det_s(c, k) - ref) < 1e-11 * std::max(1.0, std::abs(ref)));
        CHECK(std::abs(det_s(cavity_smatrix(c, k)) - ref) < 1e-11 * std::max(1.0, std::abs(ref)));
    }
}

TEST_CASE("cavity_det_s examples") {
    const CavityConfig pp(perfect_mirror(), perfect_mirror(), 1.0);
    for (double k : {0.2, 1.0, 2.9}) CHECK(std::abs(std::abs(cavity_det_s(pp, k)) - 1.0) < 1e-14);
    CHECK_THROWS_AS(cavity_det_s(pp, std::numbers::pi), CavityResonance);

    const CavityConfig transparent(delta_scatterer(2.0), delta_scatterer(0.0), 1.0);
    CHECK(std::abs(cavity_det_s(transparent, 1.0) - det_s(eval(delta_scatterer(2.0), 1.0))) < 1e-15);

    const CavityConfig dd(delta_scatterer(2.0), delta_scatterer(2.0), 1.0);
    CHECK(std::abs(cavity_det_s(dd, 1.0) - cavity_det_s_factorized(dd, 1.0)) < 1e-12);
}

TEST_CASE("property: ratio and factorized determinants, pure phase factor") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> lg(-2.0, 3.0), lk(-3.0, 3.0), ll(0.05, 10.0);
    for (int pair = 0; pair < 10; ++pair) {
        const CavityConfig c(delta_scatterer(std::pow(10.0, lg(rng))), delta_scatterer(std::pow(10.0, lg(rng))),
                             ll(rng));
        for (int i = 0; i < 100; ++i) {
            const double k = std::pow(10.0, lk(rng));
            const Complex ratio = cavity_det_s(c, k);
            CHECK(std::abs(ratio - cavity_det_s_factorized(c, k)) < 1e-12 * std::abs(ratio));
            const Complex rho = round_trip_factor(c, k);
            CHECK(std::abs(rho) <= 1.0 + 1e-15);
            CHECK(std::abs(std::abs((1.0 - std::conj(rho)) / (1.0 - rho)) - 1.0) < 1e-12);
            CHECK(unitarity_residual(cavity_smatrix(c, k)) < 1e-11);
        }
    }
}

TEST_CASE("round_trip on the rotated axis") {
    const CavityConfig pp(perfect_mirror(), perfect_mirror(), 2.0);
    for (double x : {0.0, 0.5, 3.0, 20.0}) CHECK(round_trip(pp, x) == doctest::Approx(std::exp(-x)).epsilon(1e-15));
    CHECK(round_trip(pp, 800.0) == 0.0);

    const double g = 0.8, len = 2.5, gamma = g * len;
    const CavityConfig dd(delta_scatterer(g), delta_scatterer(g), len);
    for (double x : {1e-6, 0.1, 1.0, 7.0, 30.0}) {
        const double expected = gamma * gamma * std::exp(-x) / ((x + gamma) * (x + gamma));
        CHECK(round_trip(dd, x) == doctest::Approx(expected).epsilon(1e-14));
        CHECK(round_trip(dd, x) < std::exp(-x));
        const RotatedRoundTrip rt = rotated_round_trip(dd, x);
        CHECK(rt.complement == doctest::Approx(1.0 - rt.value).epsilon(1e-14));
    }
    // Complement stays accurate where 1 - rho~ cancels.
    const RotatedRoundTrip tiny = rotated_round_trip(pp, 1e-13);
    CHECK(tiny.complement == doctest::Approx(1e-13).epsilon(1e-12));

    const CavityConfig bb(rect_barrier_scatterer(3.0, 0.3), rect_barrier_scatterer(3.0, 0.3), 1.0);
    for (double x : {50.0, 200.0, 300.0}) {
        const RotatedRoundTrip rt = rotated_round_trip(bb, x);
        CHECK(rt.reflect > 1.0);
        CHECK(rt.complement == doctest::Approx(1.0 - rt.value).epsilon(1e-14));
    }
}

TEST_CASE("round_trip_expansion") {
    const ScatteringMatrix a = eval(delta_scatterer(1.0), 1.0);
    const ScatteringMatrix b = eval(delta_scatterer(1.0), 1.0);
    const ScatteringMatrix single = round_trip_expansion(a, b, 0);
    CHECK(std::abs(single.t - a.t * b.t) < 1e-15);
    CHECK(std::abs(single.r - (a.r + b.r * a.t * a.tbar)) < 1e-15);

    const ScatteringMatrix closed = compose_adjacent(a, b);
    double prev = 1.0;
    for (int n : {0, 1, 2, 5, 10, 20, 30}) {
        const double err = max_abs_diff(round_trip_expansion(a, b, n).matrix(), closed.matrix());
        CHECK(err <= round_trip_expansion_bound(a, b, n) + 4.0 * std::numeric_limits<double>::epsilon());
        CHECK(err <= prev);
        prev = err;
    }
}

TEST_CASE("cavity config validation") {
    CHECK_THROWS_AS(CavityConfig(perfect_mirror(), perfect_mirror(), 0.0), InvalidParameter);
    CHECK_THROWS_AS(CavityConfig(perfect_mirror(), perfect_mirror(), -1.0), InvalidParameter);
    CHECK_THROWS_AS(CavityConfig(rect_barrier_scatterer(1.0, 1.0), rect_barrier_scatterer(1.0, 1.0), 0.9),
                    InvalidParameter);
    CHECK_NOTHROW(CavityConfig(rect_barrier_scatterer(1.0, 1.0), rect_barrier_scatterer(1.0, 1.0), 1.1));
}
