#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "riesz/abscissa.hpp"
#include "riesz/errors.hpp"
#include "riesz/series.hpp"

using riesz::cplx;
using riesz::DirichletSeries;
using riesz::index_t;
using riesz::RieszKind;
using riesz::RieszSpec;

namespace {

DirichletSeries ones_power() {
    return DirichletSeries(riesz::power_frequency(), [](index_t) { return cplx{1.0, 0.0}; });
}

DirichletSeries eta_series() {
    return DirichletSeries(riesz::log_frequency(),
                           [](index_t n) { return cplx{n % 2 == 1 ? 1.0 : -1.0, 0.0}; });
}

DirichletSeries single_term(double lambda1, cplx a1) {
    return DirichletSeries(riesz::make_frequency({lambda1, lambda1 + 1.0, lambda1 + 2.0}),
                           [a1](index_t n) { return n == 1 ? a1 : cplx{0.0, 0.0}; });
}

// Random finite series over a random strictly increasing frequency in [0, 5].
struct RandomSeries {
    std::vector<double> lambdas;
    std::vector<cplx> coeffs;
    DirichletSeries series;
};

RandomSeries random_series(std::mt19937& rng, int max_terms = 10) {
    std::uniform_int_distribution<int> nterms(2, max_terms);
    std::uniform_real_distribution<double> gap(0.08, 0.9), first(0.0, 0.8), coef(-2.0, 2.0);
    const int n = nterms(rng);
    std::vector<double> lam;
    lam.push_back(first(rng));
    for (int i = 1; i < n; ++i) lam.push_back(lam.back() + gap(rng));
    std::vector<cplx> a;
    for (int i = 0; i < n; ++i) a.emplace_back(coef(rng), coef(rng));
    auto freq = riesz::make_frequency(lam);
    DirichletSeries D(freq, [a](index_t m) {
        const std::size_t i = static_cast<std::size_t>(m - 1);
        return i < a.size() ? a[i] : cplx{0.0, 0.0};
    });
    return {lam, a, std::move(D)};
}

} // namespace

TEST_CASE("partial sums") {
    auto D = ones_power();
    CHECK(std::abs(riesz::partial_sum(D, {0.0, 0.0}, 0.5)) == 0.0);
    CHECK(riesz::partial_sum(D, {0.0, 0.0}, 3.5).real() == doctest::Approx(3.0));
    CHECK(riesz::partial_sum(D, {std::log(2.0), 0.0}, 2.5).real() ==
          doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("riesz mean examples") {
    auto D = ones_power();
    const cplx r = riesz::riesz_mean(D, RieszSpec{1.0, RieszKind::first}, {0.0, 0.0}, 2.5);
    CHECK(r.real() == doctest::Approx(0.8).epsilon(1e-14));

    auto s0 = single_term(0.0, {3.5, -1.0});
    for (double k : {0.0, 0.5, 2.0})
        for (double x : {0.5, 3.0}) {
            const cplx v = riesz::riesz_mean(s0, RieszSpec{k, RieszKind::first}, {1.0, 2.0}, x);
            CHECK(std::abs(v - cplx{3.5, -1.0}) < 1e-14);
        }

    std::mt19937 rng(5);
    for (int i = 0; i < 20; ++i) {
        auto R = random_series(rng);
        std::uniform_real_distribution<double> ux(0.5, 6.0);
        const double x = ux(rng);
        const cplx s{0.3, -0.7};
        CHECK(std::abs(riesz::riesz_mean(R.series, RieszSpec{0.0, RieszKind::first}, s, x) -
                       riesz::partial_sum(R.series, s, x)) < 1e-14);
        CHECK(std::abs(riesz::riesz_mean(R.series, RieszSpec{0.0, RieszKind::second}, s, x) -
                       riesz::partial_sum(R.series, s, x)) < 1e-14);
    }

    CHECK_THROWS_AS(riesz::riesz_mean(D, RieszSpec{1.0, RieszKind::first}, {0.0, 0.0}, 0.0),
                    riesz::Error);
}

TEST_CASE("summatory function") {
    auto s1 = single_term(1.0, {1.0, 0.0});
    CHECK(riesz::summatory(s1, 2.0, {0.0, 0.0}, 3.0).real() == doctest::Approx(4.0));
    CHECK(std::abs(riesz::summatory(s1, 2.0, {0.0, 0.0}, 0.5)) == 0.0);

    std::mt19937 rng(17);
    std::uniform_real_distribution<double> ux(0.5, 6.0), uk(0.0, 3.0);
    for (int i = 0; i < 25; ++i) {
        auto R = random_series(rng);
        const double x = ux(rng), k = uk(rng);
        const cplx s{0.2, 0.4};
        const cplx lhs = riesz::summatory(R.series, k, s, x);
        const cplx rhs = std::pow(x, k) * riesz::riesz_mean(R.series, RieszSpec{k, RieszKind::first}, s, x);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("translation") {
    auto D = ones_power();
    auto Dw = riesz::translate(D, {std::log(2.0), 0.0});
    for (index_t n : {1, 2, 5})
        CHECK(std::abs(Dw.coefficient(n) - cplx{std::pow(2.0, -static_cast<double>(n)), 0.0}) <
              1e-15);

    auto D0 = riesz::translate(D, {0.0, 0.0});
    for (index_t n : {1, 3, 7}) CHECK(D0.coefficient(n) == D.coefficient(n));

    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(-0.8, 0.8);
    for (int i = 0; i < 10; ++i) {
        auto R = random_series(rng);
        const cplx w1{u(rng), u(rng)}, w2{u(rng), u(rng)};
        auto lhs = riesz::translate(riesz::translate(R.series, w1), w2);
        auto rhs = riesz::translate(R.series, w1 + w2);
        for (index_t n = 1; n <= static_cast<index_t>(R.lambdas.size()); ++n)
            CHECK(std::abs(lhs.coefficient(n) - rhs.coefficient(n)) <
                  1e-12 * std::max(1.0, std::abs(rhs.coefficient(n))));
    }
}

TEST_CASE("riesz mean commutes with translation") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(-0.6, 0.6), ux(0.5, 6.0), uk(0.0, 2.5);
    for (int i = 0; i < 25; ++i) {
        auto R = random_series(rng);
        const cplx w{u(rng), u(rng)}, s{u(rng), u(rng)};
        const double x = ux(rng);
        const RieszSpec spec{uk(rng), i % 2 == 0 ? RieszKind::first : RieszKind::second};
        const cplx lhs = riesz::riesz_mean(riesz::translate(R.series, w), spec, s, x);
        const cplx rhs = riesz::riesz_mean(R.series, spec, s + w, x);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("riesz limits") {
    // Single term with lambda_1 = 0 converges immediately.
    auto s0 = single_term(0.0, {2.0, 1.0});
    auto grid = riesz::linear_grid(1.0, 50.0, 30);
    auto rep = riesz::riesz_limit(s0, RieszSpec{1.0, RieszKind::first}, {0.0, 0.0}, grid, 1e-9);
    CHECK(rep.converged);
    CHECK(std::abs(rep.limit_estimate - cplx{2.0, 1.0}) < 1e-9);

    // Geometric series at s = 1: second-kind means reach 1/(e-1) to 1e-6 by
    // x = 200 (first-kind means carry an O(1/x) weight distortion).
    auto geo = ones_power();
    auto sched = riesz::linear_grid(20.0, 200.0, 40);
    auto geo_rep =
        riesz::riesz_limit(geo, RieszSpec{1.0, RieszKind::second}, {1.0, 0.0}, sched, 1e-5);
    CHECK(geo_rep.converged);
    CHECK(std::abs(geo_rep.limit_estimate - cplx{1.0 / (std::exp(1.0) - 1.0), 0.0}) < 1e-6);

    // Alternating ordinary series at s = 1 -> log 2.
    auto eta = eta_series();
    auto sched2 = riesz::linear_grid(1.0, std::log(1e4), 40);
    auto eta_rep =
        riesz::riesz_limit(eta, RieszSpec{1.0, RieszKind::second}, {1.0, 0.0}, sched2, 1e-2);
    CHECK(std::abs(eta_rep.limit_estimate - cplx{std::log(2.0), 0.0}) < 1e-3);

    CHECK_THROWS_AS(riesz::riesz_limit(geo, RieszSpec{1.0, RieszKind::first}, {1.0, 0.0}, {}, 1e-3),
                    riesz::Error);
}

TEST_CASE("order monotonicity of riesz limits") {
    auto geo = ones_power();
    auto sched = riesz::linear_grid(20.0, 300.0, 40);
    const cplx s{1.0, 0.0};
    auto base = riesz::riesz_limit(geo, RieszSpec{1.0, RieszKind::second}, s, sched, 1e-4);
    REQUIRE(base.converged);
    for (double ell : {1.5, 2.0, 3.0}) {
        auto higher = riesz::riesz_limit(geo, RieszSpec{ell, RieszKind::second}, s, sched, 1e-4);
        CHECK(std::abs(higher.limit_estimate - base.limit_estimate) <=
              3.0 * std::max(base.tail_delta, 1e-9) + 1e-6);
    }
}

TEST_CASE("first and second kind limits agree on convergent points") {
    auto geo = ones_power();
    auto sched = riesz::linear_grid(50.0, 2000.0, 60);
    const double tol = 1e-3;
    auto first = riesz::riesz_limit(geo, RieszSpec{1.0, RieszKind::first}, {1.0, 0.0}, sched, tol);
    auto second =
        riesz::riesz_limit(geo, RieszSpec{1.0, RieszKind::second}, {1.0, 0.0}, sched, tol);
    CHECK(std::abs(first.limit_estimate - second.limit_estimate) < 10.0 * tol);
}

TEST_CASE("partial-sum decay toward a known limit") {
    // Geometric coefficients e^{-n}: limit 1/(e-1), residual decays like e^-N/N.
    auto D = riesz::translate(ones_power(), {1.0, 0.0});
    const cplx C{1.0 / (std::exp(1.0) - 1.0), 0.0};
    auto seq = riesz::partial_sum_decay(D, 1.0, {0.0, 0.0}, C, 30);
    CHECK(seq.size() == 30);
    for (std::size_t i = 5; i < seq.size(); ++i) {
        const double bound = 2.0 * std::exp(-static_cast<double>(seq[i].first)) /
                             static_cast<double>(seq[i].first);
        CHECK(std::abs(seq[i].second) < bound);
    }

    auto s0 = single_term(0.0, {4.0, 0.0});
    auto exact = riesz::partial_sum_decay(s0, 1.0, {0.0, 0.0}, {4.0, 0.0}, 2);
    for (const auto& [N, resid] : exact) CHECK(std::abs(resid) < 1e-15);

    // Alternating ordinary series at s = 1 with C = log 2: decay with a
    // monotone envelope after the burn-in.
    auto eta = eta_series();
    auto seq2 = riesz::partial_sum_decay(eta, 1.0, {1.0, 0.0}, {std::log(2.0), 0.0}, 400);
    double env = 1.0;
    for (std::size_t i = 99; i < seq2.size(); i += 50) {
        const double mag = std::abs(seq2[i].second);
        CHECK(mag < env + 1e-12);
        env = std::min(env, mag);
    }
    CHECK(std::abs(seq2.back().second) < 1e-3);
}

TEST_CASE("sup bound across orders") {
    // |R_x^q| <= sup_{y<x} |R_y^p| for q > p, checked on a fine y-grid plus an
    // explicit worst-case increment bound per grid interval.
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> ux(1.0, 6.0);
    const std::pair<double, double> orders[] = {{0.0, 0.5}, {0.0, 1.0}, {0.5, 1.5}, {1.0, 2.0}};
    for (int trial = 0; trial < 12; ++trial) {
        auto R = random_series(rng);
        const cplx s{0.1, 0.3};
        const double x = ux(rng);
        for (auto [p, q] : orders) {
            const cplx rq = riesz::riesz_mean(R.series, RieszSpec{q, RieszKind::first}, s, x);

            const int grid_n = 800;
            double sup = 0.0;
            for (int i = 1; i <= grid_n; ++i) {
                const double y = x * i / grid_n;
                sup = std::max(sup,
                               std::abs(riesz::riesz_mean(R.series, RieszSpec{p, RieszKind::first},
                                                          s, y)));
            }
            // Worst-case change of each term's weight between adjacent grid points.
            double slack = 0.0;
            for (int i = 1; i < grid_n; ++i) {
                const double y1 = x * i / grid_n, y2 = x * (i + 1) / grid_n;
                double inc = 0.0;
                for (std::size_t j = 0; j < R.lambdas.size(); ++j) {
                    if (R.lambdas[j] >= y2) continue;
                    const double w2 = std::pow(1.0 - R.lambdas[j] / y2, p);
                    const double w1 =
                        R.lambdas[j] < y1 ? std::pow(1.0 - R.lambdas[j] / y1, p) : 0.0;
                    inc += std::abs(R.coeffs[j] * std::exp(-R.lambdas[j] * s)) * (w2 - w1);
                }
                slack = std::max(slack, inc);
            }
            CHECK(std::abs(rq) <= sup + slack + 1e-12);
        }
    }
}

TEST_CASE("integral form of the partial sum") {
    // S_x(s+w) = S_x(w) e^{-sx} + int_0^x S_t(w) s e^{-st} dt, quadrature oracle.
    // (Partial integration of the Stieltjes form; the single-term case with
    // lambda_1 = 0 pins the sign of the integral term.)
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> u(-0.8, 0.8), ux(1.0, 5.0);
    for (int trial = 0; trial < 10; ++trial) {
        auto R = random_series(rng, 6);
        const cplx s{u(rng), u(rng)}, w{u(rng), u(rng)};
        const double x = ux(rng);
        const cplx lhs = riesz::partial_sum(R.series, s + w, x);
        const cplx boundary = riesz::partial_sum(R.series, w, x) * std::exp(-s * x);
        const cplx integral = oracles::integrate_piecewise(
            [&](double t) { return riesz::partial_sum(R.series, w, t) * s * std::exp(-s * t); },
            0.0, x, R.lambdas);
        const cplx rhs = boundary + integral;
        CHECK(std::abs(lhs - rhs) <= 1e-6 * std::max(1.0, std::abs(lhs)));
    }
}
