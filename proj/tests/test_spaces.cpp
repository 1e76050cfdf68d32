#include <doctest.h>

#include <cmath>

#include "riesz/abscissa.hpp"
#include "riesz/catalog.hpp"
#include "riesz/errors.hpp"
#include "riesz/spaces.hpp"

using riesz::cplx;
using riesz::index_t;

namespace {

std::vector<double> decreasing_sigmas() {
    auto g = riesz::log_grid(1e-3, 10.0, 25);
    std::reverse(g.begin(), g.end());
    return g;
}

} // namespace

TEST_CASE("weighted norm estimates") {
    riesz::NormSpec flat{0.0, riesz::coarse_eval_grid()};
    auto n1 = riesz::norm_inf_ell([](cplx s) { return std::exp(-s); }, flat);
    CHECK(n1.value == doctest::Approx(1.0).epsilon(1e-2));
    CHECK(n1.argmax.real() == doctest::Approx(1e-3));

    riesz::NormSpec lin{1.0, riesz::coarse_eval_grid()};
    auto n2 = riesz::norm_inf_ell([](cplx s) { return 1.0 + s; }, lin);
    CHECK(n2.value == doctest::Approx(1.0).epsilon(2e-2));

    riesz::NormSpec eta_spec{1.0, riesz::default_eval_grid()};
    auto n3 = riesz::norm_inf_ell([](cplx s) { return riesz::eta_oracle(s); }, eta_spec);
    CHECK(n3.value > 0.0);
    CHECK(n3.value < 10.0);
    CHECK(std::isfinite(n3.argmax.real()));
}

TEST_CASE("far-left profiles") {
    auto tg = riesz::linear_grid(-50.0, 50.0, 201);

    auto p1 = riesz::far_left_profile([](cplx s) { return std::exp(-s); }, 0.0,
                                      decreasing_sigmas(), tg);
    for (const auto& [sigma, v] : p1) CHECK(v == doctest::Approx(std::exp(-sigma)).epsilon(1e-9));

    auto pc = riesz::far_left_profile([](cplx) { return cplx{1.0, 0.0}; }, 0.0,
                                      decreasing_sigmas(), tg);
    for (const auto& [sigma, v] : pc) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));

    // Geometric limit with ell = 1: non-increasing in sigma, and the boundary
    // value agrees with the grid norm within 2%.
    auto geo = riesz::catalog_entry("geometric");
    auto p2 = riesz::far_left_profile(geo.oracle, 1.0, decreasing_sigmas(), tg);
    for (std::size_t i = 0; i + 1 < p2.size(); ++i)
        CHECK(p2[i + 1].second >= p2[i].second - 1e-9); // sigma decreases along the profile
    riesz::NormSpec spec{1.0, riesz::make_eval_grid(1e-3, 10.0, 25, 50.0, 201)};
    auto nrm = riesz::norm_inf_ell(geo.oracle, spec);
    CHECK(std::abs(p2.back().second - nrm.value) < 0.02 * nrm.value);
}

TEST_CASE("log convexity across strips") {
    auto tg = riesz::linear_grid(-50.0, 50.0, 201);

    const double affine = riesz::log_convexity_check([](cplx s) { return std::exp(-s); }, 0.5,
                                                     3.0, 9, tg);
    CHECK(affine < 1e-9);

    auto geo = riesz::catalog_entry("geometric");
    CHECK(riesz::log_convexity_check(geo.oracle, 0.5, 3.0, 9, tg) < 1e-3 + 1e-6);

    auto zt = riesz::catalog_entry("zeta-translate-2");
    CHECK(riesz::log_convexity_check(zt.oracle, 0.5, 3.0, 9, tg) < 1e-3 + 1e-6);
}

TEST_CASE("far-right decay") {
    auto tg = riesz::linear_grid(-20.0, 20.0, 41);
    auto sig = riesz::linear_grid(0.5, 20.0, 12);

    auto single = riesz::catalog_entry("single-1").series;
    auto p1 = riesz::far_right_decay(single, 0.0, sig, tg);
    for (const auto& [sigma, v] : p1) CHECK(v == doctest::Approx(std::exp(-sigma)).epsilon(1e-6));
    CHECK(p1.back().second < 1e-3);

    auto geo = riesz::catalog_entry("geometric").series;
    auto p2 = riesz::far_right_decay(geo, 0.0, sig, tg);
    for (std::size_t i = 0; i + 1 < p2.size(); ++i) CHECK(p2[i + 1].second < p2[i].second);
    CHECK(p2.back().second < 1e-3);

    auto eta = riesz::catalog_entry("eta").series; // lambda_1 = 0
    CHECK_THROWS_AS(riesz::far_right_decay(eta, 1.0, sig, tg), riesz::Error);
}

TEST_CASE("riesz-mean projection ratios") {
    auto grid = riesz::coarse_eval_grid();

    // Single-term series: the ratio is (1 - lambda_1/x)^k <= 1.
    auto single = riesz::catalog_entry("single-1");
    riesz::NormSpec spec0{0.0, grid};
    const double fnorm = riesz::norm_inf_ell(single.oracle, spec0).value;
    auto xs = riesz::log_grid(2.0, 1e4, 24);
    auto mr = riesz::maximal_ratio(single.series, 0.0, 1.0, xs, grid, fnorm);
    CHECK(mr.sup_ratio <= 1.0 + 1e-12);

    // Geometric series, ell = 0, k = 1: means of a bounded-limit series.
    auto geo = riesz::catalog_entry("geometric");
    const double gnorm = riesz::norm_inf_ell(geo.oracle, spec0).value;
    auto mg = riesz::maximal_ratio(geo.series, 0.0, 1.0, riesz::log_grid(1.0, 2000.0, 20), grid,
                                   gnorm);
    CHECK(mg.sup_ratio <= 1.0 + 0.05);

    // Alternating ordinary series, ell = 1, k = 2: the trace stabilizes.
    auto eta = riesz::catalog_entry("eta");
    riesz::NormSpec spec1{1.0, grid};
    const double enorm = riesz::norm_inf_ell(eta.oracle, spec1).value;
    auto xs2 = riesz::log_grid(1.0, std::log(1e4), 24);
    auto me = riesz::maximal_ratio(eta.series, 1.0, 2.0, xs2, grid, enorm);
    double sup_small = 0.0;
    for (const auto& [x, r] : me.trace)
        if (x <= std::log(1e3)) sup_small = std::max(sup_small, r);
    CHECK(me.sup_ratio <= sup_small * 1.01);

    CHECK_THROWS_AS(riesz::maximal_ratio(single.series, 0.0, 1.0, xs, grid, 1e-20), riesz::Error);
}

TEST_CASE("uniform riesz approximation") {
    auto grid = riesz::coarse_eval_grid();

    // Single-term series: x0 is the first grid point where (1-1/x)^k closes
    // the gap.
    auto single = riesz::catalog_entry("single-1");
    std::vector<riesz::SeriesWithLimit> solo{{single.series, single.oracle}};
    auto xs = riesz::log_grid(2.0, 1e5, 40);
    const double eps = 1e-2;
    const double x0 = riesz::uniform_riesz_approx(solo, 0.0, 1.0, 0.5, eps, xs, grid);
    CHECK(x0 > 2.0);
    CHECK(x0 < 1e5);

    // Vacuous tolerance: first grid point.
    const double x0v = riesz::uniform_riesz_approx(solo, 0.0, 1.0, 0.5, 1e3, xs, grid);
    CHECK(x0v == xs.front());

    // Mixed set: alternating series and the shifted zeta series.
    auto eta = riesz::catalog_entry("eta");
    auto zt = riesz::catalog_entry("zeta-translate-2");
    std::vector<riesz::SeriesWithLimit> pair{{eta.series, eta.oracle}, {zt.series, zt.oracle}};
    auto xs2 = riesz::log_grid(1.0, std::log(5e4), 20);
    const double x1 = riesz::uniform_riesz_approx(pair, 1.0, 2.0, 0.5, 1e-2, xs2, grid,
                                                  riesz::RieszKind::second);
    CHECK(x1 <= xs2.back());

    CHECK_THROWS_AS(riesz::uniform_riesz_approx(solo, 0.0, 1.0, 0.5, 1e-12,
                                                riesz::log_grid(2.0, 300.0, 6), grid),
                    riesz::Error);
}

TEST_CASE("coefficient-functional bounds") {
    auto grid = riesz::coarse_eval_grid();
    riesz::NormSpec spec1{1.0, grid};

    auto single = riesz::catalog_entry("single-1");
    const double snorm =
        riesz::norm_inf_ell(single.oracle, riesz::NormSpec{0.0, grid}).value;
    auto [lhs, rhs] = riesz::coefficient_bound_check(single.series, 0.0, 1.0, 1, snorm);
    CHECK(lhs == doctest::Approx(1.0));
    CHECK(rhs == doctest::Approx((2.0 / 1.0) * snorm));

    // Alternating series: every nonzero prefix sum obeys a single corpus
    // constant against the shape factor.
    auto eta = riesz::catalog_entry("eta");
    const double enorm = riesz::norm_inf_ell(eta.oracle, spec1).value;
    double worst = 0.0;
    for (index_t N = 1; N <= 50; ++N) {
        auto [l, r] = riesz::coefficient_bound_check(eta.series, 1.0, 2.0, N, enorm);
        if (l > 0.0) worst = std::max(worst, l / r);
    }
    CHECK(worst > 0.0);
    CHECK(worst <= 10.0);

    auto zt = riesz::catalog_entry("zeta-translate-2");
    const double znorm = riesz::norm_inf_ell(zt.oracle, riesz::NormSpec{0.0, grid}).value;
    for (index_t N = 1; N <= 50; ++N) {
        auto [l, r] = riesz::coefficient_bound_check(zt.series, 0.0, 1.0, N, znorm);
        CHECK(std::isfinite(l / r));
        CHECK(l / r <= 10.0);
    }
}

TEST_CASE("power-case collapse evidence") {
    // For power-frequency members with a finite weighted norm, the flat norm
    // is finite as well and the argmax agrees near the boundary.
    auto grid = riesz::make_eval_grid(1e-3, 20.0, 24, 50.0, 201);
    auto shifted = riesz::translate(riesz::catalog_entry("geometric").series, {1.0, 0.0});
    auto oracle = [](cplx s) { return 1.0 / (std::exp(s + 1.0) - 1.0); };
    const auto weighted = riesz::norm_inf_ell(oracle, riesz::NormSpec{1.0, grid});
    const auto flat = riesz::norm_inf_ell(oracle, riesz::NormSpec{0.0, grid});
    CHECK(std::isfinite(weighted.value));
    CHECK(std::isfinite(flat.value));
    CHECK(flat.value == doctest::Approx(1.0 / (std::exp(1.0) - 1.0)).epsilon(1e-2));
    CHECK(std::abs(weighted.argmax - flat.argmax) < 1e-9);
    (void)shifted;
}

TEST_CASE("bounded-case consistency") {
    // A bounded-limit member: ratios bounded at ell = 0, k = 1, and the means
    // converge uniformly on [re > sigma] sample grids (tail oscillation).
    auto grid = riesz::coarse_eval_grid();
    auto shifted = riesz::translate(riesz::catalog_entry("geometric").series, {1.0, 0.0});
    auto oracle = [](cplx s) { return 1.0 / (std::exp(s + 1.0) - 1.0); };
    const double fnorm = riesz::norm_inf_ell(oracle, riesz::NormSpec{0.0, grid}).value;
    auto mr = riesz::maximal_ratio(shifted, 0.0, 1.0, riesz::log_grid(1.0, 500.0, 16), grid,
                                   fnorm);
    CHECK(mr.sup_ratio <= 1.0 + 0.05);

    const auto xs = riesz::linear_grid(50.0, 120.0, 12);
    double osc = 0.0;
    for (double sigma : {0.25, 1.0}) {
        for (double t : {-5.0, 0.0, 5.0}) {
            cplx prev = riesz::riesz_mean(shifted, {1.0, riesz::RieszKind::first},
                                          cplx{sigma, t}, xs.front());
            for (std::size_t i = 1; i < xs.size(); ++i) {
                const cplx cur = riesz::riesz_mean(shifted, {1.0, riesz::RieszKind::first},
                                                   cplx{sigma, t}, xs[i]);
                osc = std::max(osc, std::abs(cur - prev));
                prev = cur;
            }
        }
    }
    CHECK(osc < 1e-2);
}
