#include <doctest.h>

#include <cmath>

#include "riesz/abscissa.hpp"
#include "riesz/catalog.hpp"
#include "riesz/errors.hpp"

using riesz::cplx;
using riesz::index_t;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("eta oracle values") {
    CHECK(std::abs(riesz::eta_oracle({1.0, 0.0}) - cplx{std::log(2.0), 0.0}) < 1e-8);
    CHECK(std::abs(riesz::eta_oracle({2.0, 0.0}) - cplx{kPi * kPi / 12.0, 0.0}) < 1e-8);
    CHECK(std::abs(riesz::eta_oracle({0.0, 0.0}) - cplx{0.5, 0.0}) < 1e-8);
    // Entire continuation: eta(-1) = (1 - 4) zeta(-1) = 1/4.
    CHECK(std::abs(riesz::eta_oracle({-1.0, 0.0}) - cplx{0.25, 0.0}) < 1e-8);
    CHECK_THROWS_AS(riesz::eta_oracle({0.5, 400.0}), riesz::Error);
}

TEST_CASE("zeta oracle values") {
    CHECK(std::abs(riesz::zeta_oracle({2.0, 0.0}) - cplx{kPi * kPi / 6.0, 0.0}) < 1e-8);
    CHECK(std::abs(riesz::zeta_oracle({4.0, 0.0}) - cplx{kPi * kPi * kPi * kPi / 90.0, 0.0}) <
          1e-8);
    CHECK_THROWS_AS(riesz::zeta_oracle({1.05, 0.0}), riesz::Error);
    CHECK_THROWS_AS(riesz::zeta_oracle({0.5, 14.0}), riesz::Error);
}

TEST_CASE("eta and zeta are consistent") {
    // eta(s) = (1 - 2^(1-s)) zeta(s) on re s in [1.1, 5]; the two evaluators
    // share no code path (acceleration vs Euler-Maclaurin).
    for (double sigma : {1.15, 1.5, 2.0, 3.5, 5.0}) {
        for (double t : {0.0, 1.0, -7.0, 20.0}) {
            const cplx s{sigma, t};
            const cplx lhs = riesz::eta_oracle(s);
            const cplx rhs = (1.0 - std::pow(cplx{2.0, 0.0}, 1.0 - s)) * riesz::zeta_oracle(s);
            CHECK(std::abs(lhs - rhs) < 1e-6);
        }
    }
}

TEST_CASE("eta_extended covers the functional-equation region") {
    // Left of the strip, eta has modulus ~ |t|^{3/2}; compare the log-space
    // route against the accelerated series where both apply.
    for (double t : {30.0, 120.0, 280.0}) {
        const cplx s{-1.0, t};
        const cplx a = riesz::eta_oracle(s);
        const cplx b = [&] {
            // Force the reflection path by invoking eta_extended above |im| 300
            // is not possible here, so check internal consistency instead.
            return riesz::eta_extended(s);
        }();
        CHECK(std::abs(a - b) < 1e-8 * std::abs(a));
    }
    // Beyond the acceleration ceiling the reflection is the only route.
    const cplx far = riesz::eta_extended({-1.0, 2000.0});
    CHECK(std::isfinite(std::abs(far)));
    CHECK(std::abs(far) > 1.0); // grows like t^{3/2}
    const cplx right = riesz::eta_extended({2.0, 5000.0});
    CHECK(std::abs(right) < 2.0);
    CHECK_THROWS_AS(riesz::eta_extended({0.5, 5000.0}), riesz::Error);
}

TEST_CASE("cesaro evaluation") {
    auto eta_entry = riesz::catalog_entry("eta");
    // Alternating partial sums at s = 0 average to 1/2.
    CHECK(std::abs(riesz::cesaro_eval(eta_entry.series, {0.0, 0.0}, 10000) - cplx{0.5, 0.0}) <
          1e-2);
    // And match the oracle at s = 0.5.
    CHECK(std::abs(riesz::cesaro_eval(eta_entry.series, {0.5, 0.0}, 10000) -
                   riesz::eta_oracle({0.5, 0.0})) < 1e-2);

    auto single = riesz::catalog_entry("single-0");
    CHECK_THROWS_AS(riesz::cesaro_eval(single.series, {0.0, 0.0}, 100), riesz::Error);

    // A single-term ordinary series is constant under averaging.
    riesz::DirichletSeries one_term(riesz::log_frequency(), [](index_t n) {
        return n == 1 ? cplx{2.5, 0.0} : cplx{0.0, 0.0};
    });
    for (index_t N : {1, 10, 1000})
        CHECK(std::abs(riesz::cesaro_eval(one_term, {0.7, 0.0}, N) - cplx{2.5, 0.0}) < 1e-14);
}

TEST_CASE("catalog entries") {
    auto list = riesz::catalog_list();
    CHECK(list.size() == 7);

    auto geo = riesz::catalog_entry("geometric");
    CHECK(std::abs(geo.oracle({1.0, 0.0}) - cplx{1.0 / (std::exp(1.0) - 1.0), 0.0}) < 1e-14);

    auto eta = riesz::catalog_entry("eta");
    bool has_order_fact = false;
    for (const auto& fact : eta.known_facts)
        if (fact.key == "order_at_-1" && fact.value == doctest::Approx(1.5) &&
            fact.provenance == "literature")
            has_order_fact = true;
    CHECK(has_order_fact);
    bool has_untestable = false;
    for (const auto& fact : eta.known_facts)
        if (!fact.testable) has_untestable = true;
    CHECK(has_untestable);

    auto single = riesz::catalog_entry("single-0");
    bool has_sentinel = false;
    for (const auto& fact : single.known_facts)
        if (fact.key == "sigma_c" && std::isinf(fact.value) && fact.value < 0.0)
            has_sentinel = true;
    CHECK(has_sentinel);

    CHECK_THROWS_AS(riesz::catalog_entry("nope"), riesz::Error);
}

TEST_CASE("oracles agree with first-kind riesz limits inside the region") {
    // Five sample points per entry, chosen deep enough in the convergence
    // region that the O(1/x) first-kind weight distortion sits below 1e-3.
    const riesz::RieszSpec spec{1.0, riesz::RieszKind::first};

    auto check_entry = [&](const std::string& name, std::initializer_list<cplx> points,
                           double x_max) {
        auto entry = riesz::catalog_entry(name);
        REQUIRE(entry.has_oracle());
        auto sched = riesz::linear_grid(x_max / 20.0, x_max, 24);
        for (cplx s : points) {
            REQUIRE(entry.oracle_region.contains(s));
            auto rep = riesz::riesz_limit(entry.series, spec, s, sched, 1e-2);
            CHECK(std::abs(rep.limit_estimate - entry.oracle(s)) < 1e-3);
        }
    };

    check_entry("single-0", {cplx{0.0, 0.0}, cplx{1.0, 1.0}, cplx{2.0, -3.0}, cplx{-1.0, 0.0},
                             cplx{0.5, 0.5}},
                50.0);
    check_entry("single-1", {cplx{0.0, 0.0}, cplx{1.0, 1.0}, cplx{2.0, -3.0}, cplx{-0.5, 0.0},
                             cplx{0.5, 0.5}},
                10000.0); // the (1 - lambda_1/x)^k weight leaves an O(1/x) gap
    check_entry("geometric", {cplx{1.0, 0.0}, cplx{1.5, 0.5}, cplx{2.0, 0.0}, cplx{1.0, -1.0},
                              cplx{3.0, 0.0}},
                3000.0);
    check_entry("eta", {cplx{8.0, 0.0}, cplx{9.0, 1.0}, cplx{10.0, 0.0}, cplx{11.0, -2.0},
                        cplx{12.0, 0.0}},
                std::log(2e5));
    check_entry("zeta", {cplx{8.0, 0.0}, cplx{9.0, 1.0}, cplx{10.0, 0.0}, cplx{11.0, -2.0},
                         cplx{12.0, 0.0}},
                std::log(2e5));
    check_entry("zeta-translate-2", {cplx{6.0, 0.0}, cplx{7.0, 1.0}, cplx{8.0, 0.0},
                                     cplx{9.0, -2.0}, cplx{10.0, 0.0}},
                std::log(2e5));
}
