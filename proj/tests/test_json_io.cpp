#include <doctest.h>

#include <cmath>

#include "riesz/errors.hpp"
#include "riesz/json_io.hpp"

using riesz::cplx;
using riesz::index_t;
using riesz::json;

TEST_CASE("frequency round trip") {
    auto f = riesz::log_frequency();
    auto j = riesz::to_json(f);
    CHECK(j["generator"]["kind"] == "log");
    auto back = riesz::frequency_from_json(j);
    CHECK(back.at(7) == doctest::Approx(std::log(7.0)));
    CHECK(back.label() == "ordinary");

    CHECK_THROWS_AS(riesz::frequency_from_json(json::parse(R"({"prefix": [1.0, 0.5]})")),
                    riesz::Error);
    CHECK_THROWS_AS(riesz::frequency_from_json(json::parse(R"({"nope": 1})")), riesz::Error);
}

TEST_CASE("series parsing") {
    const auto j = json::parse(R"({
        "label": "demo",
        "frequency": {"label": "power", "prefix": [1.0, 2.0, 3.0],
                      "generator": {"kind": "power"}},
        "coefficients": {"kind": "table", "data": [2.0, [0.0, 3.0]]},
        "germ_order": 1.0
    })");
    auto D = riesz::series_from_json(j);
    CHECK(D.coefficient(1) == cplx{2.0, 0.0});
    CHECK(D.coefficient(2) == cplx{0.0, 3.0});
    CHECK(D.coefficient(3) == cplx{0.0, 0.0});
    CHECK(D.germ_order().value() == 1.0);

    const auto alt = json::parse(R"({
        "frequency": {"prefix": [0.0], "generator": {"kind": "log"}},
        "coefficients": {"kind": "alternating"}
    })");
    auto A = riesz::series_from_json(alt);
    CHECK(A.coefficient(2) == cplx{-1.0, 0.0});

    const auto expr = json::parse(R"({
        "frequency": {"prefix": [0.0], "generator": {"kind": "log"}},
        "coefficients": {"kind": "expr", "data": {"name": "power", "exponent": -2.0}}
    })");
    auto E = riesz::series_from_json(expr);
    CHECK(E.coefficient(4).real() == doctest::Approx(1.0 / 16.0));

    CHECK_THROWS_AS(riesz::series_from_json(json::parse(
                        R"({"frequency": {"prefix": [0.0]}, "coefficients": {"kind": "wat"}})")),
                    riesz::Error);
}

TEST_CASE("complex literals") {
    CHECK(riesz::parse_complex("1.5") == cplx{1.5, 0.0});
    CHECK(riesz::parse_complex("1+2i") == cplx{1.0, 2.0});
    CHECK(riesz::parse_complex("0.5-2i") == cplx{0.5, -2.0});
    CHECK(riesz::parse_complex("2i") == cplx{0.0, 2.0});
    CHECK(riesz::parse_complex("-i") == cplx{0.0, -1.0});
    CHECK(riesz::parse_complex("1e-3+1e2i") == cplx{1e-3, 1e2});
    CHECK_THROWS_AS(riesz::parse_complex("fish"), riesz::Error);
    CHECK(riesz::parse_complex(riesz::format_complex({-1.25, 3.5})) == cplx{-1.25, 3.5});
}

TEST_CASE("estimate serialization carries the full trace") {
    riesz::AbscissaEstimate est;
    est.value = 1.0;
    est.kind = riesz::AbscissaKind::uniform;
    est.riesz_order = 2.0;
    est.window = {1.0, 100.0};
    est.slope_trace = {{1.0, 0.5}, {2.0, -std::numeric_limits<double>::infinity()}};
    auto j = riesz::to_json(est);
    CHECK(j["kind"] == "uniform");
    CHECK(j["slope_trace"].size() == 2);
    CHECK(j["slope_trace"][1][1].get<double>() <= -1e308);

    riesz::TransformResult res;
    res.value = {1.0, -2.0};
    res.tail_bound = 1e-9;
    res.cells_used = 42;
    auto jt = riesz::to_json(res);
    CHECK(jt["value"][0] == 1.0);
    CHECK(jt["value"][1] == -2.0);
    CHECK(jt["cells"] == 42);
}
