#include "riesz/json_io.hpp"

#include <cmath>
#include <sstream>

#include "riesz/errors.hpp"

namespace riesz {

namespace {

double finite_or_sentinel(double v) {
    if (std::isinf(v)) return v > 0 ? 1e308 : -1e308;
    return v;
}

} // namespace

json to_json(const Frequency& f) {
    json j;
    j["label"] = f.label();
    j["prefix"] = f.prefix();
    j["generator"] = {{"kind", generator_kind_name(f.generator())}};
    return j;
}

Frequency frequency_from_json(const json& j) {
    try {
        std::vector<double> prefix = j.at("prefix").get<std::vector<double>>();
        const std::string kind = j.contains("generator")
                                     ? j.at("generator").at("kind").get<std::string>()
                                     : std::string("none");
        const std::string label = j.value("label", "custom");
        return make_frequency(std::move(prefix), generator_kind_from_name(kind), label);
    } catch (const json::exception& e) {
        fail(errc::parse_error, std::string("frequency JSON: ") + e.what());
    }
}

DirichletSeries series_from_json(const json& j) {
    try {
        Frequency freq = frequency_from_json(j.at("frequency"));
        const json& co = j.at("coefficients");
        const std::string kind = co.at("kind").get<std::string>();
        CoefficientRule rule;
        if (kind == "ones") {
            rule = [](index_t) { return cplx{1.0, 0.0}; };
        } else if (kind == "alternating") {
            rule = [](index_t n) { return cplx{n % 2 == 1 ? 1.0 : -1.0, 0.0}; };
        } else if (kind == "table") {
            std::vector<cplx> table;
            for (const auto& item : co.at("data")) {
                if (item.is_number())
                    table.emplace_back(item.get<double>(), 0.0);
                else
                    table.emplace_back(item.at(0).get<double>(), item.at(1).get<double>());
            }
            rule = [table](index_t n) {
                const std::size_t i = static_cast<std::size_t>(n - 1);
                return i < table.size() ? table[i] : cplx{0.0, 0.0};
            };
        } else if (kind == "expr") {
            const json& data = co.at("data");
            const std::string name = data.at("name").get<std::string>();
            if (name == "power") {
                const double c = data.at("exponent").get<double>();
                rule = [c](index_t n) {
                    return cplx{std::pow(static_cast<double>(n), c), 0.0};
                };
            } else if (name == "exp") {
                const double r = data.at("rate").get<double>();
                rule = [r](index_t n) {
                    return cplx{std::exp(r * static_cast<double>(n)), 0.0};
                };
            } else {
                fail(errc::parse_error, "unknown expr name '" + name + "'");
            }
        } else {
            fail(errc::parse_error, "unknown coefficient kind '" + kind + "'");
        }
        std::optional<double> germ;
        if (j.contains("germ_order") && !j.at("germ_order").is_null())
            germ = j.at("germ_order").get<double>();
        return DirichletSeries(std::move(freq), std::move(rule), germ,
                               j.value("label", "series"));
    } catch (const json::exception& e) {
        fail(errc::parse_error, std::string("series JSON: ") + e.what());
    }
}

json series_to_json_schema_doc() {
    return json::parse(R"({
      "label": "string",
      "frequency": {"label": "string", "prefix": [0.0], "generator": {"kind": "power|log|sqrtlog|none"}},
      "coefficients": {"kind": "table|alternating|ones|expr", "data": "see README"},
      "germ_order": null
    })");
}

json complex_to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const AbscissaEstimate& est) {
    json j;
    j["value"] = finite_or_sentinel(est.value);
    switch (est.kind) {
        case AbscissaKind::pointwise: j["kind"] = "pointwise"; break;
        case AbscissaKind::uniform: j["kind"] = "uniform"; break;
        case AbscissaKind::absolute: j["kind"] = "absolute"; break;
    }
    j["riesz_order"] = est.riesz_order;
    j["window"] = {est.window.first, est.window.second};
    json trace = json::array();
    for (const auto& [x, v] : est.slope_trace) trace.push_back({x, finite_or_sentinel(v)});
    j["slope_trace"] = std::move(trace);
    return j;
}

json to_json(const TransformResult& res) {
    json j;
    j["value"] = complex_to_json(res.value);
    j["tail_bound"] = res.tail_bound;
    j["cells"] = res.cells_used;
    return j;
}

json to_json(const ConvergenceReport& rep) {
    json j;
    json samples = json::array();
    for (const auto& [x, v] : rep.samples) samples.push_back({x, v.real(), v.imag()});
    j["samples"] = std::move(samples);
    j["limit_estimate"] = complex_to_json(rep.limit_estimate);
    j["tail_delta"] = rep.tail_delta;
    j["converged"] = rep.converged;
    return j;
}

cplx parse_complex(const std::string& text) {
    // Forms: "a", "bi", "a+bi", "a-bi"; whitespace-free.
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) fail(errc::parse_error, "empty complex literal");

    auto parse_double = [](const std::string& s) {
        std::size_t used = 0;
        double v;
        try {
            v = std::stod(s, &used);
        } catch (...) {
            fail(errc::parse_error, "bad numeric literal '" + s + "'");
        }
        if (used != s.size()) fail(errc::parse_error, "bad numeric literal '" + s + "'");
        return v;
    };

    if (t.back() == 'i' || t.back() == 'I') {
        t.pop_back();
        // Split at the last +/- that is not an exponent sign.
        std::size_t split = std::string::npos;
        for (std::size_t i = t.size(); i-- > 1;) {
            if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
                split = i;
                break;
            }
        }
        if (split == std::string::npos) {
            if (t.empty() || t == "+") return cplx{0.0, 1.0};
            if (t == "-") return cplx{0.0, -1.0};
            return cplx{0.0, parse_double(t)};
        }
        const std::string re = t.substr(0, split);
        std::string im = t.substr(split);
        if (im == "+") im = "1";
        if (im == "-") im = "-1";
        return cplx{parse_double(re), parse_double(im)};
    }
    return cplx{parse_double(t), 0.0};
}

std::string format_complex(cplx z) {
    std::ostringstream os;
    os << z.real();
    if (z.imag() >= 0.0)
        os << "+" << z.imag() << "i";
    else
        os << "-" << -z.imag() << "i";
    return os.str();
}

} // namespace riesz
