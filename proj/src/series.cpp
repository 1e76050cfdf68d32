#include "riesz/series.hpp"

#include <cmath>

#include "riesz/errors.hpp"

namespace riesz {

DirichletSeries::DirichletSeries(Frequency freq, CoefficientRule coeff,
                                 std::optional<double> germ_order, std::string label)
    : freq_(std::move(freq)), coeff_(std::move(coeff)),
      germ_order_(germ_order), label_(std::move(label)) {
    if (!coeff_) fail(errc::domain_error, "coefficient rule must be callable");
    if (germ_order_ && *germ_order_ < 0.0) fail(errc::domain_error, "germ order must be >= 0");
}

cplx partial_sum(const DirichletSeries& D, cplx s, double x) {
    if (x < 0.0) fail(errc::non_positive_x, "partial_sum needs x >= 0");
    const index_t count = D.frequency().count_below(x);
    cplx acc{0.0, 0.0};
    for (index_t n = 1; n <= count; ++n) {
        const cplx a = D.coefficient(n);
        if (a == cplx{0.0, 0.0}) continue;
        acc += a * std::exp(-D.frequency().at(n) * s);
    }
    return acc;
}

cplx riesz_mean(const DirichletSeries& D, RieszSpec spec, cplx s, double x) {
    if (!(x > 0.0)) fail(errc::non_positive_x, "riesz_mean needs x > 0");
    if (spec.order < 0.0) fail(errc::domain_error, "Riesz order must be >= 0");
    if (spec.order == 0.0) return partial_sum(D, s, x);
    const index_t count = D.frequency().count_below(x);
    cplx acc{0.0, 0.0};
    for (index_t n = 1; n <= count; ++n) {
        const cplx a = D.coefficient(n);
        if (a == cplx{0.0, 0.0}) continue;
        const double lam = D.frequency().at(n);
        double base = spec.kind == RieszKind::first ? 1.0 - lam / x
                                                    : 1.0 - std::exp(lam - x);
        if (base < 0.0) base = 0.0; // rounding at the cutoff
        acc += a * std::exp(-lam * s) * std::pow(base, spec.order);
    }
    return acc;
}

cplx summatory(const DirichletSeries& D, double k, cplx s, double x) {
    if (!(x > 0.0)) fail(errc::non_positive_x, "summatory needs x > 0");
    if (k < 0.0) fail(errc::domain_error, "summatory order must be >= 0");
    const index_t count = D.frequency().count_below(x);
    cplx acc{0.0, 0.0};
    for (index_t n = 1; n <= count; ++n) {
        const cplx a = D.coefficient(n);
        if (a == cplx{0.0, 0.0}) continue;
        const double lam = D.frequency().at(n);
        acc += a * std::exp(-lam * s) * std::pow(x - lam, k);
    }
    return acc;
}

DirichletSeries translate(const DirichletSeries& D, cplx w) {
    CoefficientRule shifted = [D, w](index_t n) {
        return D.coefficient(n) * std::exp(-D.frequency().at(n) * w);
    };
    return DirichletSeries(D.frequency(), std::move(shifted), D.germ_order(),
                           D.label() + "+translate");
}

ConvergenceReport riesz_limit(const DirichletSeries& D, RieszSpec spec, cplx s,
                              const std::vector<double>& schedule, double tolerance,
                              bool averaged) {
    if (schedule.empty()) fail(errc::schedule_empty, "riesz_limit needs a sampling schedule");
    if (!(tolerance > 0.0)) fail(errc::domain_error, "tolerance must be positive");
    for (std::size_t i = 0; i + 1 < schedule.size(); ++i)
        if (!(schedule[i] < schedule[i + 1]))
            fail(errc::domain_error, "schedule must be strictly increasing");

    ConvergenceReport rep;
    rep.samples.reserve(schedule.size());
    for (double x : schedule) rep.samples.emplace_back(x, riesz_mean(D, spec, s, x));

    const std::size_t n = rep.samples.size();
    const std::size_t q0 = n - std::max<std::size_t>(1, n / 4);
    if (averaged) {
        cplx acc{0.0, 0.0};
        for (std::size_t i = q0; i < n; ++i) acc += rep.samples[i].second;
        rep.limit_estimate = acc / static_cast<double>(n - q0);
    } else {
        rep.limit_estimate = rep.samples.back().second;
    }
    double delta = 0.0;
    for (std::size_t i = q0; i < n; ++i)
        delta = std::max(delta, std::abs(rep.samples[i].second - rep.limit_estimate));
    rep.tail_delta = delta;
    rep.converged = delta < tolerance;
    return rep;
}

std::vector<std::pair<index_t, cplx>> partial_sum_decay(const DirichletSeries& D, double k,
                                                             cplx s, cplx C, index_t N_max) {
    std::vector<std::pair<index_t, cplx>> out;
    out.reserve(static_cast<std::size_t>(N_max));
    cplx prefix{0.0, 0.0};
    for (index_t N = 1; N <= N_max; ++N) {
        prefix += D.coefficient(N) * std::exp(-D.frequency().at(N) * s);
        const double lamN = D.frequency().at(N);
        const double lamN1 = D.frequency().at(N + 1);
        if (lamN1 == 0.0) fail(errc::zero_lambda, "lambda_{N+1} = 0");
        const double factor = std::pow((lamN1 - lamN) / lamN1, k);
        out.emplace_back(N, factor * (prefix - C));
    }
    return out;
}

} // namespace riesz
