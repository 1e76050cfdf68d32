#include "riesz/abscissa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "riesz/errors.hpp"

namespace riesz {

namespace {

void require_window(const std::vector<double>& xs) {
    if (xs.size() < 4) fail(errc::domain_error, "abscissa estimation needs a sampling window");
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
        if (!(xs[i] < xs[i + 1])) fail(errc::domain_error, "xs must be strictly increasing");
    if (!(xs.front() > 0.0)) fail(errc::domain_error, "xs must be positive");
    if (xs.back() / xs.front() < 100.0)
        fail(errc::domain_error, "xs should span at least two decades");
}

AbscissaEstimate finish(AbscissaKind kind, double k,
                        std::vector<std::pair<double, double>> trace, double x_min,
                        double x_max) {
    AbscissaEstimate est;
    est.kind = kind;
    est.riesz_order = k;
    est.window = {x_min, x_max};
    est.slope_trace = std::move(trace);
    double sup = -std::numeric_limits<double>::infinity();
    const double tail_start = 0.5 * x_max;
    bool any = false;
    for (const auto& [x, v] : est.slope_trace) {
        if (x < tail_start || std::isinf(v)) continue;
        sup = std::max(sup, v);
        any = true;
    }
    est.value = any ? sup : -std::numeric_limits<double>::infinity();
    return est;
}

} // namespace

std::vector<double> linear_grid(double lo, double hi, int n) {
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1.0);
    return g;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        g[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, i / (n - 1.0));
    return g;
}

namespace {

// At k = 0 both Riesz kinds reduce to plain partial sums, which accumulate
// incrementally along increasing x instead of being recomputed per grid point.
std::vector<double> partial_sum_sweep(const DirichletSeries& D, const std::vector<double>& xs,
                                      const std::vector<double>& t_grid) {
    std::vector<cplx> running(t_grid.size(), cplx{0.0, 0.0});
    std::vector<double> sups(xs.size(), 0.0);
    index_t n = 1;
    const index_t last = D.frequency().count_below(xs.back());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const index_t upto = std::min(last, D.frequency().count_below(xs[i]));
        for (; n <= upto; ++n) {
            const cplx a = D.coefficient(n);
            if (a == cplx{0.0, 0.0}) continue;
            const double lam = D.frequency().at(n);
            for (std::size_t j = 0; j < t_grid.size(); ++j)
                running[j] += a * std::exp(cplx{0.0, -lam * t_grid[j]});
        }
        double sup = 0.0;
        for (const cplx& v : running) sup = std::max(sup, std::abs(v));
        sups[i] = sup;
    }
    return sups;
}

AbscissaEstimate from_sups(const DirichletSeries& D, double k, const std::vector<double>& xs,
                           const std::vector<double>& t_grid, RieszKind kind, AbscissaKind which) {
    std::vector<double> sups;
    if (k == 0.0) {
        sups = partial_sum_sweep(D, xs, t_grid);
    } else {
        sups.resize(xs.size(), 0.0);
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (double t : t_grid)
                sups[i] = std::max(
                    sups[i], std::abs(riesz_mean(D, RieszSpec{k, kind}, cplx{0.0, t}, xs[i])));
    }
    std::vector<std::pair<double, double>> trace;
    trace.reserve(xs.size());
    bool all_zero = true;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (sups[i] > 0.0) all_zero = false;
        trace.emplace_back(xs[i], sups[i] > 0.0
                                      ? std::log(sups[i]) / xs[i]
                                      : -std::numeric_limits<double>::infinity());
    }
    AbscissaEstimate est = finish(which, k, std::move(trace), xs.front(), xs.back());
    if (all_zero) est.value = -std::numeric_limits<double>::infinity();
    return est;
}

} // namespace

AbscissaEstimate bohr_cahen_pointwise(const DirichletSeries& D, double k,
                                      const std::vector<double>& xs, RieszKind kind) {
    require_window(xs);
    return from_sups(D, k, xs, {0.0}, kind, AbscissaKind::pointwise);
}

AbscissaEstimate bohr_cahen_uniform(const DirichletSeries& D, double k,
                                    const std::vector<double>& xs,
                                    const std::vector<double>& t_grid, RieszKind kind) {
    require_window(xs);
    if (t_grid.empty()) fail(errc::domain_error, "t grid must be nonempty");
    return from_sups(D, k, xs, t_grid, kind, AbscissaKind::uniform);
}

AbscissaEstimate absolute_abscissa(const DirichletSeries& D, const std::vector<double>& xs) {
    require_window(xs);
    std::vector<std::pair<double, double>> trace;
    trace.reserve(xs.size());
    bool all_zero = true;
    double sum = 0.0;
    index_t n = 1;
    for (double x : xs) {
        const index_t count = D.frequency().count_below(x);
        for (; n <= count; ++n) sum += std::abs(D.coefficient(n));
        if (sum > 0.0) all_zero = false;
        trace.emplace_back(x, sum > 0.0 ? std::log(sum) / x
                                        : -std::numeric_limits<double>::infinity());
    }
    AbscissaEstimate est =
        finish(AbscissaKind::absolute, 0.0, std::move(trace), xs.front(), xs.back());
    if (all_zero) est.value = -std::numeric_limits<double>::infinity();
    return est;
}

OrderEstimate order_at(const std::function<cplx(cplx)>& f, double sigma,
                       const std::vector<double>& t_grid) {
    if (t_grid.size() < 4) fail(errc::domain_error, "order fit needs at least 4 samples");
    if (!(t_grid.front() >= 10.0)) fail(errc::domain_error, "order fit needs t_min >= 10");

    std::vector<double> lx, ly;
    lx.reserve(t_grid.size());
    ly.reserve(t_grid.size());
    for (double t : t_grid) {
        cplx v;
        try {
            v = f(cplx(sigma, t));
        } catch (const Error&) {
            fail(errc::evaluation_failure, "order fit: oracle undefined at a sample");
        }
        const double mag = std::abs(v);
        if (!(mag > 0.0) || !std::isfinite(mag))
            fail(errc::evaluation_failure, "order fit: non-finite sample");
        lx.push_back(std::log(t));
        ly.push_back(std::log(mag));
    }
    const double n = static_cast<double>(lx.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    const double denom = n * sxx - sx * sx;
    const double slope = (n * sxy - sx * sy) / denom;
    const double icept = (sy - slope * sx) / n;
    double resid = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i)
        resid = std::max(resid, std::abs(ly[i] - (slope * lx[i] + icept)));

    OrderEstimate est;
    est.sigma = sigma;
    est.exponent = std::max(0.0, slope);
    est.fit_range = {t_grid.front(), t_grid.back()};
    est.residual = resid;
    return est;
}

double cone_uniformity(const DirichletSeries& D, const ConeSpec& cone,
                       const std::vector<double>& xs, int ray_samples) {
    if (ray_samples < 3) fail(errc::domain_error, "need at least 3 rays");
    if (!(cone.half_angle > 0.0 && cone.half_angle < 1.5707963267948966))
        fail(errc::domain_error, "half angle must lie in (0, pi/2)");
    if (xs.size() < 8) fail(errc::domain_error, "xs too short for a tail quartile");

    const std::size_t q0 = xs.size() - xs.size() / 4;
    double worst = 0.0;
    for (int r = 0; r < ray_samples; ++r) {
        const double theta = -cone.half_angle + 2.0 * cone.half_angle * r / (ray_samples - 1.0);
        for (double rad : {cone.radius_min, std::sqrt(cone.radius_min * cone.radius_max),
                           cone.radius_max}) {
            const cplx s = cone.apex + rad * cplx(std::cos(theta), std::sin(theta));
            std::vector<cplx> tail;
            for (std::size_t i = q0; i < xs.size(); ++i) tail.push_back(partial_sum(D, s, xs[i]));
            for (std::size_t i = 0; i < tail.size(); ++i)
                for (std::size_t j = i + 1; j < tail.size(); ++j)
                    worst = std::max(worst, std::abs(tail[i] - tail[j]));
        }
    }
    return worst;
}

} // namespace riesz
