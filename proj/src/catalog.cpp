#include "riesz/catalog.hpp"

#include <cmath>
#include <limits>

#include "riesz/errors.hpp"
#include "riesz/special.hpp"

namespace riesz {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kLnAccel = std::log(3.0 + std::sqrt(8.0)); // convergence rate of the acceleration

} // namespace

cplx eta_oracle(cplx s) {
    const double t = std::abs(s.imag());
    if (t > 300.0)
        fail(errc::precision_loss, "alternating-series acceleration unreliable for |im s| > 300");
    // Depth chosen from the error envelope 3 (3+sqrt 8)^-n (1+2|t|) e^{pi |t|/2}.
    const double target = 1e-12;
    const double need =
        (kPi * t / 2.0 + std::log1p(2.0 * t) + std::log(3.0) - std::log(target)) / kLnAccel;
    const int n = std::max(24, static_cast<int>(std::ceil(need)) + 4);

    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1.0 / d);
    if (!std::isfinite(d)) fail(errc::precision_loss, "acceleration depth overflow");
    double b = -1.0;
    double c = -d;
    cplx acc{0.0, 0.0};
    for (int k = 0; k < n; ++k) {
        c = b - c;
        acc += c * std::exp(-s * std::log(static_cast<double>(k + 1)));
        b = (k + static_cast<double>(n)) * (k - static_cast<double>(n)) * b /
            ((k + 0.5) * (k + 1.0));
    }
    return acc / d;
}

cplx zeta_oracle(cplx s) {
    if (!(s.real() > 1.1)) fail(errc::domain_error, "zeta_oracle requires re s > 1.1");
    const double t = std::abs(s.imag());
    const long N = std::max<long>(24, static_cast<long>(t / 3.0) + 12);
    // Direct sum with Euler-Maclaurin tail: zeta(s) = sum_{n<N} n^-s
    //   + N^(1-s)/(s-1) + N^-s/2 + sum_r B_{2r}/(2r)! s(s+1)...(s+2r-2) N^(-s-2r+1).
    static const double B[10] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66,
                                 -691.0 / 2730, 7.0 / 6, -3617.0 / 510, 43867.0 / 798,
                                 -174611.0 / 330};
    cplx acc{0.0, 0.0};
    for (long n = 1; n < N; ++n) acc += std::exp(-s * std::log(static_cast<double>(n)));
    const double logN = std::log(static_cast<double>(N));
    acc += std::exp((1.0 - s) * logN) / (s - 1.0);
    acc += 0.5 * std::exp(-s * logN);
    cplx prod = s;
    double fact = 2.0; // (2r)!
    for (int r = 1; r <= 10; ++r) {
        acc += B[r - 1] / fact * prod * std::exp((-s - (2.0 * r - 1.0)) * logN);
        prod *= (s + (2.0 * r - 1.0)) * (s + 2.0 * r);
        fact *= (2.0 * r + 1.0) * (2.0 * r + 2.0);
    }
    return acc;
}

cplx eta_extended(cplx s) {
    if (std::abs(s.imag()) <= 300.0) return eta_oracle(s);
    if (s.real() >= 1.2) return (1.0 - std::exp((1.0 - s) * std::log(2.0))) * zeta_oracle(s);
    if (s.real() <= -0.2) {
        // zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s), kept in log
        // space until the final magnitude is representable.
        const cplx z1 = zeta_oracle(1.0 - s);
        const cplx log_zeta = s * std::log(2.0) + (s - 1.0) * std::log(kPi) +
                              log_sin(kPi * s / 2.0) + lgamma_fn(1.0 - s) + std::log(z1);
        const cplx eta_factor = 1.0 - std::exp((1.0 - s) * std::log(2.0));
        return std::exp(log_zeta + std::log(eta_factor));
    }
    fail(errc::domain_error, "eta_extended: strip 0.2 < re s < 1.2 unsupported at |im s| > 300");
}

cplx cesaro_eval(const DirichletSeries& D, cplx s, index_t N) {
    if (D.frequency().generator() != GeneratorKind::log)
        fail(errc::wrong_frequency, "Cesaro evaluation is defined for the (log n) frequency");
    if (N < 1) fail(errc::domain_error, "N must be >= 1");
    cplx partial{0.0, 0.0};
    cplx acc{0.0, 0.0};
    for (index_t n = 1; n <= N; ++n) {
        partial += D.coefficient(n) * std::exp(-s * std::log(static_cast<double>(n)));
        acc += partial;
    }
    return acc / static_cast<double>(N);
}

namespace {

CoefficientRule ones() {
    return [](index_t) { return cplx{1.0, 0.0}; };
}

CoefficientRule alternating() {
    return [](index_t n) { return cplx{n % 2 == 1 ? 1.0 : -1.0, 0.0}; };
}

OracleRegion whole_plane() {
    return {"entire plane", [](cplx) { return true; }};
}

} // namespace

std::vector<CatalogEntry> catalog_list() {
    std::vector<CatalogEntry> out;

    {
        CatalogEntry e;
        e.name = "single-0";
        e.series = DirichletSeries(
            make_frequency({0.0, 1.0, 2.0}, GeneratorKind::none, "single-0"),
            [](index_t n) { return n == 1 ? cplx{1.0, 0.0} : cplx{0.0, 0.0}; }, 0.0, "single-0");
        e.oracle = [](cplx) { return cplx{1.0, 0.0}; };
        e.oracle_region = whole_plane();
        e.known_facts = {
            {"sigma_c", -std::numeric_limits<double>::infinity(), "exact",
             "finite sums converge everywhere"},
            {"norm_inf_0", 1.0, "exact", "constant limit function"},
        };
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "single-1";
        e.series = DirichletSeries(
            power_frequency("power"),
            [](index_t n) { return n == 1 ? cplx{1.0, 0.0} : cplx{0.0, 0.0}; }, 0.0, "single-1");
        e.oracle = [](cplx s) { return std::exp(-s); };
        e.oracle_region = whole_plane();
        e.known_facts = {
            {"sigma_c", -std::numeric_limits<double>::infinity(), "exact",
             "finite sums converge everywhere"},
            {"lambda_1", 1.0, "exact", "first frequency"},
        };
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "geometric";
        e.series = DirichletSeries(power_frequency("power"), ones(), 0.0, "geometric");
        e.oracle = [](cplx s) { return 1.0 / (std::exp(s) - 1.0); };
        e.oracle_region = {"re s > 0", [](cplx s) { return s.real() > 0.0; }};
        e.known_facts = {
            {"sigma_c", 0.0, "computed", "partial sums grow linearly below 0"},
            {"sigma_a", 0.0, "computed", "positive coefficients"},
            {"limit_at_1", 1.0 / (std::exp(1.0) - 1.0), "exact", "geometric sum"},
        };
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "eta";
        e.series = DirichletSeries(log_frequency("ordinary"), alternating(), 1.0, "eta");
        e.oracle = [](cplx s) { return eta_extended(s); };
        e.oracle_region = {
            "|im s| <= 300, or re s >= 1.2, or re s <= -0.2",
            [](cplx s) {
                return std::abs(s.imag()) <= 300.0 || s.real() >= 1.2 || s.real() <= -0.2;
            }};
        e.known_facts = {
            {"sigma_c", 0.0, "literature", "alternating series converges on re s > 0"},
            {"sigma_a", 1.0, "exact", "absolute values give the harmonic scale"},
            {"order_at_-1", 1.5, "literature", "line order 1/2 - sigma left of 0"},
            {"order_at_2", 0.0, "literature", "line order 0 right of 1"},
            {"space_membership_ell", 1.0, "literature",
             "member of the growth-(1+|s|)^ell class for every ell > 1/2"},
            {"space_nonmembership_ell_below", 0.5, "literature",
             "not a member below ell = 1/2; no finite computation decides this", false},
        };
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "zeta";
        e.series = DirichletSeries(log_frequency("ordinary"), ones(), 0.0, "zeta");
        e.oracle = [](cplx s) { return zeta_oracle(s); };
        e.oracle_region = {"re s > 1.1", [](cplx s) { return s.real() > 1.1; }};
        e.known_facts = {
            {"sigma_c", 1.0, "literature", "harmonic threshold"},
            {"sigma_a", 1.0, "literature", "positive coefficients"},
            {"limit_at_2", kPi * kPi / 6.0, "literature", "value at s = 2"},
        };
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "zeta-translate-2";
        e.series = DirichletSeries(
            log_frequency("ordinary"),
            [](index_t n) { return cplx{std::pow(static_cast<double>(n), -2.0), 0.0}; }, 0.0,
            "zeta-translate-2");
        e.oracle = [](cplx s) { return zeta_oracle(s + 2.0); };
        e.oracle_region = {"re s > -0.9", [](cplx s) { return s.real() > -0.9; }};
        e.known_facts = {
            {"sigma_c", -1.0, "computed", "coefficients n^-2 push the threshold left"},
            {"sigma_a", -1.0, "computed", "positive coefficients"},
            {"norm_bound_0", kPi * kPi / 6.0, "exact", "bounded by the value at 0"},
        };
        out.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "sqrtlog-alt";
        e.series =
            DirichletSeries(sqrtlog_frequency("sqrt-log"), alternating(), 0.0, "sqrtlog-alt");
        e.oracle = nullptr;
        e.oracle_region = {"none (no closed evaluation)", [](cplx) { return false; }};
        e.known_facts = {
            {"L_lambda", std::numeric_limits<double>::infinity(), "computed",
             "log(n)/sqrt(log n) diverges"},
            {"satisfies_lc", 1.0, "literature", "spacing passes the double-exponential test"},
            {"satisfies_bc", 0.0, "literature", "spacing fails the single-exponential test"},
        };
        out.push_back(std::move(e));
    }
    return out;
}

CatalogEntry catalog_entry(const std::string& name) {
    for (auto& e : catalog_list())
        if (e.name == name) return e;
    fail(errc::unknown_catalog_entry, "no catalog entry named '" + name + "'");
}

} // namespace riesz
