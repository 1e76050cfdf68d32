#include "riesz/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "riesz/errors.hpp"

namespace riesz {

namespace {

int thread_budget() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("RIESZ_LAB_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1 && static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
    }
    return static_cast<int>(hw);
}

// Chunked parallel max; deterministic because max-reduction is order-free.
template <typename Eval>
std::pair<double, std::size_t> parallel_argmax(std::size_t count, Eval&& eval) {
    const int threads = std::min<int>(thread_budget(), 8);
    if (threads <= 1 || count < 256) {
        double best = -1.0;
        std::size_t at = 0;
        for (std::size_t i = 0; i < count; ++i) {
            const double v = eval(i);
            if (v > best) {
                best = v;
                at = i;
            }
        }
        return {best, at};
    }
    std::vector<double> best(static_cast<std::size_t>(threads), -1.0);
    std::vector<std::size_t> at(static_cast<std::size_t>(threads), 0);
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                const std::size_t lo = count * static_cast<std::size_t>(t) / threads;
                const std::size_t hi = count * (static_cast<std::size_t>(t) + 1) / threads;
                for (std::size_t i = lo; i < hi; ++i) {
                    const double v = eval(i);
                    if (v > best[static_cast<std::size_t>(t)]) {
                        best[static_cast<std::size_t>(t)] = v;
                        at[static_cast<std::size_t>(t)] = i;
                    }
                }
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
    std::size_t winner = 0;
    for (std::size_t t = 1; t < best.size(); ++t)
        if (best[t] > best[winner]) winner = t;
    return {best[winner], at[winner]};
}

// Sharpen sup_t g(t) by golden-section steps around the best grid point.
template <typename G>
double refine_sup(G&& g, const std::vector<double>& t_grid, std::size_t best_idx,
                  double best_val) {
    if (t_grid.size() < 3) return best_val;
    const std::size_t i = std::min(std::max<std::size_t>(best_idx, 1), t_grid.size() - 2);
    double lo = t_grid[i - 1], hi = t_grid[i + 1];
    const double phi = 0.6180339887498949;
    double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
    double f1 = g(x1), f2 = g(x2);
    for (int it = 0; it < 40; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = g(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = g(x1);
        }
    }
    return std::max({best_val, f1, f2});
}

double weighted_mod(const std::function<cplx(cplx)>& f, cplx s, double ell) {
    cplx v;
    try {
        v = f(s);
    } catch (const Error&) {
        fail(errc::evaluation_failure, "function handle failed on the grid");
    }
    const double mag = std::abs(v);
    if (!std::isfinite(mag)) fail(errc::evaluation_failure, "non-finite sample on the grid");
    return mag / std::pow(1.0 + std::abs(s), ell);
}

} // namespace

EvalGrid make_eval_grid(double sigma_min, double sigma_max, int n_sigma, double t_sup, int n_t) {
    if (!(sigma_min > 0.0) || !(sigma_max > sigma_min))
        fail(errc::domain_error, "grid abscissas must be positive and increasing");
    EvalGrid g;
    g.sigma_values.resize(static_cast<std::size_t>(n_sigma));
    for (int i = 0; i < n_sigma; ++i)
        g.sigma_values[static_cast<std::size_t>(i)] =
            sigma_min * std::pow(sigma_max / sigma_min, i / (n_sigma - 1.0));
    if (n_t % 2 == 0) ++n_t; // keep t = 0 on the grid
    g.t_values.resize(static_cast<std::size_t>(n_t));
    for (int i = 0; i < n_t; ++i)
        g.t_values[static_cast<std::size_t>(i)] = -t_sup + 2.0 * t_sup * i / (n_t - 1.0);
    g.resolution = std::to_string(n_sigma) + " log-spaced abscissas in [" +
                   std::to_string(sigma_min) + ", " + std::to_string(sigma_max) + "], " +
                   std::to_string(n_t) + " ordinates in [-" + std::to_string(t_sup) + ", " +
                   std::to_string(t_sup) + "]";
    return g;
}

EvalGrid default_eval_grid() { return make_eval_grid(1e-3, 20.0, 40, 50.0, 1001); }

EvalGrid coarse_eval_grid() { return make_eval_grid(1e-3, 20.0, 12, 50.0, 101); }

NormEstimate norm_inf_ell(const std::function<cplx(cplx)>& f, const NormSpec& spec) {
    if (spec.ell < 0.0) fail(errc::domain_error, "growth exponent must be >= 0");
    const auto& sig = spec.grid.sigma_values;
    const auto& ts = spec.grid.t_values;
    if (sig.empty() || ts.empty()) fail(errc::domain_error, "empty evaluation grid");

    const std::size_t count = sig.size() * ts.size();
    auto eval = [&](std::size_t idx) {
        const cplx s(sig[idx / ts.size()], ts[idx % ts.size()]);
        return weighted_mod(f, s, spec.ell);
    };
    auto [best, at] = parallel_argmax(count, eval);

    NormEstimate est;
    est.value = best;
    est.argmax = cplx(sig[at / ts.size()], ts[at % ts.size()]);
    est.grid_used = spec.grid;
    return est;
}

std::vector<std::pair<double, double>> far_left_profile(const std::function<cplx(cplx)>& f,
                                                        double ell,
                                                        const std::vector<double>& sigmas,
                                                        const std::vector<double>& t_grid) {
    for (std::size_t i = 0; i + 1 < sigmas.size(); ++i)
        if (!(sigmas[i] > sigmas[i + 1]))
            fail(errc::domain_error, "sigmas must decrease toward 0");
    if (!(sigmas.back() > 0.0)) fail(errc::domain_error, "sigmas must stay positive");

    std::vector<std::pair<double, double>> profile;
    profile.reserve(sigmas.size());
    for (double sigma : sigmas) {
        auto g = [&](double t) {
            const cplx s(sigma, t);
            return std::abs(f(s) / std::pow(1.0 + s, ell));
        };
        double best = -1.0;
        std::size_t at = 0;
        for (std::size_t i = 0; i < t_grid.size(); ++i) {
            const double v = g(t_grid[i]);
            if (v > best) {
                best = v;
                at = i;
            }
        }
        profile.emplace_back(sigma, refine_sup(g, t_grid, at, best));
    }
    return profile;
}

double log_convexity_check(const std::function<cplx(cplx)>& f, double sigma1, double sigma2,
                           int n_abscissas, const std::vector<double>& t_grid) {
    if (!(0.0 < sigma1 && sigma1 < sigma2)) fail(errc::domain_error, "need 0 < sigma1 < sigma2");
    if (n_abscissas < 3) fail(errc::domain_error, "need at least 3 abscissas");

    std::vector<double> logL(static_cast<std::size_t>(n_abscissas));
    for (int i = 0; i < n_abscissas; ++i) {
        const double sigma = sigma1 + (sigma2 - sigma1) * i / (n_abscissas - 1.0);
        auto g = [&](double t) { return std::abs(f(cplx(sigma, t))); };
        double best = -1.0;
        std::size_t at = 0;
        for (std::size_t j = 0; j < t_grid.size(); ++j) {
            const double v = g(t_grid[j]);
            if (v > best) {
                best = v;
                at = j;
            }
        }
        best = refine_sup(g, t_grid, at, best);
        if (!(best > 0.0)) fail(errc::evaluation_failure, "vanishing strip supremum");
        logL[static_cast<std::size_t>(i)] = std::log(best);
    }
    double violation = -std::numeric_limits<double>::infinity();
    for (int i = 1; i + 1 < n_abscissas; ++i)
        violation = std::max(violation,
                             logL[static_cast<std::size_t>(i)] -
                                 0.5 * (logL[static_cast<std::size_t>(i - 1)] +
                                        logL[static_cast<std::size_t>(i + 1)]));
    return violation;
}

std::vector<std::pair<double, double>> far_right_decay(const DirichletSeries& D, double ell,
                                                       const std::vector<double>& sigmas,
                                                       const std::vector<double>& t_grid) {
    if (!(D.frequency().at(1) > 0.0))
        fail(errc::lambda1_zero, "far-right decay needs lambda_1 > 0");
    for (std::size_t i = 0; i + 1 < sigmas.size(); ++i)
        if (!(sigmas[i] < sigmas[i + 1])) fail(errc::domain_error, "sigmas must increase");
    if (!(sigmas.front() > 0.0)) fail(errc::domain_error, "sigmas must be positive");

    const double k = std::floor(ell) + 1.0;
    std::vector<std::pair<double, double>> profile;
    profile.reserve(sigmas.size());
    for (double sigma : sigmas) {
        // Second-kind means converge geometrically here; x is set so that the
        // dropped tail is negligible against the profile values.
        const double x_max =
            std::max(D.frequency().at(1) + 18.0, 45.0 / std::max(sigma, 0.25));
        double sup = 0.0;
        for (double t : t_grid) {
            const cplx val =
                riesz_mean(D, RieszSpec{k, RieszKind::second}, cplx(sigma, t), x_max);
            sup = std::max(sup, std::abs(val) / std::pow(1.0 + std::abs(t), ell));
        }
        profile.emplace_back(sigma, sup);
    }
    return profile;
}

MaximalRatio maximal_ratio(const DirichletSeries& D, double ell, double k,
                           const std::vector<double>& xs, const EvalGrid& norm_grid,
                           double f_norm, RieszKind kind) {
    if (!(k > ell)) fail(errc::domain_error, "maximal ratio needs k > ell");
    if (f_norm < 1e-15) fail(errc::zero_norm, "norm of the limit function below floor");

    NormSpec spec{ell, norm_grid};
    MaximalRatio out;
    for (double x : xs) {
        auto mean = [&](cplx s) { return riesz_mean(D, RieszSpec{k, kind}, s, x); };
        const NormEstimate nr = norm_inf_ell(mean, spec);
        const double ratio = nr.value / f_norm;
        out.trace.emplace_back(x, ratio);
        out.sup_ratio = std::max(out.sup_ratio, ratio);
    }
    return out;
}

double uniform_riesz_approx(const std::vector<SeriesWithLimit>& f_set, double ell, double k,
                            double u, double eps, const std::vector<double>& xs,
                            const EvalGrid& norm_grid, RieszKind kind) {
    if (!(k > ell)) fail(errc::domain_error, "uniform approximation needs k > ell");
    if (!(u > 0.0) || !(eps > 0.0)) fail(errc::domain_error, "u and eps must be positive");
    if (f_set.empty()) fail(errc::domain_error, "empty function set");

    NormSpec spec{ell, norm_grid};
    std::vector<double> dev(xs.size(), 0.0);
    for (const auto& member : f_set) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double x = xs[i];
            auto diff = [&](cplx s) {
                return member.limit(u + s) - riesz_mean(member.series, RieszSpec{k, kind}, u + s, x);
            };
            dev[i] = std::max(dev[i], norm_inf_ell(diff, spec).value);
        }
    }
    // Smallest grid point past which every deviation stays below eps.
    std::size_t idx = xs.size();
    for (std::size_t i = xs.size(); i-- > 0;) {
        if (dev[i] <= eps)
            idx = i;
        else
            break;
    }
    if (idx == xs.size()) {
        double worst = 0.0;
        for (double d : dev) worst = std::max(worst, d);
        fail(errc::not_reached,
             "no grid point reaches eps; largest deviation " + std::to_string(worst));
    }
    return xs[idx];
}

std::pair<double, double> coefficient_bound_check(const DirichletSeries& D, double ell, double k,
                                                  index_t N, double f_norm) {
    if (!(k > ell)) fail(errc::domain_error, "coefficient bound needs k > ell");
    cplx acc{0.0, 0.0};
    for (index_t n = 1; n <= N; ++n) acc += D.coefficient(n);
    const double lamN = D.frequency().at(N);
    const double lamN1 = D.frequency().at(N + 1);
    const double shape = std::pow(lamN1 / (lamN1 - lamN), k) * f_norm;
    return {std::abs(acc), shape};
}

} // namespace riesz
