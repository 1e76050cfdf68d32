#ifndef RIESZ_SPACES_HPP
#define RIESZ_SPACES_HPP

#include <functional>
#include <string>
#include <vector>

#include "riesz/series.hpp"

namespace riesz {

/// Sample grid on the right half-plane: s = sigma + it over the product of
/// `sigma_values` (increasing, positive) and `t_values` (symmetric around 0).
struct EvalGrid {
    std::vector<double> sigma_values;
    std::vector<double> t_values;
    std::string resolution; // human-readable description of the spacing
};

EvalGrid default_eval_grid();                       // 40 x 1001 points
EvalGrid coarse_eval_grid();                        // 12 x 101, for sweeps over many means
EvalGrid make_eval_grid(double sigma_min, double sigma_max, int n_sigma,
                        double t_sup, int n_t);

struct NormSpec {
    double ell = 0.0;
    EvalGrid grid;
};

/// Grid maximum of |f(s)| / (1 + |s|)^ell; a lower bound of the true sup.
struct NormEstimate {
    double value = 0.0;
    cplx argmax{0.0, 0.0}; // grid point attaining the max
    EvalGrid grid_used;
};

NormEstimate norm_inf_ell(const std::function<cplx(cplx)>& f, const NormSpec& spec);

/// Weighted boundary profile: for each sigma (decreasing toward 0) the value
///   L(sigma) = sup_t | f(sigma + it) / (1 + sigma + it)^ell |,
/// with the sup over t sharpened by local search around the best grid point.
std::vector<std::pair<double, double>> far_left_profile(const std::function<cplx(cplx)>& f,
                                                        double ell,
                                                        const std::vector<double>& sigmas,
                                                        const std::vector<double>& t_grid);

/// Max convexity defect of log L(sigma) on uniformly spaced abscissas in
/// [sigma1, sigma2]: max over interior points of
///   log L(sigma_i) - (log L(sigma_{i-1}) + log L(sigma_{i+1})) / 2.
/// The convexity statement assumes f bounded on the strip; that precondition
/// is the caller's to assert (an unbounded f simply yields a meaningless
/// defect, e.g. f(s) = e^{+s} is a rejected input by contract).
double log_convexity_check(const std::function<cplx(cplx)>& f, double sigma1, double sigma2,
                           int n_abscissas, const std::vector<double>& t_grid);

/// Decay profile far right: for each sigma the value
///   sup_t |f(sigma + it)| / (1 + |t|)^ell,
/// with f evaluated through Riesz limits of the series (lambda_1 > 0 required).
std::vector<std::pair<double, double>> far_right_decay(const DirichletSeries& D, double ell,
                                                       const std::vector<double>& sigmas,
                                                       const std::vector<double>& t_grid);

/// Ratio trace of the Riesz-mean projections: for each x in xs the value
///   norm_inf_ell(R_x)(grid) / f_norm,
/// where f_norm is the caller-computed norm estimate of the limit function
/// (limit functions near the boundary are only reachable through an oracle).
struct MaximalRatio {
    double sup_ratio = 0.0;
    std::vector<std::pair<double, double>> trace; // (x, ratio)
};
MaximalRatio maximal_ratio(const DirichletSeries& D, double ell, double k,
                           const std::vector<double>& xs, const EvalGrid& norm_grid,
                           double f_norm, RieszKind kind = RieszKind::first);

/// A series together with an independent evaluator of its limit function.
struct SeriesWithLimit {
    DirichletSeries series;
    std::function<cplx(cplx)> limit;
};

/// Smallest grid x0 such that for every x > x0 in xs and every member f:
///   norm_inf_ell( f(u + .) - R_x(u + .) ) <= eps.
/// NotReached when no such x0 exists within the grid. Over the (log n)
/// frequency the first-kind means close the gap only at x beyond any term
/// budget (O(1/x) rate), so log-frequency sets are usually driven with
/// second-kind means.
double uniform_riesz_approx(const std::vector<SeriesWithLimit>& f_set, double ell, double k,
                            double u, double eps, const std::vector<double>& xs,
                            const EvalGrid& norm_grid, RieszKind kind = RieszKind::first);

/// Coefficient-functional data: lhs = |sum_{n<=N} a_n| and
/// rhs_shape = (lambda_{N+1}/(lambda_{N+1}-lambda_N))^k * f_norm.
std::pair<double, double> coefficient_bound_check(const DirichletSeries& D, double ell, double k,
                                                  index_t N, double f_norm);

} // namespace riesz

#endif
