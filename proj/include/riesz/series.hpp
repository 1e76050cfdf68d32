#ifndef RIESZ_SERIES_HPP
#define RIESZ_SERIES_HPP

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "riesz/frequency.hpp"

namespace riesz {

using cplx = std::complex<double>;
using CoefficientRule = std::function<cplx(index_t)>; // 1-based

/// A lambda-Dirichlet series: frequency plus a coefficient provider.
/// Coefficients are rules, not stored arrays, so series over (log n) with
/// millions of relevant terms stay cheap to describe.
class DirichletSeries {
public:
    DirichletSeries() = default;
    DirichletSeries(Frequency freq, CoefficientRule coeff,
                    std::optional<double> germ_order = std::nullopt,
                    std::string label = "series");

    const Frequency& frequency() const { return freq_; }
    cplx coefficient(index_t n) const { return coeff_(n); }
    std::optional<double> germ_order() const { return germ_order_; }
    const std::string& label() const { return label_; }

private:
    Frequency freq_;
    CoefficientRule coeff_;
    std::optional<double> germ_order_;
    std::string label_;
};

enum class RieszKind { first, second };

struct RieszSpec {
    double order = 0.0;   // k >= 0
    RieszKind kind = RieszKind::first;
};

/// Sampled Riesz-mean trajectory with a tail-based convergence verdict.
struct ConvergenceReport {
    std::vector<std::pair<double, cplx>> samples; // strictly increasing in x
    cplx limit_estimate{0.0, 0.0};
    double tail_delta = 0.0; // max |value - limit_estimate| over the last quartile
    bool converged = false;
};

/// Partial sum  sum_{lambda_n < x} a_n e^{-lambda_n s}  (strict cutoff).
cplx partial_sum(const DirichletSeries& D, cplx s, double x);

/// Riesz mean of order spec.order. First kind uses the weight
/// (1 - lambda_n/x)^k, second kind (1 - e^(lambda_n - x))^k. k = 0 reduces
/// to the plain partial sum for both kinds.
cplx riesz_mean(const DirichletSeries& D, RieszSpec spec, cplx s, double x);

/// Summatory function  sum_{lambda_n < x} a_n e^{-lambda_n s} (x - lambda_n)^k
/// = x^k * first-kind Riesz mean.
cplx summatory(const DirichletSeries& D, double k, cplx s, double x);

/// Translated series with coefficients a_n e^{-lambda_n w}; same frequency.
DirichletSeries translate(const DirichletSeries& D, cplx w);

/// Samples the Riesz mean along `schedule` (increasing). The limit estimate is
/// the value at the largest x, or the mean of the last quartile when
/// `averaged` is set. Convergence is judged by the last-quartile oscillation.
ConvergenceReport riesz_limit(const DirichletSeries& D, RieszSpec spec, cplx s,
                              const std::vector<double>& schedule, double tolerance,
                              bool averaged = false);

/// The decay sequence ((lambda_{N+1}-lambda_N)/lambda_{N+1})^k (sum_{n<=N} a_n e^{-lambda_n s} - C)
/// for N = 1..N_max; C is the caller-supplied Riesz limit.
std::vector<std::pair<index_t, cplx>> partial_sum_decay(const DirichletSeries& D, double k,
                                                             cplx s, cplx C, index_t N_max);

} // namespace riesz

#endif
