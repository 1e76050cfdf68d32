#ifndef RIESZ_ABSCISSA_HPP
#define RIESZ_ABSCISSA_HPP

#include <functional>
#include <vector>

#include "riesz/series.hpp"

namespace riesz {

enum class AbscissaKind { pointwise, uniform, absolute };

/// Finite-window surrogate of the limsup formula
///   sigma <= limsup_x log|R_x(0)| / x.
/// `value` is a running sup over the tail half of the window; for series with
/// negative abscissa it is an upper bound only.
struct AbscissaEstimate {
    double value = 0.0; // may be -infinity when every sampled mean vanishes
    AbscissaKind kind = AbscissaKind::pointwise;
    double riesz_order = 0.0;
    std::pair<double, double> window{0.0, 0.0};
    std::vector<std::pair<double, double>> slope_trace; // (x, log|mean|/x)
};

/// Least-squares growth exponent of log|f(sigma + it)| against log|t|.
struct OrderEstimate {
    double sigma = 0.0;
    double exponent = 0.0; // clipped below at 0
    std::pair<double, double> fit_range{0.0, 0.0};
    double residual = 0.0; // max deviation from the fitted line
};

/// Truncated cone |arg(s - apex)| <= half_angle, radii in [0.1, 5] by default.
struct ConeSpec {
    cplx apex{0.0, 0.0};
    double half_angle = 0.0; // in (0, pi/2)
    double radius_min = 0.1;
    double radius_max = 5.0;
};

AbscissaEstimate bohr_cahen_pointwise(const DirichletSeries& D, double k,
                                      const std::vector<double>& xs,
                                      RieszKind kind = RieszKind::first);

AbscissaEstimate bohr_cahen_uniform(const DirichletSeries& D, double k,
                                    const std::vector<double>& xs,
                                    const std::vector<double>& t_grid,
                                    RieszKind kind = RieszKind::first);

AbscissaEstimate absolute_abscissa(const DirichletSeries& D, const std::vector<double>& xs);

OrderEstimate order_at(const std::function<cplx(cplx)>& f, double sigma,
                       const std::vector<double>& t_grid);

/// Max tail oscillation of the partial sums over sampled points of the cone:
///   max over sampled s of  max_{x, x' in the last quartile} |S_x(s) - S_x'(s)|.
double cone_uniformity(const DirichletSeries& D, const ConeSpec& cone,
                       const std::vector<double>& xs, int ray_samples);

/// Increasing grid helpers.
std::vector<double> linear_grid(double lo, double hi, int n);
std::vector<double> log_grid(double lo, double hi, int n);

} // namespace riesz

#endif
