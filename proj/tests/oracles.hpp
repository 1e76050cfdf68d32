// Test-side oracles, deliberately independent of the library's quadrature and
// summation machinery: adaptive Simpson integration and direct enumeration.
#ifndef RIESZ_TESTS_ORACLES_HPP
#define RIESZ_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracles {

using cplx = std::complex<double>;

namespace detail {

template <typename T>
T simpson_slice(const std::function<T(double)>& f, double a, double b, T fa, T fm, T fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename T>
T adaptive_step(const std::function<T(double)>& f, double a, double b, T fa, T fm, T fb, T whole,
                double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const T flm = f(lm), frm = f(rm);
    const T left = simpson_slice(f, a, m, fa, flm, fm);
    const T right = simpson_slice(f, m, b, fm, frm, fb);
    const T sum = left + right;
    if (depth <= 0 || std::abs(sum - whole) < 15.0 * tol) return sum + (sum - whole) / 15.0;
    return adaptive_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

} // namespace detail

template <typename T>
T integrate(const std::function<T(double)>& f, double a, double b, double tol = 1e-11,
            int depth = 48) {
    const double m = 0.5 * (a + b);
    const T fa = f(a), fm = f(m), fb = f(b);
    const T whole = detail::simpson_slice(f, a, b, fa, fm, fb);
    return detail::adaptive_step(f, a, b, fa, fm, fb, whole, tol, depth);
}

inline double integrate_real(const std::function<double(double)>& f, double a, double b,
                             double tol = 1e-11) {
    return integrate<double>(f, a, b, tol);
}

inline cplx integrate_cplx(const std::function<cplx(double)>& f, double a, double b,
                           double tol = 1e-11) {
    return integrate<cplx>(f, a, b, tol);
}

/// Beta integral int_0^1 y^(p-1) (1-y)^(q-1) dy through the substitution
/// y = sin^2(theta), which removes both endpoint singularities for p, q >= 1/2.
inline double beta_integral(double p, double q) {
    return integrate_real(
        [p, q](double th) {
            const double s = std::sin(th), c = std::cos(th);
            return 2.0 * std::pow(s, 2.0 * p - 1.0) * std::pow(c, 2.0 * q - 1.0);
        },
        0.0, 1.5707963267948966);
}

/// Moment integral int_0^x y^p (x-y)^(q-p-1) dy via y = x sin^2(theta);
/// smooth for p > -1/2 and q - p - 1 > -1/2.
inline double moment_integral(double p, double q, double x) {
    const double alpha = q - p - 1.0;
    return std::pow(x, q) *
           integrate_real(
               [p, alpha](double th) {
                   const double s = std::sin(th), c = std::cos(th);
                   return 2.0 * std::pow(s, 2.0 * p + 1.0) * std::pow(c, 2.0 * alpha + 1.0);
               },
               0.0, 1.5707963267948966);
}

/// Piecewise integration of t -> g(t) with known breakpoints, adaptive per cell.
inline cplx integrate_piecewise(const std::function<cplx(double)>& g, double a, double b,
                                const std::vector<double>& breakpoints, double tol = 1e-11) {
    std::vector<double> edges{a};
    for (double t : breakpoints)
        if (t > a && t < b) edges.push_back(t);
    edges.push_back(b);
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        acc += integrate_cplx(g, edges[i], edges[i + 1], tol);
    return acc;
}

} // namespace oracles

#endif
