#ifndef RIESZ_GAUSS_HPP
#define RIESZ_GAUSS_HPP

#include <complex>
#include <functional>
#include <vector>

namespace riesz {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
/// Computed once per order via Newton iteration and cached.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

const GaussRule& gauss_legendre(int order);

/// Integrates f over [a, b] with a single Gauss panel.
template <typename F>
auto gauss_panel(F&& f, double a, double b, int order) -> decltype(f(a)) {
    const GaussRule& rule = gauss_legendre(order);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    decltype(f(a)) acc{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * acc;
}

struct CellIntegral {
    std::complex<double> value{0.0, 0.0};
    int cells = 0;
    bool resolved = true;  // false when a graded mesh hit its depth limit
    double leftover = 0.0; // bound on the sliver dropped at the width floor
};

/// Integrates a piecewise-smooth complex integrand over [a, b].
/// `singular_left` / `singular_right` request geometric grading (ratio 0.5)
/// toward the endpoint, used for integrable algebraic singularities such as
/// (x-a)^alpha or (b-x)^beta with exponent > -1. Grading stops once the last
/// subcell contributes less than `tol` in absolute value.
CellIntegral integrate_cell(const std::function<std::complex<double>(double)>& f,
                            double a, double b, int order,
                            bool singular_left, bool singular_right,
                            double tol);

} // namespace riesz

#endif
