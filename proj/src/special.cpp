#include "riesz/special.hpp"

#include <cmath>

#include "riesz/errors.hpp"

namespace riesz {

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczosCoef[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};
constexpr double kHalfLog2Pi = 0.91893853320467274178; // log(sqrt(2 pi))

cplx lanczos_series(cplx zm1) {
    cplx x = kLanczosCoef[0];
    for (int i = 1; i < 9; ++i) x += kLanczosCoef[i] / (zm1 + static_cast<double>(i));
    return x;
}

} // namespace

cplx gamma_fn(cplx z) {
    if (!(z.real() > 0.0)) fail(errc::domain_error, "gamma_fn requires re z > 0");
    const cplx zm1 = z - 1.0;
    const cplx t = zm1 + kLanczosG + 0.5;
    const cplx x = lanczos_series(zm1);
    return std::sqrt(2.0 * 3.14159265358979323846) * std::pow(t, zm1 + 0.5) * std::exp(-t) * x;
}

cplx lgamma_fn(cplx z) {
    if (!(z.real() > 0.0)) fail(errc::domain_error, "lgamma_fn requires re z > 0");
    const cplx zm1 = z - 1.0;
    const cplx t = zm1 + kLanczosG + 0.5;
    const cplx x = lanczos_series(zm1);
    return kHalfLog2Pi + (zm1 + 0.5) * std::log(t) - t + std::log(x);
}

cplx log_sin(cplx z) {
    const double y = z.imag();
    const cplx i(0.0, 1.0);
    if (y > 20.0)
        return -i * z + std::log(0.5 * i) + std::log(1.0 - std::exp(2.0 * i * z));
    if (y < -20.0)
        return i * z + std::log(-0.5 * i) + std::log(1.0 - std::exp(-2.0 * i * z));
    return std::log(std::sin(z));
}

cplx beta_fn(cplx p, cplx q) {
    if (!(p.real() > 0.0) || !(q.real() > 0.0))
        fail(errc::domain_error, "beta_fn requires re p, re q > 0");
    return gamma_fn(p) * gamma_fn(q) / gamma_fn(p + q);
}

double beta_moment(double p, double q, double x) {
    if (!(p > -1.0)) fail(errc::domain_error, "beta_moment requires p > -1");
    if (!(q - p - 1.0 > -1.0)) fail(errc::domain_error, "beta_moment requires q - p > 0");
    if (!(x > 0.0)) fail(errc::domain_error, "beta_moment requires x > 0");
    const double num = gamma_fn(cplx(p + 1.0, 0.0)).real() * gamma_fn(cplx(q - p, 0.0)).real();
    return std::pow(x, q) * num / gamma_fn(cplx(q + 1.0, 0.0)).real();
}

} // namespace riesz
