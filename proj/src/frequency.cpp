#include "riesz/frequency.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "riesz/errors.hpp"

namespace riesz {

namespace {

double generated(GeneratorKind kind, index_t n) {
    switch (kind) {
        case GeneratorKind::power: return static_cast<double>(n);
        case GeneratorKind::log: return std::log(static_cast<double>(n));
        case GeneratorKind::sqrtlog: return std::sqrt(std::log(static_cast<double>(n)));
        case GeneratorKind::none: break;
    }
    fail(errc::range_exceeded, "no generator rule for this frequency");
}

// Stability of a running sup/inf trace: relative change over the last decade
// of indices below 1%. Traces shorter than 10 entries count as stable.
// In log scale "relative change of the witness" is a plain difference.
bool stable_tail(const std::vector<double>& running, bool log_scale) {
    const std::size_t n = running.size();
    if (n < 10) return true;
    const double a = running[n / 10];
    const double b = running[n - 1];
    if (std::isinf(a) || std::isinf(b)) return a == b;
    if (log_scale) return std::abs(b - a) < 0.01;
    if (a == 0.0) return b == 0.0;
    return std::abs((b - a) / a) < 0.01;
}

} // namespace

const char* generator_kind_name(GeneratorKind k) {
    switch (k) {
        case GeneratorKind::none: return "none";
        case GeneratorKind::power: return "power";
        case GeneratorKind::log: return "log";
        case GeneratorKind::sqrtlog: return "sqrtlog";
    }
    return "none";
}

GeneratorKind generator_kind_from_name(const std::string& name) {
    if (name == "none") return GeneratorKind::none;
    if (name == "power") return GeneratorKind::power;
    if (name == "log") return GeneratorKind::log;
    if (name == "sqrtlog") return GeneratorKind::sqrtlog;
    fail(errc::parse_error, "unknown generator kind '" + name + "'");
}

double Frequency::at(index_t n) const {
    if (n < 1) fail(errc::range_exceeded, "frequency index must be >= 1");
    if (n <= stored()) return prefix_[static_cast<std::size_t>(n - 1)];
    if (gen_ == GeneratorKind::none)
        fail(errc::range_exceeded, "index " + std::to_string(n) + " beyond stored prefix");
    return generated(gen_, n);
}

index_t Frequency::max_index() const {
    if (gen_ != GeneratorKind::none) return std::numeric_limits<index_t>::max() / 2;
    return stored();
}

index_t Frequency::count_below(double x) const {
    // Strict cutoff lambda_n < x throughout.
    if (gen_ == GeneratorKind::none) {
        auto it = std::lower_bound(prefix_.begin(), prefix_.end(), x);
        return static_cast<index_t>(it - prefix_.begin());
    }
    index_t guess = 0;
    switch (gen_) {
        case GeneratorKind::power:
            guess = static_cast<index_t>(std::ceil(x)) - 1;
            break;
        case GeneratorKind::log:
            if (x > 50.0) fail(errc::evaluation_failure, "count_below: e^x exceeds enumeration budget");
            guess = static_cast<index_t>(std::floor(std::exp(x)));
            break;
        case GeneratorKind::sqrtlog:
            if (x * x > 50.0) fail(errc::evaluation_failure, "count_below: e^(x^2) exceeds enumeration budget");
            guess = static_cast<index_t>(std::floor(std::exp(x * x)));
            break;
        case GeneratorKind::none: break;
    }
    if (guess < 0) guess = 0;
    // Fix up floating-point rounding at the boundary.
    while (guess >= 1 && at(guess) >= x) --guess;
    while (at(guess + 1) < x) ++guess;
    // The stored prefix overrides the rule on stored indices, but construction
    // guarantees agreement, so no further adjustment is needed.
    return guess;
}

Frequency make_frequency(std::vector<double> prefix, GeneratorKind generator, std::string label) {
    if (!prefix.empty()) {
        if (prefix.front() < 0.0) fail(errc::negative_first, "lambda_1 must be non-negative");
        for (std::size_t i = 0; i + 1 < prefix.size(); ++i)
            if (!(prefix[i] < prefix[i + 1]))
                fail(errc::not_increasing,
                     "lambda_" + std::to_string(i + 1) + " >= lambda_" + std::to_string(i + 2));
    }
    if (generator != GeneratorKind::none) {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            const double g = generated(generator, static_cast<index_t>(i + 1));
            if (std::abs(g - prefix[i]) > 1e-12 * std::max(1.0, std::abs(g)))
                fail(errc::not_increasing,
                     "generator disagrees with stored prefix at index " + std::to_string(i + 1));
        }
    }
    if (prefix.empty() && generator == GeneratorKind::none)
        fail(errc::range_exceeded, "frequency needs a prefix or a generator");
    Frequency f;
    f.prefix_ = std::move(prefix);
    f.gen_ = generator;
    f.label_ = std::move(label);
    return f;
}

Frequency power_frequency(std::string label) {
    return make_frequency({1.0, 2.0, 3.0}, GeneratorKind::power, std::move(label));
}

Frequency log_frequency(std::string label) {
    return make_frequency({0.0, std::log(2.0), std::log(3.0)}, GeneratorKind::log, std::move(label));
}

Frequency sqrtlog_frequency(std::string label) {
    return make_frequency({0.0, std::sqrt(std::log(2.0)), std::sqrt(std::log(3.0))},
                          GeneratorKind::sqrtlog, std::move(label));
}

LogWitness bc_witness_log(const std::vector<double>& log_gaps,
                          const std::vector<double>& lambdas, double beta) {
    // (BC): 1 / (lambda_{n+1} - lambda_n) = O(e^{beta lambda_n}).
    // Witness term in log space: -log(gap_n) - beta * lambda_n.
    std::vector<double> running;
    running.reserve(log_gaps.size());
    double sup = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < log_gaps.size(); ++i) {
        sup = std::max(sup, -log_gaps[i] - beta * lambdas[i]);
        running.push_back(sup);
    }
    LogWitness w;
    w.log_witness = sup;
    w.holds = std::isfinite(sup) && stable_tail(running, true);
    return w;
}

LogWitness lc_witness_log(const std::vector<double>& log_gaps,
                          const std::vector<double>& lambdas, double delta) {
    // (LC): lambda_{n+1} - lambda_n >= C e^{-e^{delta lambda_n}}.
    // Witness term in log space: log(gap_n) + e^{delta lambda_n}.
    std::vector<double> running;
    running.reserve(log_gaps.size());
    double inf = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < log_gaps.size(); ++i) {
        double expo = delta * lambdas[i];
        double dblexp = expo > 700.0 ? std::numeric_limits<double>::infinity() : std::exp(expo);
        inf = std::min(inf, log_gaps[i] + dblexp);
        running.push_back(inf);
    }
    LogWitness w;
    w.log_witness = inf;
    // Threshold 1e-300 on the witness itself, checked in log space.
    const double log_floor = -300.0 * std::log(10.0);
    if (std::isinf(inf) && inf > 0.0)
        w.holds = true; // double-exponential factor overflowed upward: trivially positive
    else
        w.holds = inf > log_floor && stable_tail(running, true);
    return w;
}

namespace {

void validate_range(const Frequency& freq, IndexRange range, index_t extra) {
    if (range.first < 1 || range.last < range.first)
        fail(errc::range_exceeded, "invalid index range");
    if (range.last + extra > freq.max_index())
        fail(errc::range_exceeded, "range extends beyond available indices");
}

} // namespace

ConditionReport check_bc(const Frequency& freq, double beta, IndexRange range) {
    if (!(beta > 0.0)) fail(errc::domain_error, "beta must be positive");
    validate_range(freq, range, 1);
    std::vector<double> log_gaps, lambdas;
    log_gaps.reserve(static_cast<std::size_t>(range.last - range.first + 1));
    for (index_t n = range.first; n <= range.last; ++n) {
        const double gap = freq.at(n + 1) - freq.at(n);
        log_gaps.push_back(std::log(gap));
        lambdas.push_back(freq.at(n));
    }
    LogWitness w = bc_witness_log(log_gaps, lambdas, beta);
    ConditionReport rep;
    rep.condition = Condition::BC;
    rep.parameter = beta;
    rep.checked_range = range;
    rep.witness_constant = std::exp(w.log_witness);
    rep.holds = w.holds;
    return rep;
}

ConditionReport check_lc(const Frequency& freq, double delta, IndexRange range) {
    if (!(delta > 0.0)) fail(errc::domain_error, "delta must be positive");
    validate_range(freq, range, 1);
    std::vector<double> log_gaps, lambdas;
    for (index_t n = range.first; n <= range.last; ++n) {
        const double gap = freq.at(n + 1) - freq.at(n);
        log_gaps.push_back(std::log(gap));
        lambdas.push_back(freq.at(n));
    }
    LogWitness w = lc_witness_log(log_gaps, lambdas, delta);
    ConditionReport rep;
    rep.condition = Condition::LC;
    rep.parameter = delta;
    rep.checked_range = range;
    rep.witness_constant = w.log_witness > 700.0 ? std::numeric_limits<double>::infinity()
                                                 : std::exp(w.log_witness);
    rep.holds = w.holds;
    return rep;
}

ConditionReport check_nc(const Frequency& freq, double delta, IndexRange range) {
    if (!(delta > 0.0)) fail(errc::domain_error, "delta must be positive");
    validate_range(freq, range, 0);
    if (range.last <= range.first)
        fail(errc::range_exceeded, "NC needs at least one pair m > n in range");
    // Running sup over n of max over m in (n, last] of
    //   [ log((lambda_m + lambda_n)/(lambda_m - lambda_n)) + (m - n) ] e^{-delta lambda_n}.
    std::vector<double> running;
    double sup = -std::numeric_limits<double>::infinity();
    for (index_t n = range.first; n < range.last; ++n) {
        const double ln = freq.at(n);
        double inner = -std::numeric_limits<double>::infinity();
        for (index_t m = n + 1; m <= range.last; ++m) {
            const double lm = freq.at(m);
            const double diff = lm - ln;
            if (!(diff > 0.0)) fail(errc::degenerate_pair, "lambda_m == lambda_n");
            const double term = (std::log((lm + ln) / diff) + static_cast<double>(m - n)) *
                                std::exp(-delta * ln);
            inner = std::max(inner, term);
        }
        sup = std::max(sup, inner);
        running.push_back(sup);
    }
    ConditionReport rep;
    rep.condition = Condition::NC;
    rep.parameter = delta;
    rep.checked_range = range;
    rep.witness_constant = sup;
    rep.holds = std::isfinite(sup) && stable_tail(running, false);
    return rep;
}

double estimate_L(const Frequency& freq, index_t N, double cap) {
    if (N < 10) fail(errc::domain_error, "estimate_L needs N >= 10");
    if (N > freq.max_index()) fail(errc::range_exceeded, "N beyond available indices");
    double sup = -std::numeric_limits<double>::infinity();
    for (index_t n = N / 2; n <= N; ++n) {
        const double lam = freq.at(n);
        if (lam == 0.0) fail(errc::zero_frequency_tail, "lambda vanishes in the tail window");
        sup = std::max(sup, std::log(static_cast<double>(n)) / lam);
    }
    if (sup > cap) return std::numeric_limits<double>::infinity();
    return sup;
}

} // namespace riesz
