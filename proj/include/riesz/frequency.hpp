#ifndef RIESZ_FREQUENCY_HPP
#define RIESZ_FREQUENCY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace riesz {

using index_t = std::int64_t; // frequency indices are 1-based

enum class GeneratorKind { none, power, log, sqrtlog };

const char* generator_kind_name(GeneratorKind k);
GeneratorKind generator_kind_from_name(const std::string& name);

/// A frequency: a strictly increasing, non-negative real sequence.
/// Holds a finite stored prefix plus an optional generator rule for lazy
/// extension. Without a generator the sequence is treated as finite.
class Frequency {
public:
    Frequency() = default;

    double at(index_t n) const;                  // 1-based; RangeExceeded beyond coverage
    index_t count_below(double x) const;         // #{ n : lambda_n < x }
    bool has_generator() const { return gen_ != GeneratorKind::none; }
    GeneratorKind generator() const { return gen_; }
    index_t stored() const { return static_cast<index_t>(prefix_.size()); }
    const std::vector<double>& prefix() const { return prefix_; }
    const std::string& label() const { return label_; }

    /// Largest index such that all of 1..n are available (huge for generators).
    index_t max_index() const;

private:
    friend Frequency make_frequency(std::vector<double>, GeneratorKind, std::string);

    std::vector<double> prefix_;
    GeneratorKind gen_ = GeneratorKind::none;
    std::string label_;
};

/// Builds a frequency from a stored prefix and an optional generator rule.
/// Errors: NotIncreasing, NegativeFirst; RangeExceeded later on access past
/// the prefix when no generator is present. A generator must agree with the
/// stored prefix on all stored indices.
Frequency make_frequency(std::vector<double> prefix,
                         GeneratorKind generator = GeneratorKind::none,
                         std::string label = "custom");

Frequency power_frequency(std::string label = "power");     // lambda_n = n
Frequency log_frequency(std::string label = "ordinary");    // lambda_n = log n
Frequency sqrtlog_frequency(std::string label = "sqrt-log");// lambda_n = sqrt(log n)

enum class Condition { BC, LC, NC };

struct IndexRange {
    index_t first = 1;
    index_t last = 1;
};

/// Finite-range verdict for one of the spacing conditions (BC), (LC), (NC).
/// `witness_constant` is the running sup (BC, NC) or inf (LC) over the range;
/// `holds` means the witness stayed in range and was stable over the last
/// decade of indices (relative change < 1%).
struct ConditionReport {
    Condition condition = Condition::BC;
    double parameter = 0.0;       // beta for BC, delta for LC/NC
    double witness_constant = 0.0;
    IndexRange checked_range;
    bool holds = false;
};

ConditionReport check_bc(const Frequency& freq, double beta, IndexRange range);
ConditionReport check_lc(const Frequency& freq, double delta, IndexRange range);
ConditionReport check_nc(const Frequency& freq, double delta, IndexRange range);

/// Log-space cores behind the public checks; `log_gaps[i]` is
/// log(lambda_{first+i+1} - lambda_{first+i}). Exposed so that gap scales far
/// below the representable range of the lambda values themselves can still be
/// examined. Returns {holds, log of witness}.
struct LogWitness {
    bool holds = false;
    double log_witness = 0.0;
};
LogWitness bc_witness_log(const std::vector<double>& log_gaps,
                          const std::vector<double>& lambdas, double beta);
LogWitness lc_witness_log(const std::vector<double>& log_gaps,
                          const std::vector<double>& lambdas, double delta);

/// Estimate of L(lambda) = limsup log(N) / lambda_N: running sup of
/// log(n)/lambda_n over the tail window [N/2, N]. Values above `cap` are
/// reported as +infinity.
double estimate_L(const Frequency& freq, index_t N, double cap = 3.0);

} // namespace riesz

#endif
