#ifndef RIESZ_ERRORS_HPP
#define RIESZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace riesz {

enum class errc {
    not_increasing,
    negative_first,
    range_exceeded,
    degenerate_pair,
    zero_frequency_tail,
    non_positive_x,
    schedule_empty,
    zero_lambda,
    evaluation_failure,
    domain_error,
    truncation_too_small,
    tail_dominates,
    nonintegrable_order,
    ill_separated,
    singularity_unresolved,
    lambda1_zero,
    zero_norm,
    not_reached,
    precision_loss,
    wrong_frequency,
    parse_error,
    unknown_catalog_entry,
    tolerance_failure,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace riesz

#endif
