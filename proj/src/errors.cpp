#include "riesz/errors.hpp"

namespace riesz {

const char* errc_name(errc c) {
    switch (c) {
        case errc::not_increasing: return "NotIncreasing";
        case errc::negative_first: return "NegativeFirst";
        case errc::range_exceeded: return "RangeExceeded";
        case errc::degenerate_pair: return "DegeneratePair";
        case errc::zero_frequency_tail: return "ZeroFrequencyTail";
        case errc::non_positive_x: return "NonPositiveX";
        case errc::schedule_empty: return "ScheduleEmpty";
        case errc::zero_lambda: return "ZeroLambda";
        case errc::evaluation_failure: return "EvaluationFailure";
        case errc::domain_error: return "DomainError";
        case errc::truncation_too_small: return "TruncationTooSmall";
        case errc::tail_dominates: return "TailDominates";
        case errc::nonintegrable_order: return "NonintegrableOrder";
        case errc::ill_separated: return "IllSeparated";
        case errc::singularity_unresolved: return "SingularityUnresolved";
        case errc::lambda1_zero: return "Lambda1Zero";
        case errc::zero_norm: return "ZeroNorm";
        case errc::not_reached: return "NotReached";
        case errc::precision_loss: return "PrecisionLoss";
        case errc::wrong_frequency: return "WrongFrequency";
        case errc::parse_error: return "ParseError";
        case errc::unknown_catalog_entry: return "UnknownCatalogEntry";
        case errc::tolerance_failure: return "ToleranceFailure";
    }
    return "UnknownError";
}

} // namespace riesz
