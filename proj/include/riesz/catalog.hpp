#ifndef RIESZ_CATALOG_HPP
#define RIESZ_CATALOG_HPP

#include <functional>
#include <string>
#include <vector>

#include "riesz/series.hpp"

namespace riesz {

/// Dirichlet eta function, entire. Convergence-accelerated evaluation of the
/// alternating series (Cohen-Rodriguez Villegas-Zagier scheme with adaptive
/// depth). Accurate to ~1e-10 for |im s| <= 300; PrecisionLoss beyond.
cplx eta_oracle(cplx s);

/// Riemann zeta for re s > 1.1 (any imaginary part), direct summation with
/// Euler-Maclaurin tail correction. DomainError outside.
cplx zeta_oracle(cplx s);

/// Eta on the extended domain needed by contour integrals and order profiles:
///   |im s| <= 300          -> accelerated alternating series,
///   re s >= 1.2            -> (1 - 2^(1-s)) zeta(s) via Euler-Maclaurin,
///   re s <= -0.2           -> reflection to re >= 1.2, assembled in log space.
/// The remaining region (the open strip at large heights) is refused.
cplx eta_extended(cplx s);

/// Cesaro evaluation of an ordinary Dirichlet series at s:
///   (1/N) sum_{n<=N} sum_{k<=n} a_k k^{-s}.
/// WrongFrequency unless the series lives on (log n).
cplx cesaro_eval(const DirichletSeries& D, cplx s, index_t N);

/// One assertable fact about a catalog entry, tagged with how it was obtained:
/// "literature" (stated in the references), "exact" (finite computation), or
/// "computed" (independent numerical derivation). `testable` is false for
/// facts no finite computation can check.
struct KnownFact {
    std::string key;
    double value = 0.0;
    std::string provenance;
    std::string note;
    bool testable = true;
};

/// Documented validity region of an oracle: a human-readable description plus
/// a predicate. Tests must not evaluate an oracle outside its region.
struct OracleRegion {
    std::string description;
    std::function<bool(cplx)> contains;
};

struct CatalogEntry {
    std::string name;
    DirichletSeries series;
    std::function<cplx(cplx)> oracle; // empty when no closed evaluation exists
    OracleRegion oracle_region;
    std::vector<KnownFact> known_facts;

    bool has_oracle() const { return static_cast<bool>(oracle); }
};

std::vector<CatalogEntry> catalog_list();

/// Lookup by name; UnknownCatalogEntry if absent.
CatalogEntry catalog_entry(const std::string& name);

} // namespace riesz

#endif
