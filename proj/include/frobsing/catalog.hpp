#ifndef FROBSING_CATALOG_HPP
#define FROBSING_CATALOG_HPP

#include <functional>
#include <string>
#include <vector>

#include "frobsing/report.hpp"

namespace frobsing {

/// Where an entry's expected outcome comes from: a recorded mathematical
/// claim from the literature ("known"), or a value derived by an independent
/// oracle ("derived"). Disagreement with a known claim is surfaced as a
/// FLAGGED row — the computation is the authority and is never suppressed.
/// Disagreement with a derived value is an internal error.
enum class ClaimSource { Known, Derived };

struct CatalogEntry {
    std::string id;
    std::string description;
    ClaimSource source;
    /// Expected token for a run at the given depth, e.g. "holds_up_to_level(2)"
    /// or the prefix "refuted" (any level).
    std::function<std::string(int e_max)> expected;
    std::function<std::string(int e_max)> run;
};

struct CatalogResult {
    std::string id;
    std::string description;
    std::string expected;
    std::string computed;
    ClaimSource source;
    enum class Status { Ok, Flagged, InternalError } status;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Runs every entry whose id contains `filter` (empty = all) at depth e_max,
/// optionally on several worker threads; results come back sorted by id.
std::vector<CatalogResult> run_catalog(const std::string& filter, int e_max, int jobs);

Json catalog_to_json(const std::vector<CatalogResult>& results);
std::string catalog_to_text(const std::vector<CatalogResult>& results);

/// Nonzero exactly when an internal invariant failed (claim disagreements are
/// flags, not failures).
int catalog_exit_code(const std::vector<CatalogResult>& results);

}  // namespace frobsing

#endif
