#ifndef FROBSING_BUDGET_HPP
#define FROBSING_BUDGET_HPP

#include <cstdint>

namespace frobsing {

/// Effort limits for the two potentially expensive engines.
/// `dimension` bounds both the monomial-basis size of Artinian quotients and
/// the number of stored terms in truncated products; `groebner_pairs` bounds
/// the number of S-pairs a single Buchberger run may process.
struct Budgets {
    std::uint64_t dimension = 2'000'000;
    std::uint64_t groebner_pairs = 200'000;
};

/// Process-wide budgets. Set once at startup (e.g. from FROBSING_BUDGET),
/// read everywhere else.
Budgets& budgets();

/// Applies the FROBSING_BUDGET environment variable, if present, to both
/// limits. Returns true if an override was applied.
bool apply_budget_env();

}  // namespace frobsing

#endif
